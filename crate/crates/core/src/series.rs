//! Modules over canonical algebras: the block matrices they are assembled
//! from, the rank 2 series over `(p,2,2)`, the first rank 3 series over
//! `(3,3,2)`, and the two tilting modules with their generator morphisms.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::hom_basis;
use crate::linalg::{ExactMatrix, Field, Scalar};
use crate::quiver::{build_canonical, build_dn, build_e6, Algebra, Arm, Quiver};
use crate::rep::{Morphism, Representation};

/// `(n+i) x n`: the identity on top of `i` zero rows.
pub fn x_block(field: Field, n: usize, i: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(field, n + i, n);
    m.paste(0, 0, &ExactMatrix::identity(field, n));
    m
}

/// `(n+i) x n`: `i` zero rows on top of the identity.
pub fn y_block(field: Field, n: usize, i: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(field, n + i, n);
    m.paste(i, 0, &ExactMatrix::identity(field, n));
    m
}

/// The column of `r` ones.
pub fn ones_column(field: Field, r: usize) -> ExactMatrix {
    ExactMatrix::from_ints(field, r, 1, &vec![1; r])
}

/// The `m`-th enlargement of an `r x c` seed: an `(r+m) x (c+m)` matrix with
/// the seed in the top-left corner and ones at `(k, c+k)` and `(r+k, c+k)`
/// for `k = 1..=m` (1-based). For the seed `[1;1]` the image of a vector
/// `(x_1..x_{m+1})` is `(x_1+x_2, x_1+x_3, x_2+x_4, ...)`.
pub fn enlargement(seed: &ExactMatrix, m: usize) -> ExactMatrix {
    let (r, c) = seed.shape();
    let mut out = ExactMatrix::zeros(seed.field(), r + m, c + m);
    out.paste(0, 0, seed);
    for k in 0..m {
        out.set_int(k, c + k, 1);
        out.set_int(r + k, c + k, 1);
    }
    out
}

/// Assembles a module over a canonical algebra from the matrices along each
/// arm, listed from the vertex `0` outwards. Vertex dimensions are read off
/// the matrix shapes.
pub fn canonical_module(
    algebra: Arc<Algebra>,
    field: Field,
    alpha: Vec<ExactMatrix>,
    beta: Vec<ExactMatrix>,
    gamma: Vec<ExactMatrix>,
) -> Result<Representation> {
    let c = algebra
        .as_canonical()
        .ok_or_else(|| Error::UnsupportedAlgebra(format!("{algebra} is not canonical")))?;
    let mut dims: Vec<Option<usize>> = vec![None; c.quiver().vertex_count()];
    let mut maps: Vec<Option<ExactMatrix>> = vec![None; c.quiver().arrows().len()];
    for (arm, mats) in [(Arm::Alpha, alpha), (Arm::Beta, beta), (Arm::Gamma, gamma)] {
        if mats.len() != c.arm_len(arm) {
            return Err(Error::DimensionMismatch(format!(
                "{arm:?} arm has {} arrows, got {} matrices",
                c.arm_len(arm),
                mats.len()
            )));
        }
        for (k, mat) in mats.into_iter().enumerate() {
            for (v, d) in [
                (c.arm_vertex(arm, k), mat.cols()),
                (c.arm_vertex(arm, k + 1), mat.rows()),
            ] {
                match dims[v] {
                    Some(old) if old != d => {
                        return Err(Error::DimensionMismatch(format!(
                            "vertex {} would have dimensions {old} and {d}",
                            c.quiver().label(v)
                        )))
                    }
                    _ => dims[v] = Some(d),
                }
            }
            maps[c.arm_arrow(arm, k + 1)] = Some(mat);
        }
    }
    let dims = dims.into_iter().map(|d| d.unwrap_or(0)).collect();
    let maps = maps
        .into_iter()
        .map(|m| m.expect("every arrow lies on an arm"))
        .collect();
    let rep = Representation::new(algebra, field, dims, maps)?;
    if let Some(v) = rep.validate().into_iter().next() {
        return Err(Error::InternalInconsistency(format!(
            "built module is invalid: {v}"
        )));
    }
    Ok(rep)
}

fn canonical(p: usize, q: usize, s: usize) -> Result<Arc<Algebra>> {
    Ok(Arc::new(Algebra::Canonical(build_canonical(p, q, s)?)))
}

/// The rank 2 module `M_m^{(i,j)}` over the canonical algebra `(p,2,2)`.
pub fn build_rank2(p: usize, i: usize, j: usize, m: usize, field: Field) -> Result<Representation> {
    if !(1 <= i && i < j && j <= p) {
        return Err(Error::InvalidParameter(format!(
            "rank 2 series needs 1 <= i < j <= p, got p={p}, i={i}, j={j}"
        )));
    }
    let alg = canonical(p, 2, 2)?;
    let dim = |k: usize| m + (k >= i) as usize + (k >= j) as usize;
    let alpha = (1..=p)
        .map(|k| match k {
            k if k == i => x_block(field, m, 1),
            k if k == j => x_block(field, m + 1, 1),
            k => ExactMatrix::identity(field, dim(k)),
        })
        .collect();
    let beta = vec![y_block(field, m, 1), y_block(field, m + 1, 1)];
    let gamma = vec![y_block(field, m, 1), enlargement(&ones_column(field, 2), m)];
    canonical_module(alg, field, alpha, beta, gamma)
}

/// The first series of rank 3 modules over the canonical algebra `(3,3,2)`.
pub fn build_e6_rank3_series1(m: usize, field: Field) -> Result<Representation> {
    let alg = canonical(3, 3, 2)?;
    let alpha = (0..3).map(|k| x_block(field, m + k, 1)).collect();
    let beta = (0..3).map(|k| y_block(field, m + k, 1)).collect();
    let gamma = vec![y_block(field, m, 1), enlargement(&ones_column(field, 3), m)];
    canonical_module(alg, field, alpha, beta, gamma)
}

/// A generator of `Hom(T_source, T_target)`.
#[derive(Clone, Debug)]
pub struct Generator {
    pub source: usize,
    pub target: usize,
    pub morphism: Morphism,
}

/// A tilting module split into indecomposable summands, generators of the
/// nonzero hom spaces between them, and the quiver `Γ` whose path algebra is
/// the opposite of its endomorphism ring.
#[derive(Clone, Debug)]
pub struct TiltingData {
    pub name: String,
    pub algebra: Arc<Algebra>,
    pub summands: Vec<Representation>,
    pub summand_labels: Vec<String>,
    pub generators: Vec<Generator>,
    pub gamma: Quiver,
    /// Summand index attached to each vertex of `gamma`.
    pub vertex_map: Vec<usize>,
}

impl TiltingData {
    pub fn field(&self) -> Field {
        self.summands[0].field()
    }

    pub fn generator(&self, source: usize, target: usize) -> Option<&Generator> {
        self.generators
            .iter()
            .find(|g| g.source == source && g.target == target)
    }
}

/// The morphism `T_s -> T_t` whose component at `inf` equals `at_inf`.
fn lift_generator(
    summands: &[Representation],
    s: usize,
    t: usize,
    at_inf: ExactMatrix,
) -> Result<Generator> {
    let (src, tgt) = (&summands[s], &summands[t]);
    let inf = src.dims().len() - 1;
    let basis = hom_basis(src, tgt)?;
    let field = src.field();
    // columns: flattened inf-components of the basis
    let cols: Vec<Vec<Scalar>> = basis
        .morphisms()
        .iter()
        .map(|f| f.component(inf).entries().to_vec())
        .collect();
    let system = ExactMatrix::from_columns(field, at_inf.entries().len(), &cols)?;
    let coeffs = system.solve(at_inf.entries())?.ok_or_else(|| {
        Error::InternalInconsistency(format!(
            "no morphism T{s} -> T{t} has the prescribed component at inf"
        ))
    })?;
    let morphism = basis.combine(&coeffs);
    debug_assert!(morphism.is_morphism(src, tgt));
    Ok(Generator {
        source: s,
        target: t,
        morphism,
    })
}

fn ints(field: Field, rows: &[&[i64]]) -> ExactMatrix {
    ExactMatrix::from_rows(field, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// The tilting module over `(n-2,2,2)` whose endomorphism ring is the
/// opposite of the path algebra of D~n. Summand `k-1` is `T_k`.
pub fn build_tilting_dn(n: usize, field: Field) -> Result<TiltingData> {
    let gamma = build_dn(n)?;
    let p = n - 2;
    let alg = canonical(p, 2, 2)?;
    let id = |d: usize| ExactMatrix::identity(field, d);
    let z = |r: usize, c: usize| ExactMatrix::zeros(field, r, c);
    let module = |alpha, beta, gamma| canonical_module(alg.clone(), field, alpha, beta, gamma);

    let mut summands = Vec::with_capacity(n + 1);
    // T_1, T_2: a single K on the second or third arm, carried to inf
    let zero_alpha = |to_inf: usize| -> Vec<ExactMatrix> {
        (1..=p)
            .map(|k| if k == p { z(to_inf, 0) } else { z(0, 0) })
            .collect()
    };
    summands.push(module(
        zero_alpha(1),
        vec![z(1, 0), id(1)],
        vec![z(0, 0), z(1, 0)],
    )?);
    summands.push(module(
        zero_alpha(1),
        vec![z(0, 0), z(1, 0)],
        vec![z(1, 0), id(1)],
    )?);
    // T_k, 3 <= k <= n-1: the first arm is 0 at vertices 1..n-k-1 and K afterwards
    for k in 3..n {
        let first_k = n - k;
        let alpha = (1..=p)
            .map(|a| match a {
                a if a == p => x_block(field, 1, 1),
                a if a < first_k => z(0, 0),
                a if a == first_k => z(1, 0),
                _ => id(1),
            })
            .collect();
        summands.push(module(
            alpha,
            vec![z(1, 0), y_block(field, 1, 1)],
            vec![z(1, 0), ones_column(field, 2)],
        )?);
    }
    summands.push(module(
        zero_alpha(1),
        vec![z(1, 0), id(1)],
        vec![z(1, 0), id(1)],
    )?);
    let alpha = (1..=p)
        .map(|a| if a == p { x_block(field, 1, 1) } else { id(1) })
        .collect();
    summands.push(module(
        alpha,
        vec![id(1), y_block(field, 1, 1)],
        vec![id(1), ones_column(field, 2)],
    )?);

    // summand indices: T_k is k-1
    let mut gens = vec![
        lift_generator(&summands, 0, 2, ints(field, &[&[0], &[1]]))?,
        lift_generator(&summands, 1, 2, ints(field, &[&[1], &[1]]))?,
    ];
    for k in 3..n - 1 {
        gens.push(lift_generator(&summands, k - 1, k, id(2))?);
    }
    gens.push(lift_generator(
        &summands,
        n - 2,
        n - 1,
        ints(field, &[&[0, 1]]),
    )?);
    gens.push(lift_generator(&summands, n - 2, n, id(2))?);

    Ok(TiltingData {
        name: format!("T(D~{n})"),
        algebra: alg,
        summands,
        summand_labels: (1..=n + 1).map(|k| format!("T{k}")).collect(),
        generators: gens,
        gamma,
        vertex_map: (0..=n).collect(),
    })
}

/// The tilting module over `(3,3,2)` whose endomorphism ring is the opposite
/// of the path algebra of E~6. Summand `k` is `T_k`; the branch `3 -> 4` of
/// the quiver is attached to the summands in swapped order, `T_4` at vertex
/// 3 and `T_3` at vertex 4, since `T_3` is the one receiving a map from `T_0`.
pub fn build_tilting_e6(field: Field) -> Result<TiltingData> {
    let alg = canonical(3, 3, 2)?;
    let id = |d: usize| ExactMatrix::identity(field, d);
    let z = |r: usize, c: usize| ExactMatrix::zeros(field, r, c);
    let x12 = || x_block(field, 1, 1);
    let y12 = || y_block(field, 1, 1);
    let z12 = || ones_column(field, 2);
    let module = |alpha, beta, gamma| canonical_module(alg.clone(), field, alpha, beta, gamma);

    let summands = vec![
        module(
            vec![z(1, 0), x12(), x_block(field, 2, 1)],
            vec![z(1, 0), y12(), y_block(field, 2, 1)],
            vec![z(1, 0), ones_column(field, 3)],
        )?,
        module(
            vec![z(0, 0), z(1, 0), x12()],
            vec![z(1, 0), y12(), id(2)],
            vec![z(1, 0), z12()],
        )?,
        module(
            vec![z(0, 0), z(1, 0), id(1)],
            vec![z(1, 0), id(1), id(1)],
            vec![z(0, 0), z(1, 0)],
        )?,
        module(
            vec![z(1, 0), x12(), id(2)],
            vec![z(0, 0), z(1, 0), y12()],
            vec![z(1, 0), z12()],
        )?,
        module(
            vec![z(1, 0), id(1), id(1)],
            vec![z(0, 0), z(1, 0), id(1)],
            vec![z(0, 0), z(1, 0)],
        )?,
        module(
            vec![z(1, 0), id(1), x12()],
            vec![z(1, 0), id(1), y12()],
            vec![z(1, 0), z12()],
        )?,
        module(
            vec![id(1), id(1), x12()],
            vec![id(1), id(1), y12()],
            vec![id(1), z12()],
        )?,
    ];
    let gens = vec![
        lift_generator(&summands, 0, 1, ints(field, &[&[0, 1, 0], &[0, 0, 1]]))?,
        lift_generator(&summands, 1, 2, ints(field, &[&[1, -1]]))?,
        lift_generator(&summands, 0, 3, ints(field, &[&[1, 0, 0], &[0, 1, 0]]))?,
        lift_generator(&summands, 3, 4, ints(field, &[&[1, -1]]))?,
        lift_generator(&summands, 0, 5, ints(field, &[&[1, 0, 0], &[0, 0, 1]]))?,
        lift_generator(&summands, 5, 6, id(2))?,
    ];
    Ok(TiltingData {
        name: "T(E~6)".into(),
        algebra: alg,
        summands,
        summand_labels: (0..=6).map(|k| format!("T{k}")).collect(),
        generators: gens,
        gamma: build_e6(),
        vertex_map: vec![0, 1, 2, 4, 3, 5, 6],
    })
}
