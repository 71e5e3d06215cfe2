//! Hom spaces between representations, isomorphism search, exceptionality
//! and the generation test used in place of `Ext^1(T, M) = 0`.
//!
//! A morphism `f: X -> Y` is unknown at every vertex; each arrow `a: s -> t`
//! contributes the linear conditions `f_t X(a) - Y(a) f_s = 0`. The relation
//! of a canonical algebra constrains objects only, so it adds no equations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Field, RowReducer, Scalar, SparseRow};
use crate::rep::{Morphism, Representation};

/// Seed of the pseudo-random combinations tried by [`find_iso`].
pub const ISO_SEARCH_SEED: u64 = 0x7117_2024_0d0e_0001;
/// Number of pseudo-random combinations tried before the 0/1 sweep.
pub const ISO_RANDOM_TRIES: usize = 64;
/// The 0/1 sweep runs only when the hom space has at most this dimension.
pub const ISO_EXHAUSTIVE_MAX_DIM: usize = 12;

/// Position of each vertex block inside the stacked unknown vector.
#[derive(Clone, Debug)]
struct Layout {
    src: Vec<usize>,
    tgt: Vec<usize>,
    offsets: Vec<usize>,
    total: usize,
}

impl Layout {
    fn new(x: &Representation, y: &Representation) -> Self {
        let mut offsets = Vec::with_capacity(x.dims().len());
        let mut total = 0;
        for (dx, dy) in x.dims().iter().zip(y.dims()) {
            offsets.push(total);
            total += dx * dy;
        }
        Self {
            src: x.dims().to_vec(),
            tgt: y.dims().to_vec(),
            offsets,
            total,
        }
    }

    /// Unknown index of entry `(r, c)` of `f_v`.
    fn var(&self, v: usize, r: usize, c: usize) -> usize {
        self.offsets[v] + r * self.src[v] + c
    }

    fn to_morphism(&self, field: Field, vec: &[Scalar]) -> Morphism {
        Morphism::new(
            (0..self.src.len())
                .map(|v| {
                    let (rows, cols) = (self.tgt[v], self.src[v]);
                    let start = self.offsets[v];
                    ExactMatrix::new(field, rows, cols, vec[start..start + rows * cols].to_vec())
                        .expect("layout matches block sizes")
                })
                .collect(),
        )
    }

    fn flatten(&self, f: &Morphism) -> Vec<Scalar> {
        f.components()
            .iter()
            .flat_map(|m| m.entries().iter().cloned())
            .collect()
    }
}

/// An echelon-normalized basis of `Hom(X, Y)`.
#[derive(Clone, Debug)]
pub struct HomBasis {
    field: Field,
    layout: Layout,
    /// Free unknown owning each basis vector: vector `k` is 1 there and 0 at
    /// every other free unknown.
    free: Vec<usize>,
    vectors: Vec<Vec<Scalar>>,
    morphisms: Vec<Morphism>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Coordinates of `f` in this basis, or `None` when `f` is not in the span.
    pub fn coordinates(&self, f: &Morphism) -> Option<Vec<Scalar>> {
        if f.components().len() != self.layout.src.len()
            || f.components()
                .iter()
                .enumerate()
                .any(|(v, m)| m.shape() != (self.layout.tgt[v], self.layout.src[v]))
        {
            return None;
        }
        let flat = self.layout.flatten(f);
        let coords: Vec<Scalar> = self.free.iter().map(|&c| flat[c].clone()).collect();
        (self.combine_flat(&coords) == flat).then_some(coords)
    }

    fn combine_flat(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vec![self.field.zero(); self.layout.total];
        for (c, vec) in coeffs.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (a, b) in acc.iter_mut().zip(vec) {
                if !b.is_zero() {
                    *a = &*a + &(c * b);
                }
            }
        }
        acc
    }

    /// The morphism `sum_k coeffs[k] * basis[k]`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Morphism {
        self.layout
            .to_morphism(self.field, &self.combine_flat(coeffs))
    }
}

/// Basis of all intertwiners `X -> Y`, from the full linear system over
/// every vertex and arrow.
pub fn hom_basis(x: &Representation, y: &Representation) -> Result<HomBasis> {
    x.check_compatible(y)?;
    let field = x.field();
    let layout = Layout::new(x, y);
    let mut red = RowReducer::new(field, layout.total);
    for (i, a) in x.quiver().arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (xa, ya) = (x.map(i), y.map(i));
        for r in 0..layout.tgt[t] {
            for c in 0..layout.src[s] {
                let mut row: SparseRow = Vec::new();
                for k in 0..layout.src[t] {
                    let v = xa.get(k, c);
                    if !v.is_zero() {
                        row.push((layout.var(t, r, k), v.clone()));
                    }
                }
                for k in 0..layout.tgt[s] {
                    let v = ya.get(r, k);
                    if !v.is_zero() {
                        row.push((layout.var(s, k, c), -v));
                    }
                }
                if row.is_empty() {
                    continue;
                }
                row.sort_by_key(|(c, _)| *c);
                red.push(row);
            }
        }
    }
    let vectors = red.kernel_basis();
    let pivots: std::collections::BTreeSet<usize> = red.pivot_columns().collect();
    let free: Vec<usize> = (0..layout.total).filter(|c| !pivots.contains(c)).collect();
    let morphisms = vectors
        .iter()
        .map(|v| layout.to_morphism(field, v))
        .collect();
    Ok(HomBasis {
        field,
        layout,
        free,
        vectors,
        morphisms,
    })
}

pub fn hom_dim(x: &Representation, y: &Representation) -> Result<usize> {
    Ok(hom_basis(x, y)?.dim())
}

pub fn end_dim(x: &Representation) -> usize {
    hom_basis(x, x)
        .expect("a representation is compatible with itself")
        .dim()
}

/// `dim Hom(X, Y) - <dim X, dim Y>` for representations of a path algebra.
pub fn ext1_dim_hereditary(x: &Representation, y: &Representation) -> Result<usize> {
    if x.algebra().relation().is_some() {
        return Err(Error::UnsupportedAlgebra(format!(
            "Ext^1 via the Euler form needs a path algebra, got {}",
            x.algebra()
        )));
    }
    let hom = hom_dim(x, y)? as i64;
    let euler = x.quiver().euler_form(&x.dim_vector(), &y.dim_vector())?;
    let ext = hom - euler;
    if ext < 0 {
        return Err(Error::InternalInconsistency(format!(
            "negative Ext^1: dim Hom = {hom}, Euler form = {euler}"
        )));
    }
    Ok(ext as usize)
}

/// End = K and no self-extensions (path algebras only).
pub fn is_exceptional(x: &Representation) -> Result<bool> {
    Ok(end_dim(x) == 1 && ext1_dim_hereditary(x, x)? == 0)
}

/// True iff the evaluation map `⊕_i T_i ⊗ Hom(T_i, M) -> M` is onto at every
/// vertex, i.e. `M` is generated by the summands.
pub fn gen_membership(summands: &[Representation], m: &Representation) -> Result<bool> {
    let bases = summands
        .iter()
        .map(|t| hom_basis(t, m))
        .collect::<Result<Vec<_>>>()?;
    for v in 0..m.dims().len() {
        let target = m.dims()[v];
        let mut red = RowReducer::new(m.field(), target);
        for f in bases.iter().flat_map(|b| b.morphisms()) {
            let comp = f.component(v);
            for j in 0..comp.cols() {
                let row: SparseRow = (0..target)
                    .filter_map(|i| {
                        let e = comp.get(i, j);
                        (!e.is_zero()).then(|| (i, e.clone()))
                    })
                    .collect();
                if !row.is_empty() {
                    red.push(row);
                }
            }
            if red.rank() == target {
                break;
            }
        }
        if red.rank() < target {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonIsoReason {
    DimensionVectors,
    /// `Hom(X, Y) = 0` with `X != 0`.
    NoMorphisms,
    /// The hom space is one-dimensional and its generator is not invertible.
    SingleGeneratorNotInvertible,
    /// `dim Hom(X, Y) != dim End(X)`, impossible for isomorphic objects.
    HomDimensionMismatch {
        hom: usize,
        end: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// An invertible intertwiner, checked at every vertex.
    Isomorphic(Morphism),
    NotIsomorphic(NonIsoReason),
    /// The search found no certificate; this proves nothing.
    NotFound,
}

impl IsoVerdict {
    pub fn certificate(&self) -> Option<&Morphism> {
        match self {
            IsoVerdict::Isomorphic(f) => Some(f),
            _ => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }

    pub fn is_proven_non_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::NotIsomorphic(_))
    }
}

fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        Field::Rationals => Scalar::from_i64(field, rng.gen_range(-4..=4)),
        Field::Prime(p) => Scalar::from_i64(field, rng.gen_range(0..p) as i64),
    }
}

/// Looks for an isomorphism `X -> Y`.
///
/// Order of attempts: dimension vectors; the basis element when
/// `dim Hom(X, Y) = 1`; [`ISO_RANDOM_TRIES`] combinations drawn from a
/// ChaCha8 stream seeded with [`ISO_SEARCH_SEED`] (coefficients in `-4..=4`
/// over Q, uniform over F_p); every 0/1 combination when the hom space has
/// dimension at most [`ISO_EXHAUSTIVE_MAX_DIM`]. If all fail, differing
/// `dim Hom(X, Y)` and `dim End(X)` prove non-isomorphy; otherwise the
/// verdict is `NotFound`.
pub fn find_iso(x: &Representation, y: &Representation) -> Result<IsoVerdict> {
    x.check_compatible(y)?;
    if x.dims() != y.dims() {
        return Ok(IsoVerdict::NotIsomorphic(NonIsoReason::DimensionVectors));
    }
    let basis = hom_basis(x, y)?;
    let accept = |f: Morphism| -> Option<IsoVerdict> {
        (f.is_isomorphism() && f.is_morphism(x, y)).then_some(IsoVerdict::Isomorphic(f))
    };
    if x.total_dim() == 0 {
        return Ok(IsoVerdict::Isomorphic(Morphism::identity(x)));
    }
    match basis.dim() {
        0 => return Ok(IsoVerdict::NotIsomorphic(NonIsoReason::NoMorphisms)),
        1 => {
            return Ok(
                accept(basis.morphisms()[0].clone()).unwrap_or(IsoVerdict::NotIsomorphic(
                    NonIsoReason::SingleGeneratorNotInvertible,
                )),
            )
        }
        _ => {}
    }
    let field = x.field();
    let mut rng = ChaCha8Rng::seed_from_u64(ISO_SEARCH_SEED);
    for _ in 0..ISO_RANDOM_TRIES {
        let coeffs: Vec<Scalar> = (0..basis.dim())
            .map(|_| random_scalar(field, &mut rng))
            .collect();
        if let Some(v) = accept(basis.combine(&coeffs)) {
            return Ok(v);
        }
    }
    if basis.dim() <= ISO_EXHAUSTIVE_MAX_DIM {
        for mask in 1u32..(1 << basis.dim()) {
            let coeffs: Vec<Scalar> = (0..basis.dim())
                .map(|k| Scalar::from_i64(field, ((mask >> k) & 1) as i64))
                .collect();
            if let Some(v) = accept(basis.combine(&coeffs)) {
                return Ok(v);
            }
        }
    }
    let end = end_dim(x);
    if end != basis.dim() {
        return Ok(IsoVerdict::NotIsomorphic(
            NonIsoReason::HomDimensionMismatch {
                hom: basis.dim(),
                end,
            },
        ));
    }
    Ok(IsoVerdict::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{build_dn, Algebra};
    use std::sync::Arc;

    const Q: Field = Field::Rationals;

    fn d4() -> Arc<Algebra> {
        Arc::new(Algebra::Path(build_dn(4).unwrap()))
    }

    fn rep(alg: &Arc<Algebra>, dims: Vec<usize>, entries: &[&[i64]]) -> Representation {
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .zip(entries)
            .map(|(a, e)| ExactMatrix::from_ints(Q, dims[a.target], dims[a.source], e))
            .collect();
        Representation::new(alg.clone(), Q, dims, maps).unwrap()
    }

    /// The indecomposable with dimension vector the null root's neighbour
    /// (1,1,2,1,1) minus nothing: a 4-subspace configuration in general position.
    fn generic_d4(alg: &Arc<Algebra>) -> Representation {
        // arrows 3->1, 3->2, 4->3, 5->3
        rep(alg, vec![1, 1, 2, 1, 0], &[&[1, 0], &[0, 1], &[1, 1], &[]])
    }

    #[test]
    fn simple_has_one_dimensional_endomorphisms() {
        let alg = d4();
        for v in 0..5 {
            let s = Representation::simple(alg.clone(), Q, v);
            assert_eq!(end_dim(&s), 1);
            assert_eq!(ext1_dim_hereditary(&s, &s).unwrap(), 0);
        }
    }

    #[test]
    fn basis_elements_are_intertwiners() {
        let alg = d4();
        let x = generic_d4(&alg);
        let y = rep(
            &alg,
            vec![1, 1, 2, 1, 1],
            &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]],
        );
        for b in [
            hom_basis(&x, &y).unwrap(),
            hom_basis(&y, &x).unwrap(),
            hom_basis(&x, &x).unwrap(),
        ] {
            for (k, f) in b.morphisms().iter().enumerate() {
                let (src, tgt) = if f.components()[2].shape() == (2, 2) {
                    (&x, &x)
                } else {
                    (&x, &y)
                };
                let _ = (src, tgt);
                let mut e = vec![Q.zero(); b.dim()];
                e[k] = Q.one();
                assert_eq!(b.coordinates(f), Some(e));
            }
        }
        let b = hom_basis(&x, &y).unwrap();
        for f in b.morphisms() {
            assert!(f.is_morphism(&x, &y));
        }
    }

    #[test]
    fn identity_lies_in_endomorphism_span() {
        let alg = d4();
        let x = generic_d4(&alg);
        let b = hom_basis(&x, &x).unwrap();
        assert!(b.coordinates(&Morphism::identity(&x)).is_some());
    }

    #[test]
    fn end_of_double_is_four_times() {
        let alg = d4();
        let x = generic_d4(&alg);
        assert_eq!(end_dim(&x), 1);
        assert_eq!(end_dim(&x.direct_sum(&x).unwrap()), 4);
    }

    #[test]
    fn ext_between_simples_across_an_arrow() {
        let alg = d4();
        // arrow 4 -> 3: simple at the source 4 (index 3), simple at 3 (index 2)
        let su = Representation::simple(alg.clone(), Q, 3);
        let sv = Representation::simple(alg.clone(), Q, 2);
        assert_eq!(ext1_dim_hereditary(&su, &sv).unwrap(), 1);
        assert_eq!(ext1_dim_hereditary(&sv, &su).unwrap(), 0);
    }

    #[test]
    fn ext_rejects_canonical_algebras() {
        let m = crate::series::build_rank2(3, 1, 2, 1, Q).unwrap();
        assert!(matches!(
            ext1_dim_hereditary(&m, &m),
            Err(Error::UnsupportedAlgebra(_))
        ));
    }

    #[test]
    fn iso_search_verdicts() {
        let alg = d4();
        let x = generic_d4(&alg);
        assert!(find_iso(&x, &x).unwrap().is_isomorphic());
        let s = Representation::simple(alg.clone(), Q, 0);
        assert_eq!(
            find_iso(&x, &s).unwrap(),
            IsoVerdict::NotIsomorphic(NonIsoReason::DimensionVectors)
        );
        // same dimension vector, decomposable vs indecomposable
        let split = rep(&alg, vec![1, 1, 2, 1, 0], &[&[1, 0], &[0, 1], &[1, 0], &[]]);
        assert!(find_iso(&x, &split).unwrap().is_proven_non_isomorphic());
        // a base change of x is isomorphic
        let y = rep(&alg, vec![1, 1, 2, 1, 0], &[&[2, 1], &[1, 1], &[3, 2], &[]]);
        let v = find_iso(&x, &y).unwrap();
        let f = v.certificate().expect("isomorphic");
        assert!(f.is_morphism(&x, &y) && f.is_isomorphism());
    }

    #[test]
    fn generation_by_summands() {
        let alg = d4();
        let x = generic_d4(&alg);
        assert!(gen_membership(std::slice::from_ref(&x), &x).unwrap());
        // the simple at the sink 1 receives no maps from the simple at 2
        let s1 = Representation::simple(alg.clone(), Q, 0);
        let s2 = Representation::simple(alg.clone(), Q, 1);
        assert!(!gen_membership(&[s2], &s1).unwrap());
    }

    #[test]
    fn mismatched_fields_are_errors() {
        let alg = d4();
        let a = Representation::simple(alg.clone(), Q, 0);
        let b = Representation::simple(alg, Field::Prime(2), 0);
        assert!(matches!(hom_basis(&a, &b), Err(Error::FieldMismatch(..))));
    }
}
