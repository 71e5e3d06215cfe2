//! Explicit matrices for the preprojective representations of D~n (rank 1
//! and rank 2) and E~6 (rank 3), and the map of dimension vectors induced by
//! the tilting module.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Field};
use crate::quiver::{build_dn, build_e6, Algebra};
use crate::rep::{DnSymmetry, Representation};
use crate::series::{x_block, y_block};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignPattern {
    /// `-1 1 1 -1`, repeated.
    V4,
    /// `-1 1 0 1 -1 0`, repeated.
    E6Row1,
    /// `-1 0 1 1 0 -1`, repeated.
    E6Row2,
    /// `1 -1`, repeated.
    Alt,
}

impl SignPattern {
    fn period(self) -> &'static [i64] {
        match self {
            SignPattern::V4 => &[-1, 1, 1, -1],
            SignPattern::E6Row1 => &[-1, 1, 0, 1, -1, 0],
            SignPattern::E6Row2 => &[-1, 0, 1, 1, 0, -1],
            SignPattern::Alt => &[1, -1],
        }
    }

    /// Entry `k` (0-based) of the periodic sequence.
    pub fn at(self, k: usize) -> i64 {
        let p = self.period();
        p[k % p.len()]
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "v4" => Ok(SignPattern::V4),
            "e6_row1" => Ok(SignPattern::E6Row1),
            "e6_row2" => Ok(SignPattern::E6Row2),
            "alt" => Ok(SignPattern::Alt),
            _ => Err(Error::InvalidParameter(format!(
                "unknown sign pattern {s:?} (expected v4, e6_row1, e6_row2 or alt)"
            ))),
        }
    }
}

/// The first `len` entries of a periodic sign sequence.
pub fn periodic_sign_vector(kind: SignPattern, len: usize) -> Vec<i64> {
    (0..len).map(|k| kind.at(k)).collect()
}

/// A member of one of the explicit families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    DnRank2 {
        n: usize,
        i: usize,
        j: usize,
        m: usize,
    },
    DnRank1 {
        kind: u8,
        i: usize,
        m: usize,
        n: usize,
    },
    E6Rank3 {
        series: u8,
        m: usize,
    },
}

impl FamilyId {
    pub fn build(self, field: Field) -> Result<Representation> {
        match self {
            FamilyId::DnRank2 { n, i, j, m } => dn_rank2(n, i, j, m, field),
            FamilyId::DnRank1 { kind, i, m, n } => dn_rank1(kind, i, m, n, field),
            FamilyId::E6Rank3 { series, m } => e6_rank3(series, m, field),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::DnRank2 { n, i, j, m } => write!(f, "dn-rank2(n={n},i={i},j={j},m={m})"),
            FamilyId::DnRank1 { kind, i, m, n } => {
                write!(f, "dn-rank1(type={kind},n={n},i={i},m={m})")
            }
            FamilyId::E6Rank3 { series, m } => write!(f, "e6-rank3(series={series},m={m})"),
        }
    }
}

fn id(field: Field, k: usize) -> ExactMatrix {
    ExactMatrix::identity(field, k)
}

fn zeros(field: Field, r: usize, c: usize) -> ExactMatrix {
    ExactMatrix::zeros(field, r, c)
}

fn hcat(blocks: &[ExactMatrix]) -> ExactMatrix {
    blocks[1..].iter().fold(blocks[0].clone(), |acc, b| {
        acc.hstack(b).expect("row counts agree")
    })
}

fn vcat(blocks: &[ExactMatrix]) -> ExactMatrix {
    blocks[1..].iter().fold(blocks[0].clone(), |acc, b| {
        acc.vstack(b).expect("column counts agree")
    })
}

/// `[0 | I_{k}]` with `k+1` columns: the shift dropping the first coordinate.
fn drop_first(field: Field, k: usize) -> ExactMatrix {
    hcat(&[zeros(field, k, 1), id(field, k)])
}

/// The matrix of an arrow with the given shape. Maps into or out of a zero
/// space are empty and need no formula.
fn shaped(
    field: Field,
    rows: usize,
    cols: usize,
    build: impl FnOnce() -> ExactMatrix,
) -> Result<ExactMatrix> {
    if rows == 0 || cols == 0 {
        return Ok(zeros(field, rows, cols));
    }
    let m = build();
    if m.shape() != (rows, cols) {
        return Err(Error::InternalInconsistency(format!(
            "block formula gives {}x{}, arrow needs {rows}x{cols}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

/// Dimensions along the chain `3..=n-1` that drop by one after position
/// `first_break` and again after `second_break`.
fn chain_dims(n: usize, top: usize, first_break: usize, second_break: usize) -> Vec<usize> {
    (3..n)
        .map(|v| top - (v > first_break) as usize - (v > second_break) as usize)
        .collect()
}

/// A representation of D~n from the matrices at its two sinks and sources
/// and a rule for the chain arrows that lose one dimension.
struct DnParts {
    n: usize,
    /// Dimensions of vertices `1..=n+1`.
    dims: Vec<usize>,
    a: ExactMatrix,
    b: ExactMatrix,
    c: ExactMatrix,
    d: ExactMatrix,
}

impl DnParts {
    fn finish(
        self,
        field: Field,
        step: impl Fn(usize) -> Result<ExactMatrix>,
    ) -> Result<Representation> {
        let n = self.n;
        let quiver = build_dn(n)?;
        let dim = |v: usize| self.dims[v - 1];
        let mut maps = vec![self.a, self.b];
        for k in 3..n - 1 {
            let (rows, cols) = (dim(k), dim(k + 1));
            maps.push(if rows == cols {
                id(field, rows)
            } else {
                shaped(field, rows, cols, || step(cols).expect("step formula"))?
            });
        }
        maps.push(self.c);
        maps.push(self.d);
        Representation::new(Arc::new(Algebra::Path(quiver)), field, self.dims, maps)
    }
}

/// The rank 2 representation `N_m^{(i,j)}` of D~n.
pub fn dn_rank2(n: usize, i: usize, j: usize, m: usize, field: Field) -> Result<Representation> {
    if n < 4 || !(1 <= i && i < j && j + 2 <= n) {
        return Err(Error::InvalidParameter(format!(
            "dn-rank2 needs n >= 4 and 1 <= i < j <= n-2, got n={n}, i={i}, j={j}"
        )));
    }
    let chain = chain_dims(n, 2 * m + 2, n - j, n - i);
    let (c3, cl) = (chain[0], *chain.last().unwrap());
    let mut dims = vec![m + 1, m + 1];
    dims.extend(&chain);
    dims.extend([m, m]);

    let a = shaped(field, m + 1, c3, || {
        hcat(&[zeros(field, m + 1, c3 - m - 1), id(field, m + 1)])
    })?;
    let b = shaped(field, m + 1, c3, || {
        let left = if c3 == 2 * m + 2 {
            id(field, m + 1)
        } else {
            x_block(field, m, 1)
        };
        hcat(&[left, id(field, m + 1)])
    })?;
    let c = shaped(field, cl, m, || {
        let v: Vec<i64> = periodic_sign_vector(SignPattern::V4, m);
        vcat(&[
            zeros(field, cl - 1 - m, m),
            ExactMatrix::from_ints(field, 1, m, &v),
            id(field, m),
        ])
    })?;
    let d = shaped(field, cl, m, || {
        vcat(&[
            drop_first(field, m - 1),
            zeros(field, cl - (2 * m - 1), m),
            id(field, m),
        ])
    })?;
    DnParts {
        n,
        dims,
        a,
        b,
        c,
        d,
    }
    .finish(field, |cols| {
        // 2m+2 <- 2m+1 keeps the upper m coordinates; 2m+1 <- 2m keeps m-1
        let upper = if cols == 2 * m + 1 { m } else { m - 1 };
        x_block(field, upper, 1).block_diag(&id(field, m + 1))
    })
}

/// Representations of D~n of rank 1: types 1 and 2 from explicit matrices,
/// types 3 and 4 as their images under the symmetry swapping both pairs of
/// end vertices (type 3 at `m` comes from type 2 at `m - 1`).
pub fn dn_rank1(kind: u8, i: usize, m: usize, n: usize, field: Field) -> Result<Representation> {
    if n < 4 || !(1..=n - 2).contains(&i) {
        return Err(Error::InvalidParameter(format!(
            "dn-rank1 needs n >= 4 and 1 <= i <= n-2, got n={n}, i={i}"
        )));
    }
    match kind {
        1 => dn_rank1_type1(n, i, m, field),
        2 => dn_rank1_type2(n, i, m, field),
        3 if m == 0 => Err(Error::InvalidParameter(
            "dn-rank1 type 3 needs m >= 1".into(),
        )),
        3 => dn_rank1_type2(n, i, m - 1, field)?.apply_graph_symmetry(DnSymmetry::Both),
        4 => dn_rank1_type1(n, i, m, field)?.apply_graph_symmetry(DnSymmetry::Both),
        _ => Err(Error::InvalidParameter(format!(
            "dn-rank1 type must be 1..=4, got {kind}"
        ))),
    }
}

/// `[I_m ; 0 ; I_m]` with `rows - 2m` zero rows.
fn doubled_identity(field: Field, rows: usize, m: usize) -> ExactMatrix {
    vcat(&[id(field, m), zeros(field, rows - 2 * m, m), id(field, m)])
}

fn dn_rank1_type1(n: usize, i: usize, m: usize, field: Field) -> Result<Representation> {
    let chain = chain_dims(n, 2 * m + 1, n - i, n);
    let (c3, cl) = (chain[0], *chain.last().unwrap());
    let mut dims = vec![m, m + 1];
    dims.extend(&chain);
    dims.extend([m, m]);
    let a = shaped(field, m, c3, || {
        hcat(&[zeros(field, m, c3 - m), id(field, m)])
    })?;
    let b = shaped(field, m + 1, c3, || {
        let left = if c3 == 2 * m + 1 {
            id(field, m + 1)
        } else {
            x_block(field, m, 1)
        };
        hcat(&[left, y_block(field, m, 1)])
    })?;
    let c = shaped(field, cl, m, || {
        vcat(&[zeros(field, cl - m, m), id(field, m)])
    })?;
    let d = shaped(field, cl, m, || doubled_identity(field, cl, m))?;
    DnParts {
        n,
        dims,
        a,
        b,
        c,
        d,
    }
    .finish(field, |_| x_block(field, m, 1).block_diag(&id(field, m)))
}

fn dn_rank1_type2(n: usize, i: usize, m: usize, field: Field) -> Result<Representation> {
    let chain = chain_dims(n, 2 * m + 2, n - i, n);
    let (c3, cl) = (chain[0], *chain.last().unwrap());
    let mut dims = vec![m + 1, m + 1];
    dims.extend(&chain);
    dims.extend([m + 1, m]);
    let a = shaped(field, m + 1, c3, || {
        hcat(&[zeros(field, m + 1, c3 - m - 1), id(field, m + 1)])
    })?;
    let b = shaped(field, m + 1, c3, || {
        let left = if c3 == 2 * m + 2 {
            id(field, m + 1)
        } else {
            x_block(field, m, 1)
        };
        hcat(&[left, id(field, m + 1)])
    })?;
    let c = shaped(field, cl, m + 1, || {
        vcat(&[zeros(field, cl - m - 1, m + 1), id(field, m + 1)])
    })?;
    let d = shaped(field, cl, m, || doubled_identity(field, cl, m))?;
    DnParts {
        n,
        dims,
        a,
        b,
        c,
        d,
    }
    .finish(field, |_| {
        x_block(field, m, 1).block_diag(&id(field, m + 1))
    })
}

/// Rank 3 representations of E~6. Vertex order `0..=6` with `0` the hub;
/// arrows `2->1`, `1->0`, `3->4`, `4->0`, `5->0`, `6->5`.
pub fn e6_rank3(series: u8, m: usize, field: Field) -> Result<Representation> {
    // series 2 needs a hub of dimension 3m+2: with 3m+1 the dimension
    // vector has defect 0 and no exceptional representation exists
    let (hub, middle, outer) = match series {
        1 => (3 * m + 1, 2 * m, m),
        2 => (3 * m + 2, 2 * m + 1, m),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "e6-rank3 series must be 1 or 2, got {series}"
            )))
        }
    };
    let dims = vec![hub, middle, outer, outer, middle, middle, outer];
    let maps = if series == 1 {
        e6_series1_maps(m, field, hub, middle, outer)?
    } else {
        e6_series2_maps(m, field)?
    };
    Representation::new(Arc::new(Algebra::Path(build_e6())), field, dims, maps)
}

/// `[0 | I_{m-1}; -I_m; 0]`, the map on the two outer arrows of series 1.
fn e6_shift_neg(field: Field, m: usize) -> ExactMatrix {
    vcat(&[
        drop_first(field, m - 1),
        id(field, m).scale(&-&field.one()),
        zeros(field, 1, m),
    ])
}

fn e6_series1_maps(
    m: usize,
    field: Field,
    hub: usize,
    middle: usize,
    outer: usize,
) -> Result<Vec<ExactMatrix>> {
    let b = shaped(field, middle, outer, || e6_shift_neg(field, m))?;
    let a = shaped(field, hub, middle, || {
        // rows: m-1 zero rows, then coordinates t = 2..=m+2 and t = 3..=m+3;
        // columns: i = 4..=m+2, then i = 3..=m+3
        let mut a = zeros(field, hub, middle);
        let col = |g: usize, i: usize| if g == 0 { i - 4 } else { (m - 1) + (i - 3) };
        let cols: Vec<(usize, usize)> = (4..=m + 2)
            .map(|i| (0, i))
            .chain((3..=m + 3).map(|i| (1, i)))
            .collect();
        let sign_rows = [(m - 1, SignPattern::E6Row1), (m, SignPattern::E6Row2)];
        for &(g, i) in &cols {
            for (r, pat) in sign_rows {
                // the pattern is read from i = 4 onward and is 6-periodic
                a.set_int(r, col(g, i), pat.at((i + 2) % 6));
            }
        }
        for i in 4..=m + 2 {
            // t = i in the second row group
            a.set_int(m - 1 + (i - 2), col(0, i), 1);
        }
        for i in 3..=m + 3 {
            a.set_int(2 * m + (i - 3), col(1, i), 1);
        }
        a
    })?;
    let d = b.clone();
    let c = shaped(field, hub, middle, || {
        vcat(&[
            id(field, m - 1).block_diag(&id(field, m + 1)).unwrap(),
            zeros(field, m + 1, middle),
        ])
    })?;
    let e = shaped(field, hub, middle, || {
        let mut e = zeros(field, hub, middle);
        e.paste(0, 0, &id(field, m - 1));
        e.paste(2 * m, m - 1, &id(field, m + 1));
        e
    })?;
    let g = shaped(field, middle, outer, || {
        // rows t = 3..=m+1 then t = 3..=m+3; a basis vector i has a 1 at
        // t = i in the first group and at t = i + 3 in the second
        let mut g = zeros(field, middle, outer);
        for i in 3..=m {
            g.set_int(i - 3, i - 1, 1);
        }
        for i in 1..=m {
            g.set_int((m - 1) + i, i - 1, 1);
        }
        g
    })?;
    Ok(vec![b, a, d, c, e, g])
}

fn e6_series2_maps(m: usize, field: Field) -> Result<Vec<ExactMatrix>> {
    let (hub, middle) = (3 * m + 2, 2 * m + 1);
    let both = id(field, m).block_diag(&id(field, m + 1))?;
    let neg = id(field, m).scale(&-&field.one());
    let a = vcat(&[both.clone(), zeros(field, m + 1, middle)]);
    let b = vcat(&[id(field, m), neg.clone(), zeros(field, 1, m)]);
    let c = vcat(&[
        hcat(&[id(field, m), zeros(field, m, m + 1)]),
        zeros(field, m + 1, middle),
        hcat(&[zeros(field, m + 1, m), id(field, m + 1)]),
    ]);
    let d = shaped(field, middle, m, || {
        vcat(&[drop_first(field, m - 1), zeros(field, 2, m), id(field, m)])
    })?;
    let alt: Vec<i64> = periodic_sign_vector(SignPattern::Alt, m)
        .into_iter()
        .chain(periodic_sign_vector(SignPattern::Alt, m + 1))
        .collect();
    let e = vcat(&[
        zeros(field, m, middle),
        ExactMatrix::from_ints(field, 1, middle, &alt),
        both,
    ]);
    debug_assert_eq!(e.rows(), hub);
    let g = vcat(&[id(field, m), neg, zeros(field, 1, m)]);
    Ok(vec![b, a, d, c, e, g])
}

/// The isomorphism of Grothendieck groups induced by the tilting module
/// over `(n-2,2,2)`, on dimension vectors. Input order is the canonical
/// vertex order `0, 1..=n-3, 1', 1'', inf`; output order is `1..=n+1`.
pub fn dimvec_map_f(n: usize, v: &[i64]) -> Result<Vec<i64>> {
    if n < 4 || v.len() != n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "dimension vector of length {} for n = {n}",
            v.len()
        )));
    }
    let (a0, a1p, a1pp, ac) = (v[0], v[n - 2], v[n - 1], v[n]);
    let x = a1p + a1pp - ac;
    let mut out = vec![a1p, a1pp];
    // chain vertex k (3..=n-1) carries a_{n-k} + x
    out.extend((3..n).map(|k| v[n - k] + x));
    out.extend([x, a0]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn sign_vectors() {
        assert_eq!(
            periodic_sign_vector(SignPattern::V4, 6),
            [-1, 1, 1, -1, -1, 1]
        );
        assert_eq!(
            periodic_sign_vector(SignPattern::E6Row1, 6),
            [-1, 1, 0, 1, -1, 0]
        );
        assert_eq!(
            periodic_sign_vector(SignPattern::E6Row2, 7),
            [-1, 0, 1, 1, 0, -1, -1]
        );
        assert_eq!(periodic_sign_vector(SignPattern::Alt, 3), [1, -1, 1]);
        for k in ["v4", "e6_row1", "e6_row2", "alt"] {
            assert!(periodic_sign_vector(k.parse().unwrap(), 0).is_empty());
        }
        assert!("v5".parse::<SignPattern>().is_err());
    }

    #[test]
    fn rank2_case_a_blocks() {
        let r = dn_rank2(7, 2, 3, 2, Q).unwrap();
        assert_eq!(r.dim_vector(), [3, 3, 6, 6, 5, 4, 2, 2]);
        assert_eq!(
            r.map(0),
            &ExactMatrix::from_rows(
                Q,
                &[
                    vec![0, 0, 0, 1, 0, 0],
                    vec![0, 0, 0, 0, 1, 0],
                    vec![0, 0, 0, 0, 0, 1]
                ]
            )
        );
        // C = [0; v; I_2] with v = (-1, 1)
        assert_eq!(
            r.map_by_label("7->6").unwrap(),
            &ExactMatrix::from_rows(Q, &[vec![0, 0], vec![-1, 1], vec![1, 0], vec![0, 1]])
        );
        assert_eq!(
            r.map_by_label("8->6").unwrap(),
            &ExactMatrix::from_rows(Q, &[vec![0, 1], vec![0, 0], vec![1, 0], vec![0, 1]])
        );
    }

    #[test]
    fn rank2_degenerate_cases() {
        // case (d): constant chain 2m+1
        let r = dn_rank2(6, 1, 4, 2, Q).unwrap();
        assert_eq!(r.dim_vector(), [3, 3, 5, 5, 5, 2, 2]);
        for m in 0..=3 {
            for n in 4..=7 {
                for i in 1..n - 2 {
                    for j in i + 1..=n - 2 {
                        let r = dn_rank2(n, i, j, m, Q).unwrap();
                        assert_eq!(
                            r.total_dim(),
                            2 * m + 2 + r.dims()[2..n - 1].iter().sum::<usize>() + 2 * m
                        );
                    }
                }
            }
        }
        assert!(dn_rank2(5, 2, 2, 1, Q).is_err());
        assert!(dn_rank2(5, 1, 4, 1, Q).is_err());
    }

    #[test]
    fn rank1_shapes() {
        for n in 4..=7 {
            for i in 1..=n - 2 {
                for m in 0..=3 {
                    for kind in 1..=4u8 {
                        if kind == 3 && m == 0 {
                            assert!(dn_rank1(kind, i, m, n, Q).is_err());
                            continue;
                        }
                        let r = dn_rank1(kind, i, m, n, Q).unwrap();
                        assert!(r.total_dim() > 0);
                    }
                }
            }
        }
        assert!(dn_rank1(5, 1, 1, 5, Q).is_err());
        assert!(dn_rank1(1, 4, 1, 5, Q).is_err());
    }

    #[test]
    fn e6_dims() {
        for m in 0..=4 {
            let r = e6_rank3(1, m, Q).unwrap();
            let m = m as i64;
            assert_eq!(r.dim_vector(), [3 * m + 1, 2 * m, m, m, 2 * m, 2 * m, m]);
        }
        for m in 0..=4 {
            let r = e6_rank3(2, m, Q).unwrap();
            let m = m as i64;
            assert_eq!(
                r.dim_vector(),
                [3 * m + 2, 2 * m + 1, m, m, 2 * m + 1, 2 * m + 1, m]
            );
        }
        assert!(e6_rank3(3, 1, Q).is_err());
    }

    #[test]
    fn e6_series1_sign_rows_at_m1() {
        let a = e6_rank3(1, 1, Q).unwrap().map(1).clone();
        // columns i = 3, 4 of the second group
        assert_eq!(
            a,
            ExactMatrix::from_rows(Q, &[vec![0, -1], vec![-1, -1], vec![1, 0], vec![0, 1]])
        );
    }

    #[test]
    fn f_map_is_linear_and_fixes_zero() {
        assert_eq!(dimvec_map_f(5, &[0; 6]).unwrap(), [0; 6]);
        let u = [1, 2, 0, 3, 1, 2];
        let v = [0, 1, 4, 1, 1, 3];
        let s: Vec<i64> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        let fu = dimvec_map_f(5, &u).unwrap();
        let fv = dimvec_map_f(5, &v).unwrap();
        let fs = dimvec_map_f(5, &s).unwrap();
        assert_eq!(
            fs,
            fu.iter().zip(&fv).map(|(a, b)| a + b).collect::<Vec<_>>()
        );
        assert!(dimvec_map_f(5, &[0; 5]).is_err());
    }
}
