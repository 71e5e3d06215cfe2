#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use tiltrep::quiver::build_dn;
use tiltrep::{Algebra, ExactMatrix, Field, Quiver, Representation, Scalar};

pub const F2: Field = Field::Prime(2);

/// A matrix over F_2 as rows of bits.
type Bits = Vec<Vec<u8>>;

fn bits(m: &ExactMatrix) -> Bits {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| u8::from(!m.get(i, j).is_zero()))
                .collect()
        })
        .collect()
}

fn mul(a: &Bits, b: &Bits, inner: usize, cols: usize) -> Bits {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(0, |acc, k| acc ^ (row[k] & b[k][j])))
                .collect()
        })
        .collect()
}

/// Number of vertex-map tuples `(f_v)` with `f_t X(a) = Y(a) f_s` for every
/// arrow, found by enumerating every tuple of F_2 matrices.
pub fn brute_force_hom_count(x: &Representation, y: &Representation) -> u64 {
    let q = x.quiver();
    let (dx, dy) = (x.dims(), y.dims());
    let sizes: Vec<usize> = dx.iter().zip(dy).map(|(a, b)| a * b).collect();
    let total: usize = sizes.iter().sum();
    assert!(
        total <= 24,
        "brute force over 2^{total} tuples is too large"
    );
    let xs: Vec<Bits> = x.maps().iter().map(bits).collect();
    let ys: Vec<Bits> = y.maps().iter().map(bits).collect();
    let mut count = 0;
    for code in 0u64..(1 << total) {
        let mut offset = 0;
        let f: Vec<Bits> = (0..q.vertex_count())
            .map(|v| {
                let m = (0..dy[v])
                    .map(|i| {
                        (0..dx[v])
                            .map(|j| ((code >> (offset + i * dx[v] + j)) & 1) as u8)
                            .collect()
                    })
                    .collect();
                offset += sizes[v];
                m
            })
            .collect();
        let ok = q.arrows().iter().enumerate().all(|(k, a)| {
            let (s, t) = (a.source, a.target);
            mul(&f[t], &xs[k], dx[t], dx[s]) == mul(&ys[k], &f[s], dy[s], dx[s])
        });
        count += u64::from(ok);
    }
    count
}

/// A representation of `quiver` over F_2 with the given dims and uniformly
/// random matrices.
pub fn random_rep(quiver: &Quiver, dims: Vec<usize>, rng: &mut impl Rng) -> Representation {
    let maps = quiver
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.target], dims[a.source]);
            let entries = (0..r * c)
                .map(|_| Scalar::from_i64(F2, rng.gen_range(0..2)))
                .collect();
            ExactMatrix::new(F2, r, c, entries).unwrap()
        })
        .collect();
    Representation::new(Arc::new(Algebra::Path(quiver.clone())), F2, dims, maps).unwrap()
}

pub fn random_dn4_rep(max_dim: usize, rng: &mut impl Rng) -> Representation {
    let q = build_dn(4).unwrap();
    let dims = (0..q.vertex_count())
        .map(|_| rng.gen_range(0..=max_dim))
        .collect();
    random_rep(&q, dims, rng)
}

/// Paths starting at `v`, counted by walking the arrows.
pub fn paths_from(q: &Quiver, v: usize) -> Vec<i64> {
    let mut count = vec![0; q.vertex_count()];
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        count[u] += 1;
        stack.extend(
            q.arrows()
                .iter()
                .filter(|a| a.source == u)
                .map(|a| a.target),
        );
    }
    count
}
