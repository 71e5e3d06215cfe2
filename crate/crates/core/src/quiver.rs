//! Quivers, the canonical algebras of domestic type, and the two extended
//! Dynkin quivers used by the tilting constructions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A finite loop-free quiver with labelled vertices and arrows.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Quiver {
    #[serde(default)]
    name: String,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    pub fn new(name: impl Into<String>, vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate vertex label `{v}`"
                )));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for a in &arrows {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::InvalidParameter(format!(
                    "arrow `{}` references a missing vertex",
                    a.label
                )));
            }
            if a.source == a.target {
                return Err(Error::InvalidParameter(format!(
                    "arrow `{}` is a loop",
                    a.label
                )));
            }
            if !seen.insert(a.label.as_str()) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate arrow label `{}`",
                    a.label
                )));
            }
        }
        Ok(Self {
            name: name.into(),
            vertices,
            arrows,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|l| l == label)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.target == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == v).count()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.in_degree(v) == 0)
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.out_degree(v) == 0)
            .collect()
    }

    /// Same vertices, every arrow reversed. Taking the opposite twice gives
    /// back an equal quiver.
    pub fn opposite(&self) -> Quiver {
        let name = match self.name.strip_prefix("op ") {
            Some(orig) => orig.to_string(),
            None => format!("op {}", self.name),
        };
        Quiver {
            name,
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    source: a.target,
                    target: a.source,
                    label: a.label.clone(),
                })
                .collect(),
        }
    }

    /// Number of paths from `from` to each vertex (trivial path included).
    /// This is the dimension vector of the indecomposable projective at
    /// `from` for the path algebra of an acyclic quiver.
    pub fn path_counts_from(&self, from: usize) -> Vec<u64> {
        fn walk(q: &Quiver, v: usize, counts: &mut [u64], depth: usize) {
            assert!(depth <= q.vertex_count(), "quiver has an oriented cycle");
            counts[v] += 1;
            for a in q.arrows.iter().filter(|a| a.source == v) {
                walk(q, a.target, counts, depth + 1);
            }
        }
        let mut counts = vec![0; self.vertex_count()];
        walk(self, from, &mut counts, 0);
        counts
    }

    /// The Euler form of the path algebra:
    /// `sum_v x_v y_v - sum_{a: u -> v} x_u y_v`.
    pub fn euler_form(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        let n = self.vertex_count();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "dimension vectors of length {} and {} for {n} vertices",
                x.len(),
                y.len()
            )));
        }
        let diag: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|a| x[a.source] * y[a.target]).sum();
        Ok(diag - off)
    }

    /// Plain-text vertex/arrow listing.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("quiver {}\n", self.name));
        out.push_str(&format!(
            "vertices {}: {}\n",
            self.vertex_count(),
            self.vertices.join(" ")
        ));
        out.push_str(&format!("arrows {}:\n", self.arrows.len()));
        for a in &self.arrows {
            out.push_str(&format!(
                "  {}: {} -> {}\n",
                a.label, self.vertices[a.source], self.vertices[a.target]
            ));
        }
        out
    }
}

/// One summand of a linear relation: a coefficient times a path, the path
/// listed as arrow indices in the order they are traversed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coefficient: i64,
    pub path: Vec<usize>,
}

/// The canonical algebra of type `(p, q, s)`: three arms from `0` to `inf`
/// of lengths `p`, `q`, `s`, modulo `gamma-path - alpha-path - beta-path = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalAlgebra {
    quiver: Quiver,
    arms: (usize, usize, usize),
    relation: Vec<RelationTerm>,
}

fn is_domestic(p: usize, q: usize, s: usize) -> bool {
    matches!(
        (p, q, s),
        (1.., 1.., 1) | (2.., 2, 2) | (3, 3, 2) | (4, 3, 2) | (5, 3, 2)
    )
}

impl CanonicalAlgebra {
    pub fn new(p: usize, q: usize, s: usize) -> Result<Self> {
        if !is_domestic(p, q, s) {
            return Err(Error::UnsupportedType(format!(
                "({p},{q},{s}) is not a domestic canonical type"
            )));
        }
        let mut vertices = vec!["0".to_string()];
        vertices.extend((1..p).map(|k| k.to_string()));
        vertices.extend((1..q).map(|k| format!("{k}'")));
        vertices.extend((1..s).map(|k| format!("{k}''")));
        vertices.push("inf".to_string());
        let inf = vertices.len() - 1;

        let mut arrows = Vec::new();
        let mut arm = |len: usize, offset: usize, name: &str| -> Vec<usize> {
            // arm vertex k (1 <= k < len) sits at index offset + k
            let at = |k: usize| match k {
                0 => 0,
                k if k == len => inf,
                k => offset + k,
            };
            (1..=len)
                .map(|k| {
                    arrows.push(Arrow {
                        source: at(k - 1),
                        target: at(k),
                        label: format!("{name}{k}"),
                    });
                    arrows.len() - 1
                })
                .collect()
        };
        let alpha = arm(p, 0, "alpha");
        let beta = arm(q, p - 1, "beta");
        let gamma = arm(s, p - 1 + q - 1, "gamma");
        let quiver = Quiver::new(format!("canonical({p},{q},{s})"), vertices, arrows)?;
        Ok(Self {
            quiver,
            arms: (p, q, s),
            relation: vec![
                RelationTerm {
                    coefficient: 1,
                    path: gamma,
                },
                RelationTerm {
                    coefficient: -1,
                    path: alpha,
                },
                RelationTerm {
                    coefficient: -1,
                    path: beta,
                },
            ],
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn arms(&self) -> (usize, usize, usize) {
        self.arms
    }

    pub fn relation(&self) -> &[RelationTerm] {
        &self.relation
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn infinity(&self) -> usize {
        self.quiver.vertex_count() - 1
    }

    fn arm_offset(&self, arm: Arm) -> (usize, usize) {
        let (p, q, s) = self.arms;
        match arm {
            Arm::Alpha => (p, 0),
            Arm::Beta => (q, p - 1),
            Arm::Gamma => (s, p - 1 + q - 1),
        }
    }

    /// Vertex at position `k` along an arm: 0 is the source vertex `0`,
    /// the arm length is `inf`.
    pub fn arm_vertex(&self, arm: Arm, k: usize) -> usize {
        let (len, offset) = self.arm_offset(arm);
        assert!(k <= len, "arm position {k} beyond length {len}");
        match k {
            0 => 0,
            k if k == len => self.infinity(),
            k => offset + k,
        }
    }

    /// Index of the `k`-th arrow (1-based) of an arm.
    pub fn arm_arrow(&self, arm: Arm, k: usize) -> usize {
        let (p, q, _) = self.arms;
        let (len, _) = self.arm_offset(arm);
        assert!(
            (1..=len).contains(&k),
            "arm arrow {k} out of range 1..={len}"
        );
        match arm {
            Arm::Alpha => k - 1,
            Arm::Beta => p + k - 1,
            Arm::Gamma => p + q + k - 1,
        }
    }

    pub fn arm_len(&self, arm: Arm) -> usize {
        self.arm_offset(arm).0
    }

    /// Vertex permutation realising the duality: the opposite quiver is again
    /// canonical of the same type once `0` and `inf` trade places and every
    /// arm is read backwards. Returns `(vertex_map, arrow_map)` from old
    /// indices to new ones.
    pub fn duality_maps(&self) -> (Vec<usize>, Vec<usize>) {
        let mut vmap = vec![0; self.quiver.vertex_count()];
        let mut amap = vec![0; self.quiver.arrows().len()];
        for arm in [Arm::Alpha, Arm::Beta, Arm::Gamma] {
            let len = self.arm_len(arm);
            for k in 0..=len {
                vmap[self.arm_vertex(arm, k)] = self.arm_vertex(arm, len - k);
            }
            for k in 1..=len {
                amap[self.arm_arrow(arm, k)] = self.arm_arrow(arm, len + 1 - k);
            }
        }
        (vmap, amap)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arm {
    Alpha,
    Beta,
    Gamma,
}

/// Either a plain path algebra or a canonical algebra with its relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebra {
    Path(Quiver),
    Canonical(CanonicalAlgebra),
}

impl Algebra {
    pub fn quiver(&self) -> &Quiver {
        match self {
            Algebra::Path(q) => q,
            Algebra::Canonical(c) => c.quiver(),
        }
    }

    pub fn relation(&self) -> Option<&[RelationTerm]> {
        match self {
            Algebra::Path(_) => None,
            Algebra::Canonical(c) => Some(c.relation()),
        }
    }

    pub fn as_canonical(&self) -> Option<&CanonicalAlgebra> {
        match self {
            Algebra::Canonical(c) => Some(c),
            Algebra::Path(_) => None,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.quiver().name())
    }
}

pub fn build_canonical(p: usize, q: usize, s: usize) -> Result<CanonicalAlgebra> {
    CanonicalAlgebra::new(p, q, s)
}

/// The extended Dynkin quiver of type D~n, vertices `1..=n+1`, with arrows
/// `3->1`, `3->2`, `k+1->k` for `3 <= k < n-1`, `n->n-1` and `n+1->n-1`.
pub fn build_dn(n: usize) -> Result<Quiver> {
    if n < 4 {
        return Err(Error::UnsupportedType(format!("D~{n} needs n >= 4")));
    }
    let vertices: Vec<String> = (1..=n + 1).map(|k| k.to_string()).collect();
    let arrow = |s: usize, t: usize| Arrow {
        source: s - 1,
        target: t - 1,
        label: format!("{s}->{t}"),
    };
    let mut arrows = vec![arrow(3, 1), arrow(3, 2)];
    arrows.extend((3..n - 1).map(|k| arrow(k + 1, k)));
    arrows.push(arrow(n, n - 1));
    arrows.push(arrow(n + 1, n - 1));
    Quiver::new(format!("D~{n}"), vertices, arrows)
}

/// The extended Dynkin quiver of type E~6 with subspace orientation:
/// `2->1->0`, `3->4->0`, `6->5->0`.
pub fn build_e6() -> Quiver {
    let vertices: Vec<String> = (0..=6).map(|k| k.to_string()).collect();
    let arrows = [(2, 1), (1, 0), (3, 4), (4, 0), (5, 0), (6, 5)]
        .iter()
        .map(|&(s, t)| Arrow {
            source: s,
            target: t,
            label: format!("{s}->{t}"),
        })
        .collect();
    Quiver::new("E~6", vertices, arrows).expect("valid E~6 quiver")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_vertex_and_arrow_counts() {
        let c = build_canonical(3, 2, 2).unwrap();
        assert_eq!(
            c.quiver().vertex_labels(),
            ["0", "1", "2", "1'", "1''", "inf"]
        );
        assert_eq!(c.quiver().arrows().len(), 7);
        let c = build_canonical(3, 3, 2).unwrap();
        assert_eq!(c.quiver().vertex_count(), 7);
        assert_eq!(c.quiver().arrows().len(), 8);
    }

    #[test]
    fn degenerate_arms_are_parallel_arrows() {
        let c = build_canonical(1, 1, 1).unwrap();
        assert_eq!(c.quiver().vertex_count(), 2);
        assert_eq!(c.quiver().arrows().len(), 3);
        assert!(c
            .quiver()
            .arrows()
            .iter()
            .all(|a| a.source == 0 && a.target == 1));
    }

    #[test]
    fn non_domestic_types_are_rejected() {
        for (p, q, s) in [(3, 3, 3), (6, 3, 2), (2, 2, 3), (1, 2, 2), (0, 1, 1)] {
            assert!(
                matches!(build_canonical(p, q, s), Err(Error::UnsupportedType(_))),
                "({p},{q},{s})"
            );
        }
        for (p, q, s) in [(4, 1, 1), (2, 2, 2), (7, 2, 2), (5, 3, 2)] {
            assert!(build_canonical(p, q, s).is_ok());
        }
    }

    #[test]
    fn relation_paths_run_from_zero_to_infinity() {
        for (p, q, s) in [(3, 2, 2), (3, 3, 2), (2, 1, 1), (5, 3, 2)] {
            let c = build_canonical(p, q, s).unwrap();
            assert_eq!(c.relation().len(), 3);
            for term in c.relation() {
                let arrows = c.quiver().arrows();
                assert_eq!(arrows[term.path[0]].source, c.zero());
                assert_eq!(arrows[*term.path.last().unwrap()].target, c.infinity());
                for w in term.path.windows(2) {
                    assert_eq!(arrows[w[0]].target, arrows[w[1]].source);
                }
            }
            let coeffs: Vec<i64> = c.relation().iter().map(|t| t.coefficient).collect();
            assert_eq!(coeffs, [1, -1, -1]);
        }
    }

    #[test]
    fn dn_orientation() {
        let q = build_dn(4).unwrap();
        assert_eq!(q.vertex_count(), 5);
        let labels: Vec<&str> = q.arrows().iter().map(|a| a.label.as_str()).collect();
        assert_eq!(labels, ["3->1", "3->2", "4->3", "5->3"]);
        let q = build_dn(5).unwrap();
        assert_eq!(q.vertex_count(), 6);
        assert_eq!(q.arrows().len(), 5);
        assert!(matches!(build_dn(3), Err(Error::UnsupportedType(_))));
    }

    #[test]
    fn e6_orientation() {
        let q = build_e6();
        assert_eq!(q.in_degree(0), 3);
        assert_eq!(q.sources(), [2, 3, 6]);
        assert_eq!(q.arrows().len(), 6);
    }

    #[test]
    fn euler_form_values() {
        let q = build_dn(4).unwrap();
        let simple_sink = [1, 0, 0, 0, 0];
        assert_eq!(q.euler_form(&simple_sink, &simple_sink).unwrap(), 1);
        // null root of D~4: 2 at the centre vertex 3
        let delta = [1, 1, 2, 1, 1];
        assert_eq!(q.euler_form(&delta, &delta).unwrap(), 0);
        assert!(q.euler_form(&[1, 2], &delta).is_err());
    }

    #[test]
    fn projectives_by_path_counting() {
        let q = build_dn(5).unwrap();
        // from vertex 5 every vertex except 6 is reachable exactly once
        assert_eq!(q.path_counts_from(4), [1, 1, 1, 1, 1, 0]);
        assert_eq!(q.path_counts_from(0), [1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn opposite_is_involutive() {
        let q = build_e6();
        assert_eq!(q.opposite().opposite(), q);
        assert_eq!(q.opposite().sinks(), [2, 3, 6]);
    }

    #[test]
    fn duality_maps_swap_zero_and_infinity() {
        let c = build_canonical(3, 3, 2).unwrap();
        let (vmap, amap) = c.duality_maps();
        assert_eq!(vmap[c.zero()], c.infinity());
        assert_eq!(vmap[c.infinity()], c.zero());
        let arrows = c.quiver().arrows();
        for (old, a) in arrows.iter().enumerate() {
            let b = &arrows[amap[old]];
            assert_eq!((b.source, b.target), (vmap[a.target], vmap[a.source]));
        }
    }
}
