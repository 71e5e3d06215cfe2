//! Representations of quivers (optionally bound by the canonical relation)
//! and morphisms between them.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Field};
use crate::quiver::{build_dn, Algebra, Quiver};

/// A vector space per vertex (given by its dimension) and a matrix per arrow,
/// of shape `dim(target) x dim(source)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: Arc<Algebra>,
    field: Field,
    dims: Vec<usize>,
    maps: Vec<ExactMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape {
        arrow: String,
        expected: (usize, usize),
        found: (usize, usize),
    },
    Field {
        arrow: String,
        found: Field,
    },
    /// The canonical relation fails; `mismatches` counts the differing entries.
    Relation {
        mismatches: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape {
                arrow,
                expected,
                found,
            } => write!(
                f,
                "arrow {arrow}: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Violation::Field { arrow, found } => write!(f, "arrow {arrow}: entries over {found}"),
            Violation::Relation { mismatches } => {
                write!(f, "canonical relation fails in {mismatches} entries")
            }
        }
    }
}

impl Representation {
    /// Checks vertex and arrow counts, matrix shapes and fields. The
    /// canonical relation is not checked here; see [`Representation::validate`].
    pub fn new(
        algebra: Arc<Algebra>,
        field: Field,
        dims: Vec<usize>,
        maps: Vec<ExactMatrix>,
    ) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        let rep = Self {
            algebra,
            field,
            dims,
            maps,
        };
        if let Some(v) = rep.shape_violations().into_iter().next() {
            return Err(match v {
                Violation::Field { found, .. } => Error::FieldMismatch(field, found),
                other => Error::DimensionMismatch(other.to_string()),
            });
        }
        Ok(rep)
    }

    pub fn zero(algebra: Arc<Algebra>, field: Field) -> Self {
        let q = algebra.quiver();
        let dims = vec![0; q.vertex_count()];
        let maps = q
            .arrows()
            .iter()
            .map(|_| ExactMatrix::zeros(field, 0, 0))
            .collect();
        Self {
            algebra,
            field,
            dims,
            maps,
        }
    }

    /// The simple representation at `v`.
    pub fn simple(algebra: Arc<Algebra>, field: Field, v: usize) -> Self {
        let q = algebra.quiver();
        let mut dims = vec![0; q.vertex_count()];
        dims[v] = 1;
        let maps = q
            .arrows()
            .iter()
            .map(|a| ExactMatrix::zeros(field, dims[a.target], dims[a.source]))
            .collect();
        Self {
            algebra,
            field,
            dims,
            maps,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn quiver(&self) -> &Quiver {
        self.algebra.quiver()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn maps(&self) -> &[ExactMatrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &ExactMatrix {
        &self.maps[arrow]
    }

    pub fn map_by_label(&self, label: &str) -> Option<&ExactMatrix> {
        self.quiver().arrow_index(label).map(|i| &self.maps[i])
    }

    /// Replaces one arrow matrix; the shape must stay consistent.
    pub fn with_map(&self, arrow: usize, m: ExactMatrix) -> Result<Self> {
        let mut maps = self.maps.clone();
        maps[arrow] = m;
        Self::new(self.algebra.clone(), self.field, self.dims.clone(), maps)
    }

    pub fn same_algebra(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra
    }

    pub(crate) fn check_compatible(&self, other: &Representation) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if !self.same_algebra(other) {
            return Err(Error::AlgebraMismatch(format!(
                "{} vs {}",
                self.algebra, other.algebra
            )));
        }
        Ok(())
    }

    fn shape_violations(&self) -> Vec<Violation> {
        let q = self.algebra.quiver();
        let mut out = Vec::new();
        for (a, m) in q.arrows().iter().zip(&self.maps) {
            let expected = (self.dims[a.target], self.dims[a.source]);
            if m.shape() != expected {
                out.push(Violation::Shape {
                    arrow: a.label.clone(),
                    expected,
                    found: m.shape(),
                });
            }
            if m.field() != self.field {
                out.push(Violation::Field {
                    arrow: a.label.clone(),
                    found: m.field(),
                });
            }
        }
        out
    }

    /// Matrix of a path given as arrow indices in traversal order.
    pub fn path_matrix(&self, path: &[usize]) -> Result<ExactMatrix> {
        let first = path
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty path".into()))?;
        let mut acc = self.maps[*first].clone();
        for &a in &path[1..] {
            acc = self.maps[a].mul(&acc)?;
        }
        Ok(acc)
    }

    /// All violated conditions; empty iff every arrow matrix has the right
    /// shape and field and the relation (if any) holds exactly.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.shape_violations();
        if !out.is_empty() {
            return out;
        }
        if let Some(relation) = self.algebra.relation() {
            let mut total: Option<ExactMatrix> = None;
            for term in relation {
                let m = self
                    .path_matrix(&term.path)
                    .expect("shapes already validated")
                    .scale(&crate::linalg::Scalar::from_i64(
                        self.field,
                        term.coefficient,
                    ));
                total = Some(match total {
                    None => m,
                    Some(t) => t.add(&m).expect("relation paths are parallel"),
                });
            }
            if let Some(t) = total {
                let mismatches = t.entries().iter().filter(|e| !e.is_zero()).count();
                if mismatches > 0 {
                    out.push(Violation::Relation { mismatches });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `dim M(inf) - dim M(0)` for modules over a canonical algebra.
    pub fn rank(&self) -> Result<i64> {
        let c = self.algebra.as_canonical().ok_or_else(|| {
            Error::UnsupportedAlgebra(format!(
                "rank needs a canonical algebra, got {}",
                self.algebra
            ))
        })?;
        Ok(self.dims[c.infinity()] as i64 - self.dims[c.zero()] as i64)
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.check_compatible(other)?;
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.block_diag(b))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.algebra.clone(), self.field, dims, maps)
    }

    /// Transposes every matrix and reverses every arrow. Over a canonical
    /// algebra the opposite quiver is identified with the same canonical
    /// quiver by exchanging `0` and `inf` and reading each arm backwards, so
    /// the result is again a module over the same algebra (and the rank
    /// changes sign). Over a path algebra the result lives on the opposite
    /// quiver.
    pub fn dualize(&self) -> Representation {
        match self.algebra.as_ref() {
            Algebra::Path(q) => Representation {
                algebra: Arc::new(Algebra::Path(q.opposite())),
                field: self.field,
                dims: self.dims.clone(),
                maps: self.maps.iter().map(ExactMatrix::transpose).collect(),
            },
            Algebra::Canonical(c) => {
                let (vmap, amap) = c.duality_maps();
                let mut dims = vec![0; self.dims.len()];
                for (old, &new) in vmap.iter().enumerate() {
                    dims[new] = self.dims[old];
                }
                let mut maps = self.maps.clone();
                for (old, &new) in amap.iter().enumerate() {
                    maps[new] = self.maps[old].transpose();
                }
                Representation {
                    algebra: self.algebra.clone(),
                    field: self.field,
                    dims,
                    maps,
                }
            }
        }
    }

    /// Transports the representation along a vertex permutation that is a
    /// quiver automorphism: the space at `v` moves to `perm[v]`.
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<Representation> {
        let q = self.quiver();
        let n = q.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameter("not a vertex permutation".into()));
        }
        let mut dims = vec![0; n];
        for v in 0..n {
            dims[perm[v]] = self.dims[v];
        }
        let mut maps = vec![None; q.arrows().len()];
        for (i, a) in q.arrows().iter().enumerate() {
            let (s, t) = (perm[a.source], perm[a.target]);
            let j = q
                .arrows()
                .iter()
                .enumerate()
                .position(|(j, b)| b.source == s && b.target == t && maps[j].is_none())
                .ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "permutation is not an automorphism: no arrow {} -> {}",
                        q.label(s),
                        q.label(t)
                    ))
                })?;
            maps[j] = Some(self.maps[i].clone());
        }
        let maps = maps
            .into_iter()
            .map(|m| m.expect("bijective on arrows"))
            .collect();
        Representation::new(self.algebra.clone(), self.field, dims, maps)
    }

    /// Transport along one of the symmetries of the D~n quiver.
    pub fn apply_graph_symmetry(&self, sigma: DnSymmetry) -> Result<Representation> {
        let q = self.quiver();
        let n = q.vertex_count().saturating_sub(1);
        if n < 4 || *q != build_dn(n)? {
            return Err(Error::UnsupportedAlgebra(format!(
                "graph symmetries are defined for D~n, got {}",
                q.name()
            )));
        }
        self.permute_vertices(&sigma.permutation(n))
    }
}

/// The automorphisms of the D~n quiver used for the rank-one families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DnSymmetry {
    Identity,
    /// Exchange the sinks `1` and `2`.
    SwapSinks,
    /// Exchange the sources `n` and `n+1`.
    SwapSources,
    Both,
}

impl DnSymmetry {
    /// Permutation of vertex indices (0-based, vertex label `k` at index `k-1`).
    pub fn permutation(self, n: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..=n).collect();
        if matches!(self, DnSymmetry::SwapSinks | DnSymmetry::Both) {
            perm.swap(0, 1);
        }
        if matches!(self, DnSymmetry::SwapSources | DnSymmetry::Both) {
            perm.swap(n - 1, n);
        }
        perm
    }
}

/// Vertex-indexed family of matrices `f_v : X(v) -> Y(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    components: Vec<ExactMatrix>,
}

impl Morphism {
    pub fn new(components: Vec<ExactMatrix>) -> Self {
        Self { components }
    }

    pub fn identity(x: &Representation) -> Self {
        Self::new(
            x.dims
                .iter()
                .map(|&d| ExactMatrix::identity(x.field, d))
                .collect(),
        )
    }

    pub fn zero(x: &Representation, y: &Representation) -> Self {
        Self::new(
            x.dims
                .iter()
                .zip(&y.dims)
                .map(|(&dx, &dy)| ExactMatrix::zeros(x.field, dy, dx))
                .collect(),
        )
    }

    pub fn components(&self) -> &[ExactMatrix] {
        &self.components
    }

    pub fn component(&self, v: usize) -> &ExactMatrix {
        &self.components[v]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Morphism) -> Result<Morphism> {
        if self.components.len() != first.components.len() {
            return Err(Error::DimensionMismatch(
                "morphisms over different quivers".into(),
            ));
        }
        Ok(Morphism::new(
            self.components
                .iter()
                .zip(&first.components)
                .map(|(g, f)| g.mul(f))
                .collect::<Result<_>>()?,
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(ExactMatrix::is_zero)
    }

    /// True when every component has the right shape and
    /// `f_t X(a) = Y(a) f_s` holds for every arrow `a: s -> t`.
    pub fn is_morphism(&self, x: &Representation, y: &Representation) -> bool {
        if x.check_compatible(y).is_err() || self.components.len() != x.dims.len() {
            return false;
        }
        let shapes_ok = self
            .components
            .iter()
            .enumerate()
            .all(|(v, c)| c.shape() == (y.dims[v], x.dims[v]) && c.field() == x.field);
        shapes_ok
            && x.quiver().arrows().iter().enumerate().all(|(i, a)| {
                let lhs = self.components[a.target].mul(&x.maps[i]);
                let rhs = y.maps[i].mul(&self.components[a.source]);
                matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
            })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(ExactMatrix::is_invertible)
    }
}
