//! The functor `Hom(T, -)` from modules over a canonical algebra to
//! representations of the quiver of `End(T)^op`.
//!
//! An arrow `u -> v` of that quiver corresponds to a generator
//! `g: T_v -> T_u`, and acts on `N(u) = Hom(T_u, M)` by `f -> f ∘ g`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::{hom_basis, HomBasis};
use crate::linalg::ExactMatrix;
use crate::quiver::{Algebra, Quiver};
use crate::rep::{Morphism, Representation};
use crate::series::TiltingData;

/// Where a functor image came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub module: String,
    pub tilting: String,
}

#[derive(Clone, Debug)]
pub struct FunctorOutput {
    pub representation: Representation,
    /// The basis of `Hom(T_x, M)` used at each vertex `x` of the target quiver.
    pub bases: Vec<HomBasis>,
    pub provenance: Provenance,
}

/// Matrix of `f -> f ∘ g` from the span of `from` to the span of `to`.
pub fn precomposition_matrix(g: &Morphism, from: &HomBasis, to: &HomBasis) -> Result<ExactMatrix> {
    let field = from.field();
    let mut columns = Vec::with_capacity(from.dim());
    for f in from.morphisms() {
        let fg = f.after(g)?;
        let coords = to.coordinates(&fg).ok_or_else(|| {
            Error::InternalInconsistency("composite lies outside the target hom space".into())
        })?;
        columns.push(coords);
    }
    ExactMatrix::from_columns(field, to.dim(), &columns)
}

/// Applies `Hom(T, -)` to `module`, with `vertex_map[x]` naming the summand
/// placed at vertex `x` of `gamma`.
pub fn apply_functor(
    tilting: &TiltingData,
    module: &Representation,
    gamma: &Quiver,
    vertex_map: &[usize],
) -> Result<FunctorOutput> {
    if vertex_map.len() != gamma.vertex_count() {
        return Err(Error::TiltingMismatch(format!(
            "vertex map has {} entries for {} vertices",
            vertex_map.len(),
            gamma.vertex_count()
        )));
    }
    let mut seen = vec![false; tilting.summands.len()];
    for &s in vertex_map {
        if s >= seen.len() || std::mem::replace(&mut seen[s], true) {
            return Err(Error::TiltingMismatch(format!(
                "vertex map is not a bijection onto {} summands",
                seen.len()
            )));
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::TiltingMismatch("vertex map misses a summand".into()));
    }
    let bases = vertex_map
        .iter()
        .map(|&s| hom_basis(&tilting.summands[s], module))
        .collect::<Result<Vec<_>>>()?;
    let mut maps = Vec::with_capacity(gamma.arrows().len());
    for a in gamma.arrows() {
        let (su, sv) = (vertex_map[a.source], vertex_map[a.target]);
        let g = tilting.generator(sv, su).ok_or_else(|| {
            Error::TiltingMismatch(format!(
                "arrow {} needs a generator {} -> {}",
                a.label, tilting.summand_labels[sv], tilting.summand_labels[su]
            ))
        })?;
        maps.push(precomposition_matrix(
            &g.morphism,
            &bases[a.source],
            &bases[a.target],
        )?);
    }
    let dims = bases.iter().map(HomBasis::dim).collect();
    let representation = Representation::new(
        Arc::new(Algebra::Path(gamma.clone())),
        module.field(),
        dims,
        maps,
    )?;
    Ok(FunctorOutput {
        representation,
        bases,
        provenance: Provenance {
            module: describe_module(module),
            tilting: tilting.name.clone(),
        },
    })
}

/// [`apply_functor`] with the quiver and vertex map stored in `tilting`.
pub fn apply(tilting: &TiltingData, module: &Representation) -> Result<FunctorOutput> {
    apply_functor(tilting, module, &tilting.gamma, &tilting.vertex_map)
}

fn describe_module(m: &Representation) -> String {
    let dims: Vec<String> = m.dims().iter().map(usize::to_string).collect();
    format!("{} module with dims ({})", m.algebra(), dims.join(","))
}

/// Dimension vector of the indecomposable projective of `gamma` at `v`
/// (number of paths starting at `v`).
pub fn projective_dims(gamma: &Quiver, v: usize) -> Vec<i64> {
    gamma
        .path_counts_from(v)
        .into_iter()
        .map(|c| c as i64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::{end_dim, find_iso, gen_membership};
    use crate::linalg::Field;
    use crate::series::{build_e6_rank3_series1, build_rank2, build_tilting_dn, build_tilting_e6};

    const Q: Field = Field::Rationals;

    #[test]
    fn identity_and_zero_precomposition() {
        let t = build_tilting_dn(5, Q).unwrap();
        let m = build_rank2(3, 1, 2, 1, Q).unwrap();
        let b = hom_basis(&t.summands[2], &m).unwrap();
        let id = Morphism::identity(&t.summands[2]);
        assert_eq!(
            precomposition_matrix(&id, &b, &b).unwrap(),
            ExactMatrix::identity(Q, b.dim())
        );
        let zero = Morphism::zero(&t.summands[2], &t.summands[2]);
        assert!(precomposition_matrix(&zero, &b, &b).unwrap().is_zero());
    }

    #[test]
    fn summands_go_to_projectives() {
        for t in [
            build_tilting_dn(5, Q).unwrap(),
            build_tilting_e6(Q).unwrap(),
        ] {
            for (x, &s) in t.vertex_map.iter().enumerate() {
                let n = apply(&t, &t.summands[s]).unwrap().representation;
                assert_eq!(
                    n.dim_vector(),
                    projective_dims(&t.gamma, x),
                    "{} at {x}",
                    t.name
                );
                assert!(n.is_valid());
            }
        }
    }

    #[test]
    fn functor_is_functorial_on_paths_of_length_two() {
        let t = build_tilting_dn(6, Q).unwrap();
        let m = build_rank2(4, 1, 3, 2, Q).unwrap();
        let bases: Vec<HomBasis> = t
            .summands
            .iter()
            .map(|s| hom_basis(s, &m).unwrap())
            .collect();
        for g1 in &t.generators {
            for g2 in t.generators.iter().filter(|g| g.source == g1.target) {
                let comp = g2.morphism.after(&g1.morphism).unwrap();
                // f -> f∘g2 then -> (f∘g2)∘g1
                let a = precomposition_matrix(&g2.morphism, &bases[g2.target], &bases[g2.source])
                    .unwrap();
                let b = precomposition_matrix(&g1.morphism, &bases[g1.target], &bases[g1.source])
                    .unwrap();
                let c = precomposition_matrix(&comp, &bases[g2.target], &bases[g1.source]).unwrap();
                assert_eq!(b.mul(&a).unwrap(), c);
            }
        }
    }

    #[test]
    fn functor_is_additive() {
        let t = build_tilting_dn(5, Q).unwrap();
        let a = build_rank2(3, 1, 2, 1, Q).unwrap();
        let b = build_rank2(3, 2, 3, 0, Q).unwrap();
        let sum = apply(&t, &a.direct_sum(&b).unwrap())
            .unwrap()
            .representation;
        let parts = apply(&t, &a)
            .unwrap()
            .representation
            .direct_sum(&apply(&t, &b).unwrap().representation)
            .unwrap();
        assert!(find_iso(&sum, &parts).unwrap().is_isomorphic());
    }

    #[test]
    fn image_dimensions() {
        let t = build_tilting_e6(Q).unwrap();
        for m in 0..=2 {
            let mm = build_e6_rank3_series1(m, Q).unwrap();
            assert!(gen_membership(&t.summands, &mm).unwrap());
            let n = apply(&t, &mm).unwrap().representation;
            let m = m as i64;
            assert_eq!(n.dim_vector(), [3 * m + 1, 2 * m, m, m, 2 * m, 2 * m, m]);
            assert_eq!(end_dim(&n), 1);
        }
    }

    #[test]
    fn mismatched_vertex_map_is_rejected() {
        let t = build_tilting_dn(4, Q).unwrap();
        let m = build_rank2(2, 1, 2, 0, Q).unwrap();
        let bad = vec![0, 0, 1, 2, 3];
        assert!(matches!(
            apply_functor(&t, &m, &t.gamma, &bad),
            Err(Error::TiltingMismatch(_))
        ));
        let swapped = vec![3, 1, 2, 0, 4];
        assert!(apply_functor(&t, &m, &t.gamma, &swapped).is_err());
    }
}
