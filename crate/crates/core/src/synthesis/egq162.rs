//! The 162-point hyperoval of H(5,4) and the extended quadrangle EGQ(4,2)
//! it carries, built two ways: from coordinates and as the symmetric
//! difference of two 126-point hyperovals.

use std::collections::BTreeMap;

use serde::Serialize;

use super::SynthesisError;
use crate::bitset::VertexSet;
use crate::canon::{canonical_form, certificate, is_locally, subset_certificate, Coloring};
use crate::fields::{coordinate_product, FormKind, OMEGA, OMEGA2};
use crate::graph::Graph;
use crate::hyperovals::{is_hyperoval, set_orbit};
use crate::spaces::{gf3_plus_points, perp_graph, polar_space, Geometry, PolarKind};

/// Isotropic points of H(5,4) (form `Σ x_i y_i²`) whose coordinates are all
/// nonzero with product ω or ω². The product is scale-invariant because
/// every nonzero scalar of GF(4) has cube 1.
pub fn brouwer_hyperoval_162(h5: &Geometry) -> Result<Vec<usize>, SynthesisError> {
    let form = h5
        .form()
        .ok_or_else(|| SynthesisError::PreconditionViolated("H(5,4) without coordinates".into()))?;
    let diagonal = form.kind() == FormKind::Hermitian
        && form.dim() == 6
        && (0..6).all(|i| (0..6).all(|j| form.gram()[6 * i + j] == (i == j) as u8));
    if !diagonal {
        return Err(SynthesisError::PreconditionViolated("expected the diagonal hermitian form".into()));
    }
    let f = form.field();
    let set: Vec<usize> = (0..h5.point_count())
        .filter(|&i| {
            let p = &h5.points()[i];
            p.iter().all(|&x| x != 0) && matches!(coordinate_product(f, p), OMEGA | OMEGA2)
        })
        .collect();
    Ok(set)
}

/// `Ξ △ Ξ′` for two 126-point hyperovals meeting in 45 points.
pub fn symmetric_difference_hyperoval(h5: &Geometry, a: &[usize], b: &[usize]) -> Result<Vec<usize>, SynthesisError> {
    let n = h5.point_count();
    let sa = VertexSet::from_indices(n, a.iter().copied());
    let sb = VertexSet::from_indices(n, b.iter().copied());
    if sa.count() != 126 || sb.count() != 126 || !is_hyperoval(h5, a) || !is_hyperoval(h5, b) {
        return Err(SynthesisError::PreconditionViolated("need two 126-point hyperovals".into()));
    }
    let common = sa.intersection_count(&sb);
    if common != 45 {
        return Err(SynthesisError::PreconditionViolated(format!(
            "hyperovals meet in {common} points, not 45"
        )));
    }
    let mut d = sa;
    d.symmetric_difference_with(&sb);
    let out = d.to_vec();
    if !is_hyperoval(h5, &out) {
        return Err(SynthesisError::NotFound("symmetric difference is not a hyperoval".into()));
    }
    Ok(out)
}

/// A second 126-point hyperoval meeting `rep` in 45 points, searched in the
/// orbit of `rep` under `gens`.
pub fn find_126_pair_sharing_45(
    h5: &Geometry,
    rep: &[usize],
    gens: &[Vec<usize>],
) -> Result<(Vec<usize>, Vec<usize>), SynthesisError> {
    if rep.len() != 126 || !is_hyperoval(h5, rep) {
        return Err(SynthesisError::PreconditionViolated("need a 126-point hyperoval".into()));
    }
    let s = VertexSet::from_indices(h5.point_count(), rep.iter().copied());
    set_orbit(gens, rep)
        .into_iter()
        .find(|o| o.iter().filter(|&&p| s.contains(p)).count() == 45)
        .map(|o| (rep.to_vec(), o))
        .ok_or_else(|| SynthesisError::NotFound("no 126-point hyperoval meets the first in 45 points".into()))
}

/// (+)-points of GF(3)^6 perpendicular to an isotropic point, adjacent when
/// perpendicular.
pub fn gf3_isotropic_perp_model() -> Result<Graph, SynthesisError> {
    let (form, pts) = gf3_plus_points(6, 1)?;
    let f = form.field();
    let iso = crate::fields::projective_points(f, 6)
        .into_iter()
        .find(|v| form.eval_unchecked(v, v) == 0)
        .ok_or_else(|| SynthesisError::NotFound("isotropic point".into()))?;
    let c = form.functional(&iso);
    let sub: Vec<Vec<_>> = pts
        .into_iter()
        .filter(|p| form.apply_functional(&c, p) == 0)
        .collect();
    Ok(perp_graph(&form, &sub))
}

/// Point graph of the extended quadrangle on a 162-point hyperoval.
#[derive(Debug, Clone, Serialize)]
pub struct EgqReport {
    pub points: usize,
    pub valency: usize,
    /// Vertices at distance 0, 1, 2, ... from a fixed vertex.
    pub layers: Vec<usize>,
    /// Every neighborhood is the collinearity graph of GQ(4,2).
    pub locally_gq42: bool,
    /// Automorphism order of the bare point graph (reported only).
    pub automorphism_order: u128,
    pub certificate: String,
}

pub fn egq_report(h5: &Geometry, set: &[usize]) -> Result<EgqReport, SynthesisError> {
    let col = h5.collinearity_graph();
    let g = col.induced_ordered(set);
    let dist = g.distances_from(0);
    let mut layers: BTreeMap<usize, usize> = BTreeMap::new();
    for d in dist {
        *layers.entry(d).or_insert(0) += 1;
    }
    let gq42 = polar_space(PolarKind::H3_4)?.collinearity_graph();
    let cf = canonical_form(&g, &Coloring::trivial(g.order()));
    Ok(EgqReport {
        points: g.order(),
        valency: g.degree(0),
        layers: layers.into_values().collect(),
        locally_gq42: is_locally(&g, &gq42),
        automorphism_order: cf.group_order,
        certificate: cf.certificate.hex_digest(),
    })
}

/// Both constructions of the 162-point hyperoval.
#[derive(Debug, Clone, Serialize)]
pub struct TwoRoutes {
    pub brouwer: Vec<usize>,
    pub pair: (Vec<usize>, Vec<usize>),
    pub symmetric_difference: Vec<usize>,
    /// Colored certificates of (H(5,4), set) for both routes.
    pub brouwer_certificate: String,
    pub difference_certificate: String,
    /// The 45-point intersection matches the GF(3) isotropic-perp model.
    pub intersection_matches_gf3: bool,
}

pub fn two_routes(h5: &Geometry, rep126: &[usize]) -> Result<TwoRoutes, SynthesisError> {
    let n = h5.point_count();
    let col = h5.collinearity_graph();
    let aut = canonical_form(&col, &Coloring::trivial(n));
    let brouwer = brouwer_hyperoval_162(h5)?;
    if brouwer.len() != 162 || !is_hyperoval(h5, &brouwer) {
        return Err(SynthesisError::NotFound("coordinate set is not a 162-point hyperoval".into()));
    }
    let (a, b) = find_126_pair_sharing_45(h5, rep126, &aut.generators)?;
    let diff = symmetric_difference_hyperoval(h5, &a, &b)?;
    let sb = VertexSet::from_indices(n, b.iter().copied());
    let common: Vec<usize> = a.iter().copied().filter(|&p| sb.contains(p)).collect();
    let model = gf3_isotropic_perp_model()?;
    let sub = col.induced_ordered(&common);
    let intersection_matches_gf3 = model.order() == sub.order()
        && certificate(&model, &Coloring::trivial(model.order())) == certificate(&sub, &Coloring::trivial(sub.order()));
    let cert = |s: &[usize]| subset_certificate(&col, &VertexSet::from_indices(n, s.iter().copied())).hex_digest();
    Ok(TwoRoutes {
        brouwer_certificate: cert(&brouwer),
        difference_certificate: cert(&diff),
        brouwer,
        pair: (a, b),
        symmetric_difference: diff,
        intersection_matches_gf3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::make_field;

    #[test]
    fn coordinate_product_is_scale_invariant() {
        let f = make_field(4).unwrap();
        let v = [1, 2, 3, 1, 1, 2];
        let p = coordinate_product(&f, &v);
        for a in 1..4 {
            let w: Vec<u8> = v.iter().map(|&x| f.mul(a, x)).collect();
            assert_eq!(coordinate_product(&f, &w), p);
        }
    }

    #[test]
    fn brouwer_set_is_a_hyperoval() {
        let h5 = polar_space(PolarKind::H5_4).unwrap();
        let s = brouwer_hyperoval_162(&h5).unwrap();
        assert_eq!(s.len(), 162);
        assert!(is_hyperoval(&h5, &s));
    }
}
