//! Known facts about the constructed geometries and graphs.

use geomforge::canon::{are_isomorphic, is_locally};
use geomforge::fields::{point_class, projective_points, PointClass};
use geomforge::graph::Graph;
use geomforge::hyperovals::{hyperovals_of_gf4_rank3, SearchOptions};
use geomforge::spaces::{
    flag_geometry, gf3_plus_graph, hermitian_nonisotropic_graph, polar_space, w_s, Geometry, PolarKind,
};
use geomforge::synthesis::suzuki::{sigma2, suzuki_extend};

fn gq_axiom(geo: &Geometry) {
    let col = geo.collinearity_graph();
    for line in geo.lines() {
        for p in (0..geo.point_count()).filter(|p| !line.contains(p)) {
            let seen = line.iter().filter(|&&x| col.adjacent(p, x)).count();
            assert_eq!(seen, 1, "point {p} sees {seen} points of {line:?} in {}", geo.kind());
        }
    }
}

#[test]
fn generalized_quadrangle_axiom() {
    for kind in [PolarKind::W3, PolarKind::Q4_3, PolarKind::H3_4] {
        gq_axiom(&polar_space(kind).unwrap());
    }
}

#[test]
fn w3_and_q43_share_parameters_but_differ() {
    let w3 = polar_space(PolarKind::W3).unwrap().collinearity_graph();
    let q4 = polar_space(PolarKind::Q4_3).unwrap().collinearity_graph();
    let u4 = hermitian_nonisotropic_graph(4).unwrap();
    for g in [&w3, &q4, &u4] {
        let p = g.srg_params().unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu), (40, 12, 2, 4));
    }
    assert!(are_isomorphic(&w3, &u4));
    assert!(!are_isomorphic(&w3, &q4));
    let w = (1..40).find(|&w| !w3.adjacent(0, w)).unwrap();
    assert_eq!(w3.mu_graph(0, w).unwrap().count(), 4);
}

#[test]
fn hermitian_graphs_and_tuples() {
    let u4 = hermitian_nonisotropic_graph(4).unwrap();
    let triple = u4.triple_witnesses().unwrap();
    assert!(!triple.holds);
    assert!(triple.witnesses.iter().any(|(_, w)| w.len() == 2));
    assert!(u4.tuple_witnesses(2).unwrap().holds);
    let u5 = hermitian_nonisotropic_graph(5).unwrap();
    assert_eq!(u5.diameter(), Some(2));
    assert!(u5.tuple_witnesses(2).unwrap().holds);
}

#[test]
fn gf3_neighbourhood_is_one_dimension_down() {
    let big = gf3_plus_graph(7, -1).unwrap();
    let small = gf3_plus_graph(6, -1).unwrap();
    assert!(are_isomorphic(&big.induced(&big.neighbors(0)), &small));
    assert!(is_locally(&big, &small));
}

#[test]
fn flag_geometries_are_generalized_octagons() {
    for s in [2, 4] {
        let (oct, flags) = flag_geometry(&w_s(s).unwrap()).unwrap();
        assert_eq!(oct.point_count(), flags.len());
        let inc = oct.incidence_graph();
        assert_eq!(inc.girth(), Some(16));
        assert_eq!(inc.diameter(), Some(8));
    }
}

fn nonisotropic_perp_size(kind: PolarKind) -> usize {
    let geo = polar_space(kind).unwrap();
    let form = geo.form().unwrap();
    let p = projective_points(form.field(), form.dim())
        .into_iter()
        .find(|v| point_class(form, v).unwrap() == PointClass::Nonisotropic)
        .unwrap();
    geo.perp_section(&p).count()
}

#[test]
fn hermitian_perp_sections() {
    assert_eq!(nonisotropic_perp_size(PolarKind::H5_4), 165);
    assert_eq!(polar_space(PolarKind::H6_4).unwrap().point_count(), 2709);
    // the section of H(6,4) is a copy of H(5,4)
    assert_eq!(nonisotropic_perp_size(PolarKind::H6_4), 693);
    assert_eq!(polar_space(PolarKind::H5_4).unwrap().point_count(), 693);
}

#[test]
fn sigma_involution_classes() {
    let ext = suzuki_extend(&sigma2()).unwrap();
    let mut sizes: Vec<usize> = ext.trials.iter().map(|t| t.size).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![21, 28]);
    assert_eq!(ext.group.order(), 336);
    let next = suzuki_extend(&ext.graph).unwrap();
    assert_eq!(next.group.order(), 12096);
}

/// For the 126-point hyperoval of H(5,4) and a point v off it, the points
/// of the hyperoval collinear with v induce the 2-clique extension of the
/// GQ(2,2) collinearity graph.
#[test]
fn h54_large_hyperoval_local_structure() {
    let h5 = polar_space(PolarKind::H5_4).unwrap();
    let col = h5.collinearity_graph();
    let out = hyperovals_of_gf4_rank3(PolarKind::H5_4, &SearchOptions::default()).unwrap();
    let big = out.types().iter().find(|t| t.size == 126).unwrap();
    let expected: Graph = w_s(2).unwrap().collinearity_graph().clique_extension(2);
    let off: Vec<usize> = (0..h5.point_count()).filter(|p| !big.representative.contains(p)).collect();
    for &v in off.iter().step_by(37) {
        let seen: Vec<usize> = big.representative.iter().copied().filter(|&x| col.adjacent(v, x)).collect();
        assert_eq!(seen.len(), 30);
        assert!(are_isomorphic(&col.induced_ordered(&seen), &expected));
    }
}
