//! Named constructions reachable from the command line.

use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::spaces::{
    flag_geometry, gf3_plus_graph, hermitian_nonisotropic_graph, pg24_with_hyperovals, polar_space, w_s, Geometry,
    PolarKind, SpaceError,
};
use crate::synthesis::hexagon::extended_hexagon_162;
use crate::synthesis::suzuki::{sigma2, suzuki_extend};
use crate::synthesis::SynthesisError;

pub const BUILD_SCHEMA: &str = "geomforge-build/1";

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown kind {0:?}; known kinds: {known}", known = KINDS.join(", "))]
    UnknownKind(String),
    #[error("kind {kind} needs --{flag}")]
    MissingParameter { kind: String, flag: &'static str },
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Synthesis(#[from] SynthesisError),
}

/// Kinds accepted by [`build`], besides the polar-space names.
pub const KINDS: &[&str] = &[
    "w3", "q4_3", "q5plus4", "s5_4", "q7minus4", "h5_4", "h6_4", "sp6_2", "h3_4", "w2", "w4", "gf3", "u", "pg24",
    "hexagon", "octagon2", "octagon4", "sigma2", "sigma3", "sigma4", "d162",
];

/// A built object: always a graph, plus the geometry it came from if any.
pub struct Built {
    /// Cache key, e.g. `gf3_n6_eps+1`.
    pub label: String,
    pub graph: Graph,
    pub geometry: Option<Geometry>,
}

pub fn label(kind: &str, n: Option<usize>, eps: Option<i8>) -> String {
    let kind = kind.to_ascii_lowercase();
    match kind.as_str() {
        "gf3" => format!("gf3_n{}_eps{:+}", n.unwrap_or(0), eps.unwrap_or(1)),
        "u" => format!("u_n{}", n.unwrap_or(0)),
        _ => kind,
    }
}

fn from_geometry(label: String, geo: Geometry) -> Built {
    Built {
        label,
        graph: geo.collinearity_graph(),
        geometry: Some(geo),
    }
}

pub fn build(kind: &str, n: Option<usize>, eps: Option<i8>) -> Result<Built, CatalogError> {
    let key = kind.to_ascii_lowercase();
    let label = label(&key, n, eps);
    let need_n = || {
        n.ok_or(CatalogError::MissingParameter {
            kind: key.clone(),
            flag: "n",
        })
    };
    let graph_only = |graph| Built {
        label: label.clone(),
        graph,
        geometry: None,
    };
    Ok(match key.as_str() {
        "w2" => from_geometry(label.clone(), w_s(2)?),
        "w4" => from_geometry(label.clone(), w_s(4)?),
        "gf3" => graph_only(gf3_plus_graph(need_n()?, eps.unwrap_or(1))?),
        "u" => graph_only(hermitian_nonisotropic_graph(need_n()?)?),
        "pg24" => from_geometry(label.clone(), pg24_with_hyperovals()?.plane),
        "hexagon" => from_geometry(label.clone(), pg24_with_hyperovals()?.hexagon),
        "octagon2" => from_geometry(label.clone(), flag_geometry(&w_s(2)?)?.0),
        "octagon4" => from_geometry(label.clone(), flag_geometry(&w_s(4)?)?.0),
        "sigma2" => graph_only(sigma2()),
        "sigma3" => graph_only(suzuki_extend(&sigma2())?.graph),
        "sigma4" => graph_only(suzuki_extend(&suzuki_extend(&sigma2())?.graph)?.graph),
        "d162" => graph_only(extended_hexagon_162(&pg24_with_hyperovals()?, 0)?.graph),
        other => {
            let kind: PolarKind = other.parse().map_err(|_| CatalogError::UnknownKind(kind.to_string()))?;
            from_geometry(label.clone(), polar_space(kind)?)
        }
    })
}

/// Summary record written by `build`; carries the graph as graph6 so that a
/// cached copy is enough to rebuild the graph.
pub fn build_json(b: &Built) -> Value {
    let srg = b.graph.srg_params().map(|p| json!([p.v, p.k, p.lambda, p.mu]));
    json!({
        "schema": BUILD_SCHEMA,
        "kind": b.label,
        "vertices": b.graph.order(),
        "edges": b.graph.edge_count(),
        "srg": srg,
        "graph6": to_graph6(&b.graph),
        "geometry": b.geometry.as_ref().map(|g| g.to_json()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_and_errors() {
        assert_eq!(label("GF3", Some(6), Some(-1)), "gf3_n6_eps-1");
        assert!(matches!(build("nope", None, None), Err(CatalogError::UnknownKind(_))));
        assert!(matches!(build("u", None, None), Err(CatalogError::MissingParameter { .. })));
        let b = build("gf3", Some(6), Some(1)).unwrap();
        assert_eq!(b.graph.order(), 126);
        assert_eq!(build_json(&b)["srg"], json!([126, 45, 12, 18]));
    }
}
