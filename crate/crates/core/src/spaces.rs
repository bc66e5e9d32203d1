//! Finite geometries built from forms: classical polar spaces over GF(2),
//! GF(3) and GF(4), the symplectic quadrangles W(s), flag geometries of
//! generalized polygons, and PG(2,4) with its hyperovals.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::fields::{
    encode, make_field, normalize, point_class, projective_points, standard_gram, w_form, Elem,
    FieldError, FieldTable, Form, FormKind, PointClass,
};
use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum SpaceError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("not a generalized polygon: {0}")]
    NotGeneralizedPolygon(String),
    #[error("unknown geometry kind `{0}`")]
    UnknownKind(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

/// The classical polar spaces (and small relatives) with fixed models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolarKind {
    /// W(3): alternating form on GF(3)^4, GQ(3,3).
    W3,
    /// Q(4,3): parabolic quadric in PG(4,3), GQ(3,3).
    Q4_3,
    /// Q+(5,4): hyperbolic quadric in PG(5,4).
    Q5plus4,
    /// W(5,4): symplectic space on GF(4)^6.
    S5_4,
    /// Q−(7,4): elliptic quadric in PG(7,4).
    Q7minus4,
    /// H(5,4): hermitian space on GF(4)^6.
    H5_4,
    /// H(6,4): hermitian space on GF(4)^7.
    H6_4,
    /// W(5,2): symplectic space on GF(2)^6.
    Sp6_2,
    /// H(3,4): hermitian GQ(4,2).
    H3_4,
}

impl PolarKind {
    pub const ALL: [PolarKind; 9] = [
        PolarKind::W3,
        PolarKind::Q4_3,
        PolarKind::Q5plus4,
        PolarKind::S5_4,
        PolarKind::Q7minus4,
        PolarKind::H5_4,
        PolarKind::H6_4,
        PolarKind::Sp6_2,
        PolarKind::H3_4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolarKind::W3 => "w3",
            PolarKind::Q4_3 => "q4_3",
            PolarKind::Q5plus4 => "q5plus4",
            PolarKind::S5_4 => "s5_4",
            PolarKind::Q7minus4 => "q7minus4",
            PolarKind::H5_4 => "h5_4",
            PolarKind::H6_4 => "h6_4",
            PolarKind::Sp6_2 => "sp6_2",
            PolarKind::H3_4 => "h3_4",
        }
    }

    /// The form defining the model.
    pub fn form(self) -> Result<Form, FieldError> {
        match self {
            PolarKind::W3 => w_form(3),
            PolarKind::Q4_3 => standard_gram(FormKind::SymmetricBilinear, 3, 5, 1),
            PolarKind::Q5plus4 => standard_gram(FormKind::Quadratic, 4, 6, 1),
            PolarKind::S5_4 => standard_gram(FormKind::Alternating, 4, 6, 1),
            PolarKind::Q7minus4 => standard_gram(FormKind::Quadratic, 4, 8, -1),
            PolarKind::H5_4 => standard_gram(FormKind::Hermitian, 4, 6, 1),
            PolarKind::H6_4 => standard_gram(FormKind::Hermitian, 4, 7, 1),
            PolarKind::Sp6_2 => standard_gram(FormKind::Alternating, 2, 6, 1),
            PolarKind::H3_4 => standard_gram(FormKind::Hermitian, 4, 4, 1),
        }
    }
}

impl fmt::Display for PolarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolarKind {
    type Err = SpaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        PolarKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| SpaceError::UnknownKind(s.to_string()))
    }
}

/// A point-line geometry. Classical models keep coordinates and the form.
#[derive(Debug, Clone)]
pub struct Geometry {
    kind: String,
    points: Vec<Vec<Elem>>,
    lines: Vec<Vec<usize>>,
    point_lines: Vec<Vec<usize>>,
    form: Option<Form>,
}

impl Geometry {
    /// Abstract geometry from lines over points `0..n`. Lines are sorted and
    /// deduplicated.
    pub fn from_lines(kind: impl Into<String>, n: usize, lines: Vec<Vec<usize>>) -> Geometry {
        let mut lines: Vec<Vec<usize>> = lines
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        lines.sort();
        lines.dedup();
        let mut point_lines = vec![Vec::new(); n];
        for (i, l) in lines.iter().enumerate() {
            assert!(l.len() >= 2, "lines need at least two points");
            for &p in l {
                point_lines[p].push(i);
            }
        }
        Geometry {
            kind: kind.into(),
            points: Vec::new(),
            lines,
            point_lines,
            form: None,
        }
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn point_count(&self) -> usize {
        self.point_lines.len()
    }

    pub fn points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.point_lines[p]
    }

    pub fn form(&self) -> Option<&Form> {
        self.form.as_ref()
    }

    /// Index of a point given by coordinates (any scalar multiple).
    pub fn point_index(&self, v: &[Elem]) -> Option<usize> {
        let f = self.form.as_ref()?.field();
        let nv = normalize(f, v)?;
        self.points.binary_search(&nv).ok()
    }

    pub fn collinearity_graph(&self) -> Graph {
        let n = self.point_count();
        Graph::from_rows_fn(n, |p| {
            let mut row = VertexSet::new(n);
            for &l in &self.point_lines[p] {
                for &x in &self.lines[l] {
                    if x != p {
                        row.insert(x);
                    }
                }
            }
            row
        })
    }

    /// Bipartite point-line incidence graph; lines follow the points.
    pub fn incidence_graph(&self) -> Graph {
        let n = self.point_count();
        let mut g = Graph::empty(n + self.lines.len());
        for (i, l) in self.lines.iter().enumerate() {
            for &p in l {
                g.add_edge(p, n + i);
            }
        }
        g
    }

    /// Points `x` with `f(x, p) = 0` for an ambient vector `p`.
    pub fn perp_section(&self, p: &[Elem]) -> VertexSet {
        let form = self.form.as_ref().expect("perp_section needs a classical model");
        let c = form.functional(p);
        VertexSet::from_indices(
            self.point_count(),
            (0..self.point_count()).filter(|&i| form.apply_functional(&c, &self.points[i]) == 0),
        )
    }

    /// Sub-geometry on a point subset: lines fully inside it. Point `i` of
    /// the result is the `i`-th smallest member of `subset`.
    pub fn restrict(&self, subset: &VertexSet) -> Geometry {
        let members = subset.to_vec();
        let mut index = vec![usize::MAX; self.point_count()];
        for (i, &p) in members.iter().enumerate() {
            index[p] = i;
        }
        let lines = self
            .lines
            .iter()
            .filter(|l| l.iter().all(|&p| subset.contains(p)))
            .map(|l| l.iter().map(|&p| index[p]).collect())
            .collect();
        let mut g = Geometry::from_lines(format!("{}|restricted", self.kind), members.len(), lines);
        if !self.points.is_empty() {
            g.points = members.iter().map(|&p| self.points[p].clone()).collect();
            g.form = self.form.clone();
        }
        g
    }

    /// Checks the generalized-quadrangle axioms; returns `(s, t)`.
    pub fn gq_order(&self) -> Option<(usize, usize)> {
        let s1 = self.lines.first()?.len();
        let t1 = self.point_lines.first()?.len();
        if self.lines.iter().any(|l| l.len() != s1) || self.point_lines.iter().any(|l| l.len() != t1) {
            return None;
        }
        let col = self.collinearity_graph();
        for (li, l) in self.lines.iter().enumerate() {
            let on: VertexSet = VertexSet::from_indices(self.point_count(), l.iter().copied());
            for p in 0..self.point_count() {
                if self.point_lines[p].contains(&li) {
                    continue;
                }
                if col.neighbors(p).intersection_count(&on) != 1 {
                    return None;
                }
            }
        }
        Some((s1 - 1, t1 - 1))
    }

    pub fn to_json(&self) -> GeometryJson {
        GeometryJson {
            schema: "geomforge-geometry/1".into(),
            kind: self.kind.clone(),
            point_count: self.point_count(),
            points: self.points.clone(),
            lines: self.lines.clone(),
            form: self.form.as_ref().map(|f| FormJson {
                kind: f.kind(),
                field_order: f.field().order(),
                dim: f.dim(),
                gram: f.gram().to_vec(),
                quadratic: f.quadratic_coefficients().map(|q| q.to_vec()),
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FormJson {
    pub kind: FormKind,
    pub field_order: usize,
    pub dim: usize,
    pub gram: Vec<Elem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadratic: Option<Vec<Elem>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GeometryJson {
    pub schema: String,
    pub kind: String,
    pub point_count: usize,
    pub points: Vec<Vec<Elem>>,
    pub lines: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<FormJson>,
}

/// Polar space of the singular points of `form` with its totally singular
/// lines. Points are listed in lexicographic order of normalized coordinates.
pub fn polar_space_of(kind: impl Into<String>, form: Form) -> Geometry {
    let f = form.field().clone();
    let q = f.order();
    let n = form.dim();
    let points: Vec<Vec<Elem>> = projective_points(&f, n)
        .into_iter()
        .filter(|p| form.is_singular(p))
        .collect();
    let mut lookup = vec![usize::MAX; q.pow(n as u32)];
    for (i, p) in points.iter().enumerate() {
        lookup[encode(q, p)] = i;
    }
    let lines: Vec<Vec<usize>> = (0..points.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let c = form.functional(&points[i]);
            let mut out = Vec::new();
            for j in i + 1..points.len() {
                if form.apply_functional(&c, &points[j]) != 0 {
                    continue;
                }
                let line = span_points(&f, &points[i], &points[j], &lookup);
                if line[0] == i && line[1] == j {
                    out.push(line);
                }
            }
            out
        })
        .collect();
    let mut g = Geometry::from_lines(kind, points.len(), lines);
    g.points = points;
    g.form = Some(form);
    g
}

/// Sorted indices of the points on the line through `a` and `b`.
fn span_points(f: &FieldTable, a: &[Elem], b: &[Elem], lookup: &[usize]) -> Vec<usize> {
    let q = f.order();
    let mut out = vec![lookup[encode(q, a)]];
    for lam in f.elements() {
        let v: Vec<Elem> = a.iter().zip(b).map(|(&x, &y)| f.add(y, f.mul(lam, x))).collect();
        let nv = normalize(f, &v).expect("distinct points span a line");
        let idx = lookup[encode(q, &nv)];
        assert!(idx != usize::MAX, "line point is not singular");
        out.push(idx);
    }
    out.sort_unstable();
    out
}

pub fn polar_space(kind: PolarKind) -> Result<Geometry, SpaceError> {
    Ok(polar_space_of(kind.name(), kind.form()?))
}

/// The symplectic quadrangle W(s), s ∈ {2, 3, 4}.
pub fn w_s(s: u32) -> Result<Geometry, SpaceError> {
    if !(2..=4).contains(&s) {
        return Err(FieldError::UnsupportedOrder(s).into());
    }
    Ok(polar_space_of(format!("w{s}"), w_form(s)?))
}

/// Bipartite incidence graph check: a generalized n-gon has incidence graph
/// of girth 2n and diameter n. Returns n.
pub fn generalized_polygon_order(geo: &Geometry) -> Option<usize> {
    let inc = geo.incidence_graph();
    let girth = inc.girth()?;
    let diam = inc.diameter()?;
    (girth == 2 * diam && geo.lines.iter().all(|l| l.len() >= 2)).then_some(diam)
}

/// Flags of a geometry as (point, line) pairs, sorted.
pub fn flags(geo: &Geometry) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (0..geo.point_count())
        .flat_map(|p| geo.point_lines[p].iter().map(move |&l| (p, l)))
        .collect();
    out.sort_unstable();
    out
}

/// The flag geometry: points are flags, lines are the original points and
/// original lines (each a set of flags). Original points come first.
pub fn flag_geometry(gp: &Geometry) -> Result<(Geometry, Vec<(usize, usize)>), SpaceError> {
    let order = generalized_polygon_order(gp).ok_or_else(|| {
        SpaceError::NotGeneralizedPolygon(format!("incidence graph of {} fails girth/diameter test", gp.kind))
    })?;
    let fl = flags(gp);
    let index: HashMap<(usize, usize), usize> = fl.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut lines = Vec::new();
    for p in 0..gp.point_count() {
        lines.push(gp.point_lines[p].iter().map(|&l| index[&(p, l)]).collect());
    }
    for (li, l) in gp.lines.iter().enumerate() {
        lines.push(l.iter().map(|&p| index[&(p, li)]).collect());
    }
    let geo = Geometry::from_lines(format!("{}^F({}-gon)", gp.kind, 2 * order), fl.len(), lines);
    Ok((geo, fl))
}

/// Σ^ε_n: (+)-points of GF(3)^n under `diag(1,…,1,ε)`, adjacent when
/// perpendicular. Vertex order follows the coordinates of [`gf3_plus_points`].
pub fn gf3_plus_graph(n: usize, eps: i8) -> Result<Graph, SpaceError> {
    let (form, pts) = gf3_plus_points(n, eps)?;
    Ok(perp_graph(&form, &pts))
}

/// The form and (+)-points behind [`gf3_plus_graph`].
pub fn gf3_plus_points(n: usize, eps: i8) -> Result<(Form, Vec<Vec<Elem>>), SpaceError> {
    if !(3..=8).contains(&n) {
        return Err(SpaceError::OutOfRange(format!("GF(3) dimension {n} not in 3..=8")));
    }
    let form = standard_gram(FormKind::SymmetricBilinear, 3, n, eps)?;
    let pts = projective_points(form.field(), n)
        .into_iter()
        .filter(|p| point_class(&form, p) == Ok(PointClass::Plus))
        .collect();
    Ok((form, pts))
}

/// Outcome of matching the μ-graphs of Σ^ε_n against isotropic perps.
#[derive(Debug, Clone, Serialize)]
pub struct MuPerpReport {
    pub vertices: usize,
    /// Ordered pairs `(u, v)` at distance 2 that were checked.
    pub pairs: usize,
    /// Pairs with `Γ(u,v) = Γ(u) ∩ p^⊥` for exactly one isotropic
    /// `p ⊂ u^⊥`.
    pub matched_uniquely: usize,
}

impl MuPerpReport {
    pub fn holds(&self) -> bool {
        self.pairs > 0 && self.pairs == self.matched_uniquely
    }
}

/// For every vertex `u` of Σ^ε_n and `v` at distance 2, counts the
/// isotropic points `p` of `u^⊥` whose perp cuts `Γ(u)` in exactly `Γ(u,v)`.
pub fn gf3_mu_perp_check(n: usize, eps: i8) -> Result<MuPerpReport, SpaceError> {
    let (form, pts) = gf3_plus_points(n, eps)?;
    let g = perp_graph(&form, &pts);
    let isotropic: Vec<Vec<Elem>> = projective_points(form.field(), n)
        .into_iter()
        .filter(|p| point_class(&form, p) == Ok(PointClass::Isotropic))
        .collect();
    let v = g.order();
    let (pairs, matched_uniquely) = (0..v)
        .into_par_iter()
        .map(|u| {
            let nbrs = g.neighbors(u);
            let mut traces: HashMap<VertexSet, usize> = HashMap::new();
            for p in isotropic.iter().filter(|p| form.eval_unchecked(p, &pts[u]) == 0) {
                let c = form.functional(p);
                let t = VertexSet::from_indices(v, nbrs.iter().filter(|&j| form.apply_functional(&c, &pts[j]) == 0));
                *traces.entry(t).or_insert(0) += 1;
            }
            let mut pairs = 0;
            let mut ok = 0;
            for w in 0..v {
                if w == u || g.adjacent(u, w) || g.common_neighbor_count(u, w) == 0 {
                    continue;
                }
                pairs += 1;
                if traces.get(&g.common_neighbors(u, w)) == Some(&1) {
                    ok += 1;
                }
            }
            (pairs, ok)
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    Ok(MuPerpReport {
        vertices: v,
        pairs,
        matched_uniquely,
    })
}

/// U_n: nonisotropic points of the hermitian form on GF(4)^n, adjacent when
/// perpendicular.
pub fn hermitian_nonisotropic_graph(n: usize) -> Result<Graph, SpaceError> {
    let (form, pts) = hermitian_nonisotropic_points(n)?;
    Ok(perp_graph(&form, &pts))
}

pub fn hermitian_nonisotropic_points(n: usize) -> Result<(Form, Vec<Vec<Elem>>), SpaceError> {
    if !(2..=7).contains(&n) {
        return Err(SpaceError::OutOfRange(format!("hermitian dimension {n} not in 2..=7")));
    }
    let form = standard_gram(FormKind::Hermitian, 4, n, 1)?;
    let pts = projective_points(form.field(), n)
        .into_iter()
        .filter(|p| !form.is_singular(p))
        .collect();
    Ok((form, pts))
}

/// Graph on the given vectors, adjacent when perpendicular.
pub fn perp_graph(form: &Form, pts: &[Vec<Elem>]) -> Graph {
    let n = pts.len();
    Graph::from_rows_fn(n, |i| {
        let c = form.functional(&pts[i]);
        VertexSet::from_indices(
            n,
            (0..n).filter(|&j| j != i && form.apply_functional(&c, &pts[j]) == 0),
        )
    })
}

/// PG(2,4) with its hyperovals and the even-intersection partition.
#[derive(Debug, Clone)]
pub struct PlaneWithHyperovals {
    pub plane: Geometry,
    /// Flag hexagon GH(4,1): points are flags of the plane.
    pub hexagon: Geometry,
    pub flags: Vec<(usize, usize)>,
    /// Sorted 6-point sets.
    pub hyperovals: Vec<Vec<usize>>,
    /// Classes of hyperoval indices under the transitive closure of
    /// "meet in an even number of points".
    pub classes: Vec<Vec<usize>>,
}

/// The projective plane PG(2,q) from the standard dot product.
pub fn projective_plane(q: u32) -> Result<Geometry, SpaceError> {
    let f = make_field(q)?;
    let pts = projective_points(&f, 3);
    let lines: Vec<Vec<usize>> = pts
        .iter()
        .map(|l| {
            (0..pts.len())
                .filter(|&i| {
                    let d = (0..3).fold(0, |acc, k| f.add(acc, f.mul(l[k], pts[i][k])));
                    d == 0
                })
                .collect()
        })
        .collect();
    let mut g = Geometry::from_lines(format!("pg2_{q}"), pts.len(), lines);
    g.points = pts;
    Ok(g)
}

/// All sets of `q + 2` points of PG(2,q), no three collinear.
pub fn plane_hyperovals(plane: &Geometry) -> Vec<Vec<usize>> {
    let n = plane.point_count();
    let size = plane.lines[0].len() + 1;
    // for each pair, the third points on their line
    let mut line_of = vec![vec![usize::MAX; n]; n];
    for (li, l) in plane.lines.iter().enumerate() {
        for &a in l {
            for &b in l {
                line_of[a][b] = li;
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        plane: &Geometry,
        line_of: &[Vec<usize>],
        size: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for p in start..plane.point_count() {
            let ok = cur.iter().enumerate().all(|(i, &a)| {
                cur[i + 1..].iter().all(|&b| !plane.lines[line_of[a][b]].contains(&p))
            });
            if ok {
                cur.push(p);
                rec(plane, line_of, size, p + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(plane, &line_of, size, 0, &mut cur, &mut out);
    out
}

pub fn pg24_with_hyperovals() -> Result<PlaneWithHyperovals, SpaceError> {
    let plane = projective_plane(4)?;
    let (hexagon, flags) = flag_geometry(&plane)?;
    let hyperovals = plane_hyperovals(&plane);
    let m = hyperovals.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in 0..m {
        for j in i + 1..m {
            let common = hyperovals[i].iter().filter(|x| hyperovals[j].contains(x)).count();
            if common % 2 == 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..m {
        let r = find(&mut parent, i);
        by_root.entry(r).or_default().push(i);
    }
    Ok(PlaneWithHyperovals {
        plane,
        hexagon,
        flags,
        hyperovals,
        classes: by_root.into_values().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SrgParams;

    #[test]
    fn small_polar_spaces() {
        let w3 = polar_space(PolarKind::W3).unwrap();
        assert_eq!(w3.point_count(), 40);
        assert_eq!(w3.lines().len(), 40);
        assert_eq!(w3.gq_order(), Some((3, 3)));
        assert_eq!(w3.collinearity_graph().srg_params(), Some(SrgParams::new(40, 12, 2, 4)));
        let q43 = polar_space(PolarKind::Q4_3).unwrap();
        assert_eq!(q43.gq_order(), Some((3, 3)));
        let h34 = polar_space(PolarKind::H3_4).unwrap();
        assert_eq!(h34.gq_order(), Some((4, 2)));
        assert_eq!(h34.collinearity_graph().srg_params(), Some(SrgParams::new(45, 12, 3, 3)));
        let sp = polar_space(PolarKind::Sp6_2).unwrap();
        assert_eq!(sp.collinearity_graph().srg_params(), Some(SrgParams::new(63, 30, 13, 15)));
    }

    #[test]
    fn w_s_examples() {
        assert_eq!(w_s(2).unwrap().point_count(), 15);
        assert_eq!(w_s(4).unwrap().point_count(), 85);
        assert_eq!(w_s(4).unwrap().gq_order(), Some((4, 4)));
        assert!(w_s(5).is_err());
    }

    #[test]
    fn flag_geometry_examples() {
        let (f2, _) = flag_geometry(&w_s(2).unwrap()).unwrap();
        assert_eq!(f2.point_count(), 45);
        assert!((0..45).all(|p| f2.lines_through(p).len() == 2));
        assert_eq!(generalized_polygon_order(&f2), Some(8));
        let single = Geometry::from_lines("line", 3, vec![vec![0, 1, 2]]);
        assert_eq!(single.collinearity_graph(), Graph::complete(3));
        assert!(flag_geometry(&single).is_err());
    }

    #[test]
    fn plane_examples() {
        let p = pg24_with_hyperovals().unwrap();
        assert_eq!(p.plane.point_count(), 21);
        assert_eq!(p.flags.len(), 105);
        assert_eq!(p.hyperovals.len(), 168);
        let sizes: Vec<usize> = p.classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![56, 56, 56]);
        assert_eq!(generalized_polygon_order(&p.hexagon), Some(6));
    }

    #[test]
    fn nonisotropic_graphs() {
        assert_eq!(hermitian_nonisotropic_graph(4).unwrap().order(), 40);
        assert_eq!(hermitian_nonisotropic_graph(5).unwrap().order(), 176);
        assert_eq!(
            gf3_plus_graph(6, 1).unwrap().srg_params(),
            Some(SrgParams::new(126, 45, 12, 18))
        );
        assert!(gf3_plus_graph(9, 1).is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in PolarKind::ALL {
            assert_eq!(k.name().parse::<PolarKind>().unwrap(), k);
        }
        assert!("nope".parse::<PolarKind>().is_err());
    }
}
