//! PSL(3,4) acting on PG(2,4) and its orbits on the 168 hyperovals.

use std::collections::HashMap;

use serde::Serialize;

use super::SynthesisError;
use crate::fields::{make_field, normalize, Elem};
use crate::group::{group_closure, Perm, PermGroup};
use crate::spaces::{Geometry, PlaneWithHyperovals};

/// Point permutation of a 3×3 matrix acting on column vectors.
fn matrix_perm(plane: &Geometry, m: &[Elem; 9]) -> Perm {
    let f = make_field(4).expect("GF(4)");
    plane
        .points()
        .iter()
        .map(|p| {
            let img: Vec<Elem> = (0..3)
                .map(|i| (0..3).fold(0, |acc, j| f.add(acc, f.mul(m[3 * i + j], p[j]))))
                .collect();
            let img = normalize(&f, &img).expect("invertible matrix");
            plane.points().binary_search(&img).expect("image is a point") as u32
        })
        .collect()
}

/// PSL(3,4) generated by elementary transvections `I + a·E_ij`.
pub fn psl3_4(plane: &Geometry) -> Result<PermGroup, SynthesisError> {
    if plane.point_count() != 21 || plane.points().is_empty() {
        return Err(SynthesisError::PreconditionViolated("expected coordinatized PG(2,4)".into()));
    }
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            for a in [1, 2] {
                let mut m = [0; 9];
                for k in 0..3 {
                    m[4 * k] = 1;
                }
                m[3 * i + j] = a;
                gens.push(matrix_perm(plane, &m));
            }
        }
    }
    Ok(group_closure(&gens, 100_000)?)
}

#[derive(Debug, Clone, Serialize)]
pub struct HyperovalOrbits {
    pub group_order: usize,
    /// Orbits as sorted hyperoval indices, sorted by least member.
    pub orbits: Vec<Vec<usize>>,
    /// Stabilizer order of each hyperoval (by index).
    pub stabilizer_orders: Vec<usize>,
    /// Whether the orbits coincide with the even-intersection classes.
    pub orbits_match_classes: bool,
}

pub fn hyperoval_orbits(pg: &PlaneWithHyperovals, grp: &PermGroup) -> HyperovalOrbits {
    let index: HashMap<&Vec<usize>, usize> = pg.hyperovals.iter().enumerate().map(|(i, h)| (h, i)).collect();
    let m = pg.hyperovals.len();
    let image = |g: &Perm, h: &[usize]| -> usize {
        let mut img: Vec<usize> = h.iter().map(|&p| g[p] as usize).collect();
        img.sort_unstable();
        index[&img]
    };
    let mut orbit_of = vec![usize::MAX; m];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let h = members[i];
            for g in grp.generators() {
                let j = image(g, &pg.hyperovals[h]);
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        orbits.push(members);
    }
    let stabilizer_orders = (0..m)
        .map(|h| {
            grp.elements()
                .iter()
                .filter(|g| image(g, &pg.hyperovals[h]) == h)
                .count()
        })
        .collect();
    let mut classes = pg.classes.clone();
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort();
    HyperovalOrbits {
        group_order: grp.order(),
        orbits_match_classes: classes == orbits,
        orbits,
        stabilizer_orders,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::pg24_with_hyperovals;

    #[test]
    fn psl_orbits_are_even_classes() {
        let pg = pg24_with_hyperovals().unwrap();
        let grp = psl3_4(&pg.plane).unwrap();
        assert_eq!(grp.order(), 20160);
        let o = hyperoval_orbits(&pg, &grp);
        assert_eq!(o.orbits.iter().map(|x| x.len()).collect::<Vec<_>>(), vec![56, 56, 56]);
        assert!(o.orbits_match_classes);
        assert!(o.stabilizer_orders.iter().all(|&s| s == 360));
    }
}
