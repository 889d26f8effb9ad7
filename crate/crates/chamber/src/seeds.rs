//! Built-in seed maps. All rotations are clockwise as seen from outside the
//! solid (sphere seeds) or from a fixed side (torus seeds).

use crate::error::{Error, Result};
use crate::plane_graph::PlaneGraph;

pub fn tetrahedron() -> PlaneGraph {
    PlaneGraph::from_rotations(&[vec![2, 3, 1], vec![0, 3, 2], vec![1, 3, 0], vec![0, 2, 1]])
        .unwrap()
}

/// n-gonal prism; bottom ring 0..n, top ring n..2n, b_i below t_i.
pub fn prism(n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let b = |i: usize| (i + n) % n;
    let t = |i: usize| n + (i + n) % n;
    let mut adj = Vec::with_capacity(2 * n);
    for i in 0..n {
        adj.push(vec![b(i + n - 1), b(i + 1), t(i)]);
    }
    for i in 0..n {
        adj.push(vec![t(i + 1), t(i + n - 1), b(i)]);
    }
    PlaneGraph::from_rotations(&adj).unwrap()
}

/// n-gonal antiprism; t_i sits above the edge b_i b_{i+1}.
pub fn antiprism(n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let b = |i: usize| (i + n) % n;
    let t = |i: usize| n + (i + n) % n;
    let mut adj = Vec::with_capacity(2 * n);
    for i in 0..n {
        adj.push(vec![b(i + n - 1), b(i + 1), t(i), t(i + n - 1)]);
    }
    for i in 0..n {
        adj.push(vec![t(i + 1), t(i + n - 1), b(i), b(i + 1)]);
    }
    PlaneGraph::from_rotations(&adj).unwrap()
}

pub fn cube() -> PlaneGraph {
    prism(4)
}

pub fn octahedron() -> PlaneGraph {
    antiprism(3)
}

/// Pentagonal antiprism plus two apexes: bottom ring 0..5, top ring 5..10,
/// bottom apex 10, top apex 11.
pub fn icosahedron() -> PlaneGraph {
    let b = |i: usize| (i + 5) % 5;
    let t = |i: usize| 5 + (i + 5) % 5;
    let mut adj = Vec::with_capacity(12);
    for i in 0..5 {
        adj.push(vec![b(i + 4), 10, b(i + 1), t(i), t(i + 4)]);
    }
    for i in 0..5 {
        adj.push(vec![t(i + 1), 11, t(i + 4), b(i), b(i + 1)]);
    }
    adj.push(vec![b(0), b(4), b(3), b(2), b(1)]);
    adj.push(vec![t(0), t(1), t(2), t(3), t(4)]);
    PlaneGraph::from_rotations(&adj).unwrap()
}

pub fn dodecahedron() -> PlaneGraph {
    icosahedron().barycentric().dual().to_plane_graph()
}

/// Built independently of the operation machinery: one vertex per cube edge,
/// adjacency read off the cube's dart structure.
pub fn cuboctahedron() -> PlaneGraph {
    let c = cube();
    let nd = c.dart_count() as u32;
    let mut edge_of = vec![usize::MAX; nd as usize];
    let mut ne = 0;
    for d in 0..nd {
        if edge_of[d as usize] == usize::MAX {
            edge_of[d as usize] = ne;
            edge_of[c.twin(d) as usize] = ne;
            ne += 1;
        }
    }
    let mut adj = vec![Vec::new(); ne];
    for d in 0..nd {
        let dt = c.twin(d);
        if d < dt {
            adj[edge_of[d as usize]] = vec![
                edge_of[c.face_prev(d) as usize],
                edge_of[c.face_next(d) as usize],
                edge_of[c.face_prev(dt) as usize],
                edge_of[c.face_next(dt) as usize],
            ];
        }
    }
    PlaneGraph::from_rotations(&adj).unwrap()
}

/// Insert a new vertex inside the triangular face {x, y, z} of `adj` and join
/// it to the three corners.
fn stack_on_triangle(adj: &mut Vec<Vec<usize>>, corners: [usize; 3]) {
    let pg = PlaneGraph::from_rotations(adj).unwrap();
    let cycle = pg
        .faces()
        .into_iter()
        .find(|walk| {
            walk.len() == 3 && {
                let mut vs: Vec<usize> = walk.iter().map(|&d| pg.vert(d) as usize).collect();
                vs.sort_unstable();
                let mut cs = corners.to_vec();
                cs.sort_unstable();
                vs == cs
            }
        })
        .expect("no triangular face with those corners");
    let w = adj.len();
    let mut new_rot = Vec::with_capacity(3);
    // collect insertion points first; all positions refer to the same snapshot
    let mut inserts = Vec::with_capacity(3);
    for &d in &cycle {
        let u = pg.vert(d) as usize;
        let mut pos = 0;
        for e in 0..d {
            if pg.vert(e) == pg.vert(d) {
                pos += 1;
            }
        }
        inserts.push((u, pos as usize));
    }
    for &(u, pos) in &inserts {
        adj[u].insert(pos, w);
    }
    for &d in cycle.iter().rev() {
        new_rot.push(pg.vert(d) as usize);
    }
    adj.push(new_rot);
}

/// Fixed 11-vertex triangulation with trivial symmetry group: a chain of
/// stackings on the tetrahedron, kinked at the last step so no relabeling
/// reverses it.
pub fn asymmetric() -> PlaneGraph {
    let mut adj: Vec<Vec<usize>> = vec![vec![2, 3, 1], vec![0, 3, 2], vec![1, 3, 0], vec![0, 2, 1]];
    for corners in [[1, 2, 3], [2, 3, 4], [3, 4, 5], [4, 5, 6], [5, 6, 7], [6, 7, 8], [6, 8, 9]] {
        stack_on_triangle(&mut adj, corners);
    }
    PlaneGraph::from_rotations(&adj).unwrap()
}

/// 3x3 quadrangulation of the torus.
pub fn torus_quad() -> PlaneGraph {
    let id = |r: usize, c: usize| 3 * (r % 3) + (c % 3);
    let mut adj = Vec::with_capacity(9);
    for r in 0..3 {
        for c in 0..3 {
            adj.push(vec![id(r, c + 1), id(r + 1, c), id(r, c + 2), id(r + 2, c)]);
        }
    }
    PlaneGraph::from_rotations(&adj).unwrap()
}

/// Hexagonal map on the torus: honeycomb with a 3x3 fundamental domain.
pub fn torus_hex() -> PlaneGraph {
    let a = |r: usize, c: usize| 3 * (r % 3) + (c % 3);
    let b = |r: usize, c: usize| 9 + 3 * (r % 3) + (c % 3);
    let mut adj = vec![Vec::new(); 18];
    for r in 0..3 {
        for c in 0..3 {
            adj[a(r, c)] = vec![b(r, c), b(r, c + 2), b(r + 2, c)];
            adj[b(r, c)] = vec![a(r, c), a(r, c + 1), a(r + 1, c)];
        }
    }
    PlaneGraph::from_rotations(&adj).unwrap()
}

pub const SPHERE_NAMES: [&str; 17] = [
    "tetrahedron",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
    "cuboctahedron",
    "prism3",
    "prism4",
    "prism5",
    "prism6",
    "prism7",
    "prism8",
    "antiprism3",
    "antiprism4",
    "antiprism5",
    "antiprism6",
    "asymmetric",
];

pub const TORUS_NAMES: [&str; 2] = ["torus-quad", "torus-hex"];

pub fn names() -> Vec<&'static str> {
    SPHERE_NAMES.iter().chain(TORUS_NAMES.iter()).copied().collect()
}

pub fn seed(name: &str) -> Result<PlaneGraph> {
    match name {
        "tetrahedron" => Ok(tetrahedron()),
        "cube" => Ok(cube()),
        "octahedron" => Ok(octahedron()),
        "dodecahedron" => Ok(dodecahedron()),
        "icosahedron" => Ok(icosahedron()),
        "cuboctahedron" => Ok(cuboctahedron()),
        "asymmetric" => Ok(asymmetric()),
        "torus-quad" => Ok(torus_quad()),
        "torus-hex" => Ok(torus_hex()),
        _ => {
            if let Some(n) = name.strip_prefix("prism") {
                if let Ok(n) = n.parse::<usize>() {
                    if (3..=8).contains(&n) {
                        return Ok(prism(n));
                    }
                }
            }
            if let Some(n) = name.strip_prefix("antiprism") {
                if let Ok(n) = n.parse::<usize>() {
                    if (3..=6).contains(&n) {
                        return Ok(antiprism(n));
                    }
                }
            }
            Err(Error::UnknownSeed(name.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::automorphism_orders;
    use std::collections::BTreeMap;

    fn counts_of(pg: &PlaneGraph) -> (usize, usize, usize, i64) {
        (pg.vertex_count(), pg.edge_count(), pg.face_count(), pg.euler())
    }

    #[test]
    fn platonic_counts() {
        assert_eq!(counts_of(&tetrahedron()), (4, 6, 4, 2));
        assert_eq!(counts_of(&cube()), (8, 12, 6, 2));
        assert_eq!(counts_of(&octahedron()), (6, 12, 8, 2));
        assert_eq!(counts_of(&dodecahedron()), (20, 30, 12, 2));
        assert_eq!(counts_of(&icosahedron()), (12, 30, 20, 2));
    }

    #[test]
    fn platonic_face_vectors() {
        let c = cube().barycentric().counts();
        assert_eq!(c.face_sizes, BTreeMap::from([(4, 6)]));
        assert_eq!(c.degrees, BTreeMap::from([(3, 8)]));
        let d = dodecahedron().barycentric().counts();
        assert_eq!(d.face_sizes, BTreeMap::from([(5, 12)]));
        assert_eq!(d.degrees, BTreeMap::from([(3, 20)]));
    }

    #[test]
    fn platonic_symmetries() {
        assert_eq!(automorphism_orders(&tetrahedron().barycentric()), (24, 12));
        assert_eq!(automorphism_orders(&cube().barycentric()), (48, 24));
        assert_eq!(automorphism_orders(&octahedron().barycentric()), (48, 24));
        assert_eq!(automorphism_orders(&dodecahedron().barycentric()), (120, 60));
        assert_eq!(automorphism_orders(&icosahedron().barycentric()), (120, 60));
    }

    #[test]
    fn cuboctahedron_shape() {
        let pg = cuboctahedron();
        assert_eq!(counts_of(&pg), (12, 24, 14, 2));
        let c = pg.barycentric().counts();
        assert_eq!(c.face_sizes, BTreeMap::from([(3, 8), (4, 6)]));
        assert_eq!(c.degrees, BTreeMap::from([(4, 12)]));
        assert_eq!(automorphism_orders(&pg.barycentric()), (48, 24));
    }

    #[test]
    fn prism_antiprism_shapes() {
        for n in 3..=8 {
            let c = prism(n).barycentric().counts();
            assert_eq!((c.v, c.e, c.f, c.chi), (2 * n, 3 * n, n + 2, 2));
            let squares = if n == 4 { 6 } else { n };
            assert_eq!(c.face_sizes.get(&4), Some(&squares));
        }
        for n in 3..=6 {
            let c = antiprism(n).barycentric().counts();
            assert_eq!((c.v, c.e, c.f, c.chi), (2 * n, 4 * n, 2 * n + 2, 2));
            let tris = if n == 3 { 8 } else { 2 * n };
            assert_eq!(c.face_sizes.get(&3), Some(&tris));
        }
        // hexagonal prism has a richer symmetry group than the pentagonal one
        assert_eq!(automorphism_orders(&prism(6).barycentric()), (24, 12));
        assert_eq!(automorphism_orders(&prism(5).barycentric()), (20, 10));
        assert_eq!(automorphism_orders(&antiprism(4).barycentric()), (16, 8));
    }

    #[test]
    fn asymmetric_seed_has_trivial_group() {
        let pg = asymmetric();
        assert_eq!(counts_of(&pg), (11, 27, 18, 2));
        assert_eq!(automorphism_orders(&pg.barycentric()), (1, 1));
    }

    #[test]
    fn torus_seeds() {
        let q = torus_quad();
        assert_eq!(counts_of(&q), (9, 18, 9, 0));
        let qc = q.barycentric().counts();
        assert_eq!(qc.face_sizes, BTreeMap::from([(4, 9)]));
        let h = torus_hex();
        assert_eq!(counts_of(&h), (18, 27, 9, 0));
        let hc = h.barycentric().counts();
        assert_eq!(hc.face_sizes, BTreeMap::from([(6, 9)]));
    }

    #[test]
    fn registry_resolves_every_name() {
        for name in names() {
            assert!(seed(name).is_ok(), "{name}");
        }
        assert!(seed("hosohedron").is_err());
        assert!(seed("prism9").is_err());
        assert!(seed("antiprism7").is_err());
    }

    #[test]
    fn sphere_seeds_are_spheres() {
        for name in SPHERE_NAMES {
            assert_eq!(seed(name).unwrap().euler(), 2, "{name}");
        }
        for name in TORUS_NAMES {
            assert_eq!(seed(name).unwrap().euler(), 0, "{name}");
        }
    }
}
