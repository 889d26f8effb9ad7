//! Hand-built reference objects for tests, constructed by methods that are
//! independent of the code under test.

use std::collections::BTreeMap;

use crate::chamber::ChamberSystem;
use crate::plane_graph::PlaneGraph;

/// Truncation built directly on the rotation system: one vertex per dart,
/// joined to its edge partner and to the neighboring darts around the old
/// vertex. Orientation may come out mirrored, which no achiral comparison
/// can see.
pub fn truncation_oracle(pg: &PlaneGraph) -> PlaneGraph {
    let nd = pg.dart_count();
    let mut adj = Vec::with_capacity(nd);
    for d in 0..nd as u32 {
        adj.push(vec![pg.twin(d) as usize, pg.rot(d) as usize, pg.rot_inv(d) as usize]);
    }
    PlaneGraph::from_rotations(&adj).unwrap()
}

/// Tetrahedron chamber system built straight from incidence triples
/// (vertex, edge, face): s0 swaps the vertex within the edge, s1 swaps the
/// edge within the face at the vertex, s2 swaps the face across the edge.
pub fn incidence_tetrahedron() -> ChamberSystem {
    let faces: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let edges: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

    let mut flags: Vec<(usize, usize, usize)> = Vec::new();
    for (fi, f) in faces.iter().enumerate() {
        for (ei, e) in edges.iter().enumerate() {
            if e.iter().all(|v| f.contains(v)) {
                for &v in e {
                    flags.push((v, ei, fi));
                }
            }
        }
    }
    flags.sort_unstable();
    assert_eq!(flags.len(), 24);
    let index: BTreeMap<(usize, usize, usize), u32> =
        flags.iter().enumerate().map(|(i, &t)| (t, i as u32)).collect();

    let mut s0 = vec![0u32; 24];
    let mut s1 = vec![0u32; 24];
    let mut s2 = vec![0u32; 24];
    for (i, &(v, e, f)) in flags.iter().enumerate() {
        let v2 = edges[e].iter().copied().find(|&u| u != v).unwrap();
        s0[i] = index[&(v2, e, f)];
        let e2 = (0..6)
            .find(|&j| {
                j != e && edges[j].contains(&v) && edges[j].iter().all(|u| faces[f].contains(u))
            })
            .unwrap();
        s1[i] = index[&(v, e2, f)];
        let f2 = (0..4).find(|&g| g != f && edges[e].iter().all(|u| faces[g].contains(u))).unwrap();
        s2[i] = index[&(v, e, f2)];
    }

    // 2-color by parity of BFS distance
    let mut color = vec![u8::MAX; 24];
    color[0] = 0;
    let mut queue = vec![0u32];
    while let Some(x) = queue.pop() {
        for s in [&s0, &s1, &s2] {
            let y = s[x as usize];
            if color[y as usize] == u8::MAX {
                color[y as usize] = 1 - color[x as usize];
                queue.push(y);
            }
        }
    }
    ChamberSystem::new(s0, s1, s2, color).unwrap()
}
