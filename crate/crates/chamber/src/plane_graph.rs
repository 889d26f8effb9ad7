//! Plane graphs as rotation systems: darts (half-edges) with a clockwise
//! successor around their origin vertex and a pairing involution.

use crate::chamber::ChamberSystem;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    nv: usize,
    /// Origin vertex of each dart; darts are stored grouped by vertex.
    vert: Vec<u32>,
    /// Next dart clockwise around the origin vertex.
    rot: Vec<u32>,
    rot_inv: Vec<u32>,
    twin: Vec<u32>,
}

impl PlaneGraph {
    /// Build from clockwise neighbor lists. Parallel edges pair by occurrence
    /// order (the k-th dart u->v with the k-th dart v->u); the two ends of a
    /// loop pair consecutively within the rotation at their vertex.
    pub fn from_rotations(adj: &[Vec<usize>]) -> Result<Self> {
        let nv = adj.len();
        if nv == 0 {
            return Err(Error::PlaneGraph("empty graph".into()));
        }
        let mut offset = vec![0usize; nv + 1];
        for (u, nbrs) in adj.iter().enumerate() {
            if nbrs.is_empty() {
                return Err(Error::PlaneGraph(format!("vertex {u} has no incident edges")));
            }
            offset[u + 1] = offset[u] + nbrs.len();
        }
        let nd = offset[nv];
        let mut vert = vec![0u32; nd];
        let mut rot = vec![0u32; nd];
        let mut rot_inv = vec![0u32; nd];
        let mut head = vec![0u32; nd];
        for (u, nbrs) in adj.iter().enumerate() {
            let base = offset[u];
            let deg = nbrs.len();
            for (p, &v) in nbrs.iter().enumerate() {
                if v >= nv {
                    return Err(Error::PlaneGraph(format!(
                        "vertex {u} lists neighbor {v} out of range"
                    )));
                }
                let d = base + p;
                vert[d] = u as u32;
                head[d] = v as u32;
                rot[d] = (base + (p + 1) % deg) as u32;
                rot_inv[d] = (base + (p + deg - 1) % deg) as u32;
            }
        }

        let mut twin = vec![u32::MAX; nd];
        for u in 0..nv {
            for (p, &v) in adj[u].iter().enumerate() {
                let d = offset[u] + p;
                if twin[d] != u32::MAX {
                    continue;
                }
                if v == u {
                    // loop: pair with the next unpaired occurrence of u at u
                    let mut partner = None;
                    for (q, &w) in adj[u].iter().enumerate().skip(p + 1) {
                        if w == u && twin[offset[u] + q] == u32::MAX {
                            partner = Some(offset[u] + q);
                            break;
                        }
                    }
                    let q = partner.ok_or_else(|| {
                        Error::PlaneGraph(format!("unmatched loop dart at vertex {u}"))
                    })?;
                    twin[d] = q as u32;
                    twin[q] = d as u32;
                } else {
                    let mut partner = None;
                    for (q, &w) in adj[v].iter().enumerate() {
                        if w == u && twin[offset[v] + q] == u32::MAX {
                            partner = Some(offset[v] + q);
                            break;
                        }
                    }
                    let q = partner.ok_or_else(|| {
                        Error::PlaneGraph(format!("edge {u}-{v} has mismatched occurrence counts"))
                    })?;
                    twin[d] = q as u32;
                    twin[q] = d as u32;
                }
            }
        }

        let pg = PlaneGraph { nv, vert, rot, rot_inv, twin };
        // connectivity
        let mut seen = vec![false; nv];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for d in offset[u]..offset[u + 1] {
                let v = pg.head(d as u32) as usize;
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        if reached != nv {
            return Err(Error::PlaneGraph("graph is not connected".into()));
        }
        Ok(pg)
    }

    /// Assemble from prevalidated tables. Callers guarantee consistency.
    pub(crate) fn from_parts(
        nv: usize,
        vert: Vec<u32>,
        rot: Vec<u32>,
        rot_inv: Vec<u32>,
        twin: Vec<u32>,
    ) -> Self {
        PlaneGraph { nv, vert, rot, rot_inv, twin }
    }

    pub fn vertex_count(&self) -> usize {
        self.nv
    }

    pub fn dart_count(&self) -> usize {
        self.vert.len()
    }

    pub fn edge_count(&self) -> usize {
        self.vert.len() / 2
    }

    pub fn vert(&self, d: u32) -> u32 {
        self.vert[d as usize]
    }

    pub fn head(&self, d: u32) -> u32 {
        self.vert[self.twin[d as usize] as usize]
    }

    pub fn rot(&self, d: u32) -> u32 {
        self.rot[d as usize]
    }

    pub fn rot_inv(&self, d: u32) -> u32 {
        self.rot_inv[d as usize]
    }

    pub fn twin(&self, d: u32) -> u32 {
        self.twin[d as usize]
    }

    /// Next dart along the face of `d` (the face lying on the traversal side).
    pub fn face_next(&self, d: u32) -> u32 {
        self.rot[self.twin[d as usize] as usize]
    }

    pub fn face_prev(&self, d: u32) -> u32 {
        self.twin[self.rot_inv[d as usize] as usize]
    }

    /// Face walks as dart cycles, in order of their smallest dart.
    pub fn faces(&self) -> Vec<Vec<u32>> {
        let nd = self.dart_count();
        let mut face_of = vec![usize::MAX; nd];
        let mut faces = Vec::new();
        for d0 in 0..nd as u32 {
            if face_of[d0 as usize] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = d0;
            loop {
                face_of[d as usize] = id;
                walk.push(d);
                d = self.face_next(d);
                if d == d0 {
                    break;
                }
            }
            faces.push(walk);
        }
        faces
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    pub fn euler(&self) -> i64 {
        self.nv as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Clockwise neighbor lists, in storage order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nv];
        for d in 0..self.dart_count() as u32 {
            adj[self.vert(d) as usize].push(self.head(d) as usize);
        }
        adj
    }

    /// Neighbor sets with parallel edges collapsed and loops dropped.
    pub fn simple_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<Vec<usize>> = self
            .adjacency()
            .into_iter()
            .enumerate()
            .map(|(u, mut nbrs)| {
                nbrs.retain(|&v| v != u);
                nbrs.sort_unstable();
                nbrs.dedup();
                nbrs
            })
            .collect();
        adj.shrink_to_fit();
        adj
    }

    /// The chamber system of the barycentric subdivision: two flags per dart
    /// (tail half and head half), colored by the half.
    pub fn barycentric(&self) -> ChamberSystem {
        let nd = self.dart_count();
        let n = 2 * nd;
        let mut s0 = vec![0u32; n];
        let mut s1 = vec![0u32; n];
        let mut s2 = vec![0u32; n];
        let mut color = vec![0u8; n];
        for d in 0..nd as u32 {
            let (tail, head) = (2 * d, 2 * d + 1);
            s0[tail as usize] = head;
            s0[head as usize] = tail;
            s2[tail as usize] = 2 * self.twin(d) + 1;
            s2[head as usize] = 2 * self.twin(d);
            s1[tail as usize] = 2 * self.face_prev(d) + 1;
            s1[head as usize] = 2 * self.face_next(d);
            color[tail as usize] = 0;
            color[head as usize] = 1;
        }
        ChamberSystem::new(s0, s1, s2, color)
            .expect("barycentric subdivision always yields a valid chamber system")
    }
}
