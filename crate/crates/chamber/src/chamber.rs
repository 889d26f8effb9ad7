//! Chamber systems: a set of flags acted on by three fixed-point-free
//! involutions s0, s1, s2, where s0 and s2 commute without coinciding.
//! Vertices, edges and faces of the underlying map are the orbits of
//! the three two-generator subgroups.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::plane_graph::PlaneGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberSystem {
    s: [Vec<u32>; 3],
    color: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counts {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub chi: i64,
    /// face size -> number of faces of that size
    pub face_sizes: BTreeMap<usize, usize>,
    /// vertex degree -> number of vertices of that degree
    pub degrees: BTreeMap<usize, usize>,
}

impl ChamberSystem {
    pub fn new(s0: Vec<u32>, s1: Vec<u32>, s2: Vec<u32>, color: Vec<u8>) -> Result<Self> {
        let n = s0.len();
        if n == 0 {
            return Err(Error::ChamberSystem("no chambers".into()));
        }
        if s1.len() != n || s2.len() != n || color.len() != n {
            return Err(Error::ChamberSystem("mismatched table lengths".into()));
        }
        let cs = ChamberSystem { s: [s0, s1, s2], color };
        for k in 0..3 {
            for x in 0..n as u32 {
                let y = cs.s[k][x as usize];
                if y as usize >= n {
                    return Err(Error::ChamberSystem(format!("s{k}({x}) out of range")));
                }
                if y == x {
                    return Err(Error::ChamberSystem(format!("s{k} fixes chamber {x}")));
                }
                if cs.s[k][y as usize] != x {
                    return Err(Error::ChamberSystem(format!("s{k} is not an involution at {x}")));
                }
            }
        }
        for x in 0..n as u32 {
            let a = cs.s[0][cs.s[2][x as usize] as usize];
            let b = cs.s[2][cs.s[0][x as usize] as usize];
            if a != b {
                return Err(Error::ChamberSystem(format!("s0 and s2 do not commute at {x}")));
            }
            if cs.s[0][x as usize] == cs.s[2][x as usize] {
                return Err(Error::ChamberSystem(format!("s0 and s2 coincide at {x}")));
            }
        }
        for x in 0..n {
            if cs.color[x] > 1 {
                return Err(Error::ChamberSystem(format!("chamber {x} has color {}", cs.color[x])));
            }
            for k in 0..3 {
                if cs.color[cs.s[k][x] as usize] == cs.color[x] {
                    return Err(Error::ChamberSystem(format!(
                        "coloring is not proper across s{k} at {x}"
                    )));
                }
            }
        }
        let (_, parts) = cs.orbit_ids(&[0, 1, 2]);
        if parts != 1 {
            return Err(Error::ChamberSystem("chamber system is not connected".into()));
        }
        Ok(cs)
    }

    pub fn len(&self) -> usize {
        self.color.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn s(&self, k: usize, x: u32) -> u32 {
        self.s[k][x as usize]
    }

    pub fn color(&self, x: u32) -> u8 {
        self.color[x as usize]
    }

    /// Same map with the two chamber colors exchanged.
    pub fn mirror(&self) -> Self {
        ChamberSystem { s: self.s.clone(), color: self.color.iter().map(|&c| 1 - c).collect() }
    }

    /// The dual map: vertices and faces trade places.
    pub fn dual(&self) -> Self {
        ChamberSystem {
            s: [self.s[2].clone(), self.s[1].clone(), self.s[0].clone()],
            color: self.color.clone(),
        }
    }

    /// Orbit ids under the chosen generators, numbered by smallest member.
    pub fn orbit_ids(&self, gens: &[usize]) -> (Vec<u32>, usize) {
        let n = self.len();
        let mut id = vec![u32::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for x in 0..n as u32 {
            if id[x as usize] != u32::MAX {
                continue;
            }
            id[x as usize] = count;
            stack.push(x);
            while let Some(y) = stack.pop() {
                for &k in gens {
                    let z = self.s[k][y as usize];
                    if id[z as usize] == u32::MAX {
                        id[z as usize] = count;
                        stack.push(z);
                    }
                }
            }
            count += 1;
        }
        (id, count as usize)
    }

    pub fn counts(&self) -> Counts {
        let (vid, v) = self.orbit_ids(&[1, 2]);
        let (_, e) = self.orbit_ids(&[0, 2]);
        let (fid, f) = self.orbit_ids(&[0, 1]);
        let mut vsize = vec![0usize; v];
        let mut fsize = vec![0usize; f];
        for x in 0..self.len() {
            vsize[vid[x] as usize] += 1;
            fsize[fid[x] as usize] += 1;
        }
        let mut degrees = BTreeMap::new();
        for s in vsize {
            *degrees.entry(s / 2).or_insert(0) += 1;
        }
        let mut face_sizes = BTreeMap::new();
        for s in fsize {
            *face_sizes.entry(s / 2).or_insert(0) += 1;
        }
        Counts { v, e, f, chi: v as i64 - e as i64 + f as i64, face_sizes, degrees }
    }

    /// Reconstruct the plane graph whose barycentric subdivision this is.
    /// White chambers become darts; the rotation at a vertex is the cycle of
    /// its white chambers under s1 after s2. Exact inverse of `barycentric`.
    pub fn to_plane_graph(&self) -> PlaneGraph {
        let n = self.len();
        let (vid, nv) = self.orbit_ids(&[1, 2]);
        let mut first_white = vec![u32::MAX; nv];
        for x in 0..n as u32 {
            if self.color[x as usize] == 0 && first_white[vid[x as usize] as usize] == u32::MAX {
                first_white[vid[x as usize] as usize] = x;
            }
        }
        let mut order: Vec<usize> = (0..nv).collect();
        order.sort_by_key(|&v| first_white[v]);

        let mut dart_of = vec![u32::MAX; n];
        let mut vert = Vec::new();
        let mut rot = Vec::new();
        let mut rot_inv = Vec::new();
        for (new_v, &v) in order.iter().enumerate() {
            let start = first_white[v];
            let base = vert.len() as u32;
            let mut w = start;
            loop {
                dart_of[w as usize] = vert.len() as u32;
                vert.push(new_v as u32);
                w = self.s(1, self.s(2, w));
                if w == start {
                    break;
                }
            }
            let deg = vert.len() as u32 - base;
            for p in 0..deg {
                rot.push(base + (p + 1) % deg);
                rot_inv.push(base + (p + deg - 1) % deg);
            }
        }
        let nd = vert.len();
        let mut twin = vec![0u32; nd];
        for x in 0..n as u32 {
            if self.color[x as usize] == 0 {
                let t = self.s(0, self.s(2, x));
                twin[dart_of[x as usize] as usize] = dart_of[t as usize];
            }
        }
        PlaneGraph::from_parts(nv, vert, rot, rot_inv, twin)
    }
}
