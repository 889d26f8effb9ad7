//! Gluing engine. An lsp patch is copied into every chamber of the base
//! system, a lopsp patch into every double chamber (a white chamber
//! together with its s0-neighbor), and copies are sewn together along
//! their boundary arcs.

use crate::patch::{Analysis, Nbr, Patch, PatchKind};
use crate::{ChamberSystem, Result};

/// Crossing an lsp boundary side moves to the copy at the involution
/// whose label the side's two corners do not carry: S(v0,v1) jumps by
/// s2, S(v1,v2) by s0, S(v2,v0) by s1.
const LSP_JUMP: [usize; 3] = [2, 0, 1];

/// Opposite arc of the lopsp quadrangle: each path glues to its partner
/// in the neighboring copy, positions reversed.
const LOPSP_PARTNER: [usize; 4] = [3, 2, 1, 0];

pub fn apply(cs: &ChamberSystem, p: &Patch) -> Result<ChamberSystem> {
    let a = p.analysis()?;
    apply_analyzed(cs, p, &a)
}

/// Same as [`apply`], reusing a validated analysis across many bases.
pub fn apply_analyzed(cs: &ChamberSystem, p: &Patch, a: &Analysis) -> Result<ChamberSystem> {
    match p.kind() {
        PatchKind::Lsp => apply_lsp(cs, p, a),
        PatchKind::Lopsp => apply_lopsp(cs, p, a),
    }
}

fn apply_lsp(cs: &ChamberSystem, p: &Patch, a: &Analysis) -> Result<ChamberSystem> {
    let tc = p.tris.len();
    let n = cs.len();
    let m = n * tc;
    let mut s: [Vec<u32>; 3] = [vec![0; m], vec![0; m], vec![0; m]];
    let mut color = vec![0u8; m];
    for f in 0..n as u32 {
        for t in 0..tc {
            let id = f as usize * tc + t;
            color[id] = p.colors[t] ^ cs.color(f);
            for (k, sk) in s.iter_mut().enumerate() {
                sk[id] = match a.nbr[t][k] {
                    Nbr::Interior(t2) => f as usize * tc + t2 as usize,
                    Nbr::Boundary { arc, .. } => {
                        // position-wise: the same chamber of the
                        // neighboring copy lies on the shared side
                        cs.s(LSP_JUMP[arc as usize], f) as usize * tc + t
                    }
                } as u32;
            }
        }
    }
    let [s0, s1, s2] = s;
    ChamberSystem::new(s0, s1, s2, color)
}

fn apply_lopsp(cs: &ChamberSystem, p: &Patch, a: &Analysis) -> Result<ChamberSystem> {
    let cc = p.tris.len();
    let n = cs.len();
    // a double chamber per white flag w, covering {w, s0(w)}; the patch
    // corner v0 lands on the 0-vertex of w, v0' on that of s0(w)
    let mut rank = vec![u32::MAX; n];
    let mut whites = Vec::with_capacity(n / 2);
    for f in 0..n as u32 {
        if cs.color(f) == 0 {
            rank[f as usize] = whites.len() as u32;
            whites.push(f);
        }
    }
    let m = whites.len() * cc;
    let mut s: [Vec<u32>; 3] = [vec![0; m], vec![0; m], vec![0; m]];
    let mut color = vec![0u8; m];
    for (r, &w) in whites.iter().enumerate() {
        for t in 0..cc {
            let id = r * cc + t;
            color[id] = p.colors[t];
            for (k, sk) in s.iter_mut().enumerate() {
                sk[id] = match a.nbr[t][k] {
                    Nbr::Interior(t2) => r * cc + t2 as usize,
                    Nbr::Boundary { arc, pos } => {
                        // the neighboring double chamber contains the base
                        // chamber across the side this arc lies on; its key
                        // is the white flag of that pair
                        let arc = arc as usize;
                        let x = match arc {
                            0 => cs.s(0, cs.s(1, w)), // P(v2,v0): s1-side of w
                            1 => cs.s(0, cs.s(2, w)), // P(v0,v1): s2-side of w
                            2 => cs.s(2, cs.s(0, w)), // P(v1,v0'): s2-side of s0(w)
                            _ => cs.s(1, cs.s(0, w)), // P(v0',v2): s1-side of s0(w)
                        };
                        let pa = LOPSP_PARTNER[arc];
                        let edges = a.arc_tris[pa].len();
                        let t2 = a.arc_tris[pa][edges - 1 - pos as usize];
                        rank[x as usize] as usize * cc + t2 as usize
                    }
                } as u32;
            }
        }
    }
    let [s0, s1, s2] = s;
    ChamberSystem::new(s0, s1, s2, color)
}
