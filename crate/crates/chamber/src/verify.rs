//! Independent checks that an operation result is a polyhedron, plus a
//! symmetry-preservation audit.
//!
//! A sphere map's graph is 3-connected exactly when its barycentric
//! subdivision has no parallel arcs, every 3-cycle bounds a chamber, and
//! every 4-cycle either bounds two chambers sharing a side or links the
//! four chambers around an edge node. `polyhedron_check` tests those
//! three conditions directly on the chamber system and, separately, runs
//! a flow-based connectivity oracle on the underlying graph, so the two
//! verdicts cross-check each other.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::canon::automorphism_orders;
use crate::chamber::ChamberSystem;
use crate::error::{Error, Result};
use crate::expr::Operation;
use crate::patch::PatchKind;
use crate::plane_graph::PlaneGraph;

#[derive(Clone, Debug)]
pub enum Verdict {
    Pass,
    Fail { detail: String, nodes: Vec<usize> },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail { detail, nodes } => write!(f, "fail: {detail} {nodes:?}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub euler: i64,
    /// no parallel arcs in the subdivision (no 2-cycles)
    pub simple: Verdict,
    /// every 3-cycle bounds a chamber
    pub triangles: Verdict,
    /// every 4-cycle bounds a chamber pair or links the chambers at an edge node
    pub quadrilaterals: Verdict,
    /// flow oracle: the underlying graph has no vertex cut smaller than 3
    pub connectivity: Verdict,
}

impl VerificationReport {
    pub fn conditions_pass(&self) -> bool {
        self.simple.passed() && self.triangles.passed() && self.quadrilaterals.passed()
    }

    /// The subdivision conditions and the connectivity oracle must agree.
    pub fn agrees(&self) -> bool {
        self.conditions_pass() == self.connectivity.passed()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "euler characteristic: {}", self.euler)?;
        writeln!(f, "no parallel subdivision arcs: {}", self.simple)?;
        writeln!(f, "3-cycles bound chambers: {}", self.triangles)?;
        writeln!(f, "4-cycles are chamber pairs or edge links: {}", self.quadrilaterals)?;
        write!(f, "3-connectivity oracle: {}", self.connectivity)
    }
}

/// The subdivision graph: one node per vertex, edge and face of the map,
/// one arc per chamber side.
struct Subdivision {
    labels: Vec<u8>,
    adj: Vec<BTreeSet<usize>>,
    /// distinct side instances per node pair
    mult: BTreeMap<(usize, usize), usize>,
    /// sorted node triples of chambers
    chambers: BTreeSet<[usize; 3]>,
}

fn subdivision(cs: &ChamberSystem) -> Subdivision {
    let (vid, nv) = cs.orbit_ids(&[1, 2]);
    let (eid, ne) = cs.orbit_ids(&[0, 2]);
    let (fid, _) = cs.orbit_ids(&[0, 1]);
    let corner = |x: u32, lbl: usize| -> usize {
        match lbl {
            0 => vid[x as usize] as usize,
            1 => nv + eid[x as usize] as usize,
            _ => nv + ne + fid[x as usize] as usize,
        }
    };
    let n = nv + ne + cs.orbit_ids(&[0, 1]).1;
    let mut labels = vec![0u8; n];
    for (i, l) in labels.iter_mut().enumerate() {
        *l = if i < nv {
            0
        } else if i < nv + ne {
            1
        } else {
            2
        };
    }

    let mut mult: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut chambers: BTreeSet<[usize; 3]> = BTreeSet::new();
    for x in 0..cs.len() as u32 {
        chambers.insert([corner(x, 0), corner(x, 1), corner(x, 2)]);
        for k in 0..3 {
            if cs.s(k, x) < x {
                continue; // each side once
            }
            let (la, lb) = match k {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let (a, b) = (corner(x, la), corner(x, lb));
            *mult.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    Subdivision { labels, adj, mult, chambers }
}

/// Check the three subdivision conditions and run the connectivity
/// oracle. Only sphere maps are in scope.
pub fn polyhedron_check(cs: &ChamberSystem) -> Result<VerificationReport> {
    let counts = cs.counts();
    if counts.chi != 2 {
        return Err(Error::Unsupported(format!(
            "polyhedron check needs a sphere map, got Euler characteristic {}",
            counts.chi
        )));
    }
    let sub = subdivision(cs);

    let mut simple = Verdict::Pass;
    for (&(a, b), &m) in &sub.mult {
        if m >= 2 {
            simple = Verdict::Fail {
                detail: format!("{m} parallel arcs between nodes"),
                nodes: vec![a, b],
            };
            break;
        }
    }

    // every 3-cycle carries one node per label, so all of them pass
    // through an edge node
    let mut triangles = Verdict::Pass;
    'tri: for e in 0..sub.labels.len() {
        if sub.labels[e] != 1 {
            continue;
        }
        for &v in sub.adj[e].iter().filter(|&&v| sub.labels[v] == 0) {
            for &f in sub.adj[e].iter().filter(|&&f| sub.labels[f] == 2) {
                if sub.adj[v].contains(&f) && !sub.chambers.contains(&key3(v, e, f)) {
                    triangles = Verdict::Fail {
                        detail: "3-cycle without a chamber".into(),
                        nodes: vec![v, e, f],
                    };
                    break 'tri;
                }
            }
        }
    }

    let quadrilaterals = check_quadrilaterals(&sub);
    let connectivity = match connectivity_at_least(&cs.to_plane_graph(), 3) {
        Ok(()) => Verdict::Pass,
        Err(cut) => {
            Verdict::Fail { detail: format!("vertex cut of size {}", cut.len()), nodes: cut }
        }
    };

    Ok(VerificationReport { euler: counts.chi, simple, triangles, quadrilaterals, connectivity })
}

fn key3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// Enumerate 4-cycles by their diagonals: for every node pair, collect
/// the common neighbors; two of them close a cycle.
fn check_quadrilaterals(sub: &Subdivision) -> Verdict {
    let mut middles: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (m, nbrs) in sub.adj.iter().enumerate() {
        let nbrs: Vec<usize> = nbrs.iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &c in &nbrs[i + 1..] {
                middles.entry((a, c)).or_default().push(m);
            }
        }
    }
    for (&(a, c), mids) in &middles {
        for (i, &b) in mids.iter().enumerate() {
            for &d in &mids[i + 1..] {
                // cycle a-b-c-d; diagonals (a,c) and (b,d)
                let pair_on = |p: usize, q: usize, r: usize, s: usize| {
                    sub.chambers.contains(&key3(p, q, r)) && sub.chambers.contains(&key3(r, s, p))
                };
                if pair_on(a, b, c, d) || pair_on(b, c, d, a) || edge_link(sub, a, b, c, d) {
                    continue;
                }
                return Verdict::Fail {
                    detail: "4-cycle without a chamber pair or edge link".into(),
                    nodes: vec![a, b, c, d],
                };
            }
        }
    }
    Verdict::Pass
}

/// The cycle is the link of an edge node adjacent to all four cycle
/// nodes, with the four chambers around it present.
fn edge_link(sub: &Subdivision, a: usize, b: usize, c: usize, d: usize) -> bool {
    sub.adj[a].iter().filter(|&&h| sub.labels[h] == 1).any(|&h| {
        [b, c, d].iter().all(|q| sub.adj[h].contains(q))
            && [[a, b], [b, c], [c, d], [d, a]]
                .iter()
                .all(|&[p, q]| sub.chambers.contains(&key3(p, h, q)))
    })
}

/// True (Ok) iff the simple graph view has no vertex cut smaller than
/// `k`; on failure the witness is a separating set. Graphs with at most
/// `k` vertices fail with an empty witness: their connectivity is their
/// order minus one, with no separating set to name.
pub fn connectivity_at_least(pg: &PlaneGraph, k: usize) -> std::result::Result<(), Vec<usize>> {
    assert!((1..=3).contains(&k), "oracle supports k between 1 and 3");
    let n = pg.vertex_count();
    if n <= k {
        return Err(Vec::new());
    }
    let adj = pg.simple_neighbors();

    // A cut smaller than k misses one of any k sources, and every vertex
    // across the cut from that source is non-adjacent to it, so scanning
    // k sources against all non-neighbors sees every small cut.
    let mut flow = SplitFlow::new(&adj);
    for (s, nbrs) in adj.iter().enumerate().take(k) {
        for t in 0..n {
            if t == s || nbrs.contains(&t) {
                continue;
            }
            if let Some(cut) = flow.cut_below(s, t, k) {
                return Err(cut);
            }
        }
    }
    Ok(())
}

/// Unit-capacity flow over the vertex-split digraph: in(v) -> out(v)
/// carries capacity 1, each undirected edge both ways between out and in.
struct SplitFlow {
    to: Vec<usize>,
    cap0: Vec<i32>,
    cap: Vec<i32>,
    head: Vec<Vec<usize>>,
    n: usize,
}

impl SplitFlow {
    fn new(adj: &[Vec<usize>]) -> SplitFlow {
        let n = adj.len();
        let mut f = SplitFlow {
            to: Vec::new(),
            cap0: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); 2 * n],
            n,
        };
        for v in 0..n {
            f.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, nbrs) in adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    f.arc(2 * u + 1, 2 * v, 1);
                    f.arc(2 * v + 1, 2 * u, 1);
                }
            }
        }
        f
    }

    fn arc(&mut self, u: usize, v: usize, c: i32) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap0.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap0.push(0);
    }

    /// If fewer than `k` internally disjoint paths join `s` and `t`,
    /// return the separating vertices.
    fn cut_below(&mut self, s: usize, t: usize, k: usize) -> Option<Vec<usize>> {
        self.cap.clone_from(&self.cap0);
        let (src, snk) = (2 * s + 1, 2 * t);
        for _ in 0..k {
            if !self.augment(src, snk) {
                let seen = self.residual_reach(src);
                let cut = (0..self.n)
                    .filter(|&v| v != s && v != t && seen[2 * v] && !seen[2 * v + 1])
                    .collect();
                return Some(cut);
            }
        }
        None
    }

    fn augment(&mut self, src: usize, snk: usize) -> bool {
        let mut via = vec![usize::MAX; 2 * self.n];
        via[src] = usize::MAX - 1;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && via[v] == usize::MAX {
                    via[v] = e;
                    if v == snk {
                        let mut w = snk;
                        while w != src {
                            let e = via[w];
                            self.cap[e] -= 1;
                            self.cap[e ^ 1] += 1;
                            w = self.to[e ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(v);
                }
            }
        }
        false
    }

    fn residual_reach(&self, src: usize) -> Vec<bool> {
        let mut seen = vec![false; 2 * self.n];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

#[derive(Clone, Debug)]
pub struct SymmetryAudit {
    pub kind: PatchKind,
    /// order of the full symmetry group, before and after
    pub full: (usize, usize),
    /// order of the orientation-preserving subgroup, before and after
    pub rotation: (usize, usize),
}

impl SymmetryAudit {
    pub fn full_divides(&self) -> bool {
        self.full.1.is_multiple_of(self.full.0)
    }

    pub fn rotation_divides(&self) -> bool {
        self.rotation.1.is_multiple_of(self.rotation.0)
    }

    /// What the operation promises: everything for an lsp operation,
    /// the rotation subgroup for a lopsp operation.
    pub fn preserved(&self) -> bool {
        match self.kind {
            PatchKind::Lsp => self.full_divides() && self.rotation_divides(),
            PatchKind::Lopsp => self.rotation_divides(),
        }
    }
}

impl fmt::Display for SymmetryAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            PatchKind::Lsp => "lsp",
            PatchKind::Lopsp => "lopsp",
        };
        writeln!(f, "operation kind: {kind}")?;
        writeln!(
            f,
            "full group: {} -> {} ({})",
            self.full.0,
            self.full.1,
            if self.full_divides() { "divides" } else { "dropped" }
        )?;
        writeln!(
            f,
            "rotation group: {} -> {} ({})",
            self.rotation.0,
            self.rotation.1,
            if self.rotation_divides() { "divides" } else { "dropped" }
        )?;
        write!(f, "preserved what it promises: {}", if self.preserved() { "yes" } else { "NO" })
    }
}

pub fn symmetry_audit(op: &Operation, cs: &ChamberSystem) -> Result<SymmetryAudit> {
    let before = automorphism_orders(cs);
    let after = automorphism_orders(&op.apply_to(cs)?);
    Ok(SymmetryAudit { kind: op.kind(), full: (before.0, after.0), rotation: (before.1, after.1) })
}
