//! Patches: 2-colored triangulated disks with labeled vertices and marked
//! boundary corners. An lsp patch decorates a single chamber, a lopsp patch
//! decorates a double chamber. Validation enforces the local gluing rules;
//! everything downstream (application, composition, canonical codes) works
//! from the derived `Analysis`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatchKind {
    Lsp,
    Lopsp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatchCorners {
    Lsp { v0: u32, v1: u32, v2: u32 },
    Lopsp { v2: u32, v0: u32, v1: u32, v0p: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Patch {
    /// vertex labels, each 0, 1 or 2
    pub labels: Vec<u8>,
    /// chambers as vertex triples
    pub tris: Vec<[u32; 3]>,
    /// chamber colors, 0 white / 1 black
    pub colors: Vec<u8>,
    pub corners: PatchCorners,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotConnected,
    NotADisk(String),
    VertexLabel { vertex: u32, label: u8 },
    ChamberColor(usize),
    TriangleLabels(usize),
    ColorClash(usize, usize),
    CornerMissing(&'static str),
    CornerOrder,
    CornerLabel { corner: &'static str, label: u8 },
    CornerChambers { corner: &'static str, label: u8, chambers: usize },
    InteriorVertex { vertex: u32, label: u8, chambers: usize },
    SideVertex { vertex: u32, label: u8, chambers: usize },
    PathLengths { pair: usize },
    PathLabels { pair: usize, position: usize },
    PathColors { pair: usize, position: usize },
    PairedVertexChambers { vertex: u32, partner: u32, label: u8, chambers: usize },
}

fn pair_name(pair: usize) -> &'static str {
    if pair == 0 {
        "P(v2,v0) and P(v2,v0')"
    } else {
        "P(v1,v0) and P(v1,v0')"
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotConnected => write!(f, "chambers do not form a connected complex"),
            Violation::NotADisk(why) => write!(f, "not a triangulated disk: {why}"),
            Violation::VertexLabel { vertex, label } => {
                write!(f, "vertex {vertex} has label {label}, want 0, 1 or 2")
            }
            Violation::ChamberColor(t) => {
                write!(f, "chamber {t} has a color other than white or black")
            }
            Violation::TriangleLabels(t) => {
                write!(f, "chamber {t} does not carry all three labels")
            }
            Violation::ColorClash(a, b) => {
                write!(f, "adjacent chambers {a} and {b} have the same color")
            }
            Violation::CornerMissing(c) => {
                write!(f, "corner {c} is not a distinct boundary vertex")
            }
            Violation::CornerOrder => {
                write!(f, "corners do not appear on the boundary in the order v2, v0, v1, v0'")
            }
            Violation::CornerLabel { corner, label } => {
                write!(f, "corner {corner} has label {label}")
            }
            Violation::CornerChambers { corner, label, chambers } => {
                write!(f, "corner {corner} with label {label} lies in {chambers} chambers")
            }
            Violation::InteriorVertex { vertex, label, chambers } => {
                write!(f, "interior vertex {vertex} with label {label} lies in {chambers} chambers")
            }
            Violation::SideVertex { vertex, label, chambers } => {
                write!(f, "side vertex {vertex} with label {label} lies in {chambers} chambers")
            }
            Violation::PathLengths { pair } => {
                write!(f, "paired paths {} have different lengths", pair_name(*pair))
            }
            Violation::PathLabels { pair, position } => {
                write!(
                    f,
                    "paired paths {} disagree on the label at position {position}",
                    pair_name(*pair)
                )
            }
            Violation::PathColors { pair, position } => {
                write!(
                    f,
                    "paired paths {} carry equal chamber colors at edge {position}",
                    pair_name(*pair)
                )
            }
            Violation::PairedVertexChambers { vertex, partner, label, chambers } => {
                write!(
                    f,
                    "paired side vertices {vertex} and {partner} with label {label} lie in {chambers} chambers together"
                )
            }
        }
    }
}

/// Neighbor of a chamber across one of its three edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nbr {
    Interior(u32),
    /// boundary edge: which arc it lies on and the edge index within the arc
    Boundary {
        arc: u8,
        pos: u32,
    },
}

/// Structure derived from a well-formed patch. Arcs are in role order:
/// lsp [S(v0,v1), S(v1,v2), S(v2,v0)], lopsp [P(v2,v0), P(v0,v1),
/// P(v1,v0'), P(v0',v2)], each listed inclusive of its corner endpoints.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub nbr: Vec<[Nbr; 3]>,
    pub arcs: Vec<Vec<u32>>,
    /// the chamber on each arc edge, parallel to arc edges
    pub arc_tris: Vec<Vec<u32>>,
    /// incident chamber count per vertex
    pub cnt: Vec<usize>,
    /// full boundary cycle, oriented to run through the corners in role order
    pub boundary: Vec<u32>,
    pub on_boundary: Vec<bool>,
    /// position of each label within each chamber triple
    pub lab_pos: Vec<[u8; 3]>,
}

impl Patch {
    pub fn kind(&self) -> PatchKind {
        match self.corners {
            PatchCorners::Lsp { .. } => PatchKind::Lsp,
            PatchCorners::Lopsp { .. } => PatchKind::Lopsp,
        }
    }

    /// Chambers decorating one chamber (lsp) or one double chamber (lopsp).
    pub fn chamber_count(&self) -> usize {
        self.tris.len()
    }

    /// The mirrored operation: colors swap; for a lopsp patch the corners
    /// v0 and v0' also trade roles (the boundary reverses).
    pub fn mirror(&self) -> Patch {
        let corners = match self.corners {
            PatchCorners::Lsp { v0, v1, v2 } => PatchCorners::Lsp { v0, v1, v2 },
            PatchCorners::Lopsp { v2, v0, v1, v0p } => {
                PatchCorners::Lopsp { v2, v0: v0p, v1, v0p: v0 }
            }
        };
        Patch {
            labels: self.labels.clone(),
            tris: self.tris.clone(),
            colors: self.colors.iter().map(|&c| 1 - c).collect(),
            corners,
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        match analyze(self) {
            Err(v) => v,
            Ok(a) => rule_violations(self, &a),
        }
    }

    /// Validate fully and hand back the derived structure.
    pub fn analysis(&self) -> crate::Result<Analysis> {
        match analyze(self) {
            Err(v) => Err(crate::Error::Patch(v)),
            Ok(a) => {
                let v = rule_violations(self, &a);
                if v.is_empty() {
                    Ok(a)
                } else {
                    Err(crate::Error::Patch(v))
                }
            }
        }
    }

    pub fn canonical_code(&self) -> crate::Result<Vec<u8>> {
        let a = self.analysis()?;
        Ok(canonical_code_with(self, &a))
    }

    /// Disk structure alone, without the local gluing rules. The file
    /// format uses this to derive boundary arcs even for patches that
    /// break a rule (such files still parse; validation reports them).
    pub(crate) fn structure(&self) -> Result<Analysis, Vec<Violation>> {
        analyze(self)
    }
}

fn edge_key(a: u32, b: u32) -> (u32, u32) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Disk structure + label sanity. Violations returned here prevent any
/// meaningful boundary derivation, so callers get them alone.
fn analyze(p: &Patch) -> Result<Analysis, Vec<Violation>> {
    let n = p.labels.len();
    if n == 0 || p.tris.is_empty() {
        return Err(vec![Violation::NotADisk("no chambers".into())]);
    }
    if p.colors.len() != p.tris.len() {
        return Err(vec![Violation::NotADisk("one color per chamber required".into())]);
    }

    let bad_labels: Vec<Violation> = (0..n as u32)
        .filter(|&v| p.labels[v as usize] > 2)
        .map(|v| Violation::VertexLabel { vertex: v, label: p.labels[v as usize] })
        .collect();
    if !bad_labels.is_empty() {
        return Err(bad_labels);
    }

    for (t, tri) in p.tris.iter().enumerate() {
        if tri.iter().any(|&x| x as usize >= n) {
            return Err(vec![Violation::NotADisk(format!(
                "chamber {t} names a vertex out of range"
            ))]);
        }
        if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
            return Err(vec![Violation::NotADisk(format!("chamber {t} repeats a vertex"))]);
        }
    }

    let mut lab_pos = vec![[0u8; 3]; p.tris.len()];
    let bad_tris: Vec<Violation> = p
        .tris
        .iter()
        .enumerate()
        .filter_map(|(t, tri)| {
            let mut seen = [false; 3];
            for (i, &x) in tri.iter().enumerate() {
                let l = p.labels[x as usize] as usize;
                seen[l] = true;
                lab_pos[t][l] = i as u8;
            }
            (!seen.iter().all(|&s| s)).then_some(Violation::TriangleLabels(t))
        })
        .collect();
    if !bad_tris.is_empty() {
        return Err(bad_tris);
    }

    let mut tri_sets = BTreeSet::new();
    for (t, tri) in p.tris.iter().enumerate() {
        let mut s = *tri;
        s.sort_unstable();
        if !tri_sets.insert(s) {
            return Err(vec![Violation::NotADisk(format!(
                "chamber {t} duplicates another chamber"
            ))]);
        }
    }

    let mut edges: BTreeMap<(u32, u32), Vec<u32>> = BTreeMap::new();
    for (t, tri) in p.tris.iter().enumerate() {
        for i in 0..3 {
            edges.entry(edge_key(tri[i], tri[(i + 1) % 3])).or_default().push(t as u32);
        }
    }
    for (&(a, b), ts) in &edges {
        if ts.len() > 2 {
            return Err(vec![Violation::NotADisk(format!(
                "edge {a}-{b} lies in {} chambers",
                ts.len()
            ))]);
        }
    }

    let mut cnt = vec![0usize; n];
    for tri in &p.tris {
        for &x in tri {
            cnt[x as usize] += 1;
        }
    }
    if let Some(v) = cnt.iter().position(|&c| c == 0) {
        return Err(vec![Violation::NotADisk(format!("vertex {v} lies in no chamber"))]);
    }

    // chamber connectivity across shared edges
    let mut seen_t = vec![false; p.tris.len()];
    let mut stack = vec![0u32];
    seen_t[0] = true;
    while let Some(t) = stack.pop() {
        let tri = p.tris[t as usize];
        for i in 0..3 {
            for &o in &edges[&edge_key(tri[i], tri[(i + 1) % 3])] {
                if !seen_t[o as usize] {
                    seen_t[o as usize] = true;
                    stack.push(o);
                }
            }
        }
    }
    if seen_t.iter().any(|&s| !s) {
        return Err(vec![Violation::NotConnected]);
    }

    // vertex links must be single fans
    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (t, tri) in p.tris.iter().enumerate() {
        for &x in tri {
            incident[x as usize].push(t as u32);
        }
    }
    for v in 0..n as u32 {
        let tris_at = &incident[v as usize];
        let mut link_boundary = 0;
        let mut local_edges = BTreeSet::new();
        for &t in tris_at {
            for &x in &p.tris[t as usize] {
                if x != v {
                    local_edges.insert(edge_key(v, x));
                }
            }
        }
        for e in &local_edges {
            if edges[e].len() == 1 {
                link_boundary += 1;
            }
        }
        if link_boundary != 0 && link_boundary != 2 {
            return Err(vec![Violation::NotADisk(format!(
                "vertex {v} touches the boundary {link_boundary} times"
            ))]);
        }
        // walk the fan from an arbitrary incident chamber
        let mut seen_local = BTreeSet::new();
        let mut stack = vec![tris_at[0]];
        seen_local.insert(tris_at[0]);
        while let Some(t) = stack.pop() {
            for &x in &p.tris[t as usize] {
                if x == v {
                    continue;
                }
                for &o in &edges[&edge_key(v, x)] {
                    if seen_local.insert(o) {
                        stack.push(o);
                    }
                }
            }
        }
        if seen_local.len() != tris_at.len() {
            return Err(vec![Violation::NotADisk(format!(
                "the chambers around vertex {v} do not form a single fan"
            ))]);
        }
    }

    // boundary must be one simple cycle
    let mut bnbrs: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut n_bedges = 0;
    for (&(a, b), ts) in &edges {
        if ts.len() == 1 {
            bnbrs.entry(a).or_default().push(b);
            bnbrs.entry(b).or_default().push(a);
            n_bedges += 1;
        }
    }
    if n_bedges == 0 {
        return Err(vec![Violation::NotADisk("no boundary (closed surface)".into())]);
    }
    let start = *bnbrs.keys().next().unwrap();
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = bnbrs[&start][0];
    while cur != start {
        cycle.push(cur);
        let ns = &bnbrs[&cur];
        let nxt = if ns[0] == prev { ns[1] } else { ns[0] };
        prev = cur;
        cur = nxt;
    }
    if cycle.len() != n_bedges {
        return Err(vec![Violation::NotADisk("boundary splits into several cycles".into())]);
    }

    let chi = n as i64 - edges.len() as i64 + p.tris.len() as i64;
    if chi != 1 {
        return Err(vec![Violation::NotADisk(format!("V - E + T = {chi}, want 1"))]);
    }

    let mut on_boundary = vec![false; n];
    for &v in &cycle {
        on_boundary[v as usize] = true;
    }

    // corner placement, then orient the cycle through the corners in order
    let roles: Vec<(&'static str, u32)> = match p.corners {
        PatchCorners::Lsp { v0, v1, v2 } => vec![("v0", v0), ("v1", v1), ("v2", v2)],
        PatchCorners::Lopsp { v2, v0, v1, v0p } => {
            vec![("v2", v2), ("v0", v0), ("v1", v1), ("v0'", v0p)]
        }
    };
    let mut corner_faults = Vec::new();
    for (i, &(name, v)) in roles.iter().enumerate() {
        let dup = roles[..i].iter().any(|&(_, u)| u == v);
        if v as usize >= n || !on_boundary[v as usize] || dup {
            corner_faults.push(Violation::CornerMissing(name));
        }
    }
    if !corner_faults.is_empty() {
        return Err(corner_faults);
    }

    let l = cycle.len();
    let pos_of = |v: u32| cycle.iter().position(|&x| x == v).unwrap();
    let boundary: Vec<u32>;
    let cut_positions: Vec<usize>;
    match p.corners {
        PatchCorners::Lsp { v0, v1, v2 } => {
            let (p0, p1, p2) = (pos_of(v0), pos_of(v1), pos_of(v2));
            let fwd = |from: usize, to: usize| (to + l - from) % l;
            let forward = fwd(p0, p1) < fwd(p0, p2);
            boundary = reorient(&cycle, p0, forward);
            let d1 = if forward { fwd(p0, p1) } else { fwd(p1, p0) };
            let d2 = if forward { fwd(p0, p2) } else { fwd(p2, p0) };
            cut_positions = vec![0, d1, d2];
        }
        PatchCorners::Lopsp { v2, v0, v1, v0p } => {
            let (q2, q0, q1, q0p) = (pos_of(v2), pos_of(v0), pos_of(v1), pos_of(v0p));
            let fwd = |from: usize, to: usize| (to + l - from) % l;
            let (d0, d1, d0p) = (fwd(q2, q0), fwd(q2, q1), fwd(q2, q0p));
            if d0 < d1 && d1 < d0p {
                boundary = reorient(&cycle, q2, true);
                cut_positions = vec![0, d0, d1, d0p];
            } else {
                let (r0, r1, r0p) = (l - d0, l - d1, l - d0p);
                if r0 < r1 && r1 < r0p {
                    boundary = reorient(&cycle, q2, false);
                    cut_positions = vec![0, r0, r1, r0p];
                } else {
                    return Err(vec![Violation::CornerOrder]);
                }
            }
        }
    }

    // cut positions are strictly increasing and start at 0; the final arc
    // wraps back to the first corner
    let k = cut_positions.len();
    let mut arcs = Vec::with_capacity(k);
    for i in 0..k {
        let from = cut_positions[i];
        let to = if i + 1 < k { cut_positions[i + 1] } else { l };
        let arc: Vec<u32> = (from..=to).map(|j| boundary[j % l]).collect();
        arcs.push(arc);
    }

    let arc_tris: Vec<Vec<u32>> = arcs
        .iter()
        .map(|arc| arc.windows(2).map(|w| edges[&edge_key(w[0], w[1])][0]).collect())
        .collect();

    let mut bedge_arc: BTreeMap<(u32, u32), (u8, u32)> = BTreeMap::new();
    for (ai, arc) in arcs.iter().enumerate() {
        for (j, w) in arc.windows(2).enumerate() {
            bedge_arc.insert(edge_key(w[0], w[1]), (ai as u8, j as u32));
        }
    }

    let mut nbr = vec![[Nbr::Interior(0); 3]; p.tris.len()];
    for (t, tri) in p.tris.iter().enumerate() {
        for lab in 0..3usize {
            let apex = lab_pos[t][lab] as usize;
            let (a, b) = (tri[(apex + 1) % 3], tri[(apex + 2) % 3]);
            let ts = &edges[&edge_key(a, b)];
            nbr[t][lab] = if ts.len() == 2 {
                let other = if ts[0] == t as u32 { ts[1] } else { ts[0] };
                Nbr::Interior(other)
            } else {
                let (arc, pos) = bedge_arc[&edge_key(a, b)];
                Nbr::Boundary { arc, pos }
            };
        }
    }

    Ok(Analysis { nbr, arcs, arc_tris, cnt, boundary, on_boundary, lab_pos })
}

fn reorient(cycle: &[u32], start: usize, forward: bool) -> Vec<u32> {
    let l = cycle.len();
    (0..l)
        .map(|i| if forward { cycle[(start + i) % l] } else { cycle[(start + l - i % l) % l] })
        .collect()
}

fn rule_violations(p: &Patch, a: &Analysis) -> Vec<Violation> {
    let mut out = Vec::new();

    let mut colors_ok = true;
    for (t, &c) in p.colors.iter().enumerate() {
        if c > 1 {
            out.push(Violation::ChamberColor(t));
            colors_ok = false;
        }
    }
    if colors_ok {
        for (t, nbrs) in a.nbr.iter().enumerate() {
            for nb in nbrs {
                if let Nbr::Interior(o) = nb {
                    if (*o as usize) > t && p.colors[t] == p.colors[*o as usize] {
                        out.push(Violation::ColorClash(t, *o as usize));
                    }
                }
            }
        }
    }

    let corner_list: Vec<(&'static str, u32)> = match p.corners {
        PatchCorners::Lsp { v0, v1, v2 } => vec![("v0", v0), ("v1", v1), ("v2", v2)],
        PatchCorners::Lopsp { v2, v0, v1, v0p } => {
            vec![("v2", v2), ("v0", v0), ("v1", v1), ("v0'", v0p)]
        }
    };
    let is_corner = |v: u32| corner_list.iter().any(|&(_, u)| u == v);

    // interior and plain side vertices
    for v in 0..p.labels.len() as u32 {
        let label = p.labels[v as usize];
        let chambers = a.cnt[v as usize];
        if !a.on_boundary[v as usize] {
            let ok = if label == 1 {
                chambers == 4
            } else {
                chambers >= 6 && chambers.is_multiple_of(2)
            };
            if !ok {
                out.push(Violation::InteriorVertex { vertex: v, label, chambers });
            }
        } else if !is_corner(v) && matches!(p.corners, PatchCorners::Lsp { .. }) {
            let ok = if label == 1 { chambers == 2 } else { chambers >= 3 };
            if !ok {
                out.push(Violation::SideVertex { vertex: v, label, chambers });
            }
        }
    }

    // corner rules
    for &(name, v) in &corner_list {
        let label = p.labels[v as usize];
        let chambers = a.cnt[v as usize];
        if name == "v1" {
            let ok = match p.corners {
                PatchCorners::Lsp { .. } => {
                    (label == 1 && chambers == 1) || (label != 1 && chambers >= 2)
                }
                PatchCorners::Lopsp { .. } => {
                    (label == 1 && chambers == 2) || (label != 1 && chambers >= 3)
                }
            };
            if !ok {
                out.push(Violation::CornerChambers { corner: name, label, chambers });
            }
        } else if label != 0 && label != 2 {
            out.push(Violation::CornerLabel { corner: name, label });
        }
    }

    // lopsp path pairing:
    //   pair 0: P(v2,v0) = arcs[0] against P(v2,v0') = arcs[3] reversed
    //   pair 1: P(v1,v0) = arcs[1] reversed against P(v1,v0') = arcs[2]
    if let PatchCorners::Lopsp { .. } = p.corners {
        let path = |arc_id: usize, reversed: bool| -> (Vec<u32>, usize, bool) {
            let mut walk = a.arcs[arc_id].clone();
            if reversed {
                walk.reverse();
            }
            (walk, arc_id, reversed)
        };
        let pairs = [(path(0, false), path(3, true)), (path(1, true), path(2, false))];
        for (pair, ((pa, arc_a, rev_a), (pb, arc_b, rev_b))) in pairs.into_iter().enumerate() {
            if pa.len() != pb.len() {
                out.push(Violation::PathLengths { pair });
                continue;
            }
            for (j, (&x, &y)) in pa.iter().zip(pb.iter()).enumerate() {
                if p.labels[x as usize] != p.labels[y as usize] {
                    out.push(Violation::PathLabels { pair, position: j });
                }
            }
            let edges_n = pa.len() - 1;
            let tri_on = |arc_id: usize, j: usize, reversed: bool| -> usize {
                let idx = if reversed { edges_n - 1 - j } else { j };
                a.arc_tris[arc_id][idx] as usize
            };
            if colors_ok {
                for j in 0..edges_n {
                    let ta = tri_on(arc_a, j, rev_a);
                    let tb = tri_on(arc_b, j, rev_b);
                    if p.colors[ta] == p.colors[tb] {
                        out.push(Violation::PathColors { pair, position: j });
                    }
                }
            }
            // paired vertex chamber sums, excluding corner endpoints
            for j in 1..pa.len().saturating_sub(1) {
                let (x, y) = (pa[j], pb[j]);
                let label = p.labels[x as usize];
                if label != p.labels[y as usize] {
                    continue;
                }
                let sum = a.cnt[x as usize] + a.cnt[y as usize];
                let ok = if label == 1 { sum == 4 } else { sum >= 6 && sum.is_multiple_of(2) };
                if !ok {
                    out.push(Violation::PairedVertexChambers {
                        vertex: x,
                        partner: y,
                        label,
                        chambers: sum,
                    });
                }
            }
        }
    }

    out
}

/// Canonical code: minimum over all start chambers of a breadth-first
/// encoding of the label-typed adjacency, boundary arc ids, and corner
/// roles. For lsp patches colors are omitted (a global color swap does not
/// change the operation); for lopsp patches the start color is included, so
/// mirrors of chiral patches code differently.
pub fn canonical_code_with(p: &Patch, a: &Analysis) -> Vec<u8> {
    let tn = p.tris.len();
    let mut role = vec![0u32; p.labels.len()];
    let lopsp = match p.corners {
        PatchCorners::Lsp { v0, v1, v2 } => {
            role[v0 as usize] = 1;
            role[v1 as usize] = 2;
            role[v2 as usize] = 3;
            false
        }
        PatchCorners::Lopsp { v2, v0, v1, v0p } => {
            role[v2 as usize] = 1;
            role[v0 as usize] = 2;
            role[v1 as usize] = 3;
            role[v0p as usize] = 4;
            true
        }
    };

    let mut best: Option<Vec<u32>> = None;
    for root in 0..tn as u32 {
        let mut code = Vec::with_capacity(2 + 6 * tn);
        code.push(if lopsp { 1 } else { 0 });
        code.push(tn as u32);
        if lopsp {
            code.push(p.colors[root as usize] as u32);
        }
        let mut idx = vec![u32::MAX; tn];
        let mut order = vec![root];
        idx[root as usize] = 0;
        let mut next = 1u32;
        let mut i = 0;
        while i < order.len() {
            let t = order[i] as usize;
            for lab in 0..3usize {
                match a.nbr[t][lab] {
                    Nbr::Interior(o) => {
                        if idx[o as usize] == u32::MAX {
                            idx[o as usize] = next;
                            next += 1;
                            order.push(o);
                        }
                        code.push(5 + idx[o as usize]);
                    }
                    Nbr::Boundary { arc, .. } => code.push(arc as u32),
                }
            }
            for lab in 0..3usize {
                let v = p.tris[t][a.lab_pos[t][lab] as usize];
                code.push(role[v as usize]);
            }
            i += 1;
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    let best = best.unwrap();
    let mut bytes = Vec::with_capacity(4 * best.len());
    for w in best {
        bytes.extend_from_slice(&w.to_be_bytes());
    }
    bytes
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn identity_patch() -> Patch {
        Patch {
            labels: vec![0, 1, 2],
            tris: vec![[0, 1, 2]],
            colors: vec![0],
            corners: PatchCorners::Lsp { v0: 0, v1: 1, v2: 2 },
        }
    }

    pub fn dual_patch() -> Patch {
        Patch {
            labels: vec![2, 1, 0],
            tris: vec![[0, 1, 2]],
            colors: vec![0],
            corners: PatchCorners::Lsp { v0: 0, v1: 1, v2: 2 },
        }
    }

    fn ambo_a() -> Patch {
        Patch {
            labels: vec![2, 0, 2, 1],
            tris: vec![[0, 1, 3], [2, 1, 3]],
            colors: vec![0, 1],
            corners: PatchCorners::Lsp { v0: 0, v1: 1, v2: 2 },
        }
    }

    fn ambo_b() -> Patch {
        // same complex, renumbered vertices and swapped colors
        Patch {
            labels: vec![1, 2, 0, 2],
            tris: vec![[1, 2, 0], [3, 2, 0]],
            colors: vec![1, 0],
            corners: PatchCorners::Lsp { v0: 1, v1: 2, v2: 3 },
        }
    }

    fn identity_lopsp() -> Patch {
        // two chambers sharing the edge a-b; a = v1, b = v2
        Patch {
            labels: vec![1, 2, 0, 0],
            tris: vec![[0, 1, 2], [0, 1, 3]],
            colors: vec![0, 1],
            corners: PatchCorners::Lopsp { v2: 1, v0: 2, v1: 0, v0p: 3 },
        }
    }

    #[test]
    fn builtin_singles_validate() {
        assert!(identity_patch().validate().is_empty());
        assert!(dual_patch().validate().is_empty());
        assert!(ambo_a().validate().is_empty());
        assert!(ambo_b().validate().is_empty());
    }

    #[test]
    fn identity_and_dual_codes_differ() {
        let i = identity_patch().canonical_code().unwrap();
        let d = dual_patch().canonical_code().unwrap();
        assert_ne!(i, d);
    }

    #[test]
    fn code_is_numbering_invariant_and_drops_lsp_colors() {
        assert_eq!(ambo_a().canonical_code().unwrap(), ambo_b().canonical_code().unwrap());
        assert_eq!(ambo_a().canonical_code().unwrap(), ambo_a().mirror().canonical_code().unwrap());
        assert_ne!(ambo_a().canonical_code().unwrap(), identity_patch().canonical_code().unwrap());
    }

    #[test]
    fn lsp_sides_derive_in_role_order() {
        let a = ambo_a().analysis().unwrap();
        assert_eq!(a.arcs[0], vec![0, 1]);
        assert_eq!(a.arcs[1], vec![1, 2]);
        assert_eq!(a.arcs[2], vec![2, 3, 0]);
        assert_eq!(a.arc_tris[2], vec![1, 0]);
    }

    #[test]
    fn corner_v1_with_label_zero_and_one_chamber_fails() {
        let p = Patch {
            labels: vec![2, 0, 1],
            tris: vec![[0, 1, 2]],
            colors: vec![0],
            corners: PatchCorners::Lsp { v0: 0, v1: 1, v2: 2 },
        };
        let v = p.validate();
        assert!(v.iter().any(|x| matches!(x, Violation::CornerChambers { corner: "v1", .. })));
    }

    #[test]
    fn vertex_sharing_triangles_are_disconnected() {
        // two triangles sharing only a vertex have no common edge
        let p = Patch {
            labels: vec![0, 1, 2, 0, 1],
            tris: vec![[0, 1, 2], [2, 3, 4]],
            colors: vec![0, 0],
            corners: PatchCorners::Lsp { v0: 0, v1: 1, v2: 3 },
        };
        let v = p.validate();
        assert_eq!(v.len(), 1);
        assert!(matches!(v[0], Violation::NotConnected));
    }

    #[test]
    fn pinched_complex_is_not_a_disk() {
        // an edge-connected strip of five triangles whose two ends meet
        // at vertex 0, so its link splits into two fans
        let p = Patch {
            labels: vec![0, 1, 2, 0, 1, 2],
            tris: vec![[0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 5], [4, 5, 0]],
            colors: vec![0, 1, 0, 1, 0],
            corners: PatchCorners::Lsp { v0: 1, v1: 2, v2: 3 },
        };
        let v = p.validate();
        assert_eq!(v.len(), 1);
        assert!(matches!(v[0], Violation::NotADisk(_)));
    }

    #[test]
    fn interior_one_vertex_needs_four_chambers() {
        // hexagonal fan: center labeled 1 in six chambers
        let p = Patch {
            labels: vec![1, 0, 2, 0, 2, 0, 2],
            tris: vec![[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 6], [0, 6, 1]],
            colors: vec![0, 1, 0, 1, 0, 1],
            corners: PatchCorners::Lsp { v0: 1, v1: 2, v2: 3 },
        };
        let v = p.validate();
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::InteriorVertex { vertex: 0, label: 1, chambers: 6 })));
    }

    #[test]
    fn minimal_lopsp_validates() {
        let p = identity_lopsp();
        assert!(p.validate().is_empty(), "{:?}", p.validate());
        let a = p.analysis().unwrap();
        assert_eq!(a.arcs.len(), 4);
        assert_eq!(a.arcs[0], vec![1, 2]); // P(v2,v0)
        assert_eq!(a.arcs[2], vec![0, 3]); // P(v1,v0')
    }

    #[test]
    fn lopsp_mirror_swaps_v0_and_v0p() {
        let p = identity_lopsp();
        let m = p.mirror();
        assert!(m.validate().is_empty());
        match (p.corners, m.corners) {
            (PatchCorners::Lopsp { v0, v0p, .. }, PatchCorners::Lopsp { v0: w0, v0p: w0p, .. }) => {
                assert_eq!(v0, w0p);
                assert_eq!(v0p, w0);
            }
            _ => unreachable!(),
        }
        assert_eq!(m.mirror(), p);
    }

    #[test]
    fn lopsp_path_label_mismatch_detected() {
        let mut p = identity_lopsp();
        // break the v0/v0' label symmetry
        p.labels[3] = 2;
        let v = p.validate();
        assert!(!v.is_empty());
        assert!(v.iter().any(|x| matches!(
            x,
            Violation::PathLabels { .. }
                | Violation::TriangleLabels(_)
                | Violation::CornerLabel { .. }
        )));
    }

    #[test]
    fn lopsp_color_clash_detected() {
        let mut p = identity_lopsp();
        p.colors = vec![0, 0];
        let v = p.validate();
        assert!(v.iter().any(|x| matches!(x, Violation::ColorClash(0, 1))));
    }

    #[test]
    fn lopsp_corner_order_enforced() {
        let mut p = identity_lopsp();
        p.corners = PatchCorners::Lopsp { v2: 1, v0: 2, v1: 3, v0p: 0 };
        let v = p.validate();
        assert!(!v.is_empty());
    }

    #[test]
    fn violations_have_readable_messages() {
        let text = Violation::InteriorVertex { vertex: 7, label: 1, chambers: 6 }.to_string();
        assert!(text.contains("interior vertex 7"));
        assert!(text.contains('1'));
        assert!(text.contains('6'));
    }
}
