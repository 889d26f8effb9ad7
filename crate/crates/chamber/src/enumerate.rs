//! Exhaustive generation of lsp patches with a given inflation rate.
//!
//! Every triangulated disk is shellable, so building disks one chamber at
//! a time reaches all of them with two moves: glue a fresh-apex chamber
//! onto a boundary edge, or fill the ear across two consecutive boundary
//! edges. Labels then propagate from a single chamber (each shared edge
//! forces the opposite label), colors from the bipartition of chamber
//! adjacency, and corners are tried in all ways; full patch validation is
//! the only filter, so the enumeration cannot drift from the rules it is
//! supposed to explore.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::patch::{Patch, PatchCorners};

/// Largest supported inflation rate. The search is exhaustive, so the
/// cost grows quickly; past this the catalog stops being desk-sized.
pub const MAX_RATE: usize = 8;

#[derive(Clone)]
struct Disk {
    nv: u32,
    tris: Vec<[u32; 3]>,
}

fn edge_key(a: u32, b: u32) -> (u32, u32) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn edge_counts(tris: &[[u32; 3]]) -> BTreeMap<(u32, u32), usize> {
    let mut out = BTreeMap::new();
    for t in tris {
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            *out.entry(edge_key(a, b)).or_insert(0) += 1;
        }
    }
    out
}

/// All one-chamber extensions that keep the complex a disk.
fn grow(d: &Disk) -> Vec<Disk> {
    let edges = edge_counts(&d.tris);
    let boundary: Vec<(u32, u32)> =
        edges.iter().filter(|&(_, &c)| c == 1).map(|(&e, _)| e).collect();

    let mut out = Vec::new();
    for &(u, v) in &boundary {
        let mut tris = d.tris.clone();
        tris.push([u, v, d.nv]);
        out.push(Disk { nv: d.nv + 1, tris });
    }

    // the two boundary edges at each boundary vertex
    let mut at: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for &(u, v) in &boundary {
        at.entry(u).or_default().push(v);
        at.entry(v).or_default().push(u);
    }
    for (&x, ends) in &at {
        let (u, w) = (ends[0], ends[1]);
        if !edges.contains_key(&edge_key(u, w)) {
            let mut tris = d.tris.clone();
            tris.push([u, x, w]);
            out.push(Disk { nv: d.nv, tris });
        }
    }
    out
}

/// Canonical form of a bare disk (no labels yet): relabel from every
/// seed chamber orientation, emitting the smallest reachable chamber
/// each step, and keep the smallest transcript.
fn disk_code(d: &Disk) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for t in 0..d.tris.len() {
        let [a, b, c] = d.tris[t];
        for seed in [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
            let mut map: BTreeMap<u32, u32> = BTreeMap::new();
            for v in seed {
                let next = map.len() as u32;
                map.insert(v, next);
            }
            let mut done = vec![false; d.tris.len()];
            let mut code = Vec::with_capacity(3 * d.tris.len());
            for _ in 0..d.tris.len() {
                // the unprocessed chamber with >= 2 mapped vertices whose
                // mapped image sorts lowest; dual connectivity guarantees one
                let pick = d
                    .tris
                    .iter()
                    .enumerate()
                    .filter(|&(i, tri)| {
                        !done[i] && tri.iter().filter(|v| map.contains_key(v)).count() >= 2
                    })
                    .map(|(i, tri)| {
                        let mut img: Vec<u32> =
                            tri.iter().map(|v| *map.get(v).unwrap_or(&u32::MAX)).collect();
                        img.sort_unstable();
                        (img, i)
                    })
                    .min()
                    .expect("disk chambers are edge-connected");
                let (_, i) = pick;
                for &v in &d.tris[i] {
                    let next = map.len() as u32;
                    map.entry(v).or_insert(next);
                }
                let mut img: Vec<u32> = d.tris[i].iter().map(|v| map[v]).collect();
                img.sort_unstable();
                code.extend(img);
                done[i] = true;
            }
            if best.as_ref().is_none() || best.as_ref().unwrap() > &code {
                best = Some(code);
            }
        }
    }
    best.unwrap()
}

/// All triangulated disks with exactly `t` chambers, one per isomorphism
/// class.
fn disks(t: usize) -> Vec<Disk> {
    let mut level = vec![Disk { nv: 3, tris: vec![[0, 1, 2]] }];
    for _ in 1..t {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for d in &level {
            for g in grow(d) {
                if seen.insert(disk_code(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

/// Vertex labels forced by assigning `perm` to the first chamber: across
/// every shared edge the opposite vertices carry the same missing label.
fn propagate_labels(d: &Disk, perm: [u8; 3]) -> Option<Vec<u8>> {
    let mut lab: Vec<Option<u8>> = vec![None; d.nv as usize];
    for (slot, &v) in d.tris[0].iter().enumerate() {
        lab[v as usize] = Some(perm[slot]);
    }
    let mut tri_of: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
    for (i, t) in d.tris.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            tri_of.entry(edge_key(a, b)).or_default().push(i);
        }
    }
    let mut done = vec![false; d.tris.len()];
    done[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let t = d.tris[i];
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            for &j in &tri_of[&edge_key(a, b)] {
                if done[j] {
                    continue;
                }
                let (la, lb) = (lab[a as usize]?, lab[b as usize]?);
                if la == lb {
                    return None;
                }
                let other = d.tris[j].iter().find(|&&v| v != a && v != b).unwrap();
                let want = 3 - la - lb;
                match lab[*other as usize] {
                    Some(l) if l != want => return None,
                    _ => lab[*other as usize] = Some(want),
                }
                done[j] = true;
                queue.push_back(j);
            }
        }
    }
    let lab: Vec<u8> = lab.into_iter().collect::<Option<_>>()?;
    for t in &d.tris {
        let mut seen = [false; 3];
        for &v in t {
            seen[lab[v as usize] as usize] = true;
        }
        if seen.iter().any(|s| !s) {
            return None;
        }
    }
    Some(lab)
}

/// 2-coloring of chamber adjacency, if one exists.
fn bipartition(d: &Disk) -> Option<Vec<u8>> {
    let mut tri_of: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
    for (i, t) in d.tris.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            tri_of.entry(edge_key(a, b)).or_default().push(i);
        }
    }
    let mut col: Vec<Option<u8>> = vec![None; d.tris.len()];
    col[0] = Some(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for tris in tri_of.values() {
            if tris.len() == 2 && tris.contains(&i) {
                let j = tris[0] + tris[1] - i;
                let want = 1 - col[i].unwrap();
                match col[j] {
                    Some(c) if c != want => return None,
                    Some(_) => {}
                    None => {
                        col[j] = Some(want);
                        queue.push_back(j);
                    }
                }
            }
        }
    }
    col.into_iter().collect()
}

/// All valid lsp patches with exactly `g` chambers, one per isomorphism
/// class, sorted by canonical code.
pub fn enumerate_lsp(g: usize) -> Result<Vec<Patch>> {
    if g == 0 {
        return Err(Error::Unsupported("inflation rate must be positive".into()));
    }
    if g > MAX_RATE {
        return Err(Error::Unsupported(format!(
            "inflation rate {g} exceeds the enumeration bound {MAX_RATE}"
        )));
    }

    let mut found: BTreeMap<Vec<u8>, Patch> = BTreeMap::new();
    for d in disks(g) {
        let Some(colors) = bipartition(&d) else { continue };
        let edges = edge_counts(&d.tris);
        let mut on_boundary: BTreeSet<u32> = BTreeSet::new();
        for (&(u, v), &c) in &edges {
            if c == 1 {
                on_boundary.insert(u);
                on_boundary.insert(v);
            }
        }
        let boundary: Vec<u32> = on_boundary.into_iter().collect();

        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let Some(labels) = propagate_labels(&d, perm) else { continue };
            for &v0 in &boundary {
                for &v1 in &boundary {
                    for &v2 in &boundary {
                        if v0 == v1 || v1 == v2 || v0 == v2 {
                            continue;
                        }
                        let p = Patch {
                            labels: labels.clone(),
                            tris: d.tris.clone(),
                            colors: colors.clone(),
                            corners: PatchCorners::Lsp { v0, v1, v2 },
                        };
                        if p.validate().is_empty() {
                            let code = p.canonical_code()?;
                            found.entry(code).or_insert(p);
                        }
                    }
                }
            }
        }
    }
    Ok(found.into_values().collect())
}
