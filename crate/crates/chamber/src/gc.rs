//! Goldberg-Coxeter patches cut from the hexagonal tiling. The master
//! triangle runs from a hexagon center v2 to the center v0 reached by l
//! steps forward and m steps turned, with v0' its 60-degree rotation and
//! v1 the midpoint of v0 and v0'. Achiral parameters (m = 0 or l = m)
//! yield the lsp patch on the half triangle v2,v1,v0, whose sides lie on
//! mirror axes and cut through no chamber. Chiral parameters yield the
//! lopsp patch on a fundamental domain of the group generated by the
//! corner rotations; the straight triangle guides the choice of domain,
//! but near corners the chambers it selects may leave a corner without
//! any incident chamber, so the construction searches a small family of
//! tie-break and exchange variants and keeps the first domain whose
//! boundary is a simple cycle through all four corners with the two
//! path pairs matching under the corner rotations.

use crate::hex::{
    goldberg_corners, GoldbergCorners, GoldbergSpec, HexPoint, LatticeChamber, PointClass,
    HEX_OFFSETS,
};
use crate::patch::{Patch, PatchCorners};
use crate::Result;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

fn rot_about(q: HexPoint, steps: u32, p: HexPoint) -> HexPoint {
    q + (p - q).rotk(steps)
}

fn map_chamber(x: &LatticeChamber, f: impl Fn(HexPoint) -> HexPoint) -> LatticeChamber {
    LatticeChamber { v: f(x.v), m: f(x.m), c: f(x.c) }
}

fn touches(x: &LatticeChamber, q: HexPoint) -> bool {
    x.v == q || x.m == q || x.c == q
}

pub fn gc_patch(l: i64, m: i64) -> Result<Patch> {
    let spec = GoldbergSpec::new(l, m)?;
    let k = goldberg_corners(spec);
    let tri = if spec.achiral() { [k.v2, k.v1, k.v0] } else { [k.v2, k.v0, k.v0p] };
    let orient = (tri[1] - tri[0]).cross(tri[2] - tri[0]).signum();
    assert!(orient != 0);

    // Chamber centroids are sixfold points, triangle corners doubled ones;
    // scaling the corners by three puts both on the same grid.
    let side_sign = |i: usize, p: HexPoint| -> i64 {
        let a = tri[i];
        let b = tri[(i + 1) % 3];
        (b - a).cross(p - HexPoint::new(3 * a.a, 3 * a.b)).signum()
    };

    // Every chamber lies in exactly one hexagon, so scanning the face
    // centers of a box around the triangle enumerates each candidate once.
    // Coordinates are linear, so points inside the triangle stay between
    // the extremes of its corners. Chambers whose centroid sits exactly on
    // a side line straddle it and are kept apart per side.
    let mut core: BTreeSet<LatticeChamber> = BTreeSet::new();
    let mut strad: [BTreeSet<LatticeChamber>; 3] = Default::default();
    let lo = |f: fn(&HexPoint) -> i64| tri.iter().map(f).min().unwrap() - 2;
    let hi = |f: fn(&HexPoint) -> i64| tri.iter().map(f).max().unwrap() + 2;
    for a in lo(|p| p.a)..=hi(|p| p.a) {
        for b in lo(|p| p.b)..=hi(|p| p.b) {
            let c = HexPoint::new(2 * a, 2 * b);
            if c.classify() != PointClass::FaceCenter {
                continue;
            }
            for i in 0..6 {
                let va = c + HEX_OFFSETS[i];
                let vb = c + HEX_OFFSETS[(i + 1) % 6];
                let mid = HexPoint::new((va.a + vb.a) / 2, (va.b + vb.b) / 2);
                for v in [va, vb] {
                    let x = LatticeChamber { v, m: mid, c };
                    debug_assert!(x.is_valid());
                    let p = x.centroid6();
                    let s = [side_sign(0, p), side_sign(1, p), side_sign(2, p)];
                    if s.iter().all(|&v| v == orient) {
                        core.insert(x);
                    } else if !s.iter().any(|&v| v == -orient) {
                        let zeros: Vec<usize> = (0..3).filter(|&i| s[i] == 0).collect();
                        assert_eq!(zeros.len(), 1, "gc({l},{m}): centroid on two sides: {x:?}");
                        strad[zeros[0]].insert(x);
                    }
                }
            }
        }
    }

    let expect = if spec.achiral() { spec.t() } else { 2 * spec.t() } as usize;
    if spec.achiral() {
        // the sides are mirror axes, which no centroid reaches
        assert!(strad.iter().all(|s| s.is_empty()), "gc({l},{m}): centroid on a mirror axis");
        assert_eq!(core.len(), expect, "gc({l},{m}) region has the wrong chamber count");
        return Ok(build_domain(&core, &k, spec)
            .unwrap_or_else(|e| panic!("gc({l},{m}) patch failed validation: {e}")));
    }

    // The rotation by 60 degrees about v2 carries the v2,v0 side onto the
    // v2,v0' side, pairing their straddlers one to one, and the rotation
    // by 180 degrees about v1 pairs the straddlers of v0,v0' across the
    // two halves of that side. A fundamental domain takes one chamber per
    // pair. Which choices leave every corner a nonempty fan and the whole
    // a disk depends on how the lattice falls against the lines, so start
    // from the four pair choices and search over exchanges.
    assert_eq!(strad[0].len(), strad[2].len(), "gc({l},{m}): unpaired side straddlers");
    let v0p_half = k.v1.cross(k.v0p).signum();
    assert!(v0p_half != 0);
    let (half_p, half_0): (BTreeSet<LatticeChamber>, BTreeSet<LatticeChamber>) =
        strad[1].iter().partition(|x| {
            let h = k.v1.cross(x.centroid6()).signum();
            assert!(h != 0, "gc({l},{m}): centroid on the spine: {x:?}");
            h == v0p_half
        });
    assert_eq!(half_p.len(), half_0.len(), "gc({l},{m}): unpaired spine straddlers");

    let mut bases: Vec<BTreeSet<LatticeChamber>> = Vec::new();
    for (keep_side, keep_half) in [(2, &half_p), (2, &half_0), (0, &half_p), (0, &half_0)] {
        let mut base = core.clone();
        base.extend(strad[keep_side].iter().copied());
        base.extend(keep_half.iter().copied());
        assert_eq!(base.len(), expect, "gc({l},{m}) region has the wrong chamber count");
        if !bases.contains(&base) {
            bases.push(base);
        }
    }

    Ok(search_domains(bases, &k, spec)
        .unwrap_or_else(|e| panic!("gc({l},{m}): no valid fundamental domain found: {e}")))
}

/// Breadth-first search over exchange variants of the straight-line
/// domains. Every move swaps one chamber for another member of its orbit
/// under the rotation group, so each state stays a transversal; the
/// first state to pass the full domain check wins. Queue order and set
/// ordering make the outcome deterministic.
fn search_domains(
    bases: Vec<BTreeSet<LatticeChamber>>,
    k: &GoldbergCorners,
    spec: GoldbergSpec,
) -> std::result::Result<Patch, String> {
    let mut queue: VecDeque<BTreeSet<LatticeChamber>> = bases.into_iter().collect();
    let mut seen: BTreeSet<BTreeSet<LatticeChamber>> = queue.iter().cloned().collect();
    let mut last = String::from("no candidate domains");
    while let Some(dom) = queue.pop_front() {
        match build_domain(&dom, k, spec) {
            Ok(p) => return Ok(p),
            Err(e) => last = e,
        }
        if seen.len() >= 4000 {
            continue;
        }
        for next in repair_moves(&dom, k) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Err(last)
}

/// Exchanges that target the two ways a straight-line domain goes wrong.
/// A corner whose fan came out empty takes a chamber back from the
/// opposite corner (the two fans split one set of orbits between them),
/// and a component cut off from the rest pulls in an outside neighbor in
/// place of that neighbor's in-domain orbit mate.
fn repair_moves(
    dom: &BTreeSet<LatticeChamber>,
    k: &GoldbergCorners,
) -> Vec<BTreeSet<LatticeChamber>> {
    let swap = |x: &LatticeChamber, y: LatticeChamber| {
        let mut next = dom.clone();
        next.remove(x);
        next.insert(y);
        next
    };
    let fan = |q: HexPoint| -> Vec<LatticeChamber> {
        dom.iter().filter(|x| touches(x, q)).copied().collect()
    };
    let mut out = Vec::new();
    let fan_v0 = fan(k.v0);
    let fan_v0p = fan(k.v0p);
    for (empty, movers, target, turns) in
        [(&fan_v0p, &fan_v0, k.v0p, 1), (&fan_v0, &fan_v0p, k.v0, 5)]
    {
        if !empty.is_empty() || movers.len() < 2 {
            continue;
        }
        for x in movers {
            for i in 0..3 {
                let y = map_chamber(x, |p| rot_about(target, 2 * i, p.rotk(turns)));
                debug_assert!(y.is_valid() && touches(&y, target));
                if !dom.contains(&y) {
                    out.push(swap(x, y));
                }
            }
        }
    }
    for comp in components(dom).iter().skip(1) {
        for x in comp {
            for j in 0..3 {
                let n = x.s(j);
                if dom.contains(&n) {
                    continue;
                }
                let Some(r) = orbit_mate_in(dom, k, &n) else { continue };
                if !comp.contains(&r) {
                    out.push(swap(&r, n));
                }
            }
        }
    }
    out
}

/// Connected components under chamber adjacency, largest first.
fn components(dom: &BTreeSet<LatticeChamber>) -> Vec<BTreeSet<LatticeChamber>> {
    let mut left = dom.clone();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        left.remove(&start);
        let mut comp = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for j in 0..3 {
                let n = x.s(j);
                if left.remove(&n) {
                    comp.insert(n);
                    stack.push(n);
                }
            }
        }
        out.push(comp);
    }
    out.sort_by_key(|c| std::cmp::Reverse(c.len()));
    out
}

/// The member of n's orbit that lies in the domain, if any. The group is
/// generated by the rotations about v2 and v1, so its elements rotate by
/// a multiple of 60 degrees about v2 and then translate by the lattice
/// spanned by v0 + v0' and its rotation.
fn orbit_mate_in(
    dom: &BTreeSet<LatticeChamber>,
    k: &GoldbergCorners,
    n: &LatticeChamber,
) -> Option<LatticeChamber> {
    let t1 = k.v0 + k.v0p;
    let t2 = k.v0p + (k.v0p - k.v0);
    let det = t1.cross(t2);
    for turn in 0..6 {
        let img = map_chamber(n, |p| p.rotk(turn));
        for d in dom {
            let dv = d.v - img.v;
            if d.m - img.m != dv || d.c - img.c != dv {
                continue;
            }
            if dv.cross(t2) % det == 0 && t1.cross(dv) % det == 0 {
                return Some(*d);
            }
        }
    }
    None
}

/// Assemble the chamber set into a patch and verify it: the corners must
/// all appear, the complex must pass patch validation, and for a chiral
/// domain the boundary paths must correspond under the corner rotations,
/// v2,v0 onto v2,v0' by the 60-degree turn about v2 and v0,v1 onto
/// v0',v1 by the half turn about v1.
fn build_domain(
    set: &BTreeSet<LatticeChamber>,
    k: &GoldbergCorners,
    spec: GoldbergSpec,
) -> std::result::Result<Patch, String> {
    let mut points: BTreeSet<(i64, i64)> = BTreeSet::new();
    for x in set {
        for p in [x.v, x.m, x.c] {
            points.insert((p.a, p.b));
        }
    }
    let ids: BTreeMap<(i64, i64), u32> =
        points.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();
    let pts: Vec<HexPoint> = points.iter().map(|&(a, b)| HexPoint::new(a, b)).collect();
    let mut labels = vec![0u8; ids.len()];
    for (&(a, b), &i) in &ids {
        labels[i as usize] = match HexPoint::new(a, b).classify() {
            PointClass::LeftVertex | PointClass::RightVertex => 0,
            PointClass::EdgeCenter => 1,
            PointClass::FaceCenter => 2,
            PointClass::Other => unreachable!(),
        };
    }
    let mut tris = Vec::with_capacity(set.len());
    let mut colors = Vec::with_capacity(set.len());
    for x in set {
        tris.push([ids[&(x.v.a, x.v.b)], ids[&(x.m.a, x.m.b)], ids[&(x.c.a, x.c.b)]]);
        colors.push(x.color());
    }
    let id_of = |p: HexPoint| -> std::result::Result<u32, String> {
        ids.get(&(p.a, p.b)).copied().ok_or_else(|| format!("corner {p:?} not in the domain"))
    };
    let corners = if spec.achiral() {
        PatchCorners::Lsp { v0: id_of(k.v0)?, v1: id_of(k.v1)?, v2: id_of(k.v2)? }
    } else {
        PatchCorners::Lopsp {
            v2: id_of(k.v2)?,
            v0: id_of(k.v0)?,
            v1: id_of(k.v1)?,
            v0p: id_of(k.v0p)?,
        }
    };
    let patch = Patch { labels, tris, colors, corners };
    let analysis = patch.analysis().map_err(|e| e.to_string())?;
    if !spec.achiral() {
        let paired = |arc_a: &[u32], arc_b: &[u32], f: &dyn Fn(HexPoint) -> HexPoint| -> bool {
            arc_a.len() == arc_b.len()
                && (0..arc_a.len())
                    .all(|i| f(pts[arc_a[i] as usize]) == pts[arc_b[arc_b.len() - 1 - i] as usize])
        };
        if !paired(&analysis.arcs[0], &analysis.arcs[3], &|p| p.rotk(1)) {
            return Err("v2 paths do not match under the 60-degree turn".into());
        }
        if !paired(&analysis.arcs[1], &analysis.arcs[2], &|p| rot_about(k.v1, 3, p)) {
            return Err("v1 paths do not match under the half turn".into());
        }
    }
    Ok(patch)
}
