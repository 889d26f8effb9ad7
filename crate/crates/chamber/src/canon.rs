//! Isomorphism, automorphism counting, and canonical codes for chamber
//! systems. Everything works by propagation: a map of one chamber extends in
//! at most one way, so candidates are cheap to test exhaustively.

use crate::chamber::ChamberSystem;

/// Extend x0 -> y0 to a full isomorphism by propagating through s0, s1, s2.
/// Returns the image table on success. Colors are ignored here; they follow
/// the structure (see `automorphism_orders`).
fn try_map(a: &ChamberSystem, b: &ChamberSystem, x0: u32, y0: u32) -> Option<Vec<u32>> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let mut img = vec![u32::MAX; n];
    img[x0 as usize] = y0;
    let mut hit = vec![false; n];
    hit[y0 as usize] = true;
    let mut stack = vec![x0];
    while let Some(x) = stack.pop() {
        let y = img[x as usize];
        for k in 0..3 {
            let xn = a.s(k, x);
            let yn = b.s(k, y);
            let slot = &mut img[xn as usize];
            if *slot == u32::MAX {
                if hit[yn as usize] {
                    return None;
                }
                *slot = yn;
                hit[yn as usize] = true;
                stack.push(xn);
            } else if *slot != yn {
                return None;
            }
        }
    }
    Some(img)
}

/// (order of the full automorphism group, order of the color-preserving
/// subgroup). An automorphism is determined by the image of chamber 0; it
/// preserves colors exactly when that image has chamber 0's color.
pub fn automorphism_orders(cs: &ChamberSystem) -> (usize, usize) {
    let mut aut = 0;
    let mut aut_plus = 0;
    for y0 in 0..cs.len() as u32 {
        if try_map(cs, cs, 0, y0).is_some() {
            aut += 1;
            if cs.color(y0) == cs.color(0) {
                aut_plus += 1;
            }
        }
    }
    (aut, aut_plus)
}

/// Color-preserving isomorphism test.
pub fn is_isomorphic(a: &ChamberSystem, b: &ChamberSystem) -> bool {
    if a.len() != b.len() {
        return false;
    }
    (0..b.len() as u32).any(|y0| b.color(y0) == a.color(0) && try_map(a, b, 0, y0).is_some())
}

/// Canonical code: the lexicographically smallest breadth-first encoding over
/// all starting chambers, with the start color as a tie-break entry. Two
/// chamber systems get equal codes exactly when they are isomorphic by a
/// color-preserving isomorphism.
pub fn canonical_code(cs: &ChamberSystem) -> Vec<u8> {
    let n = cs.len();
    let mut best: Vec<u32> = Vec::new();
    let mut label = vec![u32::MAX; n];
    let mut order: Vec<u32> = Vec::with_capacity(n);
    let mut code: Vec<u32> = Vec::with_capacity(3 * n + 1);
    for root in 0..n as u32 {
        label.iter_mut().for_each(|l| *l = u32::MAX);
        order.clear();
        code.clear();
        label[root as usize] = 0;
        order.push(root);
        let mut next = 1u32;
        let mut i = 0;
        // -1 behind best, 0 equal so far, 1 ahead (prune)
        let mut cmp = if best.is_empty() { -1 } else { 0 };
        'walk: while i < order.len() {
            let x = order[i];
            for k in 0..3 {
                let y = cs.s(k, x);
                if label[y as usize] == u32::MAX {
                    label[y as usize] = next;
                    next += 1;
                    order.push(y);
                }
                let entry = label[y as usize];
                if cmp == 0 {
                    match entry.cmp(&best[code.len()]) {
                        std::cmp::Ordering::Less => cmp = -1,
                        std::cmp::Ordering::Greater => {
                            cmp = 1;
                            break 'walk;
                        }
                        std::cmp::Ordering::Equal => {}
                    }
                }
                code.push(entry);
            }
            i += 1;
        }
        if cmp == 1 {
            continue;
        }
        code.push(cs.color(root) as u32);
        if cmp == -1 || (cmp == 0 && code < best) {
            std::mem::swap(&mut best, &mut code);
        }
    }
    let mut bytes = Vec::with_capacity(4 * best.len());
    for w in best {
        bytes.extend_from_slice(&w.to_be_bytes());
    }
    bytes
}
