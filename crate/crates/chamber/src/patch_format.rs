//! Text format for patches. Line-oriented, `#` starts a comment:
//!
//! ```text
//! lsp                  (or lopsp)
//! vertices 4
//! v 0 2 v0             (id, label, optional corner role v0|v1|v2|v0')
//! v 1 0
//! v 2 2 v1
//! v 3 1 v2
//! chambers 2
//! c 0 1 3 w            (three vertex ids and a color, w | b)
//! c 2 1 3 b
//! side 0 1 2           (boundary arcs, corner to corner inclusive;
//! side 2 3             lsp: S(v0,v1) S(v1,v2) S(v2,v0),
//! side 3 0             lopsp: four `path` lines P(v2,v0) P(v0,v1)
//! ```                   P(v1,v0') P(v0',v2))
//!
//! The boundary lines are required and are checked against the boundary
//! derived from the chambers; a mismatch is a parse error. Serialization
//! always derives them.

use crate::patch::{Patch, PatchCorners, PatchKind};
use crate::{Error, Result};
use std::fmt::Write as _;

struct Line<'a> {
    no: usize,
    words: Vec<&'a str>,
}

fn significant_lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        if !words.is_empty() {
            out.push(Line { no: i + 1, words });
        }
    }
    out
}

fn bad(no: usize, msg: impl Into<String>) -> Error {
    Error::Parse(format!("line {no}: {}", msg.into()))
}

fn parse_num<T: std::str::FromStr>(no: usize, word: &str, what: &str) -> Result<T> {
    word.parse().map_err(|_| bad(no, format!("expected {what}, got `{word}`")))
}

fn next<'a, 'b>(it: &mut std::slice::Iter<'a, Line<'b>>, what: &str) -> Result<&'a Line<'b>> {
    it.next().ok_or_else(|| Error::Parse(format!("unexpected end of file, expected {what}")))
}

pub fn parse_patch(text: &str) -> Result<Patch> {
    let lines = significant_lines(text);
    let mut it = lines.iter();

    let head = next(&mut it, "`lsp` or `lopsp`")?;
    let kind = match head.words.as_slice() {
        ["lsp"] => PatchKind::Lsp,
        ["lopsp"] => PatchKind::Lopsp,
        _ => return Err(bad(head.no, "expected `lsp` or `lopsp`")),
    };

    let vh = next(&mut it, "`vertices N`")?;
    if vh.words.len() != 2 || vh.words[0] != "vertices" {
        return Err(bad(vh.no, "expected `vertices N`"));
    }
    let n: usize = parse_num(vh.no, vh.words[1], "a vertex count")?;
    if n == 0 {
        return Err(bad(vh.no, "vertex count must be positive"));
    }

    let mut labels = vec![None; n];
    let role_names: &[&str] =
        if kind == PatchKind::Lsp { &["v0", "v1", "v2"] } else { &["v2", "v0", "v1", "v0'"] };
    let mut roles = vec![None; role_names.len()];
    for _ in 0..n {
        let l = next(&mut it, "a `v` line")?;
        if l.words.len() < 3 || l.words.len() > 4 || l.words[0] != "v" {
            return Err(bad(l.no, "expected `v <id> <label> [corner]`"));
        }
        let id: usize = parse_num(l.no, l.words[1], "a vertex id")?;
        if id >= n {
            return Err(bad(l.no, format!("vertex id {id} out of range (count {n})")));
        }
        if labels[id].is_some() {
            return Err(bad(l.no, format!("vertex {id} declared twice")));
        }
        labels[id] = Some(parse_num::<u8>(l.no, l.words[2], "a label")?);
        if let Some(&role) = l.words.get(3) {
            let Some(r) = role_names.iter().position(|&x| x == role) else {
                return Err(bad(l.no, format!("unknown corner role `{role}`")));
            };
            if roles[r].is_some() {
                return Err(bad(l.no, format!("corner role `{role}` assigned twice")));
            }
            roles[r] = Some(id as u32);
        }
    }
    let labels: Vec<u8> = labels.into_iter().map(|l| l.unwrap()).collect();
    for (r, v) in roles.iter().enumerate() {
        if v.is_none() {
            return Err(Error::Parse(format!("corner role `{}` never assigned", role_names[r])));
        }
    }
    let corners = match kind {
        PatchKind::Lsp => PatchCorners::Lsp {
            v0: roles[0].unwrap(),
            v1: roles[1].unwrap(),
            v2: roles[2].unwrap(),
        },
        PatchKind::Lopsp => PatchCorners::Lopsp {
            v2: roles[0].unwrap(),
            v0: roles[1].unwrap(),
            v1: roles[2].unwrap(),
            v0p: roles[3].unwrap(),
        },
    };

    let ch = next(&mut it, "`chambers K`")?;
    if ch.words.len() != 2 || ch.words[0] != "chambers" {
        return Err(bad(ch.no, "expected `chambers K`"));
    }
    let k: usize = parse_num(ch.no, ch.words[1], "a chamber count")?;
    let mut tris = Vec::with_capacity(k);
    let mut colors = Vec::with_capacity(k);
    for _ in 0..k {
        let l = next(&mut it, "a `c` line")?;
        if l.words.len() != 5 || l.words[0] != "c" {
            return Err(bad(l.no, "expected `c <a> <b> <c> w|b`"));
        }
        let mut t = [0u32; 3];
        for (slot, word) in t.iter_mut().zip(&l.words[1..4]) {
            let id: usize = parse_num(l.no, word, "a vertex id")?;
            if id >= n {
                return Err(bad(l.no, format!("vertex id {id} out of range (count {n})")));
            }
            *slot = id as u32;
        }
        tris.push(t);
        colors.push(match l.words[4] {
            "w" => 0,
            "b" => 1,
            other => return Err(bad(l.no, format!("expected color w or b, got `{other}`"))),
        });
    }

    let (arc_word, arc_count) = if kind == PatchKind::Lsp { ("side", 3) } else { ("path", 4) };
    let mut declared = Vec::with_capacity(arc_count);
    let mut arc_line_no = 0;
    for _ in 0..arc_count {
        let l = next(&mut it, &format!("a `{arc_word}` line"))?;
        if l.words.len() < 3 || l.words[0] != arc_word {
            return Err(bad(l.no, format!("expected `{arc_word} <id> <id> ...`")));
        }
        let mut arc = Vec::with_capacity(l.words.len() - 1);
        for word in &l.words[1..] {
            let id: usize = parse_num(l.no, word, "a vertex id")?;
            if id >= n {
                return Err(bad(l.no, format!("vertex id {id} out of range (count {n})")));
            }
            arc.push(id as u32);
        }
        declared.push(arc);
        arc_line_no = l.no;
    }
    if let Some(extra) = it.next() {
        return Err(bad(
            extra.no,
            format!("unexpected `{}` after the boundary lines", extra.words[0]),
        ));
    }

    let patch = Patch { labels, tris, colors, corners };
    // A structurally sound patch must agree with its declared boundary;
    // if the disk structure itself is broken, validation reports that.
    if let Ok(a) = patch.structure() {
        if a.arcs != declared {
            return Err(bad(
                arc_line_no,
                format!(
                    "declared boundary does not match the chambers: declared {:?}, derived {:?}",
                    declared, a.arcs
                ),
            ));
        }
    }
    Ok(patch)
}

pub fn serialize_patch(p: &Patch) -> Result<String> {
    let a = p.structure().map_err(Error::Patch)?;
    let mut out = String::new();
    let (header, arc_word): (&str, &str) = match p.kind() {
        PatchKind::Lsp => ("lsp", "side"),
        PatchKind::Lopsp => ("lopsp", "path"),
    };
    let role_of = |v: u32| -> Option<&'static str> {
        match p.corners {
            PatchCorners::Lsp { v0, v1, v2 } => [(v0, "v0"), (v1, "v1"), (v2, "v2")]
                .into_iter()
                .find(|&(c, _)| c == v)
                .map(|(_, r)| r),
            PatchCorners::Lopsp { v2, v0, v1, v0p } => {
                [(v2, "v2"), (v0, "v0"), (v1, "v1"), (v0p, "v0'")]
                    .into_iter()
                    .find(|&(c, _)| c == v)
                    .map(|(_, r)| r)
            }
        }
    };
    let _ = writeln!(out, "{header}");
    let _ = writeln!(out, "vertices {}", p.labels.len());
    for (v, &label) in p.labels.iter().enumerate() {
        match role_of(v as u32) {
            Some(r) => {
                let _ = writeln!(out, "v {v} {label} {r}");
            }
            None => {
                let _ = writeln!(out, "v {v} {label}");
            }
        }
    }
    let _ = writeln!(out, "chambers {}", p.tris.len());
    for (t, color) in p.tris.iter().zip(&p.colors) {
        let c = if *color == 0 { 'w' } else { 'b' };
        let _ = writeln!(out, "c {} {} {} {c}", t[0], t[1], t[2]);
    }
    for arc in &a.arcs {
        let ids: Vec<String> = arc.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{arc_word} {}", ids.join(" "));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patch::Violation;

    fn truncate_patch() -> Patch {
        Patch {
            labels: vec![2, 1, 2, 0, 1],
            tris: vec![[3, 1, 2], [3, 4, 2], [3, 4, 0]],
            colors: vec![0, 1, 0],
            corners: PatchCorners::Lsp { v0: 0, v1: 1, v2: 2 },
        }
    }

    fn identity_lopsp() -> Patch {
        Patch {
            labels: vec![1, 2, 0, 0],
            tris: vec![[0, 1, 2], [0, 1, 3]],
            colors: vec![0, 1],
            corners: PatchCorners::Lopsp { v2: 1, v0: 2, v1: 0, v0p: 3 },
        }
    }

    #[test]
    fn lsp_round_trip_is_identical() {
        let p = truncate_patch();
        let text = serialize_patch(&p).unwrap();
        let q = parse_patch(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(serialize_patch(&q).unwrap(), text);
    }

    #[test]
    fn lopsp_round_trip_is_identical() {
        let p = identity_lopsp();
        let text = serialize_patch(&p).unwrap();
        assert!(text.starts_with("lopsp\n"));
        assert_eq!(text.matches("\npath ").count(), 4);
        let q = parse_patch(&text).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "\
# single chamber
lsp

vertices 3
v 0 0 v0   # the 0-corner
v 1 1 v1
v 2 2 v2
chambers 1
c 0 1 2 w
side 0 1
side 1 2
side 2 0
";
        let p = parse_patch(text).unwrap();
        assert_eq!(p.labels, vec![0, 1, 2]);
        assert!(p.validate().is_empty());
    }

    #[test]
    fn wrong_boundary_declaration_is_rejected() {
        let p = truncate_patch();
        let good = serialize_patch(&p).unwrap();
        let swapped = good.replace("side 0 3 1", "side 0 1 3");
        let err = parse_patch(&swapped).unwrap_err();
        assert!(err.to_string().contains("declared boundary"), "{err}");
    }

    #[test]
    fn missing_corner_role_is_rejected() {
        let text = "lsp\nvertices 3\nv 0 0 v0\nv 1 1 v1\nv 2 2\nchambers 1\nc 0 1 2 w\nside 0 1\nside 1 2\nside 2 0\n";
        let err = parse_patch(text).unwrap_err();
        assert!(err.to_string().contains("v2"), "{err}");
    }

    #[test]
    fn rule_breaking_patch_still_parses() {
        // interior 1-vertex in six chambers: serialize, reparse, and the
        // violation must survive the trip
        let p = Patch {
            labels: vec![1, 0, 2, 0, 2, 0, 2],
            tris: vec![[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 6], [0, 6, 1]],
            colors: vec![0, 1, 0, 1, 0, 1],
            corners: PatchCorners::Lsp { v0: 1, v1: 2, v2: 3 },
        };
        let text = serialize_patch(&p).unwrap();
        let q = parse_patch(&text).unwrap();
        assert!(q
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::InteriorVertex { vertex: 0, .. })));
    }

    #[test]
    fn truncated_and_garbled_files_are_rejected() {
        assert!(parse_patch("").is_err());
        assert!(parse_patch("lsp\nvertices 2\nv 0 0 v0\n").is_err());
        assert!(parse_patch("triangles 3\n").is_err());
        let text = "lsp\nvertices 3\nv 0 0 v0\nv 1 1 v1\nv 2 2 v2\nchambers 1\nc 0 1 9 w\nside 0 1\nside 1 2\nside 2 0\n";
        assert!(parse_patch(text).is_err());
    }
}
