//! The planar_code interchange format: clockwise neighbor lists, 1-indexed,
//! 0-terminated, one unsigned byte per number, with a 0-escape switching the
//! whole graph record to two-byte little-endian numbers.

use crate::error::{Error, Result};
use crate::plane_graph::PlaneGraph;

pub const HEADER: &[u8] = b">>planar_code<<";

pub fn write_planar_code(graphs: &[PlaneGraph]) -> Vec<u8> {
    let mut out = HEADER.to_vec();
    for g in graphs {
        let n = g.vertex_count();
        let adj = g.adjacency();
        if n <= 255 {
            out.push(n as u8);
            for nbrs in &adj {
                for &v in nbrs {
                    out.push((v + 1) as u8);
                }
                out.push(0);
            }
        } else {
            assert!(n <= u16::MAX as usize, "graph too large for planar_code");
            out.push(0);
            out.extend_from_slice(&(n as u16).to_le_bytes());
            for nbrs in &adj {
                for &v in nbrs {
                    out.extend_from_slice(&((v + 1) as u16).to_le_bytes());
                }
                out.extend_from_slice(&0u16.to_le_bytes());
            }
        }
    }
    out
}

pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>> {
    let mut rest = bytes;
    if rest.starts_with(HEADER) {
        rest = &rest[HEADER.len()..];
    }
    let mut graphs = Vec::new();
    while !rest.is_empty() {
        let (g, used) = read_one(rest)?;
        graphs.push(g);
        rest = &rest[used..];
    }
    if graphs.is_empty() {
        return Err(Error::Parse("empty planar_code stream".into()));
    }
    Ok(graphs)
}

fn read_one(bytes: &[u8]) -> Result<(PlaneGraph, usize)> {
    let truncated = || Error::Parse("truncated planar_code stream".into());
    let wide = bytes[0] == 0;
    let mut pos = if wide { 1 } else { 0 };
    let mut next = |bytes: &[u8]| -> Result<usize> {
        if wide {
            let b = bytes.get(pos..pos + 2).ok_or_else(truncated)?;
            pos += 2;
            Ok(u16::from_le_bytes([b[0], b[1]]) as usize)
        } else {
            let b = *bytes.get(pos).ok_or_else(truncated)?;
            pos += 1;
            Ok(b as usize)
        }
    };
    let n = next(bytes)?;
    if n == 0 {
        return Err(Error::Parse("planar_code graph with zero vertices".into()));
    }
    let mut adj = vec![Vec::new(); n];
    for nbrs in adj.iter_mut() {
        loop {
            let v = next(bytes)?;
            if v == 0 {
                break;
            }
            if v > n {
                return Err(Error::Parse(format!(
                    "planar_code neighbor {v} out of range (n = {n})"
                )));
            }
            nbrs.push(v - 1);
        }
    }
    let g = PlaneGraph::from_rotations(&adj)?;
    Ok((g, pos))
}
