//! Operation expressions. An operation is named by a builtin patch
//! (`truncate`, `snub`, ...), an alias that expands to a composition
//! (`kis`, `bevel`, ...), a parameter form (`gc(l,m)`, `ck(a,b)`), or a
//! patch file (`file:PATH`). `*` composes: the right factor is applied
//! first. Wherever the outer factor of a composition preserves all
//! symmetries, the pair is merged into a single patch, so an expression
//! normalizes to a short sequence of stages.

use std::collections::BTreeMap;
use std::fs;

use crate::apply::apply;
use crate::chamber::ChamberSystem;
use crate::error::{Error, Result};
use crate::gc::gc_patch;
use crate::patch::{Patch, PatchCorners, PatchKind};
use crate::patch_format::parse_patch;

const BUILTINS: &[(&str, &str)] = &[
    ("identity", include_str!("../patches/identity.lsp")),
    ("dual", include_str!("../patches/dual.lsp")),
    ("ambo", include_str!("../patches/ambo.lsp")),
    ("truncate", include_str!("../patches/truncate.lsp")),
    ("chamfer", include_str!("../patches/chamfer.lsp")),
    ("quinto", include_str!("../patches/quinto.lsp")),
    ("snub", include_str!("../patches/snub.lopsp")),
    ("propellor", include_str!("../patches/propellor.lopsp")),
    ("whirl", include_str!("../patches/whirl.lopsp")),
];

/// Compositions known by a single name. Expansions are ordinary
/// expressions, so aliases may build on each other.
const ALIASES: &[(&str, &str)] = &[
    ("join", "dual*ambo"),
    ("kis", "dual*truncate*dual"),
    ("ortho", "join*join"),
    ("expand", "ambo*ambo"),
    ("bevel", "truncate*ambo"),
    ("meta", "kis*join"),
    ("gyro", "dual*snub"),
];

pub fn builtin_names() -> Vec<&'static str> {
    BUILTINS.iter().map(|&(n, _)| n).collect()
}

pub fn alias_names() -> Vec<&'static str> {
    ALIASES.iter().map(|&(n, _)| n).collect()
}

/// The patch behind a builtin name, if there is one.
pub fn builtin(name: &str) -> Option<Patch> {
    BUILTINS
        .iter()
        .find(|&&(n, _)| n == name)
        .map(|&(_, text)| parse_patch(text).expect("builtin patch files parse"))
}

/// A parsed operation expression, normalized to stages in application
/// order. Only the first stage can be orientation-agnostic; everything
/// merged into it came from symmetry-preserving outer factors.
#[derive(Clone, Debug)]
pub struct Operation {
    pub display: String,
    pub stages: Vec<Patch>,
}

pub fn parse_operation(text: &str) -> Result<Operation> {
    let display = text.trim().to_string();
    if display.is_empty() {
        return Err(Error::Parse("empty operation expression".into()));
    }
    let atoms = expr_atoms(&display)?;
    Operation::from_atoms(display, atoms)
}

/// Atoms of an expression in application order (rightmost factor first).
fn expr_atoms(text: &str) -> Result<Vec<Patch>> {
    let mut out = Vec::new();
    for term in text.split('*').rev() {
        out.extend(term_atoms(term.trim())?);
    }
    Ok(out)
}

fn term_atoms(term: &str) -> Result<Vec<Patch>> {
    if term.is_empty() {
        return Err(Error::Parse("empty factor in operation expression".into()));
    }
    if let Some(path) = term.strip_prefix("file:") {
        let text = fs::read_to_string(path)?;
        let p = parse_patch(&text)?;
        let v = p.validate();
        if !v.is_empty() {
            return Err(Error::Patch(v));
        }
        return Ok(vec![p]);
    }
    if let Some(args) = param_form(term, "gc") {
        let (l, m) = args?;
        return Ok(vec![gc_patch(l, m)?]);
    }
    if let Some(args) = param_form(term, "ck") {
        // Clark-kissing form: the same lattice patch conjugated by duality.
        let (a, b) = args?;
        let dual = builtin("dual").unwrap();
        return Ok(vec![dual.clone(), gc_patch(a, b)?, dual]);
    }
    if let Some(p) = builtin(term) {
        return Ok(vec![p]);
    }
    if let Some(&(_, expansion)) = ALIASES.iter().find(|&&(n, _)| n == term) {
        return expr_atoms(expansion);
    }
    Err(Error::UnknownOperation(term.to_string()))
}

/// `name(x,y)` with two integer arguments, or None if the head differs.
fn param_form(term: &str, name: &str) -> Option<Result<(i64, i64)>> {
    let rest = term.strip_prefix(name)?.strip_prefix('(')?;
    let inner = match rest.strip_suffix(')') {
        Some(i) => i,
        None => return Some(Err(Error::Parse(format!("expected closing `)` in `{term}`")))),
    };
    let mut nums = inner.split(',').map(|s| s.trim().parse::<i64>());
    match (nums.next(), nums.next(), nums.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some(Ok((a, b))),
        _ => Some(Err(Error::Parse(format!("expected `{name}(l,m)` with integers, got `{term}`")))),
    }
}

impl Operation {
    fn from_atoms(display: String, atoms: Vec<Patch>) -> Result<Operation> {
        let mut atoms = atoms.into_iter();
        let mut acc = atoms.next().expect("expressions have at least one factor");
        let mut stages = Vec::new();
        for p in atoms {
            if p.kind() == PatchKind::Lsp {
                acc = materialize(&p, &acc)?;
            } else {
                stages.push(acc);
                acc = p;
            }
        }
        stages.push(acc);
        Ok(Operation { display, stages })
    }

    /// Lopsp when any stage only respects orientation-preserving
    /// symmetries, lsp otherwise.
    pub fn kind(&self) -> PatchKind {
        if self.stages.iter().any(|p| p.kind() == PatchKind::Lopsp) {
            PatchKind::Lopsp
        } else {
            PatchKind::Lsp
        }
    }

    /// Factor by which the operation multiplies edge counts.
    pub fn inflation_rate(&self) -> u64 {
        self.stages
            .iter()
            .map(|p| match p.kind() {
                PatchKind::Lsp => p.chamber_count() as u64,
                PatchKind::Lopsp => (p.chamber_count() / 2) as u64,
            })
            .product()
    }

    pub fn apply_to(&self, cs: &ChamberSystem) -> Result<ChamberSystem> {
        let mut out = apply(cs, &self.stages[0])?;
        for p in &self.stages[1..] {
            out = apply(&out, p)?;
        }
        Ok(out)
    }

    pub fn mirror(&self) -> Operation {
        Operation {
            display: format!("mirror({})", self.display),
            stages: self.stages.iter().map(Patch::mirror).collect(),
        }
    }
}

/// First seed from `names` on which the two operations produce different
/// maps, or None if every listed seed agrees. Results are compared
/// without regard to orientation, since a patch's color convention is
/// arbitrary and mirror-image outputs are the same graph. Agreement on a
/// list is evidence, not proof: seeds too symmetric or too small can
/// mask a difference.
pub fn probe_equivalence(a: &Operation, b: &Operation, names: &[&str]) -> Result<Option<String>> {
    for &name in names {
        let cs = crate::seeds::seed(name)?.barycentric();
        let oa = a.apply_to(&cs)?;
        let ob = b.apply_to(&cs)?;
        if !crate::canon::is_isomorphic(&oa, &ob) && !crate::canon::is_isomorphic(&oa, &ob.mirror())
        {
            return Ok(Some(name.to_string()));
        }
    }
    Ok(None)
}

/// How the merge names a composite vertex. Inner-patch corner vertices
/// are shared by every copy meeting that corner; side vertices are shared
/// by the two copies along the glued side; interior vertices are private.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    Corner(u8, u32),
    Side(u8, u32, u32, u32),
    Fresh(u32, u32),
}

#[derive(Clone, Copy)]
enum OClass {
    Corner(u8),
    Side(u8, u32),
    Interior,
}

/// Side r of an lsp patch runs from corner ARC_ENDS[r].0 to ARC_ENDS[r].1
/// (labels double as corner names).
const ARC_ENDS: [(u8, u8); 3] = [(0, 1), (1, 2), (2, 0)];

/// Compose two operations into one patch: stamp a copy of `outer` into
/// every chamber of `inner`, gluing copies along shared inner edges.
/// `outer` decorates single chambers regardless of orientation, which is
/// exactly what makes the copies fit together; the caller keeps any
/// orientation-sensitive factor as its own stage instead.
pub(crate) fn materialize(outer: &Patch, inner: &Patch) -> Result<Patch> {
    assert_eq!(outer.kind(), PatchKind::Lsp, "only single-chamber patches can be merged");
    let oa = outer.analysis()?;
    let ia = inner.analysis()?;

    let (oc0, oc1, oc2) = match outer.corners {
        PatchCorners::Lsp { v0, v1, v2 } => (v0, v1, v2),
        PatchCorners::Lopsp { .. } => unreachable!(),
    };
    let mut oclass = vec![OClass::Interior; outer.labels.len()];
    for (r, arc) in oa.arcs.iter().enumerate() {
        for (q, &u) in arc.iter().enumerate().skip(1).take(arc.len().saturating_sub(2)) {
            oclass[u as usize] = OClass::Side(r as u8, q as u32);
        }
    }
    oclass[oc0 as usize] = OClass::Corner(0);
    oclass[oc1 as usize] = OClass::Corner(1);
    oclass[oc2 as usize] = OClass::Corner(2);

    let mut ids: BTreeMap<Key, u32> = BTreeMap::new();
    let mut labels: Vec<u8> = Vec::new();
    let mut tris: Vec<[u32; 3]> = Vec::new();
    let mut colors: Vec<u8> = Vec::new();

    let mut id_of = |key: Key, label: u8| -> u32 {
        let next = ids.len() as u32;
        let id = *ids.entry(key).or_insert(next);
        if id as usize == labels.len() {
            labels.push(label);
        }
        id
    };

    for (tau, tri) in inner.tris.iter().enumerate() {
        // the inner chamber's corner of each label
        let x = |j: u8| tri[ia.lab_pos[tau][j as usize] as usize];
        for (t, otri) in outer.tris.iter().enumerate() {
            let mut copy = [0u32; 3];
            for (slot, &u) in otri.iter().enumerate() {
                let label = outer.labels[u as usize];
                let key = match oclass[u as usize] {
                    OClass::Corner(j) => Key::Corner(j, x(j)),
                    OClass::Side(r, q) => {
                        let (a, b) = ARC_ENDS[r as usize];
                        Key::Side(r, x(a), x(b), q)
                    }
                    OClass::Interior => Key::Fresh(tau as u32, u),
                };
                copy[slot] = id_of(key, label);
            }
            tris.push(copy);
            colors.push(inner.colors[tau] ^ outer.colors[t]);
        }
    }

    let corner_id = |v: u32| ids[&Key::Corner(inner.labels[v as usize], v)];
    let corners = match inner.corners {
        PatchCorners::Lsp { v0, v1, v2 } => {
            PatchCorners::Lsp { v0: corner_id(v0), v1: corner_id(v1), v2: corner_id(v2) }
        }
        PatchCorners::Lopsp { v2, v0, v1, v0p } => PatchCorners::Lopsp {
            v2: corner_id(v2),
            v0: corner_id(v0),
            v1: corner_id(v1),
            v0p: corner_id(v0p),
        },
    };

    let merged = Patch { labels, tris, colors, corners };
    merged.analysis()?;
    Ok(merged)
}
