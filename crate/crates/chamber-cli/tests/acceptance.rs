//! Acceptance suite: one test per shipping criterion, each printing its
//! own pass/fail line. Run with `cargo test --test acceptance`.

use std::collections::BTreeMap;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use chamber::canon::{automorphism_orders, is_isomorphic};
use chamber::enumerate::enumerate_lsp;
use chamber::expr::{builtin_names, parse_operation, probe_equivalence, Operation};
use chamber::patch::Violation;
use chamber::planar_code::{read_planar_code, write_planar_code};
use chamber::seeds::{SPHERE_NAMES, TORUS_NAMES};
use chamber::verify::{polyhedron_check, symmetry_audit};
use chamber::{parse_patch, serialize_patch, ChamberSystem, PatchKind};

const BIN: &str = env!("CARGO_BIN_EXE_chamber");

/// The operation families under test: every builtin patch plus every
/// valid lattice parameter pair gc(l,m) with l + m <= 4.
const GC_SPECS: [&str; 8] =
    ["gc(1,0)", "gc(1,1)", "gc(2,0)", "gc(2,1)", "gc(2,2)", "gc(3,0)", "gc(3,1)", "gc(4,0)"];

fn operations() -> Vec<(String, Operation)> {
    builtin_names()
        .into_iter()
        .chain(GC_SPECS)
        .map(|name| (name.to_string(), parse_operation(name).expect("operation parses")))
        .collect()
}

fn seed_system(name: &str) -> ChamberSystem {
    chamber::seeds::seed(name).expect("known seed").barycentric()
}

fn cli(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn parse_first(bytes: &[u8]) -> ChamberSystem {
    read_planar_code(bytes).expect("planar_code").remove(0).barycentric()
}

fn spectrum(m: &BTreeMap<usize, usize>) -> Vec<(usize, usize)> {
    m.iter().map(|(&k, &n)| (k, n)).collect()
}

#[test]
fn criterion_01_buckminsterfullerene() {
    let start = Instant::now();
    let o = cli(&["apply", "gc(1,1)", "--seed", "dodecahedron"]);
    assert!(o.status.success());
    let cs = parse_first(&o.stdout);
    let c = cs.counts();
    assert_eq!((c.v, c.e, c.f), (60, 90, 32));
    assert_eq!(spectrum(&c.face_sizes), [(5, 12), (6, 20)]);
    assert_eq!(spectrum(&c.degrees), [(3, 60)]);
    assert_eq!(automorphism_orders(&cs), (120, 60));
    assert!(start.elapsed() < Duration::from_secs(1), "took {:?}", start.elapsed());
}

#[test]
fn criterion_02_chiral_goldberg() {
    let start = Instant::now();
    let o = cli(&["apply", "gc(5,3)", "--seed", "dodecahedron"]);
    assert!(o.status.success());
    let cs = parse_first(&o.stdout);
    let c = cs.counts();
    assert_eq!((c.v, c.e, c.f), (980, 1470, 492));
    assert_eq!(spectrum(&c.face_sizes), [(5, 12), (6, 480)]);
    assert_eq!(automorphism_orders(&cs), (60, 60));
    assert!(!is_isomorphic(&cs, &cs.mirror()), "gc(5,3) result should be chiral");
    assert!(start.elapsed() < Duration::from_secs(5), "took {:?}", start.elapsed());
}

#[test]
fn criterion_03_checks_and_oracle_agree_on_every_result() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (name, op) in operations() {
        for seed in SPHERE_NAMES {
            let out = op.apply_to(&seed_system(seed)).expect("operation applies");
            let report = polyhedron_check(&out).expect("sphere result");
            if !report.conditions_pass() || !report.connectivity.passed() {
                failures.push(format!("{name} on {seed}: {report}"));
            }
            if !report.agrees() {
                failures.push(format!("{name} on {seed}: oracle disagreement"));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    assert!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
}

#[test]
fn criterion_04_inflation_law() {
    for (name, op) in operations() {
        let g = op.inflation_rate() as usize;
        for seed in SPHERE_NAMES {
            let cs = seed_system(seed);
            let out = op.apply_to(&cs).expect("operation applies");
            assert_eq!(
                out.counts().e,
                g * cs.counts().e,
                "{name} on {seed} breaks the edge multiplication law"
            );
        }
    }

    let outers = ["ambo", "truncate", "chamfer", "quinto", "snub"];
    let inners = ["dual", "ambo", "whirl", "gc(2,1)"];
    let mut pairs = 0;
    for outer in outers {
        for inner in inners {
            let a = parse_operation(outer).unwrap();
            let b = parse_operation(inner).unwrap();
            let ab = parse_operation(&format!("{outer}*{inner}")).unwrap();
            assert_eq!(ab.inflation_rate(), a.inflation_rate() * b.inflation_rate());
            pairs += 1;
        }
    }
    assert_eq!(pairs, 20);

    let tet = seed_system("tetrahedron");
    for expr in ["truncate*ambo", "snub*dual", "quinto*whirl"] {
        let op = parse_operation(expr).unwrap();
        let out = op.apply_to(&tet).unwrap();
        assert_eq!(out.counts().e, op.inflation_rate() as usize * 6);
    }
}

#[test]
fn criterion_05_symmetry_preservation() {
    for (name, op) in operations() {
        for seed in SPHERE_NAMES {
            let audit = symmetry_audit(&op, &seed_system(seed)).expect("audit runs");
            match audit.kind {
                PatchKind::Lsp => assert!(
                    audit.full_divides() && audit.rotation_divides(),
                    "{name} on {seed}: {audit}"
                ),
                PatchKind::Lopsp => {
                    assert!(audit.rotation_divides(), "{name} on {seed}: {audit}")
                }
            }
            assert!(audit.preserved(), "{name} on {seed}: {audit}");
        }
    }

    let audit =
        symmetry_audit(&parse_operation("ambo").unwrap(), &seed_system("tetrahedron")).unwrap();
    assert_eq!(audit.full, (24, 48), "ambo on the tetrahedron gains the central symmetry");
}

#[test]
fn criterion_06_equivalences() {
    let corpus = chamber::seeds::names();
    let all: Vec<&str> = corpus.to_vec();

    let chamfer = parse_operation("chamfer").unwrap();
    let gc20 = parse_operation("gc(2,0)").unwrap();
    assert_eq!(probe_equivalence(&chamfer, &gc20, &all).unwrap(), None);

    let dual_ambo = parse_operation("dual*ambo").unwrap();
    let join = parse_operation("join").unwrap();
    assert_eq!(probe_equivalence(&dual_ambo, &join, &all).unwrap(), None);

    let dodeca = seed_system("dodecahedron");
    let w = parse_operation("whirl").unwrap().apply_to(&dodeca).unwrap();
    let g = parse_operation("gc(2,1)").unwrap().apply_to(&dodeca).unwrap();
    assert!(is_isomorphic(&w, &g) || is_isomorphic(&w, &g.mirror()));

    let identity = parse_operation("identity").unwrap();
    let dual = parse_operation("dual").unwrap();
    assert_eq!(probe_equivalence(&identity, &dual, &["cube"]).unwrap(), Some("cube".to_string()));
    assert_eq!(probe_equivalence(&identity, &dual, &["tetrahedron"]).unwrap(), None);
}

#[test]
fn criterion_07_enumeration() {
    let start = Instant::now();
    let catalogs: Vec<_> = (1..=4).map(|g| enumerate_lsp(g).expect("enumeration runs")).collect();
    let elapsed = start.elapsed();

    let codes = |ps: &[chamber::Patch]| -> Vec<Vec<u8>> {
        let mut v: Vec<Vec<u8>> = ps.iter().map(|p| p.canonical_code().unwrap()).collect();
        v.sort();
        v
    };
    let named = |exprs: &[&str]| -> Vec<Vec<u8>> {
        let mut v: Vec<Vec<u8>> = exprs
            .iter()
            .map(|e| parse_operation(e).unwrap().stages[0].canonical_code().unwrap())
            .collect();
        v.sort();
        v
    };
    assert_eq!(codes(&catalogs[0]), named(&["identity", "dual"]));
    assert_eq!(codes(&catalogs[1]), named(&["ambo", "join"]));

    let cube = seed_system("cube");
    for patches in &catalogs[2..] {
        for p in patches {
            assert!(p.validate().is_empty());
            let out = chamber::apply::apply(&cube, p).expect("patch applies");
            let report = polyhedron_check(&out).expect("sphere result");
            assert!(report.conditions_pass() && report.connectivity.passed(), "{report}");
        }
    }
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
}

#[test]
fn criterion_08_interior_vertex_rejection() {
    let o = cli(&["validate-op", "tests/data/invalid-interior.lsp"]);
    assert_eq!(o.status.code(), Some(1));
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.contains("interior vertex 0 with label 1"), "got: {s}");

    let text = std::fs::read_to_string("tests/data/invalid-interior.lsp").unwrap();
    let violations = parse_patch(&text).unwrap().validate();
    assert_eq!(violations, [Violation::InteriorVertex { vertex: 0, label: 1, chambers: 6 }]);
}

#[test]
fn criterion_09_torus_invariance() {
    for name in ["identity", "dual", "ambo", "truncate", "chamfer", "quinto"] {
        let op = parse_operation(name).unwrap();
        for seed in TORUS_NAMES {
            let cs = seed_system(seed);
            let out = op.apply_to(&cs).expect("operation applies");
            assert_eq!(out.counts().chi, 0, "{name} on {seed} should stay a torus map");
            assert_eq!(out.len(), op.inflation_rate() as usize * cs.len());
        }
    }
}

#[test]
fn criterion_10_format_round_trips() {
    for name in chamber::seeds::names() {
        let pg = chamber::seeds::seed(name).unwrap();
        let bytes = write_planar_code(std::slice::from_ref(&pg));
        let parsed = read_planar_code(&bytes).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(write_planar_code(&parsed), bytes, "planar_code round trip drifts on {name}");
    }

    let mut patches: Vec<chamber::Patch> =
        builtin_names().iter().map(|n| chamber::expr::builtin(n).unwrap()).collect();
    patches.push(chamber::gc::gc_patch(2, 1).unwrap());
    patches.push(chamber::gc::gc_patch(3, 1).unwrap());
    for p in &patches {
        let q = parse_patch(&serialize_patch(p).unwrap()).unwrap();
        assert_eq!(&q, p, "patch round trip must keep chambers, colors and corner roles");
    }
}
