//! Workflow checks through the public interface only: seeds in, operation
//! expressions applied, results verified and shipped out as planar_code.

use chamber::canon::is_isomorphic;
use chamber::expr::parse_operation;
use chamber::planar_code::{read_planar_code, write_planar_code};
use chamber::verify::polyhedron_check;
use chamber::{serialize_patch, ChamberSystem};

fn seed(name: &str) -> ChamberSystem {
    chamber::seeds::seed(name).unwrap().barycentric()
}

#[test]
fn seed_to_verified_output_and_back() {
    for name in ["tetrahedron", "dodecahedron", "antiprism4", "asymmetric"] {
        let op = parse_operation("ortho").unwrap();
        let out = op.apply_to(&seed(name)).unwrap();
        let report = polyhedron_check(&out).unwrap();
        assert!(report.conditions_pass() && report.connectivity.passed(), "{name}: {report}");

        let pg = out.to_plane_graph();
        let bytes = write_planar_code(std::slice::from_ref(&pg));
        let back = read_planar_code(&bytes).unwrap().remove(0).barycentric();
        assert!(is_isomorphic(&out, &back) || is_isomorphic(&out, &back.mirror()), "{name}");
    }
}

#[test]
fn patch_files_round_trip_through_expressions() {
    let dir = std::env::temp_dir().join(format!("chamber-pipeline-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lattice.lsp");
    std::fs::write(&path, serialize_patch(&chamber::gc::gc_patch(2, 1).unwrap()).unwrap()).unwrap();

    let from_file = parse_operation(&format!("file:{}", path.display())).unwrap();
    let direct = parse_operation("gc(2,1)").unwrap();
    let cube = seed("cube");
    let a = from_file.apply_to(&cube).unwrap();
    let b = direct.apply_to(&cube).unwrap();
    assert!(is_isomorphic(&a, &b));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn composition_matches_sequential_application() {
    let cs = seed("octahedron");
    let composed = parse_operation("snub*truncate*dual").unwrap().apply_to(&cs).unwrap();
    let mut staged = cs;
    for step in ["dual", "truncate", "snub"] {
        staged = parse_operation(step).unwrap().apply_to(&staged).unwrap();
    }
    assert!(is_isomorphic(&composed, &staged));
}
