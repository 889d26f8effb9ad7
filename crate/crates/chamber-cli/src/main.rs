//! Command-line front end: seeds, operation application, validation,
//! verification, enumeration and isomorphism checks over planar_code
//! streams and patch files.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use chamber::canon::{automorphism_orders, is_isomorphic};
use chamber::enumerate::enumerate_lsp;
use chamber::expr::{parse_operation, probe_equivalence};
use chamber::planar_code::{read_planar_code, write_planar_code};
use chamber::verify::polyhedron_check;
use chamber::{parse_patch, serialize_patch, ChamberSystem, PlaneGraph};

#[derive(Parser)]
#[command(
    name = "chamber",
    about = "maps as chamber systems: seeds, local operations, verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a named seed map as planar_code on standard output
    Seed {
        /// seed name; pass "list" to see them all
        name: String,
    },
    /// Apply an operation expression to a map and write the result
    Apply {
        /// e.g. truncate, dual*ambo, gc(2,1), ck(1,1), file:my.lsp
        expr: String,
        /// planar_code input file (default: standard input)
        #[arg(long = "in", value_name = "FILE", conflicts_with = "seed")]
        input: Option<PathBuf>,
        /// use a named seed as input
        #[arg(long)]
        seed: Option<String>,
        /// apply the mirror image of the operation
        #[arg(long)]
        mirror: bool,
    },
    /// Print counts and symmetry orders of a map
    Info {
        #[arg(long = "in", value_name = "FILE", conflicts_with = "seed")]
        input: Option<PathBuf>,
        #[arg(long)]
        seed: Option<String>,
    },
    /// Parse and validate a patch file
    ValidateOp { path: PathBuf },
    /// Subdivision conditions and the connectivity oracle, for sphere maps
    Verify {
        #[arg(long = "in", value_name = "FILE", conflicts_with = "seed")]
        input: Option<PathBuf>,
        #[arg(long)]
        seed: Option<String>,
    },
    /// List every lsp patch with the given inflation rate
    Enumerate {
        #[arg(long)]
        g: usize,
        /// write one patch file per result into this directory
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Look for a seed on which two operations give different maps
    Equiv {
        op1: String,
        op2: String,
        /// seeds to probe (default: the whole library)
        #[arg(long, num_args = 1.., value_name = "SEED")]
        corpus: Vec<String>,
    },
    /// Compare two planar_code files as maps
    Iso { a: PathBuf, b: PathBuf },
}

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(Cli::parse().cmd, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let pipe_closed = e
                .chain()
                .filter_map(|c| c.downcast_ref::<std::io::Error>())
                .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe);
            if pipe_closed {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Input map: named seed, planar_code file, or standard input.
fn load(input: Option<PathBuf>, seed: Option<String>) -> anyhow::Result<PlaneGraph> {
    if let Some(name) = seed {
        return Ok(chamber::seeds::seed(&name)?);
    }
    let bytes = match input {
        Some(path) => fs::read(&path).with_context(|| format!("reading {}", path.display()))?,
        None => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).context("reading standard input")?;
            buf
        }
    };
    let mut graphs = read_planar_code(&bytes)?;
    if graphs.is_empty() {
        bail!("input holds no graphs");
    }
    Ok(graphs.remove(0))
}

fn run(cmd: Cmd, out: &mut impl Write) -> anyhow::Result<ExitCode> {
    match cmd {
        Cmd::Seed { name } => {
            if name == "list" {
                for n in chamber::seeds::names() {
                    writeln!(out, "{n}")?;
                }
                return Ok(ExitCode::SUCCESS);
            }
            let pg = chamber::seeds::seed(&name)?;
            out.write_all(&write_planar_code(std::slice::from_ref(&pg)))?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Apply { expr, input, seed, mirror } => {
            let mut op = parse_operation(&expr)?;
            if mirror {
                op = op.mirror();
            }
            let cs = load(input, seed)?.barycentric();
            let pg = op.apply_to(&cs)?.to_plane_graph();
            out.write_all(&write_planar_code(std::slice::from_ref(&pg)))?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Info { input, seed } => {
            let cs = load(input, seed)?.barycentric();
            let c = cs.counts();
            let (aut, rot) = automorphism_orders(&cs);
            writeln!(out, "vertices: {}", c.v)?;
            writeln!(out, "edges: {}", c.e)?;
            writeln!(out, "faces: {}", c.f)?;
            writeln!(out, "euler characteristic: {}", c.chi)?;
            writeln!(out, "faces by size: {}", spectrum(&c.face_sizes))?;
            writeln!(out, "degrees: {}", spectrum(&c.degrees))?;
            writeln!(out, "automorphisms: {aut} ({rot} orientation-preserving)")?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::ValidateOp { path } => {
            let text =
                fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            let patch = parse_patch(&text)?;
            let violations = patch.validate();
            if violations.is_empty() {
                let kind = match patch.kind() {
                    chamber::PatchKind::Lsp => "lsp",
                    chamber::PatchKind::Lopsp => "lopsp",
                };
                let rate = match patch.kind() {
                    chamber::PatchKind::Lsp => patch.chamber_count(),
                    chamber::PatchKind::Lopsp => patch.chamber_count() / 2,
                };
                writeln!(
                    out,
                    "ok: {kind} patch, {} chambers, inflation rate {rate}",
                    patch.chamber_count()
                )?;
                Ok(ExitCode::SUCCESS)
            } else {
                for v in &violations {
                    writeln!(out, "violation: {v}")?;
                }
                Ok(ExitCode::FAILURE)
            }
        }

        Cmd::Verify { input, seed } => {
            let cs = load(input, seed)?.barycentric();
            let report = polyhedron_check(&cs)?;
            writeln!(out, "{report}")?;
            if report.conditions_pass() && report.connectivity.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }

        Cmd::Enumerate { g, out: dir } => {
            let patches = enumerate_lsp(g)?;
            writeln!(out, "inflation rate {g}: {} patches", patches.len())?;
            match dir {
                Some(dir) => {
                    fs::create_dir_all(&dir)
                        .with_context(|| format!("creating {}", dir.display()))?;
                    for (i, p) in patches.iter().enumerate() {
                        let path = dir.join(format!("rate{g}-{:02}.lsp", i + 1));
                        fs::write(&path, serialize_patch(p)?)?;
                        writeln!(out, "{}", path.display())?;
                    }
                }
                None => {
                    for p in &patches {
                        writeln!(out)?;
                        write!(out, "{}", serialize_patch(p)?)?;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Equiv { op1, op2, corpus } => {
            let a = parse_operation(&op1)?;
            let b = parse_operation(&op2)?;
            let names: Vec<String> = if corpus.is_empty() {
                chamber::seeds::names().iter().map(|s| s.to_string()).collect()
            } else {
                corpus
            };
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            match probe_equivalence(&a, &b, &refs)? {
                Some(seed) => {
                    writeln!(out, "distinguished by seed {seed}")?;
                    Ok(ExitCode::FAILURE)
                }
                None => {
                    writeln!(out, "indistinguishable on {} seeds", refs.len())?;
                    Ok(ExitCode::SUCCESS)
                }
            }
        }

        Cmd::Iso { a, b } => {
            let read = |path: &PathBuf| -> anyhow::Result<ChamberSystem> {
                let bytes =
                    fs::read(path).with_context(|| format!("reading {}", path.display()))?;
                let mut graphs = read_planar_code(&bytes)?;
                if graphs.is_empty() {
                    bail!("{} holds no graphs", path.display());
                }
                Ok(graphs.remove(0).barycentric())
            };
            let (ca, cb) = (read(&a)?, read(&b)?);
            if is_isomorphic(&ca, &cb) {
                writeln!(out, "isomorphic")?;
                Ok(ExitCode::SUCCESS)
            } else {
                writeln!(out, "not isomorphic")?;
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn spectrum(m: &std::collections::BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = m.iter().map(|(k, n)| format!("{k}:{n}")).collect();
    parts.join(" ")
}
