//! plstack: face vectors, stackedness, boundary cobordisms, homology, and
//! perfect-group presentation checks over JSON complex files.
//!
//! Machine-parseable JSON goes to stdout and nothing else does; diagnostics
//! and timing go to stderr. Exit codes: 0 success, 2 failed check, 1 bad
//! input.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use plstack::io::{
    self, complex_to_value, face_value, faces_value, int_value, ints_value, presentation_to_value,
};
use plstack::{
    count_homomorphisms, g3_boundary_check, homology, is_homology_sphere, is_k_stacked,
    presentation_cellular_homology, presentation_complex_homology, run_schedule,
    verify_stack_lemma, AbelianizationResult, Face, FaceVectorBundle, HomologyProfile, Vertex,
    DEFAULT_HOM_BUDGET,
};

#[derive(Parser)]
#[command(name = "plstack", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// f-vector of a complex
    Fvec { path: PathBuf },
    /// f-, h-, and g-vectors of a complex
    Gvec { path: PathBuf },
    /// Check that every face of dimension dim-k-1 is on the boundary
    Stacked {
        path: PathBuf,
        #[arg(long)]
        k: i64,
    },
    /// Betti numbers and torsion coefficients
    Homology { path: PathBuf },
    /// Compare the homology profile against the n-sphere
    SphereCheck {
        path: PathBuf,
        #[arg(long)]
        n: i64,
    },
    /// g-vector of the boundary plus the 2-stackedness flag
    G3Check { path: PathBuf },
    /// Run a subdivision schedule, reporting the interior-face ledger
    Subdivide {
        path: PathBuf,
        schedule: PathBuf,
        /// Write the final complex to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the interior-face ledger of one pyramid attachment
    VerifyStack {
        path: PathBuf,
        /// Comma-separated vertex ids, e.g. 1,2
        #[arg(long)]
        face: String,
        /// Fresh apex id; minted as max+1 when omitted
        #[arg(long)]
        apex: Option<u32>,
    },
    /// Perfectness, balance, and presentation-complex homology report
    PresentationReport {
        path: PathBuf,
        /// Replace the presentation by its n-fold product with itself
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Count homomorphisms from a presentation into a permutation group
    HomCount {
        presentation: PathBuf,
        table: PathBuf,
        /// Max relator evaluations (overrides PLSTACK_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
    },
}

/// A command outcome: the JSON payload plus whether the check it ran holds.
struct Report {
    output: Value,
    check_failed: bool,
}

impl Report {
    fn ok(output: Value) -> Self {
        Report {
            output,
            check_failed: false,
        }
    }

    fn checked(output: Value, passed: bool) -> Self {
        Report {
            output,
            check_failed: !passed,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let command_name = command_name(&cli.command);
    match run(cli.command) {
        Ok(report) => {
            let mut text =
                serde_json::to_string_pretty(&report.output).expect("serializable output");
            text.push('\n');
            print!("{text}");
            eprintln!("{command_name}: {:?}", started.elapsed());
            if report.check_failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Fvec { .. } => "fvec",
        Command::Gvec { .. } => "gvec",
        Command::Stacked { .. } => "stacked",
        Command::Homology { .. } => "homology",
        Command::SphereCheck { .. } => "sphere-check",
        Command::G3Check { .. } => "g3-check",
        Command::Subdivide { .. } => "subdivide",
        Command::VerifyStack { .. } => "verify-stack",
        Command::PresentationReport { .. } => "presentation-report",
        Command::HomCount { .. } => "hom-count",
    }
}

fn run(command: Command) -> plstack::Result<Report> {
    match command {
        Command::Fvec { path } => {
            let nc = io::read_complex(&path)?;
            let b = FaceVectorBundle::of(&nc.complex);
            Ok(Report::ok(json!({
                "name": nc.name,
                "dim": b.complex_dim,
                "f": ints_value(&b.f),
            })))
        }
        Command::Gvec { path } => {
            let nc = io::read_complex(&path)?;
            let b = FaceVectorBundle::of(&nc.complex);
            Ok(Report::ok(json!({
                "name": nc.name,
                "dim": b.complex_dim,
                "f": ints_value(&b.f),
                "h": ints_value(&b.h),
                "g": ints_value(&b.g.truncated),
                "g_full": ints_value(&b.g.full),
            })))
        }
        Command::Stacked { path, k } => {
            let nc = io::read_complex(&path)?;
            let r = is_k_stacked(&nc.complex, k)?;
            let output = json!({
                "name": nc.name,
                "dim": r.complex_dim,
                "k": r.k,
                "stacked": r.stacked,
                "k_min": r.k_min,
                "witnesses": faces_value(r.witnesses.iter()),
            });
            Ok(Report::checked(output, r.stacked))
        }
        Command::Homology { path } => {
            let nc = io::read_complex(&path)?;
            Ok(Report::ok(profile_value(&homology(&nc.complex))))
        }
        Command::SphereCheck { path, n } => {
            let nc = io::read_complex(&path)?;
            let r = is_homology_sphere(&nc.complex, n)?;
            let mut output = profile_value(&r.profile);
            let obj = output.as_object_mut().expect("object output");
            obj.insert("is_sphere".into(), Value::Bool(r.is_sphere));
            obj.insert("n".into(), Value::from(n));
            Ok(Report::checked(output, r.is_sphere))
        }
        Command::G3Check { path } => {
            let nc = io::read_complex(&path)?;
            let r = g3_boundary_check(&nc.complex)?;
            if r.below_theorem_dim {
                eprintln!(
                    "note: complex dimension {} is below the d >= 6 regime",
                    nc.complex.dim()
                );
            }
            let output = json!({
                "name": nc.name,
                "boundary_dim": r.boundary_dim,
                "g": ints_value(&r.g),
                "g3": int_value(&r.g3),
                "stacked2": r.stacked2,
                "below_theorem_dim": r.below_theorem_dim,
            });
            let passed = r.stacked2 && r.g3 == plstack::Int::from(0);
            Ok(Report::checked(output, passed))
        }
        Command::Subdivide {
            path,
            schedule,
            out,
        } => {
            let nc = io::read_complex(&path)?;
            let sched = io::read_schedule(&schedule)?;
            let run = run_schedule(&nc.complex, &sched)?;
            let steps: Vec<Value> = run
                .attachments
                .iter()
                .map(|a| {
                    json!({
                        "base": face_value(&a.base),
                        "apex": a.apex.0,
                        "added_facets": faces_value(a.added_facets.iter()),
                        "ledger_delta": faces_value(a.ledger_delta.iter()),
                    })
                })
                .collect();
            let final_name = format!("{}-subdivided", nc.name);
            let final_value = complex_to_value(&final_name, &run.final_complex);
            if let Some(out_path) = out {
                let mut text = serde_json::to_string_pretty(&final_value)
                    .expect("serializable complex");
                text.push('\n');
                std::fs::write(&out_path, text).map_err(|e| {
                    plstack::Error::Parse(format!("{}: {e}", out_path.display()))
                })?;
            }
            Ok(Report::ok(json!({
                "name": nc.name,
                "floor_dim": sched.floor_dim,
                "steps": steps,
                "ledger": faces_value(run.ledger.iter()),
                "final": final_value,
            })))
        }
        Command::VerifyStack { path, face, apex } => {
            let nc = io::read_complex(&path)?;
            let face = parse_face_arg(&face)?;
            let apex = apex
                .map(Vertex)
                .unwrap_or_else(|| nc.complex.fresh_vertex());
            let r = verify_stack_lemma(&nc.complex, &face, apex)?;
            let matched = r.matches();
            let output = json!({
                "name": nc.name,
                "base": face_value(&r.base),
                "apex": r.apex.0,
                "match": matched,
                "predicted_interior": faces_value(r.predicted_interior.iter()),
                "actual_interior": faces_value(r.actual_interior.iter()),
                "missing": faces_value(r.missing.iter()),
                "unexpected": faces_value(r.unexpected.iter()),
            });
            Ok(Report::checked(output, matched))
        }
        Command::PresentationReport { path, power } => {
            let base = io::read_presentation(&path)?;
            let p = base.power(power.max(1))?;
            let ab = p.abelianization();
            let cellular = presentation_cellular_homology(&p);
            let simplicial = presentation_complex_homology(&p)?;
            let matches = cellular.matches_profile(&simplicial);
            let perfect = p.is_perfect();
            let output = json!({
                "power": power.max(1),
                "presentation": presentation_to_value(&p),
                "perfect": perfect,
                "balanced": p.is_balanced(),
                "abelianization": abelianization_value(&ab),
                "cellular": {
                    "h1": abelianization_value(&cellular.h1),
                    "h2_free_rank": cellular.h2_free_rank,
                },
                "simplicial": profile_value(&simplicial),
                "homology_match": matches,
            });
            Ok(Report::checked(output, perfect && matches))
        }
        Command::HomCount {
            presentation,
            table,
            budget,
        } => {
            let p = io::read_presentation(&presentation)?;
            let t = io::read_table(&table)?;
            let budget = budget
                .or_else(|| {
                    std::env::var("PLSTACK_BUDGET")
                        .ok()
                        .and_then(|v| v.parse().ok())
                })
                .unwrap_or(DEFAULT_HOM_BUDGET);
            let count = count_homomorphisms(&p, &t, budget)?;
            Ok(Report::ok(json!({
                "generators": p.generators(),
                "order": t.order(),
                "budget": budget,
                "count": count,
            })))
        }
    }
}

fn parse_face_arg(s: &str) -> plstack::Result<Face> {
    let ids = s
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|e| plstack::Error::Parse(format!("face argument {s:?}: {e}")))
        })
        .collect::<plstack::Result<Vec<u32>>>()?;
    Face::new(ids)
}

fn profile_value(p: &HomologyProfile) -> Value {
    json!({
        "betti": p.betti,
        "torsion": p.torsion.iter().map(|t| ints_value(t)).collect::<Vec<_>>(),
    })
}

fn abelianization_value(a: &AbelianizationResult) -> Value {
    json!({
        "free_rank": a.free_rank,
        "torsion": ints_value(&a.torsion),
    })
}
