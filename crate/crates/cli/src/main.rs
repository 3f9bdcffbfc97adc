use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cacd_core::harness::catalog::derive_forbidden_catalog;
use cacd_core::harness::enumerate::TOURNAMENT_MAX_N;
use cacd_core::harness::sweep::{sweep_digraphs, Check};
use cacd_core::json::{
    digraph_from_json, digraph_to_json, report_to_value, representation_from_json, verdict_to_value, write_catalog,
};
use cacd_core::oriented::{hamiltonian_path, recognize_oriented_proper_cacd};
use cacd_core::proper::recognize_proper_cacd;
use cacd_core::recognition::{recognize_cacd, recognize_tournament_cacd};
use cacd_core::representation::rational_to_f64;
use cacd_core::{CatchRepresentation, Digraph, Error};

const EXIT_ACCEPTED: u8 = 0;
const EXIT_REJECTED: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "cacd", version, about = "Circular-arc catch digraph recognition and certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Cacd,
    Proper,
    OrientedProper,
    Tournament,
}

#[derive(Subcommand)]
enum Command {
    /// Decide class membership and print a verdict with its certificate or witness.
    Recognize {
        digraph: PathBuf,
        #[arg(long, value_enum, default_value = "cacd")]
        class: Class,
    },
    /// Print the digraph a representation realizes.
    Realize { representation: PathBuf },
    /// Check that a representation realizes a digraph.
    Verify {
        representation: PathBuf,
        digraph: PathBuf,
        /// Also require that no arc strictly contains another.
        #[arg(long)]
        proper: bool,
    },
    /// Print a directed Hamiltonian path.
    Hampath { digraph: PathBuf },
    /// Forbidden-subdigraph catalog operations.
    Forbidden {
        #[command(subcommand)]
        action: ForbiddenAction,
    },
    /// Run a named exhaustive check and print its report.
    Sweep {
        check: String,
        #[arg(long)]
        n: usize,
        /// Directory to write the report into.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a representation as SVG.
    Render {
        representation: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
}

#[derive(Subcommand)]
enum ForbiddenAction {
    /// Derive minimal non-catch tournaments by exhaustive search.
    Derive {
        #[arg(long, default_value_t = TOURNAMENT_MAX_N)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failure that maps to the input-error exit code.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))
}

fn load_digraph(path: &Path) -> Result<Digraph, InputError> {
    digraph_from_json(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_representation(path: &Path) -> Result<CatchRepresentation, InputError> {
    representation_from_json(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("plain data"));
}

fn write_file(path: &Path, contents: &str) -> Result<(), InputError> {
    fs::write(path, contents).map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<u8, InputError> {
    match cli.command {
        Command::Recognize { digraph, class } => {
            let g = load_digraph(&digraph)?;
            let (name, verdict) = match class {
                Class::Cacd => ("cacd", recognize_cacd(&g)),
                Class::Proper => ("proper", recognize_proper_cacd(&g)?),
                Class::OrientedProper => ("oriented-proper", recognize_oriented_proper_cacd(&g)?),
                Class::Tournament => {
                    if g.n() > TOURNAMENT_MAX_N {
                        return Err(Error::TooLarge { what: "tournament recognition", max: TOURNAMENT_MAX_N, got: g.n() }.into());
                    }
                    let catalog = derive_forbidden_catalog(g.n())?;
                    ("tournament", recognize_tournament_cacd(&g, &catalog)?)
                }
            };
            print_json(&verdict_to_value(name, &verdict));
            Ok(if verdict.is_accepted() { EXIT_ACCEPTED } else { EXIT_REJECTED })
        }
        Command::Realize { representation } => {
            let rep = load_representation(&representation)?;
            println!("{}", digraph_to_json(&rep.realize()));
            Ok(EXIT_ACCEPTED)
        }
        Command::Verify { representation, digraph, proper } => {
            let rep = load_representation(&representation)?;
            let g = load_digraph(&digraph)?;
            let mismatches = rep.mismatched_edges(&g)?;
            let mut ok = mismatches.is_empty();
            let diff: Vec<Value> = mismatches
                .iter()
                .map(|&(u, v, expected, realized)| json!({ "u": u, "v": v, "expected": expected, "realized": realized }))
                .collect();
            let mut doc = json!({ "verified": ok, "mismatches": diff });
            if proper {
                let violation = rep.proper_violation();
                doc["proper"] = json!(violation.is_none());
                if let Some((inner, outer)) = violation {
                    doc["containment"] = json!({ "inner": inner, "outer": outer });
                }
                ok &= violation.is_none();
                doc["verified"] = json!(ok);
            }
            print_json(&doc);
            Ok(if ok { EXIT_ACCEPTED } else { EXIT_REJECTED })
        }
        Command::Hampath { digraph } => {
            let g = load_digraph(&digraph)?;
            match hamiltonian_path(&g) {
                Ok(path) => {
                    print_json(&json!({ "path": path }));
                    Ok(EXIT_ACCEPTED)
                }
                Err(e @ (Error::HamiltonianPath(_) | Error::NoSink)) => {
                    print_json(&json!({ "path": Value::Null, "reason": e.to_string() }));
                    Ok(EXIT_REJECTED)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Forbidden { action: ForbiddenAction::Derive { max_n, out } } => {
            let catalog = derive_forbidden_catalog(max_n)?;
            println!("{}", catalog.summary());
            if max_n >= 7 && (catalog.members_on(5) + catalog.members_on(6) != 0 || catalog.members_on(7) != 4) {
                eprintln!(
                    "warning: expected minimal members only on 4 and 7 vertices (1 and 4); found {} on 5, {} on 6, {} on 7",
                    catalog.members_on(5),
                    catalog.members_on(6),
                    catalog.members_on(7)
                );
            }
            if let Some(dir) = out {
                let files = write_catalog(&catalog, &dir)?;
                println!("wrote {} files to {}", files.len(), dir.display());
            }
            Ok(EXIT_ACCEPTED)
        }
        Command::Sweep { check, n, out } => {
            let check: Check = check.parse()?;
            let report = sweep_digraphs(check, n)?;
            let doc = report_to_value(&report);
            let text = serde_json::to_string_pretty(&doc).expect("plain data");
            if let Some(dir) = out {
                fs::create_dir_all(&dir).map_err(|e| InputError(format!("cannot create {}: {e}", dir.display())))?;
                write_file(&dir.join(format!("{}-n{n}.json", report.check)), &text)?;
            }
            println!("{text}");
            Ok(if report.passed() { EXIT_ACCEPTED } else { EXIT_REJECTED })
        }
        Command::Render { representation, svg } => {
            let rep = load_representation(&representation)?;
            write_file(&svg, &render_svg(&rep))?;
            Ok(EXIT_ACCEPTED)
        }
    }
}

/// Positions at angle `2πx/L` clockwise from 12 o'clock; arcs at radii staggered by start.
fn render_svg(rep: &CatchRepresentation) -> String {
    let l = rational_to_f64(&rep.circumference());
    let n = rep.n();
    let base = 120.0;
    let step = 14.0;
    let size = 2.0 * (base + step * (n as f64 + 2.0));
    let c = size / 2.0;
    let at = |x: f64, r: f64| {
        let t = std::f64::consts::TAU * x / l;
        (c + r * t.sin(), c - r * t.cos())
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&u, &v| rep.arc(u).a().value().cmp(&rep.arc(v).a().value()).then(u.cmp(&v)));
    let mut out = String::new();
    let _ = writeln!(out, r##"<?xml version="1.0" encoding="UTF-8"?>"##);
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"##
    );
    let _ = writeln!(out, r##"  <circle cx="{c:.3}" cy="{c:.3}" r="{base:.3}" fill="none" stroke="#999" stroke-width="1"/>"##);
    for (rank, &v) in order.iter().enumerate() {
        let r = base + step * (rank as f64 + 1.0);
        let a = rational_to_f64(&rep.arc(v).a().value());
        let b = rational_to_f64(&rep.arc(v).b().value());
        let len = rational_to_f64(&rep.arc(v).length());
        let (x0, y0) = at(a, r);
        let (x1, y1) = at(b, r);
        if len == 0.0 {
            let _ = writeln!(out, r##"  <circle cx="{x0:.3}" cy="{y0:.3}" r="2" fill="#1f77b4"/>"##);
        } else {
            let large = i32::from(len > l / 2.0);
            let _ = writeln!(
                out,
                r##"  <path d="M {x0:.3} {y0:.3} A {r:.3} {r:.3} 0 {large} 1 {x1:.3} {y1:.3}" fill="none" stroke="#1f77b4" stroke-width="2"/>"##
            );
        }
        let _ = writeln!(out, r##"  <text x="{x0:.3}" y="{y0:.3}" font-size="10" dx="3" dy="-3">I{v}</text>"##);
    }
    for v in 0..n {
        let p = rational_to_f64(&rep.point(v).value());
        let (x, y) = at(p, base);
        let (tx, ty) = at(p, base - 14.0);
        let _ = writeln!(out, r##"  <circle cx="{x:.3}" cy="{y:.3}" r="3" fill="#d62728"/>"##);
        let _ = writeln!(out, r##"  <text x="{tx:.3}" y="{ty:.3}" font-size="10" text-anchor="middle" dominant-baseline="middle">p{v}</text>"##);
    }
    out.push_str("</svg>\n");
    out
}

fn configure_workers() -> Result<(), InputError> {
    if let Ok(text) = std::env::var("CACD_WORKERS") {
        let workers: usize = text
            .parse()
            .ok()
            .filter(|&w| w > 0)
            .ok_or_else(|| InputError(format!("CACD_WORKERS must be a positive integer, got `{text}`")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| InputError(format!("cannot start worker pool: {e}")))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_workers().and_then(|()| run(cli)) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
