use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use siltwork::cluster::ClusterObject;
use siltwork::derived::SiltingCandidate;
use siltwork::excseq::ExceptionalSequence;
use siltwork::io;
use siltwork::repcat::Stalk;
use siltwork::{Error, RatModCat, RatRepresentation, Result};

#[derive(Parser)]
#[command(name = "siltwork", version, about = "Exceptional sequences, silting and m-cluster tilting objects over acyclic quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Quiver file: {"vertices": n, "arrows": [[s, t], ...]}, vertices from 1.
    #[arg(long, global = true)]
    quiver: Option<PathBuf>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List the indecomposable modules.
    Indec,
    /// Check a sequence, or enumerate all complete ones.
    Excseq {
        #[arg(long)]
        sequence: Option<String>,
        #[arg(long)]
        enumerate: bool,
    },
    /// Mutate a sequence at the pair (index, index+1).
    Mutate {
        #[arg(long)]
        sequence: String,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        inverse: bool,
    },
    /// The decorated Hom-Ext quiver of a sequence.
    Homext {
        #[arg(long)]
        sequence: String,
    },
    /// Silting tests for stalks `module@degree`; with n-1 stalks and a
    /// window, the complements in that window.
    Silting {
        #[arg(long)]
        sequence: String,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// m-cluster tilting tests; with n-1 stalks, the exchange cycle.
    Cluster {
        #[arg(long)]
        sequence: String,
        #[arg(long)]
        m: usize,
    },
    /// Complements of an almost complete exceptional sequence.
    Complements {
        #[arg(long)]
        sequence: String,
    },
    /// Place an almost complete exceptional sequence in the fundamental domain.
    Place {
        #[arg(long)]
        sequence: String,
    },
    /// Run every property suite.
    VerifyAll {
        #[arg(long, default_value_t = 2)]
        max_m: usize,
    },
}

enum Report {
    Json(Value),
    Text(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok((report, ok)) => {
            let text = match report {
                Report::Json(v) => io::to_text(&v),
                Report::Text(s) => s,
            };
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_falsification() { 2 } else { 1 })
        }
    }
}

fn load(cli: &Cli) -> Result<RatModCat> {
    let path = cli.quiver.as_ref().ok_or_else(|| Error::InvalidArgument("--quiver is required".into()))?;
    let text = fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    Ok(RatModCat::new(io::parse_quiver(&text)?))
}

fn modules(cat: &RatModCat, csv: &str) -> Result<Vec<RatRepresentation>> {
    let list = io::parse_module_list(cat, csv)?;
    if list.iter().any(|(_, d)| d.is_some()) {
        return Err(Error::InvalidArgument("degrees are not allowed here".into()));
    }
    Ok(list.into_iter().map(|(x, _)| x).collect())
}

fn sequence(cat: &RatModCat, csv: &str) -> Result<ExceptionalSequence<siltwork::Rational>> {
    ExceptionalSequence::new(cat, modules(cat, csv)?)
}

/// Stalks from `module@degree` items; a missing degree means position in
/// the list, so a bare sequence becomes its staircase.
fn stalks(cat: &RatModCat, csv: &str) -> Result<Vec<Stalk<siltwork::Rational>>> {
    Ok(io::parse_module_list(cat, csv)?
        .into_iter()
        .enumerate()
        .map(|(i, (x, d))| Stalk::new(x, d.unwrap_or(i as i32)))
        .collect())
}

fn window(text: &str) -> Result<(i32, i32)> {
    let bad = || Error::Parse(format!("window {text:?} is not LO..HI"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: i32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i32 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn run(cli: &Cli) -> Result<(Report, bool)> {
    let cat = load(cli)?;
    if cli.format == Format::Dot && !matches!(cli.command, Command::Homext { .. }) {
        return Err(Error::Unsupported("dot output exists only for homext".into()));
    }
    let json = |v: Value| Ok((Report::Json(v), true));
    match &cli.command {
        Command::Indec => {
            let ind = cat.indecomposables()?;
            json(json!({ "count": ind.len(), "modules": ind.iter().map(io::module_json).collect::<Vec<_>>() }))
        }
        Command::Excseq { sequence: seq, enumerate } => {
            if *enumerate {
                let all = cat.complete_sequences()?;
                return json(json!({ "count": all.len(), "sequences": all.iter().map(io::sequence_json).collect::<Vec<_>>() }));
            }
            let csv = seq.as_deref().ok_or_else(|| Error::InvalidArgument("give --sequence or --enumerate".into()))?;
            let terms = modules(&cat, csv)?;
            let ok = cat.is_exceptional_sequence(&terms)?;
            json(json!({
                "exceptional": ok,
                "complete": ok && terms.len() == cat.n(),
                "terms": terms.iter().map(io::module_json).collect::<Vec<_>>(),
            }))
        }
        Command::Mutate { sequence: csv, index, inverse } => {
            let s = sequence(&cat, csv)?;
            if *index == 0 {
                return Err(Error::InvalidArgument("--index counts from 1".into()));
            }
            let t = if *inverse { cat.mutate_inverse(&s, index - 1)? } else { cat.mutate(&s, index - 1)? };
            json(io::sequence_json(&t))
        }
        Command::Homext { sequence: csv } => {
            let g = cat.hom_ext_quiver(&sequence(&cat, csv)?)?;
            match cli.format {
                Format::Dot => Ok((Report::Text(g.to_dot()), true)),
                Format::Json => json(io::homext_json(&g)),
            }
        }
        Command::Silting { sequence: csv, window: w } => {
            let t = SiltingCandidate::new(&cat, stalks(&cat, csv)?)?;
            let mut report = json!({
                "candidate": io::stalks_json(t.summands()),
                "partial_silting": cat.is_partial_silting(&t)?,
                "silting": cat.is_silting(&t)?,
                "order": cat.silting_order(&t)?.map(|s| io::sequence_json(&s)),
            });
            if let Some(w) = w {
                let (lo, hi) = window(w)?;
                report["complements"] = io::window_json(&cat.silting_complements_in_window(&t, lo, hi)?);
            }
            json(report)
        }
        Command::Cluster { sequence: csv, m } => {
            let t = ClusterObject::new(&cat, *m, stalks(&cat, csv)?)?;
            let mut report = json!({
                "m": m,
                "object": io::stalks_json(t.summands()),
                "m_rigid": cat.is_m_rigid(&t)?,
                "cluster_tilting": cat.is_m_cluster_tilting(&t)?,
            });
            if t.len() + 1 == cat.n() && cat.is_m_rigid(&t)? {
                report["exchange"] = io::cluster_exchange_json(&cat.exchange_triangles(&t)?);
            }
            json(report)
        }
        Command::Complements { sequence: csv } => {
            let s = sequence(&cat, csv)?;
            let c = cat.complements_almost_complete(&s)?;
            json(Value::Array(
                c.iter().map(|(pos, x)| json!({ "position": pos + 1, "module": io::module_json(x) })).collect(),
            ))
        }
        Command::Place { sequence: csv } => {
            let s = sequence(&cat, csv)?;
            let p = cat.place_almost_complete(&s)?;
            let ledger = cat.verify_placement(&p)?;
            let ok = ledger.all_hold();
            Ok((Report::Json(io::placement_json(&p, &ledger)), ok))
        }
        Command::VerifyAll { max_m } => {
            let reports = cat.verify_all(*max_m)?;
            let ok = reports.iter().all(|r| r.passed());
            let suites: Vec<Value> = reports
                .iter()
                .map(|r| json!({ "suite": r.name, "checked": r.checked, "passed": r.passed(), "failure": r.failure }))
                .collect();
            Ok((Report::Json(json!({ "quiver": io::quiver_json(cat.quiver()), "suites": suites, "passed": ok })), ok))
        }
    }
}
