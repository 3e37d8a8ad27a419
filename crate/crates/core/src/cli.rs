//! The `hstrict` command line.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::blocks::{block_size, kac_check, type_s, type_w};
use crate::branching::{
    basic_spin_dims, induce_s, induce_w, jantzen_seitz_a, jantzen_seitz_s, omega, restrict_s,
    restrict_w,
};
use crate::cartan::CartanType;
use crate::characters::appendix::{cross_check, load_appendix};
use crate::crystal::{eps, phi, reduce_signature, signature, verify_axioms, weight, Element};
use crate::error::Error;
use crate::graph::{export_dot, export_json, generate};
use crate::partition::{
    a_of, b_of, bar_core, bar_core_and_weight, content, enumerate_h_strict, enumerate_restricted,
    is_h_strict, is_restricted, Partition,
};

#[derive(Parser, Debug)]
#[command(
    name = "hstrict",
    version,
    about = "Crystal combinatorics of restricted h-strict partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List restricted h-strict partitions of N, one JSON array per line.
    Enumerate {
        #[arg(long, value_parser = parse_h)]
        h: CartanType,
        #[arg(long)]
        n: usize,
        /// List every h-strict partition, restricted or not.
        #[arg(long)]
        all: bool,
    },
    /// Export the crystal graph up to a degree.
    Graph {
        #[arg(long, value_parser = parse_h)]
        h: CartanType,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Crystal and block data for one partition.
    Stats {
        #[arg(long, value_parser = parse_h)]
        h: CartanType,
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
    },
    /// Restriction or induction report.
    Branch {
        #[arg(long, value_parser = parse_h)]
        h: CartanType,
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        #[arg(long, value_enum)]
        direction: DirectionArg,
    },
    /// Jantzen–Seitz verdict for S(n) or A(n).
    Js {
        #[arg(long, value_parser = parse_h)]
        h: CartanType,
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, value_enum)]
        group: Group,
    },
    /// Label and dimensions of the basic spin module.
    Spin {
        #[arg(long, value_parser = parse_h)]
        h: CartanType,
        #[arg(long)]
        n: usize,
    },
    /// Run consistency suites; exits 1 on any violation.
    Check {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, value_parser = parse_h)]
        h: CartanType,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgebraArg {
    #[value(name = "W")]
    W,
    #[value(name = "S")]
    S,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DirectionArg {
    Res,
    Ind,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Group {
    #[value(name = "S")]
    S,
    #[value(name = "A")]
    A,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Axioms,
    Kac,
    Cores,
    Fixtures,
    All,
}

fn parse_h(s: &str) -> Result<CartanType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Outcome of one consistency suite.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub summary: String,
    pub problems: Vec<String>,
    /// Informational lines that do not fail the suite.
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Crystal axioms on all h-strict partitions of degree at most `max_n`.
pub fn suite_axioms(ct: CartanType, max_n: usize) -> SuiteOutcome {
    let elements: Vec<Element> = (0..=max_n)
        .flat_map(|n| enumerate_h_strict(n, ct))
        .map(Element::from)
        .collect();
    let report = verify_axioms(&elements, ct);
    SuiteOutcome {
        name: "axioms",
        summary: format!("{} elements, {} checks", report.elements, report.checks),
        problems: report
            .violations
            .iter()
            .map(|v| {
                format!(
                    "{:?} at {} (i={}): {}",
                    v.axiom, v.element, v.residue, v.detail
                )
            })
            .collect(),
        notes: Vec::new(),
    }
}

/// Block sizes against `Par_ℓ` of the bar weight.
pub fn suite_kac(ct: CartanType, max_n: usize) -> Result<SuiteOutcome, Error> {
    let mut problems = Vec::new();
    let mut blocks = 0;
    for n in 0..=max_n {
        let report = kac_check(n, ct)?;
        blocks += report.blocks;
        problems.extend(report.mismatches.iter().map(|m| {
            format!(
                "{}: block size {}, Par of weight {} is {}",
                m.partition, m.block_size, m.weight, m.expected
            )
        }));
    }
    Ok(SuiteOutcome {
        name: "kac",
        summary: format!("{blocks} blocks up to degree {max_n}"),
        problems,
        notes: Vec::new(),
    })
}

/// Same content iff same bar core, over all h-strict partitions of each
/// degree; also that the crystal's layers are exactly the restricted ones.
pub fn suite_cores(ct: CartanType, max_n: usize) -> SuiteOutcome {
    let mut problems = Vec::new();
    let mut pairs = 0usize;
    for n in 0..=max_n {
        let layer = enumerate_h_strict(n, ct);
        let keyed: Vec<_> = layer
            .iter()
            .map(|lam| (content(lam, ct), bar_core(lam, ct)))
            .collect();
        for (x, (c1, k1)) in keyed.iter().enumerate() {
            for (y, (c2, k2)) in keyed.iter().enumerate().skip(x + 1) {
                pairs += 1;
                if (c1 == c2) != (k1 == k2) {
                    problems.push(format!(
                        "{} and {}: same content {}, same core {}",
                        layer[x],
                        layer[y],
                        c1 == c2,
                        k1 == k2
                    ));
                }
            }
        }
    }
    let graph = generate(ct, max_n);
    for n in 0..=max_n {
        let reached: Vec<Partition> = graph.layer(n).into_iter().cloned().collect();
        if reached != enumerate_restricted(n, ct) {
            problems.push(format!(
                "degree {n}: crystal layer differs from the restricted partitions"
            ));
        }
    }
    SuiteOutcome {
        name: "cores",
        summary: format!("{pairs} pairs, {} crystal vertices", graph.nodes.len()),
        problems,
        notes: Vec::new(),
    }
}

/// Character tables against the crystal.
pub fn suite_fixtures(ct: CartanType) -> Result<SuiteOutcome, Error> {
    let appendix = load_appendix(ct)?;
    let report = cross_check(&appendix, ct);
    let survivors: usize = report.degrees.iter().map(|d| d.survivors).sum();
    Ok(SuiteOutcome {
        name: "fixtures",
        summary: format!(
            "{} labels, {survivors} surviving modules, {} notes",
            appendix.entries.len(),
            report.notes.len()
        ),
        problems: report.failures,
        notes: report.notes,
    })
}

fn json_line(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"))
}

fn invalid(lam: &Partition, ct: CartanType, need_restricted: bool) -> Option<String> {
    if !is_h_strict(lam, ct) {
        Some(format!("{lam} is not {}-strict", ct.h_label()))
    } else if need_restricted && !is_restricted(lam, ct) {
        Some(format!("{lam} is not restricted for h={}", ct.h_label()))
    } else {
        None
    }
}

/// The `stats` report as a JSON value.
pub fn stats(lam: &Partition, ct: CartanType) -> Value {
    let residues: Vec<usize> = ct.residues(lam.size() + 1).collect();
    let mut signatures = BTreeMap::new();
    for &i in &residues {
        let sig = signature(lam, ct, i);
        if !sig.is_empty() {
            signatures.insert(
                i.to_string(),
                json!({
                    "signature": sig.to_string(),
                    "reduced": reduce_signature(&sig).to_string(),
                }),
            );
        }
    }
    let (core, weight_w) = bar_core_and_weight(lam, ct);
    let restricted = is_restricted(lam, ct);
    json!({
        "partition": lam,
        "h": ct.h_label(),
        "size": lam.size(),
        "restricted": restricted,
        "content": content(lam, ct),
        "eps": residues.iter().map(|&i| eps(lam, ct, i)).collect::<Vec<_>>(),
        "phi": residues.iter().map(|&i| phi(lam, ct, i)).collect::<Vec<_>>(),
        "signatures": signatures,
        "wt": weight(lam, ct).to_string(),
        "b": b_of(lam, ct),
        "a": a_of(lam, ct),
        "type_W": type_w(lam, ct).to_string(),
        "type_S": type_s(lam, ct).to_string(),
        "bar_core": core,
        "bar_weight": weight_w,
        "block_size": if restricted { block_size(lam, ct).ok() } else { None },
    })
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match cmd {
        Command::Enumerate { h, n, all } => {
            let list = if all {
                enumerate_h_strict(n, h)
            } else {
                enumerate_restricted(n, h)
            };
            for lam in list {
                writeln!(out, "{}", serde_json::to_string(&lam).expect("json"))?;
            }
        }
        Command::Graph {
            h,
            max_n,
            format,
            out: path,
        } => {
            let graph = generate(h, max_n);
            let text = match format {
                Format::Dot => export_dot(&graph),
                Format::Json => export_json(&graph) + "\n",
            };
            match path {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, text) {
                        writeln!(err, "error: cannot write {}: {e}", p.display())?;
                        return Ok(2);
                    }
                }
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Stats { h, partition } => {
            if let Some(msg) = invalid(&partition, h, false) {
                writeln!(err, "error: {msg}")?;
                return Ok(2);
            }
            json_line(out, &stats(&partition, h))?;
        }
        Command::Branch {
            h,
            partition,
            algebra,
            direction,
        } => {
            let report = match (algebra, direction) {
                (AlgebraArg::W, DirectionArg::Res) => restrict_w(&partition, h),
                (AlgebraArg::W, DirectionArg::Ind) => induce_w(&partition, h),
                (AlgebraArg::S, DirectionArg::Res) => restrict_s(&partition, h),
                (AlgebraArg::S, DirectionArg::Ind) => induce_s(&partition, h),
            };
            match report {
                Ok(r) => writeln!(out, "{}", r.to_json())?,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(2);
                }
            }
        }
        Command::Js {
            h,
            partition,
            group,
        } => {
            let verdict = match group {
                Group::S => jantzen_seitz_s(&partition, h),
                Group::A => jantzen_seitz_a(&partition, h),
            };
            match verdict {
                Ok(v) => {
                    let residues: Vec<usize> = h.residues(partition.size()).collect();
                    json_line(
                        out,
                        &json!({
                            "partition": partition,
                            "group": match group { Group::S => "S", Group::A => "A" },
                            "a": a_of(&partition, h),
                            "eps": residues.iter().map(|&i| eps(&partition, h, i)).collect::<Vec<_>>(),
                            "jantzen_seitz": v,
                        }),
                    )?;
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(2);
                }
            }
        }
        Command::Spin { h, n } => match (omega(n, h), basic_spin_dims(n, h)) {
            (Ok(w), Ok((dim_w, dim_s))) => json_line(
                out,
                &json!({
                    "n": n,
                    "h": h.h_label(),
                    "omega": w,
                    "type_W": type_w(&w, h).to_string(),
                    "dim_W": dim_w,
                    "dim_S": dim_s,
                }),
            )?,
            (Err(e), _) | (_, Err(e)) => {
                writeln!(err, "error: {e}")?;
                return Ok(2);
            }
        },
        Command::Check { suite, h, max_n } => return run_suites(suite, h, max_n, out, err),
    }
    Ok(0)
}

fn run_suites(
    suite: Suite,
    ct: CartanType,
    max_n: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let wanted = |s: Suite| suite == s || suite == Suite::All;
    let mut outcomes = Vec::new();
    for s in [Suite::Axioms, Suite::Kac, Suite::Cores, Suite::Fixtures] {
        if !wanted(s) {
            continue;
        }
        let outcome = match s {
            Suite::Axioms => Ok(suite_axioms(ct, max_n)),
            Suite::Kac => suite_kac(ct, max_n),
            Suite::Cores => Ok(suite_cores(ct, max_n)),
            _ => suite_fixtures(ct),
        };
        match outcome {
            Ok(o) => outcomes.push(Ok(o)),
            Err(e) if suite == Suite::All => outcomes.push(Err(format!("{s:?}: skipped ({e})"))),
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(2);
            }
        }
    }
    let mut failed = false;
    for o in &outcomes {
        let o = match o {
            Ok(o) => o,
            Err(skipped) => {
                writeln!(out, "{}", skipped.to_lowercase())?;
                continue;
            }
        };
        if o.passed() {
            writeln!(out, "{}: ok ({})", o.name, o.summary)?;
        } else {
            failed = true;
            writeln!(
                out,
                "{}: FAILED, {} problems ({})",
                o.name,
                o.problems.len(),
                o.summary
            )?;
            for p in &o.problems {
                writeln!(out, "  {p}")?;
            }
        }
        for note in &o.notes {
            writeln!(out, "  note: {note}")?;
        }
    }
    Ok(if failed { 1 } else { 0 })
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code: 0 success, 1 failed check, 2 bad input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
