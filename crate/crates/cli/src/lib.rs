//! The `anick` command line: reads a presentation file, runs one stage of
//! the pipeline and prints text, JSON or DOT.
//!
//! Exit codes: 0 success, 2 the relations are not a Gröbner basis, 3 a
//! degree bound was exceeded, 4 bad input or a broken invariant.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use anick_core::chains::{build_chain_graph, obstructions};
use anick_core::groebner::count_normal_words;
use anick_core::resolution::ModuleElementRecord;
use anick_core::{Error, GroebnerCheck, Presentation, ResolutionEngine, RewriteSystem};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_GROEBNER: i32 = 2;
pub const EXIT_BOUND: i32 = 3;
pub const EXIT_INPUT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "anick", version, about = "Noncommutative Gröbner bases and Anick resolutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Input {
    /// Presentation file (JSON)
    file: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct Basis {
    /// Largest ambiguity weight checked (or completed) before resolving
    #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..))]
    max_degree: u64,
    /// Complete the relations instead of refusing when they are not a Gröbner basis
    #[arg(long)]
    complete: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that the relations form a Gröbner basis up to a degree
    GbCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
    },
    /// Bounded completion to a reduced Gröbner basis
    GbComplete {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
    },
    /// Number of normal words of each length
    NormalWords {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        max_length: u64,
    },
    /// Leading monomials of the (minimal) relations
    Obstructions {
        #[command(flatten)]
        input: Input,
    },
    /// Nodes and edges of the chain graph
    ChainGraph {
        #[command(flatten)]
        input: Input,
        /// Also write the graph in DOT format
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Keep nodes unreachable from the root in the DOT file
        #[arg(long)]
        no_prune: bool,
    },
    /// Chains of one degree
    Chains {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
    },
    /// Differentials of the resolution up to a degree
    Resolve {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        basis: Basis,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        /// Also print the homotopy correction inside each differential
        #[arg(long)]
        show_homotopy: bool,
    },
    /// Check d∘d = 0 on every chain up to a degree
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        basis: Basis,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
    },
    /// Scalar matrices of K ⊗ d; nonzero entries show non-minimality
    Diagnose {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        basis: Basis,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
    },
}

impl Command {
    fn input(&self) -> &Input {
        match self {
            Command::GbCheck { input, .. }
            | Command::GbComplete { input, .. }
            | Command::NormalWords { input, .. }
            | Command::Obstructions { input }
            | Command::ChainGraph { input, .. }
            | Command::Chains { input, .. }
            | Command::Resolve { input, .. }
            | Command::Verify { input, .. }
            | Command::Diagnose { input, .. } => input,
        }
    }
}

/// Everything a run prints with `--format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub presentation_sha256: Option<String>,
    pub results: Results,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Results {
    GbCheck {
        verified_to_degree: Option<u64>,
        counterexample: Option<CounterexampleRecord>,
    },
    GbComplete {
        rules: Vec<String>,
        verified_to_degree: Option<u64>,
    },
    NormalWords {
        counts: Vec<String>,
    },
    Obstructions {
        words: Vec<String>,
    },
    ChainGraph {
        nodes: Vec<String>,
        edges: Vec<EdgeRecord>,
    },
    Chains {
        degree: usize,
        words: Vec<String>,
    },
    Resolve {
        differentials: Vec<DifferentialRecord>,
    },
    Verify {
        ok: bool,
        degrees: Vec<VerifyRecord>,
    },
    Diagnose {
        matrices: Vec<MatrixRecord>,
    },
    Error {
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub word: String,
    pub left_normal_form: String,
    pub right_normal_form: String,
    pub residue: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub from: String,
    pub to: String,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialRecord {
    pub degree: usize,
    pub chain: String,
    pub text: String,
    pub value: ModuleElementRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homotopy: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub degree: usize,
    pub chains: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub degree: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

/// What a run produced: `stdout` is deterministic, `stderr` carries
/// timings and diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotGroebner { .. } => EXIT_NOT_GROEBNER,
        Error::BoundExceeded { .. } => EXIT_BOUND,
        _ => EXIT_INPUT,
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let echo: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let format = cli.command.input().format;
    let start = Instant::now();

    let (digest, results, code) = match load(&cli.command.input().file) {
        Err(e) => (None, Results::Error { message: e.to_string() }, exit_code(&e)),
        Ok(pres) => {
            let digest = hex::encode(Sha256::digest(pres.to_json().as_bytes()));
            match execute(&cli.command, &pres) {
                Ok((results, code)) => (Some(digest), results, code),
                Err(e) => (Some(digest), Results::Error { message: e.to_string() }, exit_code(&e)),
            }
        }
    };
    let report = RunReport { command: echo, presentation_sha256: digest, results, exit_code: code };
    let mut stderr = String::new();
    let stdout = match format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Text => {
            if let Results::Error { message } = &report.results {
                let _ = writeln!(stderr, "error: {message}");
                String::new()
            } else {
                render_text(&report.results)
            }
        }
    };
    if let Command::ChainGraph { dot: Some(path), no_prune, .. } = &cli.command {
        if code == EXIT_OK {
            if let Err(e) = write_dot(&cli.command.input().file, path, !no_prune) {
                let _ = writeln!(stderr, "error: {e}");
                return Outcome { stdout, stderr, code: EXIT_INPUT };
            }
        }
    }
    let _ = writeln!(stderr, "elapsed: {:.3}s", start.elapsed().as_secs_f64());
    Outcome { stdout, stderr, code }
}

fn load(path: &PathBuf) -> anick_core::Result<Presentation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
    Presentation::from_json(&text)
}

fn write_dot(input: &PathBuf, path: &PathBuf, prune: bool) -> anick_core::Result<()> {
    let pres = load(input)?;
    let rs = RewriteSystem::from_presentation(&pres)?;
    let g = build_chain_graph(&obstructions(&rs)?, pres.alphabet());
    let g = if prune { g.pruned() } else { g };
    std::fs::write(path, g.to_dot()).map_err(|e| Error::Json(format!("{}: {e}", path.display())))
}

/// A Gröbner basis for the resolution commands: the relations themselves
/// when they check out to `max_degree`, otherwise the completion if asked.
fn groebner_basis(pres: &Presentation, basis: &Basis) -> anick_core::Result<RewriteSystem> {
    let rs = RewriteSystem::from_presentation(pres)?;
    if basis.complete {
        return rs.complete(basis.max_degree);
    }
    match rs.check_groebner(basis.max_degree)? {
        GroebnerCheck::Verified { .. } => Ok(rs),
        GroebnerCheck::Failed(cx) => {
            Err(Error::NotGroebner { word: pres.format_word(&cx.overlap.word) })
        }
    }
}

fn execute(cmd: &Command, pres: &Presentation) -> anick_core::Result<(Results, i32)> {
    let fmt_words = |ws: &mut dyn Iterator<Item = &anick_core::Word>| -> Vec<String> {
        ws.map(|w| pres.format_word(w)).collect()
    };
    match cmd {
        Command::GbCheck { max_degree, .. } => {
            let rs = RewriteSystem::from_presentation(pres)?;
            Ok(match rs.check_groebner(*max_degree)? {
                GroebnerCheck::Verified { degree } => (
                    Results::GbCheck { verified_to_degree: Some(degree), counterexample: None },
                    EXIT_OK,
                ),
                GroebnerCheck::Failed(cx) => (
                    Results::GbCheck {
                        verified_to_degree: None,
                        counterexample: Some(CounterexampleRecord {
                            word: pres.format_word(&cx.overlap.word),
                            left_normal_form: pres.format_poly(&cx.left_normal_form),
                            right_normal_form: pres.format_poly(&cx.right_normal_form),
                            residue: pres.format_poly(&cx.residue),
                        }),
                    },
                    EXIT_NOT_GROEBNER,
                ),
            })
        }
        Command::GbComplete { max_degree, .. } => {
            let rs = RewriteSystem::from_presentation(pres)?.complete(*max_degree)?;
            Ok((
                Results::GbComplete {
                    rules: rs.format_rules(),
                    verified_to_degree: rs.verified_to_degree(),
                },
                EXIT_OK,
            ))
        }
        Command::NormalWords { max_length, .. } => {
            let rs = RewriteSystem::from_presentation(pres)?;
            let counts = count_normal_words(&rs, *max_length as usize);
            Ok((Results::NormalWords { counts: counts.iter().map(|c| c.to_string()).collect() }, EXIT_OK))
        }
        Command::Obstructions { .. } => {
            let rs = RewriteSystem::from_presentation(pres)?;
            let obs = obstructions(&rs)?;
            let mut ws: Vec<_> = obs.words().cloned().collect();
            ws.sort_by(|a, b| pres.order().compare(b, a));
            Ok((Results::Obstructions { words: fmt_words(&mut ws.iter()) }, EXIT_OK))
        }
        Command::ChainGraph { .. } => {
            let rs = RewriteSystem::from_presentation(pres)?;
            let g = build_chain_graph(&obstructions(&rs)?, pres.alphabet());
            let edges = g
                .edges()
                .map(|(i, e)| EdgeRecord {
                    from: pres.format_word(&g.nodes()[i]),
                    to: pres.format_word(&g.nodes()[e.target]),
                    witness: e.witness.as_ref().map(|w| pres.format_word(w)),
                })
                .collect();
            Ok((Results::ChainGraph { nodes: fmt_words(&mut g.nodes().iter()), edges }, EXIT_OK))
        }
        Command::Chains { degree, .. } => {
            let rs = RewriteSystem::from_presentation(pres)?;
            let g = build_chain_graph(&obstructions(&rs)?, pres.alphabet());
            let chains = g.chains(*degree as usize, pres.order());
            Ok((
                Results::Chains {
                    degree: *degree as usize,
                    words: fmt_words(&mut chains.iter().map(|c| c.word())),
                },
                EXIT_OK,
            ))
        }
        Command::Resolve { basis, degree, show_homotopy, .. } => {
            let mut e = ResolutionEngine::new(pres, groebner_basis(pres, basis)?)?;
            let mut differentials = Vec::new();
            for n in 1..=*degree as usize {
                for c in e.chains(n) {
                    let d = e.differential(&c)?;
                    let homotopy = if *show_homotopy && n >= 2 {
                        let (prefix, tail) = c.split()?;
                        let prefix = e.chain(n - 1, prefix.word())?;
                        let lead = e.basis_element(prefix, &tail);
                        let image = e.apply_d(&lead)?;
                        let h = e.contract(&image)?;
                        Some(e.format(&h))
                    } else {
                        None
                    };
                    differentials.push(DifferentialRecord {
                        degree: n,
                        chain: pres.format_word(c.word()),
                        text: e.format(&d),
                        value: e.to_record(&d),
                        homotopy,
                    });
                }
            }
            Ok((Results::Resolve { differentials }, EXIT_OK))
        }
        Command::Verify { basis, degree, .. } => {
            let mut e = ResolutionEngine::new(pres, groebner_basis(pres, basis)?)?;
            let report = e.verify_complex(*degree as usize)?;
            let degrees = report
                .degrees
                .iter()
                .map(|d| VerifyRecord { degree: d.degree, chains: d.chains, failures: d.failures.clone() })
                .collect();
            let ok = report.is_ok();
            Ok((Results::Verify { ok, degrees }, if ok { EXIT_OK } else { EXIT_INPUT }))
        }
        Command::Diagnose { basis, degree, .. } => {
            let mut e = ResolutionEngine::new(pres, groebner_basis(pres, basis)?)?;
            let matrices = e
                .minimality_diagnostic(*degree as usize)?
                .into_iter()
                .map(|m| MatrixRecord {
                    degree: m.degree,
                    rows: fmt_words(&mut m.rows.iter()),
                    cols: fmt_words(&mut m.cols.iter()),
                    entries: m
                        .entries
                        .iter()
                        .map(|row| row.iter().map(|c| c.to_string()).collect())
                        .collect(),
                })
                .collect();
            Ok((Results::Diagnose { matrices }, EXIT_OK))
        }
    }
}

fn render_text(results: &Results) -> String {
    let mut out = String::new();
    match results {
        Results::GbCheck { verified_to_degree, counterexample } => {
            if let Some(d) = verified_to_degree {
                let _ = writeln!(out, "Gröbner basis verified up to degree {d}");
            }
            if let Some(cx) = counterexample {
                let _ = writeln!(out, "not a Gröbner basis: ambiguity {} does not resolve", cx.word);
                let _ = writeln!(out, "  left normal form:  {}", cx.left_normal_form);
                let _ = writeln!(out, "  right normal form: {}", cx.right_normal_form);
                let _ = writeln!(out, "  residue:           {}", cx.residue);
            }
        }
        Results::GbComplete { rules, verified_to_degree } => {
            for r in rules {
                let _ = writeln!(out, "{r}");
            }
            if let Some(d) = verified_to_degree {
                let _ = writeln!(out, "# every ambiguity resolves (checked to degree {d})");
            }
        }
        Results::NormalWords { counts } => {
            for (len, c) in counts.iter().enumerate() {
                let _ = writeln!(out, "{len}\t{c}");
            }
        }
        Results::Obstructions { words } | Results::Chains { words, .. } => {
            for w in words {
                let _ = writeln!(out, "{w}");
            }
        }
        Results::ChainGraph { nodes, edges } => {
            let _ = writeln!(out, "nodes: {}", nodes.join(" "));
            for e in edges {
                match &e.witness {
                    Some(w) => {
                        let _ = writeln!(out, "{} -> {} [{w}]", e.from, e.to);
                    }
                    None => {
                        let _ = writeln!(out, "{} -> {}", e.from, e.to);
                    }
                }
            }
        }
        Results::Resolve { differentials } => {
            for d in differentials {
                let _ = writeln!(out, "d{}({}) = {}", d.degree, d.chain, d.text);
                if let Some(h) = &d.homotopy {
                    let _ = writeln!(out, "    correction: {h}");
                }
            }
        }
        Results::Verify { ok, degrees } => {
            for d in degrees {
                let status = if d.failures.is_empty() { "ok" } else { "FAILED" };
                let _ = writeln!(out, "degree {}: {} chains, {status}", d.degree, d.chains);
                for f in &d.failures {
                    let _ = writeln!(out, "  nonzero composite on {f}");
                }
            }
            let _ = writeln!(out, "{}", if *ok { "complex verified" } else { "complex check failed" });
        }
        Results::Diagnose { matrices } => {
            for m in matrices {
                let zero = m.entries.iter().flatten().all(|c| c == "0");
                let verdict = if zero { "zero" } else { "nonzero, not minimal here" };
                let _ = writeln!(out, "degree {}: {}x{} {verdict}", m.degree, m.rows.len(), m.cols.len());
                for (i, row) in m.entries.iter().enumerate() {
                    for (j, c) in row.iter().enumerate() {
                        if c != "0" {
                            let _ = writeln!(out, "  [{} <- {}] {c}", m.rows[i], m.cols[j]);
                        }
                    }
                }
            }
        }
        Results::Error { message } => {
            let _ = writeln!(out, "error: {message}");
        }
    }
    out
}
