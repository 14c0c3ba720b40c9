//! The `realreg` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use realreg_core::analysis::{cantor_bendixson, dimension};
use realreg_core::normal_form::{sparse_normal_form_capped, DEFAULT_CHAIN_CAP};
use realreg_core::rational;
use realreg_core::{
    classify_sparsity, defining_formula, extract_cantor, extract_scale, growth_oracle,
    intersection, member, tameness_verdict, to_exp_sum, BuchiAutomaton, Error, ExpSumDescription,
    Growth, SparsityVerdict,
};

use crate::format::{self, Input};

/// Environment variable holding the seed for sampling commands.
pub const SEED_VAR: &str = "REALREG_SEED";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Core(Error::Parse { .. }) => 2,
            CliError::Core(Error::ResourceLimit { .. }) => 4,
            CliError::Core(_) => 3,
        }
    }
}

/// Exit code and standard output of one invocation. The first line of
/// `stdout` is `ok` or `error: <kind>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "realreg",
    version,
    about = "Analyze base-r Büchi-recognizable subsets of [0,1]^m"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide sparsity; prints the normal form or a witness, plus the growth oracle.
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = 30)]
        nmax: usize,
    },
    /// Hausdorff dimension of the closure of one coordinate.
    Dim {
        file: PathBuf,
        #[arg(long)]
        coord: Option<usize>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Sparse normal form.
    Nf {
        file: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Exponential-sum description.
    Expsum { file: PathBuf },
    /// Cantor–Bendixson rank and derivatives of the closure.
    Cb { file: PathBuf },
    /// Closed automaton for the topological closure.
    Closure {
        file: PathBuf,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Automaton for a regular Cantor set inside the input.
    Cantor {
        file: PathBuf,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Membership of a rational point, given as p/q[,p/q...].
    Member { file: PathBuf, point: String },
    /// Defining formula and the lcm of word lengths.
    Define { file: PathBuf },
    /// Scale r^{-ℓN} recovered from the set, with the extraction trace.
    Scale { file: PathBuf },
    /// Intersection of two sparse sets in independent bases.
    Intersect {
        file: PathBuf,
        #[arg(long)]
        height: Option<u64>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Natural log of the intersection cardinality bound.
    Bound { s: u64, t: u64 },
    /// Tameness verdict.
    Verdict { file: PathBuf },
    /// Accepted lasso words, seeded by REALREG_SEED.
    Sample {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path) -> Result<Input, CliError> {
    Ok(format::parse_input(&read(path)?)?)
}

fn load_automaton(path: &Path) -> Result<BuchiAutomaton, CliError> {
    Ok(load(path)?.automaton()?)
}

/// The closed description of the input's closure. Automata must be sparse.
fn closed_description(path: &Path) -> Result<ExpSumDescription, CliError> {
    let e = match load(path)? {
        Input::ExpSum(e) => e,
        other => {
            let a = other.automaton()?.trim()?;
            to_exp_sum(&sparse_normal_form_capped(&a, DEFAULT_CHAIN_CAP)?)
        }
    };
    Ok(e.closure())
}

fn word(a: &BuchiAutomaton, w: &[realreg_core::Letter]) -> String {
    let al = a.alphabet();
    let text = al.format_word(w);
    if al.arity() == 1 && al.base() <= 10 {
        text
    } else {
        format!("[{text}]")
    }
}

fn output_automaton(
    a: &BuchiAutomaton,
    out: Option<&Path>,
    text: &mut String,
) -> Result<(), CliError> {
    let body = format::write_automaton(a);
    match out {
        Some(path) => {
            write(path, &body)?;
            let _ = writeln!(text, "wrote {} states={}", path.display(), a.state_count());
        }
        None => text.push_str(&body),
    }
    Ok(())
}

fn seed() -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(0)
}

fn execute(command: Command) -> Result<String, CliError> {
    let mut out = String::new();
    match command {
        Command::Classify { file, nmax } => {
            let a = load_automaton(&file)?.trim()?;
            match classify_sparsity(&a)? {
                SparsityVerdict::Sparse(f) => {
                    let _ = writeln!(out, "SPARSE chains={}", f.chains.len());
                    let _ = writeln!(out, "{f}");
                }
                SparsityVerdict::NonSparse(w) => {
                    let _ = writeln!(
                        out,
                        "NONSPARSE q={} a={} b={}",
                        w.state,
                        word(&a, &w.a),
                        word(&a, &w.b)
                    );
                }
            }
            match growth_oracle(&a, nmax.max(8))? {
                Growth::Polynomial { degree, exponent } => {
                    let _ = writeln!(out, "growth polynomial degree={degree} fit={exponent:.6}");
                }
                Growth::Exponential { ratio } => {
                    let _ = writeln!(out, "growth exponential ratio={ratio:.6}");
                }
            }
        }
        Command::Dim { file, coord, cap } => {
            let a = load_automaton(&file)?;
            let i = match (coord, a.arity()) {
                (Some(i), _) => i,
                (None, 1) => 1,
                (None, m) => {
                    return Err(CliError::Usage(format!(
                        "arity {m} input needs --coord <1..={m}>"
                    )))
                }
            };
            let closed = a.project(i)?.trim()?.close()?;
            let d = dimension::hausdorff_dim_capped(
                &closed,
                cap.unwrap_or(dimension::DEFAULT_SUBSET_CAP),
            )?;
            let _ = writeln!(out, "{d}");
        }
        Command::Nf { file, cap } => {
            let a = load_automaton(&file)?;
            let f = sparse_normal_form_capped(&a, cap.unwrap_or(DEFAULT_CHAIN_CAP))?;
            let _ = writeln!(out, "{f}");
        }
        Command::Expsum { file } => {
            let e = match load(&file)? {
                Input::ExpSum(e) => e,
                other => to_exp_sum(&sparse_normal_form_capped(
                    &other.automaton()?,
                    DEFAULT_CHAIN_CAP,
                )?),
            };
            out.push_str(&format::write_expsum(&e));
        }
        Command::Cb { file } => {
            let e = closed_description(&file)?;
            let ds = cantor_bendixson::cb_derivatives(&e);
            let _ = writeln!(out, "rank {}", ds.len() - 1);
            for (k, d) in ds.iter().enumerate() {
                let _ = writeln!(out, "derivative {k} chains={}", d.chains.len());
                for c in &d.chains {
                    let _ = writeln!(out, "  {}", format::write_chain(c));
                }
            }
        }
        Command::Closure { file, out: path } => {
            let a = load_automaton(&file)?.trim()?.close()?;
            output_automaton(&a, path.as_deref(), &mut out)?;
        }
        Command::Cantor { file, out: path } => {
            let c = extract_cantor(&load_automaton(&file)?)?;
            let d = realreg_core::hausdorff_dim(&c)?;
            let _ = writeln!(out, "dim {d}");
            output_automaton(&c, path.as_deref(), &mut out)?;
        }
        Command::Member { file, point } => {
            let a = load_automaton(&file)?;
            let x = rational::parse_vec(&point)?;
            let _ = writeln!(out, "{}", member(&a, &x)?);
        }
        Command::Define { file } => {
            let a = load_automaton(&file)?;
            let f = defining_formula(&sparse_normal_form_capped(&a, DEFAULT_CHAIN_CAP)?);
            let _ = writeln!(out, "formula {}", f.text);
            let _ = writeln!(out, "ell_L {}", f.ell_l);
        }
        Command::Scale { file } => {
            let e = closed_description(&file)?;
            let w = extract_scale(&e)?;
            let t = &w.trace;
            let _ = writeln!(out, "ell {}", w.ell);
            let _ = writeln!(out, "coordinate {}", t.coordinate);
            let _ = writeln!(out, "derivatives {}", t.derivatives);
            let _ = writeln!(out, "accumulation {}", rational::format(&t.accumulation));
            let _ = writeln!(out, "reflected {}", t.reflected);
            let _ = writeln!(out, "scale {}", rational::format(&t.scale));
            let _ = writeln!(out, "base {} power {}", t.base, t.power);
            let mults: Vec<String> = t
                .multipliers
                .iter()
                .map(|(b, m)| format!("{b}:{m}"))
                .collect();
            let _ = writeln!(out, "multipliers {}", mults.join(" "));
            let progs: Vec<String> = t
                .progressions
                .iter()
                .map(|p| {
                    format!(
                        "b{}/b{}={}^{}mod{}",
                        p.i + 1,
                        p.j + 1,
                        t.base,
                        p.offset,
                        p.modulus
                    )
                })
                .collect();
            let _ = writeln!(out, "progressions {}", progs.join(" "));
            let window: String = t
                .window
                .iter()
                .map(|&b| if b { '1' } else { '0' })
                .collect();
            let _ = writeln!(out, "T from {} period-window {}", t.start, window);
        }
        Command::Intersect { file, height, cap } => {
            let mut problem =
                format::parse_problem(&read(&file)?)?.with_height(intersection::DEFAULT_HEIGHT);
            if let Some(h) = height {
                problem.height = h;
            }
            let r = intersection::intersect_sparse_capped(
                &problem,
                cap.unwrap_or(intersection::DEFAULT_NODE_CAP),
            )?;
            for v in &r.values {
                let _ = writeln!(out, "{}", rational::format_vec(v));
            }
            let _ = writeln!(
                out,
                "{{\"count\": {}, \"bound_log\": {:.6}, \"height\": {}, \"complete_up_to_height\": {}}}",
                r.values.len(),
                r.bound_log,
                r.height,
                r.complete_up_to_height
            );
        }
        Command::Bound { s, t } => {
            let b = intersection::intersection_bound_log(s, t);
            let _ = writeln!(out, "ln_bound {:.6}", b.log);
            let _ = writeln!(out, "formula {}", b.formula);
            let _ = writeln!(out, "exp_argument {}", b.exp_argument);
        }
        Command::Verdict { file } => {
            let v = tameness_verdict(&load_automaton(&file)?)?;
            let _ = writeln!(out, "{}", v.label);
            let _ = writeln!(out, "sparse {}", v.sparse);
            let dims: Vec<String> = v
                .coordinate_dims
                .iter()
                .map(|d| format!("{d:.12}"))
                .collect();
            let _ = writeln!(out, "dims {}", dims.join(" "));
        }
        Command::Sample { file, count } => {
            let a = load_automaton(&file)?.trim()?;
            let mut rng = realreg_core::sample::rng(seed());
            for _ in 0..count {
                let w = realreg_core::sample::accepted_lasso(&mut rng, &a, 6).canonical();
                let _ = writeln!(out, "{} ({})^w", word(&a, &w.spoke), word(&a, &w.cycle));
            }
        }
    }
    Ok(out)
}

/// Runs one command line (`argv[0]` is the program name).
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let info = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return CommandResult {
                exit_code: if info { 0 } else { 1 },
                stdout: if info {
                    format!("ok\n{e}")
                } else {
                    format!("error: usage\n{e}")
                },
            };
        }
    };
    match execute(cli.command) {
        Ok(body) => CommandResult {
            exit_code: 0,
            stdout: format!("ok\n{body}"),
        },
        Err(e) => CommandResult {
            exit_code: e.exit_code(),
            stdout: format!("error: {}\n{e}\n", e.kind()),
        },
    }
}
