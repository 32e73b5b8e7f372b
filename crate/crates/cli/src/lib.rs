//! Command-line front end for `ssplat-core`.
//!
//! [`run`] parses an argument list, executes one verb and returns the exit
//! status with the report: 0 on success, 1 when a check fails, 2 on usage or
//! input errors.

mod dot;

use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

use ssplat_core::builders::{boolean, chain, fig1, fig2, fig3b, subspace_lattice};
use ssplat_core::search::scan_to_tsv;
use ssplat_core::ssp::{format_set, DEFAULT_BUDGET};
use ssplat_core::{
    antichain_check, conjecture_scan, is_rc, is_ssp, parse_lattice, shattered_set, to_text, vc_dim,
    ElementSet, Family, Lattice, MobiusTable, Outcome, RcVerdict, Strategy,
};

pub use dot::export_dot;

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "SSPLAT_JOBS";

#[derive(Parser, Debug)]
#[command(
    name = "ssplat",
    version,
    about = "Shattering and SSP checks on finite lattices"
)]
struct Cli {
    /// Worker threads for parallel searches (0 = one per core).
    #[arg(long, global = true, env = JOBS_ENV, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

/// Lattice sources: a file in the text format, or one of `boolean:N`,
/// `chain:K`, `subspace:Q:N`, `fig1`, `fig2`, `fig3b`, and products `A*B`.
#[derive(Subcommand, Debug)]
enum Command {
    /// Load or build a lattice and summarize it.
    Build {
        source: String,
        /// Print the lattice in the text format instead of a summary.
        #[arg(long)]
        emit: bool,
    },
    /// Decide relative complementation.
    Rc { source: String },
    /// Möbius values: one pair, or the list of vanishing pairs.
    Mobius {
        source: String,
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        pair: Option<Vec<String>>,
    },
    /// Elements shattered by a family.
    Shatter {
        source: String,
        #[arg(long)]
        family: String,
    },
    /// VC dimension of a family.
    Vc {
        source: String,
        #[arg(long)]
        family: String,
    },
    /// Check the SSP property for the lattice, or for one family.
    Ssp {
        source: String,
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        family: Option<String>,
    },
    /// Antichain bound for a family shattering no element of the antichain.
    Antichain {
        source: String,
        #[arg(long)]
        antichain: String,
        #[arg(long)]
        family: String,
    },
    /// Compare relative complementation with SSP on all small lattices.
    Scan {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hasse diagram in DOT.
    ExportDot { source: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Report = Result<(i32, String), Failure>;

/// Runs one command. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => {
                    let text = e.to_string();
                    let first = text.lines().next().unwrap_or("usage error");
                    (2, format!("{first}\n"))
                }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => return (2, format!("error: {e}\n")),
    };
    match pool.install(|| execute(cli.command)) {
        Ok(result) => result,
        Err(Failure(message)) => (2, format!("error: {message}\n")),
    }
}

fn execute(command: Command) -> Report {
    match command {
        Command::Build { source, emit } => {
            let l = load(&source)?;
            if emit {
                return Ok((0, to_text(&l)));
            }
            Ok((0, summary(&l)))
        }
        Command::Rc { source } => {
            let l = load(&source)?;
            Ok(match is_rc(&l) {
                RcVerdict::RelativelyComplemented => (0, "RC\n".into()),
                RcVerdict::Witness(w) => (
                    1,
                    format!(
                        "not RC: interval {} < {} < {}\n",
                        l.name(w.x),
                        l.name(w.z),
                        l.name(w.y)
                    ),
                ),
            })
        }
        Command::Mobius { source, pair } => {
            let l = load(&source)?;
            let mu = MobiusTable::new(&l);
            if let Some(pair) = pair {
                let x = element(&l, &pair[0])?;
                let y = element(&l, &pair[1])?;
                let value = mu
                    .get(x, y)
                    .ok_or_else(|| Failure(format!("{} is not below {}", pair[0], pair[1])))?;
                return Ok((0, format!("{value}\n")));
            }
            let pairs: Vec<String> = mu
                .vanishing_pairs()
                .iter()
                .map(|&(x, y)| format!("({},{})", l.name(x), l.name(y)))
                .collect();
            let listed = if pairs.is_empty() {
                "none".to_string()
            } else {
                pairs.join(" ")
            };
            Ok((0, format!("vanishing pairs: {listed}\n")))
        }
        Command::Shatter { source, family } => {
            let l = load(&source)?;
            let f = parse_family(&l, &family)?;
            let s = shattered_set(&l, &f);
            Ok((
                0,
                format!(
                    "Str = {}, |F|={}, |Str|={}\n",
                    format_set(&l, &s),
                    f.len(),
                    s.len()
                ),
            ))
        }
        Command::Vc { source, family } => {
            let l = load(&source)?;
            let f = parse_family(&l, &family)?;
            Ok((0, format!("VC = {}\n", vc_dim(&l, &f)?)))
        }
        Command::Ssp {
            source,
            strategy,
            budget,
            family,
        } => {
            let l = load(&source)?;
            if let Some(family) = family {
                let f = parse_family(&l, &family)?;
                let s = shattered_set(&l, &f).len();
                return Ok(if s < f.len() {
                    (
                        1,
                        format!(
                            "Violated, witness {}, |F|={}, |Str|={s}\n",
                            format_set(&l, &f),
                            f.len()
                        ),
                    )
                } else {
                    (0, format!("holds, |F|={}, |Str|={s}\n", f.len()))
                });
            }
            let verdict = is_ssp(&l, strategy, budget);
            let code = match verdict.outcome {
                Outcome::CertifiedSsp => 0,
                Outcome::Violated | Outcome::Inconclusive => 1,
            };
            Ok((code, format!("{}\n", verdict.describe(&l))))
        }
        Command::Antichain {
            source,
            antichain,
            family,
        } => {
            let l = load(&source)?;
            let a = parse_family(&l, &antichain)?;
            let f = parse_family(&l, &family)?;
            let r = antichain_check(&l, &a, &f)?;
            let text = format!(
                "|F|={}, |F_A|={}, F_A = {}, bound {}\n",
                r.family_size,
                r.below.len(),
                format_set(&l, &r.below),
                if r.holds() { "holds" } else { "fails" }
            );
            Ok((if r.holds() { 0 } else { 1 }, text))
        }
        Command::Scan {
            n_max,
            budget,
            format,
        } => {
            let reports = conjecture_scan(n_max, budget)?;
            let failed = reports.iter().any(|r| !r.counterexamples.is_empty());
            let text = match format {
                Format::Tsv => scan_to_tsv(&reports),
                Format::Text => reports.iter().map(|r| r.to_text()).collect(),
            };
            Ok((if failed { 1 } else { 0 }, text))
        }
        Command::ExportDot { source } => Ok((0, export_dot(&load(&source)?))),
    }
}

fn summary(l: &Lattice) -> String {
    let mut out = format!(
        "elements={} covers={} lattice={} ranked={}\n",
        l.len(),
        l.covers().len(),
        yes_no(l.is_lattice()),
        yes_no(l.is_ranked())
    );
    if let Ok(profile) = l.rank_profile() {
        let counts: Vec<String> = profile.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "rank profile {}", counts.join(","));
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn number(source: &str, text: &str) -> Result<usize, Failure> {
    text.parse()
        .map_err(|_| Failure(format!("bad number `{text}` in source `{source}`")))
}

/// Resolves a lattice source: a builder expression or a file path.
pub fn load_source(source: &str) -> Result<Lattice, String> {
    load(source).map_err(|Failure(m)| m)
}

fn load(source: &str) -> Result<Lattice, Failure> {
    if let Some((a, b)) = source.split_once('*') {
        return Ok(load(a)?.product(&load(b)?)?);
    }
    let parts: Vec<&str> = source.split(':').collect();
    let built = match parts.as_slice() {
        ["fig1"] => fig1(),
        ["fig2"] => fig2(),
        ["fig3b"] => fig3b(),
        ["boolean", n] => boolean(number(source, n)?)?,
        ["chain", k] => chain(number(source, k)?)?,
        ["subspace", q, n] => {
            let q = number(source, q)?;
            let q = u32::try_from(q).map_err(|_| Failure(format!("field size {q} too large")))?;
            subspace_lattice(q, number(source, n)?)?
        }
        _ => {
            let path = Path::new(source);
            if !path.is_file() {
                return Err(Failure(format!("unknown lattice source `{source}`")));
            }
            let text = std::fs::read_to_string(path)?;
            return parse_lattice(&text).map_err(|e| Failure(format!("{source}: {e}")));
        }
    };
    Ok(built)
}

/// An element by label, falling back to `bottom`/`0` and `top`/`e`.
fn element(l: &Lattice, label: &str) -> Result<usize, Failure> {
    if let Some(i) = l.index_of(label) {
        return Ok(i);
    }
    match label {
        "bottom" | "0" => Ok(l.bottom()),
        "top" | "e" => l
            .top()
            .ok_or_else(|| Failure("structure has no top element".into())),
        _ => Err(Failure(format!("unknown element `{label}`"))),
    }
}

fn parse_family(l: &Lattice, text: &str) -> Result<Family, Failure> {
    let mut f = ElementSet::empty(l.len());
    for label in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        f.insert(element(l, label)?);
    }
    Ok(f)
}
