//! `eqbundle`: build skeletons, run the exact checks and classify bundles
//! from the command line.

mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eqbundle::beta::check_beta_tau;
use eqbundle::classify::{classify, congruence_check};
use eqbundle::complex::check_regular;
use eqbundle::export::{export_complex, orbit_document, rh_table, standard_families, table1};
use eqbundle::families::{Family, FamilyKind};
use eqbundle::isotropy::isotropy_groupoid;
use eqbundle::orbit::orbit_graph;
use eqbundle::reps::enumerate_reps;
use eqbundle::skeleton::build_skeleton;
use eqbundle::target::TargetGroup;
use eqbundle::verify::run_suite;
use eqbundle::zmodule::{chain_model, fixed_sequence_check};
use eqbundle::Error;
use log::info;

use render::{Document, Rendered};

#[derive(Parser, Debug)]
#[command(name = "eqbundle", version, about = "Equivariant bundles over the 2-sphere: skeletons, checks, classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the document here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    /// cyclic, dihedral, tetrahedral, octahedral or icosahedral.
    #[arg(long)]
    family: FamilyKind,

    /// Parameter for the cyclic and dihedral families.
    #[arg(long)]
    n: Option<u32>,
}

impl FamilyArgs {
    fn family(&self) -> Result<Family, Error> {
        Family::new(self.family, self.n)
    }
}

/// Closed integer interval written `lo..hi`.
#[derive(Debug, Clone, Copy)]
struct Window(i64, i64);

fn parse_window(s: &str) -> Result<Window, String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got `{s}`"))?;
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("`{x}`: {e}"));
    Ok(Window(parse(lo)?, parse(hi)?))
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit the invariant 1-skeleton of a family.
    Skeleton {
        #[command(flatten)]
        family: FamilyArgs,
        /// Include unit-sphere coordinates for plotting.
        #[arg(long)]
        coords: bool,
    },
    /// Emit the orbit graph and the isotropy groupoid.
    Orbit {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Check the Riemann–Hurwitz count for one family or all of them.
    RhCheck {
        #[arg(long, required_unless_present = "all")]
        family: Option<FamilyKind>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, conflicts_with = "family")]
        all: bool,
        /// Largest cyclic/dihedral parameter with `--all`.
        #[arg(long, default_value_t = 12)]
        max_n: u32,
    },
    /// Enumerate isotropy representation classes.
    Reps {
        #[command(flatten)]
        family: FamilyArgs,
        /// circle, su2, u<n>, unitary:<n> or finite:<family>[:<n>].
        #[arg(long)]
        target: TargetGroup,
        /// List classes only when there are at most this many.
        #[arg(long, default_value_t = 10_000)]
        list_limit: u128,
    },
    /// Fixed sublattices, norm index and cokernel for the module model.
    ZmodCheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "circle")]
        target: TargetGroup,
    },
    /// Reproduce the rank table (1 − χ, N) for every family.
    Table1 {
        #[arg(long, default_value_t = 2)]
        min_n: u32,
        #[arg(long, default_value_t = 12)]
        max_n: u32,
    },
    /// List bundle classes as (representation, Chern value) pairs.
    Classify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        target: TargetGroup,
        /// Chern window `lo..hi`; defaults to ±2|Γ|.
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: Option<Window>,
    },
    /// Brute-force the cellular representation maps for a finite target.
    BetaCheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        target: TargetGroup,
        #[arg(long, default_value_t = eqbundle::beta::DEFAULT_BOUND)]
        bound: usize,
    },
    /// Run every verification check.
    Verify,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
    Output(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Output(m) => write!(f, "cannot write output: {m}"),
        }
    }
}

/// Errors caused by the invocation rather than by a computation.
fn is_usage(e: &CliError) -> bool {
    let CliError::Core(e) = e else {
        return matches!(e, CliError::Usage(_));
    };
    matches!(
        e,
        Error::InvalidParameter(_)
            | Error::UnknownFamily(_)
            | Error::UnknownTarget(_)
            | Error::InvalidWindow { .. }
            | Error::DisconnectedTarget(_)
            | Error::TargetTooLarge { .. }
    )
}

fn run(cli: &Cli) -> Result<Rendered, CliError> {
    let doc = match &cli.command {
        Command::Skeleton { family, coords } => {
            let x = build_skeleton(family.family()?);
            let violations = check_regular(&x);
            Document::Skeleton(render::SkeletonDoc {
                complex: export_complex(&x, *coords),
                regular: violations.is_empty(),
                violations,
            })
        }
        Command::Orbit { family } => Document::Orbit(orbit_document(family.family()?)?),
        Command::RhCheck { family, n, all, max_n } => {
            let families = match family {
                Some(kind) if !*all => vec![Family::new(*kind, *n)?],
                _ => standard_families(2, *max_n),
            };
            let entries = rh_table(&families)?;
            let holds = entries.iter().all(|e| e.report.holds);
            Document::RhCheck(render::RhDoc { entries, holds })
        }
        Command::Reps { family, target, list_limit } => {
            let fam = family.family()?;
            let og = orbit_graph(Arc::new(build_skeleton(fam)))?;
            let space = enumerate_reps(&isotropy_groupoid(Arc::new(og))?, target)?;
            let classes = (space.count <= *list_limit).then(|| space.iter().collect());
            Document::Reps(render::RepsDoc { family: fam, space: space.export(), classes })
        }
        Command::ZmodCheck { family, target } => {
            let fam = family.family()?;
            let x = build_skeleton(fam);
            let ranks = chain_model(&x, target)?.ranks;
            let report = fixed_sequence_check(&x, target)?;
            Document::Zmod(render::ZmodDoc { family: fam, target: target.clone(), ranks, report })
        }
        Command::Table1 { min_n, max_n } => {
            let rows = table1(*min_n, *max_n)?;
            let all_match = rows.iter().all(|r| r.matches_reference);
            Document::Table1(render::Table1Doc { rows, all_match })
        }
        Command::Classify { family, target, window } => {
            let fam = family.family()?;
            let c = classify(fam, target, window.map(|w| (w.0, w.1)))?;
            let order = fam.order() as u64;
            let congruence_holds = c
                .classes
                .iter()
                .enumerate()
                .all(|(i, a)| c.classes[i + 1..].iter().all(|b| congruence_check(a, b, order)));
            Document::Classify(render::ClassifyDoc { classification: c, congruence_holds })
        }
        Command::BetaCheck { family, target, bound } => {
            let fam = family.family()?;
            let og = orbit_graph(Arc::new(build_skeleton(fam)))?;
            let report = check_beta_tau(&isotropy_groupoid(Arc::new(og))?, target, *bound)?;
            Document::Beta(render::BetaDoc { family: fam, target: target.clone(), report })
        }
        Command::Verify => Document::Verify(run_suite()?),
    };
    doc.render(cli.format)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("EQBUNDLE_LOG")).init();
    let cli = Cli::parse();
    info!("running {:?}", cli.command);
    let rendered = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if is_usage(&e) { 2 } else { 1 });
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &rendered.text),
        None => std::io::stdout().lock().write_all(rendered.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    if rendered.passed {
        ExitCode::SUCCESS
    } else {
        eprintln!("check failed; see the emitted document");
        ExitCode::from(1)
    }
}
