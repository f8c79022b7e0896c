use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use weylcert_core::verify::{run_cases, CaseSpec, Check, Report, Verdict, VerifyConfig};
use weylcert_core::{CartanType, Family, Partition, DEFAULT_GUARD};

mod docs;
mod render;

const EXIT_USAGE: u8 = 1;

#[derive(Parser, Debug)]
#[command(name = "weylcert", version, about = "Exact checks for exterior powers in Springer representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Directory for cached Weyl group enumerations.
    #[arg(long, global = true, env = "WEYLCERT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads; 0 means one per core.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest Weyl group order to enumerate.
    #[arg(long, global = true)]
    guard: Option<u128>,
    /// JSON file with defaults for guard, cache_dir, jobs and format.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Include per-case wall time in reports.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Args, Debug)]
struct Target {
    #[arg(value_name = "FAMILY")]
    family_pos: Option<Family>,
    #[arg(value_name = "RANK")]
    rank_pos: Option<usize>,
    #[arg(long, conflicts_with = "family_pos")]
    family: Option<Family>,
    #[arg(long, conflicts_with = "rank_pos")]
    rank: Option<usize>,
}

impl Target {
    fn family(&self) -> Result<Family, String> {
        self.family.or(self.family_pos).ok_or_else(|| "missing family".to_string())
    }

    fn resolve(&self) -> Result<(Family, usize), String> {
        let rank = self.rank.or(self.rank_pos).ok_or_else(|| "missing rank".to_string())?;
        Ok((self.family()?, rank))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the verification pipeline for one family and rank.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Jordan type such as 3,1; all Jordan types when omitted.
        #[arg(long)]
        orbit: Option<Partition>,
        /// Comma-separated subset of the checks.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<Check>>,
    },
    /// One row per decomposition for every rank up to --max-rank.
    Table {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        max_rank: usize,
        #[arg(long)]
        min_rank: Option<usize>,
    },
    /// Bivariate table of exterior powers in the coinvariant algebra.
    Solomon {
        #[command(flatten)]
        target: Target,
    },
    /// Kostka-Foulkes polynomial of shape MU and content LAM.
    Kostka { mu: Partition, lam: Partition },
    /// Decompositions of every Jordan type.
    Orbits {
        #[command(flatten)]
        target: Target,
    },
}

#[derive(Deserialize, Default, Debug)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    guard: Option<u128>,
    cache_dir: Option<PathBuf>,
    jobs: Option<usize>,
    format: Option<Format>,
}

struct Settings {
    format: Format,
    jobs: usize,
    verify: VerifyConfig,
}

fn settings(opts: &GlobalOpts) -> Result<Settings, String> {
    let file = match &opts.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            serde_json::from_str::<ConfigFile>(&text).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => ConfigFile::default(),
    };
    Ok(Settings {
        format: opts.format.or(file.format).unwrap_or(Format::Md),
        jobs: opts.jobs.or(file.jobs).unwrap_or(0),
        verify: VerifyConfig {
            guard: opts.guard.or(file.guard).unwrap_or(DEFAULT_GUARD),
            cache_dir: opts.cache_dir.clone().or(file.cache_dir),
            timing: opts.timing,
        },
    })
}

fn run_report(specs: &[CaseSpec], s: &Settings) -> Result<Report, String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(s.jobs)
        .build()
        .map_err(|e| e.to_string())?;
    pool.install(|| run_cases(specs, &s.verify)).map_err(|e| e.to_string())
}

fn execute(cli: Cli) -> Result<(String, Verdict), String> {
    let s = settings(&cli.global)?;
    match cli.command {
        Command::Verify { target, orbit, checks } => {
            let (family, rank) = target.resolve()?;
            let mut spec = CaseSpec::new(family, rank, orbit);
            if let Some(checks) = checks {
                spec = spec.with_checks(checks);
            }
            let report = run_report(&[spec], &s)?;
            Ok((render::report(&report, s.format, false), report.verdict))
        }
        Command::Table {
            target,
            max_rank,
            min_rank,
        } => {
            let family = target.family()?;
            let min = min_rank.unwrap_or(family.min_rank().max(2));
            let specs: Vec<CaseSpec> = (min..=max_rank)
                .map(|l| CaseSpec::new(family, l, None))
                .collect();
            for spec in &specs {
                let cartan = CartanType::new(family, spec.rank).map_err(|e| e.to_string())?;
                cartan.check_guard(s.verify.guard).map_err(|e| e.to_string())?;
            }
            let report = run_report(&specs, &s)?;
            Ok((render::report(&report, s.format, true), report.verdict))
        }
        Command::Solomon { target } => {
            let (family, rank) = target.resolve()?;
            let doc = docs::solomon(family, rank, &s.verify).map_err(|e| e.to_string())?;
            let verdict = doc.verdict;
            Ok((render::solomon(&doc, s.format), verdict))
        }
        Command::Kostka { mu, lam } => {
            let doc = docs::kostka(&mu, &lam).map_err(|e| e.to_string())?;
            Ok((render::kostka(&doc, s.format), Verdict::Pass))
        }
        Command::Orbits { target } => {
            let (family, rank) = target.resolve()?;
            let doc = docs::orbits(family, rank).map_err(|e| e.to_string())?;
            Ok((render::orbits(&doc, s.format), Verdict::Pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli) {
        Ok((text, verdict)) => {
            print!("{text}");
            ExitCode::from(verdict.exit_code() as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
