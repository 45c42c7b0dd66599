use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};

use ks_coset_cli::cache::{self, Cache, Lookup, CACHE_DIR_ENV};
use ks_coset_cli::commands;
use ks_coset_cli::document::{OutputDocument, Payload, Verdict};
use ks_coset_cli::{render, Format};
use ks_coset_core::{CosetSpec, Error, DEFAULT_BUDGET};

/// Spectra, field identifications and level-rank duality checks for the
/// Grassmannian Kazama-Suzuki cosets G(m,n,k).
#[derive(Parser)]
#[command(name = "ks-coset", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,

    /// Upper bound on the number of candidate fields enumerated per coset.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,

    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,

    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Recompute and compare byte-for-byte with the cached entry.
    #[arg(long, global = true, conflicts_with = "no_cache")]
    verify_cache: bool,
}

#[derive(Args, Clone, Copy)]
struct SpecArgs {
    m: u32,
    n: u32,
    k: u32,
}

impl SpecArgs {
    fn spec(self) -> Result<CosetSpec> {
        Ok(CosetSpec::new(self.m, self.n, self.k)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Resolved spectrum: one row per field-identification orbit.
    Spectrum(SpecArgs),
    /// Vacuum partners and, with --verify, their self-audit.
    Vps {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        verify: bool,
    },
    /// Compare G(m,n,k) with G(k,n,m).
    Duality(SpecArgs),
    /// Primaries, weights and S-matrix checks of each chiral factor.
    Modular(SpecArgs),
    /// Vacuum partners of u(1)_a x u(1)_b / u(1)_{a+b}.
    U1Coset { a: u64, b: u64 },
}

enum Outcome {
    Ok,
    Mismatch,
}

fn check_budget(spec: CosetSpec, budget: u128) -> Result<()> {
    let estimated = spec.candidate_count();
    if estimated > budget {
        return Err(Error::BudgetExceeded { estimated, budget }.into());
    }
    Ok(())
}

fn cached(
    cli: &Cli,
    command: &str,
    spec: CosetSpec,
    compute: impl Fn() -> Result<OutputDocument>,
) -> Result<OutputDocument> {
    if cli.no_cache {
        return compute();
    }
    let cache = Cache::new(cli.cache_dir.clone().unwrap_or_else(cache::default_dir));
    let key = commands::spec_doc(spec);
    let store = |doc: &OutputDocument| {
        if let Err(e) = cache.store(command, key, &doc.to_json()) {
            eprintln!("warning: could not write cache entry: {e:#}");
        }
    };
    match cache.load(command, key) {
        Lookup::Hit { doc, bytes } => {
            if cli.verify_cache {
                let fresh = compute()?;
                if fresh.to_json() != bytes {
                    store(&fresh);
                    bail!(
                        "cache entry {} differs from a fresh computation; entry rewritten",
                        cache.path(command, key).display()
                    );
                }
                eprintln!(
                    "cache entry verified: {}",
                    cache.path(command, key).display()
                );
            }
            Ok(*doc)
        }
        Lookup::Miss => {
            let fresh = compute()?;
            store(&fresh);
            Ok(fresh)
        }
        Lookup::Corrupt(reason) => {
            eprintln!("warning: corrupt cache entry ({reason}); recomputing");
            let fresh = compute()?;
            store(&fresh);
            Ok(fresh)
        }
    }
}

fn run(cli: &Cli) -> Result<(OutputDocument, Outcome)> {
    let doc = match cli.command {
        Command::Spectrum(args) => {
            let spec = args.spec()?;
            check_budget(spec, cli.budget)?;
            cached(cli, "spectrum", spec, || {
                Ok(commands::spectrum(spec, cli.budget)?)
            })?
        }
        Command::Vps { spec, verify } => commands::vps(spec.spec()?, verify)?,
        Command::Duality(args) => {
            let spec = args.spec()?;
            check_budget(spec, cli.budget)?;
            check_budget(spec.level_rank_dual(), cli.budget)?;
            cached(cli, "duality", spec, || {
                Ok(commands::duality(spec, cli.budget)?)
            })?
        }
        Command::Modular(args) => commands::modular(args.spec()?)?,
        Command::U1Coset { a, b } => commands::u1_coset(a, b)?,
    };
    let outcome = match &doc.payload {
        Payload::DualityReport(p) if p.verdict == Verdict::Fail => Outcome::Mismatch,
        Payload::VpGroup(p) if p.audit_passed == Some(false) => Outcome::Mismatch,
        _ => Outcome::Ok,
    };
    Ok((doc, outcome))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok((doc, outcome)) => {
            print!("{}", render(&doc, cli.format));
            match outcome {
                Outcome::Ok => ExitCode::SUCCESS,
                Outcome::Mismatch => ExitCode::from(2),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
