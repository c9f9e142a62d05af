use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use distributors::error::{Error, Result};
use distributors::function::{Homomorphism, DEFAULT_ENUMERATION_CAP};
use distributors::group::Group;
use distributors::harness::{cauchy_report, census_report, lift_report, sylow_report, transfer_report, Report};
use distributors::io::{parse_elements, parse_group_spec};
use distributors::selfcheck::{load_fixture, selfcheck, SelfcheckOptions, DEFAULT_SAMPLES};
use distributors::subgroup::{QuotientGroup, Subgroup};

#[derive(Parser)]
#[command(name = "distributors", version, about = "Function conjugation, transfers and lifts over finite groups")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Compact JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum number of functions to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u128,
}

#[derive(Subcommand)]
enum Command {
    /// Element of order p from the fixed points of Z_p acting on functions.
    Cauchy {
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: usize,
    },
    /// Sylow p-subgroup grown through normalisers.
    Sylow {
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: usize,
    },
    /// Orbit sizes of the conjugation action on identity-preserving functions.
    Census {
        #[arg(long)]
        domain: String,
        #[arg(long)]
        codomain: String,
    },
    /// Transfer to the subgroup generated by `--subgroup`; `--pi` gives the generator images.
    Transfer {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        subgroup: String,
        #[arg(long)]
        pi: String,
        /// Abelian target of π; defaults to the cyclic group of the subgroup's order.
        #[arg(long)]
        target: Option<String>,
    },
    /// Lift a homomorphism into H/N to H.
    Lift {
        #[arg(long)]
        extension: String,
        /// Generators of the normal subgroup N.
        #[arg(long)]
        normal: String,
        /// Elements of H whose cosets are the images of the domain generators.
        #[arg(long)]
        hom: String,
        /// Domain group; defaults to the cyclic group of the order of the first image.
        #[arg(long)]
        domain: Option<String>,
    },
    /// Run every invariant suite and validate fixtures.
    Selfcheck {
        /// Extra group or function JSON files to validate.
        #[arg(long)]
        fixture: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

fn group(spec: &str) -> Result<Arc<Group>> {
    parse_group_spec(spec).map(Arc::new)
}

fn run(cli: &Cli) -> Result<Report> {
    let cap = cli.global.cap;
    match &cli.command {
        Command::Cauchy { group: spec, prime } => cauchy_report(spec, &group(spec)?, *prime, cap),
        Command::Sylow { group: spec, prime } => sylow_report(spec, &group(spec)?, *prime, cap),
        Command::Census { domain, codomain } => census_report(domain, codomain, &group(domain)?, &group(codomain)?, cap),
        Command::Transfer { group: spec, subgroup, pi, target } => {
            let g = group(spec)?;
            let gens = parse_elements(subgroup)?;
            let target = match target {
                Some(t) => group(t)?,
                None => Arc::new(Group::cyclic(Subgroup::closure(&g, &gens)?.order())?),
            };
            transfer_report(spec, &g, &gens, &target, &parse_elements(pi)?)
        }
        Command::Lift { extension, normal, hom, domain } => {
            let h = group(extension)?;
            let n = Subgroup::closure(&h, &parse_elements(normal)?)?;
            let q = QuotientGroup::new(&n)?;
            let images: Vec<_> = parse_elements(hom)?.into_iter().map(|x| h.check(x).map(|_| q.project(x))).collect::<Result<_>>()?;
            let first = *images.first().ok_or_else(|| Error::Precondition("--hom needs at least one value".into()))?;
            let domain_spec = match domain {
                Some(d) => d.clone(),
                None => format!("cyclic:{}", q.group().element_order(first)?),
            };
            let g = group(&domain_spec)?;
            let gens = g.greedy_generators();
            if gens.len() != images.len() {
                return Err(Error::Precondition(format!(
                    "{domain_spec} has {} generators but --hom gave {} values",
                    gens.len(),
                    images.len()
                )));
            }
            let f = Homomorphism::from_generator_images(&g, q.group(), &gens, &images)?;
            lift_report(extension, &domain_spec, &n, &f)
        }
        Command::Selfcheck { fixture, samples } => {
            let opts = SelfcheckOptions { seed: cli.global.seed, cap, samples: *samples };
            let extra: Vec<_> = fixture.iter().map(|p| (p.display().to_string(), load_fixture(p))).collect();
            Ok(selfcheck(&opts, &extra))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are precondition failures; 2 is reserved for invariant violations
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(report) => {
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{}", report.to_json(cli.global.pretty));
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            let body = serde_json::json!({"error": e.to_string(), "exit_code": e.exit_code()});
            eprintln!("{body}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
