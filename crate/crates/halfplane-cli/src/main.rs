//! `halfplane`: catalog access, construction pipelines, half-plane property
//! tests, niceness solving and the reproduction harness.
//!
//! Exit codes: 0 success, 1 usage or input error (or a failed reproduction),
//! 2 counterexample found.

mod input;
mod pipeline;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use halfplane::hpp::{
    hpp_random_elementary, hpp_random_rays, rank2_exact_general, shifted_hpp_random, SearchOptions,
};
use halfplane::io::MatroidJson;
use halfplane::matroid::{catalog_entry, catalog_names, family_names};
use halfplane::repr::{nice_cotruncation_solve, nice_principal_solve, transversal_weight_verify};
use halfplane::repro::{reproduce, ReproOptions};
use halfplane::{Error, ToleranceConfig, Verdict};

use input::AnyPoly;


#[derive(Debug)]
pub enum CliError {
    Input(String),
    Lib(Error),
    Step { step: usize, stage: String, source: Box<CliError> },
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => f.write_str(m),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Step { step, stage, source } => write!(f, "step {step} `{stage}`: {source}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

#[derive(Parser)]
#[command(name = "halfplane", version, about = "Multiaffine polynomials, matroids and the half-plane property")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Trial count for randomized searches (overrides fixture defaults).
    #[arg(long, global = true)]
    trials: Option<u64>,
    /// Emit JSON (the default; overrides --pretty).
    #[arg(long, global = true)]
    json: bool,
    /// Emit human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// A root is real when |Im ζ| ≤ tol·(1 + |ζ|).
    #[arg(long, global = true)]
    tol_im: Option<f64>,
    /// A root is nonpositive when Re ζ ≤ tol.
    #[arg(long, global = true)]
    tol_re: Option<f64>,
}

impl Global {
    fn tolerances(&self) -> ToleranceConfig {
        let mut cfg = ToleranceConfig::default();
        if let Some(t) = self.tol_im {
            cfg.root_im_tol = t;
        }
        if let Some(t) = self.tol_re {
            cfg.root_re_tol = t;
        }
        cfg
    }

    fn pretty(&self) -> bool {
        self.pretty && !self.json
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum HppMethod {
    Rays,
    Elementary,
    Shifted,
    Rank2,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog, or print one matroid.
    Catalog { name: Option<String> },
    /// Search for a counterexample to the half-plane property.
    Hpp {
        /// Catalog name, matroid or polynomial JSON file, or a pipeline with --pipeline.
        input: String,
        #[arg(long, value_enum, default_value = "rays")]
        method: HppMethod,
        /// Stop at the first counterexample.
        #[arg(long)]
        first: bool,
        /// Read INPUT as a construct pipeline.
        #[arg(long)]
        pipeline: bool,
    },
    /// Run reproduction fixtures (`all` for every one).
    Reproduce {
        name: String,
        /// Replace the ε of every case.
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Solve a niceness system or verify transversal weights.
    Nice {
        /// Catalog name or matroid JSON file.
        matroid: Option<String>,
        /// Flat for the principal truncation (`all` for E).
        #[arg(long, conflicts_with_all = ["cotrunc", "transversal"])]
        flat: Option<String>,
        /// Set for the principal cotruncation (`all` for E).
        #[arg(long, conflicts_with = "transversal")]
        cotrunc: Option<String>,
        /// Presentation name or JSON file.
        #[arg(long, requires = "weights")]
        transversal: Option<String>,
        /// `ones` or a JSON file of per-set edge weights.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Apply a pipeline such as "basis F7 | relax 1,3,5 | dual".
    Construct { script: String },
}

struct Output {
    json: serde_json::Value,
    pretty: String,
    code: u8,
}

impl Output {
    fn ok(json: serde_json::Value, pretty: String) -> Self {
        Self { json, pretty, code: 0 }
    }
}

fn hpp_input(arg: &str, as_pipeline: bool) -> Result<AnyPoly, CliError> {
    if !as_pipeline {
        return input::polynomial(arg);
    }
    Ok(match pipeline::run(arg)? {
        pipeline::Value::Poly(p) => AnyPoly::Multi(p),
        pipeline::Value::Matroid(m) => AnyPoly::Multi(m.basis_polynomial()),
        pipeline::Value::General(g) => match g.to_multiaffine() {
            Ok(p) => AnyPoly::Multi(p),
            Err(_) => AnyPoly::General(g),
        },
    })
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let g = &cli.global;
    let cfg = g.tolerances();
    cfg.validate()?;
    match &cli.command {
        Command::Catalog { name: None } => {
            let names = catalog_names();
            let families = family_names();
            let pretty = format!("{}\nfamilies: {}", names.join("\n"), families.join(", "));
            Ok(Output::ok(json!({ "names": names, "families": families }), pretty))
        }
        Command::Catalog { name: Some(name) } => {
            let (m, entry) = catalog_entry(name)?;
            let mut value = serde_json::to_value(&entry).expect("serializable entry");
            value["bases"] = serde_json::to_value(MatroidJson::from_matroid(&m).bases).expect("serializable bases");
            Ok(Output::ok(value, render::matroid(&entry.name, &m)))
        }
        Command::Hpp { input: arg, method, first, pipeline: as_pipeline } => {
            let p = hpp_input(arg, *as_pipeline)?;
            let trials = g.trials.unwrap_or(100_000);
            let opts = if *first { SearchOptions::first(trials, g.seed) } else { SearchOptions::count(trials, g.seed) };
            let multi = || match &p {
                AnyPoly::Multi(m) => Ok(m),
                AnyPoly::General(_) => Err(CliError::Input("this method needs a multiaffine polynomial".into())),
            };
            let report = match method {
                HppMethod::Rays => hpp_random_rays(multi()?, opts, &cfg)?,
                HppMethod::Elementary => hpp_random_elementary(multi()?, opts, &cfg)?,
                HppMethod::Shifted => shifted_hpp_random(&p.general(), opts, &cfg)?,
                HppMethod::Rank2 => {
                    let r = rank2_exact_general(&p.general(), &cfg)?;
                    let pretty = render::rank2(&r);
                    let code = if r.hpp { 0 } else { 2 };
                    return Ok(Output { json: serde_json::to_value(&r).expect("serializable"), pretty, code });
                }
            };
            let code = if report.verdict == Verdict::Counterexample { 2 } else { 0 };
            let pretty = render::hpp(&report);
            Ok(Output { json: serde_json::to_value(&report).expect("serializable"), pretty, code })
        }
        Command::Reproduce { name, eps } => {
            let opts = ReproOptions { eps: *eps, trials: g.trials, seed: g.seed, tol: cfg };
            let reports = reproduce(name, &opts)?;
            let code = if reports.iter().all(|r| r.pass) { 0 } else { 1 };
            let pretty = render::reproduce(&reports);
            Ok(Output { json: serde_json::to_value(&reports).expect("serializable"), pretty, code })
        }
        Command::Nice { matroid, flat, cotrunc, transversal, weights } => {
            if let Some(pres_arg) = transversal {
                let pres = input::presentation(pres_arg)?;
                let w = input::edge_weights(weights.as_deref().unwrap_or("ones"), &pres)?;
                let report = transversal_weight_verify(&pres, &w)?;
                let pretty = render::transversal(&report);
                return Ok(Output::ok(serde_json::to_value(&report).expect("serializable"), pretty));
            }
            let name = matroid.as_deref().ok_or_else(|| CliError::Input("nice needs a matroid".into()))?;
            let m = input::matroid(name)?;
            let sol = match (flat, cotrunc) {
                (Some(f), None) => nice_principal_solve(&m, input::element_set(f, m.n())?)?,
                (None, Some(d)) => nice_cotruncation_solve(&m, input::element_set(d, m.n())?)?,
                _ => return Err(CliError::Input("give exactly one of --flat, --cotrunc, --transversal".into())),
            };
            let pretty = render::niceness(&sol);
            Ok(Output::ok(serde_json::to_value(&sol).expect("serializable"), pretty))
        }
        Command::Construct { script } => {
            let value = pipeline::run(script)?;
            Ok(Output::ok(value.to_json(), render::value(&value)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let text = if cli.global.pretty() {
                out.pretty
            } else {
                serde_json::to_string_pretty(&out.json).expect("serializable output")
            };
            // a closed pipe downstream is not an error
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
