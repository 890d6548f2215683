//! Batch front end for the Frobenius tower engine: block data, branching
//! tables, coherent measures, identity verification, growth sampling and
//! Casimir expansions, with exact rationals on the wire.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frobtower_core::coherent::Variant;
use frobtower_core::engine::{Engine, DEFAULT_DIM_CEILING};
use frobtower_core::error::Error;
use frobtower_core::exactlin::Field;
use frobtower_core::towers::Tower;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "frobtower", version, about = "Exact engine for free Frobenius towers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FieldArg {
    Q,
    Qi,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Plain,
    Starred,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NegativeControl {
    /// Corrupt a dual basis so the Frobenius axiom check fails (exit 4).
    Dual,
    /// Use an element violating the centralizer assumption (exit 5).
    Jm,
}

#[derive(Args)]
struct Common {
    /// Tower spec: sym | hecke:d,i0,... | sergeev | wreath:<file>
    #[arg(long, default_value = "sym")]
    tower: String,
    /// Maximum level of the tower to build.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Ground field (default: ℚ, upgraded to ℚ(i) automatically on demand).
    #[arg(long)]
    field: Option<FieldArg>,
    /// Output format.
    #[arg(long, default_value = "json")]
    format: FormatArg,
    /// Dimension ceiling guard (flag beats the FROBTOWER_MAX_DIM variable).
    #[arg(long)]
    max_dim: Option<usize>,
    /// Omit the generated-at timestamp for byte-identical reruns.
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Per-level block data: simple and projective dimensions.
    Simples {
        #[command(flatten)]
        common: Common,
        /// Attach partition labels (symmetric tower; computes eigenvalues).
        #[arg(long)]
        labels: bool,
    },
    /// Branching multiplicity tables between adjacent levels.
    Branching {
        #[command(flatten)]
        common: Common,
    },
    /// Measures, transition tables, and spectral moments.
    Measures {
        #[command(flatten)]
        common: Common,
        /// Restrict to one system variant (default: both).
        #[arg(long)]
        variant: Option<VariantArg>,
        /// Moment range "a..b" (inclusive) or a single k; enables
        /// spectral measures.
        #[arg(long)]
        k: Option<String>,
    },
    /// Run the identity checker suite; exit 0 iff everything verifies.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Moment orders to check, "a..b" (inclusive) or single k.
        #[arg(long, default_value = "0..2")]
        k: String,
        /// Run a deliberately broken input through the checks.
        #[arg(long)]
        negative_control: Option<NegativeControl>,
    },
    /// Sample growth paths through the up transition function.
    Sample {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        paths: usize,
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long)]
        variant: Option<VariantArg>,
    },
    /// Print C_{n,k} and C^ι_{n,k} as element expansions.
    Casimir {
        #[command(flatten)]
        common: Common,
        /// Lower level k of the extension A_k ⊂ A_n.
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn ceiling(common: &Common) -> usize {
    common
        .max_dim
        .or_else(|| {
            std::env::var("FROBTOWER_MAX_DIM")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_DIM_CEILING)
}

fn engine_for(common: &Common) -> Result<Engine, Error> {
    let tower = Tower::from_spec(&common.tower)?;
    let field = common.field.map(|f| match f {
        FieldArg::Q => Field::Rational,
        FieldArg::Qi => Field::Gaussian,
    });
    Engine::new(tower, common.n, ceiling(common))?.with_field(field)
}

fn parse_k_range(text: &str) -> Result<Vec<u32>, Error> {
    let bad = || Error::Config(format!("bad k range '{text}' (want a..b or a single k)"));
    if let Some((a, b)) = text.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|_| bad())?;
        let b: u32 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if b < a {
            return Err(bad());
        }
        Ok((a..=b).collect())
    } else {
        let k: u32 = text.trim().parse().map_err(|_| bad())?;
        Ok(vec![k])
    }
}

fn variants(choice: Option<VariantArg>) -> Vec<Variant> {
    match choice {
        Some(VariantArg::Plain) => vec![Variant::Plain],
        Some(VariantArg::Starred) => vec![Variant::Starred],
        None => vec![Variant::Plain, Variant::Starred],
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Simples { common, labels } => {
            let mut engine = engine_for(&common)?;
            let doc = output::simples(&mut engine, common.n, labels, !common.no_timestamp)?;
            output::emit(&doc, common.format.into(), output::simples_csv)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Branching { common } => {
            let mut engine = engine_for(&common)?;
            let doc = output::branching(&mut engine, common.n, !common.no_timestamp)?;
            output::emit(&doc, common.format.into(), output::no_csv)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Measures { common, variant, k } => {
            let mut engine = engine_for(&common)?;
            let ks = k.map(|t| parse_k_range(&t)).transpose()?;
            let doc = output::measures(
                &mut engine,
                common.n,
                &variants(variant),
                ks.as_deref(),
                !common.no_timestamp,
            )?;
            output::emit(&doc, common.format.into(), output::measures_csv)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { common, k, negative_control } => {
            let mut engine = engine_for(&common)?;
            match negative_control {
                Some(NegativeControl::Dual) => {
                    let report = frobtower_core::verify::check_frobenius_axioms_corrupted(
                        &mut engine,
                        common.n.saturating_sub(1),
                    )?;
                    let doc = output::verify_doc(vec![report], !common.no_timestamp);
                    output::emit(&doc, common.format.into(), output::no_csv)?;
                    return Ok(ExitCode::from(4));
                }
                Some(NegativeControl::Jm) => {
                    // A generator of the top level fails the centralizer
                    // assumption; the eigenvalue extraction must reject it.
                    let n = common.n.max(2);
                    let gens = engine.tower.generators(n);
                    let x = gens
                        .into_iter()
                        .last()
                        .ok_or_else(|| Error::Config("tower has no generators".into()))?;
                    engine.branching(n - 1)?;
                    let err = frobtower_core::repn::EigenvalueTable::build(
                        &engine.tower,
                        engine.level_ref(n - 1),
                        engine.blocks_ref(n - 1),
                        engine.level_ref(n),
                        engine.blocks_ref(n),
                        engine.branching_ref(n - 1),
                        &x,
                    )
                    .err()
                    .unwrap_or(Error::InvariantFailure(
                        "negative control unexpectedly verified".into(),
                    ));
                    return Err(err);
                }
                None => {}
            }
            let opts = frobtower_core::verify::SuiteOptions {
                max_level: common.n,
                k_range: parse_k_range(&k)?,
            };
            let reports = frobtower_core::verify::run_suite(&mut engine, &opts)?;
            let ok = frobtower_core::verify::all_verified(&reports);
            let doc = output::verify_doc(reports, !common.no_timestamp);
            output::emit(&doc, common.format.into(), output::no_csv)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(4) })
        }
        Command::Sample { common, seed, paths, steps, variant } => {
            let mut engine = engine_for(&common)?;
            let steps = steps.unwrap_or(common.n);
            if steps > common.n {
                return Err(Error::Config(format!(
                    "steps {steps} exceed the configured level {}",
                    common.n
                )));
            }
            let variant = match variant {
                Some(VariantArg::Starred) => Variant::Starred,
                _ => Variant::Plain,
            };
            let doc = output::sample(
                &mut engine,
                steps,
                seed,
                paths,
                variant,
                !common.no_timestamp,
            )?;
            output::emit(&doc, common.format.into(), output::sample_csv)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Casimir { common, k } => {
            let mut engine = engine_for(&common)?;
            if k >= common.n {
                return Err(Error::Config(format!(
                    "casimir needs k < n (got k={k}, n={})",
                    common.n
                )));
            }
            let doc = output::casimir(&mut engine, common.n, k, !common.no_timestamp)?;
            output::emit(&doc, common.format.into(), output::no_csv)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

impl From<FormatArg> for output::Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => output::Format::Json,
            FormatArg::Csv => output::Format::Csv,
            FormatArg::Pretty => output::Format::Pretty,
        }
    }
}
