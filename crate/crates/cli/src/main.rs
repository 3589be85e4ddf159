use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use wreathchar_core::table::{check_degrees, check_methods, check_orthogonality, CheckResult, DEFAULT_CLASS_LIMIT};
use wreathchar_core::{
    build_table, cache, core_quotient, from_core_quotient, largest_part_color, mn_expand_step, modular_report, row_expand_step,
    verify_table, CharKey, CharacterEngine, ColoredPartition, CyclotomicNumber, ExpansionTerm, Method, Partition,
};

/// Irreducible characters of the generalized symmetric group C_k wr S_n.
#[derive(Parser)]
#[command(name = "wreathchar", version)]
struct Cli {
    /// JSON value cache, read before and written after the command
    #[arg(long, global = true, env = "WREATHCHAR_CACHE")]
    cache: Option<PathBuf>,
    /// Lift the limit of 20000 colored partitions per table
    #[arg(long, global = true)]
    force: bool,
    /// Also print values as complex floats
    #[arg(long, global = true)]
    numeric: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one character value
    Eval {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Character label, e.g. [[2],[],[1]]
        #[arg(long)]
        lambda: String,
        /// Class label, e.g. [[],[1],[1,1]]
        #[arg(long)]
        rho: String,
        #[arg(long, default_value = "auto")]
        method: MethodArg,
        /// Print the terms of one expansion step instead of the value
        #[arg(long)]
        expand_step: bool,
    },
    /// Print the full character table
    Table {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a table against orthogonality, degrees and the other methods
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Compare digit sums with characters of S_kn mod k
    Modular {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// k-core, k-quotient and sign of a partition, or the inverse map
    CoreQuotient {
        #[arg(long)]
        k: usize,
        #[arg(long, required_unless_present = "invert")]
        partition: Option<String>,
        #[arg(long, requires_all = ["core", "quotient"])]
        invert: bool,
        #[arg(long, requires = "invert")]
        core: Option<String>,
        #[arg(long, requires = "invert")]
        quotient: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Mn,
    Row,
    Oracle,
    Auto,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Mn => Method::Mn,
            MethodArg::Row => Method::Row,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Auto => Method::Auto,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Orthogonality,
    Degrees,
    Methods,
    All,
}

enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let engine = CharacterEngine::new();
    if let Some(path) = &cli.cache {
        cache::load(&engine, path)?;
    }
    let limit = if cli.force { None } else { Some(DEFAULT_CLASS_LIMIT) };
    let mut out = io::stdout().lock();
    let outcome = match &cli.command {
        Command::Eval { k, n, lambda, rho, method, expand_step } => {
            let key = CharKey::parse(*k, lambda, rho)?;
            if key.size() != *n {
                bail!("lambda and rho are partitions of {}, not {n}", key.size());
            }
            if *expand_step {
                let terms = expansion(&key, (*method).into())?;
                writeln!(out, "coefficient\tlambda\trho")?;
                for t in terms {
                    write!(out, "{}\t{}\t{}", t.coefficient.to_poly_string(), t.lam, t.rho)?;
                    if cli.numeric {
                        write!(out, "\t{}", complex(&t.coefficient))?;
                    }
                    writeln!(out)?;
                }
            } else {
                let v = engine.chi(&key, (*method).into())?;
                write!(out, "{}", v.to_poly_string())?;
                if cli.numeric {
                    write!(out, "\t{}", complex(&v))?;
                }
                writeln!(out)?;
            }
            Outcome::Ok
        }
        Command::Table { k, n, format, out: path } => {
            let t = build_table(&engine, *k, *n, Method::Auto, limit)?;
            let text = match format {
                Format::Json => {
                    let mut v = t.to_json();
                    if cli.numeric {
                        v["values_numeric"] = json!(t
                            .values
                            .iter()
                            .map(|row| row
                                .iter()
                                .map(|x| {
                                    let (re, im) = x.to_complex();
                                    [re, im]
                                })
                                .collect::<Vec<_>>())
                            .collect::<Vec<_>>());
                    }
                    serde_json::to_string_pretty(&v)? + "\n"
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    for row in t.to_rows() {
                        w.write_record(&row)?;
                    }
                    String::from_utf8(w.into_inner()?)?
                }
            };
            match path {
                Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
            Outcome::Ok
        }
        Command::Verify { k, n, suite } => {
            let t = build_table(&engine, *k, *n, Method::Auto, limit)?;
            let checks: Vec<CheckResult> = match suite {
                Suite::Orthogonality => vec![check_orthogonality(&t)],
                Suite::Degrees => vec![check_degrees(&t)],
                Suite::Methods => vec![check_methods(&engine, *k, *n, &Method::ALL)?],
                Suite::All => {
                    let mut all = verify_table(&t).checks;
                    all.push(check_methods(&engine, *k, *n, &Method::ALL)?);
                    all
                }
            };
            for c in &checks {
                if c.passed() {
                    writeln!(out, "{}: ok", c.name)?;
                } else {
                    writeln!(out, "{}: {} failures", c.name, c.failures.len())?;
                    for f in &c.failures {
                        writeln!(out, "  {f}")?;
                    }
                }
            }
            if checks.iter().all(CheckResult::passed) {
                Outcome::Ok
            } else {
                Outcome::Failed
            }
        }
        Command::Modular { k, n } => {
            let r = modular_report(&engine, *k, *n, limit)?;
            writeln!(out, "# d, by character and class")?;
            let mut header = vec!["character".to_string()];
            header.extend(r.classes.iter().map(ToString::to_string));
            writeln!(out, "{}", header.join("\t"))?;
            for (lam, row) in r.characters.iter().zip(&r.d) {
                writeln!(out, "{lam}\t{}", join(row))?;
            }
            writeln!(out, "# chi mod {k} of S_{}, and sigma * chi mod {k}", k * n)?;
            let flat: Vec<String> = r.flat_classes.iter().map(ToString::to_string).collect();
            writeln!(
                out,
                "lambda\tsigma\t{}\t{}",
                flat.join("\t"),
                flat.iter().map(|f| format!("sigma*{f}")).collect::<Vec<_>>().join("\t")
            )?;
            for i in 0..r.lambdas.len() {
                writeln!(out, "{}\t{}\t{}\t{}", r.lambdas[i], r.sigmas[i], join(&r.residues[i]), join(&r.signed[i]))?;
            }
            if r.passed() {
                writeln!(out, "modular relation: ok")?;
                Outcome::Ok
            } else {
                writeln!(out, "modular relation: {} failures", r.failures.len())?;
                for f in &r.failures {
                    writeln!(out, "  {f}")?;
                }
                Outcome::Failed
            }
        }
        Command::CoreQuotient { k, partition, invert, core, quotient } => {
            if *k == 0 {
                bail!("k must be positive");
            }
            if *invert {
                let core: Partition = core.as_deref().unwrap_or_default().parse()?;
                let quotient = ColoredPartition::parse_with_k(quotient.as_deref().unwrap_or_default(), *k)?;
                writeln!(out, "{}", from_core_quotient(&core, &quotient, *k)?)?;
            } else {
                let lam: Partition = partition.as_deref().unwrap_or_default().parse()?;
                let cq = core_quotient(&lam, *k);
                writeln!(out, "core\t{}", cq.core)?;
                writeln!(out, "quotient\t{}", cq.quotient)?;
                writeln!(out, "sign\t{}", cq.sign)?;
            }
            Outcome::Ok
        }
    };
    drop(out);
    if let Some(path) = &cli.cache {
        cache::save(&engine, path)?;
    }
    Ok(outcome)
}

/// One expansion step at the default pivot.
fn expansion(key: &CharKey, method: Method) -> Result<Vec<ExpansionTerm>> {
    match method {
        Method::Mn | Method::Auto => match largest_part_color(&key.rho) {
            Some(color) => Ok(mn_expand_step(key, color, 0)?),
            None => bail!("nothing to expand: the class is empty"),
        },
        Method::Row => match largest_part_color(&key.lam) {
            Some(color) => Ok(row_expand_step(key, color)?),
            None => bail!("nothing to expand: the character is empty"),
        },
        Method::Oracle => bail!("the oracle has no expansion step; use --method mn or --method row"),
    }
}

fn complex(v: &CyclotomicNumber) -> String {
    let (re, im) = v.to_complex();
    let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    if im < 0.0 {
        format!("{re:.6}-{:.6}i", -im)
    } else {
        format!("{re:.6}+{im:.6}i")
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join("\t")
}
