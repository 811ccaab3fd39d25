//! The `eaqecc` command-line front-end.
//!
//! Subcommands: `construct`, `analyze`, `distance`, `simulate`, `catalytic`.
//! Codes come from exactly one input mode per invocation: a GF(4) check
//! matrix (`--gf4`), a pair of binary CSS matrices (`--css-x`/`--css-z`), or
//! a Pauli generator list (`--gens`). Reports go to stdout or `--out`. Every
//! bounded search is capped by `--budget`; exceeding it is a refusal, not a
//! hang or a silent truncation.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use crate::catalytic::{self, ParamTuple};
use crate::code::EaqeccCode;
use crate::decoder::{build_syndrome_table, monte_carlo, PauliChannel};
use crate::gf4::Gf4Matrix;
use crate::pauli::{enumeration_cost, BinMatrix, CheckMatrix, SympVector};
use crate::report::{push_code, push_distance, push_sim, Report};
use crate::{Error, Result};

const DEFAULT_BUDGET: u64 = 100_000_000;
const DEFAULT_MAX_WEIGHT: usize = 4;

#[derive(Parser, Debug)]
#[command(
    name = "eaqecc",
    version,
    about = "Entanglement-assisted quantum codes from classical linear codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a code and report parameters, generators, and the augmented
    /// check matrix.
    Construct {
        #[command(flatten)]
        input: InputArgs,
        /// Write the report to a file instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Construct plus a bounded minimum-distance search.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Bounded minimum-distance search only.
    Distance {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Monte Carlo syndrome decoding over an i.i.d. Pauli channel.
    Simulate {
        #[command(flatten)]
        input: InputArgs,
        /// Depolarizing probability, split evenly over X, Y, Z.
        #[arg(long, conflicts_with_all = ["px", "py", "pz"])]
        p: Option<f64>,
        /// Per-qubit X probability (use with --py and --pz).
        #[arg(long, requires = "py", requires = "pz")]
        px: Option<f64>,
        /// Per-qubit Y probability.
        #[arg(long, requires = "px", requires = "pz")]
        py: Option<f64>,
        /// Per-qubit Z probability.
        #[arg(long, requires = "px", requires = "py")]
        pz: Option<f64>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Render a catalytic composition chain as a parameter table.
    ///
    /// START is "n,k,c" or "n,k,c,d"; each STEP is "ea:n,k,c[,d]",
    /// "std:n,k", or "boot:M".
    Catalytic {
        start: String,
        steps: Vec<String>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// GF(4) check matrix file (rows of 0, 1, w, W).
    #[arg(long, value_name = "FILE", conflicts_with_all = ["css_x", "css_z", "gens"])]
    pub gf4: Option<PathBuf>,
    /// Binary parity checks for the X-type generators (CSS).
    #[arg(long, value_name = "FILE", requires = "css_z", conflicts_with = "gens")]
    pub css_x: Option<PathBuf>,
    /// Binary parity checks for the Z-type generators (CSS).
    #[arg(long, value_name = "FILE", requires = "css_x", conflicts_with = "gens")]
    pub css_z: Option<PathBuf>,
    /// Pauli generator list (one IXYZ label per line); rows containing '|'
    /// are read as binary check-matrix rows instead.
    #[arg(long, value_name = "FILE")]
    pub gens: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Largest error weight to enumerate.
    #[arg(long, default_value_t = DEFAULT_MAX_WEIGHT)]
    pub max_weight: usize,
    /// Refuse any enumeration of more candidate errors than this.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

/// Parses "n,k,c" or "n,k,c,d" into a parameter tuple.
pub fn parse_param_tuple(text: &str) -> Result<ParamTuple> {
    let fields: Vec<&str> = text.split(',').collect();
    if fields.len() != 3 && fields.len() != 4 {
        return Err(Error::Domain(format!(
            "expected n,k,c or n,k,c,d — got {text:?}"
        )));
    }
    let mut values = Vec::with_capacity(fields.len());
    for field in &fields {
        values.push(field.trim().parse::<u64>().map_err(|_| {
            Error::Domain(format!(
                "{field:?} in {text:?} is not a nonnegative integer"
            ))
        })?);
    }
    let tuple = ParamTuple::new(values[0], values[1], values[2])?;
    Ok(match values.get(3) {
        Some(&d) => tuple.with_distance(d),
        None => tuple,
    })
}

/// One step of a catalytic composition chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// Combine with another EAQECC: `ea:n,k,c[,d]`.
    Ea(ParamTuple),
    /// Protect the ebits with a standard code: `std:n,k`.
    Std(ParamTuple),
    /// Bootstrap M copies: `boot:M`.
    Boot(u64),
}

/// Parses one chain step.
pub fn parse_step(text: &str) -> Result<Step> {
    let (op, rest) = text.split_once(':').ok_or_else(|| {
        Error::Domain(format!(
            "step {text:?} needs the form ea:n,k,c or std:n,k or boot:M"
        ))
    })?;
    match op {
        "ea" => Ok(Step::Ea(parse_param_tuple(rest)?)),
        "std" => {
            let fields: Vec<&str> = rest.split(',').collect();
            if fields.len() != 2 {
                return Err(Error::Domain(format!("expected std:n,k — got {text:?}")));
            }
            let n = fields[0].trim().parse::<u64>().map_err(|_| {
                Error::Domain(format!(
                    "{:?} in {text:?} is not a nonnegative integer",
                    fields[0]
                ))
            })?;
            let k = fields[1].trim().parse::<u64>().map_err(|_| {
                Error::Domain(format!(
                    "{:?} in {text:?} is not a nonnegative integer",
                    fields[1]
                ))
            })?;
            Ok(Step::Std(ParamTuple::new(n, k, 0)?))
        }
        "boot" => {
            let m = rest.trim().parse::<u64>().map_err(|_| {
                Error::Domain(format!("{rest:?} in {text:?} is not a nonnegative integer"))
            })?;
            Ok(Step::Boot(m))
        }
        _ => Err(Error::Domain(format!(
            "unknown step kind {op:?} (expected ea, std, or boot)"
        ))),
    }
}

fn read_file(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Parses a generator file: Pauli labels by default, binary check-matrix
/// rows when a '|' appears.
fn parse_generator_file(text: &str) -> Result<CheckMatrix> {
    let has_bar = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .any(|l| l.contains('|'));
    if has_bar {
        return CheckMatrix::parse(text);
    }
    let mut rows: Vec<SympVector> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = SympVector::from_pauli_str(line).map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?;
        if let Some(first) = rows.first() {
            if row.n() != first.n() {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!(
                        "generator acts on {} qubits but earlier ones act on {}",
                        row.n(),
                        first.n()
                    ),
                });
            }
        }
        rows.push(row);
    }
    let n = rows.first().map(|r| r.n()).unwrap_or(0);
    CheckMatrix::from_rows(n, rows)
}

/// Loads the code named by the input flags; the returned string describes
/// the input for the report.
fn load_code(input: &InputArgs) -> anyhow::Result<(EaqeccCode, String)> {
    match (&input.gf4, &input.css_x, &input.css_z, &input.gens) {
        (Some(path), None, None, None) => {
            let matrix = Gf4Matrix::parse(&read_file(path)?)
                .with_context(|| format!("parsing GF(4) matrix {}", path.display()))?;
            let code =
                EaqeccCode::from_gf4(&matrix).context("constructing code from the GF(4) matrix")?;
            Ok((code, format!("gf4 {}", path.display())))
        }
        (None, Some(x_path), Some(z_path), None) => {
            let h1 = BinMatrix::parse(&read_file(x_path)?)
                .with_context(|| format!("parsing binary matrix {}", x_path.display()))?;
            let h2_text = read_file(z_path)?;
            let mut h2 = BinMatrix::parse(&h2_text)
                .with_context(|| format!("parsing binary matrix {}", z_path.display()))?;
            if h2.nrows() == 0 {
                h2 = BinMatrix::zero(0, h1.ncols());
            }
            let code = EaqeccCode::from_css(&h1, &h2)
                .context("constructing CSS code from the binary matrices")?;
            Ok((
                code,
                format!("css {} {}", x_path.display(), z_path.display()),
            ))
        }
        (None, None, None, Some(path)) => {
            let matrix = parse_generator_file(&read_file(path)?)
                .with_context(|| format!("parsing generator list {}", path.display()))?;
            let code = EaqeccCode::from_generators(matrix.n(), matrix.rows())
                .context("constructing code from the generator list")?;
            Ok((code, format!("generators {}", path.display())))
        }
        _ => bail!("exactly one input mode is required: --gf4, --css-x/--css-z, or --gens"),
    }
}

/// Refuses bounded searches whose candidate count exceeds the budget.
fn check_budget(stage: &str, n: usize, max_weight: usize, budget: u64) -> anyhow::Result<()> {
    let cost = enumeration_cost(n, max_weight);
    if cost > budget as u128 {
        bail!(
            "{stage}: enumerating weight <= {max_weight} on {n} qubits means {cost} candidates, \
             over the budget of {budget}; lower --max-weight or raise --budget"
        );
    }
    Ok(())
}

fn build_report(cli: &Cli) -> anyhow::Result<(String, Option<PathBuf>)> {
    match &cli.command {
        Command::Construct { input, out } => {
            let (code, description) = load_code(input)?;
            let mut report = Report::new("construct");
            report.push("input", &description);
            push_code(&mut report, &code);
            Ok((report.render(), out.clone()))
        }
        Command::Analyze { input, search, out } => {
            let (code, description) = load_code(input)?;
            check_budget(
                "distance search",
                code.n(),
                search.max_weight,
                search.budget,
            )?;
            let mut report = Report::new("analyze");
            report.push("input", &description);
            push_code(&mut report, &code);
            push_distance(
                &mut report,
                search.max_weight,
                code.distance(search.max_weight),
            );
            Ok((report.render(), out.clone()))
        }
        Command::Distance { input, search, out } => {
            let (code, description) = load_code(input)?;
            check_budget(
                "distance search",
                code.n(),
                search.max_weight,
                search.budget,
            )?;
            let mut report = Report::new("distance");
            report.push("input", &description);
            let params = code.params();
            report.push("n", params.n);
            report.push("k", params.k);
            report.push("c", params.c);
            report.push("s", params.s);
            push_distance(
                &mut report,
                search.max_weight,
                code.distance(search.max_weight),
            );
            Ok((report.render(), out.clone()))
        }
        Command::Simulate {
            input,
            p,
            px,
            py,
            pz,
            trials,
            seed,
            search,
            out,
        } => {
            let (code, description) = load_code(input)?;
            let channel = match (p, px, py, pz) {
                (Some(p), None, None, None) => {
                    PauliChannel::depolarizing(*p).context("building the channel")?
                }
                (None, Some(px), Some(py), Some(pz)) => {
                    PauliChannel::new(*px, *py, *pz).context("building the channel")?
                }
                _ => bail!("provide either --p or all of --px, --py, --pz"),
            };
            check_budget(
                "syndrome table build",
                code.n(),
                search.max_weight,
                search.budget,
            )?;
            let table = build_syndrome_table(&code, search.max_weight);
            let sim = monte_carlo(&code, &channel, *trials, *seed, &table)
                .context("running the Monte Carlo simulation")?;
            let mut report = Report::new("simulate");
            report.push("input", &description);
            push_code(&mut report, &code);
            push_sim(&mut report, &table, &sim);
            Ok((report.render(), out.clone()))
        }
        Command::Catalytic { start, steps, out } => {
            let mut current =
                parse_param_tuple(start).context("parsing the starting parameter tuple")?;
            let mut report = Report::new("catalytic");
            let describe =
                |t: &ParamTuple| format!("{t} rate={}/{} net_rate={}/{}", t.k, t.n, t.net_k(), t.n);
            report.push("step_0", format!("start {}", describe(&current)));
            for (i, step_text) in steps.iter().enumerate() {
                let step =
                    parse_step(step_text).with_context(|| format!("parsing step {}", i + 1))?;
                let (label, next) = match &step {
                    Step::Ea(other) => (
                        format!("combine_ea {other}"),
                        catalytic::combine_ea(&current, other),
                    ),
                    Step::Std(std_code) => (
                        format!("combine_with_standard {std_code}"),
                        catalytic::combine_with_standard(&current, std_code),
                    ),
                    Step::Boot(m) => (
                        format!("bootstrap M={m}"),
                        catalytic::bootstrap(&current, *m),
                    ),
                };
                current = next.with_context(|| format!("applying step {}", i + 1))?;
                report.push(
                    &format!("step_{}", i + 1),
                    format!("{label} -> {}", describe(&current)),
                );
            }
            Ok((report.render(), out.clone()))
        }
    }
}

/// Executes the parsed command line: builds the report and writes it to
/// stdout or the `--out` file.
pub fn run(cli: &Cli) -> anyhow::Result<()> {
    let (report, out) = build_report(cli)?;
    match out {
        Some(path) => fs::write(&path, &report)
            .with_context(|| format!("writing report to {}", path.display()))?,
        None => print!("{report}"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn param_tuple_parsing() {
        let t = parse_param_tuple("4,1,1").unwrap();
        assert_eq!((t.n, t.k, t.c, t.d), (4, 1, 1, None));
        let t = parse_param_tuple("5, 1, 0, 3").unwrap();
        assert_eq!(t.d, Some(3));
        assert!(parse_param_tuple("4,1").is_err());
        assert!(parse_param_tuple("4,1,x").is_err());
        assert!(parse_param_tuple("0,1,0").is_err());
        assert!(parse_param_tuple("4,1,9").is_err());
    }

    #[test]
    fn step_parsing() {
        assert_eq!(
            parse_step("ea:4,1,1").unwrap(),
            Step::Ea(ParamTuple::new(4, 1, 1).unwrap())
        );
        assert_eq!(
            parse_step("std:5,1").unwrap(),
            Step::Std(ParamTuple::new(5, 1, 0).unwrap())
        );
        assert_eq!(parse_step("boot:3").unwrap(), Step::Boot(3));
        assert!(parse_step("boot:").is_err());
        assert!(parse_step("std:5,1,0").is_err());
        assert!(parse_step("foo:1,2,3").is_err());
        assert!(parse_step("4,1,1").is_err());
    }

    #[test]
    fn generator_file_formats() {
        let paulis = "# five-qubit code\nXZZXI\nIXZZX\nXIXZZ\nZXIXZ\n";
        let m = parse_generator_file(paulis).unwrap();
        assert_eq!(m.len(), 4);
        assert_eq!(m.n(), 5);

        let rows = "0 1 0 0 | 1 0 1 0\n0 0 0 0 | 1 1 0 1\n";
        let m = parse_generator_file(rows).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.rows()[0].to_string(), "ZXZI");

        let err = parse_generator_file("XZZXI\nXZ\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn cli_parses_spec_examples() {
        Cli::try_parse_from(["eaqecc", "construct", "--gf4", "h4.g4"]).unwrap();
        Cli::try_parse_from(["eaqecc", "distance", "--gf4", "h4.g4", "--max-weight", "3"]).unwrap();
        Cli::try_parse_from([
            "eaqecc", "simulate", "--gf4", "h4.g4", "--p", "0", "--trials", "100", "--seed", "7",
        ])
        .unwrap();
        Cli::try_parse_from(["eaqecc", "catalytic", "4,1,1", "ea:4,1,1", "boot:3"]).unwrap();

        // Conflicting input modes are rejected at parse time.
        assert!(Cli::try_parse_from(["eaqecc", "construct", "--gf4", "a", "--gens", "b"]).is_err());
        // CSS requires both sides.
        assert!(Cli::try_parse_from(["eaqecc", "construct", "--css-x", "a"]).is_err());
        // Mixing --p with --px is rejected.
        assert!(Cli::try_parse_from([
            "eaqecc", "simulate", "--gf4", "a", "--p", "0.1", "--px", "0.1"
        ])
        .is_err());
    }

    #[test]
    fn budget_refusal() {
        let err = check_budget("distance search", 40, 8, 1_000_000).unwrap_err();
        let message = format!("{err:#}");
        assert!(message.contains("budget"));
        assert!(check_budget("distance search", 4, 3, 1_000).is_ok());
    }
}
