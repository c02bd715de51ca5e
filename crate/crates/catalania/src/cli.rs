use std::fmt::Write as _;
use std::path::PathBuf;

use catalania_core::forest::{encode, generate_forests};
use catalania_core::identities::{alternating_rhs, run_suite, IdentityReport, SuiteConfig};
use catalania_core::involution::{census, encode_colored, scalar_structures};
use catalania_core::riordan::{catalan_gf, modified_riordan_check, riordan_theorem_verdict};
use catalania_core::{catalan_gen, catalan_sequence, Rat, RiordanArray, Series, DEFAULT_MAX_STRUCTS};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::config::{default_config_json, load_config};
use crate::report::reports_to_json;
use crate::series_file::{load_series, SeriesDto};
use crate::{Failure, Output};

#[derive(Parser, Debug)]
#[command(name = "catalania", version, about = "Exact generalized Catalan numbers, forest involutions and Riordan checks")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// C_{β,γ}(0..=n) for rational β, γ.
    Seq {
        #[arg(long, allow_hyphen_values = true)]
        beta: Rat,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        gamma: Rat,
        #[arg(long)]
        n: usize,
    },
    /// Enumerate ordered forests of β-ary trees.
    Trees {
        #[command(subcommand)]
        action: TreesAction,
    },
    /// Run the sign-reversing involution on colored planted forests.
    Involution {
        #[arg(long)]
        beta: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        gamma: usize,
        #[arg(long)]
        alpha: usize,
        /// Also print every matched pair and every exceptional structure.
        #[arg(long)]
        dump_pairs: bool,
    },
    /// Riordan array entries and theorem checks.
    Riordan {
        #[command(subcommand)]
        action: RiordanAction,
    },
    /// Run the identity suite and print a JSON report.
    Verify {
        /// Grid config; the built-in default grid when omitted.
        config: Option<PathBuf>,
        /// Print the built-in default config and exit.
        #[arg(long, conflicts_with = "config")]
        print_default: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum TreesAction {
    /// Number of forests, optionally compared with the closed form.
    Count {
        #[arg(long)]
        beta: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        gamma: usize,
        #[arg(long)]
        check_formula: bool,
    },
    /// Every forest in canonical order, parenthesis encoded.
    List {
        #[arg(long)]
        beta: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        gamma: usize,
    },
}

#[derive(clap::Args, Debug)]
#[group(multiple = true)]
pub struct ArraySpec {
    /// α of the array [(1-x)^α, x(1-x)^(β-1)].
    #[arg(long, requires = "beta", conflicts_with_all = ["g", "f"], allow_hyphen_values = true)]
    alpha: Option<Rat>,
    #[arg(long, requires = "alpha", allow_hyphen_values = true)]
    beta: Option<Rat>,
    /// JSON series file for g.
    #[arg(long, requires = "f")]
    g: Option<PathBuf>,
    /// JSON series file for f.
    #[arg(long, requires = "g")]
    f: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum RiordanAction {
    /// The (n, k) entry [x^n] g f^k.
    Entry {
        #[command(flatten)]
        array: ArraySpec,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Check both Riordan theorem forms for a sequence A and its transform L.
    ///
    /// With --alpha/--beta/--gamma the array is [(1-x)^α, x(1-x)^(β-1)],
    /// A is the C_{β,γ} series and L = (1-x)^(α-γ).
    Check {
        #[command(flatten)]
        array: ArraySpec,
        #[arg(long, requires = "alpha", conflicts_with_all = ["a", "l"], allow_hyphen_values = true)]
        gamma: Option<Rat>,
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// JSON series file for A.
        #[arg(long, requires = "l")]
        a: Option<PathBuf>,
        /// JSON series file for L.
        #[arg(long, requires = "a")]
        l: Option<PathBuf>,
    },
}

/// Reads the enumeration bound from the environment value, if any.
pub fn max_structs(env: Option<&str>) -> Result<u64, Failure> {
    match env {
        None => Ok(DEFAULT_MAX_STRUCTS),
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{}: expected a non-negative integer, got {v:?}", crate::MAX_STRUCTS_ENV))),
    }
}

/// Runs a parsed command. `env_limit` is the raw value of the size-bound variable.
pub fn run(cli: Cli, env_limit: Option<&str>) -> Result<Output, Failure> {
    let limit = max_structs(env_limit)?;
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Seq { beta, gamma, n } => Ok(seq(&beta, &gamma, n, json)),
        Command::Trees { action } => trees(action, limit, json),
        Command::Involution { beta, n, gamma, alpha, dump_pairs } => {
            involution(beta, n, gamma, alpha, dump_pairs, limit, json)
        }
        Command::Riordan { action } => riordan(action, json),
        Command::Verify { config, print_default } => {
            if print_default {
                return Ok(Output::new(default_config_json(), true));
            }
            let mut suite = match config {
                Some(path) => load_config(&path)?,
                None => SuiteConfig::standard(),
            };
            if env_limit.is_some() {
                suite.max_structs = Some(limit);
            }
            let reports = run_suite(&suite)?;
            let ok = reports.iter().all(IdentityReport::passed);
            Ok(Output::new(reports_to_json(&reports), ok))
        }
    }
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    let mut s = String::new();
    for item in items {
        s.push_str(&item);
        s.push('\n');
    }
    s
}

fn json_line(v: &serde_json::Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn seq(beta: &Rat, gamma: &Rat, n: usize, json: bool) -> Output {
    let values: Vec<String> = catalan_sequence(beta, gamma, n).iter().map(Rat::to_string).collect();
    let text = if json { json_line(&json!(values)) } else { values.join(" ") + "\n" };
    Output::new(text, true)
}

fn trees(action: TreesAction, limit: u64, json: bool) -> Result<Output, Failure> {
    let (beta, n, gamma) = match action {
        TreesAction::Count { beta, n, gamma, .. } | TreesAction::List { beta, n, gamma } => (beta, n, gamma),
    };
    if beta == 0 {
        return Err(catalania_core::Error::ZeroArity.into());
    }
    let formula = catalan_gen(n, &Rat::from(beta), &Rat::from(gamma));
    if formula.to_usize().is_none_or(|c| c as u128 > u128::from(limit)) {
        return Err(Failure::Usage(format!(
            "refusing to enumerate {formula} forests (limit {limit}, set {} to raise it)",
            crate::MAX_STRUCTS_ENV
        )));
    }
    let forests = generate_forests(beta, n, gamma)?;
    match action {
        TreesAction::List { .. } => {
            let encoded: Vec<String> = forests.iter().map(encode).collect();
            let text = if json { json_line(&json!(encoded)) } else { lines(encoded) };
            Ok(Output::new(text, true))
        }
        TreesAction::Count { check_formula, .. } => {
            let count = forests.len();
            let ok = !check_formula || Rat::from(count) == formula;
            let text = match (json, check_formula) {
                (true, false) => json_line(&json!({ "count": count })),
                (true, true) => json_line(&json!({ "count": count, "formula": formula.to_string(), "ok": ok })),
                (false, false) => format!("{count}\n"),
                (false, true) if ok => format!("{count} == {formula} OK\n"),
                (false, true) => format!("{count} != {formula} MISMATCH\n"),
            };
            Ok(Output::new(text, ok))
        }
    }
}

fn involution(
    beta: usize,
    n: usize,
    gamma: usize,
    alpha: usize,
    dump_pairs: bool,
    limit: u64,
    json: bool,
) -> Result<Output, Failure> {
    if beta == 0 {
        return Err(catalania_core::Error::ZeroArity.into());
    }
    let structures = scalar_structures(beta, n, gamma, alpha, limit)?;
    let rhs = alternating_rhs(&Rat::from(alpha), &Rat::from(gamma), n);
    let c = match census(&structures, &[beta]) {
        Ok(c) => c,
        Err(failure) => {
            let text = format!("matching failed: {failure:?}\n");
            return Ok(Output::new(text, false));
        }
    };
    let ok = c.signed_sum == rhs && c.exceptional_weight == rhs;
    if json {
        let mut v = json!({ "sum": c.signed_sum.to_string(), "rhs": rhs.to_string(), "ok": ok });
        if dump_pairs {
            let pairs: Vec<[String; 2]> = c.pairs.iter().map(|(a, b)| [encode_colored(a), encode_colored(b)]).collect();
            let exceptional: Vec<String> = c.exceptional.iter().map(encode_colored).collect();
            v["pairs"] = json!(pairs);
            v["exceptional"] = json!(exceptional);
        }
        return Ok(Output::new(json_line(&v), ok));
    }
    let mut text = format!("sum={} rhs={} {}\n", c.signed_sum, rhs, if ok { "OK" } else { "MISMATCH" });
    if dump_pairs {
        for (a, b) in &c.pairs {
            let _ = writeln!(text, "pair {} <-> {}", encode_colored(a), encode_colored(b));
        }
        for e in &c.exceptional {
            let _ = writeln!(text, "exceptional {}", encode_colored(e));
        }
    }
    Ok(Output::new(text, ok))
}

fn build_array(spec: &ArraySpec, order: usize) -> Result<RiordanArray, Failure> {
    match (&spec.alpha, &spec.beta, &spec.g, &spec.f) {
        (Some(alpha), Some(beta), None, None) => Ok(RiordanArray::alternating_family(alpha, beta, order)),
        (None, None, Some(g), Some(f)) => Ok(RiordanArray::new(load_series(g)?, load_series(f)?)?),
        _ => Err(Failure::Usage("give either --alpha and --beta or --g and --f".into())),
    }
}

fn riordan(action: RiordanAction, json: bool) -> Result<Output, Failure> {
    match action {
        RiordanAction::Entry { array, n, k } => {
            let r = build_array(&array, n)?;
            let value = r.entry(n, k)?;
            let text = if json { json_line(&json!(value.to_string())) } else { format!("{value}\n") };
            Ok(Output::new(text, true))
        }
        RiordanAction::Check { array, gamma, order, a, l } => {
            let r = build_array(&array, order)?;
            let (a, l): (Series, Series) = match (&gamma, &a, &l) {
                (Some(gamma), None, None) => {
                    let alpha = array.alpha.as_ref().expect("clap requires alpha with gamma");
                    let beta = array.beta.as_ref().expect("clap requires beta with alpha");
                    (catalan_gf(beta, gamma, order), Series::binpow(&(alpha - gamma), order))
                }
                (None, Some(a), Some(l)) => (load_series(a)?, load_series(l)?),
                _ => return Err(Failure::Usage("give either --gamma or --a and --l".into())),
            };
            let verdict = riordan_theorem_verdict(&r, &a, &l)?;
            let modified = modified_riordan_check(&r, &a, &l)?;
            let ok = verdict.holds() && modified;
            let word = |b: bool| if b { "OK" } else { "FAIL" };
            let text = if json {
                json_line(&json!({
                    "riordan": verdict.holds(),
                    "row_sums": verdict.row_sums,
                    "functional": verdict.functional,
                    "modified_riordan": modified,
                    "g": SeriesDto::from_series(r.g()),
                    "f": SeriesDto::from_series(r.f()),
                    "a": SeriesDto::from_series(&a),
                    "l": SeriesDto::from_series(&l),
                }))
            } else {
                format!("riordan {}, modified-riordan {}\n", word(verdict.holds()), word(modified))
            };
            Ok(Output::new(text, ok))
        }
    }
}
