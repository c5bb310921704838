use std::fs;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dse_hopf::algebra::{coproduct_by_cuts, coproduct_tree};
use dse_hopf::dse::solve;
use dse_hopf::fdbmulti::{multi_coproduct_rhs, verify_multi_coproduct, y_element, Word};
use dse_hopf::hopfcheck::{bracket_constants, equality_predicate, fdb_bracket, is_hopf, spans_equal};
use dse_hopf::json::{encode_element, encode_tensor, encode_tree, encode_verdict};
use dse_hopf::rational::{self, Rational};
use dse_hopf::selftest::{run_all, summary};
use dse_hopf::series::parse_series;
use dse_hopf::trees::enumerate;
use dse_hopf::{Mode, Tree};

const DEFAULT_MAX_WEIGHT: u32 = 10;

#[derive(Parser)]
#[command(name = "dse-hopf", version, about = "Exact Hopf algebra computations on rooted trees")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Planar,
    Commutative,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Planar => Mode::Planar,
            ModeArg::Commutative => Mode::Commutative,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the rooted trees of a given weight
    Enumerate {
        #[arg(long)]
        weight: u32,
        #[arg(long, value_enum, default_value = "commutative")]
        mode: ModeArg,
        /// Print only the number of trees
        #[arg(long)]
        count: bool,
    },
    /// Coproduct of a tree given in bracket notation, e.g. "[[][[]]]"
    Coproduct {
        #[arg(long)]
        tree: String,
        #[arg(long, value_enum, default_value = "commutative")]
        mode: ModeArg,
        /// Also check against admissible-cut enumeration
        #[arg(long)]
        verify: bool,
    },
    /// Dyson–Schwinger equation X = B⁺(P(X))
    Dse {
        #[command(subcommand)]
        command: DseCommand,
    },
    /// Hopf subalgebra checks
    Hopf {
        #[command(subcommand)]
        command: HopfCommand,
    },
    /// Same as `hopf equal`
    Equal(EqualArgs),
    /// Same as `hopf bracket`
    Bracket(BracketArgs),
    /// Multivariable Faà di Bruno elements
    Fdb {
        #[command(subcommand)]
        command: FdbCommand,
    },
    /// Run the acceptance suite
    Selftest {
        #[arg(long, default_value_t = 5)]
        weight: u32,
    },
}

#[derive(Subcommand)]
enum DseCommand {
    /// Homogeneous components a_1..a_N of the solution
    Solve {
        /// "1,1,1/2" (polynomial) or "family:α=1,β=1/2"
        #[arg(long, allow_hyphen_values = true)]
        series: String,
        #[arg(long, default_value_t = 5)]
        weight: u32,
        #[arg(long, value_enum, default_value = "commutative")]
        mode: ModeArg,
    },
}

#[derive(Subcommand)]
enum HopfCommand {
    /// Decide whether the subalgebra generated by the solution is Hopf
    Check {
        #[arg(long, allow_hyphen_values = true)]
        series: String,
        #[arg(long, default_value_t = 5)]
        weight: u32,
        #[arg(long, value_enum, default_value = "commutative")]
        mode: ModeArg,
    },
    /// Whether two family members generate the same subalgebra
    Equal(EqualArgs),
    /// Lie structure constants λ_{i,j} of the family's subalgebra
    Bracket(BracketArgs),
}

#[derive(Args)]
struct EqualArgs {
    /// First parameter pair "α,β"
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Second parameter pair "α,β"
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    #[arg(long, default_value_t = 5)]
    weight: u32,
}

#[derive(Args)]
struct BracketArgs {
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    /// Largest i + j
    #[arg(long, default_value_t = 6)]
    max: u32,
}

#[derive(Subcommand)]
enum FdbCommand {
    /// The element Y^i_w with D variables
    Multi {
        #[arg(long)]
        d: u8,
        #[arg(long)]
        word: String,
        #[arg(long)]
        i: u8,
        /// Check the coproduct law for this element
        #[arg(long)]
        verify: bool,
    },
    /// Structure constants of the one-variable Faà di Bruno Lie algebra
    Bracket {
        #[arg(long, default_value_t = 8)]
        max: u32,
    },
}

/// A usage error, reported on stderr with exit code 1.
struct Failure(String);

/// Output lines and whether every verification passed.
struct Report {
    lines: Vec<String>,
    passed: bool,
}

impl Report {
    fn ok(lines: Vec<String>) -> Self {
        Report { lines, passed: true }
    }

    fn with_status(lines: Vec<String>, passed: bool) -> Self {
        Report { lines, passed }
    }
}

type Outcome = Result<Report, Failure>;

fn usage(arg: &str, e: impl std::fmt::Display) -> Failure {
    Failure(format!("invalid value for --{arg}: {e}"))
}

fn max_weight() -> Result<u32, Failure> {
    match std::env::var("HOPF_FOREST_MAX_WEIGHT") {
        Ok(v) => v.parse().map_err(|_| Failure(format!("HOPF_FOREST_MAX_WEIGHT={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_WEIGHT),
    }
}

fn check_weight(n: u32, min: u32) -> Result<u32, Failure> {
    let cap = max_weight()?;
    if n < min {
        return Err(usage("weight", format!("must be at least {min}")));
    }
    if n > cap {
        return Err(usage("weight", format!("{n} exceeds HOPF_FOREST_MAX_WEIGHT = {cap}")));
    }
    Ok(n)
}

fn parse_pair(arg: &str, s: &str) -> Result<(Rational, Rational), Failure> {
    let (a, b) = s.split_once(',').ok_or_else(|| usage(arg, format!("expected \"α,β\", got {s:?}")))?;
    let a = rational::parse(a.trim()).map_err(|e| usage(arg, e))?;
    let b = rational::parse(b.trim()).map_err(|e| usage(arg, e))?;
    Ok((a, b))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn enumerate_cmd(json: bool, weight: u32, mode: Mode, count: bool) -> Outcome {
    let trees = enumerate(check_weight(weight, 1)?, mode);
    Ok(Report::ok(match (json, count) {
        (false, true) => vec![trees.len().to_string()],
        (false, false) => trees.iter().map(Tree::to_string).collect(),
        (true, true) => vec![pretty(&json!({ "count": trees.len(), "mode": mode.name(), "weight": weight }))],
        (true, false) => vec![pretty(&Value::Array(trees.iter().map(encode_tree).collect()))],
    }))
}

fn coproduct_cmd(json: bool, tree: &str, mode: Mode, verify: bool) -> Outcome {
    let t = Tree::parse(tree).map_err(|e| usage("tree", e))?;
    check_weight(t.weight(), 1)?;
    let t = t.canonicalize(mode);
    let d = coproduct_tree(&t, mode);
    let agrees = !verify || coproduct_by_cuts(&t, mode) == d;
    let mut out = if json {
        vec![pretty(&json!({ "coproduct": encode_tensor(&d), "tree": encode_tree(&t), "cuts_agree": agrees }))]
    } else {
        vec![d.to_string()]
    };
    if !agrees && !json {
        out.push("recursive coproduct differs from admissible cuts".into());
    }
    Ok(Report::with_status(out, agrees))
}

fn dse_cmd(json: bool, series: &str, weight: u32, mode: Mode) -> Outcome {
    let n = check_weight(weight, 1)?;
    let p = parse_series(series, Some(n as usize)).map_err(|e| usage("series", e))?;
    let sol = solve(&p, n, mode).map_err(|e| usage("series", e))?;
    if json {
        let parts: Vec<Value> = (1..=n).map(|k| json!({ "n": k, "a": encode_element(sol.a(k)) })).collect();
        return Ok(Report::ok(vec![pretty(&json!({ "mode": mode.name(), "series": p.to_string(), "components": parts }))]));
    }
    Ok(Report::ok((1..=n).map(|k| format!("a_{k} = {}", sol.a(k))).collect()))
}

fn hopf_check_cmd(json: bool, series: &str, weight: u32, mode: Mode) -> Outcome {
    let n = check_weight(weight, 1)?;
    let order = n.saturating_sub(1) as usize;
    let p = parse_series(series, Some(order)).map_err(|e| usage("series", e))?;
    let verdict = is_hopf(&p, n, mode).map_err(|e| usage("series", e))?;
    let mut lines = Vec::new();
    if json || !verdict.pass {
        lines.push(pretty(&encode_verdict(&verdict)));
    } else {
        let cand = verdict
            .candidate
            .as_ref()
            .map(|(a, b)| format!(" (α, β) = ({a}, {b})"))
            .unwrap_or_default();
        lines.push(format!("pass: Hopf through weight {n} in {} mode{cand}", mode.name()));
    }
    Ok(Report::with_status(lines, verdict.pass))
}

fn equal_cmd(json: bool, args: &EqualArgs) -> Outcome {
    let n = check_weight(args.weight, 1)?;
    let (a, b) = parse_pair("a", &args.a)?;
    let (a2, b2) = parse_pair("b", &args.b)?;
    let equal = spans_equal(&a, &b, &a2, &b2, n).map_err(|e| usage("a", e))?;
    let predicate = equality_predicate(&a, &b, &a2, &b2);
    let lines = if json {
        vec![pretty(&json!({ "equal": equal, "predicate": predicate, "weight": n }))]
    } else {
        vec![format!("equal through weight {n}: {equal} (predicate: {predicate})")]
    };
    Ok(Report::with_status(lines, equal == predicate))
}

fn bracket_cmd(json: bool, args: &BracketArgs) -> Outcome {
    let n = check_weight(args.max, 2)?;
    let beta = rational::parse(&args.beta).map_err(|e| usage("beta", e))?;
    let lambda = bracket_constants(&beta, n).map_err(|e| usage("beta", e))?;
    if json {
        let entries: Vec<Value> =
            lambda.iter().map(|((i, j), v)| json!({ "i": i, "j": j, "lambda": rational::format(v) })).collect();
        return Ok(Report::ok(vec![pretty(&json!({ "beta": rational::format(&beta), "constants": entries }))]));
    }
    Ok(Report::ok(lambda.iter().map(|((i, j), v)| format!("λ({i},{j}) = {v}")).collect()))
}

fn fdb_multi_cmd(json: bool, d: u8, word: &str, i: u8, verify: bool) -> Outcome {
    if d == 0 {
        return Err(usage("d", "must be at least 1"));
    }
    let w = Word::parse(word, d).map_err(|e| usage("word", e))?;
    check_weight(w.len() as u32, 1)?;
    let y = y_element(i, &w, d).map_err(|e| usage("i", e))?;
    let holds = if verify { Some(verify_multi_coproduct(i, &w, d).map_err(|e| usage("word", e))?) } else { None };
    let mut lines = if json {
        let mut v = json!({ "d": d, "i": i, "word": w.to_string(), "y": encode_element(&y) });
        if let Some(h) = holds {
            v["coproduct_law"] = json!(h);
            if !h {
                let rhs = multi_coproduct_rhs(i, &w, d).map_err(|e| usage("word", e))?;
                v["expected"] = encode_tensor(&rhs);
            }
        }
        vec![pretty(&v)]
    } else {
        vec![format!("Y^{i}_{w} = {y}")]
    };
    if let (Some(h), false) = (holds, json) {
        lines.push(if h { "coproduct law holds" } else { "coproduct law fails" }.into());
    }
    Ok(Report::with_status(lines, holds != Some(false)))
}

fn fdb_bracket_cmd(json: bool, max: u32) -> Outcome {
    let n = check_weight(max, 2)?;
    let mut rows = Vec::new();
    for i in 1..n {
        for j in 1..=n - i {
            rows.push((i, j, fdb_bracket(i, j)));
        }
    }
    if json {
        let v: Vec<Value> = rows.iter().map(|(i, j, b)| json!({ "i": i, "j": j, "bracket": b.to_string() })).collect();
        return Ok(Report::ok(vec![pretty(&Value::Array(v))]));
    }
    Ok(Report::ok(rows.iter().map(|(i, j, b)| format!("[Z_{i}, Z_{j}] = {b} Z_{}", i + j)).collect()))
}

fn selftest_cmd(json: bool, weight: u32) -> Outcome {
    let n = check_weight(weight, 4)?;
    let reports = run_all(n);
    let lines = if json {
        let items: Vec<Value> = reports
            .iter()
            .map(|r| json!({ "id": r.id, "name": r.name, "pass": r.pass, "detail": r.detail }))
            .collect();
        vec![pretty(&json!({ "criteria": items, "weight": n }))]
    } else {
        let passed = summary(&reports).values().filter(|&&p| p).count();
        let mut l: Vec<String> = reports.iter().map(|r| r.line()).collect();
        l.push(format!("{passed}/{} criteria passed", reports.len()));
        l
    };
    Ok(Report::with_status(lines, reports.iter().all(|r| r.pass)))
}

fn write_lines(lines: &[String], path: Option<&str>) -> Result<(), Failure> {
    let text = lines.iter().map(|l| format!("{l}\n")).collect::<String>();
    match path {
        Some(p) => fs::write(p, text).map_err(|e| usage("output", e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Enumerate { weight, mode, count } => enumerate_cmd(json, *weight, (*mode).into(), *count),
        Command::Coproduct { tree, mode, verify } => coproduct_cmd(json, tree, (*mode).into(), *verify),
        Command::Dse { command: DseCommand::Solve { series, weight, mode } } => {
            dse_cmd(json, series, *weight, (*mode).into())
        }
        Command::Hopf { command } => match command {
            HopfCommand::Check { series, weight, mode } => hopf_check_cmd(json, series, *weight, (*mode).into()),
            HopfCommand::Equal(args) => equal_cmd(json, args),
            HopfCommand::Bracket(args) => bracket_cmd(json, args),
        },
        Command::Equal(args) => equal_cmd(json, args),
        Command::Bracket(args) => bracket_cmd(json, args),
        Command::Fdb { command } => match command {
            FdbCommand::Multi { d, word, i, verify } => fdb_multi_cmd(json, *d, word, *i, *verify),
            FdbCommand::Bracket { max } => fdb_bracket_cmd(json, *max),
        },
        Command::Selftest { weight } => selftest_cmd(json, *weight),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = dispatch(&cli).and_then(|report| {
        write_lines(&report.lines, cli.output.as_deref())?;
        Ok(report.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
