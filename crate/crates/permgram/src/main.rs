//! Thin command-line front end: parses arguments, calls the library, prints.
//!
//! Exit codes: 0 on success, 1 when a verification ran and found a mismatch,
//! 2 for usage or input errors.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use permgram::bijection::{phi, phi_inverse, phi_trace, TraceRow};
use permgram::grammar::Grammar;
use permgram::perms::{distribution, Permutation, SetStat, Stat};
use permgram::poly::{LaurentPolynomial, Var};
use permgram::verify::{
    egf_identity, run_suite, Suite, DEFAULT_MAX_N, EXTENDED_MAX_N, STANDARD_MAX_N,
};
use permgram::Error;

/// Grammar-driven enumeration of permutations: formal derivatives, statistic
/// distributions, truncated series identities, and a bijection carrying left
/// succession sets to fixed point sets.
#[derive(Parser)]
#[command(name = "permgram", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply n formal derivative steps of a grammar to a starting word
    Derive(DeriveArgs),
    /// Joint distribution polynomial of statistics over all permutations of one size
    Dist(DistArgs),
    /// Map a permutation through the succession-to-fixed-point bijection
    Map(MapArgs),
    /// Run named verification suites
    Verify(VerifyArgs),
    /// Coefficients of a named truncated series identity, with cross-multiplied checks
    Gf(GfArgs),
}

#[derive(Args)]
struct DeriveArgs {
    /// Built-in grammar name (dumont, dumont-b)
    #[arg(long, default_value = "dumont")]
    grammar: String,
    /// Read grammar rules from a file (lines of `variable -> polynomial`)
    #[arg(long, conflicts_with = "grammar")]
    grammar_file: Option<PathBuf>,
    /// Starting word, e.g. `a` or `a*b`
    #[arg(long)]
    word: String,
    /// Number of derivative steps
    #[arg(long)]
    n: usize,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DistArgs {
    /// Permutation size
    #[arg(long)]
    n: usize,
    /// Statistics and their marking variables, e.g. `jump:x,des:y,suc:z`
    #[arg(long)]
    spec: String,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Args)]
struct MapArgs {
    /// The permutation, as a space-separated word like `1 6 3 2 4 5`
    #[arg(long)]
    perm: String,
    /// Forward sends left successions to fixed points; inverse undoes it
    #[arg(long, value_enum, default_value_t = Direction::Forward)]
    direction: Direction,
    /// Show every insertion step with its labeled word and tree (forward only)
    #[arg(long)]
    trace: bool,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which checks to run: all, grammar, series, identities, or bijection
    #[arg(long, default_value = "all")]
    suite: String,
    /// Size ceiling for exhaustive sweeps
    #[arg(long = "max-n", default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    /// Allow a size ceiling of 9 (sweeps all 362880 permutations; slow)
    #[arg(long)]
    big: bool,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GfArgs {
    /// Identity name: gat, fsg-2, fxz, gpstar, gpn, genab, or eulerian
    #[arg(long)]
    id: String,
    /// Truncation order (coefficients 0..=order)
    #[arg(long)]
    order: usize,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Die quietly on a closed pipe (`permgram verify | head`) instead of
/// panicking mid-print.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Derive(args) => cmd_derive(args),
        Command::Dist(args) => cmd_dist(args),
        Command::Map(args) => cmd_map(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gf(args) => cmd_gf(args),
    }
}

fn cmd_derive(args: DeriveArgs) -> Result<ExitCode, Error> {
    let (grammar, grammar_name) = match &args.grammar_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            (Grammar::parse(&text)?, path.display().to_string())
        }
        None => (Grammar::by_name(&args.grammar)?, args.grammar.clone()),
    };
    let word = LaurentPolynomial::parse(&args.word)?;
    let result = grammar.derive_n(&word, args.n);
    if args.json {
        println!(
            "{}",
            pretty(&serde_json::json!({
                "grammar": grammar_name,
                "word": args.word,
                "n": args.n,
                "display": result.to_string(),
                "result": result.to_json(),
            }))
        );
    } else {
        println!("{result}");
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_spec(spec: &str) -> Result<Vec<(Stat, Var)>, Error> {
    let mut pairs = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        let Some((stat, var)) = part.split_once(':') else {
            return Err(Error::Parse(format!(
                "`{part}` is not of the form statistic:variable"
            )));
        };
        let stat = Stat::from_name(stat.trim())?;
        let var = Var::from_name(var.trim())
            .ok_or_else(|| Error::Parse(format!("`{}` is not a variable", var.trim())))?;
        pairs.push((stat, var));
    }
    Ok(pairs)
}

fn cmd_dist(args: DistArgs) -> Result<ExitCode, Error> {
    let spec = parse_spec(&args.spec)?;
    let poly = distribution(args.n, &spec)?;
    if args.json {
        println!(
            "{}",
            pretty(&serde_json::json!({
                "n": args.n,
                "spec": args.spec,
                "display": poly.to_string(),
                "distribution": poly.to_json(),
            }))
        );
    } else {
        println!("{poly}");
    }
    Ok(ExitCode::SUCCESS)
}

fn fmt_set(set: &BTreeSet<usize>) -> String {
    let inner = set
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{inner}}}")
}

fn set_json(set: &BTreeSet<usize>) -> serde_json::Value {
    serde_json::json!(set.iter().copied().collect::<Vec<usize>>())
}

fn trace_json(rows: &[TraceRow]) -> serde_json::Value {
    serde_json::json!(rows
        .iter()
        .map(|r| {
            serde_json::json!({
                "size": r.size,
                "slot": r.inserted.map(|(slot, _)| slot),
                "slot_label": r.inserted.map(|(_, label)| label.name()),
                "word": r.word,
                "tree": r.tree,
            })
        })
        .collect::<Vec<_>>())
}

fn cmd_map(args: MapArgs) -> Result<ExitCode, Error> {
    if args.trace && args.direction == Direction::Inverse {
        return Err(Error::Parse(
            "--trace is only available for the forward direction".to_string(),
        ));
    }
    let input = Permutation::parse(&args.perm)?;
    if input.n() == 0 {
        return Err(Error::MalformedPermutation("the word is empty".to_string()));
    }
    let (output, rows) = match args.direction {
        Direction::Forward => {
            if args.trace {
                let (image, rows) = phi_trace(&input);
                (image, rows)
            } else {
                (phi(&input), Vec::new())
            }
        }
        Direction::Inverse => (phi_inverse(&input), Vec::new()),
    };
    let (word, image) = match args.direction {
        Direction::Forward => (&input, &output),
        Direction::Inverse => (&output, &input),
    };
    let stats = serde_json::json!({
        "jump": word.stat(Stat::Jump),
        "des": word.stat(Stat::Des),
        "exc": image.stat(Stat::Exc),
        "drop": image.stat(Stat::Drop),
    });
    let sets = serde_json::json!({
        "left_succession_values": set_json(&word.set_stat(SetStat::LsucValues)),
        "fixed_points": set_json(&image.set_stat(SetStat::Fixed)),
        "jump_values": set_json(&word.set_stat(SetStat::JumpValues)),
        "excedance_values": set_json(&image.set_stat(SetStat::ExcValues)),
    });
    if args.json {
        let mut object = serde_json::json!({
            "direction": match args.direction {
                Direction::Forward => "forward",
                Direction::Inverse => "inverse",
            },
            "input": input.to_string(),
            "output": output.to_string(),
            "statistics": stats,
            "sets": sets,
        });
        let extras = object.as_object_mut().expect("object literal");
        match args.direction {
            Direction::Forward => {
                extras.insert(
                    "output_cycles".into(),
                    output.to_cycles().to_string().into(),
                );
            }
            Direction::Inverse => {
                extras.insert("input_cycles".into(), input.to_cycles().to_string().into());
            }
        }
        if args.trace {
            extras.insert("trace".into(), trace_json(&rows));
        }
        println!("{}", pretty(&object));
        return Ok(ExitCode::SUCCESS);
    }
    for row in &rows {
        println!("{row}");
    }
    match args.direction {
        Direction::Forward => {
            println!("{input} -> {output} = {}", output.to_cycles());
        }
        Direction::Inverse => {
            println!("{input} = {} -> {output}", input.to_cycles());
        }
    }
    let jump = word.stat(Stat::Jump);
    let des = word.stat(Stat::Des);
    let exc = image.stat(Stat::Exc);
    let drop = image.stat(Stat::Drop);
    let lsuc_values = fmt_set(&word.set_stat(SetStat::LsucValues));
    let fixed = fmt_set(&image.set_stat(SetStat::Fixed));
    let jump_values = fmt_set(&word.set_stat(SetStat::JumpValues));
    let exc_values = fmt_set(&image.set_stat(SetStat::ExcValues));
    match args.direction {
        Direction::Forward => {
            println!("(jump, des) = ({jump}, {des}) -> (exc, drop) = ({exc}, {drop})");
            println!("left succession values {lsuc_values} -> fixed points {fixed}");
            println!("jump values {jump_values} -> excedance values {exc_values}");
        }
        Direction::Inverse => {
            println!("(exc, drop) = ({exc}, {drop}) -> (jump, des) = ({jump}, {des})");
            println!("fixed points {fixed} -> left succession values {lsuc_values}");
            println!("excedance values {exc_values} -> jump values {jump_values}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn worker_count() -> Result<usize, Error> {
    match std::env::var("PERMGRAM_WORKERS") {
        Err(_) => Ok(1),
        Ok(raw) => match raw.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(Error::Parse(format!(
                "PERMGRAM_WORKERS must be a positive integer, not `{raw}`"
            ))),
        },
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let suite = Suite::from_name(&args.suite)?;
    if args.max_n > EXTENDED_MAX_N {
        return Err(Error::SizeTooLarge {
            n: args.max_n,
            limit: EXTENDED_MAX_N,
        });
    }
    if args.max_n > STANDARD_MAX_N && !args.big {
        return Err(Error::Parse(format!(
            "--max-n {} sweeps all {} permutations of size {}; pass --big to allow it",
            args.max_n,
            (1..=args.max_n).product::<usize>(),
            args.max_n
        )));
    }
    let report = run_suite(suite, args.max_n, worker_count()?);
    if args.json {
        println!("{}", pretty(&report.to_json()));
    } else {
        print!("{}", report.render_text());
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_gf(args: GfArgs) -> Result<ExitCode, Error> {
    const ORDER_LIMIT: usize = 10;
    if args.order > ORDER_LIMIT {
        return Err(Error::SizeTooLarge {
            n: args.order,
            limit: ORDER_LIMIT,
        });
    }
    let report = egf_identity(&args.id, args.order)?;
    if args.json {
        println!("{}", pretty(&report.to_json()));
    } else {
        print!("{}", report.render_text());
    }
    Ok(if report.all_match() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize")
}
