//! The `ordcalc` command line, callable in-process through [`run`].
//!
//! Exit codes: 0 on success (or when every selected law behaves as
//! expected), 1 when a law check misbehaves, 2 on usage, parse and domain
//! errors.

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cnf::Ordinal;
use crate::expr::{evaluate, print_json, print_latex, print_text, ExprError};
use crate::harness::{catalog, check_law, find_law, GenParams, LawReport, Polarity, GRID_COLUMNS, GRID_ROWS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LAW_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Trials per cell in `table`.
pub const TABLE_TRIALS: u64 = 50;

#[derive(Parser, Debug)]
#[command(name = "ordcalc", version, about = "Exact arithmetic on ordinals below ε₀")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate one expression.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print `<`, `=` or `>` comparing two expressions.
    Compare { e1: String, e2: String },
    /// Run seeded checks from the law catalog.
    Laws {
        /// Law id, or `all`.
        #[arg(long, default_value = "all")]
        law: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 2)]
        max_depth: u32,
        #[arg(long, default_value_t = 3)]
        max_terms: u32,
        #[arg(long, default_value_t = 5)]
        max_coeff: u64,
        /// Print only the JSON report.
        #[arg(long)]
        json: bool,
        /// List law ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Read expressions line by line.
    Repl,
    /// Print the (ω+2)² triple and the verified law grid.
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

pub fn format_ordinal(a: &Ordinal, format: Format) -> String {
    match format {
        Format::Text => print_text(a),
        Format::Latex => print_latex(a),
        Format::Json => print_json(a),
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, S>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let res = match cli.cmd {
        Cmd::Eval { expr, format } => cmd_eval(&expr, format, out, err),
        Cmd::Compare { e1, e2 } => cmd_compare(&e1, &e2, out, err),
        Cmd::Laws {
            law,
            seed,
            trials,
            max_depth,
            max_terms,
            max_coeff,
            json,
            list,
        } => {
            if list {
                list_laws(out)
            } else {
                let params = GenParams {
                    max_depth,
                    max_terms,
                    max_coeff,
                    seed,
                };
                cmd_laws(&law, &params, trials, json, out, err)
            }
        }
        Cmd::Repl => cmd_repl(stdin, out, err),
        Cmd::Table => cmd_table(out),
    };
    // a closed pipe is not worth a panic
    res.unwrap_or(EXIT_OK)
}

type Io = std::io::Result<i32>;

fn report_expr_error(src: &str, e: &ExprError, err: &mut dyn Write) -> std::io::Result<()> {
    writeln!(err, "{}", e.render(src))
}

fn cmd_eval(src: &str, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> Io {
    match evaluate(src) {
        Ok(v) => {
            writeln!(out, "{}", format_ordinal(&v, format))?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            report_expr_error(src, &e, err)?;
            Ok(EXIT_USAGE)
        }
    }
}

fn cmd_compare(e1: &str, e2: &str, out: &mut dyn Write, err: &mut dyn Write) -> Io {
    let mut vals = Vec::new();
    for src in [e1, e2] {
        match evaluate(src) {
            Ok(v) => vals.push(v),
            Err(e) => {
                report_expr_error(src, &e, err)?;
                return Ok(EXIT_USAGE);
            }
        }
    }
    let sym = match vals[0].cmp(&vals[1]) {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    };
    writeln!(out, "{sym}")?;
    Ok(EXIT_OK)
}

fn list_laws(out: &mut dyn Write) -> Io {
    for law in catalog() {
        let pol = match law.polarity {
            Polarity::Holds => "holds",
            Polarity::Fails => "fails",
        };
        writeln!(out, "{:<20} {pol:<6} {}", law.id, law.statement)?;
    }
    Ok(EXIT_OK)
}

const GREEK: [&str; 8] = ["α", "β", "γ", "δ", "ε", "ζ", "η", "θ"];

/// `α=2 β=1 γ=ω`
pub fn name_inputs(inputs: &[Ordinal]) -> String {
    inputs
        .iter()
        .enumerate()
        .map(|(i, v)| match GREEK.get(i) {
            Some(g) => format!("{g}={v}"),
            None => format!("x{i}={v}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn summarize(r: &LawReport) -> String {
    let status = if r.passed { "PASS" } else { "FAIL" };
    let mut line = format!("{status} {} [{}]", r.law_id, r.statement);
    match (r.expected_polarity, r.failures.first()) {
        (Polarity::Holds, None) => line += &format!(": held on {} trials", r.trials),
        (Polarity::Holds, Some(f)) => {
            line += &format!(
                ": {} of {} trials failed; first at trial {}: {} (lhs={} rhs={})",
                r.failures.len(),
                r.trials,
                f.trial,
                name_inputs(&f.inputs),
                f.lhs,
                f.rhs
            )
        }
        (Polarity::Fails, Some(f)) => {
            line += &format!(
                ": counterexample: {} (lhs={} rhs={})",
                name_inputs(&f.inputs),
                f.lhs,
                f.rhs
            )
        }
        (Polarity::Fails, None) => line += &format!(": no counterexample in {} trials", r.trials),
    }
    line
}

#[derive(Serialize)]
struct LawsJson<'a> {
    seed: u64,
    trials: u64,
    params: GenParams,
    passed: bool,
    reports: &'a [LawReport],
}

fn cmd_laws(
    law: &str,
    params: &GenParams,
    trials: u64,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Io {
    let ids: Vec<&str> = if law == "all" {
        catalog().iter().map(|l| l.id).collect()
    } else {
        match find_law(law) {
            Ok(l) => vec![l.id],
            Err(e) => {
                writeln!(err, "error: {e} (try `laws --list`)")?;
                return Ok(EXIT_USAGE);
            }
        }
    };
    let mut reports = Vec::with_capacity(ids.len());
    for id in ids {
        match check_law(id, params, trials) {
            Ok(r) => reports.push(r),
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(EXIT_USAGE);
            }
        }
    }
    let passed = reports.iter().all(|r| r.passed);
    if json {
        let doc = LawsJson {
            seed: params.seed,
            trials,
            params: *params,
            passed,
            reports: &reports,
        };
        writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable"))?;
    } else {
        for r in &reports {
            writeln!(out, "{}", summarize(r))?;
        }
        let ok = reports.iter().filter(|r| r.passed).count();
        writeln!(out, "{ok}/{} laws behaved as expected", reports.len())?;
    }
    Ok(if passed { EXIT_OK } else { EXIT_LAW_FAILURE })
}

fn cmd_repl(stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Io {
    let mut format = Format::Text;
    let mut line = String::new();
    loop {
        line.clear();
        if stdin.read_line(&mut line)? == 0 {
            return Ok(EXIT_OK);
        }
        let src = line.trim();
        match src {
            "" => continue,
            ":q" | ":quit" => return Ok(EXIT_OK),
            ":text" => format = Format::Text,
            ":latex" => format = Format::Latex,
            ":json" => format = Format::Json,
            _ if src.starts_with(':') => writeln!(err, "unknown command {src}; try :text :latex :json :q")?,
            _ => match evaluate(src) {
                Ok(v) => writeln!(out, "{}", format_ordinal(&v, format))?,
                Err(e) => report_expr_error(src, &e, err)?,
            },
        }
        out.flush()?;
    }
}

fn cmd_table(out: &mut dyn Write) -> Io {
    let rows = [("^", "(w+2) ^ 2"), ("j^", "(w+2) j^ 2"), ("#^", "(w+2) #^ 2")];
    writeln!(out, "(ω+2) squared:")?;
    for (op, src) in rows {
        let v = evaluate(src).expect("fixed expression");
        writeln!(out, "  {op:<3} {}", print_text(&v))?;
    }
    writeln!(out)?;
    writeln!(out, "law grid ({TABLE_TRIALS} trials per cell):")?;
    let params = GenParams::default();
    let mut all_ok = true;
    let header: Vec<String> = GRID_COLUMNS.iter().map(|c| format!("{c:<28}")).collect();
    writeln!(out, "  {:<40} {}", "", header.join(" ").trim_end())?;
    for (row, label) in GRID_ROWS.iter().enumerate() {
        let mut cells = Vec::new();
        for col in 0..GRID_COLUMNS.len() {
            let law = catalog().iter().find(|l| l.grid == Some((row, col)));
            let cell = match law {
                None => "n/a".to_string(),
                Some(law) => {
                    let r = check_law(law.id, &params, TABLE_TRIALS).expect("catalog law");
                    all_ok &= r.passed;
                    format!("{} {}", if r.passed { "ok  " } else { "FAIL" }, law.id)
                }
            };
            cells.push(format!("{cell:<28}"));
        }
        writeln!(out, "  {label:<40} {}", cells.join(" ").trim_end())?;
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_LAW_FAILURE })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("ordcalc").chain(args.iter().copied());
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_formats() {
        assert_eq!(call(&["eval", "(w+2) #* (w+2)"], ""), (0, "w^2 + w*4 + 4\n".into(), "".into()));
        let (code, out, _) = call(&["eval", "w^w*2", "--format", "latex"], "");
        assert_eq!((code, out.as_str()), (0, "\\omega^{\\omega} \\cdot 2\n"));
        let (code, out, _) = call(&["eval", "3", "--format", "json"], "");
        assert_eq!((code, out.as_str()), (0, "{\"terms\":[{\"exp\":{\"terms\":[]},\"coeff\":\"3\"}]}\n"));
    }

    #[test]
    fn eval_errors() {
        let (code, out, err) = call(&["eval", "w^"], "");
        assert_eq!((code, out.as_str()), (2, ""));
        assert!(err.contains("byte 2"), "{err}");
        let (code, _, err) = call(&["eval", "wdiv(w+1)"], "");
        assert_eq!(code, 2);
        assert!(err.contains("not divisible"));
        assert_eq!(call(&["bogus"], "").0, 2);
        assert_eq!(call(&[], "").0, 2);
    }

    #[test]
    fn compare() {
        assert_eq!(call(&["compare", "1 + w", "1 #+ w"], "").1, "<\n");
        assert_eq!(call(&["compare", "w j* 2", "w #* 2"], "").1, "=\n");
        assert_eq!(call(&["compare", "w^w", "w^3"], "").1, ">\n");
        assert_eq!(call(&["compare", "(", "1"], "").0, 2);
    }

    #[test]
    fn repl_session() {
        let (code, out, err) = call(&["repl"], "w j* 2\n(\n:latex\nw*3\n:json\n0\n:q\nw\n");
        assert_eq!(code, 0);
        assert_eq!(out, "w*2\n\\omega \\cdot 3\n{\"terms\":[]}\n");
        assert!(err.contains("error"));
    }

    #[test]
    fn laws_exit_codes() {
        let (code, out, _) = call(&["laws", "--law", "naive-sj-add", "--trials", "5"], "");
        assert_eq!(code, 0);
        assert!(out.contains("counterexample: α=2 β=1 γ=ω"), "{out}");
        assert_eq!(call(&["laws", "--law", "no-such"], "").0, 2);
        assert_eq!(call(&["laws", "--law", "jacthm", "--max-terms", "0"], "").0, 2);
    }
}
