use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use vtangle::algebra::{LaurentPoly, RibbonDatum, RingMatrix};
use vtangle::evaluator::EvalContext;
use vtangle::oracle::bracket_oracle;
use vtangle::parser::{compile_gauss, compile_gauss_long, parse_gauss, parse_term, render};
use vtangle::rewrite::{equivalent_bounded, simplify, Equivalence};
use vtangle::selftest;
use vtangle::terms::MorphismTerm;

#[derive(Parser)]
#[command(name = "vtangle", version, about = "Framed oriented virtual tangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Input {
    /// Gauss code, e.g. "O1+U2+O3+U1+O2+U3+"
    #[arg(long)]
    gauss: Option<String>,
    /// Term file (DSL; a `.gauss` extension means Gauss code). `-` reads stdin.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Clone, Default)]
struct Output {
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a term or diagram
    Eval {
        #[command(flatten)]
        input: Input,
        /// Divide by the loop value and correct for framing
        #[arg(long)]
        normalize: bool,
        /// Print the full matrix (required for open terms)
        #[arg(long)]
        matrix: bool,
        /// Ribbon datum JSON file (default: bracket datum)
        #[arg(long)]
        datum: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// State-sum value of a closed diagram
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Check a ribbon datum (--datum) or a term
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        datum: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Reduce a term with the simplifying moves
    Simplify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Bounded search for a move sequence between two terms
    Equiv {
        /// Two term files (DSL, or `.gauss`)
        files: Vec<PathBuf>,
        /// Gauss codes, used before the files
        #[arg(long)]
        gauss: Vec<String>,
        /// Maximum number of expanded search nodes
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Compile a Gauss code to the term DSL
    Import {
        #[command(flatten)]
        input: Input,
        /// Cut the first component open into a long term
        #[arg(long)]
        long: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Check every relation variant under a datum
    Relations {
        #[arg(long)]
        datum: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Run the acceptance suite
    Selftest {
        /// Run only this criterion (1-10)
        #[arg(long)]
        criterion: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

/// Bad invocation that clap cannot catch; exits with 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn is_gauss_file(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "gauss")
}

fn term_from_file(path: &Path) -> anyhow::Result<MorphismTerm> {
    let text = read_text(path)?;
    if is_gauss_file(path) {
        Ok(compile_gauss(&parse_gauss(text.trim())?))
    } else {
        Ok(parse_term(&text)?)
    }
}

impl Input {
    fn term(&self) -> anyhow::Result<MorphismTerm> {
        match (&self.gauss, &self.file) {
            (Some(code), None) => Ok(compile_gauss(&parse_gauss(code)?)),
            (None, Some(path)) => term_from_file(path),
            (Some(_), Some(_)) => Err(usage("give either --gauss or --file, not both")),
            (None, None) => Err(usage("no input: give --gauss or --file")),
        }
    }

    fn gauss_text(&self) -> anyhow::Result<String> {
        match (&self.gauss, &self.file) {
            (Some(code), None) => Ok(code.clone()),
            (None, Some(path)) => Ok(read_text(path)?.trim().to_string()),
            (Some(_), Some(_)) => Err(usage("give either --gauss or --file, not both")),
            (None, None) => Err(usage("no input: give --gauss or --file")),
        }
    }
}

fn context(datum: &Option<PathBuf>) -> anyhow::Result<EvalContext> {
    let Some(path) = datum else {
        return Ok(EvalContext::bracket());
    };
    let d = RibbonDatum::from_json(&read_text(path)?)?;
    let report = d.validate();
    if !report.is_ok() {
        bail!("datum {} fails validation:\n{report}", path.display());
    }
    Ok(EvalContext::new(d))
}

fn framing(t: &MorphismTerm) -> LaurentPoly {
    LaurentPoly::int_monomial(-1, -3).monomial_pow(t.writhe() as i32).expect("monomial")
}

fn print(json: bool, value: Value, text: String) {
    let out = if json { serde_json::to_string_pretty(&value).expect("json value") } else { text };
    // a closed pipe (e.g. `| head`) is not an error
    let _ = writeln!(std::io::stdout(), "{out}");
}

fn poly(p: &LaurentPoly) -> Value {
    Value::String(p.to_string())
}

fn matrix_json(m: &RingMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|r| m.row_vec(r).iter().map(|e| e.to_string()).collect()).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

fn eval(input: &Input, normalize: bool, matrix: bool, datum: &Option<PathBuf>, json: bool) -> anyhow::Result<()> {
    let ctx = context(datum)?;
    let t = input.term()?;
    if matrix {
        let m = ctx.eval_term(&t)?;
        let value = json!({
            "kind": "matrix",
            "dom": t.dom().to_text(),
            "cod": t.cod().to_text(),
            "matrix": matrix_json(&m),
        });
        print(json, value, m.to_string().trim_end().to_string());
        return Ok(());
    }
    let raw = ctx.invariant_closed(&t, false)?;
    if normalize {
        let n = ctx.invariant_normalized(&t)?;
        let value = json!({
            "kind": "normalized",
            "writhe": t.writhe(),
            "numerator": poly(&n.numerator),
            "loop_value": poly(&n.loop_value),
            "value": n.value().as_ref().map(poly),
        });
        print(json, value, n.to_string());
    } else {
        let value = json!({ "kind": "unnormalized", "writhe": t.writhe(), "value": poly(&raw) });
        print(json, value, raw.to_string());
    }
    Ok(())
}

fn oracle(input: &Input, normalize: bool, json: bool) -> anyhow::Result<()> {
    let t = input.term()?;
    let raw = bracket_oracle(&t)?;
    if normalize {
        let numerator = raw * framing(&t);
        let delta = LaurentPoly::delta();
        let value = numerator.div_exact(&delta);
        let text = match &value {
            Some(v) => v.to_string(),
            None => format!("({numerator}) / ({delta})"),
        };
        print(
            json,
            json!({ "kind": "normalized", "writhe": t.writhe(), "numerator": poly(&numerator), "loop_value": poly(&delta), "value": value.as_ref().map(poly) }),
            text,
        );
    } else {
        print(json, json!({ "kind": "unnormalized", "writhe": t.writhe(), "value": poly(&raw) }), raw.to_string());
    }
    Ok(())
}

/// Returns whether the checked object is valid.
fn validate(input: &Input, datum: &Option<PathBuf>, json: bool) -> anyhow::Result<bool> {
    if let Some(path) = datum {
        if input.gauss.is_some() || input.file.is_some() {
            return Err(usage("validate takes either --datum or a term, not both"));
        }
        let d = RibbonDatum::from_json(&read_text(path)?)?;
        let report = d.validate();
        let text = if report.is_ok() { "datum OK".to_string() } else { format!("datum INVALID\n{report}") };
        print(json, json!({ "kind": "datum", "ok": report.is_ok(), "failures": report.failures }), text);
        return Ok(report.is_ok());
    }
    let t = match (&input.gauss, &input.file) {
        (Some(code), None) => compile_gauss(&parse_gauss(code)?),
        (None, Some(path)) if !is_gauss_file(path) => {
            // validation should report issues, not refuse the term
            let text = read_text(path)?;
            match parse_term(&text) {
                Ok(t) => t,
                Err(vtangle::Error::Validation(report)) => {
                    print(
                        json,
                        json!({ "kind": "term", "ok": false, "issues": report.to_string() }),
                        format!("term INVALID\n{report}"),
                    );
                    return Ok(false);
                }
                Err(e) => return Err(e.into()),
            }
        }
        _ => input.term()?,
    };
    let report = t.validate();
    let text = if report.is_ok() {
        format!("term OK: {} -> {}, {} slices", t.dom(), t.cod(), t.slices().len())
    } else {
        format!("term INVALID\n{report}")
    };
    let value = json!({
        "kind": "term",
        "ok": report.is_ok(),
        "dom": t.dom().to_text(),
        "cod": t.cod().to_text(),
        "slices": t.slices().len(),
        "crossings": t.real_crossing_count(),
        "writhe": t.writhe(),
    });
    print(json, value, text);
    Ok(report.is_ok())
}

fn equiv(files: &[PathBuf], gauss: &[String], budget: usize, json: bool) -> anyhow::Result<bool> {
    if files.len() + gauss.len() != 2 {
        return Err(usage("equiv needs exactly two inputs (files and/or --gauss codes)"));
    }
    let mut terms = Vec::new();
    for code in gauss {
        terms.push(compile_gauss(&parse_gauss(code)?));
    }
    for path in files {
        terms.push(term_from_file(path)?);
    }
    let result = equivalent_bounded(&terms[0], &terms[1], budget)?;
    match &result {
        Equivalence::Equal(cert) => {
            let n = cert.len();
            let mut text = format!("EQUAL, {n} move{}", if n == 1 { "" } else { "s" });
            for (side, steps) in [("first", &cert.left), ("second", &cert.right)] {
                if !steps.is_empty() {
                    text.push_str(&format!("\n{side} term:"));
                }
                for s in steps {
                    let dir = if s.forward { "" } else { "^-1" };
                    let loc = &s.location;
                    text.push_str(&format!(
                        "\n  {}#{}{dir} at slice {}, cell {}",
                        s.id, s.variant, loc.slice_index, loc.cell_offset
                    ));
                }
            }
            print(json, json!({ "result": "EQUAL", "left": cert.left, "right": cert.right }), text);
        }
        Equivalence::Unknown => {
            print(json, json!({ "result": "UNKNOWN", "budget": budget }), format!("UNKNOWN (budget {budget})"));
        }
    }
    Ok(true)
}

fn import(input: &Input, long: bool, json: bool) -> anyhow::Result<()> {
    let code = parse_gauss(&input.gauss_text()?)?;
    let t = if long {
        compile_gauss_long(&code).context("long form needs a first component with at least one pass")?
    } else {
        compile_gauss(&code)
    };
    let text = render(&t);
    print(json, json!({ "gauss": code.to_string(), "term": text }), text.trim_end().to_string());
    Ok(())
}

fn relations(datum: &Option<PathBuf>, json: bool) -> anyhow::Result<bool> {
    let ctx = context(datum)?;
    let results = selftest::relation_suite(&ctx);
    let ok = results.iter().all(|r| r.ok());
    let text: Vec<String> = results
        .iter()
        .map(|r| format!("{} {} ({}/{})", if r.ok() { "PASS" } else { "FAIL" }, r.id, r.passed, r.variants))
        .collect();
    print(json, json!({ "ok": ok, "moves": results }), text.join("\n"));
    Ok(ok)
}

fn run_selftest(criterion: Option<usize>, json: bool) -> anyhow::Result<bool> {
    let results = match criterion {
        Some(n) => vec![selftest::run(n).ok_or_else(|| usage(format!("no criterion {n}; expected 1-10")))?],
        None => selftest::run_all(),
    };
    let ok = results.iter().all(|r| r.passed);
    let text: Vec<String> = results.iter().map(|r| r.to_string()).collect();
    print(json, json!({ "ok": ok, "criteria": results }), text.join("\n"));
    Ok(ok)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Eval { input, normalize, matrix, datum, output } => {
            eval(&input, normalize, matrix, &datum, output.json).map(|_| true)
        }
        Command::Oracle { input, normalize, output } => oracle(&input, normalize, output.json).map(|_| true),
        Command::Validate { input, datum, output } => validate(&input, &datum, output.json),
        Command::Simplify { input, output } => {
            let t = simplify(&input.term()?);
            let text = render(&t);
            print(output.json, json!({ "term": text, "slices": t.slices().len() }), text.trim_end().to_string());
            Ok(true)
        }
        Command::Equiv { files, gauss, budget, output } => equiv(&files, &gauss, budget, output.json),
        Command::Import { input, long, output } => import(&input, long, output.json).map(|_| true),
        Command::Relations { datum, output } => relations(&datum, output.json),
        Command::Selftest { criterion, output } => run_selftest(criterion, output.json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.is::<Usage>() => {
            eprintln!("usage error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
