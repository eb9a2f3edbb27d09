//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a check reported failure (`verify-remark`,
//! `selftest`), 2 usage, parse or precondition error, 3 internal consistency
//! failure.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use octoconj::commutant::CommutantReport;
use octoconj::conjugator::{negator_candidates, Check};
use octoconj::json::WitnessRecord;
use octoconj::remark::{verify_remark, RemarkReport};
use octoconj::{
    collapse_quaternion, conjugacy_witness_with, negator, parse_element, selftest, single_conjugator_search,
    verify_witness, Algebra, Element, Error, ExactMatrix, Scalar, Strategy, Verdict,
};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "octoconj", version, about = "Exact arithmetic and conjugacy witnesses in quaternion and octonion algebras")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// One of H, Hs, Hc, O, Os, Oc.
    #[arg(long, short)]
    algebra: Algebra,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the multiplication table of basis units.
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// Product A·B.
    Mul {
        #[command(flatten)]
        common: Common,
        a: String,
        b: String,
    },
    /// Conjugate of A.
    Conj {
        #[command(flatten)]
        common: Common,
        a: String,
    },
    /// Inverse of A.
    Inv {
        #[command(flatten)]
        common: Common,
        a: String,
    },
    /// Norm N(A).
    Norm {
        #[command(flatten)]
        common: Common,
        a: String,
    },
    /// Inner product (A, B).
    Inner {
        #[command(flatten)]
        common: Common,
        a: String,
        b: String,
    },
    /// Invertible pure p with p A p^-1 = -A.
    NegateWitness {
        #[command(flatten)]
        common: Common,
        a: String,
    },
    /// Witness conjugating A to B.
    ConjugateWitness {
        #[command(flatten)]
        common: Common,
        a: String,
        b: String,
        /// Prefer a single conjugator whenever one exists.
        #[arg(long)]
        minimal: bool,
    },
    /// Solve p A = B p and decide whether an invertible solution exists.
    Commutant {
        #[command(flatten)]
        common: Common,
        a: String,
        b: String,
    },
    /// Check both golden counterexamples.
    VerifyRemark {
        #[arg(long)]
        json: bool,
    },
    /// Randomized property suite.
    Selftest {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

enum Output {
    Text(String),
    Json(Value),
}

struct Reply {
    output: Output,
    code: i32,
}

impl Reply {
    fn ok(output: Output) -> Self {
        Self { output, code: EXIT_OK }
    }
}

fn pick(json: bool, value: impl FnOnce() -> Value, text: impl FnOnce() -> String) -> Output {
    if json {
        Output::Json(value())
    } else {
        Output::Text(text())
    }
}

fn parse(text: &str, algebra: Algebra) -> Result<Element, Error> {
    Ok(parse_element(text, algebra)?)
}

fn matrix_json(m: &ExactMatrix) -> Value {
    json!(m.to_rows())
}

fn table_cmd(common: &Common) -> Output {
    let alg = common.algebra;
    let table = alg.table();
    let entry = |i: usize, j: usize| {
        let u = table.get(i, j);
        let label = alg.label(u.index);
        if u.sign < 0 {
            format!("-{label}")
        } else {
            label
        }
    };
    let dim = alg.dim();
    let rows: Vec<Vec<String>> = (0..dim).map(|i| (0..dim).map(|j| entry(i, j)).collect()).collect();
    pick(
        common.json,
        || json!({ "algebra": alg, "labels": (0..dim).map(|k| alg.label(k)).collect::<Vec<_>>(), "table": rows }),
        || {
            let width = 5;
            let mut s = format!("{:>width$} |", "");
            for j in 0..dim {
                s += &format!("{:>width$}", alg.label(j));
            }
            s += &format!("\n{}\n", "-".repeat(width + 2 + width * dim));
            for (i, row) in rows.iter().enumerate() {
                s += &format!("{:>width$} |", alg.label(i));
                for cell in row {
                    s += &format!("{cell:>width$}");
                }
                s.push('\n');
            }
            s
        },
    )
}

fn check_lines(checks: &[Check]) -> String {
    checks.iter().map(|c| format!("  {c}\n")).collect()
}

fn negate_cmd(common: &Common, a: &str) -> Result<Output, Error> {
    let a = parse(a, common.algebra)?;
    let p = negator(&a)?;
    let image = p.sandwich(&a)?;
    let anti = p.mul(&a)?.add(&a.mul(&p)?)?;
    let verified = anti.is_zero() && image == -&a && !p.norm().is_zero();
    Ok(pick(
        common.json,
        || json!({ "a": a, "p": p, "norm_p": p.norm(), "image": image, "verified": verified }),
        || {
            let mut s = format!("a = {a}\n");
            for (k, c) in negator_candidates(&a).iter().enumerate() {
                s += &format!("  candidate {k}: {c}  N = {}\n", c.norm());
                if c == &p {
                    break;
                }
            }
            s += &format!("p = {p}\nN(p) = {}\npa + ap = {anti}\npap^-1 = {image}\nverified: {verified}\n", p.norm());
            s
        },
    ))
}

fn witness_cmd(common: &Common, a: &str, b: &str, minimal: bool) -> Result<Output, Error> {
    let a = parse(a, common.algebra)?;
    let b = parse(b, common.algebra)?;
    let strategy = if minimal { Strategy::Minimal } else { Strategy::Ladder };
    let mut w = conjugacy_witness_with(&a, &b, strategy)?;
    if a.algebra().is_quaternion() {
        w = collapse_quaternion(w)?;
    }
    let report = verify_witness(&a, &b, &w);
    let record = WitnessRecord::new(&w, report.passed());
    Ok(pick(
        common.json,
        || json!(record),
        || {
            let kind = if w.is_single() { "single" } else { "double" };
            let mut s = format!("kind: {kind}\nbranch: {}\np = {}\n", w.branch(), w.p());
            if let Some(q) = w.q() {
                s += &format!("q = {q}\n");
            }
            s += &format!("verified: {}\n{}", report.passed(), check_lines(&report.checks));
            s
        },
    ))
}

fn commutant_json(r: &CommutantReport) -> Value {
    let verdict = match &r.verdict {
        Verdict::SingleExists(p) => json!({ "kind": "SingleExists", "p": p }),
        Verdict::NoSingleConjugator => json!({ "kind": "NoSingleConjugator" }),
    };
    json!({
        "matrix": matrix_json(&r.matrix),
        "nullspace_basis": r.nullspace_basis,
        "norm_gram": matrix_json(&r.norm_gram),
        "verdict": verdict,
    })
}

fn commutant_cmd(common: &Common, a: &str, b: &str) -> Result<Output, Error> {
    let a = parse(a, common.algebra)?;
    let b = parse(b, common.algebra)?;
    let r = single_conjugator_search(&a, &b)?;
    Ok(pick(
        common.json,
        || commutant_json(&r),
        || {
            let mut s = format!("matrix of p -> pa - bp:\n{}", r.matrix);
            s += &format!("null space (dimension {}):\n", r.nullspace_basis.len());
            for v in &r.nullspace_basis {
                s += &format!("  {v}\n");
            }
            s += &format!("norm Gram matrix:\n{}", r.norm_gram);
            match &r.verdict {
                Verdict::SingleExists(p) => s += &format!("verdict: SingleExists({p})\n"),
                Verdict::NoSingleConjugator => s += "verdict: NoSingleConjugator\n",
            }
            s
        },
    ))
}

fn remark_json(r: &RemarkReport) -> Value {
    let verdict = match &r.verdict {
        Some(Verdict::SingleExists(p)) => json!({ "kind": "SingleExists", "p": p }),
        Some(Verdict::NoSingleConjugator) => json!({ "kind": "NoSingleConjugator" }),
        None => Value::Null,
    };
    let checks: Vec<Value> =
        r.outcomes.iter().map(|o| json!({ "check": o.check.id(), "passed": o.passed, "detail": o.detail })).collect();
    json!({
        "instance": r.instance,
        "algebra": r.algebra,
        "nullspace_dim": r.nullspace_dim,
        "verdict": verdict,
        "passed": r.passed(),
        "checks": checks,
    })
}

fn unary(common: &Common, a: &str, f: impl FnOnce(&Element) -> Result<Element, Error>) -> Result<Output, Error> {
    let result = f(&parse(a, common.algebra)?)?;
    Ok(pick(common.json, || json!(result), || format!("{result}\n")))
}

fn scalar_out(json: bool, s: Scalar) -> Output {
    pick(json, || json!(s), || format!("{s}\n"))
}

fn dispatch(command: Command) -> Result<Reply, Error> {
    let output = match command {
        Command::Table { common } => table_cmd(&common),
        Command::Mul { common, a, b } => {
            let b = parse(&b, common.algebra)?;
            unary(&common, &a, |a| a.mul(&b))?
        }
        Command::Conj { common, a } => unary(&common, &a, |a| Ok(a.conjugate()))?,
        Command::Inv { common, a } => unary(&common, &a, Element::inverse)?,
        Command::Norm { common, a } => scalar_out(common.json, parse(&a, common.algebra)?.norm()),
        Command::Inner { common, a, b } => {
            let (a, b) = (parse(&a, common.algebra)?, parse(&b, common.algebra)?);
            scalar_out(common.json, a.inner(&b)?)
        }
        Command::NegateWitness { common, a } => negate_cmd(&common, &a)?,
        Command::ConjugateWitness { common, a, b, minimal } => witness_cmd(&common, &a, &b, minimal)?,
        Command::Commutant { common, a, b } => commutant_cmd(&common, &a, &b)?,
        Command::VerifyRemark { json } => {
            let reports = verify_remark();
            let ok = reports.iter().all(RemarkReport::passed);
            let output = pick(
                json,
                || json!({ "passed": ok, "instances": reports.iter().map(remark_json).collect::<Vec<_>>() }),
                || reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
            );
            return Ok(Reply { output, code: if ok { EXIT_OK } else { EXIT_NEGATIVE } });
        }
        Command::Selftest { samples, seed, json } => {
            let report = selftest::run(samples, seed);
            let ok = report.passed();
            let output = pick(
                json,
                || {
                    let results: Vec<Value> = report
                        .results
                        .iter()
                        .map(|r| {
                            json!({
                                "property": r.property,
                                "algebra": r.algebra,
                                "samples": r.samples,
                                "failures": r.failures,
                                "first_failure": r.first_failure,
                            })
                        })
                        .collect();
                    json!({ "seed": seed, "samples": samples, "passed": ok, "results": results })
                },
                || format!("{report}\n"),
            );
            return Ok(Reply { output, code: if ok { EXIT_OK } else { EXIT_NEGATIVE } });
        }
    };
    Ok(Reply::ok(output))
}

/// Runs one command line, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(Reply { output, code }) => {
            let written = match output {
                Output::Text(s) => out.write_all(s.as_bytes()),
                Output::Json(v) => writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON values serialize")),
            };
            if written.is_err() {
                return EXIT_INTERNAL;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                EXIT_INTERNAL
            } else {
                EXIT_USAGE
            }
        }
    }
}
