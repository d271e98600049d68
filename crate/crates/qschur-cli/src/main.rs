//! `qschur`: JSON front end for the qschur library.
//!
//! Every subcommand prints one JSON value (or writes it to `--out`). Exit
//! codes: 0 success, 1 a requested check failed, 2 malformed input,
//! 3 a hypothesis of a closed formula does not hold.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use qschur::combin::{enumerate_star, SuperMatrix};
use qschur::error::Error;
use qschur::hecke::{lemmas, HCElement};
use qschur::longform::order::triangularity_check;
use qschur::longform::pbw::{pbw_word, rank_check};
use qschur::longform::relations::verify_qq;
use qschur::longform::{eval_long, gen_mul, unit, LongElement, Mode, Symbol};
use qschur::report::Report;
use qschur::schur::closed::{left_factor, phi_mul_closed, Kind};
use qschur::schur::{dimension, Schur, SchurElement};
use qschur::sdp::{sdp_at_super, sdp_family, sdp_hypothesis, sdp_row_super, Family};

#[derive(Parser)]
#[command(name = "qschur", version, about = "Exact computations for the queer q-Schur superalgebra")]
struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply two Hecke–Clifford elements, or run the relation suite
    /// (relations plus 200 random associativity triples) when no operands
    /// are given.
    HcMul {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Product of two q-Schur elements (basis matrices or elements).
    SchurMul {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Use the closed formula of this kind (diag, upper_even, …).
        #[arg(long)]
        closed: Option<String>,
        /// Row index for `--closed`.
        #[arg(long)]
        h: Option<usize>,
        /// Work on the twisted basis `Φ`.
        #[arg(long)]
        twisted: bool,
    },
    /// SDP condition at `(h,k)`, on a row, or over a family `(A⁰+λ|A¹)`.
    Sdp {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        row: Option<usize>,
        #[arg(long)]
        h: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// `diag` or `plus`.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// `A(A, j, r)` on the twisted basis.
    LongEval {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        j: String,
        #[arg(long)]
        r: usize,
    },
    /// Left-multiply a long element by a generator (`G1`, `G1^-1`, `Gbar1`,
    /// `X1`, `Xbar1`, `Y1`, `Ybar1`).
    GenMul {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Closed formulas instead of evaluation.
        #[arg(long)]
        closed: bool,
    },
    /// Check every quantum-group relation at level `r`.
    VerifyQq {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Triangularity of the monomial `m^A`.
    Triangular {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        matrix: String,
    },
    /// Rank of the PBW images for `|A| ≤ max-weight`, `j ∈ {0, ε₁}`.
    PbwRank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        max_weight: usize,
    },
    /// Number of basis matrices and the rank of their images.
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

/// Failure carrying its exit code.
struct Exit(u8, anyhow::Error);

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Self {
        let code = match e.downcast_ref::<Error>() {
            Some(Error::Hypothesis(_)) => 3,
            Some(Error::Malformed(_) | Error::SizeMismatch(_) | Error::IndexOutOfRange(_)) => 2,
            _ if e.downcast_ref::<serde_json::Error>().is_some() => 2,
            _ => 1,
        };
        Exit(code, e)
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn read_json(arg: &str) -> anyhow::Result<Value> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        None => arg.to_string(),
    };
    Ok(serde_json::from_str(&text)?)
}

fn parse<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> anyhow::Result<T> {
    let v = read_json(arg).with_context(|| format!("--{what}"))?;
    serde_json::from_value(v).with_context(|| format!("--{what}"))
}

fn check_n(expected: Option<usize>, actual: usize) -> Result<(), Exit> {
    match expected {
        Some(n) if n != actual => Err(Error::SizeMismatch(format!("--n {n} but the input has n = {actual}")).into()),
        _ => Ok(()),
    }
}

/// A basis matrix or a full element.
fn schur_operand(arg: &str, what: &str, basis: qschur::schur::Basis) -> anyhow::Result<SchurElement> {
    let v = read_json(arg).with_context(|| format!("--{what}"))?;
    if let Ok(m) = serde_json::from_value::<SuperMatrix>(v.clone()) {
        return Ok(SchurElement::basis_element(m, basis));
    }
    serde_json::from_value(v).with_context(|| format!("--{what}"))
}

fn reports(reps: Vec<Report>) -> (Value, bool) {
    let ok = reps.iter().all(Report::passed);
    (serde_json::to_value(&reps).expect("reports serialize"), ok)
}

fn run(cmd: Cmd) -> Result<(Value, bool), Exit> {
    Ok(match cmd {
        Cmd::HcMul { r, left, right, seed } => match (left, right) {
            (Some(l), Some(rt)) => {
                let x: HCElement = parse(&l, "left")?;
                let y: HCElement = parse(&rt, "right")?;
                if x.r() != r || y.r() != r {
                    return Err(Error::SizeMismatch(format!("operands are not in rank {r}")).into());
                }
                (serde_json::to_value(x.mul(&y)?).expect("serializes"), true)
            }
            (None, None) => reports(vec![lemmas::relations(r), lemmas::associativity(r, 200, seed)]),
            _ => return Err(Error::Malformed("give both --left and --right, or neither".into()).into()),
        },
        Cmd::SchurMul { n, r, left, right, closed, h, twisted } => {
            let basis = if twisted { qschur::schur::Basis::Twisted } else { qschur::schur::Basis::Plain };
            let p = match closed {
                Some(kind) => {
                    let kind: Kind = kind.parse()?;
                    let h = h.ok_or_else(|| Error::Malformed("--closed needs --h".into()))?;
                    let b: SuperMatrix = parse(&left, "left")?;
                    let a: SuperMatrix = parse(&right, "right")?;
                    let lam = b.co();
                    if left_factor(kind, h, &lam)? != b {
                        return Err(Error::Malformed(format!("{b} is not the {} factor at h = {h}", kind.name())).into());
                    }
                    if twisted {
                        return Err(Error::Malformed("closed formulas are on the plain basis".into()).into());
                    }
                    phi_mul_closed(kind, h, &lam, &a)?
                }
                None => {
                    let x = schur_operand(&left, "left", basis)?;
                    let y = schur_operand(&right, "right", basis)?;
                    check_n(n, x.n())?;
                    if r.is_some_and(|r| r != x.r()) {
                        return Err(Error::SizeMismatch(format!("--r does not match the operands (r = {})", x.r())).into());
                    }
                    Schur::shared(x.n(), x.r()).mul(&x, &y)?
                }
            };
            check_n(n, p.n())?;
            (serde_json::to_value(p).expect("serializes"), true)
        }
        Cmd::Sdp { matrix, row, h, k, family, r } => {
            let a: SuperMatrix = parse(&matrix, "matrix")?;
            let holds = match (row, h, k, family) {
                (Some(row), None, None, None) => sdp_row_super(&a, row)?,
                (None, Some(h), Some(k), None) => sdp_at_super(&a, h, k)?,
                (None, Some(h), None, Some(f)) => {
                    let f: Family = f.parse()?;
                    match r {
                        Some(r) => sdp_family(&a, h, r, f)?,
                        None => sdp_hypothesis(&a, h, f)?,
                    }
                }
                _ => return Err(Error::Malformed("use --row, --h with --k, or --h with --family".into()).into()),
            };
            (json!({ "sdp": holds }), true)
        }
        Cmd::LongEval { matrix, j, r } => {
            let a: SuperMatrix = parse(&matrix, "matrix")?;
            let j: Vec<i64> = parse(&j, "j")?;
            (serde_json::to_value(eval_long(&a, &j, r)?).expect("serializes"), true)
        }
        Cmd::GenMul { left, right, closed } => {
            let s: Symbol = left.parse().map_err(|e: Error| anyhow::Error::from(e).context("--left"))?;
            let x: LongElement = parse(&right, "right")?;
            let mode = if closed { Mode::Closed } else { Mode::Eval };
            (serde_json::to_value(gen_mul(s, &x, mode)?).expect("serializes"), true)
        }
        Cmd::VerifyQq { n, r } => {
            if n < 2 || r < 1 {
                return Err(Error::Precondition("verify-qq needs n ≥ 2 and r ≥ 1".into()).into());
            }
            reports(verify_qq(n, r))
        }
        Cmd::Triangular { n, r, matrix } => {
            let a: SuperMatrix = parse(&matrix, "matrix")?;
            check_n(n, a.n())?;
            if !a.is_star() {
                return Err(Error::Malformed(format!("{a} has a nonzero even diagonal")).into());
            }
            let rep = triangularity_check(&a, r);
            let ok = rep.passed();
            (serde_json::to_value(&rep).expect("serializes"), ok)
        }
        Cmd::PbwRank { n, r, max_weight } => {
            let mut words = Vec::new();
            for s in 0..=max_weight {
                for a in enumerate_star(n, s) {
                    for j in [vec![0; n], unit(n, 1)] {
                        words.push(pbw_word(&a, &j)?);
                    }
                }
            }
            let rank = rank_check(&words, n, r)?;
            (json!({ "instances": words.len(), "rank": rank }), true)
        }
        Cmd::Dims { n, r } => {
            let (count, rank) = dimension(n, r);
            (json!({ "count": count, "rank": rank }), count == rank)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let result = run(cli.cmd).and_then(|(value, ok)| {
        let text = serde_json::to_string(&value).expect("values serialize") + "\n";
        match &out {
            Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
            None => print!("{text}"),
        }
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
