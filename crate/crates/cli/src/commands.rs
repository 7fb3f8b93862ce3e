use ganita::karani::{self, SurdExpression};
use ganita::prosody::{validate_arya, validate_hemistich, weigh_iast, Half, Verse, WeightSource};
use ganita::rational::{exact_sqrt, format_rational, parse_integer, parse_rational};
use ganita::report::{MapBuilder, ToTree, Tree};
use ganita::vargaprakrti::{self as vp, IrrationalityCertificate, RationalSolution, Solution};
use ganita::{BigInt, BigRational, Error};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::envelope::Envelope;
use crate::table;

pub const MAX_BOUND: u64 = 1_000_000_000;
pub const MAX_LISTED_BOUND: u64 = 10_000_000;
pub const MAX_STEPS: u64 = 10_000;
pub const MAX_DIGITS: u64 = 10_000;

type Outcome = Result<Envelope, Envelope>;

fn integer(cmd: &'static str, flag: &str, text: &str) -> Result<BigInt, Envelope> {
    parse_integer(text).map_err(|e| Envelope::invalid(cmd, format!("--{flag}: {e}")))
}

fn rational(cmd: &'static str, flag: &str, text: &str) -> Result<BigRational, Envelope> {
    parse_rational(text).map_err(|e| Envelope::invalid(cmd, format!("--{flag}: {e}")))
}

fn solution(cmd: &'static str, flag: &str, text: &str) -> Result<Solution, Envelope> {
    text.parse()
        .map_err(|e| Envelope::invalid(cmd, format!("--{flag}: {e}")))
}

fn surd(cmd: &'static str, flag: &str, text: &str) -> Result<SurdExpression, Envelope> {
    karani::parse_surd(text).map_err(|e| Envelope::invalid(cmd, format!("--{flag}: {e}")))
}

/// A nonnegative count no larger than `cap`; larger values exit with 3.
fn limited(cmd: &'static str, flag: &str, text: &str, cap: u64) -> Result<u64, Envelope> {
    let v = integer(cmd, flag, text)?;
    if v.is_negative() {
        return Err(Envelope::invalid(cmd, format!("--{flag}: must be nonnegative")));
    }
    match v.to_u64() {
        Some(v) if v <= cap => Ok(v),
        _ => Err(Envelope::limit(
            cmd,
            format!("--{flag} {v} exceeds the limit of {cap}"),
        )),
    }
}

fn failed(cmd: &'static str, e: Error) -> Envelope {
    Envelope::invalid(cmd, e.to_string())
}

fn paren(s: String) -> String {
    if s.starts_with('-') || s.contains('/') {
        format!("({s})")
    } else {
        s
    }
}

fn check_line(n: &str, a: String, b: String, value: String) -> String {
    format!("{}^2 - {}*{}^2 = {value}", paren(b), paren(n.to_string()), paren(a))
}

fn solution_tree(n: &BigInt, s: &Solution) -> Tree {
    solution_entries(Tree::map(), n, s).build()
}

fn solution_entries(map: MapBuilder, n: &BigInt, s: &Solution) -> MapBuilder {
    map.entry("solution", s.to_string())
        .entry("a", s.a.to_string())
        .entry("b", s.b.to_string())
        .entry("k", s.k.to_string())
        .entry(
            "check",
            check_line(&n.to_string(), s.a.to_string(), s.b.to_string(), s.residual(n).to_string()),
        )
}

fn rational_tree(n: &BigInt, r: &RationalSolution) -> Tree {
    rational_entries(Tree::map(), n, r).build()
}

fn rational_entries(map: MapBuilder, n: &BigInt, r: &RationalSolution) -> MapBuilder {
    let nq = BigRational::from_integer(n.clone());
    let value = &r.y * &r.y - nq * &r.x * &r.x;
    map.entry("solution", r.to_string())
        .entry("a", format_rational(&r.x))
        .entry("b", format_rational(&r.y))
        .entry("k", format_rational(&r.k))
        .entry("integral", r.is_integral())
        .entry(
            "check",
            check_line(
                &n.to_string(),
                format_rational(&r.x),
                format_rational(&r.y),
                format_rational(&value),
            ),
        )
}

pub struct SolveArgs {
    pub n: String,
    pub k: String,
    pub bound: String,
    pub all: bool,
    pub m: Option<String>,
}

pub fn solve(args: &SolveArgs) -> Outcome {
    const CMD: &str = "solve";
    let n = integer(CMD, "n", &args.n)?;
    let k = integer(CMD, "k", &args.k)?;
    let cap = if args.all { MAX_LISTED_BOUND } else { MAX_BOUND };
    let bound = limited(CMD, "bound", &args.bound, cap)?;
    let head = || {
        Tree::map()
            .entry("n", n.to_string())
            .entry("k", k.to_string())
    };

    if let Some(m) = &args.m {
        let m = rational(CMD, "m", m)?;
        let root = exact_sqrt(&n)
            .filter(|r| r.is_positive())
            .ok_or_else(|| Envelope::invalid(CMD, format!("--m needs a positive square N, got {n}")))?;
        let r = vp::solve_square_multiplier(&root, &k, &m).map_err(|e| failed(CMD, e))?;
        let result = rational_entries(
            head()
                .entry("m", format_rational(&m))
                .entry("root_of_n", root.to_string()),
            &n,
            &r,
        )
        .build();
        return Ok(Envelope::ok(CMD, result));
    }

    if args.all {
        let found = vp::enumerate_solutions(&n, &k, bound);
        let result = head()
            .entry("bound", bound.to_string())
            .entry("count", found.len().to_string())
            .entry("solutions", Tree::list(found.iter().map(|s| solution_tree(&n, s))))
            .build();
        let env = Envelope::ok(CMD, result);
        return Ok(if found.iter().any(Solution::is_trivial) {
            env.note("a = 0 with b = 1 is the trivial solution")
        } else {
            env
        });
    }

    let square_root = exact_sqrt(&n).filter(|r| r.is_positive());
    let found = if k.is_one() {
        vp::fundamental_solution(&n, bound).map_err(|e| failed(CMD, e))?
    } else {
        vp::first_solution(&n, &k, bound)
    };
    let result = |found: Option<&Solution>| {
        let map = head().entry("bound", bound.to_string());
        match found {
            Some(s) => solution_entries(map, &n, s).build(),
            None => map.entry("solution", "absent").build(),
        }
    };
    if let Some(s) = &found {
        return Ok(Envelope::ok(CMD, result(Some(s))));
    }
    let absent = None;
    match square_root {
        Some(r) if k.is_one() => Ok(Envelope::ok(CMD, result(absent)).note(format!(
            "N = {r}^2: (b + {r}a)(b - {r}a) = 1 forces a = 0"
        ))),
        Some(r) if !k.is_zero() => {
            let listed = vp::enumerate_square_multiplier_integral(&r, &k)
                .map_err(|e| failed(CMD, e))?;
            if listed.is_empty() {
                Ok(Envelope::ok(CMD, result(absent))
                    .note(format!("no divisor of {k} yields an integral solution")))
            } else {
                Ok(Envelope::inconclusive(CMD, result(absent))
                    .note(format!("smallest solution lies beyond a = {bound}")))
            }
        }
        _ => Ok(Envelope::inconclusive(CMD, result(absent))
            .note(format!("no solution with 1 <= a <= {bound}"))),
    }
}

pub struct ComposeArgs {
    pub n: String,
    pub s1: String,
    pub s2: String,
    pub unit: bool,
    pub promote: Option<String>,
}

pub fn compose(args: &ComposeArgs) -> Outcome {
    const CMD: &str = "compose";
    let n = integer(CMD, "n", &args.n)?;
    let s1 = solution(CMD, "s1", &args.s1)?;
    let s2 = solution(CMD, "s2", &args.s2)?;
    let steps = args
        .promote
        .as_deref()
        .map(|p| limited(CMD, "promote", p, MAX_STEPS))
        .transpose()?;
    let composed = vp::compose(&n, &s1, &s2).map_err(|e| failed(CMD, e))?;
    let mut result = Tree::map()
        .entry("n", n.to_string())
        .entry("s1", s1.to_string())
        .entry("s2", s2.to_string())
        .entry("composed", solution_tree(&n, &composed));
    let mut current = RationalSolution::from(&composed);
    if args.unit {
        current = vp::unit_scale(&n, &composed).map_err(|e| failed(CMD, e))?;
        result = result.entry("unit_scaled", rational_tree(&n, &current));
    }
    if let Some(steps) = steps {
        let promoted =
            vp::promote_to_integral(&n, &current, steps as u32).map_err(|e| failed(CMD, e))?;
        return Ok(match promoted {
            Some(p) => Envelope::ok(CMD, result.entry("promoted", solution_tree(&n, &p)).build()),
            None => Envelope::inconclusive(CMD, result.entry("promoted", "absent").build())
                .note(format!("no integral power within {steps} compositions")),
        });
    }
    Ok(Envelope::ok(CMD, result.build()))
}

pub struct IrrArgs {
    pub n: String,
    pub refute: Option<String>,
    pub bound: String,
    pub steps: String,
    pub force_growth: bool,
}

pub fn irr(args: &IrrArgs) -> Outcome {
    const CMD: &str = "irr";
    let n = integer(CMD, "n", &args.n)?;
    let bound = limited(CMD, "bound", &args.bound, MAX_BOUND)?;
    let steps = limited(CMD, "steps", &args.steps, MAX_STEPS)?;
    let claim = args
        .refute
        .as_deref()
        .map(|t| rational(CMD, "refute", t))
        .transpose()?;
    if let Some(c) = &claim {
        if !c.is_positive() {
            return Err(Envelope::invalid(CMD, "--refute: claim must be positive"));
        }
    }
    let cert = vp::irrationality_certificate(&n, bound, steps as u32)
        .map_err(|e| failed(CMD, e))?;
    let head = Tree::map().entry("n", n.to_string());
    let Some(cert) = cert else {
        return Ok(Envelope::inconclusive(
            CMD,
            head.entry("certificate", Tree::Null)
                .entry("verdict", "unknown")
                .build(),
        )
        .note(format!("no unit solution with a <= {bound}")));
    };
    let verdict = match &cert {
        IrrationalityCertificate::ExactRoot(r) => format!("sqrt({n}) = {r} is not a karani"),
        IrrationalityCertificate::Witness { .. } => format!("sqrt({n}) is a karani"),
    };
    let mut result = head
        .entry("certificate", cert.to_tree())
        .entry("verified", cert.check(&n))
        .entry("verdict", verdict);
    if let Some(c) = claim {
        let (p, q) = (c.numer().clone(), c.denom().clone());
        let refutation = match &cert {
            IrrationalityCertificate::ExactRoot(r) => {
                let holds = p == *r && q.is_one();
                Tree::map()
                    .entry("claim", format_rational(&c))
                    .entry("mode", "exact_root")
                    .entry("holds", holds)
                    .build()
            }
            IrrationalityCertificate::Witness { .. } => {
                let rep = vp::refute_rational_root_with(&n, &p, &q, &cert, args.force_growth)
                    .map_err(|e| failed(CMD, e))?;
                let mut tree = rep.to_tree();
                if let (vp::RefutationMode::Direct { value }, Tree::Map(entries)) =
                    (&rep.mode, &mut tree)
                {
                    entries.push((
                        "equation".into(),
                        Tree::str(format!("{}^2 - {n}*{}^2 = {value}", p, q)),
                    ));
                }
                tree
            }
        };
        result = result.entry("refutation", refutation);
    }
    Ok(Envelope::ok(CMD, result.build()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurdOp {
    Add,
    Mul,
    Norm,
    Sum1838,
    Eval,
}

pub struct SurdArgs {
    pub op: SurdOp,
    pub expr: String,
    pub expr2: Option<String>,
    pub digits: String,
}

pub fn surd_cmd(args: &SurdArgs) -> Outcome {
    const CMD: &str = "surd";
    let second = |flag: &str| {
        args.expr2
            .as_deref()
            .ok_or_else(|| Envelope::invalid(CMD, format!("--expr2 is required for {flag}")))
    };
    let result = match args.op {
        SurdOp::Add | SurdOp::Mul => {
            let x = surd(CMD, "expr", &args.expr)?;
            let y = surd(CMD, "expr2", second(if args.op == SurdOp::Add { "add" } else { "mul" })?)?;
            let (name, value) = if args.op == SurdOp::Add {
                ("add", karani::surd_add(&x, &y))
            } else {
                ("mul", karani::surd_mul(&x, &y))
            };
            Tree::map()
                .entry("op", name)
                .entry("x", x.to_string())
                .entry("y", y.to_string())
                .entry("value", value.to_string())
                .entry("rational", value.is_rational())
                .build()
        }
        SurdOp::Norm => {
            let x = surd(CMD, "expr", &args.expr)?;
            let conj = karani::conjugate(&x).map_err(|e| failed(CMD, e))?;
            let norm = karani::norm(&x).map_err(|e| failed(CMD, e))?;
            Tree::map()
                .entry("op", "norm")
                .entry("x", x.to_string())
                .entry("conjugate", conj.to_string())
                .entry("value", format_rational(&norm))
                .build()
        }
        SurdOp::Sum1838 => {
            let u = rational(CMD, "expr", &args.expr)?;
            let v = rational(CMD, "expr2", second("sum18-38")?)?;
            let sum = karani::brahmagupta_sum(&u, &v).map_err(|e| failed(CMD, e))?;
            let base = Tree::map()
                .entry("op", "sum18-38")
                .entry("u", format_rational(&u))
                .entry("v", format_rational(&v));
            match sum {
                Some(w) => {
                    let canonical = SurdExpression::sqrt_of(&w).map_err(|e| failed(CMD, e))?;
                    base.entry("value", format!("sqrt({})", format_rational(&w)))
                        .entry("radicand", format_rational(&w))
                        .entry("canonical", canonical.to_string())
                        .build()
                }
                None => base
                    .entry("value", "absent")
                    .entry("radicand", Tree::Null)
                    .entry("canonical", Tree::Null)
                    .build(),
            }
        }
        SurdOp::Eval => {
            let x = surd(CMD, "expr", &args.expr)?;
            let digits = limited(CMD, "digits", &args.digits, MAX_DIGITS)?;
            if digits == 0 {
                return Err(Envelope::invalid(CMD, "--digits: must be positive"));
            }
            Tree::map()
                .entry("op", "eval")
                .entry("x", x.to_string())
                .entry("digits", digits.to_string())
                .entry("value", karani::evaluate(&x, digits as u32))
                .build()
        }
    };
    Ok(Envelope::ok(CMD, result))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanFormat {
    Lg,
    Iast,
}

pub struct ScanArgs {
    pub format: ScanFormat,
    /// Half assumed for a single IAST hemistich.
    pub half: Option<Half>,
    pub file: Option<std::path::PathBuf>,
    pub text: Option<String>,
}

pub fn scan(args: &ScanArgs) -> Outcome {
    const CMD: &str = "scan";
    let text = match (&args.file, &args.text) {
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| Envelope::invalid(CMD, format!("{}: {e}", path.display())))?,
        (None, Some(t)) => t.clone(),
        (Some(_), Some(_)) => return Err(Envelope::invalid(CMD, "give either --file or text, not both")),
        (None, None) => return Err(Envelope::invalid(CMD, "no verse given")),
    };
    let text = text.trim_end_matches(['\n', '\r']);
    let invalid = |e: ganita::ParseError| Envelope::invalid(CMD, format!("verse: {e}"));
    let verse = match args.format {
        ScanFormat::Lg => Verse::from_lg(text).map_err(invalid)?,
        ScanFormat::Iast => {
            let mut halves = weigh_iast(text).map_err(invalid)?;
            if halves.len() == 1 {
                let h = halves.remove(0);
                let half = args.half.unwrap_or(Half::Second);
                let report = validate_hemistich(&h, half, WeightSource::Iast);
                let mut env = Envelope::ok(CMD, report.to_tree());
                env.notes = report.notes.clone();
                env.text = Some(table::render_hemistich(&report));
                return Ok(env);
            }
            let second = halves.pop().expect("two halves");
            let first = halves.pop().expect("two halves");
            Verse::new(first, second, WeightSource::Iast)
        }
    };
    let report = validate_arya(&verse);
    let mut env = Envelope::ok(CMD, report.to_tree());
    env.notes = report.notes.clone();
    env.text = Some(table::render(&report));
    Ok(env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::Exit;

    #[test]
    fn limits() {
        assert_eq!(limited("t", "bound", "10", 10).ok(), Some(10));
        assert_eq!(limited("t", "bound", "11", 10).err().unwrap().exit, Exit::LimitExceeded);
        assert_eq!(limited("t", "bound", "-1", 10).err().unwrap().exit, Exit::BadInput);
        let huge = "9".repeat(40);
        assert_eq!(limited("t", "bound", &huge, 10).err().unwrap().exit, Exit::LimitExceeded);
    }

    #[test]
    fn check_lines_parenthesize() {
        assert_eq!(
            check_line("-2", "1/2".into(), "-3".into(), "1".into()),
            "(-3)^2 - (-2)*(1/2)^2 = 1"
        );
    }

    #[test]
    fn square_with_unreachable_k_is_proven_absent() {
        let env = solve(&SolveArgs {
            n: "4".into(),
            k: "2".into(),
            bound: "100".into(),
            all: false,
            m: None,
        })
        .unwrap();
        assert_eq!(env.status, crate::envelope::Status::Ok);
        let result = env.result.unwrap();
        assert_eq!(result.get("solution").and_then(Tree::as_str), Some("absent"));
    }
}
