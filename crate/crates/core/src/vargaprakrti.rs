//! The *varga-prakṛti* equation `N·a² + k = b²`.
//!
//! Composition (*bhāvanā*) combines two solutions for the same multiplier `N`:
//!
//! ```text
//! a″ = a·b′ + a′·b,   b″ = N·a·a′ + b·b′,   k″ = k·k′
//! ```
//!
//! The identity `b″² − N·a″² = (b² − N·a²)(b′² − N·a′²)` holds for every
//! integer (or rational) `N`, including negative ones. Everything else in
//! this module is built from it: interpolator scaling, promotion of rational
//! solutions, growth sequences, and the irrationality certificates.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, ParseError, Result};
use crate::rational::{exact_sqrt, format_rational, is_integral};
use crate::report::{ToTree, Tree};

/// Default search bound for `a` in solution searches.
pub const DEFAULT_A_BOUND: u64 = 1_000_000;
/// Default number of self-compositions tried by [`promote_to_integral`].
pub const DEFAULT_PROMOTE_STEPS: u32 = 8;
/// Default number of growth steps verified for a witness certificate.
pub const DEFAULT_GROWTH_STEPS: u32 = 3;

/// An integer triple `(a, b, k)`: initial root, final root, interpolator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    pub a: BigInt,
    pub b: BigInt,
    pub k: BigInt,
}

impl Solution {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, k: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            k: k.into(),
        }
    }

    /// `a = 0, b = ±1, k = 1`, excluded from the theory.
    pub fn is_trivial(&self) -> bool {
        self.a.is_zero() && self.k.is_one() && self.b.abs().is_one()
    }

    /// `b² − N·a²`.
    pub fn residual(&self, n: &BigInt) -> BigInt {
        &self.b * &self.b - n * &self.a * &self.a
    }

    fn with_positive_b(mut self) -> Self {
        self.b = self.b.abs();
        self
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.k)
    }
}

impl FromStr for Solution {
    type Err = ParseError;

    /// `a,b,k`
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut fields = Vec::with_capacity(3);
        let mut offset = 0usize;
        for part in s.split(',') {
            let lead = part.chars().take_while(|c| c.is_whitespace()).count();
            let value = crate::rational::parse_integer(part)
                .map_err(|e| ParseError::new(offset + lead + e.position, e.message))?;
            fields.push(value);
            offset += part.chars().count() + 1;
        }
        match <[BigInt; 3]>::try_from(fields) {
            Ok([a, b, k]) => Ok(Solution { a, b, k }),
            Err(fields) => Err(ParseError::new(
                1,
                format!("expected three fields a,b,k, got {}", fields.len()),
            )),
        }
    }
}

/// A rational triple `(x, y, k)` with `y² = N·x² + k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalSolution {
    pub x: BigRational,
    pub y: BigRational,
    pub k: BigRational,
}

impl RationalSolution {
    pub fn new(x: BigRational, y: BigRational, k: BigRational) -> Self {
        Self { x, y, k }
    }

    pub fn is_integral(&self) -> bool {
        is_integral(&self.x) && is_integral(&self.y) && is_integral(&self.k)
    }

    pub fn to_integral(&self) -> Option<Solution> {
        self.is_integral().then(|| Solution {
            a: self.x.to_integer(),
            b: self.y.to_integer(),
            k: self.k.to_integer(),
        })
    }
}

impl From<&Solution> for RationalSolution {
    fn from(s: &Solution) -> Self {
        Self {
            x: BigRational::from_integer(s.a.clone()),
            y: BigRational::from_integer(s.b.clone()),
            k: BigRational::from_integer(s.k.clone()),
        }
    }
}

impl fmt::Display for RationalSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            format_rational(&self.x),
            format_rational(&self.y),
            format_rational(&self.k)
        )
    }
}

pub fn verify(n: &BigInt, s: &Solution) -> bool {
    s.residual(n) == s.k
}

pub fn verify_rational(n: &BigInt, r: &RationalSolution) -> bool {
    let n = BigRational::from_integer(n.clone());
    &r.y * &r.y - n * &r.x * &r.x == r.k
}

fn compose_unchecked(n: &BigInt, s1: &Solution, s2: &Solution) -> Solution {
    Solution {
        a: &s1.a * &s2.b + &s2.a * &s1.b,
        b: n * &s1.a * &s2.a + &s1.b * &s2.b,
        k: &s1.k * &s2.k,
    }
}

fn compose_rational_unchecked(
    n: &BigInt,
    r1: &RationalSolution,
    r2: &RationalSolution,
) -> RationalSolution {
    let n = BigRational::from_integer(n.clone());
    RationalSolution {
        x: &r1.x * &r2.y + &r2.x * &r1.y,
        y: n * &r1.x * &r2.x + &r1.y * &r2.y,
        k: &r1.k * &r2.k,
    }
}

fn require(n: &BigInt, s: &Solution) -> Result<()> {
    if verify(n, s) {
        Ok(())
    } else {
        Err(Error::InvalidSolution(format!(
            "{s} does not satisfy {n}·a² + k = b² (b² − N·a² = {})",
            s.residual(n)
        )))
    }
}

/// Brahmagupta's composition of two solutions of the same equation.
pub fn compose(n: &BigInt, s1: &Solution, s2: &Solution) -> Result<Solution> {
    require(n, s1)?;
    require(n, s2)?;
    Ok(compose_unchecked(n, s1, s2))
}

/// Composition over the rationals.
pub fn compose_rational(
    n: &BigInt,
    r1: &RationalSolution,
    r2: &RationalSolution,
) -> Result<RationalSolution> {
    for r in [r1, r2] {
        if !verify_rational(n, r) {
            return Err(Error::InvalidSolution(format!(
                "{r} does not satisfy {n}·x² + k = y²"
            )));
        }
    }
    Ok(compose_rational_unchecked(n, r1, r2))
}

/// Divides both roots of a solution with interpolator `k²` by `k`, giving a
/// rational solution with interpolator 1.
pub fn unit_scale(n: &BigInt, s: &Solution) -> Result<RationalSolution> {
    require(n, s)?;
    let root = if s.k.is_positive() {
        exact_sqrt(&s.k)
    } else {
        None
    };
    let root = root.ok_or_else(|| Error::NotUnitScalable(s.k.to_string()))?;
    Ok(RationalSolution {
        x: BigRational::new(s.a.clone(), root.clone()),
        y: BigRational::new(s.b.clone(), root),
        k: BigRational::one(),
    })
}

/// Composes a unit rational solution with itself along the chain
/// `r, r∘r, (r∘r)∘r, …` and returns the first integral member. The starting
/// value counts as step 0; at most `max_steps` compositions are tried.
pub fn promote_to_integral(
    n: &BigInt,
    r: &RationalSolution,
    max_steps: u32,
) -> Result<Option<Solution>> {
    if !r.k.is_one() || !verify_rational(n, r) {
        return Err(Error::InvalidSolution(format!(
            "{r} is not a unit-interpolator solution for N = {n}"
        )));
    }
    let mut current = r.clone();
    for step in 0..=max_steps {
        if let Some(s) = current.to_integral() {
            return Ok(Some(s));
        }
        if step < max_steps {
            current = compose_rational_unchecked(n, &current, r);
        }
    }
    Ok(None)
}

/// Finds `b ≥ 0` with `b² = N·a² + k` for successive `a`, using native
/// arithmetic when every value fits.
enum RootScanner {
    Small { n: i128, k: i128 },
    Big { n: BigInt, k: BigInt },
}

impl RootScanner {
    fn new(n: &BigInt, k: &BigInt, a_max: u64) -> Self {
        let limit = BigInt::from(1u128 << 120);
        let worst = n.abs() * BigInt::from(a_max) * BigInt::from(a_max) + k.abs();
        match (n.to_i128(), k.to_i128()) {
            (Some(n), Some(k)) if worst < limit => RootScanner::Small { n, k },
            _ => RootScanner::Big {
                n: n.clone(),
                k: k.clone(),
            },
        }
    }

    fn root(&self, a: u64) -> Option<BigInt> {
        match self {
            RootScanner::Small { n, k } => {
                let a = a as i128;
                let v = n * a * a + k;
                if v < 0 {
                    return None;
                }
                let v = v as u128;
                let r = v.sqrt();
                (r * r == v).then(|| BigInt::from(r))
            }
            RootScanner::Big { n, k } => {
                let a = BigInt::from(a);
                exact_sqrt(&(n * &a * &a + k))
            }
        }
    }
}

/// The solution `(a, b, k)` with the smallest `a` in `1..=a_bound`, `b ≥ 0`.
pub fn first_solution(n: &BigInt, k: &BigInt, a_bound: u64) -> Option<Solution> {
    let scanner = RootScanner::new(n, k, a_bound);
    (1..=a_bound).find_map(|a| {
        scanner
            .root(a)
            .map(|b| Solution::new(a, b, k.clone()))
    })
}

fn perfect_square_root(n: &BigInt) -> Option<BigInt> {
    exact_sqrt(n)
}

/// The `k = 1` solution with the smallest `a ≥ 1`, searching `a ≤ a_bound`.
///
/// Always `None` when `N` is a perfect square: `(b + na)(b − na) = 1` forces
/// `a = 0` (see [`refute_unit_solution_square`]).
pub fn fundamental_solution(n: &BigInt, a_bound: u64) -> Result<Option<Solution>> {
    if n < &BigInt::one() {
        return Err(Error::domain(format!("multiplier must be ≥ 1, got {n}")));
    }
    if perfect_square_root(n).is_some() {
        return Ok(None);
    }
    Ok(first_solution(n, &BigInt::one(), a_bound))
}

/// For the multiplier `n²`: `a = (k/m − m)/(2n)`, `b = (k/m + m)/2`.
///
/// Writing `k = (b − na)(b + na)` with `b − na = m` gives `b + na = k/m`, and
/// the transition from sum and difference yields `b` and `na`.
pub fn solve_square_multiplier(
    n: &BigInt,
    k: &BigInt,
    m: &BigRational,
) -> Result<RationalSolution> {
    if n < &BigInt::one() {
        return Err(Error::domain(format!("square root of multiplier must be ≥ 1, got {n}")));
    }
    if k.is_zero() {
        return Err(Error::domain("interpolator must be nonzero"));
    }
    if m.is_zero() {
        return Err(Error::domain("divisor m must be nonzero"));
    }
    let k = BigRational::from_integer(k.clone());
    let two = BigRational::from_integer(2.into());
    let quotient = &k / m;
    let pair = crate::parikarman::sankramana(&quotient, m);
    let b = pair.first;
    let na = pair.second;
    debug_assert_eq!(b, (&quotient + m) / &two);
    Ok(RationalSolution {
        x: na / BigRational::from_integer(n.clone()),
        y: b,
        k,
    })
}

/// Positive divisors of `|k|`, ascending.
pub fn positive_divisors(k: &BigInt) -> Vec<BigInt> {
    let k = k.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= k {
        if (&k % &d).is_zero() {
            let other = &k / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Every nontrivial integral solution (`a ≥ 1`, `b ≥ 0`) for the multiplier
/// `n²`, from every integer divisor `m` of `k`, deduplicated, sorted by `a`.
pub fn enumerate_square_multiplier_integral(n: &BigInt, k: &BigInt) -> Result<Vec<Solution>> {
    if n < &BigInt::one() {
        return Err(Error::domain(format!("square root of multiplier must be ≥ 1, got {n}")));
    }
    if k.is_zero() {
        return Err(Error::Underdetermined(
            "k = 0 leaves no divisor m to choose".into(),
        ));
    }
    let mut out: Vec<Solution> = Vec::new();
    for d in positive_divisors(k) {
        for m in [d.clone(), -d] {
            let r = solve_square_multiplier(n, k, &BigRational::from_integer(m))?;
            if let Some(s) = r.to_integral() {
                if s.a.is_positive() {
                    out.push(s.with_positive_b());
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GrowthMode {
    /// `sᵢ₊₁ = sᵢ ∘ seed`
    #[default]
    Linear,
    /// `sᵢ₊₁ = sᵢ ∘ sᵢ`
    Doubling,
}

/// `s₀ = seed, s₁, …, s_t` with strictly increasing `a`.
pub fn growth_sequence(n: &BigInt, seed: &Solution, t: u32) -> Result<Vec<Solution>> {
    growth_sequence_with(n, seed, t, GrowthMode::Linear)
}

pub fn growth_sequence_with(
    n: &BigInt,
    seed: &Solution,
    t: u32,
    mode: GrowthMode,
) -> Result<Vec<Solution>> {
    if !verify(n, seed) {
        return Err(Error::InvalidSeed(format!("{seed} does not solve N = {n}")));
    }
    if !seed.k.is_one() {
        return Err(Error::InvalidSeed(format!("interpolator {} is not 1", seed.k)));
    }
    if !seed.a.is_positive() {
        return Err(Error::InvalidSeed("a must be ≥ 1".into()));
    }
    if !n.is_positive() || perfect_square_root(n).is_some() {
        return Err(Error::InvalidSeed(format!(
            "multiplier {n} must be a positive nonsquare"
        )));
    }
    let seed = seed.clone().with_positive_b();
    let mut seq = Vec::with_capacity(t as usize + 1);
    seq.push(seed.clone());
    for _ in 0..t {
        let last = seq.last().expect("nonempty");
        let next = match mode {
            GrowthMode::Linear => compose_unchecked(n, last, &seed),
            GrowthMode::Doubling => compose_unchecked(n, last, last),
        };
        debug_assert!(next.a > last.a);
        seq.push(next);
    }
    Ok(seq)
}

/// Evidence about whether `√N` is rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrrationalityCertificate {
    /// `n² = N`: `√N` is rational, not a karaṇī.
    ExactRoot(BigInt),
    /// A solution of `N·a² + 1 = b²` with `a ≥ 1`, and the number of
    /// self-compositions checked to grow strictly.
    Witness { solution: Solution, growth_steps: u32 },
}

impl IrrationalityCertificate {
    /// Re-checks the certificate against `N` from scratch.
    pub fn check(&self, n: &BigInt) -> bool {
        match self {
            IrrationalityCertificate::ExactRoot(root) => root.is_positive() && root * root == *n,
            IrrationalityCertificate::Witness {
                solution,
                growth_steps,
            } => {
                if !(solution.k.is_one() && solution.a.is_positive() && verify(n, solution)) {
                    return false;
                }
                match growth_sequence(n, solution, *growth_steps) {
                    Ok(seq) => seq.windows(2).all(|w| w[1].a > w[0].a && verify(n, &w[1])),
                    Err(_) => false,
                }
            }
        }
    }

    pub fn is_karani(&self) -> bool {
        matches!(self, IrrationalityCertificate::Witness { .. })
    }
}

/// Exact root when `N` is a square, otherwise a witness if one exists with
/// `a ≤ a_bound`. `None` means inconclusive, never "rational".
pub fn irrationality_certificate(
    n: &BigInt,
    a_bound: u64,
    growth_steps: u32,
) -> Result<Option<IrrationalityCertificate>> {
    if n < &BigInt::one() {
        return Err(Error::domain(format!("multiplier must be ≥ 1, got {n}")));
    }
    if growth_steps == 0 {
        return Err(Error::domain("growth_steps must be positive"));
    }
    if let Some(root) = perfect_square_root(n) {
        return Ok(Some(IrrationalityCertificate::ExactRoot(root)));
    }
    let Some(solution) = fundamental_solution(n, a_bound)? else {
        return Ok(None);
    };
    let seq = growth_sequence(n, &solution, growth_steps)?;
    let grows = seq
        .windows(2)
        .all(|w| w[1].a > w[0].a && verify(n, &w[1]) && w[1].k.is_one());
    if !grows {
        return Err(Error::InvalidSolution(format!(
            "growth check failed from {solution}"
        )));
    }
    Ok(Some(IrrationalityCertificate::Witness {
        solution,
        growth_steps,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RefutationMode {
    /// `p² − N·q² = value ≠ 0`: the claim fails by direct computation.
    Direct { value: BigInt },
    /// The growth sequence element at `index` has `a > q²`, so
    /// `b·q + p·a = factor > q² = bound`, contradicting
    /// `(bq + pa)(bq − pa) = q²`.
    Growth {
        index: usize,
        solution: Solution,
        factor: BigInt,
        bound: BigInt,
    },
}

/// Why `√N ≠ p/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefutationReport {
    pub p: BigInt,
    pub q: BigInt,
    pub mode: RefutationMode,
}

/// Refutes the claim `√N = p/q` using a witness certificate.
pub fn refute_rational_root(
    n: &BigInt,
    p: &BigInt,
    q: &BigInt,
    cert: &IrrationalityCertificate,
) -> Result<RefutationReport> {
    refute_rational_root_with(n, p, q, cert, false)
}

/// As [`refute_rational_root`]; with `force_growth` the direct check is
/// skipped and the growth contradiction is exhibited regardless.
pub fn refute_rational_root_with(
    n: &BigInt,
    p: &BigInt,
    q: &BigInt,
    cert: &IrrationalityCertificate,
    force_growth: bool,
) -> Result<RefutationReport> {
    if !p.is_positive() || !q.is_positive() {
        return Err(Error::domain("p and q must be positive"));
    }
    if !p.gcd(q).is_one() {
        return Err(Error::domain(format!("{p}/{q} is not in lowest terms")));
    }
    let IrrationalityCertificate::Witness { solution, .. } = cert else {
        return Err(Error::domain(
            "refutation needs a witness certificate; an exact root makes √N rational",
        ));
    };
    if !solution.k.is_one() || !solution.a.is_positive() || !verify(n, solution) {
        return Err(Error::InvalidSolution(format!(
            "witness {solution} does not fit N = {n}"
        )));
    }
    let value = p * p - n * q * q;
    if !force_growth && !value.is_zero() {
        return Ok(RefutationReport {
            p: p.clone(),
            q: q.clone(),
            mode: RefutationMode::Direct { value },
        });
    }
    let bound = q * q;
    let seed = solution.clone().with_positive_b();
    let mut current = seed.clone();
    let mut index = 0usize;
    while current.a <= bound {
        current = compose_unchecked(n, &current, &seed);
        index += 1;
    }
    let factor = &current.b * q + p * &current.a;
    Ok(RefutationReport {
        p: p.clone(),
        q: q.clone(),
        mode: RefutationMode::Growth {
            index,
            solution: current,
            factor,
            bound,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSquareVerdict {
    /// `b² − n²a² ≠ 1`.
    Direct,
    /// `(b + na)(b − na) = 1` forces both factors to 1 and so `a = 0`.
    FactorsForceZero,
}

/// Why `(a, b)` with `a, b ≥ 1` cannot solve `n²·a² + 1 = b²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSquareRefutation {
    pub n: BigInt,
    pub a: BigInt,
    pub b: BigInt,
    /// `b² − n²·a²`
    pub value: BigInt,
    /// `(b + na, b − na)`
    pub factors: (BigInt, BigInt),
    pub verdict: UnitSquareVerdict,
}

pub fn refute_unit_solution_square(
    n: &BigInt,
    a: &BigInt,
    b: &BigInt,
) -> Result<UnitSquareRefutation> {
    if !n.is_positive() || !a.is_positive() || !b.is_positive() {
        return Err(Error::domain("n, a and b must all be ≥ 1"));
    }
    let na = n * a;
    let factors = (b + &na, b - &na);
    let value = &factors.0 * &factors.1;
    // With na ≥ 1 the factors differ, so they cannot both equal 1.
    let verdict = if value.is_one() {
        UnitSquareVerdict::FactorsForceZero
    } else {
        UnitSquareVerdict::Direct
    };
    Ok(UnitSquareRefutation {
        n: n.clone(),
        a: a.clone(),
        b: b.clone(),
        value,
        factors,
        verdict,
    })
}

/// Brute force: every `(a, b, k)` with `0 ≤ a ≤ a_max`, `b ≥ 0`, sorted by
/// `a`. Trivial solutions are included; see [`Solution::is_trivial`].
pub fn enumerate_solutions(n: &BigInt, k: &BigInt, a_max: u64) -> Vec<Solution> {
    let scanner = RootScanner::new(n, k, a_max);
    (0..=a_max)
        .filter_map(|a| scanner.root(a).map(|b| Solution::new(a, b, k.clone())))
        .collect()
}

impl ToTree for Solution {
    fn to_tree(&self) -> Tree {
        Tree::map()
            .entry("a", self.a.to_string())
            .entry("b", self.b.to_string())
            .entry("k", self.k.to_string())
            .build()
    }
}

impl ToTree for RationalSolution {
    fn to_tree(&self) -> Tree {
        Tree::map()
            .entry("a", format_rational(&self.x))
            .entry("b", format_rational(&self.y))
            .entry("k", format_rational(&self.k))
            .build()
    }
}

impl ToTree for IrrationalityCertificate {
    fn to_tree(&self) -> Tree {
        match self {
            IrrationalityCertificate::ExactRoot(root) => Tree::map()
                .entry("kind", "exact_root")
                .entry("root", root.to_string())
                .build(),
            IrrationalityCertificate::Witness {
                solution,
                growth_steps,
            } => Tree::map()
                .entry("kind", "witness")
                .entry("solution", solution.to_tree())
                .entry("growth_steps", growth_steps.to_string())
                .build(),
        }
    }
}

impl ToTree for RefutationReport {
    fn to_tree(&self) -> Tree {
        let claim = format!("{}/{}", self.p, self.q);
        match &self.mode {
            RefutationMode::Direct { value } => Tree::map()
                .entry("claim", claim)
                .entry("mode", "direct")
                .entry("value", value.to_string())
                .build(),
            RefutationMode::Growth {
                index,
                solution,
                factor,
                bound,
            } => Tree::map()
                .entry("claim", claim)
                .entry("mode", "growth")
                .entry("index", index.to_string())
                .entry("solution", solution.to_tree())
                .entry("factor", factor.to_string())
                .entry("bound", bound.to_string())
                .build(),
        }
    }
}

impl ToTree for UnitSquareRefutation {
    fn to_tree(&self) -> Tree {
        Tree::map()
            .entry("n", self.n.to_string())
            .entry("a", self.a.to_string())
            .entry("b", self.b.to_string())
            .entry("value", self.value.to_string())
            .entry(
                "factors",
                Tree::list([self.factors.0.to_string(), self.factors.1.to_string()]),
            )
            .entry(
                "verdict",
                match self.verdict {
                    UnitSquareVerdict::Direct => "direct",
                    UnitSquareVerdict::FactorsForceZero => "factors_force_zero",
                },
            )
            .build()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn n(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn s(a: i64, b: i64, k: i64) -> Solution {
        Solution::new(a, b, k)
    }

    fn r(x: BigRational, y: BigRational, k: i64) -> RationalSolution {
        RationalSolution::new(x, y, int(k))
    }

    #[test]
    fn verify_examples() {
        assert!(verify(&n(2), &s(2, 3, 1)));
        assert!(verify(&n(3), &s(1, 2, 1)));
        assert!(!verify(&n(2), &s(2, 4, 1)));
        assert!(verify(&n(2), &s(2, -3, 1)));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(compose(&n(2), &s(2, 3, 1), &s(2, 3, 1)).unwrap(), s(12, 17, 1));
        assert_eq!(compose(&n(2), &s(1, 1, -1), &s(1, 1, -1)).unwrap(), s(2, 3, 1));
        assert_eq!(compose(&n(2), &s(1, 2, 2), &s(1, 2, 2)).unwrap(), s(4, 6, 4));
        assert!(matches!(
            compose(&n(2), &s(2, 4, 1), &s(2, 3, 1)),
            Err(Error::InvalidSolution(_))
        ));
    }

    #[test]
    fn compose_accepts_zero_interpolator() {
        // 1·a² + 0 = b²
        let z = s(3, 3, 0);
        assert_eq!(compose(&n(1), &z, &s(0, 1, 1)).unwrap(), s(3, 3, 0));
    }

    #[test]
    fn unit_scale_examples() {
        assert_eq!(unit_scale(&n(2), &s(4, 6, 4)).unwrap(), r(int(2), int(3), 1));
        assert_eq!(unit_scale(&n(2), &s(12, 17, 1)).unwrap(), r(int(12), int(17), 1));
        let c = compose(&n(5), &s(1, 1, -4), &s(1, 1, -4)).unwrap();
        assert_eq!(c, s(2, 6, 16));
        assert_eq!(unit_scale(&n(5), &c).unwrap(), r(ratio(1, 2), ratio(3, 2), 1));
        assert!(matches!(
            unit_scale(&n(2), &s(1, 1, -1)),
            Err(Error::NotUnitScalable(_))
        ));
        assert!(matches!(
            unit_scale(&n(2), &s(1, 2, 2)),
            Err(Error::NotUnitScalable(_))
        ));
    }

    #[test]
    fn promote_examples() {
        let half = r(ratio(1, 2), ratio(3, 2), 1);
        assert_eq!(promote_to_integral(&n(5), &half, 5).unwrap(), Some(s(4, 9, 1)));
        assert_eq!(
            promote_to_integral(&n(2), &r(int(12), int(17), 1), 1).unwrap(),
            Some(s(12, 17, 1))
        );
        assert_eq!(promote_to_integral(&n(5), &half, 0).unwrap(), None);
        assert_eq!(promote_to_integral(&n(5), &half, 1).unwrap(), None);
        assert_eq!(promote_to_integral(&n(5), &half, 2).unwrap(), Some(s(4, 9, 1)));
        assert!(promote_to_integral(&n(5), &r(int(1), int(1), 1), 3).is_err());
    }

    #[test]
    fn fundamental_examples() {
        assert_eq!(fundamental_solution(&n(2), 100).unwrap(), Some(s(2, 3, 1)));
        assert_eq!(fundamental_solution(&n(6), 100).unwrap(), Some(s(2, 5, 1)));
        assert_eq!(fundamental_solution(&n(4), 1_000_000).unwrap(), None);
        assert_eq!(fundamental_solution(&n(13), 100).unwrap(), None);
        assert_eq!(fundamental_solution(&n(13), 1000).unwrap(), Some(s(180, 649, 1)));
        assert!(fundamental_solution(&n(0), 10).is_err());
    }

    #[test]
    fn big_scanner_agrees_with_small() {
        let huge = BigInt::from(1u128 << 100) * BigInt::from(1u128 << 30);
        let k = &huge * 4u32;
        let small = RootScanner::Small { n: 2, k: 1 };
        let big = RootScanner::Big { n: n(2), k: n(1) };
        for a in 0..200 {
            assert_eq!(small.root(a), big.root(a));
        }
        assert!(matches!(RootScanner::new(&huge, &k, 10), RootScanner::Big { .. }));
    }

    #[test]
    fn square_multiplier_examples() {
        assert_eq!(
            solve_square_multiplier(&n(2), &n(9), &int(1)).unwrap(),
            r(int(2), int(5), 9)
        );
        assert_eq!(
            solve_square_multiplier(&n(1), &n(3), &int(1)).unwrap(),
            r(int(1), int(2), 3)
        );
        assert_eq!(
            solve_square_multiplier(&n(2), &n(8), &int(2)).unwrap(),
            r(ratio(1, 2), int(3), 8)
        );
        assert!(matches!(
            solve_square_multiplier(&n(2), &n(8), &int(0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn square_multiplier_enumeration_examples() {
        assert_eq!(
            enumerate_square_multiplier_integral(&n(2), &n(9)).unwrap(),
            vec![s(2, 5, 9)]
        );
        assert!(matches!(
            enumerate_square_multiplier_integral(&n(1), &n(0)),
            Err(Error::Underdetermined(_))
        ));
        assert_eq!(enumerate_square_multiplier_integral(&n(2), &n(1)).unwrap(), vec![]);
        // 4 = (b − a)(b + a) with b − a = m: m = ±1 gives non-integral a
        assert_eq!(
            enumerate_square_multiplier_integral(&n(1), &n(-3)).unwrap(),
            vec![s(2, 1, -3)]
        );
    }

    #[test]
    fn divisors() {
        let d: Vec<i64> = positive_divisors(&n(-36))
            .iter()
            .map(|x| x.to_i64().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn growth_examples() {
        assert_eq!(
            growth_sequence(&n(2), &s(2, 3, 1), 3).unwrap(),
            vec![s(2, 3, 1), s(12, 17, 1), s(70, 99, 1), s(408, 577, 1)]
        );
        assert_eq!(
            growth_sequence(&n(3), &s(1, 2, 1), 2).unwrap(),
            vec![s(1, 2, 1), s(4, 7, 1), s(15, 26, 1)]
        );
        assert_eq!(growth_sequence(&n(2), &s(2, 3, 1), 0).unwrap(), vec![s(2, 3, 1)]);
        assert_eq!(
            growth_sequence_with(&n(2), &s(2, 3, 1), 2, GrowthMode::Doubling).unwrap(),
            vec![s(2, 3, 1), s(12, 17, 1), s(408, 577, 1)]
        );
        for bad in [s(0, 1, 1), s(1, 1, -1), s(2, 4, 1)] {
            assert!(matches!(
                growth_sequence(&n(2), &bad, 2),
                Err(Error::InvalidSeed(_))
            ));
        }
        assert!(growth_sequence(&n(4), &s(0, 1, 1), 1).is_err());
    }

    #[test]
    fn certificate_examples() {
        let c = irrationality_certificate(&n(2), 100, 3).unwrap().unwrap();
        assert_eq!(
            c,
            IrrationalityCertificate::Witness {
                solution: s(2, 3, 1),
                growth_steps: 3
            }
        );
        assert!(c.check(&n(2)));
        assert_eq!(
            irrationality_certificate(&n(9), 1_000_000, 3).unwrap(),
            Some(IrrationalityCertificate::ExactRoot(n(3)))
        );
        let c3 = irrationality_certificate(&n(3), 100, 2).unwrap().unwrap();
        assert_eq!(
            c3,
            IrrationalityCertificate::Witness {
                solution: s(1, 2, 1),
                growth_steps: 2
            }
        );
        assert_eq!(irrationality_certificate(&n(61), 1000, 3).unwrap(), None);
        assert!(!IrrationalityCertificate::ExactRoot(n(3)).check(&n(10)));
    }

    #[test]
    fn refutation_examples() {
        let cert = irrationality_certificate(&n(2), 100, 3).unwrap().unwrap();
        let rep = refute_rational_root(&n(2), &n(7), &n(5), &cert).unwrap();
        assert_eq!(rep.mode, RefutationMode::Direct { value: n(-1) });
        let rep = refute_rational_root(&n(2), &n(3), &n(2), &cert).unwrap();
        assert_eq!(rep.mode, RefutationMode::Direct { value: n(1) });
        let rep = refute_rational_root_with(&n(2), &n(7), &n(5), &cert, true).unwrap();
        match rep.mode {
            RefutationMode::Growth {
                index,
                solution,
                factor,
                bound,
            } => {
                assert_eq!(index, 2);
                assert_eq!(solution, s(70, 99, 1));
                assert_eq!(bound, n(25));
                assert_eq!(factor, n(99 * 5 + 7 * 70));
            }
            other => panic!("expected growth mode, got {other:?}"),
        }
        assert!(matches!(
            refute_rational_root(&n(2), &n(6), &n(4), &cert),
            Err(Error::Domain(_))
        ));
        let exact = IrrationalityCertificate::ExactRoot(n(3));
        assert!(refute_rational_root(&n(9), &n(3), &n(1), &exact).is_err());
    }

    #[test]
    fn unit_square_refutation_examples() {
        let cases = [(2, 1, 2, 0, (4, 0)), (2, 1, 3, 5, (5, 1)), (3, 2, 7, 13, (13, 1))];
        for (nn, a, b, value, (f1, f2)) in cases {
            let rep = refute_unit_solution_square(&n(nn), &n(a), &n(b)).unwrap();
            assert_eq!(rep.value, n(value));
            assert_eq!(rep.factors, (n(f1), n(f2)));
            assert_eq!(rep.verdict, UnitSquareVerdict::Direct);
        }
        assert!(refute_unit_solution_square(&n(2), &n(0), &n(1)).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_solutions(&n(2), &n(1), 15),
            vec![s(0, 1, 1), s(2, 3, 1), s(12, 17, 1)]
        );
        assert_eq!(enumerate_solutions(&n(4), &n(1), 1000), vec![s(0, 1, 1)]);
        assert_eq!(
            enumerate_solutions(&n(2), &n(-1), 10),
            vec![s(1, 1, -1), s(5, 7, -1)]
        );
        assert!(enumerate_solutions(&n(2), &n(1), 15)[0].is_trivial());
    }

    #[test]
    fn solution_text_form() {
        assert_eq!("2,3,1".parse::<Solution>().unwrap(), s(2, 3, 1));
        assert_eq!(" 1, 1, -1".parse::<Solution>().unwrap(), s(1, 1, -1));
        assert_eq!("1,x,1".parse::<Solution>().unwrap_err().position, 3);
        assert!("1,2".parse::<Solution>().is_err());
        assert_eq!(s(12, 17, 1).to_string(), "(12, 17, 1)");
    }
}
