//! Exact quadratic-surd arithmetic.
//!
//! A [`SurdExpression`] is `r + Σ qᵢ·√dᵢ` with rational `r`, `qᵢ ≠ 0`, and
//! pairwise distinct squarefree radicands `dᵢ ≥ 2`. The square roots of
//! distinct squarefree integers are linearly independent over the rationals,
//! so this form is unique and equality is structural.
//!
//! Brahmagupta works instead with radicand forms: `a·√N` is written `√(N·a²)`.
//! [`make_surd`] converts a radicand form to the canonical one, and
//! [`brahmagupta_sum`] implements his conditional rule for adding two of them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, ParseError, Result};
use crate::rational::{exact_sqrt, floor_sqrt, format_rational, rational_sqrt, scan_integer, scan_rational};
use crate::report::{ToTree, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SurdExpression {
    rational: BigRational,
    terms: BTreeMap<BigInt, BigRational>,
}

impl SurdExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(r: BigRational) -> Self {
        Self {
            rational: r,
            terms: BTreeMap::new(),
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    /// `√u` for a positive rational `u = p/q`, as `(1/q)·√(pq)`.
    pub fn sqrt_of(u: &BigRational) -> Result<Self> {
        if !u.is_positive() {
            return Err(Error::domain(format!(
                "square root of nonpositive {}",
                format_rational(u)
            )));
        }
        let coefficient = BigRational::new(BigInt::one(), u.denom().clone());
        make_surd(&coefficient, &(u.numer() * u.denom()))
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    /// Surd terms as `(radicand, coefficient)` in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &BigRational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.rational.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rational)
    }

    /// Checks the canonical-form invariants. Always true for values built
    /// through this module's API.
    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|(d, q)| {
            !q.is_zero() && *d >= BigInt::from(2) && squarefree_decompose(d).0.is_one()
        })
    }

    fn add_term(&mut self, radicand: BigInt, coefficient: BigRational) {
        if coefficient.is_zero() {
            return;
        }
        if radicand.is_one() {
            self.rational += coefficient;
            return;
        }
        let slot = self.terms.entry(radicand).or_insert_with(BigRational::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.retain(|_, q| !q.is_zero());
        }
    }

    fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            rational: &self.rational * factor,
            terms: self
                .terms
                .iter()
                .map(|(d, q)| (d.clone(), q * factor))
                .collect(),
        }
    }
}

/// Splits `n ≥ 1` into `(s, d)` with `n = s²·d` and `d` squarefree.
///
/// Trial division up to the square root of the unfactored remainder.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    if let Some(small) = n.to_u64() {
        let (s, d) = squarefree_decompose_u64(small);
        return (BigInt::from(s), BigInt::from(d));
    }
    let mut rem = n.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    loop {
        if let Some(root) = exact_sqrt(&rem) {
            square *= root;
            break;
        }
        if &p * &p > rem {
            free *= &rem;
            break;
        }
        let mut exponent = 0u32;
        while (&rem % &p).is_zero() {
            rem /= &p;
            exponent += 1;
        }
        if exponent > 0 {
            square *= p.pow(exponent / 2);
            if exponent % 2 == 1 {
                free *= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    (square, free)
}

fn squarefree_decompose_u64(n: u64) -> (u64, u64) {
    let mut rem = n;
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rem {
        let mut exponent = 0u32;
        while rem.is_multiple_of(p) {
            rem /= p;
            exponent += 1;
        }
        square *= p.pow(exponent / 2);
        if exponent % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (square, free * rem)
}

/// `coefficient·√radicand` in canonical form.
pub fn make_surd(coefficient: &BigRational, radicand: &BigInt) -> Result<SurdExpression> {
    if !radicand.is_positive() {
        return Err(Error::domain(format!(
            "radicand {radicand} is not positive; square roots of negative numbers are not considered"
        )));
    }
    let (square, free) = squarefree_decompose(radicand);
    let mut out = SurdExpression::zero();
    out.add_term(free, coefficient * BigRational::from_integer(square));
    Ok(out)
}

/// Brahmagupta's surd-sum rule: if `u·u′ = z²` for a rational `z > 0`, then
/// `√u + √u′ = √(u + 2z + u′)`. Returns the combined radicand, or `None`
/// when `u·u′` is not a rational square.
pub fn brahmagupta_sum(u: &BigRational, u_prime: &BigRational) -> Result<Option<BigRational>> {
    if !u.is_positive() || !u_prime.is_positive() {
        return Err(Error::domain("surd-sum arguments must be positive"));
    }
    let Some(z) = rational_sqrt(&(u * u_prime)) else {
        return Ok(None);
    };
    let two = BigRational::from_integer(2.into());
    Ok(Some(u + two * z + u_prime))
}

pub fn surd_add(x: &SurdExpression, y: &SurdExpression) -> SurdExpression {
    let mut out = x.clone();
    out.rational += &y.rational;
    for (d, q) in &y.terms {
        out.add_term(d.clone(), q.clone());
    }
    out
}

pub fn surd_mul(x: &SurdExpression, y: &SurdExpression) -> SurdExpression {
    let mut out = SurdExpression::rational(&x.rational * &y.rational);
    for (d, q) in &y.terms {
        out.add_term(d.clone(), &x.rational * q);
    }
    for (d, q) in &x.terms {
        out.add_term(d.clone(), &y.rational * q);
    }
    for (d1, q1) in &x.terms {
        for (d2, q2) in &y.terms {
            // √d1·√d2 = g·√((d1/g)(d2/g)); coprime squarefree factors stay squarefree.
            let g = d1.gcd(d2);
            let radicand = (d1 / &g) * (d2 / &g);
            out.add_term(radicand, q1 * q2 * BigRational::from_integer(g));
        }
    }
    out
}

fn binary_term(x: &SurdExpression) -> Result<Option<(&BigInt, &BigRational)>> {
    if x.terms.len() > 1 {
        return Err(Error::UnsupportedForm(format!(
            "conjugation needs at most one surd term, got {}",
            x.terms.len()
        )));
    }
    Ok(x.terms.iter().next())
}

/// `r + q√d ↦ r − q√d`.
pub fn conjugate(x: &SurdExpression) -> Result<SurdExpression> {
    binary_term(x)?;
    Ok(SurdExpression {
        rational: x.rational.clone(),
        terms: x.terms.iter().map(|(d, q)| (d.clone(), -q)).collect(),
    })
}

/// `(r + q√d)(r − q√d) = r² − q²·d`.
pub fn norm(x: &SurdExpression) -> Result<BigRational> {
    let r2 = &x.rational * &x.rational;
    Ok(match binary_term(x)? {
        None => r2,
        Some((d, q)) => r2 - q * q * BigRational::from_integer(d.clone()),
    })
}

/// Whether `√r` is irrational.
pub fn is_karani(r: &BigRational) -> Result<bool> {
    if !r.is_positive() {
        return Err(Error::domain(format!(
            "karaṇī test needs a positive rational, got {}",
            format_rational(r)
        )));
    }
    Ok(rational_sqrt(r).is_none())
}

/// `⌊|q|·√d·10^p⌋` with the sign of `q`, or `⌊r·10^p⌋` for the rational part.
fn scaled_floor(x: &SurdExpression, places: u32) -> BigInt {
    let scale = BigInt::from(10).pow(places);
    let r = &x.rational;
    let mut total = (r.numer() * &scale).div_floor(r.denom());
    for (d, q) in &x.terms {
        let num = q.numer().abs();
        let den = q.denom();
        let radicand = (&num * &num * d * &scale * &scale) / (den * den);
        let magnitude = floor_sqrt(&radicand).0;
        if q.is_negative() {
            total -= magnitude;
        } else {
            total += magnitude;
        }
    }
    total
}

/// Decimal approximation with `digits` significant digits, rounded half up.
pub fn evaluate(x: &SurdExpression, digits: u32) -> String {
    let digits = digits.max(1);
    if x.is_zero() {
        return if digits == 1 {
            "0".into()
        } else {
            format!("0.{}", "0".repeat(digits as usize - 1))
        };
    }
    // Each term contributes floor error < 1, so |error| < terms + 1 units.
    let slack = BigInt::from(x.terms.len() as u64 + 1);
    let mut places = digits + 10;
    let approx = loop {
        let v = scaled_floor(x, places);
        if v.abs() >= &slack * BigInt::from(10).pow(digits + 3) {
            break v;
        }
        places += digits + 10;
    };
    let negative = approx.is_negative();
    let magnitude = approx.abs();
    let total_digits = magnitude.to_string().len() as u32;
    let mut drop = total_digits - digits;
    let divisor = BigInt::from(10).pow(drop);
    let mut kept = (&magnitude + &divisor / 2u32) / &divisor;
    if kept.to_string().len() as u32 > digits {
        kept /= 10u32;
        drop += 1;
    }
    let body = if drop >= places {
        let zeros = (drop - places) as usize;
        format!("{kept}{}", "0".repeat(zeros))
    } else {
        let frac = (places - drop) as usize;
        let mut s = kept.to_string();
        if s.len() <= frac {
            s = format!("{}{s}", "0".repeat(frac + 1 - s.len()));
        }
        let split = s.len() - frac;
        format!("{}.{}", &s[..split], &s[split..])
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Parses the surd text grammar:
///
/// ```text
/// expr := term (('+'|'-') term)*
/// term := rational | rational '*'? 'sqrt(' positive-integer ')' | 'sqrt(' positive-integer ')'
/// ```
///
/// A leading sign before the first term is accepted, and whitespace is
/// ignored between tokens.
pub fn parse_surd(text: &str) -> Result<SurdExpression, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    let mut out = SurdExpression::zero();
    let mut first = true;
    loop {
        skip_ws(&chars, &mut pos);
        let mut sign = BigRational::one();
        if first {
            if chars.get(pos) == Some(&'+') {
                pos += 1;
            } else if chars.get(pos) == Some(&'-') && next_is_sqrt(&chars, pos + 1) {
                sign = -sign;
                pos += 1;
            }
        } else {
            match chars.get(pos) {
                Some('+') => pos += 1,
                Some('-') => {
                    sign = -sign;
                    pos += 1;
                }
                None => break,
                Some(_) => return Err(ParseError::new(pos + 1, "expected '+' or '-'")),
            }
        }
        skip_ws(&chars, &mut pos);
        let term = parse_term(&chars, &mut pos)?;
        out = surd_add(&out, &term.scale(&sign));
        first = false;
    }
    Ok(out)
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while chars.get(*pos).is_some_and(|c| c.is_whitespace()) {
        *pos += 1;
    }
}

fn next_is_sqrt(chars: &[char], pos: usize) -> bool {
    let mut p = pos;
    skip_ws(chars, &mut p);
    chars.get(p) == Some(&'s')
}

fn parse_term(chars: &[char], pos: &mut usize) -> Result<SurdExpression, ParseError> {
    if chars.get(*pos) == Some(&'s') {
        let radicand = parse_sqrt(chars, pos)?;
        return make_surd(&BigRational::one(), &radicand).map_err(|_| unreachable_radicand(*pos));
    }
    if chars.get(*pos).is_none() {
        return Err(ParseError::new(*pos + 1, "expected a term"));
    }
    let coefficient = scan_rational(chars, pos)?;
    let mut look = *pos;
    skip_ws(chars, &mut look);
    let has_star = chars.get(look) == Some(&'*');
    if has_star {
        look += 1;
        skip_ws(chars, &mut look);
    }
    if chars.get(look) == Some(&'s') {
        *pos = look;
        let radicand = parse_sqrt(chars, pos)?;
        return make_surd(&coefficient, &radicand).map_err(|_| unreachable_radicand(*pos));
    }
    if has_star {
        return Err(ParseError::new(look + 1, "expected 'sqrt(' after '*'"));
    }
    Ok(SurdExpression::rational(coefficient))
}

fn unreachable_radicand(pos: usize) -> ParseError {
    ParseError::new(pos, "radicand must be a positive integer")
}

fn parse_sqrt(chars: &[char], pos: &mut usize) -> Result<BigInt, ParseError> {
    for expected in "sqrt(".chars() {
        if chars.get(*pos) != Some(&expected) {
            return Err(ParseError::new(*pos + 1, format!("expected '{expected}' of 'sqrt('")));
        }
        *pos += 1;
    }
    skip_ws(chars, pos);
    let radicand_pos = *pos;
    if chars.get(*pos) == Some(&'-') {
        return Err(ParseError::new(
            radicand_pos + 1,
            "negative radicands are not supported",
        ));
    }
    let radicand = scan_integer(chars, pos)?;
    if radicand.is_zero() {
        return Err(ParseError::new(radicand_pos + 1, "radicand must be positive"));
    }
    skip_ws(chars, pos);
    if chars.get(*pos) != Some(&')') {
        return Err(ParseError::new(*pos + 1, "expected ')'"));
    }
    *pos += 1;
    Ok(radicand)
}

impl fmt::Display for SurdExpression {
    /// `r + q1*sqrt(d1) + …`, radicands ascending; zero rational parts are
    /// omitted unless the value is rational.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        if !self.rational.is_zero() || self.terms.is_empty() {
            parts.push((
                self.rational.is_negative(),
                format_rational(&self.rational.abs()),
            ));
        }
        for (d, q) in &self.terms {
            let body = if q.abs().is_one() {
                format!("sqrt({d})")
            } else {
                format!("{}*sqrt({d})", format_rational(&q.abs()))
            };
            parts.push((q.is_negative(), body));
        }
        for (i, (negative, body)) in parts.iter().enumerate() {
            match (i, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for SurdExpression {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_surd(s)
    }
}

impl ToTree for SurdExpression {
    fn to_tree(&self) -> Tree {
        Tree::map()
            .entry("text", self.to_string())
            .entry("rational", format_rational(&self.rational))
            .entry(
                "terms",
                Tree::list(self.terms.iter().map(|(d, q)| {
                    Tree::map()
                        .entry("radicand", d.to_string())
                        .entry("coefficient", format_rational(q))
                })),
            )
            .build()
    }
}

impl Add for &SurdExpression {
    type Output = SurdExpression;
    fn add(self, rhs: Self) -> SurdExpression {
        surd_add(self, rhs)
    }
}

impl Add for SurdExpression {
    type Output = SurdExpression;
    fn add(self, rhs: Self) -> SurdExpression {
        surd_add(&self, &rhs)
    }
}

impl Mul for &SurdExpression {
    type Output = SurdExpression;
    fn mul(self, rhs: Self) -> SurdExpression {
        surd_mul(self, rhs)
    }
}

impl Mul for SurdExpression {
    type Output = SurdExpression;
    fn mul(self, rhs: Self) -> SurdExpression {
        surd_mul(&self, &rhs)
    }
}

impl Neg for &SurdExpression {
    type Output = SurdExpression;
    fn neg(self) -> SurdExpression {
        self.scale(&-BigRational::one())
    }
}

impl Neg for SurdExpression {
    type Output = SurdExpression;
    fn neg(self) -> SurdExpression {
        -&self
    }
}

impl Sub for &SurdExpression {
    type Output = SurdExpression;
    fn sub(self, rhs: Self) -> SurdExpression {
        surd_add(self, &-rhs)
    }
}

impl Sub for SurdExpression {
    type Output = SurdExpression;
    fn sub(self, rhs: Self) -> SurdExpression {
        &self - &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn surd(q: i64, d: i64) -> SurdExpression {
        make_surd(&int(q), &d.into()).unwrap()
    }

    fn p(s: &str) -> SurdExpression {
        parse_surd(s).unwrap()
    }

    #[test]
    fn make_surd_examples() {
        assert_eq!(surd(1, 8).to_string(), "2*sqrt(2)");
        assert_eq!(surd(3, 9), SurdExpression::integer(9));
        assert_eq!(surd(1, 2).to_string(), "sqrt(2)");
        assert!(matches!(make_surd(&int(1), &0.into()), Err(Error::Domain(_))));
        assert!(matches!(make_surd(&int(1), &(-2).into()), Err(Error::Domain(_))));
    }

    #[test]
    fn squarefree_parts_by_trial_division() {
        assert_eq!(squarefree_decompose(&72.into()), (6.into(), 2.into()));
        assert_eq!(squarefree_decompose(&1.into()), (1.into(), 1.into()));
        assert_eq!(squarefree_decompose(&97.into()), (1.into(), 97.into()));
        let big: BigInt = BigInt::from(1u64 << 40) * BigInt::from(1u64 << 40) * 6u32;
        assert_eq!(squarefree_decompose(&big), (BigInt::from(1u64 << 40), 6.into()));
    }

    #[test]
    fn brahmagupta_sum_examples() {
        assert_eq!(brahmagupta_sum(&int(8), &int(2)).unwrap(), Some(int(18)));
        assert_eq!(brahmagupta_sum(&int(3), &int(12)).unwrap(), Some(int(27)));
        assert_eq!(brahmagupta_sum(&int(2), &int(3)).unwrap(), None);
        assert!(brahmagupta_sum(&int(0), &int(3)).is_err());
    }

    #[test]
    fn add_examples() {
        assert_eq!(surd_add(&surd(2, 2), &surd(1, 2)), surd(3, 2));
        assert_eq!(surd_add(&p("1+sqrt(2)"), &p("-1-sqrt(2)")), SurdExpression::zero());
        assert_eq!(surd_add(&surd(1, 2), &surd(1, 3)).to_string(), "sqrt(2) + sqrt(3)");
    }

    #[test]
    fn mul_examples() {
        assert_eq!(surd_mul(&surd(1, 2), &surd(1, 2)), SurdExpression::integer(2));
        assert_eq!(surd_mul(&p("sqrt(2)+1"), &p("sqrt(2)-1")), SurdExpression::integer(1));
        assert_eq!(surd_mul(&p("sqrt(2)+3"), &p("sqrt(2)-3")), SurdExpression::integer(-7));
        assert_eq!(surd_mul(&surd(1, 6), &surd(1, 10)).to_string(), "2*sqrt(15)");
    }

    #[test]
    fn conjugate_and_norm() {
        assert_eq!(conjugate(&p("3+sqrt(2)")).unwrap(), p("3-sqrt(2)"));
        assert_eq!(conjugate(&p("5")).unwrap(), p("5"));
        assert_eq!(conjugate(&p("-1+2*sqrt(3)")).unwrap(), p("-1-2*sqrt(3)"));
        assert_eq!(norm(&p("3+sqrt(2)")).unwrap(), int(7));
        // (3 + 2√2)(3 − 2√2) = 1; the radicand-form product (√8 + 3)(√8 − 3) is its negation
        assert_eq!(norm(&p("sqrt(8)+3")).unwrap(), int(1));
        assert_eq!(surd_mul(&p("sqrt(8)+3"), &p("sqrt(8)-3")), SurdExpression::integer(-1));
        assert_eq!(norm(&p("5")).unwrap(), int(25));
        assert!(matches!(
            norm(&p("sqrt(2)+sqrt(3)")),
            Err(Error::UnsupportedForm(_))
        ));
    }

    #[test]
    fn karani_predicate() {
        assert!(is_karani(&int(2)).unwrap());
        assert!(!is_karani(&int(4)).unwrap());
        assert!(!is_karani(&ratio(9, 4)).unwrap());
        assert!(is_karani(&ratio(9, 2)).unwrap());
        assert!(is_karani(&int(0)).is_err());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate(&surd(1, 2), 5), "1.4142");
        assert_eq!(evaluate(&SurdExpression::integer(3), 5), "3.0000");
        assert_eq!(evaluate(&p("1+sqrt(2)"), 5), "2.4142");
        assert_eq!(evaluate(&p("-sqrt(2)"), 3), "-1.41");
        assert_eq!(evaluate(&p("12345"), 3), "12300");
        assert_eq!(evaluate(&p("1/1000"), 2), "0.0010");
        assert_eq!(evaluate(&p("99999/100000"), 3), "1.00");
        assert_eq!(evaluate(&SurdExpression::zero(), 3), "0.00");
        // 1 + sqrt(2) - 2.41421356 is tiny but nonzero
        assert_eq!(evaluate(&p("1 + sqrt(2) - 241421356/100000000"), 3), "0.00000000237");
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(p("2 * sqrt(8)").to_string(), "4*sqrt(2)");
        assert_eq!(p("1/2sqrt(3) - 1").to_string(), "-1 + 1/2*sqrt(3)");
        assert_eq!(p("-sqrt(5)").to_string(), "-sqrt(5)");
        assert_eq!(p("3 - -1").to_string(), "4");
        assert_eq!(parse_surd("sqrt(0)").unwrap_err().position, 6);
        assert_eq!(parse_surd("sqrt(-2)").unwrap_err().position, 6);
        assert_eq!(parse_surd("1 + ").unwrap_err().position, 5);
        assert_eq!(parse_surd("2*").unwrap_err().position, 3);
        assert_eq!(parse_surd("1 2").unwrap_err().position, 3);
        assert_eq!(parse_surd("sqrt(2").unwrap_err().position, 7);
    }

    #[test]
    fn sqrt_of_rational() {
        assert_eq!(SurdExpression::sqrt_of(&ratio(1, 2)).unwrap().to_string(), "1/2*sqrt(2)");
        assert_eq!(SurdExpression::sqrt_of(&ratio(9, 4)).unwrap(), SurdExpression::rational(ratio(3, 2)));
    }
}
