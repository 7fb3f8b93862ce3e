//! Parsing and formatting helpers for exact rationals and integer squares.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// `⌊√n⌋` for a nonnegative `n`, and whether it is exact.
pub(crate) fn floor_sqrt(n: &BigInt) -> (BigInt, bool) {
    debug_assert!(!n.is_negative());
    let root = n.sqrt();
    let exact = &root * &root == *n;
    (root, exact)
}

/// The exact square root of `n` when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    match floor_sqrt(n) {
        (root, true) => Some(root),
        _ => None,
    }
}

/// The nonnegative rational `z` with `z² = r`, if one exists.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = exact_sqrt(r.numer())?;
    let den = exact_sqrt(r.denom())?;
    Some(BigRational::new(num, den))
}

pub fn is_integral(r: &BigRational) -> bool {
    r.denom().is_one()
}

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Renders `p` or `p/q` in lowest terms.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Reads a decimal integer starting at `chars[*pos]`, with an optional
/// leading '-'. Advances `pos` past the digits.
pub(crate) fn scan_integer(chars: &[char], pos: &mut usize) -> Result<BigInt, ParseError> {
    let start = *pos;
    let negative = chars.get(*pos) == Some(&'-');
    if negative {
        *pos += 1;
    }
    let digits_start = *pos;
    while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
        *pos += 1;
    }
    if *pos == digits_start {
        return Err(ParseError::new(*pos + 1, "expected a decimal integer"));
    }
    let text: String = chars[start..*pos].iter().collect();
    Ok(text.parse().expect("validated digits"))
}

/// Reads `p` or `p/q` starting at `chars[*pos]`.
pub(crate) fn scan_rational(chars: &[char], pos: &mut usize) -> Result<BigRational, ParseError> {
    let numer = scan_integer(chars, pos)?;
    if chars.get(*pos) == Some(&'/') {
        *pos += 1;
        let den_pos = *pos;
        if chars.get(*pos) == Some(&'-') {
            return Err(ParseError::new(den_pos + 1, "denominator must be positive"));
        }
        let denom = scan_integer(chars, pos)?;
        if denom.is_zero() {
            return Err(ParseError::new(den_pos + 1, "zero denominator"));
        }
        Ok(BigRational::new(numer, denom))
    } else {
        Ok(BigRational::from_integer(numer))
    }
}

/// Parses a whole string as `p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<BigRational, ParseError> {
    let chars: Vec<char> = text.trim().chars().collect();
    let mut pos = 0;
    let value = scan_rational(&chars, &mut pos)?;
    if pos != chars.len() {
        return Err(ParseError::new(pos + 1, "unexpected trailing input"));
    }
    Ok(value)
}

/// Parses a whole string as a decimal integer.
pub fn parse_integer(text: &str) -> Result<BigInt, ParseError> {
    let chars: Vec<char> = text.trim().chars().collect();
    let mut pos = 0;
    let value = scan_integer(&chars, &mut pos)?;
    if pos != chars.len() {
        return Err(ParseError::new(pos + 1, "unexpected trailing input"));
    }
    Ok(value)
}
