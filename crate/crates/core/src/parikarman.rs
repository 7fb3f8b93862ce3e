//! Elementary identities on two quantities.
//!
//! *Saṅkramaṇa* recovers two quantities from their sum and difference;
//! *viṣamakarman* recovers them from their difference and the difference of
//! their squares, by first dividing to get the sum. Āryabhaṭa's two verses
//! give the product from the sum and the sum of squares, and the pair from
//! the product and the difference, the latter through the radicand
//! `2²·ab + (a−b)² = (a+b)²`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{floor_sqrt, format_rational, rational_sqrt};

/// Two quantities recovered from combinations of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair {
    pub first: BigRational,
    pub second: BigRational,
}

impl Pair {
    pub fn new(first: BigRational, second: BigRational) -> Self {
        Self { first, second }
    }
}

impl std::fmt::Display for Pair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {})",
            format_rational(&self.first),
            format_rational(&self.second)
        )
    }
}

fn half(x: BigRational) -> BigRational {
    x / BigRational::from_integer(2.into())
}

/// `(a, b)` with `a + b = sum` and `a − b = diff`.
///
/// `first ≥ second` whenever `diff ≥ 0`.
pub fn sankramana(sum: &BigRational, diff: &BigRational) -> Pair {
    Pair::new(half(sum + diff), half(sum - diff))
}

/// `(a, b)` with `a − b = diff` and `a² − b² = square_diff`.
pub fn visamakarman(diff: &BigRational, square_diff: &BigRational) -> Result<Pair> {
    if diff.is_zero() {
        return Err(if square_diff.is_zero() {
            Error::Underdetermined("difference and difference of squares are both zero".into())
        } else {
            Error::Inconsistent(format!(
                "difference is zero but difference of squares is {}",
                format_rational(square_diff)
            ))
        });
    }
    let sum = square_diff / diff;
    Ok(sankramana(&sum, diff))
}

/// `ab = ((a+b)² − (a²+b²)) / 2`.
pub fn product_from_sum(sum: &BigRational, sum_of_squares: &BigRational) -> BigRational {
    half(sum * sum - sum_of_squares)
}

/// `(a, b)` with `ab = product` and `a − b = diff`, via
/// `a, b = ½(√(2²·ab + (a−b)²) ± (a−b))`.
///
/// The principal (nonnegative) root is taken, so the result has
/// `first + second ≥ 0`. When the original pair had a negative sum the
/// recovered pair is `(−b, −a)`, which has the same product and difference.
pub fn pair_from_product_and_diff(product: &BigRational, diff: &BigRational) -> Result<Pair> {
    let two = BigRational::from_integer(2.into());
    let radicand = &two * &two * product + diff * diff;
    if radicand.is_negative() {
        return Err(Error::NoRealPair(format_rational(&radicand)));
    }
    let root =
        rational_sqrt(&radicand).ok_or_else(|| Error::NotRationalPair(format_rational(&radicand)))?;
    Ok(Pair::new(half(&root + diff), half(root - diff)))
}

/// `(⌊√n⌋, whether the root is exact)`.
pub fn integer_sqrt(n: &BigInt) -> Result<(BigInt, bool)> {
    if n.is_negative() {
        return Err(Error::domain(format!("square root of negative integer {n}")));
    }
    Ok(floor_sqrt(n))
}
