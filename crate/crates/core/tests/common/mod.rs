//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's arithmetic helpers.
#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

/// `⌊√v⌋` by float estimate and integer correction.
pub fn isqrt_i128(v: i128) -> i128 {
    assert!(v >= 0);
    let mut r = (v as f64).sqrt() as i128;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

pub fn square_root_i128(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let r = isqrt_i128(v);
    (r * r == v).then_some(r)
}

/// Every `(a, b, k)` with `0 ≤ a ≤ a_max`, `b ≥ 0`, `b² = n·a² + k`.
pub fn brute_solutions(n: i64, k: i64, a_max: i64) -> Vec<(i64, i64, i64)> {
    (0..=a_max)
        .filter_map(|a| {
            let v = n as i128 * (a as i128) * (a as i128) + k as i128;
            square_root_i128(v).map(|b| (a, b as i64, k))
        })
        .collect()
}

pub fn is_perfect_square(n: i64) -> bool {
    n >= 0 && square_root_i128(n as i128).is_some()
}

/// `⌊√n⌋` for a nonnegative `BigInt` by Newton iteration from above.
pub fn newton_isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    if n.is_zero() {
        return BigInt::zero();
    }
    let bits = n.bits();
    let mut x = BigInt::one() << ((bits / 2) + 1);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// `⌊x·10^places⌋` for `x = Σ cᵢ·√dᵢ + r` with small integer data, where
/// `terms` holds `(d, c_numer, c_denom)` and the rational part is
/// `r_numer / r_denom`.
pub fn fixed_point_value(
    rational: (i64, i64),
    terms: &[(i64, i64, i64)],
    places: u32,
) -> BigInt {
    let scale = BigInt::from(10).pow(places);
    let mut total = BigInt::from(rational.0) * &scale / BigInt::from(rational.1);
    for &(d, cn, cd) in terms {
        let root = newton_isqrt(&(BigInt::from(d) * &scale * &scale));
        total += root * BigInt::from(cn) / BigInt::from(cd);
    }
    total
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Corpus verse names, in citation order.
pub const CORPUS: [&str; 7] = [
    "bss_12_1",
    "bss_18_65",
    "bss_18_66",
    "bss_18_73",
    "bss_18_100",
    "abh_2_23",
    "abh_2_24",
];

pub fn corpus_text(name: &str) -> String {
    std::fs::read_to_string(corpus_dir().join(format!("{name}.txt")))
        .unwrap_or_else(|e| panic!("reading corpus verse {name}: {e}"))
}

/// Hand scansion of each corpus verse, gaṇa by gaṇa, with the final
/// syllable of each hemistich counted heavy.
pub fn hand_scan(name: &str) -> [&'static str; 2] {
    match name {
        "bss_12_1" => ["llg lgl gg gll gg lgl gg g", "gg gll gg gg gll l llg g"],
        "bss_18_65" => ["gg lgl gg llll gg llll gg g", "gll gll llg lgl gg l llg g"],
        "bss_18_66" => ["gll gg llg gg gg l llg g", "gg lgl llg gg gg l gg g"],
        "bss_18_73" => ["gg llg gg gll gll lgl gll g", "llg lgl gg llg llg l gll g"],
        "bss_18_100" => ["gll gll llg gg llg lgl gg g", "gg lgl gg llg gg l llg g"],
        "abh_2_23" => ["gg gll gg lgl gg lgl gg g", "gg llg gg gg llg l gg g"],
        "abh_2_24" => ["llll gg gg gll gg lgl gg g", "gll gg gg gll gg l gll g"],
        other => panic!("no hand scan for {other}"),
    }
}

/// Mātrā total of a hand-scan string.
pub fn hand_matras(scan: &str) -> u32 {
    scan.chars()
        .map(|c| match c {
            'l' => 1,
            'g' => 2,
            _ => 0,
        })
        .sum()
}

const ODD: &[&str] = &["gg", "gll", "llg", "llll"];
const EVEN: &[&str] = &["gg", "lgl", "gll", "llg", "llll"];
const HALF: &[&str] = &["g", "ll"];

/// A hemistich built slot by slot from the patterns each position allows.
pub fn valid_half(rng: &mut impl Rng, first: bool) -> String {
    let mut slots = Vec::new();
    for i in 1..=7 {
        let choice = match i {
            6 if first => *["lgl", "llll"].choose(rng).unwrap(),
            6 => "l",
            i if i % 2 == 1 => *ODD.choose(rng).unwrap(),
            _ => *EVEN.choose(rng).unwrap(),
        };
        slots.push(choice);
    }
    slots.push(HALF.choose(rng).unwrap());
    slots.join(" ")
}

pub fn valid_arya(rng: &mut impl Rng) -> String {
    format!("{} | {}", valid_half(rng, true), valid_half(rng, false))
}
