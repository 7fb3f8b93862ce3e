//! Scansion and validation of the āryā family of mātrā metres.
//!
//! A verse is two hemistichs of syllables, each light (`l`, one mātrā) or
//! heavy (`g`, two mātrās). Weights come either from direct `l`/`g` input
//! ([`parse_lg`]) or from IAST text ([`weigh_iast`]). [`validate_arya`] groups
//! each hemistich into four-mātrā gaṇas and checks the classical rules.

mod arya;
mod iast;
mod lg;

use std::fmt;
use std::ops::Range;

pub use arya::{
    classify_family, segment_ganas, validate_arya, validate_hemistich, AryaReport, Classification,
    HemistichReport, PathyaStatus,
    segmented_weights, Position, RuleId, Schedule, Segmentation, Violation,
};
pub use iast::weigh_iast;
pub use lg::{parse_lg, render_lg};

use crate::error::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    Light,
    Heavy,
}

impl Weight {
    pub fn matras(self) -> u32 {
        match self {
            Weight::Light => 1,
            Weight::Heavy => 2,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Weight::Light => 'l',
            Weight::Heavy => 'g',
        }
    }

    pub fn flipped(self) -> Weight {
        match self {
            Weight::Light => Weight::Heavy,
            Weight::Heavy => Weight::Light,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub weight: Weight,
    /// Character range (0-based, end exclusive) in the IAST source.
    pub source_span: Option<Range<usize>>,
    /// `None` when word boundaries were not supplied.
    pub word_initial: Option<bool>,
}

impl Syllable {
    pub fn new(weight: Weight) -> Self {
        Self {
            weight,
            source_span: None,
            word_initial: None,
        }
    }

    pub fn matras(&self) -> u32 {
        self.weight.matras()
    }
}

pub type Hemistich = Vec<Syllable>;

/// Where the syllable weights came from. IAST verses get the final-syllable
/// promotion; direct weights are taken as written.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightSource {
    Lg,
    Iast,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verse {
    pub hemistichs: [Hemistich; 2],
    pub source: WeightSource,
}

impl Verse {
    pub fn new(first: Hemistich, second: Hemistich, source: WeightSource) -> Self {
        Self {
            hemistichs: [first, second],
            source,
        }
    }

    pub fn from_lg(text: &str) -> Result<Self, ParseError> {
        let [a, b] = parse_lg(text)?;
        Ok(Self::new(a, b, WeightSource::Lg))
    }

    /// Requires exactly two hemistichs separated by `|`.
    pub fn from_iast(text: &str) -> Result<Self, ParseError> {
        let mut halves = weigh_iast(text)?;
        if halves.len() != 2 {
            return Err(ParseError::new(
                text.chars().count() + 1,
                "expected two hemistichs separated by '|'",
            ));
        }
        let second = halves.pop().expect("two halves");
        let first = halves.pop().expect("two halves");
        Ok(Self::new(first, second, WeightSource::Iast))
    }

    /// True when every syllable carries a word-initial flag.
    pub fn boundaries_known(&self) -> bool {
        self.hemistichs
            .iter()
            .flatten()
            .all(|s| s.word_initial.is_some())
    }

    pub fn matras(&self) -> [u32; 2] {
        [total_matras(&self.hemistichs[0]), total_matras(&self.hemistichs[1])]
    }
}

pub fn total_matras(syllables: &[Syllable]) -> u32 {
    syllables.iter().map(Syllable::matras).sum()
}

/// `l`/`g` string of a syllable run.
pub fn weight_string(syllables: &[Syllable]) -> String {
    syllables.iter().map(|s| s.weight.symbol()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Half {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Arya,
    Giti,
    Upagiti,
    Udgiti,
    Aryagiti,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Arya,
        Family::Giti,
        Family::Upagiti,
        Family::Udgiti,
        Family::Aryagiti,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Arya => "āryā",
            Family::Giti => "gīti",
            Family::Upagiti => "upagīti",
            Family::Udgiti => "udgīti",
            Family::Aryagiti => "āryāgīti",
        }
    }

    /// Segmentation schedule of each hemistich.
    pub fn schedules(self) -> [Schedule; 2] {
        use Schedule::*;
        match self {
            Family::Arya => [First, Second],
            Family::Giti => [First, First],
            Family::Upagiti => [Second, Second],
            Family::Udgiti => [Second, First],
            Family::Aryagiti => [Full, Full],
        }
    }

    pub fn matras(self) -> [u32; 2] {
        let [a, b] = self.schedules();
        [a.total(), b.total()]
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    GG,
    /// ja-gaṇa
    LGL,
    GLL,
    LLG,
    /// nagaṇa-la
    LLLL,
    HalfG,
    HalfLL,
    SingleL,
    Irregular,
}

impl Pattern {
    /// Names a syllable run occupying a slot of `size` mātrās.
    pub fn classify(syllables: &[Syllable], size: u32) -> Pattern {
        match (weight_string(syllables).as_str(), size) {
            ("gg", 4) => Pattern::GG,
            ("lgl", 4) => Pattern::LGL,
            ("gll", 4) => Pattern::GLL,
            ("llg", 4) => Pattern::LLG,
            ("llll", 4) => Pattern::LLLL,
            ("g", 2) => Pattern::HalfG,
            ("ll", 2) => Pattern::HalfLL,
            ("l", 1) => Pattern::SingleL,
            _ => Pattern::Irregular,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::GG => "gg",
            Pattern::LGL => "lgl",
            Pattern::GLL => "gll",
            Pattern::LLG => "llg",
            Pattern::LLLL => "llll",
            Pattern::HalfG => "half-g",
            Pattern::HalfLL => "half-ll",
            Pattern::SingleL => "single-l",
            Pattern::Irregular => "irregular",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GanaSlot {
    /// 1-based within the hemistich.
    pub index: usize,
    pub syllables: Vec<Syllable>,
    pub matra_count: u32,
    /// Mātrās the schedule reserves for this slot.
    pub expected_matras: u32,
    pub pattern: Pattern,
    /// 1-based index of the slot's first syllable within the hemistich.
    pub first_syllable: usize,
}

impl GanaSlot {
    pub fn weights(&self) -> String {
        weight_string(&self.syllables)
    }
}
