use std::fmt;

use super::{
    total_matras, weight_string, Family, GanaSlot, Half, Hemistich, Pattern, Syllable, Verse,
    Weight, WeightSource,
};
use crate::report::{ToTree, Tree};

/// Mātrā layout of one hemistich.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Schedule {
    /// Seven gaṇas and a half-gaṇa: 30 mātrās.
    First,
    /// Five gaṇas, a single laghu, a gaṇa and a half-gaṇa: 27 mātrās.
    Second,
    /// Eight gaṇas: 32 mātrās.
    Full,
}

impl Schedule {
    pub fn slots(self) -> &'static [u32] {
        match self {
            Schedule::First => &[4, 4, 4, 4, 4, 4, 4, 2],
            Schedule::Second => &[4, 4, 4, 4, 4, 1, 4, 2],
            Schedule::Full => &[4, 4, 4, 4, 4, 4, 4, 4],
        }
    }

    pub fn total(self) -> u32 {
        self.slots().iter().sum()
    }

    pub fn name(self) -> &'static str {
        match self {
            Schedule::First => "7x4+2",
            Schedule::Second => "5x4+1+4+2",
            Schedule::Full => "8x4",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// Hemistich length.
    Length,
    /// No ja-gaṇa in an odd gaṇa.
    OddJagana,
    /// Sixth gaṇa of a 30-mātrā half is a ja-gaṇa or a nagaṇa-la.
    SixthGana,
    /// Sixth-gaṇa nagaṇa-la: a word starts at its second laghu.
    SixthWordStart,
    /// Seventh-gaṇa nagaṇa-la: a word starts at its first laghu.
    SeventhWordStart,
    /// Fifth-gaṇa nagaṇa-la in a 27-mātrā half: a word starts at its first laghu.
    FifthWordStart,
    /// The sixth slot of a 27-mātrā half is an isolated laghu.
    SingleLaghu,
    BoundarySplit,
}

impl RuleId {
    /// Identifier in Piṅgala's numbering of the āryā sūtras.
    pub fn id(self) -> &'static str {
        match self {
            RuleId::Length => "IV.14",
            RuleId::OddJagana => "IV.15",
            RuleId::SixthGana => "IV.16",
            RuleId::SixthWordStart => "IV.18",
            RuleId::SeventhWordStart => "IV.19",
            RuleId::FifthWordStart => "IV.20",
            RuleId::SingleLaghu => "IV.21",
            RuleId::BoundarySplit => "boundary-split",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// 1-based location of a violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub hemistich: usize,
    pub gana: Option<usize>,
    pub syllable: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    pub rule: RuleId,
    pub position: Position,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segmentation {
    pub schedule: Schedule,
    pub slots: Vec<GanaSlot>,
    pub violations: Vec<Violation>,
}

fn hemistich_number(half: Half) -> usize {
    match half {
        Half::First => 1,
        Half::Second => 2,
    }
}

fn schedule_for(half: Half, family: Family) -> Schedule {
    let [a, b] = family.schedules();
    match half {
        Half::First => a,
        Half::Second => b,
    }
}

/// Groups a hemistich into the family's slots, assigning each syllable to
/// the slot in which it starts. Empty slots are dropped; syllables past the
/// schedule's end go to the last slot.
pub fn segment_ganas(hemistich: &[Syllable], half: Half, family: Family) -> Segmentation {
    let schedule = schedule_for(half, family);
    let sizes = schedule.slots();
    let h = hemistich_number(half);
    let mut bounds = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        acc += s;
        bounds.push(acc);
    }

    let mut groups: Vec<Vec<(usize, Syllable)>> = vec![Vec::new(); sizes.len()];
    let mut violations = Vec::new();
    let mut pos = 0u32;
    for (i, syl) in hemistich.iter().enumerate() {
        let slot = bounds
            .iter()
            .position(|&b| pos < b)
            .unwrap_or(sizes.len() - 1);
        let end = pos + syl.matras();
        if end > bounds[slot] && pos < bounds[slot] && slot + 1 < sizes.len() {
            let single = schedule == Schedule::Second && sizes[slot] == 1;
            let (rule, message) = if single {
                (
                    RuleId::SingleLaghu,
                    format!("gaṇa {} must be a single laghu, found a guru", slot + 1),
                )
            } else {
                (
                    RuleId::BoundarySplit,
                    format!(
                        "syllable {} ({}) crosses the end of gaṇa {} at mātrā {}",
                        i + 1,
                        syl.weight.symbol(),
                        slot + 1,
                        bounds[slot]
                    ),
                )
            };
            violations.push(Violation {
                rule,
                position: Position {
                    hemistich: h,
                    gana: Some(slot + 1),
                    syllable: Some(i + 1),
                },
                message,
            });
        }
        groups[slot].push((i + 1, syl.clone()));
        pos = end;
    }

    let total = total_matras(hemistich);
    if total != schedule.total() {
        violations.push(Violation {
            rule: RuleId::Length,
            position: Position {
                hemistich: h,
                gana: None,
                syllable: None,
            },
            message: format!(
                "hemistich {h} has {total} mātrās, the {} schedule needs {}",
                schedule.name(),
                schedule.total()
            ),
        });
    }

    let slots = groups
        .into_iter()
        .enumerate()
        .filter(|(_, g)| !g.is_empty())
        .map(|(k, g)| {
            let first_syllable = g[0].0;
            let syllables: Vec<Syllable> = g.into_iter().map(|(_, s)| s).collect();
            GanaSlot {
                index: k + 1,
                matra_count: total_matras(&syllables),
                expected_matras: sizes[k],
                pattern: Pattern::classify(&syllables, sizes[k]),
                syllables,
                first_syllable,
            }
        })
        .collect();
    Segmentation {
        schedule,
        slots,
        violations,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Family(Family),
    Invalid,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::Family(f) => f.name(),
            Classification::Invalid => "invalid",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathyaStatus {
    Pathya,
    Vipula,
    Unknown,
}

impl PathyaStatus {
    pub fn name(self) -> &'static str {
        match self {
            PathyaStatus::Pathya => "pathyā",
            PathyaStatus::Vipula => "vipulā",
            PathyaStatus::Unknown => "unknown",
        }
    }
}

pub fn classify_family(matras: (u32, u32)) -> Option<Family> {
    Family::ALL
        .into_iter()
        .find(|f| f.matras() == [matras.0, matras.1])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AryaReport {
    pub hemistich_matras: [u32; 2],
    pub gana_segmentation: [Segmentation; 2],
    pub violations: Vec<Violation>,
    pub word_rules_checked: bool,
    pub caesura_after_third: Option<[bool; 2]>,
    pub classification: Classification,
    /// Family whose mātrā totals the verse matches, regardless of violations.
    pub matched_family: Option<Family>,
    pub pathya_status: PathyaStatus,
    pub notes: Vec<String>,
}

impl AryaReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn slot(seg: &Segmentation, index: usize) -> Option<&GanaSlot> {
    seg.slots.iter().find(|s| s.index == index)
}

fn violation(rule: RuleId, h: usize, s: &GanaSlot, offset: usize, message: String) -> Violation {
    Violation {
        rule,
        position: Position {
            hemistich: h,
            gana: Some(s.index),
            syllable: Some(s.first_syllable + offset),
        },
        message,
    }
}

fn check_word_start(
    out: &mut Vec<Violation>,
    rule: RuleId,
    h: usize,
    s: &GanaSlot,
    offset: usize,
) {
    if s.syllables[offset].word_initial == Some(false) {
        let ordinal = if offset == 0 { "first" } else { "second" };
        out.push(violation(
            rule,
            h,
            s,
            offset,
            format!(
                "gaṇa {} is a nagaṇa-la; a word must start at its {ordinal} laghu",
                s.index
            ),
        ));
    }
}

fn check_half(seg: &Segmentation, h: usize, word_rules: bool, out: &mut Vec<Violation>) {
    for s in &seg.slots {
        if s.index % 2 == 1 && s.pattern == Pattern::LGL {
            out.push(violation(
                RuleId::OddJagana,
                h,
                s,
                0,
                format!("odd gaṇa {} is a ja-gaṇa (lgl)", s.index),
            ));
        }
    }
    let sixth = slot(seg, 6);
    match seg.schedule {
        Schedule::First => {
            if let Some(s) = sixth {
                if !matches!(s.pattern, Pattern::LGL | Pattern::LLLL) {
                    out.push(violation(
                        RuleId::SixthGana,
                        h,
                        s,
                        0,
                        format!("gaṇa 6 is {}, expected lgl or llll", s.weights()),
                    ));
                }
            }
        }
        Schedule::Second => {
            let flagged = out.iter().any(|v| {
                v.rule == RuleId::SingleLaghu
                    && v.position.hemistich == h
                    && v.position.gana == Some(6)
            });
            if let Some(s) = sixth {
                if s.pattern != Pattern::SingleL && !flagged {
                    out.push(violation(
                        RuleId::SingleLaghu,
                        h,
                        s,
                        0,
                        format!("gaṇa 6 is {}, expected a single laghu", s.weights()),
                    ));
                }
            }
        }
        Schedule::Full => {}
    }
    if !word_rules {
        return;
    }
    if seg.schedule == Schedule::First {
        if let Some(s) = sixth.filter(|s| s.pattern == Pattern::LLLL) {
            check_word_start(out, RuleId::SixthWordStart, h, s, 1);
        }
    }
    if let Some(s) = slot(seg, 7).filter(|s| s.pattern == Pattern::LLLL) {
        check_word_start(out, RuleId::SeventhWordStart, h, s, 0);
    }
    if seg.schedule == Schedule::Second {
        if let Some(s) = slot(seg, 5).filter(|s| s.pattern == Pattern::LLLL) {
            check_word_start(out, RuleId::FifthWordStart, h, s, 0);
        }
    }
}

fn promote_final(h: &mut Hemistich, number: usize, notes: &mut Vec<String>) {
    if let Some(last) = h.last_mut() {
        if last.weight == Weight::Light {
            last.weight = Weight::Heavy;
            notes.push(format!("hemistich {number}: final light syllable counted heavy"));
        }
    }
}

fn half_gana_notes(seg: &Segmentation, number: usize, notes: &mut Vec<String>) {
    for s in &seg.slots {
        if s.pattern == Pattern::HalfLL {
            notes.push(format!("hemistich {number}: half-gaṇa {} is two laghus", s.index));
        }
    }
}

fn boundaries_known(h: &[Syllable]) -> bool {
    h.iter().all(|s| s.word_initial.is_some())
}

/// By hemistich, then gaṇa; whole-hemistich violations last.
fn sort_violations(v: &mut [Violation]) {
    v.sort_by_key(|v| {
        let p = v.position;
        (p.hemistich, p.gana.is_none(), p.gana, p.syllable, v.rule)
    });
}

/// Validates a verse against the āryā family. The family is chosen from the
/// hemistich mātrā totals; totals matching no family are checked against the
/// āryā schedules.
pub fn validate_arya(verse: &Verse) -> AryaReport {
    let mut notes = Vec::new();
    let mut halves: [Hemistich; 2] = verse.hemistichs.clone();
    if verse.source == WeightSource::Iast {
        for (i, h) in halves.iter_mut().enumerate() {
            promote_final(h, i + 1, &mut notes);
        }
    }

    let matras = [total_matras(&halves[0]), total_matras(&halves[1])];
    let matched = classify_family((matras[0], matras[1]));
    let family = matched.unwrap_or(Family::Arya);
    let word_rules = verse.boundaries_known();

    let segs = [
        segment_ganas(&halves[0], Half::First, family),
        segment_ganas(&halves[1], Half::Second, family),
    ];
    let mut violations = Vec::new();
    for (i, seg) in segs.iter().enumerate() {
        violations.extend(seg.violations.iter().cloned());
        check_half(seg, i + 1, word_rules, &mut violations);
        half_gana_notes(seg, i + 1, &mut notes);
    }
    sort_violations(&mut violations);

    let caesura = word_rules.then(|| {
        segs.each_ref().map(|seg| {
            slot(seg, 4).is_some_and(|s| s.syllables[0].word_initial == Some(true))
        })
    });
    let pathya_status = match caesura {
        Some([true, true]) => PathyaStatus::Pathya,
        Some(_) => PathyaStatus::Vipula,
        None => PathyaStatus::Unknown,
    };
    let classification = if violations.is_empty() {
        Classification::Family(family)
    } else {
        Classification::Invalid
    };
    AryaReport {
        hemistich_matras: matras,
        gana_segmentation: segs,
        violations,
        word_rules_checked: word_rules,
        caesura_after_third: caesura,
        classification,
        matched_family: matched,
        pathya_status,
        notes,
    }
}

/// Checks of a single hemistich against one half of the āryā.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HemistichReport {
    pub half: Half,
    pub matras: u32,
    pub segmentation: Segmentation,
    pub violations: Vec<Violation>,
    pub word_rules_checked: bool,
    pub notes: Vec<String>,
}

impl HemistichReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Validates one hemistich as the given half of an āryā, applying the same
/// per-half rules as [`validate_arya`].
pub fn validate_hemistich(
    hemistich: &[Syllable],
    half: Half,
    source: WeightSource,
) -> HemistichReport {
    let number = hemistich_number(half);
    let mut notes = Vec::new();
    let mut h = hemistich.to_vec();
    if source == WeightSource::Iast {
        promote_final(&mut h, number, &mut notes);
    }
    let word_rules = boundaries_known(&h);
    let seg = segment_ganas(&h, half, Family::Arya);
    let mut violations = seg.violations.clone();
    check_half(&seg, number, word_rules, &mut violations);
    half_gana_notes(&seg, number, &mut notes);
    sort_violations(&mut violations);
    HemistichReport {
        half,
        matras: total_matras(&h),
        segmentation: seg,
        violations,
        word_rules_checked: word_rules,
        notes,
    }
}

impl ToTree for GanaSlot {
    fn to_tree(&self) -> Tree {
        Tree::map()
            .entry("index", self.index.to_string())
            .entry("weights", self.weights())
            .entry("pattern", self.pattern.name())
            .entry("matras", self.matra_count.to_string())
            .entry("expected_matras", self.expected_matras.to_string())
            .build()
    }
}

impl ToTree for Violation {
    fn to_tree(&self) -> Tree {
        let opt = |v: Option<usize>| v.map(|v| v.to_string());
        Tree::map()
            .entry("rule", self.rule.id())
            .entry("hemistich", self.position.hemistich.to_string())
            .entry("gana", opt(self.position.gana))
            .entry("syllable", opt(self.position.syllable))
            .entry("message", self.message.as_str())
            .build()
    }
}

impl ToTree for Segmentation {
    fn to_tree(&self) -> Tree {
        Tree::map()
            .entry("schedule", self.schedule.name())
            .entry("weights", segmented_weights(self))
            .entry("ganas", Tree::list(self.slots.iter().map(ToTree::to_tree)))
            .build()
    }
}

impl ToTree for HemistichReport {
    fn to_tree(&self) -> Tree {
        Tree::map()
            .entry(
                "half",
                match self.half {
                    Half::First => "first",
                    Half::Second => "second",
                },
            )
            .entry("valid", self.is_valid())
            .entry("matras", self.matras.to_string())
            .entry("word_rules_checked", self.word_rules_checked)
            .entry("violations", Tree::list(self.violations.iter().map(ToTree::to_tree)))
            .entry("segmentation", self.segmentation.to_tree())
            .entry("notes", Tree::list(self.notes.iter().map(String::as_str)))
            .build()
    }
}

impl ToTree for AryaReport {
    fn to_tree(&self) -> Tree {
        let halves = self.gana_segmentation.iter().map(ToTree::to_tree);
        Tree::map()
            .entry("classification", self.classification.name())
            .entry("matched_family", self.matched_family.map(Family::name))
            .entry(
                "hemistich_matras",
                Tree::list(self.hemistich_matras.map(|m| m.to_string())),
            )
            .entry("word_rules_checked", self.word_rules_checked)
            .entry(
                "caesura_after_third",
                self.caesura_after_third.map(|c| Tree::list(c.map(Tree::from))),
            )
            .entry("pathya_status", self.pathya_status.name())
            .entry("violations", Tree::list(self.violations.iter().map(ToTree::to_tree)))
            .entry("gana_segmentation", Tree::list(halves))
            .entry("notes", Tree::list(self.notes.iter().map(String::as_str)))
            .build()
    }
}

/// Weight string of a hemistich with slot boundaries as spaces.
pub fn segmented_weights(seg: &Segmentation) -> String {
    seg.slots
        .iter()
        .map(|s| weight_string(&s.syllables))
        .collect::<Vec<_>>()
        .join(" ")
}
