//! Syllable weights from IAST text.
//!
//! A syllable is heavy when its vowel is long (`ā ī ū ṝ ḹ e ai o au`), when
//! anusvāra or visarga follows the vowel, or when two or more consonants
//! follow before the next vowel of the hemistich. Clusters are counted across
//! word boundaries. Aspirates (`kh`, `gh`, …) are one consonant.

use std::ops::Range;

use super::{Hemistich, Syllable, Weight};
use crate::error::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Vowel { long: bool },
    Consonant,
    /// anusvāra or visarga
    Mark,
    /// whitespace or `-`
    Boundary,
}

#[derive(Debug, Clone)]
struct Token {
    kind: Kind,
    span: Range<usize>,
}

const ASPIRABLE: &[char] = &['k', 'g', 'c', 'j', 'ṭ', 'ḍ', 't', 'd', 'p', 'b'];
const CONSONANTS: &[char] = &[
    'k', 'g', 'ṅ', 'c', 'j', 'ñ', 'ṭ', 'ḍ', 'ṇ', 't', 'd', 'n', 'p', 'b', 'm', 'y', 'r', 'l', 'v',
    'ś', 'ṣ', 's', 'h',
];

fn lower(c: char) -> char {
    let mut it = c.to_lowercase();
    match (it.next(), it.next()) {
        (Some(l), None) => l,
        _ => c,
    }
}

fn tokenize(chars: &[char], range: Range<usize>) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut i = range.start;
    while i < range.end {
        let c = chars[i];
        let next = (i + 1 < range.end).then(|| chars[i + 1]);
        let (kind, len) = match c {
            'a' if matches!(next, Some('i') | Some('u')) => (Kind::Vowel { long: true }, 2),
            'a' | 'i' | 'u' | 'ṛ' | 'ḷ' => (Kind::Vowel { long: false }, 1),
            'ā' | 'ī' | 'ū' | 'ṝ' | 'ḹ' | 'e' | 'o' => (Kind::Vowel { long: true }, 1),
            'ṃ' | 'ṁ' | 'ḥ' => (Kind::Mark, 1),
            c if ASPIRABLE.contains(&c) && next == Some('h') => (Kind::Consonant, 2),
            c if CONSONANTS.contains(&c) => (Kind::Consonant, 1),
            '-' => (Kind::Boundary, 1),
            c if c.is_whitespace() => (Kind::Boundary, 1),
            '\'' | '’' | 'ʼ' => {
                i += 1;
                continue;
            }
            '\u{0300}'..='\u{036f}' => {
                return Err(ParseError::new(
                    i + 1,
                    "combining mark; input must use composed characters",
                ))
            }
            c => return Err(ParseError::new(i + 1, format!("unrecognized character {c:?}"))),
        };
        tokens.push(Token {
            kind,
            span: i..i + len,
        });
        i += len;
    }
    Ok(tokens)
}

fn syllabify(tokens: &[Token], at: usize) -> Result<Hemistich, ParseError> {
    let vowels: Vec<usize> = tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| matches!(t.kind, Kind::Vowel { .. }))
        .map(|(i, _)| i)
        .collect();
    if vowels.is_empty() {
        return Err(ParseError::new(at, "hemistich has no syllables"));
    }
    let mut out = Vec::with_capacity(vowels.len());
    let mut start = tokens
        .iter()
        .position(|t| t.kind != Kind::Boundary)
        .expect("a vowel exists");
    for (j, &v) in vowels.iter().enumerate() {
        let next_vowel = vowels.get(j + 1).copied().unwrap_or(tokens.len());
        let between = &tokens[v + 1..next_vowel];
        let consonants: Vec<usize> = between
            .iter()
            .enumerate()
            .filter(|(_, t)| t.kind == Kind::Consonant)
            .map(|(i, _)| v + 1 + i)
            .collect();
        let marked = tokens.get(v + 1).is_some_and(|t| t.kind == Kind::Mark);
        let long = matches!(tokens[v].kind, Kind::Vowel { long: true });
        let heavy = long || marked || consonants.len() >= 2;

        // Coda: marks and, before a cluster, its first member. The last
        // syllable keeps everything up to the end.
        let end = if j + 1 == vowels.len() {
            tokens
                .iter()
                .rposition(|t| t.kind != Kind::Boundary)
                .expect("nonempty")
        } else if consonants.len() >= 2 {
            consonants[0]
        } else {
            between
                .iter()
                .rposition(|t| t.kind == Kind::Mark)
                .map_or(v, |i| v + 1 + i)
        };
        let word_initial = j == 0
            || tokens[vowels[j - 1] + 1..v]
                .iter()
                .any(|t| t.kind == Kind::Boundary);
        let mut s = start;
        while tokens[s].kind == Kind::Boundary {
            s += 1;
        }
        out.push(Syllable {
            weight: if heavy { Weight::Heavy } else { Weight::Light },
            source_span: Some(tokens[s].span.start..tokens[end].span.end),
            word_initial: Some(word_initial),
        });
        start = end + 1;
    }
    Ok(out)
}

/// Weighs each `|`-separated hemistich of `text` (one or two; a trailing
/// `||` is allowed). Weights are as scanned, with no end-of-line promotion.
pub fn weigh_iast(text: &str) -> Result<Vec<Hemistich>, ParseError> {
    let chars: Vec<char> = text.chars().map(lower).collect();
    let mut end = chars.len();
    while end > 0 && chars[end - 1].is_whitespace() {
        end -= 1;
    }
    if end >= 2 && chars[end - 1] == '|' && chars[end - 2] == '|' {
        end -= 2;
    }
    let mut ranges = Vec::new();
    let mut from = 0;
    for (i, &c) in chars[..end].iter().enumerate() {
        if c == '|' {
            if ranges.len() == 1 {
                return Err(ParseError::new(i + 1, "more than one '|'"));
            }
            ranges.push(from..i);
            from = i + 1;
        }
    }
    ranges.push(from..end);
    ranges
        .into_iter()
        .map(|r| {
            let at = r.start + 1;
            let tokens = tokenize(&chars, r)?;
            syllabify(&tokens, at)
        })
        .collect()
}
