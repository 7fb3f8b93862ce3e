//! Direct weight input: `l`/`g` per syllable, `.` before a word-initial
//! syllable, `|` between hemistichs.

use super::{Hemistich, Syllable, Weight};
use crate::error::ParseError;

pub fn parse_lg(text: &str) -> Result<[Hemistich; 2], ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut end = chars.len();
    while end > 0 && chars[end - 1].is_whitespace() {
        end -= 1;
    }
    if end >= 2 && chars[end - 1] == '|' && chars[end - 2] == '|' {
        end -= 2;
    }
    let marked = chars[..end].contains(&'.');

    let mut halves: Vec<Hemistich> = vec![Vec::new()];
    let mut boundary = true;
    for (i, &c) in chars[..end].iter().enumerate() {
        let weight = match c {
            'l' | 'L' => Weight::Light,
            'g' | 'G' => Weight::Heavy,
            '.' => {
                boundary = true;
                continue;
            }
            '|' => {
                if halves.len() == 2 {
                    return Err(ParseError::new(i + 1, "more than one '|'"));
                }
                if halves[0].is_empty() {
                    return Err(ParseError::new(i + 1, "empty first hemistich"));
                }
                halves.push(Vec::new());
                boundary = true;
                continue;
            }
            c if c.is_whitespace() => continue,
            c => {
                return Err(ParseError::new(
                    i + 1,
                    format!("unexpected character {c:?}, expected 'l', 'g', '.' or '|'"),
                ))
            }
        };
        let current = halves.last_mut().expect("nonempty");
        current.push(Syllable {
            weight,
            source_span: None,
            word_initial: marked.then_some(boundary),
        });
        boundary = false;
    }
    match <[Hemistich; 2]>::try_from(halves) {
        Ok([a, b]) if !b.is_empty() => Ok([a, b]),
        Ok(_) => Err(ParseError::new(end + 1, "empty second hemistich")),
        Err(_) => Err(ParseError::new(end + 1, "missing '|' between hemistichs")),
    }
}

/// Canonical text form: no spaces inside a hemistich, ` | ` between them.
pub fn render_lg(hemistichs: &[Hemistich; 2]) -> String {
    let render = |h: &Hemistich| {
        let mut out = String::with_capacity(h.len() * 2);
        for (i, s) in h.iter().enumerate() {
            if i > 0 && s.word_initial == Some(true) {
                out.push('.');
            }
            out.push(s.weight.symbol());
        }
        out
    };
    format!("{} | {}", render(&hemistichs[0]), render(&hemistichs[1]))
}
