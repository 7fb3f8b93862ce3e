use ganita::prosody::{AryaReport, Half, HemistichReport, Segmentation, Violation};

fn gana_table(out: &mut String, number: usize, matras: u32, seg: &Segmentation) {
    out.push_str(&format!(
        "hemistich {number} ({matras} mātrās, schedule {})\n",
        seg.schedule.name()
    ));
    {
        let rows: Vec<[String; 4]> = seg
            .slots
            .iter()
            .map(|s| {
                [
                    s.index.to_string(),
                    s.weights(),
                    s.pattern.name().to_string(),
                    format!("{}/{}", s.matra_count, s.expected_matras),
                ]
            })
            .collect();
        let header = ["gaṇa", "weights", "pattern", "mātrās"].map(String::from);
        let mut widths = [0usize; 4];
        for row in std::iter::once(&header).chain(&rows) {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        for row in std::iter::once(&header).chain(&rows) {
            let cells: Vec<String> = row
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            out.push_str(&format!("  {}\n", cells.join("  ").trim_end()));
        }
    }
}

fn violation_lines(out: &mut String, violations: &[Violation]) {
    if violations.is_empty() {
        out.push_str("violations: none\n");
    } else {
        out.push_str("violations:\n");
        for v in violations {
            let mut at = format!("hemistich {}", v.position.hemistich);
            if let Some(g) = v.position.gana {
                at.push_str(&format!(", gaṇa {g}"));
            }
            if let Some(s) = v.position.syllable {
                at.push_str(&format!(", syllable {s}"));
            }
            out.push_str(&format!("  - {} at {at}: {}\n", v.rule.id(), v.message));
        }
    }
}

/// Aligned gaṇa table followed by violations and verdicts.
pub fn render(report: &AryaReport) -> String {
    let mut out = String::new();
    for (h, seg) in report.gana_segmentation.iter().enumerate() {
        gana_table(&mut out, h + 1, report.hemistich_matras[h], seg);
    }
    violation_lines(&mut out, &report.violations);
    let family = report.matched_family.map_or("none", |f| f.name());
    let caesura = match report.caesura_after_third {
        Some([a, b]) => format!("{} {}", yes_no(a), yes_no(b)),
        None => "unknown".into(),
    };
    out.push_str(&format!("classification: {}\n", report.classification));
    out.push_str(&format!("matched family: {family}\n"));
    out.push_str(&format!("word rules checked: {}\n", yes_no(report.word_rules_checked)));
    out.push_str(&format!("caesura after third gaṇa: {caesura}\n"));
    out.push_str(&format!("pathyā status: {}\n", report.pathya_status.name()));
    out
}

pub fn render_hemistich(report: &HemistichReport) -> String {
    let mut out = String::new();
    let (number, half) = match report.half {
        Half::First => (1, "first"),
        Half::Second => (2, "second"),
    };
    gana_table(&mut out, number, report.matras, &report.segmentation);
    violation_lines(&mut out, &report.violations);
    out.push_str(&format!("checked as: {half} half of an āryā\n"));
    out.push_str(&format!("valid: {}\n", yes_no(report.is_valid())));
    out.push_str(&format!("word rules checked: {}\n", yes_no(report.word_rules_checked)));
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
