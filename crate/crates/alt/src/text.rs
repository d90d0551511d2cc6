//! Plain-text rendering for the terminal.

use std::fmt::Write;

use alt_core::{Formula, FrequencyEntry, IndexSet, Profile, ReadabilityReport};

fn indices_block(out: &mut String, set: &IndexSet) {
    let _ = writeln!(out, "Indices ({})", set.profile);
    for formula in Formula::ALL {
        let _ = writeln!(out, "  {:<22}{:>7.1}", formula.name(), set.get(formula));
    }
}

fn frequency_block(out: &mut String, title: &str, entries: &[FrequencyEntry]) {
    if entries.is_empty() {
        return;
    }
    let _ = writeln!(out, "\n{title}");
    for e in entries {
        let _ = writeln!(
            out,
            "  {:<22}{:>5}  {:>6.2}%",
            e.token,
            e.absolute,
            100.0 * e.relative
        );
    }
}

/// Human-readable report. The headline uses `headline` when those indices
/// are present and the adapted ones otherwise.
pub fn report(report: &ReadabilityReport, headline: Profile) -> String {
    let main = report.indices_for(headline).unwrap_or(&report.indices);
    let mut out = String::new();
    let _ = writeln!(out, "Resultado: {} ({})", main.final_display, main.band);
    let _ = writeln!(out, "{}\n", main.band.description());

    indices_block(&mut out, &report.indices);
    if let Some(orig) = &report.original_indices {
        out.push('\n');
        indices_block(&mut out, orig);
    }

    let s = &report.stats;
    let _ = writeln!(out, "\nVariables");
    let _ = writeln!(
        out,
        "  letters {}, words {}, sentences {}, syllables {}, complex words {}",
        s.letters, s.words, s.sentences, s.syllables, s.complex_words
    );
    let _ = writeln!(out, "  letters/word {:.3}", s.letters_per_word);
    let _ = writeln!(out, "  syllables/word {:.3}", s.syllables_per_word);
    let _ = writeln!(out, "  words/sentence {:.3}", s.words_per_sentence);
    let _ = writeln!(out, "  complex words/word {:.3}", s.complex_word_ratio);

    let long = report
        .suggestions
        .iter()
        .filter(|s| s.kind != alt_core::SpanKind::ComplexWord)
        .count();
    let complex = report.suggestions.len() - long;
    let _ = writeln!(
        out,
        "\nSuggestions: {long} long sentence(s), {complex} complex word(s)"
    );

    frequency_block(&mut out, "Keywords", &report.keywords);
    frequency_block(&mut out, "Word cloud", &report.cloud);

    if !report.notes.is_empty() {
        let _ = writeln!(out, "\nNotes");
        for n in &report.notes {
            let _ = writeln!(out, "  {n}");
        }
    }
    out
}

/// Cloud listing for `alt cloud`.
pub fn cloud(entries: &[FrequencyEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let _ = writeln!(out, "{}\t{}\t{:.4}", e.token, e.absolute, e.relative);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alt_core::{Lexicon, ReportOptions};

    #[test]
    fn headline() {
        let r = ReadabilityReport::build(
            "O mundo é tudo o que ocorre. O mundo é a totalidade dos fatos.",
            &Lexicon::builtin(),
            &ReportOptions::default(),
        )
        .unwrap();
        let text = report(&r, Profile::AdaptedPt);
        assert!(text.starts_with("Resultado: "));
        assert!(text.contains("(alta)"));
        assert!(text.contains("Flesch-Kincaid"));
        assert!(!text.contains("Indices (original)"));
    }
}
