//! Unicode primitives for Devanagari words.
//!
//! Everything downstream works on NFC text. Suffix matching is done on
//! codepoint sequences, since many suffixes (ी, ोँ, ियाँ) begin with a
//! dependent vowel sign and end in the middle of a grapheme cluster.
//! Grapheme clusters are only used to count how much of a stem remains.

use std::fmt;

use unicode_normalization::UnicodeNormalization;
use unicode_segmentation::UnicodeSegmentation;

use crate::error::{Error, Result};

/// Trims surrounding whitespace and converts to canonical composed form (NFC).
///
/// Devanagari nukta letters (क़ ख़ ग़ ज़ ड़ ढ़ फ़ य़) are composition exclusions,
/// so they come out as base consonant + U+093C.
pub fn normalize(text: &str) -> String {
    text.trim().nfc().collect()
}

/// Decodes raw bytes as UTF-8, reporting the offset of the first bad byte.
pub fn decode(bytes: &[u8]) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|e| Error::Decode {
        offset: e.valid_up_to(),
    })
}

/// A normalized, whitespace-free word split into extended grapheme clusters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphemeWord {
    text: String,
    // Byte offset where each cluster starts.
    starts: Vec<usize>,
}

impl GraphemeWord {
    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn cluster_count(&self) -> usize {
        self.starts.len()
    }

    pub fn clusters(&self) -> impl Iterator<Item = &str> + '_ {
        self.starts.iter().enumerate().map(move |(i, &start)| {
            let end = self.starts.get(i + 1).copied().unwrap_or(self.text.len());
            &self.text[start..end]
        })
    }

    pub fn into_string(self) -> String {
        self.text
    }
}

impl fmt::Display for GraphemeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl AsRef<str> for GraphemeWord {
    fn as_ref(&self) -> &str {
        &self.text
    }
}

/// Splits a word into grapheme clusters. Matras, nukta, anusvara,
/// chandrabindu and virama-joined conjuncts stay with their base.
pub fn segment(word: &str) -> Result<GraphemeWord> {
    let text: String = word.nfc().collect();
    if text.is_empty() {
        return Err(Error::EmptyWord);
    }
    if text.chars().any(char::is_whitespace) {
        return Err(Error::MultiToken(text));
    }
    let starts = text.grapheme_indices(true).map(|(i, _)| i).collect();
    Ok(GraphemeWord { text, starts })
}

/// Number of grapheme clusters in `text` (zero for the empty string).
pub fn cluster_count(text: &str) -> usize {
    text.graphemes(true).count()
}

/// True iff the word's codepoints end with the suffix's codepoints.
///
/// UTF-8 is self-synchronizing, so a byte-suffix test on valid strings is
/// the same as a codepoint-suffix test.
pub fn ends_with_suffix(word: &GraphemeWord, suffix: &str) -> bool {
    !suffix.is_empty() && word.text.ends_with(suffix)
}

/// Removes `suffix` from the end of `word` and appends `replacement`.
///
/// Fails with [`Error::EmptyStem`] when the suffix is the whole word.
pub fn strip_and_append(word: &GraphemeWord, suffix: &str, replacement: &str) -> Result<String> {
    let stem = strip(word, suffix)?;
    let mut out = String::with_capacity(stem.len() + replacement.len());
    out.push_str(stem);
    out.push_str(replacement);
    Ok(out.nfc().collect())
}

/// The part of `word` left after removing `suffix`.
pub(crate) fn strip<'w>(word: &'w GraphemeWord, suffix: &str) -> Result<&'w str> {
    if !ends_with_suffix(word, suffix) {
        return Err(Error::RuleMismatch {
            suffix: suffix.to_owned(),
            word: word.text.clone(),
        });
    }
    let stem = &word.text[..word.text.len() - suffix.len()];
    if stem.is_empty() {
        return Err(Error::EmptyStem {
            word: word.text.clone(),
            suffix: suffix.to_owned(),
        });
    }
    Ok(stem)
}

/// Devanagari letters: independent vowels, consonants, nukta forms, om,
/// avagraha and the extension letters. Signs, digits and dandas are excluded.
pub fn is_devanagari_letter(c: char) -> bool {
    matches!(c,
        '\u{0904}'..='\u{0939}'
        | '\u{093D}'
        | '\u{0950}'
        | '\u{0958}'..='\u{0961}'
        | '\u{0972}'..='\u{097F}')
}

/// Any codepoint in the Devanagari block.
pub fn is_devanagari(c: char) -> bool {
    ('\u{0900}'..='\u{097F}').contains(&c)
}
