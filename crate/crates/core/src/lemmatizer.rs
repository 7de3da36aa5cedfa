//! Word and text lemmatization.
//!
//! A word is looked up in the lexicon first. On a miss the best matching
//! suffix rule is applied once; no rule cascades onto its own output.
//! Words matching neither pass through unchanged.

use std::fmt;

use serde::Serialize;

use crate::devanagari::{is_devanagari_letter, normalize, segment};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::rules::RuleSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Lexicon,
    Rule,
    Passthrough,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Lexicon => "lexicon",
            Provenance::Rule => "rule",
            Provenance::Passthrough => "passthrough",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaResult {
    pub input: String,
    pub lemma: String,
    pub removed_suffix: Option<String>,
    pub appended: Option<String>,
    pub provenance: Provenance,
}

/// Lemmatizes a single token.
pub fn lemmatize(word: &str, lex: &Lexicon, rules: &RuleSet) -> Result<LemmaResult> {
    let input = normalize(word);
    if input.is_empty() {
        return Err(Error::EmptyInput);
    }
    if input.chars().any(char::is_whitespace) {
        return Err(Error::MultiToken(input));
    }

    if let Some(lemma) = lex.lookup(&input) {
        return Ok(LemmaResult {
            lemma: lemma.to_owned(),
            input,
            removed_suffix: None,
            appended: None,
            provenance: Provenance::Lexicon,
        });
    }

    let word = segment(&input)?;
    if let Some(rule) = rules.best_match(&word) {
        let lemma = rule.apply(&word)?;
        let appended = Some(rule.replacement())
            .filter(|r| !r.is_empty())
            .map(str::to_owned);
        return Ok(LemmaResult {
            input,
            lemma,
            removed_suffix: Some(rule.suffix().to_owned()),
            appended,
            provenance: Provenance::Rule,
        });
    }

    Ok(LemmaResult {
        lemma: input.clone(),
        input,
        removed_suffix: None,
        appended: None,
        provenance: Provenance::Passthrough,
    })
}

/// One piece of tokenized text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextToken {
    pub token: String,
    pub outcome: TokenOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenOutcome {
    Lemma(LemmaResult),
    /// Punctuation, or a token with no Devanagari letters.
    Skipped,
}

impl TextToken {
    pub fn lemma(&self) -> Option<&LemmaResult> {
        match &self.outcome {
            TokenOutcome::Lemma(r) => Some(r),
            TokenOutcome::Skipped => None,
        }
    }

    fn skipped(token: &str) -> Self {
        TextToken {
            token: token.to_owned(),
            outcome: TokenOutcome::Skipped,
        }
    }
}

fn is_edge_punctuation(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(
            c,
            '।' | '॥' | '‘' | '’' | '“' | '”' | '–' | '—' | '…' | '«' | '»'
        )
}

/// Splits text on whitespace, peels punctuation off both ends of each
/// token as separate skipped tokens, and lemmatizes what remains.
pub fn lemmatize_text(text: &str, lex: &Lexicon, rules: &RuleSet) -> Vec<TextToken> {
    let mut out = Vec::new();
    for raw in text.split_whitespace() {
        let core_start = raw
            .char_indices()
            .find(|&(_, c)| !is_edge_punctuation(c))
            .map(|(i, _)| i);
        let Some(core_start) = core_start else {
            out.push(TextToken::skipped(raw));
            continue;
        };
        let core_end = raw
            .char_indices()
            .rev()
            .find(|&(_, c)| !is_edge_punctuation(c))
            .map(|(i, c)| i + c.len_utf8())
            .unwrap_or(raw.len());

        let (leading, rest) = raw.split_at(core_start);
        let (core, trailing) = rest.split_at(core_end - core_start);
        if !leading.is_empty() {
            out.push(TextToken::skipped(leading));
        }
        let outcome = if core.chars().any(is_devanagari_letter) {
            lemmatize(core, lex, rules)
                .map(TokenOutcome::Lemma)
                .unwrap_or(TokenOutcome::Skipped)
        } else {
            TokenOutcome::Skipped
        };
        out.push(TextToken {
            token: core.to_owned(),
            outcome,
        });
        if !trailing.is_empty() {
            out.push(TextToken::skipped(trailing));
        }
    }
    out
}

/// A lexicon and rule set bundled together.
#[derive(Debug, Clone, Default)]
pub struct Lemmatizer {
    lexicon: Lexicon,
    rules: RuleSet,
}

impl Lemmatizer {
    pub fn new(lexicon: Lexicon, rules: RuleSet) -> Self {
        Lemmatizer { lexicon, rules }
    }

    /// Loads from lexicon and rule file contents.
    pub fn from_sources(lexicon: &str, rules: &str) -> Result<Self> {
        Ok(Self::new(Lexicon::load(lexicon)?, RuleSet::load(rules)?))
    }

    /// The lexicon and rules bundled with the crate.
    pub fn shipped() -> Self {
        Self::from_sources(crate::data::LEXICON, crate::data::RULES)
            .expect("bundled data files are valid")
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn lemmatize(&self, word: &str) -> Result<LemmaResult> {
        lemmatize(word, &self.lexicon, &self.rules)
    }

    pub fn lemmatize_text(&self, text: &str) -> Vec<TextToken> {
        lemmatize_text(text, &self.lexicon, &self.rules)
    }
}
