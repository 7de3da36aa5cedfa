//! Rule-based lemmatizer for Hindi.
//!
//! Lemmatization runs in two steps. An exact-match lexicon is consulted
//! first; it holds protected words (mapped to themselves) and irregular
//! forms. Otherwise the longest matching suffix rule strips its suffix and
//! appends a replacement, so `लडकोँ` becomes `लडका` by removing `ोँ` and
//! adding `ा`.
//!
//! ```
//! use hindi_lemma::{Lemmatizer, Provenance};
//!
//! let lemmatizer = Lemmatizer::shipped();
//! let result = lemmatizer.lemmatize("लडकोँ").unwrap();
//! assert_eq!(result.lemma, "लडका");
//! assert_eq!(result.provenance, Provenance::Rule);
//! ```
//!
//! Runnable programs for each capability live in `examples/`.

pub mod cli;
pub mod data;
pub mod devanagari;
mod error;
pub mod eval;
pub mod lemmatizer;
pub mod lexicon;
pub mod miner;
pub mod rules;
mod tsv;

pub use devanagari::{normalize, segment, GraphemeWord};
pub use error::{Error, Result};
pub use eval::{evaluate, load_gold, Accuracy, EvalReport, GoldPair};
pub use lemmatizer::{
    lemmatize, lemmatize_text, LemmaResult, Lemmatizer, Provenance, TextToken, TokenOutcome,
};
pub use lexicon::{Lexicon, LexiconEntry};
pub use miner::{emit_rule_file, mine_candidates, SuffixCandidate};
pub use rules::{RuleSet, SuffixRule};
