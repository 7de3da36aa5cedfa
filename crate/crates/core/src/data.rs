//! Data files bundled with the crate.
//!
//! The rules and lexicon cover the suffixes and exceptions evidenced by the
//! published tables; the rule format is the place to add more.

pub const RULES: &str = include_str!("../data/rules.tsv");
pub const LEXICON: &str = include_str!("../data/lexicon.tsv");
/// Word/lemma pairs with known answers.
pub const GOLD: &str = include_str!("../data/gold.tsv");
/// Inflected/root pairs for the suffix miner.
pub const PAIRS: &str = include_str!("../data/pairs.tsv");

/// Directory holding the bundled data files in the source tree.
pub fn source_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}
