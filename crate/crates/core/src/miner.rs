//! Proposes suffix rules from `(inflected, root)` pairs.
//!
//! Each pair is split at its longest common codepoint prefix; what remains
//! of the inflected word is the suffix and what remains of the root is the
//! replacement. Identical proposals are counted. A curator reviews the
//! result; nothing here resolves conflicts.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::devanagari::normalize;
use crate::error::{Error, Result};
use crate::rules::{DEFAULT_MIN_STEM_CLUSTERS, DEFAULT_PRIORITY};
use crate::tsv;

pub const MAX_EXAMPLES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuffixCandidate {
    pub suffix: String,
    pub replacement: String,
    pub support: usize,
    pub example_pairs: Vec<(String, String)>,
    /// Some evidencing pair shared no prefix at all, so the "suffix" is the
    /// whole inflected word.
    pub whole_word: bool,
}

/// Splits a pair at its longest common codepoint prefix and returns
/// `(suffix, replacement)`.
pub fn difference<'a>(inflected: &'a str, root: &'a str) -> (&'a str, &'a str) {
    let prefix_len: usize = inflected
        .chars()
        .zip(root.chars())
        .take_while(|(a, b)| a == b)
        .map(|(a, _)| a.len_utf8())
        .sum();
    (&inflected[prefix_len..], &root[prefix_len..])
}

pub fn mine_candidates<I, A, B>(pairs: I) -> Vec<SuffixCandidate>
where
    I: IntoIterator<Item = (A, B)>,
    A: AsRef<str>,
    B: AsRef<str>,
{
    let mut by_key: HashMap<(String, String), SuffixCandidate> = HashMap::new();
    for (inflected, root) in pairs {
        let inflected = normalize(inflected.as_ref());
        let root = normalize(root.as_ref());
        if inflected == root {
            continue;
        }
        let (suffix, replacement) = difference(&inflected, &root);
        let whole_word = suffix.len() == inflected.len();
        let cand = by_key
            .entry((suffix.to_owned(), replacement.to_owned()))
            .or_insert_with(|| SuffixCandidate {
                suffix: suffix.to_owned(),
                replacement: replacement.to_owned(),
                support: 0,
                example_pairs: Vec::new(),
                whole_word: false,
            });
        cand.support += 1;
        cand.whole_word |= whole_word;
        if cand.example_pairs.len() < MAX_EXAMPLES {
            cand.example_pairs.push((inflected.clone(), root.clone()));
        }
    }
    let mut out: Vec<_> = by_key.into_values().collect();
    out.sort_by(|a, b| {
        b.support
            .cmp(&a.support)
            .then_with(|| a.suffix.cmp(&b.suffix))
            .then_with(|| a.replacement.cmp(&b.replacement))
    });
    out
}

/// Parses an `inflected<TAB>root` pairs file.
pub fn load_pairs(content: &str) -> Result<Vec<(String, String)>> {
    tsv::records(content)
        .map(|rec| match rec.fields.as_slice() {
            [inflected, root] => {
                let (inflected, root) = (normalize(inflected), normalize(root));
                if inflected.is_empty() || root.is_empty() {
                    Err(Error::Parse {
                        line: rec.line,
                        message: "empty field".into(),
                    })
                } else {
                    Ok((inflected, root))
                }
            }
            fields => Err(Error::Parse {
                line: rec.line,
                message: format!("expected 2 tab-separated fields, found {}", fields.len()),
            }),
        })
        .collect()
}

/// Renders candidates with `support >= min_support` as a rule file.
///
/// Candidates that cannot become rules (empty suffix, whole-word suffix)
/// are written as comments. Suffixes proposed with more than one
/// replacement are flagged at the end; such a file will not load until a
/// curator keeps one line per suffix.
pub fn emit_rule_file(candidates: &[SuffixCandidate], min_support: usize) -> String {
    let min_support = min_support.max(1);
    let mut out = String::new();
    let _ = writeln!(out, "# suffix\treplacement\tmin_stem_clusters\tpriority");
    let _ = writeln!(out, "# mined candidates, min support {min_support}");
    let mut per_suffix: BTreeMap<&str, Vec<&str>> = BTreeMap::new();

    for cand in candidates.iter().filter(|c| c.support >= min_support) {
        let examples = cand
            .example_pairs
            .iter()
            .map(|(i, r)| format!("{i}→{r}"))
            .collect::<Vec<_>>()
            .join(", ");
        if cand.suffix.is_empty() {
            let _ = writeln!(
                out,
                "# skipped append-only candidate +'{}' (support {}): {examples}",
                cand.replacement, cand.support
            );
            continue;
        }
        if cand.whole_word {
            let _ = writeln!(
                out,
                "# skipped whole-word suffix '{}' -> '{}' (support {}): {examples}",
                cand.suffix, cand.replacement, cand.support
            );
            continue;
        }
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t# support={}: {examples}",
            cand.suffix,
            cand.replacement,
            DEFAULT_MIN_STEM_CLUSTERS,
            DEFAULT_PRIORITY,
            cand.support
        );
        per_suffix
            .entry(&cand.suffix)
            .or_default()
            .push(&cand.replacement);
    }

    for (suffix, replacements) in per_suffix.iter().filter(|(_, r)| r.len() > 1) {
        let shown: Vec<String> = replacements.iter().map(|r| format!("'{r}'")).collect();
        let _ = writeln!(
            out,
            "# conflict: suffix '{suffix}' has {} replacements ({}); keep one rule and move the other words to the lexicon",
            replacements.len(),
            shown.join(", ")
        );
    }
    out
}
