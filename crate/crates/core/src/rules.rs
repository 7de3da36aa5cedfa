//! Suffix stripping rules and their deterministic match order.
//!
//! A rule strips a suffix and appends a replacement:
//! `लडकोँ - ोँ + ा = लडका`. When several rules match, the longest suffix
//! wins; equal lengths are ordered by priority (lower first), then by the
//! suffix text.
//!
//! File format: `suffix<TAB>replacement[<TAB>min_stem_clusters[<TAB>priority]]`.

use std::cmp::{Ordering, Reverse};
use std::collections::HashMap;

use crate::devanagari::{self, cluster_count, ends_with_suffix, normalize, GraphemeWord};
use crate::error::{Error, Result};
use crate::tsv;

pub const DEFAULT_MIN_STEM_CLUSTERS: usize = 1;
pub const DEFAULT_PRIORITY: i32 = 100;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuffixRule {
    suffix: String,
    replacement: String,
    min_stem_clusters: usize,
    priority: i32,
}

impl SuffixRule {
    pub fn new(
        suffix: &str,
        replacement: &str,
        min_stem_clusters: usize,
        priority: i32,
    ) -> Result<Self> {
        Self::validated(suffix, replacement, min_stem_clusters, priority, 0)
    }

    fn validated(
        suffix: &str,
        replacement: &str,
        min_stem_clusters: usize,
        priority: i32,
        line: usize,
    ) -> Result<Self> {
        let suffix = normalize(suffix);
        let replacement = normalize(replacement);
        let invalid = |message: String| Err(Error::InvalidRule { line, message });
        if suffix.is_empty() {
            return invalid("empty suffix".into());
        }
        if suffix
            .chars()
            .chain(replacement.chars())
            .any(char::is_whitespace)
        {
            return invalid(format!("whitespace in rule '{suffix}' -> '{replacement}'"));
        }
        if min_stem_clusters == 0 {
            return invalid(format!(
                "min_stem_clusters for '{suffix}' must be at least 1"
            ));
        }
        Ok(SuffixRule {
            suffix,
            replacement,
            min_stem_clusters,
            priority,
        })
    }

    pub fn suffix(&self) -> &str {
        &self.suffix
    }

    pub fn replacement(&self) -> &str {
        &self.replacement
    }

    pub fn min_stem_clusters(&self) -> usize {
        self.min_stem_clusters
    }

    pub fn priority(&self) -> i32 {
        self.priority
    }

    /// Suffix length in codepoints.
    pub fn suffix_len(&self) -> usize {
        self.suffix.chars().count()
    }

    /// True when the word ends with the suffix and the stripped stem keeps
    /// at least `min_stem_clusters` grapheme clusters.
    pub fn matches(&self, word: &GraphemeWord) -> bool {
        if !ends_with_suffix(word, &self.suffix) {
            return false;
        }
        let stem = &word.as_str()[..word.as_str().len() - self.suffix.len()];
        cluster_count(stem) >= self.min_stem_clusters
    }

    /// Strips the suffix and appends the replacement.
    pub fn apply(&self, word: &GraphemeWord) -> Result<String> {
        if !self.matches(word) {
            return Err(Error::RuleMismatch {
                suffix: self.suffix.clone(),
                word: word.as_str().to_owned(),
            });
        }
        devanagari::strip_and_append(word, &self.suffix, &self.replacement)
    }

    fn order_key(&self) -> (Reverse<usize>, i32, &str) {
        (Reverse(self.suffix_len()), self.priority, &self.suffix)
    }

    /// Renders the rule as a rule-file line.
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.suffix, self.replacement, self.min_stem_clusters, self.priority
        )
    }
}

impl Ord for SuffixRule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key()
            .cmp(&other.order_key())
            .then_with(|| self.replacement.cmp(&other.replacement))
            .then_with(|| self.min_stem_clusters.cmp(&other.min_stem_clusters))
    }
}

impl PartialOrd for SuffixRule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Rules kept in match order. Suffixes are unique.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleSet {
    rules: Vec<SuffixRule>,
}

impl RuleSet {
    pub fn new(rules: impl IntoIterator<Item = SuffixRule>) -> Result<Self> {
        Self::from_lines(rules.into_iter().enumerate().map(|(i, r)| (i + 1, r)))
    }

    fn from_lines(rules: impl IntoIterator<Item = (usize, SuffixRule)>) -> Result<Self> {
        let mut seen: HashMap<String, usize> = HashMap::new();
        let mut out = Vec::new();
        for (line, rule) in rules {
            if let Some(&first_line) = seen.get(&rule.suffix) {
                return Err(Error::DuplicateSuffix {
                    line,
                    first_line,
                    suffix: rule.suffix,
                });
            }
            seen.insert(rule.suffix.clone(), line);
            out.push(rule);
        }
        out.sort();
        Ok(RuleSet { rules: out })
    }

    /// Parses rule file content.
    pub fn load(content: &str) -> Result<Self> {
        let mut parsed = Vec::new();
        for rec in tsv::records(content) {
            let n = rec.fields.len();
            if !(2..=4).contains(&n) {
                return Err(Error::Parse {
                    line: rec.line,
                    message: format!("expected 2 to 4 tab-separated fields, found {n}"),
                });
            }
            let min_stem = optional_field(rec.fields.get(2), rec.line, "min_stem_clusters")?
                .unwrap_or(DEFAULT_MIN_STEM_CLUSTERS);
            let priority = optional_field(rec.fields.get(3), rec.line, "priority")?
                .unwrap_or(DEFAULT_PRIORITY);
            let rule =
                SuffixRule::validated(rec.fields[0], rec.fields[1], min_stem, priority, rec.line)?;
            parsed.push((rec.line, rule));
        }
        Self::from_lines(parsed)
    }

    /// All rules applicable to `word`, best first.
    pub fn match_rules(&self, word: &GraphemeWord) -> Vec<&SuffixRule> {
        self.rules.iter().filter(|r| r.matches(word)).collect()
    }

    /// The rule the lemmatizer applies, if any.
    pub fn best_match(&self, word: &GraphemeWord) -> Option<&SuffixRule> {
        self.rules.iter().find(|r| r.matches(word))
    }

    pub fn rules(&self) -> &[SuffixRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Pairs `(longer, shorter)` where the longer rule strips extra text
    /// only to append it again, so it behaves exactly like the shorter one.
    pub fn redundant_pairs(&self) -> Vec<(&SuffixRule, &SuffixRule)> {
        let mut out = Vec::new();
        for long in &self.rules {
            for short in &self.rules {
                if long.suffix.len() <= short.suffix.len() {
                    continue;
                }
                let Some(extra) = long.suffix.strip_suffix(short.suffix.as_str()) else {
                    continue;
                };
                if long.replacement == format!("{extra}{}", short.replacement) {
                    out.push((long, short));
                }
            }
        }
        out
    }
}

fn optional_field<T: std::str::FromStr>(
    field: Option<&&str>,
    line: usize,
    name: &str,
) -> Result<Option<T>> {
    match field.map(|f| f.trim()) {
        None | Some("") => Ok(None),
        Some(text) => text.parse().map(Some).map_err(|_| Error::Parse {
            line,
            message: format!("{name} '{text}' is not an integer"),
        }),
    }
}
