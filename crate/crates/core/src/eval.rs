//! Gold-set evaluation: accuracy = correct / total × 100.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::devanagari::normalize;
use crate::error::{Error, Result};
use crate::lemmatizer::{lemmatize, Provenance};
use crate::lexicon::Lexicon;
use crate::rules::RuleSet;
use crate::tsv;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldPair {
    pub word: String,
    pub expected_lemma: String,
    /// Source line, 0 for pairs built in code.
    pub line: usize,
}

impl GoldPair {
    pub fn new(word: &str, expected_lemma: &str) -> Self {
        GoldPair {
            word: normalize(word),
            expected_lemma: normalize(expected_lemma),
            line: 0,
        }
    }
}

/// Parses a `word<TAB>lemma` gold file.
pub fn load_gold(content: &str) -> Result<Vec<GoldPair>> {
    tsv::records(content)
        .map(|rec| {
            if rec.fields.len() != 2 {
                return Err(Error::Parse {
                    line: rec.line,
                    message: format!(
                        "expected 2 tab-separated fields, found {}",
                        rec.fields.len()
                    ),
                });
            }
            let word = normalize(rec.fields[0]);
            let expected_lemma = normalize(rec.fields[1]);
            if word.is_empty() || expected_lemma.is_empty() {
                return Err(Error::Parse {
                    line: rec.line,
                    message: "empty field".into(),
                });
            }
            Ok(GoldPair {
                word,
                expected_lemma,
                line: rec.line,
            })
        })
        .collect()
}

/// An exact ratio of correct to total words.
#[derive(Debug, Clone, Copy, Eq, Serialize)]
pub struct Accuracy {
    pub correct: usize,
    pub total: usize,
}

impl Accuracy {
    pub fn percent(&self) -> f64 {
        self.correct as f64 * 100.0 / self.total as f64
    }

    /// Percentage in tenths, rounded half up (456/500 → 912).
    pub fn tenths(&self) -> u64 {
        let (c, t) = (self.correct as u64, self.total as u64);
        (c * 2000 + t) / (2 * t)
    }

    /// True iff the exact percentage is at least `percent`.
    pub fn at_least(&self, percent: f64) -> bool {
        self.correct as f64 * 100.0 >= percent * self.total as f64
    }
}

impl PartialEq for Accuracy {
    fn eq(&self, other: &Self) -> bool {
        self.correct as u128 * other.total as u128 == other.correct as u128 * self.total as u128
    }
}

impl fmt::Display for Accuracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.tenths();
        write!(f, "{}.{}%", t / 10, t % 10)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Miss {
    pub word: String,
    pub expected: String,
    pub actual: String,
    pub provenance: Provenance,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalReport {
    pub total: usize,
    pub correct: usize,
    pub errors: Vec<Miss>,
}

impl EvalReport {
    pub fn accuracy(&self) -> Accuracy {
        Accuracy {
            correct: self.correct,
            total: self.total,
        }
    }

    /// Combines two reports as if their gold sets had been concatenated.
    pub fn merge(mut self, other: EvalReport) -> EvalReport {
        self.total += other.total;
        self.correct += other.correct;
        self.errors.extend(other.errors);
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "total:    {}", self.total);
        let _ = writeln!(out, "correct:  {}", self.correct);
        let _ = writeln!(out, "accuracy: {}", self.accuracy());
        if !self.errors.is_empty() {
            let _ = writeln!(out, "errors ({}):", self.errors.len());
            for m in &self.errors {
                let _ = writeln!(
                    out,
                    "  {}\texpected {}\tgot {}\t({})",
                    m.word, m.expected, m.actual, m.provenance
                );
            }
        }
        out
    }

    /// One JSON object per miss, followed by a summary object.
    pub fn render_jsonl(&self) -> String {
        #[derive(Serialize)]
        #[serde(tag = "type", rename_all = "lowercase")]
        enum Record<'a> {
            Error(&'a Miss),
            Summary {
                total: usize,
                correct: usize,
                accuracy_percent: f64,
                accuracy: String,
            },
        }
        let mut out = String::new();
        let summary = Record::Summary {
            total: self.total,
            correct: self.correct,
            accuracy_percent: self.accuracy().percent(),
            accuracy: self.accuracy().to_string(),
        };
        for rec in self.errors.iter().map(Record::Error).chain([summary]) {
            out.push_str(&serde_json::to_string(&rec).expect("plain data serializes"));
            out.push('\n');
        }
        out
    }
}

/// Lemmatizes every gold word and compares with exact string equality.
pub fn evaluate(gold: &[GoldPair], lex: &Lexicon, rules: &RuleSet) -> Result<EvalReport> {
    if gold.is_empty() {
        return Err(Error::EmptyGold);
    }
    let mut expected: HashMap<&str, &str> = HashMap::new();
    for pair in gold {
        if let Some(&first) = expected.get(pair.word.as_str()) {
            if first != pair.expected_lemma {
                return Err(Error::GoldConflict {
                    line: pair.line,
                    word: pair.word.clone(),
                    first: first.to_owned(),
                    second: pair.expected_lemma.clone(),
                });
            }
        }
        expected.insert(&pair.word, &pair.expected_lemma);
    }

    let mut report = EvalReport {
        total: gold.len(),
        correct: 0,
        errors: Vec::new(),
    };
    for pair in gold {
        let result = lemmatize(&pair.word, lex, rules)?;
        if result.lemma == pair.expected_lemma {
            report.correct += 1;
        } else {
            report.errors.push(Miss {
                word: pair.word.clone(),
                expected: pair.expected_lemma.clone(),
                actual: result.lemma,
                provenance: result.provenance,
                line: pair.line,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accuracy_rendering() {
        let a = Accuracy {
            correct: 456,
            total: 500,
        };
        assert_eq!(a.tenths(), 912);
        assert_eq!(a.to_string(), "91.2%");
        assert_eq!(
            Accuracy {
                correct: 0,
                total: 10
            }
            .to_string(),
            "0.0%"
        );
        assert_eq!(
            Accuracy {
                correct: 10,
                total: 10
            }
            .to_string(),
            "100.0%"
        );
        assert_eq!(
            Accuracy {
                correct: 2,
                total: 3
            }
            .to_string(),
            "66.7%"
        );
        assert_eq!(
            Accuracy {
                correct: 1,
                total: 3
            }
            .to_string(),
            "33.3%"
        );
        // 0.05% boundary rounds up
        assert_eq!(
            Accuracy {
                correct: 1,
                total: 2000
            }
            .to_string(),
            "0.1%"
        );
    }

    #[test]
    fn accuracy_equality_is_exact() {
        assert_eq!(
            Accuracy {
                correct: 456,
                total: 500
            },
            Accuracy {
                correct: 912,
                total: 1000
            }
        );
        assert_ne!(
            Accuracy {
                correct: 456,
                total: 500
            },
            Accuracy {
                correct: 91,
                total: 100
            }
        );
    }

    #[test]
    fn threshold() {
        let a = Accuracy {
            correct: 9,
            total: 10,
        };
        assert!(a.at_least(90.0));
        assert!(!a.at_least(95.0));
    }

    #[test]
    fn load_gold_examples() {
        let gold = load_gold("# comment\nखुशी\tखुश\n\nमजदूरी\tमजदूर\n").unwrap();
        assert_eq!(gold.len(), 2);
        assert_eq!(
            (gold[0].word.as_str(), gold[0].expected_lemma.as_str()),
            ("खुशी", "खुश")
        );
        assert_eq!(gold[1].line, 4);
    }

    #[test]
    fn load_gold_malformed() {
        assert!(matches!(
            load_gold("खुशी\tखुश\nमजदूरी\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn identity_on_empty_tables() {
        let gold: Vec<_> = ["क", "ख", "लडकोँ"]
            .iter()
            .map(|w| GoldPair::new(w, w))
            .collect();
        let r = evaluate(&gold, &Lexicon::new(), &RuleSet::default()).unwrap();
        assert_eq!(r.accuracy().tenths(), 1000);
        assert!(r.errors.is_empty());
    }

    #[test]
    fn all_wrong() {
        let gold: Vec<_> = (0..10)
            .map(|i| GoldPair::new(&format!("क{}", char::from_u32(0x0915 + i).unwrap()), "x"))
            .collect();
        let r = evaluate(&gold, &Lexicon::new(), &RuleSet::default()).unwrap();
        assert_eq!((r.correct, r.total, r.errors.len()), (0, 10, 10));
        assert_eq!(r.accuracy().to_string(), "0.0%");
    }

    #[test]
    fn empty_gold() {
        assert_eq!(
            evaluate(&[], &Lexicon::new(), &RuleSet::default()),
            Err(Error::EmptyGold)
        );
    }

    #[test]
    fn conflicting_gold() {
        let gold = load_gold("खुशी\tखुश\nखुशी\tखुशी\n").unwrap();
        let err = evaluate(&gold, &Lexicon::new(), &RuleSet::default()).unwrap_err();
        assert!(matches!(err, Error::GoldConflict { line: 2, .. }));
    }

    #[test]
    fn jsonl_has_one_record_per_miss() {
        let gold = load_gold("खुशी\tखुश\nक\tक\n").unwrap();
        let r = evaluate(&gold, &Lexicon::new(), &RuleSet::default()).unwrap();
        let lines: Vec<serde_json::Value> = r
            .render_jsonl()
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0]["type"], "error");
        assert_eq!(lines[0]["word"], "खुशी");
        assert_eq!(lines[0]["provenance"], "passthrough");
        assert_eq!(lines[1]["type"], "summary");
        assert_eq!(lines[1]["accuracy"], "50.0%");
        assert!(r.render_text().contains("accuracy: 50.0%"));
    }
}
