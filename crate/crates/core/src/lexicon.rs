//! Exact-match knowledgebase consulted before any suffix rule.
//!
//! Protected words map to themselves; exceptions map to a different lemma.
//! File format: `surface<TAB>lemma`, one entry per line.

use std::collections::btree_map::{self, BTreeMap};

use crate::devanagari::normalize;
use crate::error::{Error, Result};
use crate::tsv;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconEntry {
    pub surface: String,
    pub lemma: String,
}

impl LexiconEntry {
    pub fn is_protected(&self) -> bool {
        self.surface == self.lemma
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<String, String>,
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses lexicon file content.
    pub fn load(content: &str) -> Result<Self> {
        let mut lex = Lexicon::new();
        for rec in tsv::records(content) {
            if rec.fields.len() != 2 {
                return Err(Error::Parse {
                    line: rec.line,
                    message: format!(
                        "expected 2 tab-separated fields, found {}",
                        rec.fields.len()
                    ),
                });
            }
            let surface = word_field(rec.fields[0], rec.line, "surface")?;
            let lemma = word_field(rec.fields[1], rec.line, "lemma")?;
            lex.insert_at(surface, lemma, rec.line)?;
        }
        Ok(lex)
    }

    /// Adds an entry. Re-adding an identical entry is a no-op; a different
    /// lemma for an existing surface is a conflict.
    pub fn insert(&mut self, surface: &str, lemma: &str) -> Result<()> {
        let surface = word_field(surface, 0, "surface")?;
        let lemma = word_field(lemma, 0, "lemma")?;
        self.insert_at(surface, lemma, 0)
    }

    fn insert_at(&mut self, surface: String, lemma: String, line: usize) -> Result<()> {
        match self.entries.entry(surface) {
            btree_map::Entry::Vacant(v) => {
                v.insert(lemma);
                Ok(())
            }
            btree_map::Entry::Occupied(o) if *o.get() == lemma => Ok(()),
            btree_map::Entry::Occupied(o) => Err(Error::LexiconConflict {
                line,
                surface: o.key().clone(),
                first: o.get().clone(),
                second: lemma,
            }),
        }
    }

    pub fn lookup(&self, word: &str) -> Option<&str> {
        self.entries.get(word).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in surface order.
    pub fn entries(&self) -> impl Iterator<Item = LexiconEntry> + '_ {
        self.entries.iter().map(|(s, l)| LexiconEntry {
            surface: s.clone(),
            lemma: l.clone(),
        })
    }
}

fn word_field(raw: &str, line: usize, what: &str) -> Result<String> {
    let word = normalize(raw);
    if word.is_empty() {
        return Err(Error::Parse {
            line,
            message: format!("empty {what}"),
        });
    }
    if word.chars().any(char::is_whitespace) {
        return Err(Error::Parse {
            line,
            message: format!("{what} '{word}' contains whitespace"),
        });
    }
    Ok(word)
}
