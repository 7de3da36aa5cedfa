//! Lemmatize a word list with the bundled rules and lexicon and print the
//! lemma/suffix split for each word.
//!
//! ```bash
//! cargo run --example lemmatize_words
//! cargo run --example lemmatize_words -- खुशी लडकोँ
//! ```

use hindi_lemma::{Lemmatizer, Provenance};

const DEFAULT_WORDS: &[&str] = &[
    "नज़रें",
    "सडकों",
    "लडकी",
    "लडकियाँ",
    "खुशी",
    "भारतीयता",
    "मजदूरी",
    "मिठाई",
    "बालिकाओं",
    "सफलताओं",
    "लडकों",
    "मंजिलें",
    "विदा",
    "ज्यादा",
    "पढाई",
    "कवियों",
    "तिजोरियों",
    "बुनाई",
    "नेताओं",
    "चिडियों",
    "संशोधन",
];

fn main() {
    let lemmatizer = Lemmatizer::shipped();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let words: Vec<&str> = if args.is_empty() {
        DEFAULT_WORDS.to_vec()
    } else {
        args.iter().map(String::as_str).collect()
    };

    println!(
        "{:<14} {:<12} {:<8} {:<8} source",
        "word", "lemma", "suffix", "added"
    );
    for word in words {
        match lemmatizer.lemmatize(word) {
            Ok(r) => {
                let suffix = r.removed_suffix.as_deref().unwrap_or("-");
                let added = r.appended.as_deref().unwrap_or("-");
                let note = match r.provenance {
                    Provenance::Lexicon => "lexicon",
                    Provenance::Rule => "rule",
                    Provenance::Passthrough => "unchanged",
                };
                println!(
                    "{:<14} {:<12} {:<8} {:<8} {note}",
                    r.input, r.lemma, suffix, added
                );
            }
            Err(e) => eprintln!("{word}: {e}"),
        }
    }
}
