//! Tokenize running text, peel off punctuation and lemmatize each word.
//!
//! ```bash
//! cargo run --example lemmatize_text
//! echo "लडकियाँ, सडकों।" | cargo run --example lemmatize_text -- -
//! ```

use std::io::Read;

use hindi_lemma::{Lemmatizer, TokenOutcome};

fn main() -> std::io::Result<()> {
    let text = match std::env::args().nth(1).as_deref() {
        Some("-") => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
        Some(other) => other.to_owned(),
        None => "कहानियोँ, लडकोँ, खुशी; \"बालिकाओं\" सफलताओं (2024) संशोधन।".to_owned(),
    };

    let lemmatizer = Lemmatizer::shipped();
    for token in lemmatizer.lemmatize_text(&text) {
        match token.outcome {
            TokenOutcome::Lemma(r) => {
                println!("{}\t→ {}\t({})", token.token, r.lemma, r.provenance)
            }
            TokenOutcome::Skipped => println!("{}\t  (skipped)", token.token),
        }
    }
    Ok(())
}
