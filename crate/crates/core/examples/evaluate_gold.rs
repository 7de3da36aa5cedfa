//! Score the bundled rules and lexicon against a gold file.
//!
//! ```bash
//! cargo run --example evaluate_gold
//! cargo run --example evaluate_gold -- path/to/gold.tsv
//! ```

use hindi_lemma::{data, evaluate, load_gold, Lemmatizer};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let content = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => data::GOLD.to_owned(),
    };
    let gold = load_gold(&content)?;
    let lemmatizer = Lemmatizer::shipped();
    let report = evaluate(&gold, lemmatizer.lexicon(), lemmatizer.rules())?;
    print!("{}", report.render_text());
    println!(
        "exact ratio: {}/{}",
        report.accuracy().correct,
        report.accuracy().total
    );
    Ok(())
}
