//! Propose suffix rules from (inflected, root) pairs and print a draft
//! rule file. Conflicting proposals for the same suffix are flagged for a
//! curator to resolve.
//!
//! ```bash
//! cargo run --example mine_suffixes
//! cargo run --example mine_suffixes -- pairs.tsv 2
//! ```

use hindi_lemma::miner::load_pairs;
use hindi_lemma::{data, emit_rule_file, mine_candidates, RuleSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let content = match args.next() {
        Some(path) => std::fs::read_to_string(path)?,
        None => data::PAIRS.to_owned(),
    };
    let min_support: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);

    let pairs = load_pairs(&content)?;
    let candidates = mine_candidates(pairs.iter().map(|(a, b)| (a, b)));
    println!("{} pairs, {} candidates\n", pairs.len(), candidates.len());
    for c in candidates.iter().take(8) {
        println!(
            "  -{} +{:<4} support {}",
            c.suffix, c.replacement, c.support
        );
    }

    let draft = emit_rule_file(&candidates, min_support);
    println!("\n{draft}");
    match RuleSet::load(&draft) {
        Ok(rules) => println!("draft loads: {} rules", rules.len()),
        Err(e) => println!("draft needs curation: {e}"),
    }
    Ok(())
}
