//! Build a rule set and lexicon in code instead of loading files, and see
//! how longest match, priority and the stem guard decide which rule fires.
//!
//! ```bash
//! cargo run --example custom_rules
//! ```

use hindi_lemma::{segment, Lemmatizer, Lexicon, RuleSet, SuffixRule};

fn main() -> hindi_lemma::Result<()> {
    let rules = RuleSet::new([
        SuffixRule::new("ोँ", "ा", 2, 10)?,
        SuffixRule::new("ियोँ", "ी", 2, 100)?,
        SuffixRule::new("ी", "", 1, 100)?,
        SuffixRule::new("ता", "", 2, 100)?,
    ])?;

    println!("match order:");
    for rule in rules.rules() {
        println!("  {}", rule.to_tsv().replace('\t', " | "));
    }

    for word in ["लडकियोँ", "पिता", "गंभीरता"] {
        let seg = segment(word)?;
        let matched: Vec<&str> = rules.match_rules(&seg).iter().map(|r| r.suffix()).collect();
        println!(
            "{word}: {} clusters, matching suffixes [{}]",
            seg.cluster_count(),
            matched.join(", ")
        );
    }

    // A lexicon entry wins over every rule.
    let mut lexicon = Lexicon::new();
    lexicon.insert("कवियोँ", "कवि")?;
    lexicon.insert("लडकी", "लडकी")?;
    let lemmatizer = Lemmatizer::new(lexicon, rules);
    for word in ["कवियोँ", "कहानियोँ", "लडकी", "खुशी"] {
        let r = lemmatizer.lemmatize(word)?;
        println!("{word} → {} ({})", r.lemma, r.provenance);
    }

    // Two rules for one suffix are rejected.
    let dup = RuleSet::load("ोँ\tा\nोँ\t\n");
    println!("duplicate suffix: {}", dup.unwrap_err());
    Ok(())
}
