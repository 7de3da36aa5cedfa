//! Normalization, grapheme segmentation and suffix surgery on single words.
//!
//! ```bash
//! cargo run --example graphemes
//! ```

use hindi_lemma::devanagari::{ends_with_suffix, strip_and_append};
use hindi_lemma::{normalize, segment};

fn codepoints(s: &str) -> String {
    s.chars()
        .map(|c| format!("U+{:04X}", c as u32))
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> hindi_lemma::Result<()> {
    // precomposed ज़ (U+095B) becomes ज + nukta
    let raw = "  न\u{095B}रें ";
    let word = normalize(raw);
    println!("'{raw}' -> '{word}'  [{}]", codepoints(&word));

    for w in ["लडकोँ", "सर्दी", "कच्चापन", &word] {
        let seg = segment(w)?;
        let clusters: Vec<&str> = seg.clusters().collect();
        println!(
            "{w}: {} clusters [{}]",
            seg.cluster_count(),
            clusters.join(" | ")
        );
    }

    // ी is a bare vowel sign: it matches inside the last cluster
    let seg = segment("कमजोरी")?;
    println!("कमजोरी ends with ी: {}", ends_with_suffix(&seg, "ी"));

    let seg = segment("लडकोँ")?;
    println!("लडकोँ - ोँ + ा = {}", strip_and_append(&seg, "ोँ", "ा")?);
    Ok(())
}
