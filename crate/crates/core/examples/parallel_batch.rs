//! Share one lemmatizer across worker threads and restore input order.
//!
//! ```bash
//! cargo run --example parallel_batch
//! ```

use std::thread;

use hindi_lemma::{data, load_gold, Lemmatizer};

fn main() {
    let lemmatizer = Lemmatizer::shipped();
    let words: Vec<String> = load_gold(data::GOLD)
        .expect("bundled gold parses")
        .into_iter()
        .map(|p| p.word)
        .collect();

    let workers = 4;
    let chunk = words.len().div_ceil(workers);
    let mut results: Vec<(usize, String)> = thread::scope(|s| {
        let handles: Vec<_> = words
            .chunks(chunk)
            .enumerate()
            .map(|(c, part)| {
                let lemmatizer = &lemmatizer;
                s.spawn(move || {
                    part.iter()
                        .enumerate()
                        .map(|(i, w)| (c * chunk + i, lemmatizer.lemmatize(w).unwrap().lemma))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    });
    results.sort_by_key(|(i, _)| *i);

    for ((_, lemma), word) in results.iter().zip(&words) {
        println!("{word}\t{lemma}");
    }
}
