//! Acceptance criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test --test acceptance -- --nocapture` to see them.

use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use hindi_lemma::devanagari::{ends_with_suffix, segment, strip_and_append};
use hindi_lemma::eval::{evaluate, load_gold, GoldPair};
use hindi_lemma::lemmatizer::{lemmatize, Provenance};
use hindi_lemma::miner::{emit_rule_file, load_pairs, mine_candidates, SuffixCandidate};
use hindi_lemma::rules::{RuleSet, SuffixRule};
use hindi_lemma::{data, normalize, Error, Lemmatizer, Lexicon};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use unicode_normalization::UnicodeNormalization;

fn verdict(id: &str, what: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("[PASS] {id} {what}");
    } else {
        println!("[FAIL] {id} {what}");
        for f in failures {
            println!("       {f}");
        }
    }
    assert!(failures.is_empty(), "{id} failed: {failures:#?}");
}

const REFERENCE_PAIRS: &[(&str, &str)] = &[
    ("लडकोँ", "लडका"),
    ("सडकोँ", "सडक"),
    ("बालकोँ", "बालक"),
    ("नागरिकोँ", "नागरिक"),
    ("लडकियोँ", "लडकी"),
    ("कहानियोँ", "कहानी"),
    ("कवियोँ", "कवि"),
    ("चिडियोँ", "चिडिया"),
    ("नज़रें", "नज़र"),
    ("सडकों", "सडक"),
    ("खुशी", "खुश"),
    ("भारतीयता", "भारत"),
    ("मजदूरी", "मजदूर"),
    ("बालिकाओं", "बालिका"),
    ("सफलताओं", "सफल"),
    ("लडकों", "लडका"),
    ("तिजोरियों", "तिजोरी"),
    ("लडकियाँ", "लडकी"),
    ("ज्यादा", "ज्यादा"),
    ("लडकी", "लडकी"),
    ("कमजोरी", "कमजोर"),
    ("गरीबी", "गरीब"),
    ("सर्दी", "सर्द"),
    ("गंभीरता", "गंभीर"),
    ("सौदागर", "सौदा"),
    ("कच्चापन", "कच्चा"),
    ("पढ़ाई", "पढ़"),
    ("असलियत", "असली"),
    ("सफाई", "साफ"),
    ("गर्मी", "गरम"),
];

#[test]
fn ac1_reference_examples_reproduce() {
    let start = Instant::now();
    let lem = Lemmatizer::shipped();
    let mut failures = Vec::new();
    for (word, want) in REFERENCE_PAIRS {
        let got = lem.lemmatize(word).unwrap();
        if got.lemma != *want {
            failures.push(format!(
                "{word}: expected {want}, got {} ({})",
                got.lemma, got.provenance
            ));
        }
    }
    // the bundled gold file is a superset of the list above
    let gold = load_gold(data::GOLD).unwrap();
    for (word, want) in REFERENCE_PAIRS {
        if !gold
            .iter()
            .any(|g| g.word == *word && g.expected_lemma == *want)
        {
            failures.push(format!("{word} missing from bundled gold file"));
        }
    }
    let report = evaluate(&gold, lem.lexicon(), lem.rules()).unwrap();
    if report.correct != report.total {
        failures.push(format!("bundled gold accuracy {}", report.accuracy()));
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        failures.push(format!("took {elapsed:?}"));
    }
    verdict(
        "AC1",
        &format!(
            "{} reference pairs at 100% in {elapsed:?}",
            REFERENCE_PAIRS.len()
        ),
        &failures,
    );
}

const CONSONANTS: &[char] = &[
    'क', 'ख', 'ग', 'घ', 'च', 'छ', 'ज', 'झ', 'ट', 'ठ', 'ड', 'ढ', 'ण', 'त', 'थ', 'द', 'ध', 'न', 'प',
    'फ', 'ब', 'भ', 'म', 'य', 'र', 'ल', 'व', 'श', 'ष', 'स', 'ह',
];

#[test]
fn ac2_accuracy_metric() {
    let mut gold = Vec::new();
    'outer: for a in CONSONANTS {
        for b in CONSONANTS {
            if gold.len() == 500 {
                break 'outer;
            }
            let word: String = [*a, *b].iter().collect();
            let expected = if gold.len() < 456 {
                word.clone()
            } else {
                format!("{word}ा")
            };
            gold.push(GoldPair::new(&word, &expected));
        }
    }
    let report = evaluate(&gold, &Lexicon::new(), &RuleSet::default()).unwrap();
    let acc = report.accuracy();
    let mut failures = Vec::new();
    if (report.total, report.correct) != (500, 456) {
        failures.push(format!("counts {}/{}", report.correct, report.total));
    }
    if report.errors.len() != 44 {
        failures.push(format!("{} errors listed", report.errors.len()));
    }
    if acc.tenths() != 912 || acc.to_string() != "91.2%" {
        failures.push(format!("rendered {acc}"));
    }
    if acc.percent() != 91.2 {
        failures.push(format!("percent {}", acc.percent()));
    }
    if !report.render_text().contains("accuracy: 91.2%") {
        failures.push("text report lacks 91.2%".into());
    }
    verdict("AC2", "456/500 reports 91.2%", &failures);
}

/// Shipped rule pairs (longer, shorter) where shorter is a strict
/// codepoint suffix of longer.
fn nested_rule_pairs(rules: &RuleSet) -> Vec<(SuffixRule, SuffixRule)> {
    let mut out = Vec::new();
    for l in rules.rules() {
        for s in rules.rules() {
            if l.suffix().len() > s.suffix().len() && l.suffix().ends_with(s.suffix()) {
                out.push((l.clone(), s.clone()));
            }
        }
    }
    out
}

#[test]
fn ac3a_longest_match_dominance() {
    let lem = Lemmatizer::shipped();
    let rules = lem.rules();
    let nested = nested_rule_pairs(rules);
    assert!(!nested.is_empty());
    let mut rng = StdRng::seed_from_u64(0x5EED);
    let mut failures = Vec::new();
    for _ in 0..1000 {
        let (long, _) = &nested[rng.gen_range(0..nested.len())];
        let stem_len = rng.gen_range(long.min_stem_clusters().max(1)..=4);
        let stem: String = (0..stem_len)
            .map(|_| CONSONANTS[rng.gen_range(0..CONSONANTS.len())])
            .collect();
        let word = normalize(&format!("{stem}{}", long.suffix()));
        let seg = segment(&word).unwrap();
        let matched = rules.match_rules(&seg);

        // brute force: every rule whose suffix the word ends with and whose
        // stem guard holds; the longest must come first
        let oracle_best = rules
            .rules()
            .iter()
            .filter(|r| {
                let chars: Vec<char> = word.chars().collect();
                let suf: Vec<char> = r.suffix().chars().collect();
                chars.len() > suf.len()
                    && chars.ends_with(&suf)
                    && segment(&chars[..chars.len() - suf.len()].iter().collect::<String>())
                        .map(|s| s.cluster_count() >= r.min_stem_clusters())
                        .unwrap_or(false)
            })
            .map(|r| r.suffix().chars().count())
            .max();
        if matched.first().map(|r| r.suffix_len()) != oracle_best {
            failures.push(format!(
                "{word}: first match {:?}",
                matched.first().map(|r| r.suffix())
            ));
        }
        for (i, a) in matched.iter().enumerate() {
            for b in &matched[i + 1..] {
                if a.suffix().len() < b.suffix().len() && b.suffix().ends_with(a.suffix()) {
                    failures.push(format!("{word}: {} before {}", a.suffix(), b.suffix()));
                }
            }
        }
        let result = lemmatize(&word, &Lexicon::new(), rules).unwrap();
        if result.removed_suffix.as_deref() != matched.first().map(|r| r.suffix()) {
            failures.push(format!(
                "{word}: lemmatize used {:?}",
                result.removed_suffix
            ));
        }
    }
    failures.truncate(10);
    verdict(
        "AC3a",
        "longest-match dominance on 1000 random words",
        &failures,
    );
}

#[test]
fn ac3b_lexicon_precedence() {
    let lem = Lemmatizer::shipped();
    let mut failures = Vec::new();
    for entry in lem.lexicon().entries() {
        let first = entry.surface.chars().next().unwrap();
        let tail = &entry.surface[first.len_utf8()..];
        let injected = SuffixRule::new(tail, "ॐ", 1, i32::MIN).unwrap();
        let rules = RuleSet::new(
            lem.rules()
                .rules()
                .iter()
                .filter(|r| r.suffix() != injected.suffix())
                .cloned()
                .chain([injected.clone()]),
        )
        .unwrap();
        let seg = segment(&entry.surface).unwrap();
        if rules.best_match(&seg) != Some(&injected) {
            failures.push(format!("{}: injected rule would not fire", entry.surface));
            continue;
        }
        let r = lemmatize(&entry.surface, lem.lexicon(), &rules).unwrap();
        if r.provenance != Provenance::Lexicon || r.lemma != entry.lemma {
            failures.push(format!(
                "{}: got {} ({})",
                entry.surface, r.lemma, r.provenance
            ));
        }
    }
    verdict(
        "AC3b",
        &format!("lexicon precedence for {} entries", lem.lexicon().len()),
        &failures,
    );
}

#[test]
fn ac3c_idempotence_over_gold() {
    let lem = Lemmatizer::shipped();
    let mut failures = Vec::new();
    for pair in load_gold(data::GOLD).unwrap() {
        let once = lem.lemmatize(&pair.word).unwrap().lemma;
        let twice = lem.lemmatize(&once).unwrap().lemma;
        if once != twice {
            failures.push(format!("{} -> {once} -> {twice}", pair.word));
        }
    }
    verdict(
        "AC3c",
        "lemmatize is idempotent over the gold set",
        &failures,
    );
}

#[test]
fn ac3d_rule_reconstruction() {
    let lem = Lemmatizer::shipped();
    let mut failures = Vec::new();
    let mut rule_results = 0;
    for pair in load_gold(data::GOLD).unwrap() {
        let r = lem.lemmatize(&pair.word).unwrap();
        if r.provenance != Provenance::Rule {
            continue;
        }
        rule_results += 1;
        let appended = r.appended.as_deref().unwrap_or("");
        let rebuilt = r
            .lemma
            .strip_suffix(appended)
            .map(|stem| format!("{stem}{}", r.removed_suffix.as_deref().unwrap()));
        if rebuilt.as_deref() != Some(r.input.as_str()) {
            failures.push(format!("{}: rebuilt {rebuilt:?}", r.input));
        }
    }
    if rule_results == 0 {
        failures.push("no rule results in gold set".into());
    }
    verdict(
        "AC3d",
        &format!("reconstruction for {rule_results} rule results"),
        &failures,
    );
}

const POOL: &[char] = &[
    'क', 'ग', 'ज', 'ड', 'त', 'न', 'र', 'ल', 'स', 'अ', 'ओ', 'ा', 'ि', 'ी', 'ु', 'े', 'ो', 'ं', 'ँ', '्',
    '़', 'य',
];

#[test]
fn ac3e_string_surgery_matches_brute_force() {
    let mut rng = StdRng::seed_from_u64(42);
    let mut failures = Vec::new();
    let mut positives = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(1..8);
        let word = normalize(
            &(0..n)
                .map(|_| POOL[rng.gen_range(0..POOL.len())])
                .collect::<String>(),
        );
        if word.is_empty() {
            continue;
        }
        let chars: Vec<char> = word.chars().collect();
        let suffix: String = if rng.gen_bool(0.5) {
            let k = rng.gen_range(1..=chars.len());
            chars[chars.len() - k..].iter().collect()
        } else {
            (0..rng.gen_range(1..4))
                .map(|_| POOL[rng.gen_range(0..POOL.len())])
                .collect()
        };
        let replacement: String = (0..rng.gen_range(0..3))
            .map(|_| POOL[rng.gen_range(0..POOL.len())])
            .collect();
        let seg = segment(&word).unwrap();

        let suf: Vec<char> = suffix.chars().collect();
        let oracle_ends = chars.len() >= suf.len() && chars[chars.len() - suf.len()..] == suf[..];
        if ends_with_suffix(&seg, &suffix) != oracle_ends {
            failures.push(format!("ends_with({word:?}, {suffix:?})"));
            continue;
        }
        if !oracle_ends {
            continue;
        }
        positives += 1;
        let stem: String = chars[..chars.len() - suf.len()].iter().collect();
        let got = strip_and_append(&seg, &suffix, &replacement);
        if stem.is_empty() {
            if !matches!(got, Err(Error::EmptyStem { .. })) {
                failures.push(format!("strip({word:?}, {suffix:?}) should be EmptyStem"));
            }
            continue;
        }
        let oracle: String = format!("{stem}{replacement}").nfc().collect();
        if got.as_deref() != Ok(oracle.as_str()) {
            failures.push(format!(
                "strip({word:?}, {suffix:?}, {replacement:?}) = {got:?}"
            ));
        }
    }
    if positives < 1000 {
        failures.push(format!("only {positives} matching pairs generated"));
    }
    failures.truncate(10);
    verdict(
        "AC3e",
        "ends_with/strip_and_append agree with slicing on 10,000 pairs",
        &failures,
    );
}

fn has(c: &[SuffixCandidate], suffix: &str, replacement: &str) -> bool {
    c.iter()
        .any(|c| c.suffix == suffix && c.replacement == replacement)
}

#[test]
fn ac4_miner_consistency() {
    let pairs = load_pairs(data::PAIRS).unwrap();
    let candidates = mine_candidates(pairs.iter().map(|(a, b)| (a, b)));
    let mut failures = Vec::new();
    for (s, r) in [("ी", ""), ("ोँ", "ा"), ("ताओं", "")] {
        if !has(&candidates, s, r) {
            failures.push(format!("missing candidate ({s}, {r:?})"));
        }
    }
    for cand in &candidates {
        let rule = SuffixRule::new(&cand.suffix, &cand.replacement, 1, 0);
        for (inflected, root) in &cand.example_pairs {
            let applied = rule
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|rule| rule.apply(&segment(inflected)?));
            if applied.as_deref() != Ok(root.as_str()) {
                failures.push(format!(
                    "({}, {}) on {inflected}: {applied:?}",
                    cand.suffix, cand.replacement
                ));
            }
        }
    }
    let non_identical = pairs.iter().filter(|(a, b)| a != b).count();
    let support: usize = candidates.iter().map(|c| c.support).sum();
    if support != non_identical {
        failures.push(format!("support total {support} != {non_identical}"));
    }

    // the raw emission contains the ोँ conflict and must be rejected
    let raw = emit_rule_file(&candidates, 1);
    if !matches!(RuleSet::load(&raw), Err(Error::DuplicateSuffix { .. })) {
        failures.push("conflicting emission loaded".into());
    }
    // keep the best-supported replacement per suffix and round-trip it
    let mut kept: Vec<SuffixCandidate> = Vec::new();
    for c in &candidates {
        if !kept.iter().any(|k| k.suffix == c.suffix) {
            kept.push(c.clone());
        }
    }
    match RuleSet::load(&emit_rule_file(&kept, 1)) {
        Ok(rs) => {
            for c in &kept {
                if !rs
                    .rules()
                    .iter()
                    .any(|r| r.suffix() == c.suffix && r.replacement() == c.replacement)
                {
                    failures.push(format!(
                        "({}, {}) lost in round trip",
                        c.suffix, c.replacement
                    ));
                }
            }
        }
        Err(e) => failures.push(format!("curated emission failed to load: {e}")),
    }
    verdict(
        "AC4",
        &format!(
            "{} candidates from {} pairs re-apply and round-trip",
            candidates.len(),
            pairs.len()
        ),
        &failures,
    );
}

#[test]
fn ac5_composed_and_decomposed_agree() {
    // Python unicodedata.normalize("NFC", ...) of the precomposed nukta
    // spellings; U+095B and U+095D are composition exclusions.
    let reference: &[(&str, &[u32])] = &[
        ("न\u{095B}रें", &[0x928, 0x91C, 0x93C, 0x930, 0x947, 0x902]),
        ("प\u{095D}ाई", &[0x92A, 0x922, 0x93C, 0x93E, 0x908]),
    ];
    let lem = Lemmatizer::shipped();
    let mut failures = Vec::new();
    for (composed, cps) in reference {
        let want: String = cps.iter().map(|&c| char::from_u32(c).unwrap()).collect();
        if normalize(composed) != want {
            failures.push(format!("normalize({composed:?}) != reference"));
        }
        let a = lem.lemmatize(composed).unwrap();
        let b = lem.lemmatize(&want).unwrap();
        if a != b {
            failures.push(format!("{composed:?}: {a:?} vs {b:?}"));
        }
    }
    for pair in load_gold(data::GOLD).unwrap() {
        let nfc: String = pair.word.nfc().collect();
        let nfd: String = pair.word.nfd().collect();
        let a = lem.lemmatize(&nfc).unwrap();
        let b = lem.lemmatize(&nfd).unwrap();
        if a != b {
            failures.push(format!("{}: NFC {} vs NFD {}", pair.word, a.lemma, b.lemma));
        }
    }
    verdict(
        "AC5",
        "NFC and NFD encodings lemmatize identically",
        &failures,
    );
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_hindi-lemma")
}

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    use std::io::Write;
    let mut child = Command::new(bin())
        .args(args)
        .env_remove("HINDI_LEMMA_DATA")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the child may exit before reading stdin (usage errors, missing files)
    if let Err(e) = child.stdin.take().unwrap().write_all(stdin.as_bytes()) {
        assert_eq!(e.kind(), std::io::ErrorKind::BrokenPipe, "{e}");
    }
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn write(dir: &Path, name: &str, content: &[u8]) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, content).unwrap();
    p
}

#[test]
fn ac6_cli_exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let good_rules = data::source_dir().join("rules.tsv");
    let good_lex = data::source_dir().join("lexicon.tsv");
    let missing = dir.join("missing.tsv");
    let bad_fields = write(dir, "bad_fields.tsv", "ी\tा\t1\t1\textra\n".as_bytes());
    let dup_rules = write(dir, "dup.tsv", "ोँ\tा\nोँ\t\n".as_bytes());
    let bad_utf8 = write(dir, "bad_utf8.tsv", b"\xff\xfe\n");
    let lex_conflict = write(dir, "lex.tsv", "कवियोँ\tकवि\nकवियोँ\tकवी\n".as_bytes());
    let gold90: String = (0..10)
        .map(|i| {
            let w: String = ['क', CONSONANTS[i]].iter().collect();
            if i == 0 {
                format!("{w}\tग\n")
            } else {
                format!("{w}\t{w}\n")
            }
        })
        .collect();
    let gold90 = write(dir, "gold90.tsv", gold90.as_bytes());
    let empty_rules = write(dir, "empty.tsv", b"");
    let bad_pairs = write(dir, "pairs.tsv", "कमजोरी\n".as_bytes());

    let r = |p: &Path| p.to_str().unwrap().to_owned();
    let gr = r(&good_rules);
    let gl = r(&good_lex);
    let cases: Vec<(&str, Vec<String>, &str, i32)> = vec![
        (
            "lemmatize good data",
            vec!["lemmatize".into()],
            "नज़रें ज्यादा",
            0,
        ),
        ("lemmatize empty stdin", vec!["lemmatize".into()], "", 0),
        (
            "lemmatize missing rules",
            vec!["lemmatize".into(), "--rules".into(), r(&missing)],
            "x",
            2,
        ),
        (
            "lemmatize missing lexicon",
            vec!["lemmatize".into(), "--lexicon".into(), r(&missing)],
            "x",
            2,
        ),
        (
            "lemmatize missing input",
            vec!["lemmatize".into(), r(&missing)],
            "",
            2,
        ),
        (
            "lemmatize corrupt rules",
            vec!["lemmatize".into(), "--rules".into(), r(&bad_fields)],
            "x",
            3,
        ),
        (
            "lemmatize non-UTF-8 rules",
            vec!["lemmatize".into(), "--rules".into(), r(&bad_utf8)],
            "x",
            3,
        ),
        (
            "lemmatize conflicting lexicon",
            vec!["lemmatize".into(), "--lexicon".into(), r(&lex_conflict)],
            "x",
            3,
        ),
        ("eval shipped gold", vec!["eval".into()], "", 0),
        (
            "eval missing gold",
            vec!["eval".into(), "--gold".into(), r(&missing)],
            "",
            2,
        ),
        (
            "eval corrupt gold",
            vec!["eval".into(), "--gold".into(), r(&bad_fields)],
            "",
            3,
        ),
        (
            "eval 90% below 95",
            vec![
                "eval".into(),
                "--rules".into(),
                r(&empty_rules),
                "--lexicon".into(),
                r(&empty_rules),
                "--gold".into(),
                r(&gold90),
                "--min-accuracy".into(),
                "95".into(),
            ],
            "",
            1,
        ),
        (
            "eval 90% meets 90",
            vec![
                "eval".into(),
                "--rules".into(),
                r(&empty_rules),
                "--lexicon".into(),
                r(&empty_rules),
                "--gold".into(),
                r(&gold90),
                "--min-accuracy".into(),
                "90".into(),
            ],
            "",
            0,
        ),
        (
            "validate shipped",
            vec![
                "validate".into(),
                "--rules".into(),
                gr.clone(),
                "--lexicon".into(),
                gl.clone(),
            ],
            "",
            0,
        ),
        (
            "validate duplicate suffix",
            vec!["validate".into(), "--rules".into(), r(&dup_rules)],
            "",
            3,
        ),
        (
            "validate missing lexicon",
            vec!["validate".into(), "--lexicon".into(), r(&missing)],
            "",
            2,
        ),
        ("mine shipped pairs", vec!["mine".into()], "", 0),
        (
            "mine missing pairs",
            vec!["mine".into(), "--pairs".into(), r(&missing)],
            "",
            2,
        ),
        (
            "mine corrupt pairs",
            vec!["mine".into(), "--pairs".into(), r(&bad_pairs)],
            "",
            3,
        ),
    ];

    let mut failures = Vec::new();
    for (name, args, stdin, want) in &cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, _, stderr) = run(&args, stdin);
        if code != *want {
            failures.push(format!(
                "{name}: exit {code}, expected {want}; stderr: {}",
                stderr.trim()
            ));
        }
    }
    verdict(
        "AC6",
        &format!("CLI exit codes over {} scripted cases", cases.len()),
        &failures,
    );
}
