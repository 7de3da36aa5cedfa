//! Line reader shared by the lexicon, rule, gold and pair file formats.

/// A data line: 1-based line number and its tab-separated fields.
pub(crate) struct Record<'a> {
    pub line: usize,
    pub fields: Vec<&'a str>,
}

/// Yields the data lines of `content`. Blank lines and lines starting with
/// `#` are skipped; a trailing `<TAB>#...` on a data line is a comment.
pub(crate) fn records(content: &str) -> impl Iterator<Item = Record<'_>> {
    content.lines().enumerate().filter_map(|(i, raw)| {
        let raw = raw.trim_end_matches('\r');
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let data = match raw.find("\t#") {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        Some(Record {
            line: i + 1,
            fields: data.split('\t').collect(),
        })
    })
}
