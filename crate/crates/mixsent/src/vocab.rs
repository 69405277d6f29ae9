//! Word↔id mapping with frequency thresholding.
//!
//! Ids 0 and 1 are reserved for `<unk>` (out-of-vocabulary substitution)
//! and `<pad>` (batch padding); real words start at id 2, ordered by
//! descending count with lexicographic tie-breaking, which makes the id
//! space a pure function of the corpus contents. The reserved ids are not
//! reachable by surface lookup: a corpus that really contains the surface
//! `<unk>` often enough simply gets an ordinary entry for it.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use sha2::{Digest, Sha256};

use crate::preprocess::TweetExample;
use crate::{Error, Result};

pub const UNK_ID: usize = 0;
pub const PAD_ID: usize = 1;
pub const UNK_SURFACE: &str = "<unk>";
pub const PAD_SURFACE: &str = "<pad>";

/// Immutable vocabulary: id-ordered `(word, count)` entries plus the
/// reverse map over corpus words.
#[derive(Debug, Clone)]
pub struct Vocabulary {
    entries: Vec<(String, u64)>,
    index: HashMap<String, usize>,
    min_count: u64,
}

/// Count token texts across the corpus, keep words occurring at least
/// `min_count` times, and assign deterministic ids.
pub fn build_vocab(corpus: &[TweetExample], min_count: u64) -> Vocabulary {
    assert!(min_count >= 1, "min_count must be at least 1");
    let mut counts: HashMap<&str, u64> = HashMap::new();
    for ex in corpus {
        for tok in &ex.tokens {
            *counts.entry(tok.text.as_str()).or_insert(0) += 1;
        }
    }
    let mut retained: Vec<(String, u64)> = counts
        .into_iter()
        .filter(|(_, c)| *c >= min_count)
        .map(|(w, c)| (w.to_string(), c))
        .collect();
    retained.sort_by(|(wa, ca), (wb, cb)| cb.cmp(ca).then_with(|| wa.cmp(wb)));

    let mut entries = Vec::with_capacity(retained.len() + 2);
    entries.push((UNK_SURFACE.to_string(), 0));
    entries.push((PAD_SURFACE.to_string(), 0));
    entries.extend(retained);

    let index = entries
        .iter()
        .enumerate()
        .skip(2)
        .map(|(id, (w, _))| (w.clone(), id))
        .collect();

    Vocabulary {
        entries,
        index,
        min_count,
    }
}

impl Vocabulary {
    /// Number of entries including the reserved ids.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // <unk> and <pad> are always present
    }

    pub fn min_count(&self) -> u64 {
        self.min_count
    }

    /// Id of a word, or `UNK_ID` when absent.
    pub fn lookup(&self, word: &str) -> usize {
        self.index.get(word).copied().unwrap_or(UNK_ID)
    }

    pub fn word(&self, id: usize) -> &str {
        &self.entries[id].0
    }

    pub fn count(&self, id: usize) -> u64 {
        self.entries[id].1
    }

    /// Id-ordered `(word, count)` entries.
    pub fn entries(&self) -> &[(String, u64)] {
        &self.entries
    }

    /// Map a tweet's tokens to ids, substituting `<unk>` for OOV words.
    pub fn ids_for(&self, example: &TweetExample) -> Vec<usize> {
        example
            .tokens
            .iter()
            .map(|t| self.lookup(&t.text))
            .collect()
    }

    /// Serialize as the vocabulary file: a header line then one
    /// `word<TAB>count` line per entry in id order.
    pub fn write_to<W: Write>(&self, mut writer: W) -> Result<()> {
        let mut buf = String::new();
        self.render(&mut buf);
        writer
            .write_all(buf.as_bytes())
            .map_err(|e| Error::io("writing vocabulary", e))
    }

    fn render(&self, out: &mut String) {
        use std::fmt::Write as _;
        let _ = writeln!(out, "#vocab v1 min_count={}", self.min_count);
        for (word, count) in &self.entries {
            let _ = writeln!(out, "{word}\t{count}");
        }
    }

    pub fn read_from<R: BufRead>(reader: R, file: &str) -> Result<Vocabulary> {
        let mut lines = reader.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::parse(file, 1, "empty vocabulary file"))?;
        let header = header.map_err(|e| Error::io(format!("reading {file}"), e))?;
        let min_count = header
            .strip_prefix("#vocab v1 min_count=")
            .and_then(|v| v.trim().parse::<u64>().ok())
            .ok_or_else(|| Error::parse(file, 1, "malformed vocabulary header"))?;

        let mut entries = Vec::new();
        for (idx, line) in lines {
            let line_no = idx + 1;
            let line = line.map_err(|e| Error::io(format!("reading {file}"), e))?;
            if line.is_empty() {
                continue;
            }
            let (word, count) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(file, line_no, "expected word<TAB>count"))?;
            let count: u64 = count
                .trim()
                .parse()
                .map_err(|_| Error::parse(file, line_no, "count is not an integer"))?;
            entries.push((word.to_string(), count));
        }
        if entries.len() < 2 {
            return Err(Error::parse(file, 1, "vocabulary lacks reserved entries"));
        }
        let index = entries
            .iter()
            .enumerate()
            .skip(2)
            .map(|(id, (w, _))| (w.clone(), id))
            .collect();
        Ok(Vocabulary {
            entries,
            index,
            min_count,
        })
    }

    /// Hash of the serialized contents; stored in model containers so a
    /// checkpoint can reject a foreign id space.
    pub fn content_hash(&self) -> String {
        let mut buf = String::new();
        self.render(&mut buf);
        let digest = Sha256::digest(buf.as_bytes());
        hex_string(&digest)
    }
}

fn hex_string(bytes: &[u8]) -> String {
    use std::fmt::Write as _;
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        let _ = write!(s, "{b:02x}");
    }
    s
}
