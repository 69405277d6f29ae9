//! Tweet normalization.
//!
//! Raw tweets (free text or the task's token-per-line format) are turned
//! into token sequences by a fixed rule pipeline:
//!
//! 1. lowercase every token (the inserted `MENTION`/`TOPIC` literals are
//!    exempt, which keeps the pipeline idempotent on its own output),
//! 2. delete URLs: a `http`/`https` token swallows the following tokens
//!    while they look like a link tail,
//! 3. delete garbage tokens (mojibake, replacement characters, isolated
//!    combining marks),
//! 4. fold mentions and topics: `@`/`#` markers and the token they attach
//!    to become the `MENTION`/`TOPIC` literals,
//! 5. split emoji from text, one token per emoji grapheme cluster.
//!
//! After emoji splitting, URL and garbage deletion run once more: splitting
//! can expose a bare `http` or an all-garbage fragment that the earlier
//! stages could not see, and re-running them is what makes
//! `preprocess_tweet` idempotent over detokenized output.
//!
//! A raw token that is exactly `MENTION` or `TOPIC` is treated as the
//! literal and kept verbatim; the literals are reserved words of the
//! output alphabet.

mod emoji;

pub use emoji::{is_emoji_cluster, is_garbage_char};

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use unicode_segmentation::UnicodeSegmentation;

use crate::{Error, Result};

/// Literal inserted for folded @-mentions.
pub const MENTION: &str = "MENTION";
/// Literal inserted for folded #-topics.
pub const TOPIC: &str = "TOPIC";

/// Sentiment polarity of a whole tweet. The index order (positive,
/// negative, neutral) is the class order used everywhere downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    Negative,
    Neutral,
}

impl Polarity {
    pub const ALL: [Polarity; 3] = [Polarity::Positive, Polarity::Negative, Polarity::Neutral];

    pub fn index(self) -> usize {
        match self {
            Polarity::Positive => 0,
            Polarity::Negative => 1,
            Polarity::Neutral => 2,
        }
    }

    pub fn from_index(i: usize) -> Option<Polarity> {
        Polarity::ALL.get(i).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::Positive => "positive",
            Polarity::Negative => "negative",
            Polarity::Neutral => "neutral",
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Polarity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "positive" => Ok(Polarity::Positive),
            "negative" => Ok(Polarity::Negative),
            "neutral" => Ok(Polarity::Neutral),
            other => Err(format!("unknown polarity label {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Mention,
    Topic,
    Emoji,
}

/// One output token of the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub text: String,
    pub kind: TokenKind,
}

impl Token {
    pub fn word(text: impl Into<String>) -> Token {
        let text = text.into();
        let kind = classify_token(&text);
        Token { text, kind }
    }
}

/// Where a raw tweet's content comes from.
#[derive(Debug, Clone)]
pub enum RawSource {
    /// Free text, whitespace-tokenized by the pipeline.
    Text(String),
    /// Pre-tokenized (surface, language-tag) pairs from the task format.
    /// Language tags are parsed but never used by the model.
    Tokens(Vec<(String, Option<String>)>),
}

/// An unprocessed tweet record.
#[derive(Debug, Clone)]
pub struct RawTweet {
    pub uid: String,
    pub source: RawSource,
    pub label: Option<Polarity>,
}

/// A preprocessed tweet: ordered tokens plus the gold label when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TweetExample {
    pub uid: String,
    pub tokens: Vec<Token>,
    pub label: Option<Polarity>,
}

impl TweetExample {
    /// Space-joined token texts (the detokenized form).
    pub fn text(&self) -> String {
        let parts: Vec<&str> = self.tokens.iter().map(|t| t.text.as_str()).collect();
        parts.join(" ")
    }
}

/// Unicode lowercase mapping; total over any input.
pub fn lowercase(token_text: &str) -> String {
    token_text.to_lowercase()
}

fn is_url_head(tok: &str) -> bool {
    tok == "http" || tok == "https" || tok.starts_with("http://") || tok.starts_with("https://")
}

fn is_url_tail(tok: &str) -> bool {
    tok.contains('/') || tok.contains('.') || tok.contains(':')
}

/// Remove links: a `http`/`https` token (bare or with an attached `://…`)
/// is merged with the following tokens while they contain `/`, `.` or `:`,
/// and the merged link is dropped.
pub fn strip_urls<S: AsRef<str>>(tokens: &[S]) -> Vec<String> {
    let mut out = Vec::with_capacity(tokens.len());
    let mut i = 0;
    while i < tokens.len() {
        let tok = tokens[i].as_ref();
        if is_url_head(tok) {
            i += 1;
            while i < tokens.len() && is_url_tail(tokens[i].as_ref()) {
                i += 1;
            }
        } else {
            out.push(tok.to_string());
            i += 1;
        }
    }
    out
}

/// True when the token is pure garbage (every character in the garbage
/// class) and should be dropped.
pub fn is_garbage_token(token_text: &str) -> bool {
    !token_text.is_empty() && token_text.chars().all(is_garbage_char)
}

/// Fold mentions and topics into their literals. A bare `@`/`#` consumes
/// its successor; any other token carrying `@` (or, failing that, `#`) is
/// replaced whole, so no output word ever contains either marker.
pub fn fold_mentions_topics<S: AsRef<str>>(tokens: &[S]) -> Vec<String> {
    let mut out = Vec::with_capacity(tokens.len());
    let mut i = 0;
    while i < tokens.len() {
        let tok = tokens[i].as_ref();
        if tok == "@" || tok == "#" {
            out.push(if tok == "@" { MENTION } else { TOPIC }.to_string());
            i += 2; // marker plus the token it attaches to
        } else if tok.contains('@') {
            out.push(MENTION.to_string());
            i += 1;
        } else if tok.contains('#') {
            out.push(TOPIC.to_string());
            i += 1;
        } else {
            out.push(tok.to_string());
            i += 1;
        }
    }
    out
}

/// Split a token into text runs and single-emoji tokens, preserving order.
/// A run of k emoji yields k tokens.
pub fn split_emoji(token_text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut run = String::new();
    for cluster in token_text.graphemes(true) {
        if is_emoji_cluster(cluster) {
            if !run.is_empty() {
                out.push(std::mem::take(&mut run));
            }
            out.push(cluster.to_string());
        } else {
            run.push_str(cluster);
        }
    }
    if !run.is_empty() {
        out.push(run);
    }
    out
}

fn classify_token(text: &str) -> TokenKind {
    if text == MENTION {
        TokenKind::Mention
    } else if text == TOPIC {
        TokenKind::Topic
    } else if is_emoji_cluster(text) && text.graphemes(true).count() == 1 {
        TokenKind::Emoji
    } else {
        TokenKind::Word
    }
}

fn initial_tokens(source: &RawSource) -> Vec<String> {
    match source {
        RawSource::Text(text) => text.split_whitespace().map(str::to_string).collect(),
        RawSource::Tokens(pairs) => pairs
            .iter()
            .flat_map(|(surface, _tag)| surface.split_whitespace())
            .map(str::to_string)
            .collect(),
    }
}

/// Run the full rule pipeline over one raw tweet. Never fails; a tweet
/// whose content is entirely stripped yields an empty token list.
pub fn preprocess_tweet(raw: &RawTweet) -> TweetExample {
    let lowered: Vec<String> = initial_tokens(&raw.source)
        .into_iter()
        .map(|t| {
            if t == MENTION || t == TOPIC {
                t
            } else {
                lowercase(&t)
            }
        })
        .collect();
    let no_urls = strip_urls(&lowered);
    let kept: Vec<String> = no_urls.into_iter().filter(|t| !is_garbage_token(t)).collect();
    let folded = fold_mentions_topics(&kept);
    let split: Vec<String> = folded.iter().flat_map(|t| split_emoji(t)).collect();
    // Splitting can expose bare URL heads or all-garbage fragments that the
    // earlier stages could not see; re-running the two deletion rules keeps
    // the pipeline idempotent.
    let cleaned: Vec<String> = strip_urls(&split)
        .into_iter()
        .filter(|t| !is_garbage_token(t))
        .collect();

    let tokens = cleaned
        .into_iter()
        .map(|text| {
            let kind = classify_token(&text);
            Token { text, kind }
        })
        .collect();

    TweetExample {
        uid: raw.uid.clone(),
        tokens,
        label: raw.label,
    }
}

fn parse_label(field: &str, file: &str, line_no: usize) -> Result<Option<Polarity>> {
    if field == "-" {
        return Ok(None);
    }
    field
        .parse::<Polarity>()
        .map(Some)
        .map_err(|e| Error::parse(file, line_no, e))
}

/// Read raw tweets from `uid<TAB>label<TAB>text` lines. The label is one of
/// `positive`/`negative`/`neutral` or `-` for unlabeled. Blank lines are
/// skipped.
pub fn read_raw_tsv<R: BufRead>(reader: R, file: &str) -> Result<Vec<RawTweet>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::io(format!("reading {file}"), e))?;
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.splitn(3, '\t');
        let uid = parts.next().unwrap_or("").trim();
        let label_field = parts
            .next()
            .ok_or_else(|| Error::parse(file, line_no, "missing label field"))?
            .trim();
        let text = parts
            .next()
            .ok_or_else(|| Error::parse(file, line_no, "missing text field"))?;
        if uid.is_empty() {
            return Err(Error::parse(file, line_no, "empty uid"));
        }
        let label = parse_label(label_field, file, line_no)?;
        out.push(RawTweet {
            uid: uid.to_string(),
            source: RawSource::Text(text.to_string()),
            label,
        });
    }
    Ok(out)
}

/// Read the task's CoNLL-style format: a `meta <uid> <label>` line followed
/// by one `surface<TAB>langtag` line per token, records separated by blank
/// lines. Language tags are kept in the record but otherwise unused.
pub fn read_conll<R: BufRead>(reader: R, file: &str) -> Result<Vec<RawTweet>> {
    let mut out = Vec::new();
    let mut current: Option<RawTweet> = None;
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::io(format!("reading {file}"), e))?;
        let trimmed = line.trim_end_matches(['\r', '\n']);
        if trimmed.trim().is_empty() {
            if let Some(tweet) = current.take() {
                out.push(tweet);
            }
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        if fields.next() == Some("meta") {
            if let Some(tweet) = current.take() {
                out.push(tweet);
            }
            let uid = fields
                .next()
                .ok_or_else(|| Error::parse(file, line_no, "meta line without uid"))?;
            let label = match fields.next() {
                None => None,
                Some(l) => parse_label(l, file, line_no)?,
            };
            current = Some(RawTweet {
                uid: uid.to_string(),
                source: RawSource::Tokens(Vec::new()),
                label,
            });
        } else {
            let tweet = current
                .as_mut()
                .ok_or_else(|| Error::parse(file, line_no, "token line before any meta line"))?;
            let mut cols = trimmed.splitn(2, '\t');
            let surface = cols.next().unwrap_or("").to_string();
            let tag = cols.next().map(|t| t.trim().to_string());
            if let RawSource::Tokens(pairs) = &mut tweet.source {
                pairs.push((surface, tag));
            }
        }
    }
    if let Some(tweet) = current.take() {
        out.push(tweet);
    }
    Ok(out)
}

/// Write preprocessed tweets as `uid<TAB>label<TAB>tok1 tok2 …` lines
/// (label `-` when unknown).
pub fn write_tokenized_tsv<W: Write>(mut writer: W, examples: &[TweetExample]) -> Result<()> {
    for ex in examples {
        let label = ex.label.map_or("-", Polarity::as_str);
        writeln!(writer, "{}\t{}\t{}", ex.uid, label, ex.text())
            .map_err(|e| Error::io("writing tokenized tsv", e))?;
    }
    Ok(())
}

/// Read back the tokenized format written by [`write_tokenized_tsv`].
pub fn read_tokenized_tsv<R: BufRead>(reader: R, file: &str) -> Result<Vec<TweetExample>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::io(format!("reading {file}"), e))?;
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.splitn(3, '\t');
        let uid = parts.next().unwrap_or("").trim();
        let label_field = parts
            .next()
            .ok_or_else(|| Error::parse(file, line_no, "missing label field"))?
            .trim();
        let tokens_field = parts
            .next()
            .ok_or_else(|| Error::parse(file, line_no, "missing tokens field"))?;
        if uid.is_empty() {
            return Err(Error::parse(file, line_no, "empty uid"));
        }
        let label = parse_label(label_field, file, line_no)?;
        let tokens = tokens_field
            .split_whitespace()
            .map(Token::word)
            .collect();
        out.push(TweetExample {
            uid: uid.to_string(),
            tokens,
            label,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn raw_text(uid: &str, text: &str) -> RawTweet {
        RawTweet {
            uid: uid.to_string(),
            source: RawSource::Text(text.to_string()),
            label: None,
        }
    }

    fn token_texts(ex: &TweetExample) -> Vec<&str> {
        ex.tokens.iter().map(|t| t.text.as_str()).collect()
    }

    #[test]
    fn lowercase_examples() {
        assert_eq!(lowercase("LoveIsLove"), "loveislove");
        assert_eq!(lowercase(""), "");
        assert_eq!(lowercase("été😊"), "été😊");
    }

    #[test]
    fn strip_urls_examples() {
        assert_eq!(strip_urls(&["see", "https", "://t.co/x"]), vec!["see"]);
        assert_eq!(
            strip_urls(&["no", "links", "here"]),
            vec!["no", "links", "here"]
        );
        assert_eq!(strip_urls(&["http"]), Vec::<String>::new());
    }

    #[test]
    fn strip_urls_tail_enumeration() {
        // Hand-enumerated 1–3 token suffixes after a bare head.
        assert_eq!(strip_urls(&["http", "t.co"]), Vec::<String>::new());
        assert_eq!(strip_urls(&["http", "t.co", "/x"]), Vec::<String>::new());
        assert_eq!(
            strip_urls(&["http", "t.co", "/x", ":8080"]),
            Vec::<String>::new()
        );
        // A plain word stops the tail.
        assert_eq!(strip_urls(&["http", "hello"]), vec!["hello"]);
        assert_eq!(strip_urls(&["http", "t.co", "hello"]), vec!["hello"]);
        // Attached form with its own tail.
        assert_eq!(strip_urls(&["https://t.co/x", "more.words", "end"]), vec!["end"]);
        // Two heads in a row are both deleted.
        assert_eq!(strip_urls(&["http", "http"]), Vec::<String>::new());
    }

    #[test]
    fn fold_examples() {
        assert_eq!(
            fold_mentions_topics(&["@", "bomanirani", "hi"]),
            vec!["MENTION", "hi"]
        );
        assert_eq!(fold_mentions_topics(&["#", "LoveIsLove"]), vec!["TOPIC"]);
        assert_eq!(fold_mentions_topics(&["a", "b"]), vec!["a", "b"]);
    }

    #[test]
    fn fold_edge_cases() {
        // Trailing bare markers still produce the literal.
        assert_eq!(fold_mentions_topics(&["hi", "@"]), vec!["hi", "MENTION"]);
        assert_eq!(fold_mentions_topics(&["#"]), vec!["TOPIC"]);
        // Attached forms are replaced whole.
        assert_eq!(fold_mentions_topics(&["@user"]), vec!["MENTION"]);
        assert_eq!(fold_mentions_topics(&["#tag", "x"]), vec!["TOPIC", "x"]);
        // Markers anywhere in a token replace it, so no word keeps them.
        assert_eq!(fold_mentions_topics(&["me@home"]), vec!["MENTION"]);
        assert_eq!(fold_mentions_topics(&["c#"]), vec!["TOPIC"]);
    }

    #[test]
    fn split_emoji_examples() {
        assert_eq!(split_emoji("he😊"), vec!["he", "😊"]);
        assert_eq!(split_emoji("😊☹"), vec!["😊", "☹"]);
        assert_eq!(split_emoji("plain"), vec!["plain"]);
        assert_eq!(split_emoji("😊😊"), vec!["😊", "😊"]);
        assert_eq!(split_emoji("a😊b"), vec!["a", "😊", "b"]);
    }

    #[test]
    fn garbage_examples() {
        assert!(is_garbage_token("â€¦"));
        assert!(!is_garbage_token("hello"));
        assert!(is_garbage_token("\u{FFFD}\u{FFFD}"));
        assert!(is_garbage_token("…"));
        assert!(is_garbage_token("à"));
        // Devanagari words survive; matras alone do not.
        assert!(!is_garbage_token("की"));
        assert!(is_garbage_token("\u{093E}"));
    }

    #[test]
    fn preprocess_tweet_examples() {
        let ex = preprocess_tweet(&raw_text("1", "RT @ bomanirani Good😊 https t.co/x"));
        assert_eq!(token_texts(&ex), vec!["rt", "MENTION", "good", "😊"]);
        assert_eq!(
            ex.tokens.iter().map(|t| t.kind).collect::<Vec<_>>(),
            vec![
                TokenKind::Word,
                TokenKind::Mention,
                TokenKind::Word,
                TokenKind::Emoji
            ]
        );

        let ex = preprocess_tweet(&raw_text("2", ""));
        assert!(ex.tokens.is_empty());

        let ex = preprocess_tweet(&raw_text("3", "# LoveIsLove"));
        assert_eq!(token_texts(&ex), vec!["TOPIC"]);
        assert_eq!(ex.tokens[0].kind, TokenKind::Topic);
    }

    #[test]
    fn preprocess_keeps_uid_and_label() {
        let raw = RawTweet {
            uid: "42".into(),
            source: RawSource::Text("ok".into()),
            label: Some(Polarity::Negative),
        };
        let ex = preprocess_tweet(&raw);
        assert_eq!(ex.uid, "42");
        assert_eq!(ex.label, Some(Polarity::Negative));
    }

    #[test]
    fn preprocess_pretokenized_source() {
        let raw = RawTweet {
            uid: "7".into(),
            source: RawSource::Tokens(vec![
                ("RT".into(), Some("Eng".into())),
                ("@".into(), Some("O".into())),
                ("bomanirani".into(), Some("Hin".into())),
            ]),
            label: None,
        };
        assert_eq!(token_texts(&preprocess_tweet(&raw)), vec!["rt", "MENTION"]);
    }

    #[test]
    fn read_raw_tsv_parses_and_reports_lines() {
        let data = "1\tpositive\tGood stuff\n2\t-\t\n3\tnegative\tbah\n";
        let tweets = read_raw_tsv(data.as_bytes(), "in.tsv").unwrap();
        assert_eq!(tweets.len(), 3);
        assert_eq!(tweets[0].label, Some(Polarity::Positive));
        assert_eq!(tweets[1].label, None);

        let bad = "1\tpositive\tok\n2\tbogus\tx\n";
        let err = read_raw_tsv(bad.as_bytes(), "in.tsv").unwrap_err();
        assert!(err.to_string().contains("in.tsv:2"), "{err}");

        let missing = "1\tpositive\n";
        let err = read_raw_tsv(missing.as_bytes(), "in.tsv").unwrap_err();
        assert!(err.to_string().contains("in.tsv:1"), "{err}");
    }

    #[test]
    fn read_conll_records() {
        let data = "meta 36925 positive\nRT\tEng\n@\tO\nbomanirani\tHin\n\nmeta 2 -\nok\tEng\n";
        let tweets = read_conll(data.as_bytes(), "in.conll").unwrap();
        assert_eq!(tweets.len(), 2);
        assert_eq!(tweets[0].uid, "36925");
        assert_eq!(tweets[0].label, Some(Polarity::Positive));
        match &tweets[0].source {
            RawSource::Tokens(pairs) => {
                assert_eq!(pairs.len(), 3);
                assert_eq!(pairs[1], ("@".to_string(), Some("O".to_string())));
            }
            other => panic!("unexpected source {other:?}"),
        }
        assert_eq!(tweets[1].label, None);

        let err = read_conll("word\tEng\n".as_bytes(), "x.conll").unwrap_err();
        assert!(err.to_string().contains("x.conll:1"), "{err}");
    }

    #[test]
    fn tokenized_tsv_round_trip() {
        let examples = vec![
            preprocess_tweet(&raw_text("1", "RT @ bomanirani Good😊 https t.co/x")),
            preprocess_tweet(&raw_text("2", "")),
            TweetExample {
                uid: "3".into(),
                tokens: vec![Token::word("ok")],
                label: Some(Polarity::Neutral),
            },
        ];
        let mut buf = Vec::new();
        write_tokenized_tsv(&mut buf, &examples).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("1\t-\trt MENTION good 😊\n"));
        let back = read_tokenized_tsv(buf.as_slice(), "tok.tsv").unwrap();
        assert_eq!(back, examples);
    }

    // Atoms a code-mixed tweet plausibly contains, including the tricky
    // fragments the rules target.
    fn atom() -> impl Strategy<Value = String> {
        prop_oneof![
            "[a-z]{1,8}",
            "[A-Z][a-zA-Z]{0,7}",
            Just("RT".to_string()),
            Just("@".to_string()),
            Just("#".to_string()),
            Just("@bomanirani".to_string()),
            Just("#LoveIsLove".to_string()),
            Just("http".to_string()),
            Just("https".to_string()),
            Just("https://t.co/Abc1".to_string()),
            Just("t.co/x".to_string()),
            Just("😊".to_string()),
            Just("he😊".to_string()),
            Just("😊☹".to_string()),
            Just("http😊".to_string()),
            Just("…😊".to_string()),
            Just("â€¦".to_string()),
            Just("…".to_string()),
            Just("achha".to_string()),
            Just("की".to_string()),
            Just("123".to_string()),
            Just("me@home".to_string()),
            Just("c#".to_string()),
        ]
    }

    fn tweet_text() -> impl Strategy<Value = String> {
        proptest::collection::vec(atom(), 0..12).prop_map(|atoms| atoms.join(" "))
    }

    proptest! {
        #[test]
        fn pipeline_is_idempotent(text in tweet_text()) {
            let once = preprocess_tweet(&raw_text("p", &text));
            let twice = preprocess_tweet(&raw_text("p", &once.text()));
            prop_assert_eq!(once.tokens, twice.tokens);
        }

        #[test]
        fn word_tokens_are_clean(text in tweet_text()) {
            let ex = preprocess_tweet(&raw_text("p", &text));
            for tok in &ex.tokens {
                if tok.kind == TokenKind::Word {
                    prop_assert!(!tok.text.contains('@'), "{:?}", tok.text);
                    prop_assert!(!tok.text.contains('#'), "{:?}", tok.text);
                    prop_assert!(!tok.text.chars().any(char::is_uppercase), "{:?}", tok.text);
                    prop_assert!(!is_emoji_cluster(&tok.text), "{:?}", tok.text);
                }
            }
        }

        #[test]
        fn split_emoji_grows_and_preserves_content(text in "[a-z😊☹️🎉]{0,10}") {
            let parts = split_emoji(&text);
            if !text.is_empty() {
                prop_assert!(!parts.is_empty());
            }
            prop_assert_eq!(parts.concat(), text);
        }

        #[test]
        fn garbage_never_eats_alphanumerics(text in "\\PC{0,10}") {
            if text.chars().any(|c| c.is_ascii_alphanumeric()) {
                prop_assert!(!is_garbage_token(&text));
            }
        }
    }
}
