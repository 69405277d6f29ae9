//! Sentiment classification for code-mixed social-media text.
//!
//! `mixsent` is a self-contained train/evaluate/predict toolkit for 3-class
//! (positive / negative / neutral) sentiment classification of noisy,
//! code-mixed tweets. Everything is implemented from scratch in f64:
//! tweet normalization, word2vec-style embeddings, a recurrent convolutional
//! classifier with handwritten backpropagation, mini-batch SGD, and the
//! evaluation arithmetic (confusion matrices, weighted/macro P/R/F1).
//!
//! ## Modules
//!
//! - [`preprocess`] — tweet normalization rules (lowercasing, URL removal,
//!   garbage filtering, MENTION/TOPIC folding, emoji splitting) and the
//!   TSV / CoNLL-style file formats.
//! - [`vocab`] — frequency-thresholded word↔id mapping with `<unk>`/`<pad>`
//!   handling, shared by embeddings and the classifier.
//! - [`embed`] — skip-gram and CBOW embedding training with negative
//!   sampling, plus the word2vec text format.
//! - [`rcnn`] — the classifier: bidirectional context recurrences, tanh
//!   projection, max-over-time pooling, softmax; exact analytic gradients.
//! - [`trainer`] — seeded mini-batch SGD with validation-based model
//!   selection, early stopping, and text checkpoints.
//! - [`metrics`] — confusion matrix, per-class and averaged P/R/F1,
//!   misclassification reports, JSON and table rendering.
//! - [`cli`] — the `mixsent` binary's five subcommands wired over the above.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run -p mixsent --example preprocess_tweets
//! cargo run -p mixsent --example build_vocab
//! cargo run -p mixsent --example train_embeddings
//! cargo run -p mixsent --example forward_and_predict
//! cargo run -p mixsent --example gradient_check
//! cargo run -p mixsent --example train_classifier
//! cargo run -p mixsent --example evaluate_report
//! cargo run -p mixsent --example full_pipeline
//! ```

pub mod cli;
pub mod embed;
pub mod metrics;
pub mod preprocess;
pub mod rcnn;
pub mod rng;
pub mod trainer;
pub mod vocab;

pub use preprocess::{Polarity, RawTweet, Token, TokenKind, TweetExample};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{file}:{line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },
    #[error("empty sequence")]
    EmptySequence,
    #[error("empty training set")]
    EmptyTrainingSet,
    #[error("empty evaluation")]
    EmptyEvaluation,
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("vocabulary hash mismatch: model was built with {expected}, provided vocabulary hashes to {actual}")]
    VocabHashMismatch { expected: String, actual: String },
}

impl Error {
    pub(crate) fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }

    pub(crate) fn parse(file: impl Into<String>, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            file: file.into(),
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
