//! Word embedding training: skip-gram and CBOW with negative sampling,
//! single-threaded and fully deterministic under a fixed seed, plus the
//! word2vec text format.

use std::str::FromStr;

use ndarray::{Array2, ArrayView1, ArrayViewMut1};
use rand::Rng;

use crate::preprocess::TweetExample;
use crate::rng::named_rng;
use crate::vocab::{Vocabulary, PAD_ID, PAD_SURFACE, UNK_SURFACE};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbedMode {
    SkipGram,
    Cbow,
}

impl FromStr for EmbedMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "skipgram" | "skip-gram" | "sg" => Ok(EmbedMode::SkipGram),
            "cbow" => Ok(EmbedMode::Cbow),
            other => Err(format!("unknown embedding mode {other:?}")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct EmbedTrainConfig {
    pub mode: EmbedMode,
    pub dim: usize,
    pub lr: f64,
    pub window: usize,
    pub epochs: usize,
    pub negatives: usize,
    pub seed: u64,
}

impl Default for EmbedTrainConfig {
    fn default() -> Self {
        EmbedTrainConfig {
            mode: EmbedMode::SkipGram,
            dim: 300,
            lr: 0.05,
            window: 5,
            epochs: 5,
            negatives: 5,
            seed: 42,
        }
    }
}

impl EmbedTrainConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dim < 1 {
            return Err(Error::Config("embedding dim must be at least 1".into()));
        }
        if !(self.lr > 0.0) {
            return Err(Error::Config("embedding lr must be positive".into()));
        }
        if self.window < 1 || self.epochs < 1 || self.negatives < 1 {
            return Err(Error::Config(
                "window, epochs and negatives must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// The `V×d` lookup table of word vectors, row `i` holding the vector of
/// vocabulary id `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingMatrix {
    vectors: Array2<f64>,
    vocab_hash: String,
}

impl EmbeddingMatrix {
    /// Standard word2vec initialization: uniform in `[-0.5/d, 0.5/d)`.
    pub fn random(v: &Vocabulary, dim: usize, seed: u64) -> EmbeddingMatrix {
        let mut rng = named_rng(seed, "embed-init");
        let bound = 0.5 / dim as f64;
        let vectors =
            Array2::from_shape_fn((v.len(), dim), |_| rng.gen_range(-bound..bound));
        EmbeddingMatrix {
            vectors,
            vocab_hash: v.content_hash(),
        }
    }

    pub fn from_vectors(vectors: Array2<f64>, vocab_hash: String) -> EmbeddingMatrix {
        EmbeddingMatrix {
            vectors,
            vocab_hash,
        }
    }

    pub fn dim(&self) -> usize {
        self.vectors.ncols()
    }

    pub fn rows(&self) -> usize {
        self.vectors.nrows()
    }

    pub fn vocab_hash(&self) -> &str {
        &self.vocab_hash
    }

    pub fn row(&self, id: usize) -> ArrayView1<'_, f64> {
        self.vectors.row(id)
    }

    pub fn row_mut(&mut self, id: usize) -> ArrayViewMut1<'_, f64> {
        self.vectors.row_mut(id)
    }

    pub fn vectors(&self) -> &Array2<f64> {
        &self.vectors
    }

    pub fn is_finite(&self) -> bool {
        self.vectors.iter().all(|v| v.is_finite())
    }
}

/// Cosine similarity between two vocabulary ids.
pub fn cosine(m: &EmbeddingMatrix, a: usize, b: usize) -> f64 {
    let va = m.row(a);
    let vb = m.row(b);
    let dot = va.dot(&vb);
    let na = va.dot(&va).sqrt();
    let nb = vb.dot(&vb).sqrt();
    if na == 0.0 || nb == 0.0 {
        0.0
    } else {
        dot / (na * nb)
    }
}

/// Outcome counters for a training run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbedTrainStats {
    /// (center, context) pairs processed across all epochs.
    pub pairs_trained: u64,
    /// Set when the corpus offered nothing to train on and the
    /// initialization was returned unchanged.
    pub degenerate_corpus: bool,
}

/// Unigram^0.75 negative-sampling distribution over the vocabulary,
/// normalized to sum to 1. `<pad>` always has zero mass; entries with zero
/// count (including `<unk>`) carry none either.
pub fn negative_sampling_probs(v: &Vocabulary) -> Vec<f64> {
    let mut weights: Vec<f64> = v
        .entries()
        .iter()
        .map(|(_, c)| (*c as f64).powf(0.75))
        .collect();
    weights[PAD_ID] = 0.0;
    let total: f64 = weights.iter().sum();
    if total > 0.0 {
        for w in &mut weights {
            *w /= total;
        }
    }
    weights
}

fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

struct NegativeSampler {
    cdf: Vec<f64>,
}

impl NegativeSampler {
    fn new(v: &Vocabulary) -> Option<NegativeSampler> {
        let probs = negative_sampling_probs(v);
        if probs.iter().sum::<f64>() == 0.0 {
            return None;
        }
        let mut acc = 0.0;
        let cdf = probs
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect();
        Some(NegativeSampler { cdf })
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.gen();
        self.cdf.partition_point(|&c| c <= u).min(self.cdf.len() - 1)
    }
}

/// Train word vectors on the corpus. The negative-sampling distribution is
/// unigram^0.75; the learning rate decays linearly to zero over all
/// (epoch, position) steps; the returned matrix is the input side.
///
/// A corpus without a single trainable pair (every tweet shorter than two
/// tokens, or no vocabulary mass to sample negatives from) returns the
/// initialization unchanged with `degenerate_corpus` set.
pub fn train_embeddings(
    corpus: &[TweetExample],
    v: &Vocabulary,
    cfg: &EmbedTrainConfig,
) -> Result<(EmbeddingMatrix, EmbedTrainStats)> {
    cfg.validate()?;
    let mut input = EmbeddingMatrix::random(v, cfg.dim, cfg.seed);
    let sentences: Vec<Vec<usize>> = corpus.iter().map(|ex| v.ids_for(ex)).collect();
    let total_positions: usize = sentences.iter().map(Vec::len).sum();
    let trainable = sentences.iter().any(|s| s.len() >= 2);
    let sampler = match (NegativeSampler::new(v), trainable) {
        (Some(s), true) => s,
        _ => {
            return Ok((
                input,
                EmbedTrainStats {
                    pairs_trained: 0,
                    degenerate_corpus: true,
                },
            ))
        }
    };

    let dim = cfg.dim;
    let mut output = Array2::<f64>::zeros((v.len(), dim));
    let mut rng = named_rng(cfg.seed, "embed-train");
    let total_steps = (cfg.epochs * total_positions) as f64;
    let mut step = 0u64;
    let mut pairs = 0u64;

    let mut hidden = vec![0.0; dim];
    let mut accum = vec![0.0; dim];

    for _epoch in 0..cfg.epochs {
        for sentence in &sentences {
            for center in 0..sentence.len() {
                let lr = cfg.lr * (1.0 - step as f64 / total_steps);
                step += 1;
                if sentence.len() < 2 {
                    continue;
                }
                let reach = rng.gen_range(1..=cfg.window);
                let lo = center.saturating_sub(reach);
                let hi = (center + reach).min(sentence.len() - 1);
                match cfg.mode {
                    EmbedMode::SkipGram => {
                        for ctx in lo..=hi {
                            if ctx == center {
                                continue;
                            }
                            train_pair(
                                &mut input.vectors,
                                &mut output,
                                sentence[center],
                                sentence[ctx],
                                lr,
                                cfg.negatives,
                                &sampler,
                                &mut rng,
                                &mut accum,
                            );
                            pairs += 1;
                        }
                    }
                    EmbedMode::Cbow => {
                        let ctx_ids: Vec<usize> = (lo..=hi).filter(|&i| i != center).collect();
                        if ctx_ids.is_empty() {
                            continue;
                        }
                        let n = ctx_ids.len() as f64;
                        hidden.iter_mut().for_each(|h| *h = 0.0);
                        for &i in &ctx_ids {
                            let row = input.vectors.row(sentence[i]);
                            for (h, x) in hidden.iter_mut().zip(row.iter()) {
                                *h += x;
                            }
                        }
                        hidden.iter_mut().for_each(|h| *h /= n);

                        accum.iter_mut().for_each(|a| *a = 0.0);
                        train_against(
                            &mut output,
                            &hidden,
                            sentence[center],
                            lr,
                            cfg.negatives,
                            &sampler,
                            &mut rng,
                            &mut accum,
                        );
                        // Exact gradient of the averaged input: each context
                        // row receives accum / n.
                        for &i in &ctx_ids {
                            let mut row = input.vectors.row_mut(sentence[i]);
                            for (x, a) in row.iter_mut().zip(accum.iter()) {
                                *x += a / n;
                            }
                        }
                        pairs += ctx_ids.len() as u64;
                    }
                }
            }
        }
    }

    Ok((
        input,
        EmbedTrainStats {
            pairs_trained: pairs,
            degenerate_corpus: false,
        },
    ))
}

/// One skip-gram update: the center's input vector against the positive
/// context plus sampled negatives.
#[allow(clippy::too_many_arguments)]
fn train_pair<R: Rng>(
    input: &mut Array2<f64>,
    output: &mut Array2<f64>,
    center: usize,
    positive: usize,
    lr: f64,
    negatives: usize,
    sampler: &NegativeSampler,
    rng: &mut R,
    accum: &mut [f64],
) {
    accum.iter_mut().for_each(|a| *a = 0.0);
    let h: Vec<f64> = input.row(center).to_vec();
    train_against(output, &h, positive, lr, negatives, sampler, rng, accum);
    let mut row = input.row_mut(center);
    for (x, a) in row.iter_mut().zip(accum.iter()) {
        *x += a;
    }
}

/// Shared negative-sampling objective: positive target plus `negatives`
/// noise words against the hidden vector `h`. Accumulates the gradient
/// w.r.t. `h` into `accum` and updates the output rows in place.
#[allow(clippy::too_many_arguments)]
fn train_against<R: Rng>(
    output: &mut Array2<f64>,
    h: &[f64],
    positive: usize,
    lr: f64,
    negatives: usize,
    sampler: &NegativeSampler,
    rng: &mut R,
    accum: &mut [f64],
) {
    for k in 0..=negatives {
        let (target, label) = if k == 0 {
            (positive, 1.0)
        } else {
            let t = sampler.sample(rng);
            if t == positive {
                continue;
            }
            (t, 0.0)
        };
        let mut row = output.row_mut(target);
        let score: f64 = row.iter().zip(h.iter()).map(|(o, x)| o * x).sum();
        let g = (label - sigmoid(score)) * lr;
        for (a, o) in accum.iter_mut().zip(row.iter()) {
            *a += g * o;
        }
        for (o, x) in row.iter_mut().zip(h.iter()) {
            *o += g * x;
        }
    }
}

/// Serialize in the word2vec text format: a `V d` header, then one
/// `word v1 … vd` line per vocabulary entry in id order.
pub fn save_word2vec_text(m: &EmbeddingMatrix, v: &Vocabulary) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", m.rows(), m.dim());
    for id in 0..m.rows() {
        let _ = write!(out, "{}", v.word(id));
        for value in m.row(id) {
            let _ = write!(out, " {value}");
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadStats {
    /// Vocabulary rows overwritten from the file.
    pub loaded: usize,
    /// File words absent from the vocabulary, skipped.
    pub skipped_unknown: usize,
}

/// Load word2vec text onto `base`: rows for words present in the
/// vocabulary are overwritten, everything else keeps its initialization,
/// and file words outside the vocabulary are counted as skipped.
pub fn load_word2vec_text(
    blob: &str,
    v: &Vocabulary,
    mut base: EmbeddingMatrix,
    file: &str,
) -> Result<(EmbeddingMatrix, LoadStats)> {
    let mut lines = blob.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::parse(file, 1, "missing header"))?;
    let mut fields = header.split_whitespace();
    let rows: usize = fields
        .next()
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| Error::parse(file, 1, "malformed header: expected `rows dims`"))?;
    let dims: usize = fields
        .next()
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| Error::parse(file, 1, "malformed header: expected `rows dims`"))?;
    if fields.next().is_some() {
        return Err(Error::parse(file, 1, "malformed header: trailing fields"));
    }
    if dims != base.dim() {
        return Err(Error::Config(format!(
            "embedding file has dimension {dims}, expected {}",
            base.dim()
        )));
    }

    let mut loaded = 0usize;
    let mut skipped = 0usize;
    let mut seen = 0usize;
    for (idx, line) in lines.enumerate() {
        let line_no = idx + 2;
        if line.trim().is_empty() {
            continue;
        }
        seen += 1;
        let mut parts = line.split_whitespace();
        let word = parts.next().unwrap();
        let values: Vec<f64> = parts
            .map(|p| {
                p.parse::<f64>()
                    .map_err(|_| Error::parse(file, line_no, format!("non-numeric field {p:?}")))
            })
            .collect::<Result<_>>()?;
        if values.len() != dims {
            return Err(Error::parse(
                file,
                line_no,
                format!("expected {dims} values, found {}", values.len()),
            ));
        }
        match resolve_word(v, word) {
            Some(id) => {
                let mut row = base.row_mut(id);
                for (slot, value) in row.iter_mut().zip(values.iter()) {
                    *slot = *value;
                }
                loaded += 1;
            }
            None => skipped += 1,
        }
    }
    if seen != rows {
        return Err(Error::parse(
            file,
            1,
            format!("header declares {rows} rows, file contains {seen}"),
        ));
    }
    Ok((
        base,
        LoadStats {
            loaded,
            skipped_unknown: skipped,
        },
    ))
}

/// File words resolve through the corpus index first; the reserved
/// surfaces reach ids 0/1 only when no corpus word shadows them.
fn resolve_word(v: &Vocabulary, word: &str) -> Option<usize> {
    let id = v.lookup(word);
    if id != crate::vocab::UNK_ID {
        return Some(id);
    }
    match word {
        UNK_SURFACE => Some(crate::vocab::UNK_ID),
        PAD_SURFACE => Some(PAD_ID),
        _ => None,
    }
}
