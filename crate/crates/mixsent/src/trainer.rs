//! Mini-batch SGD over the classifier.
//!
//! Each epoch shuffles the training set with a per-epoch sub-seed,
//! partitions it into batches padded to the batch's longest sequence,
//! averages per-example gradients and applies one SGD step per batch.
//! A fresh inverted-dropout mask is drawn per example. After every epoch
//! the model is scored on the validation set by support-weighted F1 and
//! the best-scoring parameters are retained; training stops at
//! `max_epochs` or after `patience` epochs without improvement.
//!
//! Identical data, configuration and seed reproduce the report and the
//! final parameters bitwise.

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;
use std::time::Instant;

use ndarray::Array1;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::metrics::{confusion, weighted_metrics};
use crate::preprocess::TweetExample;
use crate::rcnn::io::{load_model, save_model, Checkpoint};
use crate::rcnn::{backward, forward, nll_loss, predict, Gradients, RcnnConfig, RcnnParams};
use crate::rng::named_rng;
use crate::vocab::{Vocabulary, PAD_ID};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct TrainConfig {
    pub lr: f64,
    pub batch_size: usize,
    pub max_epochs: usize,
    pub seed: u64,
    /// Consecutive epochs without a validation improvement tolerated
    /// before stopping.
    pub patience: usize,
    pub shuffle: bool,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            lr: 0.6,
            batch_size: 64,
            max_epochs: 30,
            seed: 42,
            patience: 5,
            shuffle: true,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.lr >= 0.0) {
            return Err(Error::Config("learning rate must be non-negative".into()));
        }
        if self.batch_size < 1 || self.max_epochs < 1 {
            return Err(Error::Config(
                "batch size and max epochs must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// One epoch of the training log; serialized as a JSON line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EpochRecord {
    pub epoch: usize,
    /// Mean per-example NLL over the epoch's training passes.
    pub train_loss: f64,
    /// Fraction of training examples whose training-mode argmax hit gold.
    pub train_accuracy: f64,
    /// Support-weighted F1 on the validation set, absent without one.
    pub val_weighted_f1: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrainReport {
    pub epochs: Vec<EpochRecord>,
    /// 1-based epoch whose parameters were returned.
    pub best_epoch: usize,
    /// Training examples dropped for having no tokens.
    pub dropped_empty: usize,
    /// Set when no validation set was given and model selection fell back
    /// to the final epoch.
    pub val_missing: bool,
    pub wall_time_secs: f64,
}

impl TrainReport {
    /// One JSON object per epoch, newline separated. Wall time and the
    /// selection summary stay out of the file so reruns are byte-identical.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for record in &self.epochs {
            out.push_str(&serde_json::to_string(record).expect("epoch record serializes"));
            out.push('\n');
        }
        out
    }
}

/// Shuffled visit order of `n` examples for one epoch; a permutation by
/// construction.
pub(crate) fn epoch_order(seed: u64, epoch: usize, n: usize, shuffle: bool) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    if shuffle {
        let mut rng = named_rng(seed, &format!("shuffle-epoch-{epoch}"));
        order.shuffle(&mut rng);
    }
    order
}

struct PreparedExample {
    ids: Vec<usize>,
    gold: usize,
}

fn prepare(
    data: &[TweetExample],
    v: &Vocabulary,
    what: &str,
) -> Result<(Vec<PreparedExample>, usize)> {
    let mut prepared = Vec::with_capacity(data.len());
    let mut dropped = 0usize;
    for ex in data {
        if ex.tokens.is_empty() {
            dropped += 1;
            continue;
        }
        let gold = ex
            .label
            .ok_or_else(|| Error::Contract(format!("{what} example {} has no label", ex.uid)))?
            .index();
        prepared.push(PreparedExample {
            ids: v.ids_for(ex),
            gold,
        });
    }
    Ok((prepared, dropped))
}

fn validation_f1(
    params: &RcnnParams,
    cfg: &RcnnConfig,
    val: &[PreparedExample],
    num_classes: usize,
) -> Result<f64> {
    let pairs: Vec<(usize, usize)> = val
        .iter()
        .map(|ex| predict(params, cfg, &ex.ids).map(|(class, _)| (ex.gold, class)))
        .collect::<Result<_>>()?;
    Ok(weighted_metrics(&confusion(&pairs, num_classes))?.f1)
}

/// Train the model, returning the parameters of the best validation epoch
/// together with the per-epoch report.
pub fn train(
    params: RcnnParams,
    cfg: &RcnnConfig,
    train_data: &[TweetExample],
    val_data: &[TweetExample],
    v: &Vocabulary,
    tc: &TrainConfig,
) -> Result<(RcnnParams, TrainReport)> {
    tc.validate()?;
    cfg.validate()?;
    let started = Instant::now();

    // Padding uses the reserved pad id; the forward pass masks it out of
    // the scans and the pool.
    let mut cfg = cfg.clone();
    cfg.pad_id = Some(PAD_ID);
    params.check_shapes(&cfg)?;

    let (train_set, dropped_empty) = prepare(train_data, v, "training")?;
    if train_set.is_empty() {
        return Err(Error::EmptyTrainingSet);
    }
    let (val_set, _) = prepare(val_data, v, "validation")?;
    let val_missing = val_set.is_empty();

    let mut params = params;
    let mut dropout_rng = named_rng(tc.seed, "dropout");
    let mut best_params = params.clone();
    let mut best_f1 = f64::NEG_INFINITY;
    let mut best_epoch = 0usize;
    let mut stale = 0usize;
    let mut epochs = Vec::new();

    for epoch in 1..=tc.max_epochs {
        let order = epoch_order(tc.seed, epoch, train_set.len(), tc.shuffle);
        let mut loss_sum = 0.0;
        let mut correct = 0usize;

        for batch in order.chunks(tc.batch_size) {
            let max_len = batch
                .iter()
                .map(|&i| train_set[i].ids.len())
                .max()
                .unwrap_or(0);
            let mut batch_grads = Gradients::zeros_like(&params);
            for &i in batch {
                let ex = &train_set[i];
                let mut padded = ex.ids.clone();
                padded.resize(max_len, PAD_ID);

                let mask = if cfg.dropout_rate > 0.0 {
                    let keep = 1.0 - cfg.dropout_rate;
                    Some(Array1::from_shape_fn(cfg.hidden_dim, |_| {
                        if dropout_rng.gen::<f64>() < cfg.dropout_rate {
                            0.0
                        } else {
                            1.0 / keep
                        }
                    }))
                } else {
                    None
                };

                let trace = forward(&params, &cfg, &padded, mask.as_ref())?;
                loss_sum += nll_loss(&trace.p, ex.gold).value;
                let mut argmax = 0;
                for (k, &p) in trace.p.iter().enumerate() {
                    if p > trace.p[argmax] {
                        argmax = k;
                    }
                }
                if argmax == ex.gold {
                    correct += 1;
                }
                let grads = backward(&params, &cfg, &trace, &padded, ex.gold)?;
                batch_grads.add_assign(&grads);
            }
            batch_grads.scale(1.0 / batch.len() as f64);
            params.sgd_step(&batch_grads, tc.lr);
        }

        let val_f1 = if val_missing {
            None
        } else {
            Some(validation_f1(&params, &cfg, &val_set, cfg.num_classes)?)
        };
        epochs.push(EpochRecord {
            epoch,
            train_loss: loss_sum / train_set.len() as f64,
            train_accuracy: correct as f64 / train_set.len() as f64,
            val_weighted_f1: val_f1,
        });

        if let Some(f1) = val_f1 {
            if f1 > best_f1 {
                best_f1 = f1;
                best_params = params.clone();
                best_epoch = epoch;
                stale = 0;
            } else {
                stale += 1;
                if stale > tc.patience {
                    break;
                }
            }
        }
    }

    let (final_params, best_epoch) = if val_missing || best_epoch == 0 {
        let last = epochs.len();
        (params, last)
    } else {
        (best_params, best_epoch)
    };

    Ok((
        final_params,
        TrainReport {
            epochs,
            best_epoch,
            dropped_empty,
            val_missing,
            wall_time_secs: started.elapsed().as_secs_f64(),
        },
    ))
}

/// Write the model container to a file.
pub fn save_checkpoint(
    path: &Path,
    params: &RcnnParams,
    cfg: &RcnnConfig,
    seed: u64,
) -> Result<()> {
    let file = File::create(path)
        .map_err(|e| Error::io(format!("creating {}", path.display()), e))?;
    save_model(BufWriter::new(file), params, cfg, seed)
}

/// Read a model container back and verify it belongs to the given
/// vocabulary.
pub fn load_checkpoint(path: &Path, v: &Vocabulary) -> Result<Checkpoint> {
    let file = File::open(path)
        .map_err(|e| Error::io(format!("opening {}", path.display()), e))?;
    let ckpt = load_model(BufReader::new(file), &path.display().to_string())?;
    ckpt.verify_vocab(v)?;
    Ok(ckpt)
}
