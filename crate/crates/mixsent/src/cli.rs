//! The `mixsent` command line: `preprocess`, `train-embeddings`, `train`,
//! `evaluate` and `predict`, wired over the library modules.
//!
//! Conventions: data goes to files or standard output, diagnostics to
//! standard error; the exit status is zero exactly when no error was
//! raised; output files are written through a temporary sibling and
//! renamed, so failures leave no partial outputs behind. Every flag with a
//! `MIXSENT_…` environment variable can be overridden from the
//! environment. All randomness flows from `--seed`.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{ArgAction, Args, Parser, Subcommand};

use crate::embed::{
    load_word2vec_text, save_word2vec_text, train_embeddings, EmbedMode, EmbedTrainConfig,
    EmbeddingMatrix,
};
use crate::metrics::{render_averages, render_class_metrics, render_confusion, EvalReport};
use crate::preprocess::{
    preprocess_tweet, read_conll, read_raw_tsv, read_tokenized_tsv, write_tokenized_tsv,
    Polarity, TweetExample,
};
use crate::rcnn::{predict, Activation, RcnnConfig, RcnnParams};
use crate::trainer::{load_checkpoint, train, TrainConfig};
use crate::vocab::{build_vocab, Vocabulary};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "mixsent",
    version,
    about = "Sentiment classification for code-mixed social-media text"
)]
pub struct Cli {
    /// Master seed; all shuffling, initialization, dropout and sampling
    /// derive from it.
    #[arg(long, global = true, default_value_t = 42, env = "MIXSENT_SEED")]
    pub seed: u64,

    /// Worker threads for per-tweet inference in predict/evaluate.
    #[arg(long, global = true, default_value_t = 1, env = "MIXSENT_THREADS")]
    pub threads: usize,

    /// Print extra progress detail to standard error.
    #[arg(long, short, global = true, action = ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalize raw tweets into the tokenized TSV format.
    Preprocess(PreprocessArgs),
    /// Train skip-gram or CBOW word vectors on a tokenized corpus.
    TrainEmbeddings(TrainEmbeddingsArgs),
    /// Train the classifier.
    Train(TrainArgs),
    /// Score predictions (or a model) against gold labels.
    Evaluate(EvaluateArgs),
    /// Label tweets with a trained model.
    Predict(PredictArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    /// `uid<TAB>label<TAB>text` lines.
    Tsv,
    /// `meta uid label` plus one `surface<TAB>langtag` line per token.
    Conll,
}

#[derive(Debug, Args)]
pub struct PreprocessArgs {
    /// Raw input file.
    #[arg(long)]
    pub input: PathBuf,
    /// Tokenized TSV output file.
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Tsv, env = "MIXSENT_FORMAT")]
    pub format: InputFormat,
}

#[derive(Debug, Args)]
pub struct TrainEmbeddingsArgs {
    /// Tokenized TSV training corpus.
    #[arg(long)]
    pub train: PathBuf,
    /// word2vec text output file.
    #[arg(long)]
    pub out: PathBuf,
    /// Vocabulary file output; defaults to `<out>.vocab`.
    #[arg(long)]
    pub vocab_out: Option<PathBuf>,
    #[arg(long, default_value = "skipgram", env = "MIXSENT_EMBED_MODE")]
    pub mode: EmbedMode,
    #[arg(long, default_value_t = 300, env = "MIXSENT_EMBED_DIM")]
    pub dim: usize,
    #[arg(long, default_value_t = 0.05, env = "MIXSENT_EMBED_LR")]
    pub lr: f64,
    #[arg(long, default_value_t = 5, env = "MIXSENT_EMBED_WINDOW")]
    pub window: usize,
    #[arg(long, default_value_t = 5, env = "MIXSENT_EMBED_EPOCHS")]
    pub epochs: usize,
    #[arg(long, default_value_t = 5, env = "MIXSENT_MIN_COUNT")]
    pub min_count: u64,
    #[arg(long, default_value_t = 5, env = "MIXSENT_NEGATIVES")]
    pub negatives: usize,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    /// Tokenized TSV training set.
    #[arg(long)]
    pub train: PathBuf,
    /// Tokenized TSV validation set for model selection.
    #[arg(long)]
    pub val: Option<PathBuf>,
    /// Model container output file.
    #[arg(long)]
    pub out: PathBuf,
    /// Vocabulary file (from train-embeddings).
    #[arg(long)]
    pub vocab: PathBuf,
    /// word2vec text embeddings; random initialization when omitted.
    #[arg(long)]
    pub embeddings: Option<PathBuf>,
    /// Per-epoch JSONL report; defaults to `<out>.report.jsonl`.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, default_value_t = 0.6, env = "MIXSENT_TRAIN_LR")]
    pub lr: f64,
    #[arg(long, default_value_t = 64, env = "MIXSENT_BATCH")]
    pub batch: usize,
    #[arg(long, default_value_t = 30, env = "MIXSENT_EPOCHS")]
    pub epochs: usize,
    #[arg(long, default_value_t = 5, env = "MIXSENT_PATIENCE")]
    pub patience: usize,
    #[arg(long, default_value_t = 0.1, env = "MIXSENT_DROPOUT")]
    pub dropout: f64,
    #[arg(long, default_value_t = 64, env = "MIXSENT_HIDDEN")]
    pub hidden: usize,
    #[arg(long, default_value_t = 5, env = "MIXSENT_CONTEXT")]
    pub context: usize,
    #[arg(long, default_value_t = 300, env = "MIXSENT_DIM")]
    pub dim: usize,
    #[arg(long, default_value = "tanh", env = "MIXSENT_ACTIVATION")]
    pub activation: Activation,
    /// Visit training examples in file order instead of shuffling.
    #[arg(long)]
    pub no_shuffle: bool,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Tokenized TSV with gold labels.
    #[arg(long)]
    pub data: PathBuf,
    /// Model container; runs inference over the data.
    #[arg(long, conflicts_with = "predictions")]
    pub model: Option<PathBuf>,
    /// Vocabulary file, required with --model.
    #[arg(long)]
    pub vocab: Option<PathBuf>,
    /// `uid<TAB>label` predictions to score instead of a model.
    #[arg(long)]
    pub predictions: Option<PathBuf>,
    /// JSON report output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also print the macro-averaged block.
    #[arg(long = "macro")]
    pub macro_avg: bool,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    /// Tokenized TSV to label.
    #[arg(long)]
    pub data: PathBuf,
    /// Model container.
    #[arg(long)]
    pub model: PathBuf,
    /// Vocabulary file.
    #[arg(long)]
    pub vocab: PathBuf,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Append per-class probabilities to each line.
    #[arg(long)]
    pub probs: bool,
}

/// Dispatch a parsed command line.
pub fn run(cli: Cli) -> Result<()> {
    match &cli.command {
        Command::Preprocess(args) => {
            let summary = cmd_preprocess(args)?;
            eprintln!(
                "preprocess: {} records, {} empty after normalization",
                summary.records, summary.empty
            );
        }
        Command::TrainEmbeddings(args) => {
            let summary = cmd_train_embeddings(args, cli.seed)?;
            eprintln!(
                "train-embeddings: vocabulary {} entries, {} pairs trained{}",
                summary.vocab_size,
                summary.pairs_trained,
                if summary.degenerate_corpus {
                    " (degenerate corpus, initialization kept)"
                } else {
                    ""
                }
            );
        }
        Command::Train(args) => {
            let summary = cmd_train(args, cli.seed, cli.verbose)?;
            eprintln!(
                "train: best epoch {} of {}, {:.1}s{}{}",
                summary.best_epoch,
                summary.epochs_run,
                summary.wall_time_secs,
                if summary.dropped_empty > 0 {
                    format!(", {} empty examples dropped", summary.dropped_empty)
                } else {
                    String::new()
                },
                if summary.val_missing {
                    ", no validation set: kept final epoch"
                } else {
                    ""
                },
            );
        }
        Command::Evaluate(args) => {
            let text = cmd_evaluate(args, cli.threads)?;
            print!("{text}");
        }
        Command::Predict(args) => {
            let summary = cmd_predict(args, cli.threads)?;
            if let Some(text) = summary.stdout {
                print!("{text}");
            }
            if summary.empty > 0 {
                eprintln!(
                    "predict: {} empty tweets labeled {} by tie-break",
                    summary.empty,
                    Polarity::Positive
                );
            }
        }
    }
    Ok(())
}

fn open_reader(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::io(format!("opening {}", path.display()), e))
}

fn read_to_string(path: &Path) -> Result<String> {
    let mut buf = String::new();
    open_reader(path)?
        .read_to_string(&mut buf)
        .map_err(|e| Error::io(format!("reading {}", path.display()), e))?;
    Ok(buf)
}

/// Write through a temporary sibling and rename, removing the temporary
/// on failure so no partial output survives.
fn write_atomic(path: &Path, write: impl FnOnce(&mut BufWriter<File>) -> Result<()>) -> Result<()> {
    let tmp = path.with_extension("tmp");
    let result = (|| {
        let file = File::create(&tmp)
            .map_err(|e| Error::io(format!("creating {}", tmp.display()), e))?;
        let mut writer = BufWriter::new(file);
        write(&mut writer)?;
        writer
            .flush()
            .map_err(|e| Error::io(format!("writing {}", tmp.display()), e))?;
        Ok(())
    })();
    match result {
        Ok(()) => std::fs::rename(&tmp, path)
            .map_err(|e| Error::io(format!("renaming {}", tmp.display()), e)),
        Err(e) => {
            let _ = std::fs::remove_file(&tmp);
            Err(e)
        }
    }
}

fn load_examples(path: &Path) -> Result<Vec<TweetExample>> {
    read_tokenized_tsv(open_reader(path)?, &path.display().to_string())
}

#[derive(Debug, PartialEq, Eq)]
pub struct PreprocessSummary {
    pub records: usize,
    pub empty: usize,
}

/// Normalize a raw file into tokenized TSV. Records whose tokens all get
/// stripped are still written (with an empty token field) and counted.
pub fn cmd_preprocess(args: &PreprocessArgs) -> Result<PreprocessSummary> {
    let file = args.input.display().to_string();
    let raw = match args.format {
        InputFormat::Tsv => read_raw_tsv(open_reader(&args.input)?, &file)?,
        InputFormat::Conll => read_conll(open_reader(&args.input)?, &file)?,
    };
    let examples: Vec<TweetExample> = raw.iter().map(preprocess_tweet).collect();
    let empty = examples.iter().filter(|e| e.tokens.is_empty()).count();
    write_atomic(&args.output, |w| write_tokenized_tsv(w, &examples))?;
    Ok(PreprocessSummary {
        records: examples.len(),
        empty,
    })
}

#[derive(Debug, PartialEq, Eq)]
pub struct TrainEmbeddingsSummary {
    pub vocab_size: usize,
    pub pairs_trained: u64,
    pub degenerate_corpus: bool,
}

pub fn cmd_train_embeddings(args: &TrainEmbeddingsArgs, seed: u64) -> Result<TrainEmbeddingsSummary> {
    let corpus = load_examples(&args.train)?;
    let v = build_vocab(&corpus, args.min_count);
    let cfg = EmbedTrainConfig {
        mode: args.mode,
        dim: args.dim,
        lr: args.lr,
        window: args.window,
        epochs: args.epochs,
        negatives: args.negatives,
        seed,
    };
    let (matrix, stats) = train_embeddings(&corpus, &v, &cfg)?;

    let vocab_path = args
        .vocab_out
        .clone()
        .unwrap_or_else(|| append_extension(&args.out, "vocab"));
    write_atomic(&args.out, |w| {
        w.write_all(save_word2vec_text(&matrix, &v).as_bytes())
            .map_err(|e| Error::io("writing embeddings", e))
    })?;
    let vocab_result = write_atomic(&vocab_path, |w| v.write_to(w));
    if vocab_result.is_err() {
        let _ = std::fs::remove_file(&args.out);
        return vocab_result.map(|_| unreachable!());
    }

    Ok(TrainEmbeddingsSummary {
        vocab_size: v.len(),
        pairs_trained: stats.pairs_trained,
        degenerate_corpus: stats.degenerate_corpus,
    })
}

fn append_extension(path: &Path, ext: &str) -> PathBuf {
    let mut name = path.as_os_str().to_os_string();
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}

#[derive(Debug, PartialEq)]
pub struct TrainSummary {
    pub best_epoch: usize,
    pub epochs_run: usize,
    pub dropped_empty: usize,
    pub val_missing: bool,
    pub wall_time_secs: f64,
}

pub fn cmd_train(args: &TrainArgs, seed: u64, verbose: u8) -> Result<TrainSummary> {
    let train_data = load_examples(&args.train)?;
    let val_data = match &args.val {
        Some(path) => load_examples(path)?,
        None => Vec::new(),
    };
    let v = Vocabulary::read_from(
        open_reader(&args.vocab)?,
        &args.vocab.display().to_string(),
    )?;

    let base = EmbeddingMatrix::random(&v, args.dim, seed);
    let embeddings = match &args.embeddings {
        Some(path) => {
            let blob = read_to_string(path)?;
            let (m, stats) =
                load_word2vec_text(&blob, &v, base, &path.display().to_string())?;
            if stats.skipped_unknown > 0 {
                eprintln!(
                    "train: {} embedding rows outside the vocabulary skipped",
                    stats.skipped_unknown
                );
            }
            m
        }
        None => base,
    };

    let cfg = RcnnConfig {
        embed_dim: args.dim,
        context_dim: args.context,
        hidden_dim: args.hidden,
        num_classes: 3,
        activation: args.activation,
        dropout_rate: args.dropout,
        pad_id: None, // the trainer pads and masks internally
    };
    let params = RcnnParams::init(&cfg, embeddings, seed)?;
    let tc = TrainConfig {
        lr: args.lr,
        batch_size: args.batch,
        max_epochs: args.epochs,
        seed,
        patience: args.patience,
        shuffle: !args.no_shuffle,
    };
    let (best, report) = train(params, &cfg, &train_data, &val_data, &v, &tc)?;

    if verbose > 0 {
        for record in &report.epochs {
            match record.val_weighted_f1 {
                Some(f1) => eprintln!(
                    "epoch {}: loss {:.4} acc {:.4} val-F1 {:.4}",
                    record.epoch, record.train_loss, record.train_accuracy, f1
                ),
                None => eprintln!(
                    "epoch {}: loss {:.4} acc {:.4}",
                    record.epoch, record.train_loss, record.train_accuracy
                ),
            }
        }
    }

    let report_path = args
        .report
        .clone()
        .unwrap_or_else(|| append_extension(&args.out, "report.jsonl"));
    write_atomic(&args.out, |w| {
        crate::rcnn::io::save_model(w, &best, &report_cfg(&cfg), seed)
    })?;
    let jsonl = report.to_jsonl();
    let report_result = write_atomic(&report_path, |w| {
        w.write_all(jsonl.as_bytes())
            .map_err(|e| Error::io("writing report", e))
    });
    if report_result.is_err() {
        let _ = std::fs::remove_file(&args.out);
        return report_result.map(|_| unreachable!());
    }

    Ok(TrainSummary {
        best_epoch: report.best_epoch,
        epochs_run: report.epochs.len(),
        dropped_empty: report.dropped_empty,
        val_missing: report.val_missing,
        wall_time_secs: report.wall_time_secs,
    })
}

/// The container records the padding convention the trainer used.
fn report_cfg(cfg: &RcnnConfig) -> RcnnConfig {
    let mut cfg = cfg.clone();
    cfg.pad_id = Some(crate::vocab::PAD_ID);
    cfg
}

/// Inference over many tweets with order-preserving parallelism. Empty
/// tweets fall back to class 0 with uniform probabilities.
fn batch_predict(
    params: &RcnnParams,
    cfg: &RcnnConfig,
    examples: &[TweetExample],
    v: &Vocabulary,
    threads: usize,
) -> Result<Vec<(usize, Vec<f64>)>> {
    let k = cfg.num_classes;
    let infer = |ex: &TweetExample| -> Result<(usize, Vec<f64>)> {
        if ex.tokens.is_empty() {
            return Ok((0, vec![1.0 / k as f64; k]));
        }
        let ids = v.ids_for(ex);
        let (class, p) = predict(params, cfg, &ids)?;
        Ok((class, p.to_vec()))
    };
    if threads > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
        pool.install(|| examples.par_iter().map(infer).collect())
    } else {
        examples.iter().map(infer).collect()
    }
}

/// Render the evaluation to the table layout; returns what `run` prints.
pub fn cmd_evaluate(args: &EvaluateArgs, threads: usize) -> Result<String> {
    let data = load_examples(&args.data)?;
    if data.is_empty() {
        return Err(Error::EmptyEvaluation);
    }

    let predictions: Vec<Polarity> = match (&args.model, &args.predictions) {
        (Some(model_path), None) => {
            let vocab_path = args.vocab.as_ref().ok_or_else(|| {
                Error::Config("--vocab is required when evaluating a model".into())
            })?;
            let v = Vocabulary::read_from(
                open_reader(vocab_path)?,
                &vocab_path.display().to_string(),
            )?;
            let ckpt = load_checkpoint(model_path, &v)?;
            let outputs = batch_predict(&ckpt.params, &ckpt.config, &data, &v, threads)?;
            outputs
                .into_iter()
                .map(|(class, _)| Polarity::from_index(class).expect("class within range"))
                .collect()
        }
        (None, Some(pred_path)) => {
            let file = pred_path.display().to_string();
            let mut by_uid: HashMap<String, Polarity> = HashMap::new();
            for (idx, line) in open_reader(pred_path)?.lines().enumerate() {
                let line_no = idx + 1;
                let line = line.map_err(|e| Error::io(format!("reading {file}"), e))?;
                if line.trim().is_empty() {
                    continue;
                }
                let (uid, label) = line
                    .split_once('\t')
                    .ok_or_else(|| Error::parse(&file, line_no, "expected uid<TAB>label"))?;
                let label: Polarity = label
                    .trim()
                    .parse()
                    .map_err(|e: String| Error::parse(&file, line_no, e))?;
                by_uid.insert(uid.to_string(), label);
            }
            data.iter()
                .map(|ex| {
                    by_uid.get(&ex.uid).copied().ok_or_else(|| {
                        Error::Contract(format!("no prediction for uid {}", ex.uid))
                    })
                })
                .collect::<Result<_>>()?
        }
        _ => {
            return Err(Error::Config(
                "exactly one of --model or --predictions is required".into(),
            ))
        }
    };

    let report = EvalReport::build(&data, &predictions)?;
    if let Some(out) = &args.out {
        let json = serde_json::to_string_pretty(&report)
            .map_err(|e| Error::Config(format!("serializing report: {e}")))?;
        write_atomic(out, |w| {
            writeln!(w, "{json}").map_err(|e| Error::io("writing report", e))
        })?;
    }

    let classes = ["Positive", "Negative", "Neutral"];
    let m = crate::metrics::ConfusionMatrix::from_counts(report.confusion.clone());
    let mut text = String::new();
    text.push_str("Confusion matrix (gold rows, predicted columns)\n");
    text.push_str(&render_confusion(&m, &classes));
    text.push('\n');
    text.push_str("Class-wise performance\n");
    text.push_str(&render_class_metrics(&report.per_class, &classes));
    text.push('\n');
    text.push_str(&format!(
        "{:<10}{:>10}{:>10}{:>10}\n",
        "", "Precision", "Recall", "F1 score"
    ));
    text.push_str(&render_averages("weighted", &report.weighted));
    if args.macro_avg {
        text.push_str(&render_averages("macro", &report.macro_avg));
    }
    text.push_str(&format!("accuracy  {:>10.4}\n", report.accuracy));
    Ok(text)
}

#[derive(Debug, PartialEq)]
pub struct PredictSummary {
    /// Rendered output when no --out file was given.
    pub stdout: Option<String>,
    pub records: usize,
    pub empty: usize,
}

pub fn cmd_predict(args: &PredictArgs, threads: usize) -> Result<PredictSummary> {
    let data = load_examples(&args.data)?;
    let v = Vocabulary::read_from(
        open_reader(&args.vocab)?,
        &args.vocab.display().to_string(),
    )?;
    let ckpt = load_checkpoint(&args.model, &v)?;
    let outputs = batch_predict(&ckpt.params, &ckpt.config, &data, &v, threads)?;
    let empty = data.iter().filter(|e| e.tokens.is_empty()).count();

    let mut text = String::new();
    for (ex, (class, probs)) in data.iter().zip(outputs.iter()) {
        let label = Polarity::from_index(*class).expect("class within range");
        if args.probs {
            let rendered: Vec<String> = probs.iter().map(|p| format!("{p:.6}")).collect();
            text.push_str(&format!("{}\t{}\t{}\n", ex.uid, label, rendered.join(" ")));
        } else {
            text.push_str(&format!("{}\t{}\n", ex.uid, label));
        }
    }

    let stdout = match &args.out {
        Some(path) => {
            write_atomic(path, |w| {
                w.write_all(text.as_bytes())
                    .map_err(|e| Error::io("writing predictions", e))
            })?;
            None
        }
        None => Some(text),
    };

    Ok(PredictSummary {
        stdout,
        records: data.len(),
        empty,
    })
}
