//! The whole pipeline through the command-line entry points, inside a
//! temporary directory: preprocess raw tweets, train embeddings, train the
//! classifier, predict, and evaluate.
//!
//! ```bash
//! cargo run -p mixsent --example full_pipeline
//! ```

use mixsent::cli::{
    cmd_evaluate, cmd_predict, cmd_preprocess, cmd_train, cmd_train_embeddings, EvaluateArgs,
    InputFormat, PredictArgs, PreprocessArgs, TrainArgs, TrainEmbeddingsArgs,
};
use mixsent::embed::EmbedMode;
use mixsent::rcnn::Activation;
use mixsent::Polarity;

fn raw_corpus() -> String {
    let fillers = ["yeh", "to", "hai", "na", "kya"];
    let marks = ["badhiya", "bakwas", "theek"];
    let mut out = String::new();
    for k in 0..3usize {
        for j in 0..11usize {
            let label = Polarity::from_index(k).unwrap();
            out.push_str(&format!(
                "{k}-{j}\t{label}\t{} {} {} \u{1F60A}\n",
                fillers[(j + k) % fillers.len()],
                marks[k],
                fillers[(j * 2 + k) % fillers.len()],
            ));
        }
    }
    out
}

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let seed = 7;

    let raw = dir.path().join("raw.tsv");
    std::fs::write(&raw, raw_corpus()).unwrap();

    let tok = dir.path().join("tok.tsv");
    let summary = cmd_preprocess(&PreprocessArgs {
        input: raw,
        output: tok.clone(),
        format: InputFormat::Tsv,
    })
    .unwrap();
    println!("preprocess: {} records ({} empty)", summary.records, summary.empty);

    let emb = dir.path().join("emb.txt");
    let summary = cmd_train_embeddings(
        &TrainEmbeddingsArgs {
            train: tok.clone(),
            out: emb.clone(),
            vocab_out: None,
            mode: EmbedMode::SkipGram,
            dim: 16,
            lr: 0.05,
            window: 5,
            epochs: 5,
            min_count: 1,
            negatives: 5,
        },
        seed,
    )
    .unwrap();
    println!(
        "embeddings: vocabulary {}, {} pairs trained",
        summary.vocab_size, summary.pairs_trained
    );

    let vocab = dir.path().join("emb.txt.vocab");
    let model = dir.path().join("model.txt");
    let summary = cmd_train(
        &TrainArgs {
            train: tok.clone(),
            val: Some(tok.clone()),
            out: model.clone(),
            vocab: vocab.clone(),
            embeddings: Some(emb),
            report: None,
            lr: 0.6,
            batch: 64,
            epochs: 100,
            patience: 20,
            dropout: 0.1,
            hidden: 32,
            context: 5,
            dim: 16,
            activation: Activation::Tanh,
            no_shuffle: false,
        },
        seed,
        0,
    )
    .unwrap();
    println!(
        "train: best epoch {} of {} ({:.2}s)",
        summary.best_epoch, summary.epochs_run, summary.wall_time_secs
    );

    let preds = dir.path().join("preds.tsv");
    cmd_predict(
        &PredictArgs {
            data: tok.clone(),
            model,
            vocab,
            out: Some(preds.clone()),
            probs: false,
        },
        1,
    )
    .unwrap();
    println!("predict: wrote {}", preds.display());

    let text = cmd_evaluate(
        &EvaluateArgs {
            data: tok,
            model: None,
            vocab: None,
            predictions: Some(preds),
            out: None,
            macro_avg: true,
        },
        1,
    )
    .unwrap();
    println!("\n{text}");
}
