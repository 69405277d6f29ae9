//! Train the classifier on a small synthetic corpus whose classes are
//! revealed by marker tokens, and watch it reach perfect accuracy.
//!
//! ```bash
//! cargo run -p mixsent --example train_classifier
//! ```

use mixsent::embed::EmbeddingMatrix;
use mixsent::rcnn::{Activation, RcnnConfig, RcnnParams};
use mixsent::trainer::{train, TrainConfig};
use mixsent::vocab::build_vocab;
use mixsent::{Polarity, Token, TweetExample};

fn corpus() -> Vec<TweetExample> {
    let fillers = ["yeh", "to", "hai", "na", "kya"];
    let mut corpus = Vec::new();
    for k in 0..3usize {
        for j in 0..11usize {
            let mark = format!("mark{k}");
            let words = [
                fillers[(j + k) % fillers.len()],
                mark.as_str(),
                fillers[(j * 2 + k) % fillers.len()],
            ];
            corpus.push(TweetExample {
                uid: format!("{k}-{j}"),
                tokens: words.iter().map(|w| Token::word(*w)).collect(),
                label: Polarity::from_index(k),
            });
        }
    }
    corpus
}

fn main() {
    let data = corpus();
    let v = build_vocab(&data, 1);
    let cfg = RcnnConfig {
        embed_dim: 16,
        context_dim: 5,
        hidden_dim: 32,
        num_classes: 3,
        activation: Activation::Tanh,
        dropout_rate: 0.1,
        pad_id: None,
    };
    let embeddings = EmbeddingMatrix::random(&v, cfg.embed_dim, 7);
    let params = RcnnParams::init(&cfg, embeddings, 7).unwrap();

    let tc = TrainConfig {
        lr: 0.6,
        batch_size: 64,
        max_epochs: 60,
        seed: 7,
        patience: 10,
        shuffle: true,
    };
    println!(
        "training on {} examples, vocabulary {}, lr {}, batch {}",
        data.len(),
        v.len(),
        tc.lr,
        tc.batch_size
    );
    let (_best, report) = train(params, &cfg, &data, &data, &v, &tc).unwrap();

    for record in &report.epochs {
        println!(
            "epoch {:>2}: loss {:.4}  train-acc {:.3}  val-F1 {:.3}",
            record.epoch,
            record.train_loss,
            record.train_accuracy,
            record.val_weighted_f1.unwrap_or(f64::NAN)
        );
    }
    println!(
        "\nbest epoch {} of {}, wall time {:.2}s",
        report.best_epoch,
        report.epochs.len(),
        report.wall_time_secs
    );
}
