//! Build a small random model, run the forward pass over a token sequence
//! and inspect the trace: contexts, pooled vector, winning positions and
//! the class probabilities.
//!
//! ```bash
//! cargo run -p mixsent --example forward_and_predict
//! ```

use mixsent::embed::EmbeddingMatrix;
use mixsent::preprocess::Token;
use mixsent::rcnn::{forward, predict, Activation, RcnnConfig, RcnnParams};
use mixsent::vocab::build_vocab;
use mixsent::{Polarity, TweetExample};

fn main() {
    let words = ["yeh", "film", "bahut", "acchi", "thi"];
    let corpus = vec![TweetExample {
        uid: "demo".into(),
        tokens: words.iter().map(|w| Token::word(*w)).collect(),
        label: None,
    }];
    let v = build_vocab(&corpus, 1);

    let cfg = RcnnConfig {
        embed_dim: 8,
        context_dim: 3,
        hidden_dim: 6,
        num_classes: 3,
        activation: Activation::Tanh,
        dropout_rate: 0.0,
        pad_id: None,
    };
    let embeddings = EmbeddingMatrix::random(&v, cfg.embed_dim, 42);
    let params = RcnnParams::init(&cfg, embeddings, 42).unwrap();

    let ids = v.ids_for(&corpus[0]);
    println!("tokens {:?} -> ids {:?}", words, ids);

    let trace = forward(&params, &cfg, &ids, None).unwrap();
    println!("\nleft contexts  (n x c): {:?}", trace.cl.dim());
    println!("right contexts (n x c): {:?}", trace.cr.dim());
    println!("representations (n x (2c+d)): {:?}", trace.x.dim());
    println!("projected rows (n x h): {:?}", trace.y2.dim());
    println!("pool winners per coordinate: {:?}", trace.pool_argmax);
    println!("pooled y3: {:.4}", trace.y3);
    println!("logits y4: {:.4}", trace.y4);
    println!("probabilities: {:.4} (sum {:.12})", trace.p, trace.p.sum());

    let (class, p) = predict(&params, &cfg, &ids).unwrap();
    println!(
        "\npredicted: {} (p = {:.4})",
        Polarity::from_index(class).unwrap(),
        p[class]
    );
}
