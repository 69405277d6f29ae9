//! Train skip-gram and CBOW vectors on a synthetic corpus where "alpha"
//! and "beta" share their contexts, then compare cosines against random
//! pairs.
//!
//! ```bash
//! cargo run -p mixsent --example train_embeddings
//! ```

use mixsent::embed::{cosine, train_embeddings, EmbedMode, EmbedTrainConfig};
use mixsent::preprocess::Token;
use mixsent::rng::named_rng;
use mixsent::vocab::build_vocab;
use mixsent::TweetExample;
use rand::Rng;

fn tweet(uid: String, words: Vec<String>) -> TweetExample {
    TweetExample {
        uid,
        tokens: words.iter().map(|w| Token::word(w.as_str())).collect(),
        label: None,
    }
}

fn main() {
    let mut rng = named_rng(5, "example-corpus");
    let fillers: Vec<String> = (0..40).map(|i| format!("w{i:02}")).collect();
    let pick = |rng: &mut rand_chacha::ChaCha8Rng, group: usize| {
        fillers[group * 5 + rng.gen_range(0..5)].clone()
    };

    let mut corpus = Vec::new();
    for i in 0..300 {
        let g = rng.gen_range(0..8);
        let mut words: Vec<String> = (0..4).map(|_| pick(&mut rng, g)).collect();
        words.push("alpha".into());
        words.extend((0..4).map(|_| pick(&mut rng, g)));
        words.push("beta".into());
        words.extend((0..4).map(|_| pick(&mut rng, g)));
        corpus.push(tweet(format!("ab{i}"), words));
    }
    for i in 0..700 {
        let g = rng.gen_range(0..8);
        let words: Vec<String> = (0..8).map(|_| pick(&mut rng, g)).collect();
        corpus.push(tweet(format!("f{i}"), words));
    }

    let v = build_vocab(&corpus, 5);
    println!("corpus: {} sentences, vocabulary {}", corpus.len(), v.len());

    for mode in [EmbedMode::SkipGram, EmbedMode::Cbow] {
        let cfg = EmbedTrainConfig {
            mode,
            dim: 32,
            epochs: 5,
            ..EmbedTrainConfig::default()
        };
        let (m, stats) = train_embeddings(&corpus, &v, &cfg).unwrap();
        println!("\n{mode:?}: {} pairs trained", stats.pairs_trained);

        let alpha = v.lookup("alpha");
        let beta = v.lookup("beta");
        println!("  cosine(alpha, beta) = {:+.3}", cosine(&m, alpha, beta));

        let mut pair_rng = named_rng(5, "example-pairs");
        let mut baseline = 0.0;
        for _ in 0..100 {
            let a = pair_rng.gen_range(2..v.len());
            let b = pair_rng.gen_range(2..v.len());
            if a != b {
                baseline += cosine(&m, a, b);
            }
        }
        println!("  mean cosine of 100 random pairs = {:+.3}", baseline / 100.0);
    }
}
