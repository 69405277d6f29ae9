//! Build a frequency-thresholded vocabulary from a tiny corpus and poke at
//! lookups and the file format.
//!
//! ```bash
//! cargo run -p mixsent --example build_vocab
//! ```

use mixsent::preprocess::{preprocess_tweet, RawSource, RawTweet};
use mixsent::vocab::build_vocab;

fn main() {
    let lines = [
        "accha din hai aaj",
        "accha accha bahut accha",
        "din bhar kaam kaam kaam",
        "aaj ka din accha tha",
        "kaam khatam hua aaj",
    ];
    let corpus: Vec<_> = lines
        .iter()
        .enumerate()
        .map(|(i, text)| {
            preprocess_tweet(&RawTweet {
                uid: i.to_string(),
                source: RawSource::Text(text.to_string()),
                label: None,
            })
        })
        .collect();

    let v = build_vocab(&corpus, 2);
    println!("vocabulary ({} entries, min_count {}):", v.len(), v.min_count());
    for (id, (word, count)) in v.entries().iter().enumerate() {
        println!("  {id:>2}  {word:<8} count {count}");
    }

    for probe in ["accha", "kaam", "khatam", "unseen-word"] {
        println!("lookup({probe:?}) -> id {}", v.lookup(probe));
    }

    let mut file = Vec::new();
    v.write_to(&mut file).unwrap();
    println!("\nvocabulary file:\n{}", String::from_utf8(file).unwrap());
    println!("content hash: {}", v.content_hash());
}
