//! Run the tweet normalization rules over a few raw tweets and show the
//! resulting token sequences.
//!
//! ```bash
//! cargo run -p mixsent --example preprocess_tweets
//! ```

use mixsent::preprocess::{preprocess_tweet, RawSource, RawTweet};

fn main() {
    let samples = [
        "RT @ bomanirani Good\u{1F60A} https t.co/x",
        "# LoveIsLove sab ek hain",
        "kitna accha din tha \u{1F60A}\u{2639}\u{FE0F}",
        "dekho yeh link https://t.co/Ab12 aur yeh â€¦ garbage",
        "@narendramodi ji kya baat hai",
    ];

    for (i, text) in samples.iter().enumerate() {
        let raw = RawTweet {
            uid: format!("demo-{i}"),
            source: RawSource::Text(text.to_string()),
            label: None,
        };
        let example = preprocess_tweet(&raw);
        println!("raw:    {text}");
        println!("tokens: {}", example.text());
        for token in &example.tokens {
            println!("        {:?} {:?}", token.kind, token.text);
        }
        println!();
    }
}
