//! Build a full evaluation report from gold/predicted pairs: confusion
//! matrix, class-wise table, weighted and macro averages, and the JSON
//! form.
//!
//! ```bash
//! cargo run -p mixsent --example evaluate_report
//! ```

use mixsent::metrics::{
    class_metrics, confusion, macro_metrics, render_averages, render_class_metrics,
    render_confusion, weighted_metrics, EvalReport,
};
use mixsent::{Polarity, Token, TweetExample};

fn main() {
    // Gold/predicted pairs with a deliberate confusion structure.
    let pattern = [
        (Polarity::Positive, Polarity::Positive, 14),
        (Polarity::Positive, Polarity::Neutral, 4),
        (Polarity::Negative, Polarity::Negative, 11),
        (Polarity::Negative, Polarity::Positive, 2),
        (Polarity::Negative, Polarity::Neutral, 3),
        (Polarity::Neutral, Polarity::Neutral, 12),
        (Polarity::Neutral, Polarity::Negative, 4),
    ];
    let mut examples = Vec::new();
    let mut predictions = Vec::new();
    let mut uid = 0;
    for &(gold, pred, n) in &pattern {
        for _ in 0..n {
            examples.push(TweetExample {
                uid: uid.to_string(),
                tokens: vec![Token::word("tweet"), Token::word(&uid.to_string())],
                label: Some(gold),
            });
            predictions.push(pred);
            uid += 1;
        }
    }

    let pairs: Vec<(usize, usize)> = examples
        .iter()
        .zip(&predictions)
        .map(|(ex, p)| (ex.label.unwrap().index(), p.index()))
        .collect();
    let m = confusion(&pairs, 3);
    let classes = ["Positive", "Negative", "Neutral"];

    println!("Confusion matrix (gold rows, predicted columns)");
    print!("{}", render_confusion(&m, &classes));
    println!("\nClass-wise performance");
    print!("{}", render_class_metrics(&class_metrics(&m), &classes));
    println!();
    print!("{}", render_averages("weighted", &weighted_metrics(&m).unwrap()));
    print!("{}", render_averages("macro", &macro_metrics(&m).unwrap()));

    let report = EvalReport::build(&examples, &predictions).unwrap();
    println!("\nmisclassified examples: {}", report.errors.len());
    for e in report.errors.iter().take(3) {
        println!("  uid {} gold {} predicted {}", e.uid, e.gold, e.pred);
    }
    println!("\nJSON report:\n{}", serde_json::to_string_pretty(&report).unwrap());
}
