//! Evaluation arithmetic: confusion matrices, per-class precision /
//! recall / F1 with supports, support-weighted and macro averages, and the
//! misclassification report.
//!
//! Display rules: per-class tables round half-up at two decimals; the
//! weighted block is printed scorer-style, truncated at four decimals
//! (truncation, not rounding, is what the task scorer emits).

use serde::Serialize;

use crate::preprocess::{Polarity, TweetExample};
use crate::{Error, Result};

/// Gold-by-predicted counts; `counts[g][p]` is the number of examples with
/// gold class `g` predicted as `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfusionMatrix {
    counts: Vec<Vec<u64>>,
}

/// Tally (gold, predicted) pairs into a K×K matrix. Classes must lie in
/// `[0, num_classes)`.
pub fn confusion(pairs: &[(usize, usize)], num_classes: usize) -> ConfusionMatrix {
    let mut counts = vec![vec![0u64; num_classes]; num_classes];
    for &(gold, pred) in pairs {
        assert!(
            gold < num_classes && pred < num_classes,
            "class pair ({gold}, {pred}) outside [0, {num_classes})"
        );
        counts[gold][pred] += 1;
    }
    ConfusionMatrix { counts }
}

impl ConfusionMatrix {
    pub fn from_counts(counts: Vec<Vec<u64>>) -> ConfusionMatrix {
        let k = counts.len();
        assert!(counts.iter().all(|row| row.len() == k), "matrix must be square");
        ConfusionMatrix { counts }
    }

    pub fn num_classes(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, gold: usize, pred: usize) -> u64 {
        self.counts[gold][pred]
    }

    pub fn counts(&self) -> &Vec<Vec<u64>> {
        &self.counts
    }

    /// Gold examples of a class (row sum).
    pub fn support(&self, class: usize) -> u64 {
        self.counts[class].iter().sum()
    }

    /// Examples predicted as a class (column sum).
    pub fn predicted(&self, class: usize) -> u64 {
        self.counts.iter().map(|row| row[class]).sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    pub fn trace(&self) -> u64 {
        (0..self.num_classes()).map(|k| self.counts[k][k]).sum()
    }
}

/// Precision, recall, F1 and support of one class. 0/0 ratios are defined
/// as 0 and flagged degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub support: u64,
    pub degenerate: bool,
}

fn ratio(num: u64, den: u64) -> (f64, bool) {
    if den == 0 {
        (0.0, true)
    } else {
        (num as f64 / den as f64, false)
    }
}

/// Per-class metrics in class order.
pub fn class_metrics(m: &ConfusionMatrix) -> Vec<ClassMetrics> {
    (0..m.num_classes())
        .map(|k| {
            let tp = m.count(k, k);
            let (precision, p_deg) = ratio(tp, m.predicted(k));
            let (recall, r_deg) = ratio(tp, m.support(k));
            let f1_den = m.support(k) + m.predicted(k);
            let (f1, f_deg) = ratio(2 * tp, f1_den);
            ClassMetrics {
                precision,
                recall,
                f1,
                support: m.support(k),
                degenerate: p_deg || r_deg || f_deg,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Averages {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

/// Support-weighted means of the per-class metrics (the task metric).
pub fn weighted_metrics(m: &ConfusionMatrix) -> Result<Averages> {
    let total = m.total();
    if total == 0 {
        return Err(Error::EmptyEvaluation);
    }
    let per_class = class_metrics(m);
    let mut avg = Averages {
        precision: 0.0,
        recall: 0.0,
        f1: 0.0,
    };
    for (k, cm) in per_class.iter().enumerate() {
        let weight = m.support(k) as f64 / total as f64;
        avg.precision += weight * cm.precision;
        avg.recall += weight * cm.recall;
        avg.f1 += weight * cm.f1;
    }
    Ok(avg)
}

/// Unweighted means of the per-class metrics.
pub fn macro_metrics(m: &ConfusionMatrix) -> Result<Averages> {
    if m.total() == 0 {
        return Err(Error::EmptyEvaluation);
    }
    let per_class = class_metrics(m);
    let k = per_class.len() as f64;
    Ok(Averages {
        precision: per_class.iter().map(|c| c.precision).sum::<f64>() / k,
        recall: per_class.iter().map(|c| c.recall).sum::<f64>() / k,
        f1: per_class.iter().map(|c| c.f1).sum::<f64>() / k,
    })
}

pub fn accuracy(m: &ConfusionMatrix) -> Result<f64> {
    let total = m.total();
    if total == 0 {
        return Err(Error::EmptyEvaluation);
    }
    Ok(m.trace() as f64 / total as f64)
}

/// One wrongly predicted example.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Misclassified {
    pub uid: String,
    pub gold: String,
    pub pred: String,
    pub text: String,
}

/// List every mismatch, grouped by (gold, predicted) cell in class order
/// and keeping the input order within a cell. Examples without a gold
/// label are a contract violation, as is a length mismatch.
pub fn error_report(
    examples: &[TweetExample],
    predictions: &[Polarity],
) -> Result<Vec<Misclassified>> {
    if examples.len() != predictions.len() {
        return Err(Error::Contract(format!(
            "{} examples but {} predictions",
            examples.len(),
            predictions.len()
        )));
    }
    let mut cells: Vec<Vec<Misclassified>> = vec![Vec::new(); 9];
    for (ex, &pred) in examples.iter().zip(predictions.iter()) {
        let gold = ex.label.ok_or_else(|| {
            Error::Contract(format!("example {} has no gold label", ex.uid))
        })?;
        if gold != pred {
            cells[gold.index() * 3 + pred.index()].push(Misclassified {
                uid: ex.uid.clone(),
                gold: gold.as_str().to_string(),
                pred: pred.as_str().to_string(),
                text: ex.text(),
            });
        }
    }
    Ok(cells.into_iter().flatten().collect())
}

/// The full JSON-serializable evaluation report.
#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub confusion: Vec<Vec<u64>>,
    pub classes: Vec<String>,
    pub per_class: Vec<ClassMetrics>,
    pub weighted: Averages,
    #[serde(rename = "macro")]
    pub macro_avg: Averages,
    pub accuracy: f64,
    pub errors: Vec<ErrorRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorRecord {
    pub uid: String,
    pub gold: String,
    pub pred: String,
}

impl EvalReport {
    /// Evaluate predictions against gold labels.
    pub fn build(examples: &[TweetExample], predictions: &[Polarity]) -> Result<EvalReport> {
        if examples.len() != predictions.len() {
            return Err(Error::Contract(format!(
                "{} examples but {} predictions",
                examples.len(),
                predictions.len()
            )));
        }
        let pairs: Vec<(usize, usize)> = examples
            .iter()
            .zip(predictions.iter())
            .map(|(ex, &pred)| {
                ex.label
                    .map(|gold| (gold.index(), pred.index()))
                    .ok_or_else(|| {
                        Error::Contract(format!("example {} has no gold label", ex.uid))
                    })
            })
            .collect::<Result<_>>()?;
        let m = confusion(&pairs, 3);
        let errors = error_report(examples, predictions)?
            .into_iter()
            .map(|e| ErrorRecord {
                uid: e.uid,
                gold: e.gold,
                pred: e.pred,
            })
            .collect();
        Ok(EvalReport {
            per_class: class_metrics(&m),
            weighted: weighted_metrics(&m)?,
            macro_avg: macro_metrics(&m)?,
            accuracy: accuracy(&m)?,
            classes: Polarity::ALL.iter().map(|p| p.as_str().to_string()).collect(),
            confusion: m.counts().clone(),
            errors,
        })
    }
}

/// Half-up rounding at `digits` decimals, for table display.
pub fn round_half_up(value: f64, digits: u32) -> f64 {
    let scale = 10f64.powi(digits as i32);
    (value * scale + 0.5).floor() / scale
}

/// Truncation toward zero at `digits` decimals, for scorer-style display.
pub fn truncate_digits(value: f64, digits: u32) -> f64 {
    let scale = 10f64.powi(digits as i32);
    (value * scale).trunc() / scale
}

/// Render the confusion matrix in the familiar gold-rows by
/// predicted-columns table.
pub fn render_confusion(m: &ConfusionMatrix, classes: &[&str]) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = write!(out, "{:<10}", "");
    for name in classes {
        let _ = write!(out, "{name:>10}");
    }
    out.push('\n');
    for (g, name) in classes.iter().enumerate() {
        let _ = write!(out, "{name:<10}");
        for p in 0..classes.len() {
            let _ = write!(out, "{:>10}", m.count(g, p));
        }
        out.push('\n');
    }
    out
}

/// Render the class-wise precision/recall/F1 table at two decimals.
pub fn render_class_metrics(per_class: &[ClassMetrics], classes: &[&str]) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<10}{:>10}{:>10}{:>10}{:>10}",
        "", "Precision", "Recall", "F1 score", "Support"
    );
    for (name, cm) in classes.iter().zip(per_class.iter()) {
        let _ = writeln!(
            out,
            "{:<10}{:>10.2}{:>10.2}{:>10.2}{:>10}",
            name,
            round_half_up(cm.precision, 2),
            round_half_up(cm.recall, 2),
            round_half_up(cm.f1, 2),
            cm.support
        );
    }
    out
}

/// Render the averaged metrics at four decimals, scorer-style.
pub fn render_averages(label: &str, avg: &Averages) -> String {
    format!(
        "{:<10}{:>10.4}{:>10.4}{:>10.4}\n",
        label,
        truncate_digits(avg.precision, 4),
        truncate_digits(avg.recall, 4),
        truncate_digits(avg.f1, 4)
    )
}
