//! Compare the analytic gradients against central finite differences on a
//! random small instance, coordinate by coordinate.
//!
//! ```bash
//! cargo run -p mixsent --example gradient_check
//! ```

use mixsent::embed::EmbeddingMatrix;
use mixsent::rcnn::{backward, forward, nll_loss, Activation, RcnnConfig, RcnnParams};
use mixsent::rng::named_rng;
use ndarray::Array2;
use rand::Rng;

fn main() {
    let cfg = RcnnConfig {
        embed_dim: 4,
        context_dim: 3,
        hidden_dim: 4,
        num_classes: 3,
        activation: Activation::Tanh,
        dropout_rate: 0.0,
        pad_id: None,
    };
    let mut rng = named_rng(2024, "gradient-check");
    let vocab_rows = 6;
    let emb_values: Vec<f64> = (0..vocab_rows * cfg.embed_dim)
        .map(|_| rng.gen_range(-1.0..1.0))
        .collect();
    let emb = EmbeddingMatrix::from_vectors(
        Array2::from_shape_vec((vocab_rows, cfg.embed_dim), emb_values).unwrap(),
        "example".into(),
    );
    let mut params = RcnnParams::zeros(&cfg, emb).unwrap();
    for (_, tensor) in params.flat_tensors_mut() {
        for v in tensor {
            *v = rng.gen_range(-0.8..0.8);
        }
    }

    let ids = vec![3, 5, 2, 3];
    let gold = 1;
    let trace = forward(&params, &cfg, &ids, None).unwrap();
    println!("loss = {:.6}", nll_loss(&trace.p, gold).value);
    let grads = backward(&params, &cfg, &trace, &ids, gold).unwrap();

    let step = 1e-5;
    let loss_of = |p: &RcnnParams| {
        let t = forward(p, &cfg, &ids, None).unwrap();
        nll_loss(&t.p, gold).value
    };

    let mut work = params.clone();
    let mut worst = 0.0f64;
    let names: Vec<&'static str> = work.flat_tensors_mut().iter().map(|(n, _)| *n).collect();
    println!("\n{:<6} {:>10} {:>14} {:>14} {:>10}", "tensor", "coords", "analytic[0]", "numeric[0]", "max rel");
    for (slot, name) in names.iter().enumerate() {
        let len = work.flat_tensors_mut()[slot].1.len();
        let mut tensor_worst = 0.0f64;
        let mut first = (0.0, 0.0);
        for idx in 0..len {
            let original = work.flat_tensors_mut()[slot].1[idx];
            work.flat_tensors_mut()[slot].1[idx] = original + step;
            let plus = loss_of(&work);
            work.flat_tensors_mut()[slot].1[idx] = original - step;
            let minus = loss_of(&work);
            work.flat_tensors_mut()[slot].1[idx] = original;
            let numeric = (plus - minus) / (2.0 * step);
            let analytic = match *name {
                "w_l" => grads.w_l.as_slice().unwrap()[idx],
                "w_r" => grads.w_r.as_slice().unwrap()[idx],
                "w_sl" => grads.w_sl.as_slice().unwrap()[idx],
                "w_sr" => grads.w_sr.as_slice().unwrap()[idx],
                "c_l0" => grads.c_l0.as_slice().unwrap()[idx],
                "c_r0" => grads.c_r0.as_slice().unwrap()[idx],
                "w2" => grads.w2.as_slice().unwrap()[idx],
                "b2" => grads.b2.as_slice().unwrap()[idx],
                "w4" => grads.w4.as_slice().unwrap()[idx],
                "b4" => grads.b4.as_slice().unwrap()[idx],
                _ => unreachable!(),
            };
            if idx == 0 {
                first = (analytic, numeric);
            }
            let rel = (analytic - numeric).abs() / f64::max(1.0, analytic.abs());
            tensor_worst = tensor_worst.max(rel);
        }
        worst = worst.max(tensor_worst);
        println!(
            "{:<6} {:>10} {:>14.8} {:>14.8} {:>10.2e}",
            name, len, first.0, first.1, tensor_worst
        );
    }
    println!("\nworst relative error across all coordinates: {worst:.2e}");
    assert!(worst < 1e-4);
    println!("gradient check passed (tolerance 1e-4)");
}
