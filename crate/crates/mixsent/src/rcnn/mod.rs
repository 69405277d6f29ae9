//! The recurrent convolutional classifier.
//!
//! A token sequence w_1…w_n is scored in five steps. A forward scan builds
//! left contexts `cl_i = f(W_l·cl_{i-1} + W_sl·e(w_{i-1}))` and a backward
//! scan builds right contexts `cr_i = f(W_r·cr_{i+1} + W_sr·e(w_{i+1}))`,
//! with trainable boundary vectors at the ends. Each position is then
//! represented as the concatenation `x_i = [cl_i; e(w_i); cr_i]`, projected
//! through `y2_i = tanh(W2·x_i + b2)`, max-pooled over time into a single
//! vector `y3`, and mapped to class probabilities by a linear layer and a
//! softmax. `backward` produces exact gradients of the NLL loss for every
//! parameter tensor and every used embedding row by reverse-mode
//! differentiation, including backprop through time in both scans.
//!
//! All math is 64-bit and single-threaded deterministic: the same inputs
//! and parameters produce a bitwise-identical trace.

pub mod io;

use std::collections::BTreeMap;
use std::str::FromStr;

use ndarray::{Array1, Array2, ArrayView1};
use rand::Rng;

use crate::embed::EmbeddingMatrix;
use crate::rng::named_rng;
use crate::{Error, Result};

/// Activation of the two context recurrences. The projection layer is
/// always tanh.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Activation {
    Tanh,
    Relu,
}

impl Activation {
    fn apply(self, x: f64) -> f64 {
        match self {
            Activation::Tanh => x.tanh(),
            Activation::Relu => x.max(0.0),
        }
    }

    /// Derivative expressed through the activation output.
    fn derivative_from_output(self, y: f64) -> f64 {
        match self {
            Activation::Tanh => 1.0 - y * y,
            Activation::Relu => {
                if y > 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Activation::Tanh => "tanh",
            Activation::Relu => "relu",
        }
    }
}

impl FromStr for Activation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "tanh" => Ok(Activation::Tanh),
            "relu" => Ok(Activation::Relu),
            other => Err(format!("unknown activation {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RcnnConfig {
    /// Word embedding size d.
    pub embed_dim: usize,
    /// Context vector size c.
    pub context_dim: usize,
    /// Projection layer size h.
    pub hidden_dim: usize,
    /// Number of output classes K.
    pub num_classes: usize,
    pub activation: Activation,
    pub dropout_rate: f64,
    /// Token id excluded from the scans and the pool (batch padding).
    pub pad_id: Option<usize>,
}

impl Default for RcnnConfig {
    fn default() -> Self {
        RcnnConfig {
            embed_dim: 300,
            context_dim: 5,
            hidden_dim: 64,
            num_classes: 3,
            activation: Activation::Tanh,
            dropout_rate: 0.1,
            pad_id: None,
        }
    }
}

impl RcnnConfig {
    /// Width of the concatenated representation x_i.
    pub fn concat_dim(&self) -> usize {
        2 * self.context_dim + self.embed_dim
    }

    pub fn validate(&self) -> Result<()> {
        if self.embed_dim < 1 || self.context_dim < 1 || self.hidden_dim < 1 || self.num_classes < 1
        {
            return Err(Error::Config("all model dimensions must be at least 1".into()));
        }
        if !(0.0..1.0).contains(&self.dropout_rate) {
            return Err(Error::Config("dropout rate must lie in [0, 1)".into()));
        }
        Ok(())
    }
}

/// Every trainable tensor of the model.
#[derive(Debug, Clone, PartialEq)]
pub struct RcnnParams {
    pub w_l: Array2<f64>,
    pub w_r: Array2<f64>,
    pub w_sl: Array2<f64>,
    pub w_sr: Array2<f64>,
    /// Boundary left context cl(w_1).
    pub c_l0: Array1<f64>,
    /// Boundary right context cr(w_n).
    pub c_r0: Array1<f64>,
    pub w2: Array2<f64>,
    pub b2: Array1<f64>,
    pub w4: Array2<f64>,
    pub b4: Array1<f64>,
    pub embeddings: EmbeddingMatrix,
}

fn xavier(rows: usize, cols: usize, fan_in: usize, fan_out: usize, rng: &mut impl Rng) -> Array2<f64> {
    let bound = (6.0 / (fan_in + fan_out) as f64).sqrt();
    Array2::from_shape_fn((rows, cols), |_| rng.gen_range(-bound..bound))
}

impl RcnnParams {
    /// Xavier-uniform matrices, zero biases and boundary contexts.
    pub fn init(cfg: &RcnnConfig, embeddings: EmbeddingMatrix, seed: u64) -> Result<RcnnParams> {
        cfg.validate()?;
        if embeddings.dim() != cfg.embed_dim {
            return Err(Error::Config(format!(
                "embedding dim {} does not match configured embed_dim {}",
                embeddings.dim(),
                cfg.embed_dim
            )));
        }
        let (d, c, h, k) = (cfg.embed_dim, cfg.context_dim, cfg.hidden_dim, cfg.num_classes);
        let mut rng = named_rng(seed, "rcnn-init");
        Ok(RcnnParams {
            w_l: xavier(c, c, c, c, &mut rng),
            w_r: xavier(c, c, c, c, &mut rng),
            w_sl: xavier(c, d, d, c, &mut rng),
            w_sr: xavier(c, d, d, c, &mut rng),
            c_l0: Array1::zeros(c),
            c_r0: Array1::zeros(c),
            w2: xavier(h, 2 * c + d, 2 * c + d, h, &mut rng),
            b2: Array1::zeros(h),
            w4: xavier(k, h, h, k, &mut rng),
            b4: Array1::zeros(k),
            embeddings,
        })
    }

    /// All-zero parameters over the given embeddings; handy for tests.
    pub fn zeros(cfg: &RcnnConfig, embeddings: EmbeddingMatrix) -> Result<RcnnParams> {
        cfg.validate()?;
        if embeddings.dim() != cfg.embed_dim {
            return Err(Error::Config("embedding dim mismatch".into()));
        }
        let (d, c, h, k) = (cfg.embed_dim, cfg.context_dim, cfg.hidden_dim, cfg.num_classes);
        Ok(RcnnParams {
            w_l: Array2::zeros((c, c)),
            w_r: Array2::zeros((c, c)),
            w_sl: Array2::zeros((c, d)),
            w_sr: Array2::zeros((c, d)),
            c_l0: Array1::zeros(c),
            c_r0: Array1::zeros(c),
            w2: Array2::zeros((h, 2 * c + d)),
            b2: Array1::zeros(h),
            w4: Array2::zeros((k, h)),
            b4: Array1::zeros(k),
            embeddings,
        })
    }

    pub fn check_shapes(&self, cfg: &RcnnConfig) -> Result<()> {
        let (d, c, h, k) = (cfg.embed_dim, cfg.context_dim, cfg.hidden_dim, cfg.num_classes);
        let expected = [
            ("w_l", self.w_l.dim(), (c, c)),
            ("w_r", self.w_r.dim(), (c, c)),
            ("w_sl", self.w_sl.dim(), (c, d)),
            ("w_sr", self.w_sr.dim(), (c, d)),
            ("w2", self.w2.dim(), (h, 2 * c + d)),
            ("w4", self.w4.dim(), (k, h)),
        ];
        for (name, got, want) in expected {
            if got != want {
                return Err(Error::Contract(format!(
                    "{name} has shape {got:?}, expected {want:?}"
                )));
            }
        }
        if self.c_l0.len() != c
            || self.c_r0.len() != c
            || self.b2.len() != h
            || self.b4.len() != k
            || self.embeddings.dim() != d
        {
            return Err(Error::Contract("vector shape mismatch".into()));
        }
        Ok(())
    }

    /// Named flat views over every dense tensor, fixed order. Embedding
    /// rows are exposed through `embeddings` directly.
    pub fn flat_tensors_mut(&mut self) -> Vec<(&'static str, &mut [f64])> {
        vec![
            ("w_l", self.w_l.as_slice_mut().unwrap()),
            ("w_r", self.w_r.as_slice_mut().unwrap()),
            ("w_sl", self.w_sl.as_slice_mut().unwrap()),
            ("w_sr", self.w_sr.as_slice_mut().unwrap()),
            ("c_l0", self.c_l0.as_slice_mut().unwrap()),
            ("c_r0", self.c_r0.as_slice_mut().unwrap()),
            ("w2", self.w2.as_slice_mut().unwrap()),
            ("b2", self.b2.as_slice_mut().unwrap()),
            ("w4", self.w4.as_slice_mut().unwrap()),
            ("b4", self.b4.as_slice_mut().unwrap()),
        ]
    }

    /// One SGD step: θ ← θ − lr·g, touching only the embedding rows the
    /// gradient mentions.
    pub fn sgd_step(&mut self, grads: &Gradients, lr: f64) {
        self.w_l.scaled_add(-lr, &grads.w_l);
        self.w_r.scaled_add(-lr, &grads.w_r);
        self.w_sl.scaled_add(-lr, &grads.w_sl);
        self.w_sr.scaled_add(-lr, &grads.w_sr);
        self.c_l0.scaled_add(-lr, &grads.c_l0);
        self.c_r0.scaled_add(-lr, &grads.c_r0);
        self.w2.scaled_add(-lr, &grads.w2);
        self.b2.scaled_add(-lr, &grads.b2);
        self.w4.scaled_add(-lr, &grads.w4);
        self.b4.scaled_add(-lr, &grads.b4);
        for (&id, g) in &grads.embed {
            let mut row = self.embeddings.row_mut(id);
            row.scaled_add(-lr, g);
        }
    }
}

/// Everything the forward pass computed, kept for backprop and
/// inspection.
#[derive(Debug, Clone)]
pub struct ForwardTrace {
    /// Effective token ids (padding removed).
    pub token_ids: Vec<usize>,
    /// n×c rows of left contexts cl(w_i).
    pub cl: Array2<f64>,
    /// n×c rows of right contexts cr(w_i).
    pub cr: Array2<f64>,
    /// n×(2c+d) concatenated representations x_i.
    pub x: Array2<f64>,
    /// n×h projected rows y2_i.
    pub y2: Array2<f64>,
    /// Winning position per pooled coordinate.
    pub pool_argmax: Vec<usize>,
    /// Pooled vector before dropout.
    pub y3: Array1<f64>,
    /// Inverted-dropout mask applied between pool and output layer.
    pub dropout_mask: Option<Array1<f64>>,
    /// Output-layer logits.
    pub y4: Array1<f64>,
    /// Class probabilities.
    pub p: Array1<f64>,
}

/// Gradient of the loss w.r.t. every parameter tensor, plus one row per
/// used embedding id.
#[derive(Debug, Clone)]
pub struct Gradients {
    pub w_l: Array2<f64>,
    pub w_r: Array2<f64>,
    pub w_sl: Array2<f64>,
    pub w_sr: Array2<f64>,
    pub c_l0: Array1<f64>,
    pub c_r0: Array1<f64>,
    pub w2: Array2<f64>,
    pub b2: Array1<f64>,
    pub w4: Array2<f64>,
    pub b4: Array1<f64>,
    pub embed: BTreeMap<usize, Array1<f64>>,
}

impl Gradients {
    pub fn zeros_like(params: &RcnnParams) -> Gradients {
        Gradients {
            w_l: Array2::zeros(params.w_l.dim()),
            w_r: Array2::zeros(params.w_r.dim()),
            w_sl: Array2::zeros(params.w_sl.dim()),
            w_sr: Array2::zeros(params.w_sr.dim()),
            c_l0: Array1::zeros(params.c_l0.len()),
            c_r0: Array1::zeros(params.c_r0.len()),
            w2: Array2::zeros(params.w2.dim()),
            b2: Array1::zeros(params.b2.len()),
            w4: Array2::zeros(params.w4.dim()),
            b4: Array1::zeros(params.b4.len()),
            embed: BTreeMap::new(),
        }
    }

    pub fn add_assign(&mut self, other: &Gradients) {
        self.w_l += &other.w_l;
        self.w_r += &other.w_r;
        self.w_sl += &other.w_sl;
        self.w_sr += &other.w_sr;
        self.c_l0 += &other.c_l0;
        self.c_r0 += &other.c_r0;
        self.w2 += &other.w2;
        self.b2 += &other.b2;
        self.w4 += &other.w4;
        self.b4 += &other.b4;
        for (&id, g) in &other.embed {
            self.embed
                .entry(id)
                .and_modify(|dst| *dst += g)
                .or_insert_with(|| g.clone());
        }
    }

    pub fn scale(&mut self, s: f64) {
        self.w_l *= s;
        self.w_r *= s;
        self.w_sl *= s;
        self.w_sr *= s;
        self.c_l0 *= s;
        self.c_r0 *= s;
        self.w2 *= s;
        self.b2 *= s;
        self.w4 *= s;
        self.b4 *= s;
        for g in self.embed.values_mut() {
            *g *= s;
        }
    }

    pub fn is_finite(&self) -> bool {
        let dense = self
            .w_l
            .iter()
            .chain(self.w_r.iter())
            .chain(self.w_sl.iter())
            .chain(self.w_sr.iter())
            .chain(self.c_l0.iter())
            .chain(self.c_r0.iter())
            .chain(self.w2.iter())
            .chain(self.b2.iter())
            .chain(self.w4.iter())
            .chain(self.b4.iter())
            .all(|v| v.is_finite());
        dense && self.embed.values().all(|g| g.iter().all(|v| v.is_finite()))
    }
}

fn add_outer(dst: &mut Array2<f64>, a: ArrayView1<f64>, b: ArrayView1<f64>) {
    for (i, ai) in a.iter().enumerate() {
        let mut row = dst.row_mut(i);
        for (slot, bj) in row.iter_mut().zip(b.iter()) {
            *slot += ai * bj;
        }
    }
}

fn softmax(logits: &Array1<f64>) -> Array1<f64> {
    let max = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Array1<f64> = logits.mapv(|v| (v - max).exp());
    let sum = exps.sum();
    exps / sum
}

fn effective_ids(cfg: &RcnnConfig, token_ids: &[usize]) -> Vec<usize> {
    match cfg.pad_id {
        Some(pad) => token_ids.iter().copied().filter(|&id| id != pad).collect(),
        None => token_ids.to_vec(),
    }
}

/// Deterministic forward pass. Padding ids are dropped before the scans so
/// they influence neither the contexts nor the pool; an all-padding or
/// empty sequence is an error. `dropout_mask` is only passed in training
/// mode and is applied (inverted-dropout style) to the pooled vector.
pub fn forward(
    params: &RcnnParams,
    cfg: &RcnnConfig,
    token_ids: &[usize],
    dropout_mask: Option<&Array1<f64>>,
) -> Result<ForwardTrace> {
    params.check_shapes(cfg)?;
    let ids = effective_ids(cfg, token_ids);
    if ids.is_empty() {
        return Err(Error::EmptySequence);
    }
    let vocab_rows = params.embeddings.rows();
    if let Some(&bad) = ids.iter().find(|&&id| id >= vocab_rows) {
        return Err(Error::Contract(format!(
            "token id {bad} outside vocabulary of size {vocab_rows}"
        )));
    }
    if let Some(mask) = dropout_mask {
        if mask.len() != cfg.hidden_dim {
            return Err(Error::Contract(format!(
                "dropout mask has length {}, expected {}",
                mask.len(),
                cfg.hidden_dim
            )));
        }
    }

    let n = ids.len();
    let (d, c, h) = (cfg.embed_dim, cfg.context_dim, cfg.hidden_dim);
    let f = cfg.activation;

    let mut cl = Array2::zeros((n, c));
    cl.row_mut(0).assign(&params.c_l0);
    for i in 1..n {
        let prev_ctx = cl.row(i - 1).to_owned();
        let prev_emb = params.embeddings.row(ids[i - 1]);
        let pre = params.w_l.dot(&prev_ctx) + params.w_sl.dot(&prev_emb);
        cl.row_mut(i).assign(&pre.mapv(|v| f.apply(v)));
    }

    let mut cr = Array2::zeros((n, c));
    cr.row_mut(n - 1).assign(&params.c_r0);
    for i in (0..n.saturating_sub(1)).rev() {
        let next_ctx = cr.row(i + 1).to_owned();
        let next_emb = params.embeddings.row(ids[i + 1]);
        let pre = params.w_r.dot(&next_ctx) + params.w_sr.dot(&next_emb);
        cr.row_mut(i).assign(&pre.mapv(|v| f.apply(v)));
    }

    let mut x = Array2::zeros((n, 2 * c + d));
    for i in 0..n {
        let mut row = x.row_mut(i);
        row.slice_mut(ndarray::s![0..c]).assign(&cl.row(i));
        row.slice_mut(ndarray::s![c..c + d])
            .assign(&params.embeddings.row(ids[i]));
        row.slice_mut(ndarray::s![c + d..]).assign(&cr.row(i));
    }

    let mut y2 = Array2::zeros((n, h));
    for i in 0..n {
        let pre = params.w2.dot(&x.row(i)) + &params.b2;
        y2.row_mut(i).assign(&pre.mapv(f64::tanh));
    }

    let mut pool_argmax = vec![0usize; h];
    let mut y3 = Array1::from_elem(h, f64::NEG_INFINITY);
    for j in 0..h {
        for i in 0..n {
            let v = y2[[i, j]];
            if v > y3[j] {
                y3[j] = v;
                pool_argmax[j] = i;
            }
        }
    }

    let y3_used = match dropout_mask {
        Some(mask) => &y3 * mask,
        None => y3.clone(),
    };
    let y4 = params.w4.dot(&y3_used) + &params.b4;
    let p = softmax(&y4);

    Ok(ForwardTrace {
        token_ids: ids,
        cl,
        cr,
        x,
        y2,
        pool_argmax,
        y3,
        dropout_mask: dropout_mask.cloned(),
        y4,
        p,
    })
}

/// Negative log likelihood of the gold class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossValue {
    pub value: f64,
    /// Set when p\[gold\] was zero and the loss was clamped to −ln(1e-12).
    pub clamped: bool,
}

const NLL_EPSILON: f64 = 1e-12;

pub fn nll_loss(p: &Array1<f64>, gold: usize) -> LossValue {
    let prob = p[gold];
    if prob <= 0.0 {
        LossValue {
            value: -NLL_EPSILON.ln(),
            clamped: true,
        }
    } else {
        LossValue {
            value: -prob.ln(),
            clamped: false,
        }
    }
}

/// Exact gradients of `nll_loss ∘ forward` for every parameter tensor and
/// every used embedding row. `trace` must come from `forward` on the same
/// inputs.
pub fn backward(
    params: &RcnnParams,
    cfg: &RcnnConfig,
    trace: &ForwardTrace,
    token_ids: &[usize],
    gold: usize,
) -> Result<Gradients> {
    params.check_shapes(cfg)?;
    let ids = effective_ids(cfg, token_ids);
    if ids != trace.token_ids {
        return Err(Error::Contract(
            "trace does not belong to the given token ids".into(),
        ));
    }
    if gold >= cfg.num_classes {
        return Err(Error::Contract(format!(
            "gold class {gold} outside {} classes",
            cfg.num_classes
        )));
    }
    let n = ids.len();
    let (d, c) = (cfg.embed_dim, cfg.context_dim);
    let (h, k) = (cfg.hidden_dim, cfg.num_classes);
    if trace.cl.dim() != (n, c)
        || trace.cr.dim() != (n, c)
        || trace.x.dim() != (n, 2 * c + d)
        || trace.y2.dim() != (n, h)
        || trace.pool_argmax.len() != h
        || trace.y3.len() != h
        || trace.y4.len() != k
        || trace.p.len() != k
        || trace.dropout_mask.as_ref().is_some_and(|m| m.len() != h)
    {
        return Err(Error::Contract(
            "trace shapes do not match the configuration".into(),
        ));
    }
    let f = cfg.activation;
    let mut grads = Gradients::zeros_like(params);

    // Softmax + NLL collapse to p − onehot(gold) at the logits.
    let mut dy4 = trace.p.clone();
    dy4[gold] -= 1.0;

    let y3_used = match &trace.dropout_mask {
        Some(mask) => &trace.y3 * mask,
        None => trace.y3.clone(),
    };
    add_outer(&mut grads.w4, dy4.view(), y3_used.view());
    grads.b4 += &dy4;

    let mut dy3 = params.w4.t().dot(&dy4);
    if let Some(mask) = &trace.dropout_mask {
        dy3 *= mask;
    }

    // The pool routes each coordinate's gradient to its winning position.
    let mut dy2: Array2<f64> = Array2::zeros(trace.y2.dim());
    for (j, &win) in trace.pool_argmax.iter().enumerate() {
        dy2[[win, j]] += dy3[j];
    }

    // Projection layer; collect dx rows for the recurrences below.
    let mut dcl = Array2::zeros((n, c));
    let mut dcr = Array2::zeros((n, c));
    for i in 0..n {
        let y2_row = trace.y2.row(i);
        let dz: Array1<f64> = dy2
            .row(i)
            .iter()
            .zip(y2_row.iter())
            .map(|(g, y)| g * (1.0 - y * y))
            .collect();
        add_outer(&mut grads.w2, dz.view(), trace.x.row(i));
        grads.b2 += &dz;
        let dx = params.w2.t().dot(&dz);
        dcl.row_mut(i).add_assign2(&dx.slice(ndarray::s![0..c]));
        accumulate_embed(&mut grads.embed, ids[i], dx.slice(ndarray::s![c..c + d]));
        dcr.row_mut(i).add_assign2(&dx.slice(ndarray::s![c + d..]));
    }

    // Left recurrence, backwards through time. cl_i depends on cl_{i-1}
    // and e(w_{i-1}); position 0 holds the trainable boundary vector.
    for i in (1..n).rev() {
        let dz: Array1<f64> = dcl
            .row(i)
            .iter()
            .zip(trace.cl.row(i).iter())
            .map(|(g, y)| g * f.derivative_from_output(*y))
            .collect();
        add_outer(&mut grads.w_l, dz.view(), trace.cl.row(i - 1));
        add_outer(&mut grads.w_sl, dz.view(), params.embeddings.row(ids[i - 1]));
        accumulate_embed(&mut grads.embed, ids[i - 1], params.w_sl.t().dot(&dz).view());
        let carry = params.w_l.t().dot(&dz);
        dcl.row_mut(i - 1).add_assign2(&carry.view());
    }
    grads.c_l0 += &dcl.row(0);

    // Right recurrence, forwards through positions. cr_i depends on
    // cr_{i+1} and e(w_{i+1}); position n-1 holds the boundary vector.
    for i in 0..n.saturating_sub(1) {
        let dz: Array1<f64> = dcr
            .row(i)
            .iter()
            .zip(trace.cr.row(i).iter())
            .map(|(g, y)| g * f.derivative_from_output(*y))
            .collect();
        add_outer(&mut grads.w_r, dz.view(), trace.cr.row(i + 1));
        add_outer(&mut grads.w_sr, dz.view(), params.embeddings.row(ids[i + 1]));
        accumulate_embed(&mut grads.embed, ids[i + 1], params.w_sr.t().dot(&dz).view());
        let carry = params.w_r.t().dot(&dz);
        dcr.row_mut(i + 1).add_assign2(&carry.view());
    }
    grads.c_r0 += &dcr.row(n - 1);

    Ok(grads)
}

fn accumulate_embed(map: &mut BTreeMap<usize, Array1<f64>>, id: usize, grad: ArrayView1<f64>) {
    map.entry(id)
        .and_modify(|dst| *dst += &grad)
        .or_insert_with(|| grad.to_owned());
}

trait AddAssignView {
    fn add_assign2(&mut self, other: &ArrayView1<f64>);
}

impl AddAssignView for ndarray::ArrayViewMut1<'_, f64> {
    fn add_assign2(&mut self, other: &ArrayView1<f64>) {
        for (a, b) in self.iter_mut().zip(other.iter()) {
            *a += b;
        }
    }
}

/// Evaluation-mode prediction: class with the highest probability, ties
/// broken toward the lowest class index.
pub fn predict(
    params: &RcnnParams,
    cfg: &RcnnConfig,
    token_ids: &[usize],
) -> Result<(usize, Array1<f64>)> {
    let trace = forward(params, cfg, token_ids, None)?;
    let mut best = 0;
    for (k, &prob) in trace.p.iter().enumerate() {
        if prob > trace.p[best] {
            best = k;
        }
    }
    Ok((best, trace.p))
}
