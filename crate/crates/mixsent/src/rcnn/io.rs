//! Text container for trained models: a versioned header, the full
//! configuration, the vocabulary hash and master seed, then every tensor
//! as `tensor <name> <rows> <cols>` followed by row-major floats printed
//! at 17 significant digits, which makes save → load → save byte-exact.

use std::io::{BufRead, Write};

use ndarray::{Array1, Array2};

use crate::embed::EmbeddingMatrix;
use crate::vocab::Vocabulary;
use crate::{Error, Result};

use super::{Activation, RcnnConfig, RcnnParams};

const MAGIC: &str = "#rcnn-model v1";

/// A deserialized model container.
#[derive(Debug, Clone)]
pub struct Checkpoint {
    pub config: RcnnConfig,
    pub params: RcnnParams,
    pub vocab_hash: String,
    pub seed: u64,
}

impl Checkpoint {
    /// Reject a vocabulary whose contents differ from the one the model
    /// was trained with; id spaces must not be mixed.
    pub fn verify_vocab(&self, v: &Vocabulary) -> Result<()> {
        let actual = v.content_hash();
        if actual != self.vocab_hash {
            return Err(Error::VocabHashMismatch {
                expected: self.vocab_hash.clone(),
                actual,
            });
        }
        Ok(())
    }
}

fn write_matrix<W: Write>(w: &mut W, name: &str, m: &Array2<f64>) -> std::io::Result<()> {
    writeln!(w, "tensor {} {} {}", name, m.nrows(), m.ncols())?;
    for row in m.rows() {
        let mut first = true;
        for v in row {
            if first {
                write!(w, "{v:.16e}")?;
                first = false;
            } else {
                write!(w, " {v:.16e}")?;
            }
        }
        writeln!(w)?;
    }
    Ok(())
}

fn write_vector<W: Write>(w: &mut W, name: &str, v: &Array1<f64>) -> std::io::Result<()> {
    writeln!(w, "tensor {} 1 {}", name, v.len())?;
    let mut first = true;
    for value in v {
        if first {
            write!(w, "{value:.16e}")?;
            first = false;
        } else {
            write!(w, " {value:.16e}")?;
        }
    }
    writeln!(w)?;
    Ok(())
}

/// Serialize a model container.
pub fn save_model<W: Write>(
    mut writer: W,
    params: &RcnnParams,
    cfg: &RcnnConfig,
    seed: u64,
) -> Result<()> {
    let inner = |w: &mut W| -> std::io::Result<()> {
        writeln!(w, "{MAGIC}")?;
        writeln!(w, "embed_dim {}", cfg.embed_dim)?;
        writeln!(w, "context_dim {}", cfg.context_dim)?;
        writeln!(w, "hidden_dim {}", cfg.hidden_dim)?;
        writeln!(w, "num_classes {}", cfg.num_classes)?;
        writeln!(w, "activation {}", cfg.activation.as_str())?;
        writeln!(w, "dropout_rate {:.16e}", cfg.dropout_rate)?;
        match cfg.pad_id {
            Some(id) => writeln!(w, "pad_id {id}")?,
            None => writeln!(w, "pad_id -")?,
        }
        writeln!(w, "vocab_hash {}", params.embeddings.vocab_hash())?;
        writeln!(w, "seed {seed}")?;
        write_matrix(w, "embeddings", params.embeddings.vectors())?;
        write_matrix(w, "w_l", &params.w_l)?;
        write_matrix(w, "w_r", &params.w_r)?;
        write_matrix(w, "w_sl", &params.w_sl)?;
        write_matrix(w, "w_sr", &params.w_sr)?;
        write_vector(w, "c_l0", &params.c_l0)?;
        write_vector(w, "c_r0", &params.c_r0)?;
        write_matrix(w, "w2", &params.w2)?;
        write_vector(w, "b2", &params.b2)?;
        write_matrix(w, "w4", &params.w4)?;
        write_vector(w, "b4", &params.b4)?;
        Ok(())
    };
    inner(&mut writer).map_err(|e| Error::io("writing model container", e))
}

struct LineReader<R: BufRead> {
    inner: std::io::Lines<R>,
    file: String,
    line_no: usize,
}

impl<R: BufRead> LineReader<R> {
    fn next_line(&mut self) -> Result<String> {
        self.line_no += 1;
        match self.inner.next() {
            Some(Ok(line)) => Ok(line),
            Some(Err(e)) => Err(Error::io(format!("reading {}", self.file), e)),
            None => Err(Error::parse(
                &self.file,
                self.line_no,
                "unexpected end of file",
            )),
        }
    }

    fn expect_field(&mut self, key: &str) -> Result<String> {
        let line = self.next_line()?;
        line.strip_prefix(key)
            .and_then(|rest| rest.strip_prefix(' '))
            .map(str::to_string)
            .ok_or_else(|| {
                Error::parse(
                    &self.file,
                    self.line_no,
                    format!("expected `{key} …`, found {line:?}"),
                )
            })
    }

    fn parse_err(&self, msg: impl Into<String>) -> Error {
        Error::parse(&self.file, self.line_no, msg)
    }
}

fn read_tensor<R: BufRead>(
    r: &mut LineReader<R>,
    expected_name: &str,
) -> Result<Array2<f64>> {
    let header = r.next_line()?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("tensor") {
        return Err(r.parse_err(format!("expected tensor header, found {header:?}")));
    }
    let name = fields
        .next()
        .ok_or_else(|| r.parse_err("tensor header missing name"))?;
    if name != expected_name {
        return Err(r.parse_err(format!(
            "expected tensor {expected_name:?}, found {name:?}"
        )));
    }
    let rows: usize = fields
        .next()
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| r.parse_err("tensor header missing rows"))?;
    let cols: usize = fields
        .next()
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| r.parse_err("tensor header missing cols"))?;

    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let line = r.next_line()?;
        let before = data.len();
        for field in line.split_whitespace() {
            let v: f64 = field
                .parse()
                .map_err(|_| r.parse_err(format!("non-numeric value {field:?}")))?;
            data.push(v);
        }
        if data.len() - before != cols {
            return Err(r.parse_err(format!(
                "tensor {expected_name}: expected {cols} values per row, found {}",
                data.len() - before
            )));
        }
    }
    Array2::from_shape_vec((rows, cols), data)
        .map_err(|e| r.parse_err(format!("tensor {expected_name}: {e}")))
}

fn read_vector<R: BufRead>(r: &mut LineReader<R>, name: &str) -> Result<Array1<f64>> {
    let m = read_tensor(r, name)?;
    if m.nrows() != 1 {
        return Err(r.parse_err(format!("tensor {name} must have a single row")));
    }
    Ok(m.row(0).to_owned())
}

/// Deserialize a model container.
pub fn load_model<R: BufRead>(reader: R, file: &str) -> Result<Checkpoint> {
    let mut r = LineReader {
        inner: reader.lines(),
        file: file.to_string(),
        line_no: 0,
    };
    let magic = r.next_line()?;
    if magic != MAGIC {
        return Err(r.parse_err(format!("not a model container (header {magic:?})")));
    }

    let parse_usize = |r: &mut LineReader<R>, key: &str| -> Result<usize> {
        let raw = r.expect_field(key)?;
        raw.trim()
            .parse()
            .map_err(|_| r.parse_err(format!("{key} is not an integer")))
    };

    let embed_dim = parse_usize(&mut r, "embed_dim")?;
    let context_dim = parse_usize(&mut r, "context_dim")?;
    let hidden_dim = parse_usize(&mut r, "hidden_dim")?;
    let num_classes = parse_usize(&mut r, "num_classes")?;
    let activation_raw = r.expect_field("activation")?;
    let activation: Activation = activation_raw
        .trim()
        .parse()
        .map_err(|e: String| r.parse_err(e))?;
    let dropout_raw = r.expect_field("dropout_rate")?;
    let dropout_rate: f64 = dropout_raw
        .trim()
        .parse()
        .map_err(|_| r.parse_err("dropout_rate is not a number"))?;
    let pad_raw = r.expect_field("pad_id")?;
    let pad_id = match pad_raw.trim() {
        "-" => None,
        other => Some(
            other
                .parse()
                .map_err(|_| r.parse_err("pad_id is not an integer"))?,
        ),
    };
    let vocab_hash = r.expect_field("vocab_hash")?.trim().to_string();
    let seed_raw = r.expect_field("seed")?;
    let seed: u64 = seed_raw
        .trim()
        .parse()
        .map_err(|_| r.parse_err("seed is not an integer"))?;

    let cfg = RcnnConfig {
        embed_dim,
        context_dim,
        hidden_dim,
        num_classes,
        activation,
        dropout_rate,
        pad_id,
    };
    cfg.validate()?;

    let embeddings = read_tensor(&mut r, "embeddings")?;
    let params = RcnnParams {
        embeddings: EmbeddingMatrix::from_vectors(embeddings, vocab_hash.clone()),
        w_l: read_tensor(&mut r, "w_l")?,
        w_r: read_tensor(&mut r, "w_r")?,
        w_sl: read_tensor(&mut r, "w_sl")?,
        w_sr: read_tensor(&mut r, "w_sr")?,
        c_l0: read_vector(&mut r, "c_l0")?,
        c_r0: read_vector(&mut r, "c_r0")?,
        w2: read_tensor(&mut r, "w2")?,
        b2: read_vector(&mut r, "b2")?,
        w4: read_tensor(&mut r, "w4")?,
        b4: read_vector(&mut r, "b4")?,
    };
    params.check_shapes(&cfg)?;

    Ok(Checkpoint {
        config: cfg,
        params,
        vocab_hash,
        seed,
    })
}
