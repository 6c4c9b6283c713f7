//! Text formats for signals, spectra and roots.
//!
//! Signal files have a one-line header followed by comma-separated rows:
//!
//! ```text
//! hxdft-signal v1 <algebra> <field> <n> <M>         # 1D, n x M payload
//! hxdft-signal v1 <algebra> <field> <a> <M> <N>     # 2D, (a*M) x (a*N) payload
//! ```
//!
//! `<algebra>` is an algebra tag or `generic`; `<field>` is `real` or
//! `complex`. Complex entries occupy two adjacent columns (re, im). Values
//! are written with 17 significant digits so binary64 data round-trips
//! exactly.
//!
//! Root files are JSON, either an algebra element
//! `{"algebra": "quaternion", "coeffs": [0, x, y, z]}` or an explicit matrix
//! `{"kind": "matrix", "entries": [[...], ...]}`. Any scalar may be written
//! as `[re, im]`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{from_matrix, AlgebraTag, GroundField, HValue};
use crate::dft::{Signal1D, Signal2D};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::root::{
    algebra_root, biquaternion_root, validate_root, MatrixRoot, Provenance, DEFAULT_TOL,
};

pub const SIGNAL_MAGIC: &str = "hxdft-signal";
pub const SIGNAL_VERSION: &str = "v1";

#[derive(Debug, Clone, PartialEq)]
pub enum SignalData {
    OneD(Signal1D),
    TwoD(Signal2D),
}

impl From<Signal1D> for SignalData {
    fn from(s: Signal1D) -> Self {
        SignalData::OneD(s)
    }
}

impl From<Signal2D> for SignalData {
    fn from(s: Signal2D) -> Self {
        SignalData::TwoD(s)
    }
}

fn algebra_label(tag: Option<AlgebraTag>) -> &'static str {
    tag.map_or("generic", AlgebraTag::as_str)
}

fn write_rows(out: &mut String, m: &CMatrix, field: GroundField) {
    for r in 0..m.nrows() {
        let mut first = true;
        for c in 0..m.ncols() {
            let z = m[(r, c)];
            if !first {
                out.push(',');
            }
            first = false;
            write!(out, "{:.16e}", z.re).unwrap();
            if field == GroundField::Complex {
                write!(out, ",{:.16e}", z.im).unwrap();
            }
        }
        out.push('\n');
    }
}

pub fn format_signal(signal: &SignalData) -> String {
    let mut out = String::new();
    match signal {
        SignalData::OneD(s) => {
            writeln!(
                out,
                "{SIGNAL_MAGIC} {SIGNAL_VERSION} {} {} {} {}",
                algebra_label(s.algebra()),
                s.field(),
                s.n(),
                s.m_len()
            )
            .unwrap();
            write_rows(&mut out, s.data(), s.field());
        }
        SignalData::TwoD(s) => {
            writeln!(
                out,
                "{SIGNAL_MAGIC} {SIGNAL_VERSION} {} {} {} {} {}",
                algebra_label(s.algebra()),
                s.field(),
                s.block_size(),
                s.m_len(),
                s.n_len()
            )
            .unwrap();
            write_rows(&mut out, &s.to_block_matrix(), s.field());
        }
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_dim(tok: &str, line: usize) -> Result<usize> {
    match tok.parse::<usize>() {
        Ok(d) if d > 0 => Ok(d),
        _ => Err(parse_err(line, format!("bad dimension '{tok}'"))),
    }
}

pub fn parse_signal(text: &str) -> Result<SignalData> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() < 2 || toks[0] != SIGNAL_MAGIC {
        return Err(parse_err(
            1,
            format!("header must start with '{SIGNAL_MAGIC}'"),
        ));
    }
    if toks[1] != SIGNAL_VERSION {
        return Err(parse_err(1, format!("unsupported version '{}'", toks[1])));
    }
    if toks.len() != 6 && toks.len() != 7 {
        return Err(parse_err(
            1,
            "expected '<algebra> <field> <n> <M>' or '<algebra> <field> <a> <M> <N>'",
        ));
    }
    let algebra = match toks[2] {
        "generic" => None,
        t => Some(t.parse::<AlgebraTag>().map_err(|e| parse_err(1, e))?),
    };
    let field: GroundField = toks[3].parse().map_err(|e: String| parse_err(1, e))?;
    let dims: Vec<usize> = toks[4..]
        .iter()
        .map(|t| parse_dim(t, 1))
        .collect::<Result<_>>()?;
    let (rows, cols) = match dims[..] {
        [n, m] => (n, m),
        [a, m, n] => (a * m, a * n),
        _ => unreachable!(),
    };
    if let Some(tag) = algebra {
        let dim = crate::algebra::algebra(tag).dim;
        if dims[0] != dim {
            return Err(parse_err(
                1,
                format!(
                    "{tag} samples have dimension {dim}, header says {}",
                    dims[0]
                ),
            ));
        }
    }
    let per_entry = match field {
        GroundField::Real => 1,
        GroundField::Complex => 2,
    };

    let mut data = CMatrix::zeros(rows, cols);
    let mut r = 0;
    for (line_no, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        if r == rows {
            return Err(parse_err(line_no, format!("more than {rows} payload rows")));
        }
        let values: Vec<f64> = line
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|_| parse_err(line_no, format!("non-numeric value '{}'", t.trim())))
            })
            .collect::<Result<_>>()?;
        if values.len() != cols * per_entry {
            return Err(parse_err(
                line_no,
                format!("expected {} values, got {}", cols * per_entry, values.len()),
            ));
        }
        for c in 0..cols {
            data[(r, c)] = match field {
                GroundField::Real => Complex64::new(values[c], 0.0),
                GroundField::Complex => Complex64::new(values[2 * c], values[2 * c + 1]),
            };
        }
        r += 1;
    }
    if r != rows {
        return Err(parse_err(
            text.lines().count(),
            format!("expected {rows} payload rows, got {r}"),
        ));
    }

    Ok(match dims[..] {
        [_, _] => SignalData::OneD(Signal1D::new(data, field)?.with_algebra(algebra)),
        [a, _, _] => SignalData::TwoD(
            Signal2D::from_block_matrix(a, &data)?
                .with_field(field)?
                .with_algebra(algebra),
        ),
        _ => unreachable!(),
    })
}

pub fn read_signal(path: impl AsRef<Path>) -> Result<SignalData> {
    parse_signal(&fs::read_to_string(path)?)
}

pub fn write_signal(path: impl AsRef<Path>, signal: &SignalData) -> Result<()> {
    fs::write(path, format_signal(signal))?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum Scalar {
    Real(f64),
    Complex([f64; 2]),
}

impl Scalar {
    fn to_c64(self) -> Complex64 {
        match self {
            Scalar::Real(x) => Complex64::new(x, 0.0),
            Scalar::Complex([re, im]) => Complex64::new(re, im),
        }
    }

    fn from_c64(z: Complex64, field: GroundField) -> Self {
        match field {
            GroundField::Real => Scalar::Real(z.re),
            GroundField::Complex => Scalar::Complex([z.re, z.im]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum MatrixKind {
    Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum RootSpec {
    Algebra {
        algebra: AlgebraTag,
        coeffs: Vec<Scalar>,
    },
    Matrix {
        kind: MatrixKind,
        entries: Vec<Vec<Scalar>>,
    },
}

/// Parses and validates a root specification.
pub fn parse_root(text: &str) -> Result<MatrixRoot> {
    match serde_json::from_str::<RootSpec>(text)? {
        RootSpec::Algebra { algebra, coeffs } => {
            let value = HValue::new(algebra, coeffs.into_iter().map(Scalar::to_c64).collect())?;
            match algebra {
                AlgebraTag::Biquaternion => biquaternion_root(&value),
                _ => algebra_root(&value),
            }
        }
        RootSpec::Matrix { entries, .. } => {
            let n = entries.len();
            if let Some(row) = entries.iter().find(|r| r.len() != n) {
                return Err(Error::Signal(format!(
                    "root matrix rows must have {n} entries, found one with {}",
                    row.len()
                )));
            }
            let m = CMatrix::from_row_iterator(n, n, entries.iter().flatten().map(|s| s.to_c64()));
            Ok(validate_root(&m, DEFAULT_TOL)?)
        }
    }
}

/// Algebra-embedded roots are written in coefficient form, all others as an
/// explicit matrix.
pub fn format_root(root: &MatrixRoot) -> Result<String> {
    let spec = match root.provenance() {
        Provenance::AlgebraEmbedding(tag) => {
            let value = from_matrix(root.entries(), tag)?;
            let field = crate::algebra::algebra(tag).field;
            RootSpec::Algebra {
                algebra: tag,
                coeffs: value
                    .coeffs()
                    .iter()
                    .map(|&z| Scalar::from_c64(z, field))
                    .collect(),
            }
        }
        _ => RootSpec::Matrix {
            kind: MatrixKind::Matrix,
            entries: root
                .entries()
                .row_iter()
                .map(|row| {
                    row.iter()
                        .map(|&z| Scalar::from_c64(z, root.field()))
                        .collect()
                })
                .collect(),
        },
    };
    let mut text = serde_json::to_string(&spec)?;
    text.push('\n');
    Ok(text)
}

pub fn read_root(path: impl AsRef<Path>) -> Result<MatrixRoot> {
    parse_root(&fs::read_to_string(path)?)
}

pub fn write_root(path: impl AsRef<Path>, root: &MatrixRoot) -> Result<()> {
    fs::write(path, format_root(root)?)?;
    Ok(())
}
