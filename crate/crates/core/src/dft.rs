//! One-sided 1D and two-sided 2D matrix-exponential DFTs.
//!
//! A 1D signal is an `n × M` matrix with one sample per column; the forward
//! transform is
//!
//! ```text
//! F[:,u] = S Σ_m exp(−J·2πmu/M) f[:,m]
//! ```
//!
//! and the inverse is the same sum with `−J` in place of `J` and `T` in place
//! of `S`. A 2D signal is an `M × N` grid of `a × a` blocks, transformed with
//! exponentials on both sides of each block:
//!
//! ```text
//! F[u,v] = S Σ_m Σ_n exp(−J·2πmu/M) f[m,n] exp(−K·2πnv/N)
//! ```
//!
//! Production paths precompute the `M` distinct exponentials once and index
//! them by `mu mod M`. The `reference_*` functions transcribe the plain
//! nested loops with a fresh general matrix exponential per term and exist
//! only to cross-check the fast paths.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::{from_matrix, to_matrix, AlgebraTag, GroundField, HValue};
use crate::error::{Error, Result};
use crate::linalg::{is_real, re, Accumulator, CMatrix, CVector};
use crate::matexp::{euler_exp, expm, phasor};
use crate::root::MatrixRoot;

/// Sums with at least this many terms use compensated accumulation.
pub const COMPENSATED_MIN_TERMS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Placement of the `1/M` (or `1/MN`) normalisation between the forward
/// factor `S` and the inverse factor `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaleConvention {
    /// `S = 1/M`, `T = 1`.
    ForwardScaled,
    /// `S = 1`, `T = 1/M`.
    InverseScaled,
    /// `S = T = 1/√M`.
    Unitary,
}

impl ScaleConvention {
    pub const ALL: [ScaleConvention; 3] = [
        ScaleConvention::ForwardScaled,
        ScaleConvention::InverseScaled,
        ScaleConvention::Unitary,
    ];

    /// `(S, T)` for a transform over `count` samples (`M`, or `M·N` in 2D).
    pub fn factors(self, count: usize) -> (f64, f64) {
        let c = count as f64;
        match self {
            ScaleConvention::ForwardScaled => (1.0 / c, 1.0),
            ScaleConvention::InverseScaled => (1.0, 1.0 / c),
            ScaleConvention::Unitary => {
                let s = 1.0 / c.sqrt();
                (s, s)
            }
        }
    }

    pub fn factor(self, direction: Direction, count: usize) -> f64 {
        let (s, t) = self.factors(count);
        match direction {
            Direction::Forward => s,
            Direction::Inverse => t,
        }
    }
}

/// `n × M` samples, one per column.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal1D {
    data: CMatrix,
    field: GroundField,
    algebra: Option<AlgebraTag>,
}

impl Signal1D {
    pub fn new(data: CMatrix, field: GroundField) -> Result<Self> {
        if data.nrows() == 0 || data.ncols() == 0 {
            return Err(Error::Signal(format!(
                "signal must be at least 1x1, got {}x{}",
                data.nrows(),
                data.ncols()
            )));
        }
        if field == GroundField::Real && !is_real(&data) {
            return Err(Error::Signal(
                "real signal has non-zero imaginary parts".into(),
            ));
        }
        Ok(Self {
            data,
            field,
            algebra: None,
        })
    }

    /// Stacks algebra values as columns.
    pub fn from_values(values: &[HValue]) -> Result<Self> {
        let first = values
            .first()
            .ok_or_else(|| Error::Signal("signal needs at least one sample".into()))?;
        let tag = first.tag();
        let dim = first.coeffs().len();
        let mut data = CMatrix::zeros(dim, values.len());
        for (m, v) in values.iter().enumerate() {
            if v.tag() != tag {
                return Err(Error::AlgebraMismatch {
                    left: tag,
                    right: v.tag(),
                });
            }
            data.set_column(m, &CVector::from_column_slice(v.coeffs()));
        }
        let field = if is_real(&data) {
            GroundField::Real
        } else {
            GroundField::Complex
        };
        Ok(Self::new(data, field)?.with_algebra(Some(tag)))
    }

    pub fn with_algebra(mut self, algebra: Option<AlgebraTag>) -> Self {
        self.algebra = algebra;
        self
    }

    /// Sample dimension `n`.
    pub fn n(&self) -> usize {
        self.data.nrows()
    }

    /// Sample count `M`.
    pub fn m_len(&self) -> usize {
        self.data.ncols()
    }

    pub fn data(&self) -> &CMatrix {
        &self.data
    }

    pub fn field(&self) -> GroundField {
        self.field
    }

    pub fn algebra(&self) -> Option<AlgebraTag> {
        self.algebra
    }

    /// Column `m` as an element of `tag`.
    pub fn value(&self, m: usize, tag: AlgebraTag) -> Result<HValue> {
        let coeffs = self.data.column(m).iter().copied().collect();
        HValue::new(tag, coeffs)
    }

    /// Real scalar combination `a·self + b·other`.
    pub fn combine(&self, a: f64, other: &Signal1D, b: f64) -> Result<Signal1D> {
        if self.data.shape() != other.data.shape() {
            return Err(Error::Signal("shape mismatch".into()));
        }
        Ok(Signal1D {
            data: &self.data * re(a) + &other.data * re(b),
            field: self.field.join(other.field),
            algebra: self.algebra,
        })
    }
}

/// `M × N` grid of `a × a` blocks, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal2D {
    block: usize,
    rows: usize,
    cols: usize,
    blocks: Vec<CMatrix>,
    field: GroundField,
    algebra: Option<AlgebraTag>,
}

impl Signal2D {
    pub fn new(block: usize, rows: usize, cols: usize, blocks: Vec<CMatrix>) -> Result<Self> {
        if block == 0 || rows == 0 || cols == 0 {
            return Err(Error::Signal(
                "2D signal dimensions must be positive".into(),
            ));
        }
        if blocks.len() != rows * cols {
            return Err(Error::Signal(format!(
                "expected {} blocks, got {}",
                rows * cols,
                blocks.len()
            )));
        }
        if let Some(b) = blocks.iter().find(|b| b.shape() != (block, block)) {
            return Err(Error::Signal(format!(
                "block is {}x{}, expected {block}x{block}",
                b.nrows(),
                b.ncols()
            )));
        }
        let field = if blocks.iter().all(is_real) {
            GroundField::Real
        } else {
            GroundField::Complex
        };
        Ok(Self {
            block,
            rows,
            cols,
            blocks,
            field,
            algebra: None,
        })
    }

    /// Embeds each value with its matrix representation.
    pub fn from_values(grid: &[Vec<HValue>]) -> Result<Self> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, Vec::len);
        let tag = grid
            .first()
            .and_then(|r| r.first())
            .map(HValue::tag)
            .ok_or_else(|| Error::Signal("2D signal needs at least one sample".into()))?;
        let mut blocks = Vec::with_capacity(rows * cols);
        for row in grid {
            if row.len() != cols {
                return Err(Error::Signal("ragged 2D grid".into()));
            }
            for v in row {
                if v.tag() != tag {
                    return Err(Error::AlgebraMismatch {
                        left: tag,
                        right: v.tag(),
                    });
                }
                blocks.push(to_matrix(v));
            }
        }
        let block = blocks[0].nrows();
        Ok(Self::new(block, rows, cols, blocks)?.with_algebra(Some(tag)))
    }

    /// Reads every block back as an element of `tag`.
    pub fn to_values(&self, tag: AlgebraTag) -> Result<Vec<Vec<HValue>>> {
        (0..self.rows)
            .map(|m| {
                (0..self.cols)
                    .map(|n| from_matrix(self.block(m, n), tag))
                    .collect()
            })
            .collect()
    }

    /// Splits an `(a·M) × (a·N)` block matrix.
    pub fn from_block_matrix(block: usize, big: &CMatrix) -> Result<Self> {
        if block == 0 || !big.nrows().is_multiple_of(block) || !big.ncols().is_multiple_of(block) {
            return Err(Error::Signal(format!(
                "{}x{} matrix is not a grid of {block}x{block} blocks",
                big.nrows(),
                big.ncols()
            )));
        }
        let (rows, cols) = (big.nrows() / block, big.ncols() / block);
        let blocks = (0..rows)
            .flat_map(|m| (0..cols).map(move |n| (m, n)))
            .map(|(m, n)| {
                big.view((m * block, n * block), (block, block))
                    .into_owned()
            })
            .collect();
        Self::new(block, rows, cols, blocks)
    }

    pub fn to_block_matrix(&self) -> CMatrix {
        let a = self.block;
        let mut big = CMatrix::zeros(a * self.rows, a * self.cols);
        for m in 0..self.rows {
            for n in 0..self.cols {
                big.view_mut((m * a, n * a), (a, a))
                    .copy_from(self.block(m, n));
            }
        }
        big
    }

    pub fn with_algebra(mut self, algebra: Option<AlgebraTag>) -> Self {
        self.algebra = algebra;
        self
    }

    /// Declares the storage field; `Real` is refused for complex data.
    pub fn with_field(mut self, field: GroundField) -> Result<Self> {
        if field == GroundField::Real && self.field == GroundField::Complex {
            return Err(Error::Signal(
                "real signal has non-zero imaginary parts".into(),
            ));
        }
        self.field = field;
        Ok(self)
    }

    pub fn block_size(&self) -> usize {
        self.block
    }

    pub fn m_len(&self) -> usize {
        self.rows
    }

    pub fn n_len(&self) -> usize {
        self.cols
    }

    pub fn block(&self, m: usize, n: usize) -> &CMatrix {
        &self.blocks[m * self.cols + n]
    }

    pub fn blocks(&self) -> &[CMatrix] {
        &self.blocks
    }

    pub fn field(&self) -> GroundField {
        self.field
    }

    pub fn algebra(&self) -> Option<AlgebraTag> {
        self.algebra
    }

    /// `‖·‖_max` over every block entry.
    pub fn max_abs(&self) -> f64 {
        self.blocks
            .iter()
            .map(crate::linalg::max_abs)
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Signal2D) -> f64 {
        assert_eq!(
            (self.block, self.rows, self.cols),
            (other.block, other.rows, other.cols),
            "2D signal shape mismatch"
        );
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| crate::linalg::max_abs_diff(a, b))
            .fold(0.0, f64::max)
    }
}

/// `exp(−J·2πr/M)` for `r = 0..M`. The angle is formed from the reduced
/// index, so every entry is accurate to a few ulps.
fn kernel_table(j: &MatrixRoot, m_len: usize) -> Vec<CMatrix> {
    (0..m_len)
        .map(|r| {
            let theta = 2.0 * PI * r as f64 / m_len as f64;
            phasor(j, theta.cos(), -theta.sin())
        })
        .collect()
}

#[inline]
fn reduced(m: usize, u: usize, len: usize) -> usize {
    ((m as u128 * u as u128) % len as u128) as usize
}

fn check_root(j: &MatrixRoot, n: usize) -> Result<()> {
    if j.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: j.n(),
        });
    }
    Ok(())
}

/// One-sided 1D transform under a scale convention.
///
/// The inverse is literally the forward kernel applied with `−J` and the
/// inverse factor `T`.
pub fn dft1d(
    f: &Signal1D,
    j: &MatrixRoot,
    direction: Direction,
    scale: ScaleConvention,
) -> Result<Signal1D> {
    let factor = scale.factor(direction, f.m_len());
    match direction {
        Direction::Forward => dft1d_scaled(f, j, factor),
        Direction::Inverse => dft1d_scaled(f, &j.negated(), factor),
    }
}

/// `F[:,u] = factor · Σ_m exp(−J·2πmu/M) f[:,m]`.
///
/// A real signal meeting a complex root is promoted to complex storage.
pub fn dft1d_scaled(f: &Signal1D, j: &MatrixRoot, factor: f64) -> Result<Signal1D> {
    check_root(j, f.n())?;
    let (n, m_len) = (f.n(), f.m_len());
    let table = kernel_table(j, m_len);
    let compensated = m_len >= COMPENSATED_MIN_TERMS;
    let mut out = CMatrix::zeros(n, m_len);
    for u in 0..m_len {
        let mut acc = Accumulator::new(n, 1, compensated);
        for m in 0..m_len {
            acc.add(&(&table[reduced(m, u, m_len)] * f.data.columns(m, 1)));
        }
        out.set_column(u, &(acc.finish() * re(factor)).column(0));
    }
    Ok(Signal1D {
        data: out,
        field: f.field.join(j.field()),
        algebra: f.algebra,
    })
}

/// Unscaled forward transform by the plain double loop, with a fresh
/// general matrix exponential of `−J·2πmu/M` for every term.
pub fn reference_dft1d(f: &Signal1D, j: &MatrixRoot) -> Result<Signal1D> {
    check_root(j, f.n())?;
    let (n, m_len) = (f.n(), f.m_len());
    let minus_j = -j.entries();
    let compensated = m_len >= COMPENSATED_MIN_TERMS;
    let mut acc: Vec<Accumulator> = (0..m_len)
        .map(|_| Accumulator::new(n, 1, compensated))
        .collect();
    for m in 0..m_len {
        for (u, acc_u) in acc.iter_mut().enumerate() {
            let theta = 2.0 * PI * m as f64 * u as f64 / m_len as f64;
            let e = expm(&(&minus_j * re(theta)));
            acc_u.add(&(e * f.data.columns(m, 1)));
        }
    }
    let mut out = CMatrix::zeros(n, m_len);
    for (u, a) in acc.into_iter().enumerate() {
        out.set_column(u, &a.finish().column(0));
    }
    Ok(Signal1D {
        data: out,
        field: f.field.join(j.field()),
        algebra: f.algebra,
    })
}

/// Textbook complex DFT by direct summation.
pub fn classic_complex_dft(
    x: &[Complex64],
    direction: Direction,
    scale: ScaleConvention,
) -> Vec<Complex64> {
    let m_len = x.len();
    assert!(m_len >= 1, "classic_complex_dft needs at least one sample");
    let factor = scale.factor(direction, m_len);
    let sign = match direction {
        Direction::Forward => -1.0,
        Direction::Inverse => 1.0,
    };
    (0..m_len)
        .map(|u| {
            let sum: Complex64 = x
                .iter()
                .enumerate()
                .map(|(m, &xm)| {
                    let theta = 2.0 * PI * reduced(m, u, m_len) as f64 / m_len as f64;
                    xm * Complex64::from_polar(1.0, sign * theta)
                })
                .sum();
            sum * factor
        })
        .collect()
}

/// Two-sided 2D transform with left root `J` and right root `K`.
///
/// `J` and `K` need not commute or be orthogonal.
pub fn dft2d_two_sided(
    f: &Signal2D,
    j: &MatrixRoot,
    k: &MatrixRoot,
    direction: Direction,
    scale: ScaleConvention,
) -> Result<Signal2D> {
    let factor = scale.factor(direction, f.rows * f.cols);
    match direction {
        Direction::Forward => dft2d_scaled(f, j, k, factor),
        Direction::Inverse => dft2d_scaled(f, &j.negated(), &k.negated(), factor),
    }
}

/// `F[u,v] = factor · Σ_m Σ_n exp(−J·2πmu/M) f[m,n] exp(−K·2πnv/N)`,
/// evaluated as a left pass over `m` followed by a right pass over `n`.
pub fn dft2d_scaled(f: &Signal2D, j: &MatrixRoot, k: &MatrixRoot, factor: f64) -> Result<Signal2D> {
    check_root(j, f.block)?;
    check_root(k, f.block)?;
    let (a, rows, cols) = (f.block, f.rows, f.cols);
    let left = kernel_table(j, rows);
    let right = kernel_table(k, cols);

    // G[u][n] = Σ_m exp(−J·2πmu/M) f[m,n]
    let mut partial = Vec::with_capacity(rows * cols);
    for u in 0..rows {
        for n in 0..cols {
            let mut acc = Accumulator::new(a, a, rows >= COMPENSATED_MIN_TERMS);
            for m in 0..rows {
                acc.add(&(&left[reduced(m, u, rows)] * f.block(m, n)));
            }
            partial.push(acc.finish());
        }
    }

    // F[u][v] = Σ_n G[u][n] exp(−K·2πnv/N)
    let mut blocks = Vec::with_capacity(rows * cols);
    for u in 0..rows {
        for v in 0..cols {
            let mut acc = Accumulator::new(a, a, cols >= COMPENSATED_MIN_TERMS);
            for n in 0..cols {
                acc.add(&(&partial[u * cols + n] * &right[reduced(n, v, cols)]));
            }
            blocks.push(acc.finish() * re(factor));
        }
    }
    Ok(Signal2D {
        block: a,
        rows,
        cols,
        blocks,
        field: f.field.join(j.field()).join(k.field()),
        algebra: f.algebra,
    })
}

/// Unscaled 2D forward transform by the plain quadruple loop, with fresh
/// general matrix exponentials on both sides of every term.
pub fn reference_dft2d(f: &Signal2D, j: &MatrixRoot, k: &MatrixRoot) -> Result<Signal2D> {
    check_root(j, f.block)?;
    check_root(k, f.block)?;
    let (a, rows, cols) = (f.block, f.rows, f.cols);
    let (minus_j, minus_k) = (-j.entries(), -k.entries());
    let mut blocks = Vec::with_capacity(rows * cols);
    for u in 0..rows {
        for v in 0..cols {
            let mut acc = Accumulator::new(a, a, rows * cols >= COMPENSATED_MIN_TERMS);
            for m in 0..rows {
                for n in 0..cols {
                    let tj = 2.0 * PI * m as f64 * u as f64 / rows as f64;
                    let tk = 2.0 * PI * n as f64 * v as f64 / cols as f64;
                    let ej = expm(&(&minus_j * re(tj)));
                    let ek = expm(&(&minus_k * re(tk)));
                    acc.add(&(ej * f.block(m, n) * ek));
                }
            }
            blocks.push(acc.finish());
        }
    }
    Ok(Signal2D {
        block: a,
        rows,
        cols,
        blocks,
        field: f.field.join(j.field()).join(k.field()),
        algebra: f.algebra,
    })
}

/// Points `exp(J·2πm·u0/M)·coeff` for `m = 0..M`: the basis function a
/// single spectral line at `u0` produces under a 2×2 root.
pub fn phasor_path(
    j: &MatrixRoot,
    u0: i64,
    m_len: usize,
    coeff: [f64; 2],
) -> Result<Vec<[f64; 2]>> {
    if j.n() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: j.n(),
        });
    }
    if j.field() != GroundField::Real {
        return Err(Error::Signal("phasor path needs a real 2x2 root".into()));
    }
    if m_len < 3 {
        return Err(Error::Signal(format!(
            "phasor path needs at least 3 points, got {m_len}"
        )));
    }
    let v = CVector::from_column_slice(&[re(coeff[0]), re(coeff[1])]);
    Ok((0..m_len as i64)
        .map(|m| {
            let r = (m * u0).rem_euclid(m_len as i64);
            let theta = 2.0 * PI * r as f64 / m_len as f64;
            let p = euler_exp(j, theta).into_entries() * &v;
            [p[0].re, p[1].re]
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{max_abs, max_abs_diff, real_matrix};
    use crate::root::{complex_root, quaternion_mu, root2x2_bc};

    fn delta(n: usize, m_len: usize) -> Signal1D {
        let mut d = CMatrix::zeros(n, m_len);
        d[(0, 0)] = re(1.0);
        Signal1D::new(d, GroundField::Real).unwrap()
    }

    #[test]
    fn scale_factors_multiply_to_one_over_count() {
        for conv in ScaleConvention::ALL {
            for count in [1, 2, 7, 64] {
                let (s, t) = conv.factors(count);
                assert!((s * t * count as f64 - 1.0).abs() < 1e-15);
            }
        }
        assert_eq!(ScaleConvention::Unitary.factors(4), (0.5, 0.5));
    }

    #[test]
    fn delta_gives_flat_spectrum() {
        for j in [complex_root(), quaternion_mu()] {
            let f = delta(j.n(), 5);
            let big_f = dft1d(&f, &j, Direction::Forward, ScaleConvention::InverseScaled).unwrap();
            for u in 0..5 {
                assert_eq!(big_f.data().column(u), f.data().column(0));
            }
        }
    }

    #[test]
    fn constant_signal_concentrates_at_dc() {
        #[rustfmt::skip]
        let data = real_matrix(2, 4, &[
            1.0, 1.0, 1.0, 1.0,
            0.0, 0.0, 0.0, 0.0,
        ]);
        let f = Signal1D::new(data, GroundField::Real).unwrap();
        let big_f = dft1d(
            &f,
            &complex_root(),
            Direction::Forward,
            ScaleConvention::InverseScaled,
        )
        .unwrap();
        let mut expected = CMatrix::zeros(2, 4);
        expected[(0, 0)] = re(4.0);
        assert!(max_abs_diff(big_f.data(), &expected) < 1e-15);
    }

    #[test]
    fn single_sample_is_identity() {
        let f = Signal1D::new(real_matrix(4, 1, &[1.0, 2.0, 3.0, 4.0]), GroundField::Real).unwrap();
        let j = quaternion_mu();
        assert_eq!(reference_dft1d(&f, &j).unwrap().data(), f.data());
        assert_eq!(
            dft1d(&f, &j, Direction::Forward, ScaleConvention::Unitary)
                .unwrap()
                .data(),
            f.data()
        );
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let f = delta(4, 3);
        assert!(matches!(
            dft1d(
                &f,
                &complex_root(),
                Direction::Forward,
                ScaleConvention::Unitary
            ),
            Err(Error::DimensionMismatch {
                expected: 4,
                got: 2
            })
        ));
    }

    #[test]
    fn real_signal_promoted_by_complex_root() {
        let q = crate::root::biquaternion_root(&crate::root::biquaternion_example()).unwrap();
        let f = Signal1D::new(
            real_matrix(4, 2, &[1.0, 0.0, 0.5, 0.0, 0.0, 2.0, 0.0, 1.0]),
            GroundField::Real,
        )
        .unwrap();
        let big_f = dft1d(&f, &q, Direction::Forward, ScaleConvention::Unitary).unwrap();
        assert_eq!(big_f.field(), GroundField::Complex);
    }

    #[test]
    fn classic_examples() {
        let ones = vec![re(1.0); 4];
        let f = classic_complex_dft(&ones, Direction::Forward, ScaleConvention::InverseScaled);
        assert!((f[0] - re(4.0)).norm() < 1e-15);
        assert!(f[1..].iter().all(|z| z.norm() < 1e-15));

        let d = vec![re(1.0), re(0.0), re(0.0), re(0.0)];
        let f = classic_complex_dft(&d, Direction::Forward, ScaleConvention::InverseScaled);
        assert!(f.iter().all(|z| (z - re(1.0)).norm() < 1e-15));
    }

    #[test]
    fn separable_image_has_no_horizontal_frequencies() {
        let j = quaternion_mu();
        let k = crate::root::quaternion_root(0.0, 1.0, 0.0).unwrap();
        let col: Vec<HValue> = (0..3)
            .map(|m| {
                HValue::from_real(
                    AlgebraTag::Quaternion,
                    &[m as f64, 1.0, -0.5, 2.0 - m as f64],
                )
                .unwrap()
            })
            .collect();
        let grid: Vec<Vec<HValue>> = col.iter().map(|v| vec![v.clone(); 4]).collect();
        let f = Signal2D::from_values(&grid).unwrap();
        for big_f in [
            reference_dft2d(&f, &j, &k).unwrap(),
            dft2d_scaled(&f, &j, &k, 1.0).unwrap(),
        ] {
            for u in 0..3 {
                for v in 1..4 {
                    assert!(max_abs(big_f.block(u, v)) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn delta_image_gives_identity_blocks() {
        let j = quaternion_mu();
        let mut blocks = vec![CMatrix::zeros(4, 4); 6];
        blocks[0] = CMatrix::identity(4, 4);
        let f = Signal2D::new(4, 2, 3, blocks).unwrap();
        let big_f = dft2d_two_sided(
            &f,
            &j,
            &j,
            Direction::Forward,
            ScaleConvention::InverseScaled,
        )
        .unwrap();
        for b in big_f.blocks() {
            assert!(max_abs_diff(b, &CMatrix::identity(4, 4)) < 1e-15);
        }
    }

    #[test]
    fn one_by_one_grid_is_unchanged() {
        let v = HValue::from_real(AlgebraTag::Cl20, &[1.0, -2.0, 0.5, 3.0]).unwrap();
        let f = Signal2D::from_values(&[vec![v]]).unwrap();
        let j = crate::root::cl20_root(1.0, 1.0, 3f64.sqrt()).unwrap();
        assert_eq!(reference_dft2d(&f, &j, &j).unwrap(), f);
    }

    #[test]
    fn block_matrix_round_trip() {
        let big = CMatrix::from_fn(4, 6, |r, c| re((r * 6 + c) as f64));
        let s = Signal2D::from_block_matrix(2, &big).unwrap();
        assert_eq!((s.m_len(), s.n_len()), (2, 3));
        assert_eq!(s.block(1, 2), &real_matrix(2, 2, &[16.0, 17.0, 22.0, 23.0]));
        assert_eq!(s.to_block_matrix(), big);
        assert!(Signal2D::from_block_matrix(4, &big).is_err());
    }

    #[test]
    fn phasor_path_unit_circle() {
        let pts = phasor_path(&complex_root(), 1, 4, [1.0, 0.0]).unwrap();
        let expected = [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]];
        for (p, e) in pts.iter().zip(expected) {
            assert!((p[0] - e[0]).abs() < 1e-15 && (p[1] - e[1]).abs() < 1e-15);
        }
    }

    #[test]
    fn phasor_path_zero_coeff_and_errors() {
        let j = root2x2_bc(1.0, -2.0, true).unwrap();
        let pts = phasor_path(&j, 3, 16, [0.0, 0.0]).unwrap();
        assert!(pts.iter().all(|p| *p == [0.0, 0.0]));
        assert!(phasor_path(&quaternion_mu(), 1, 8, [1.0, 0.0]).is_err());
        assert!(phasor_path(&j, 1, 2, [1.0, 0.0]).is_err());
    }

    #[test]
    fn negative_frequency_runs_backwards() {
        let fwd = phasor_path(&complex_root(), 1, 8, [1.0, 0.0]).unwrap();
        let back = phasor_path(&complex_root(), -1, 8, [1.0, 0.0]).unwrap();
        for m in 1..8 {
            assert!((fwd[m][0] - back[8 - m][0]).abs() < 1e-15);
            assert!((fwd[m][1] - back[8 - m][1]).abs() < 1e-15);
        }
    }
}
