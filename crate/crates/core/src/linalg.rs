//! Small dense-matrix helpers shared by the algebra, exponential and
//! transform modules.
//!
//! Every matrix in the crate is stored as `DMatrix<Complex64>`; whether a
//! value is genuinely real is tracked separately through [`GroundField`]
//! tags.
//!
//! [`GroundField`]: crate::algebra::GroundField

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[inline]
pub fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Builds a complex matrix from real row-major entries.
pub fn real_matrix(rows: usize, cols: usize, entries: &[f64]) -> CMatrix {
    assert_eq!(entries.len(), rows * cols);
    CMatrix::from_row_iterator(rows, cols, entries.iter().map(|&x| re(x)))
}

/// `max` that propagates NaN instead of discarding it.
#[inline]
pub fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

/// Largest entry modulus, `‖A‖_max`. NaN if any entry is NaN.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, nan_max)
}

/// `‖A − B‖_max`. Panics on a shape mismatch.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, nan_max)
}

/// True when every imaginary part is exactly zero.
pub fn is_real(m: &CMatrix) -> bool {
    m.iter().all(|z| z.im == 0.0)
}

/// Frobenius norm.
pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Neumaier-compensated accumulator over a fixed-shape complex matrix.
///
/// Real and imaginary parts carry independent correction terms.
#[derive(Debug, Clone)]
pub struct CompensatedSum {
    sum: CMatrix,
    carry: CMatrix,
}

impl CompensatedSum {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            sum: CMatrix::zeros(rows, cols),
            carry: CMatrix::zeros(rows, cols),
        }
    }

    pub fn add(&mut self, term: &CMatrix) {
        for ((s, c), t) in self
            .sum
            .iter_mut()
            .zip(self.carry.iter_mut())
            .zip(term.iter())
        {
            let (sr, cr) = neumaier(s.re, c.re, t.re);
            let (si, ci) = neumaier(s.im, c.im, t.im);
            *s = Complex64::new(sr, si);
            *c = Complex64::new(cr, ci);
        }
    }

    pub fn finish(self) -> CMatrix {
        self.sum + self.carry
    }
}

#[inline]
fn neumaier(sum: f64, carry: f64, x: f64) -> (f64, f64) {
    let t = sum + x;
    let c = if sum.abs() >= x.abs() {
        (sum - t) + x
    } else {
        (x - t) + sum
    };
    (t, carry + c)
}

/// Plain or compensated accumulation, chosen once per summation.
#[derive(Debug, Clone)]
pub enum Accumulator {
    Plain(CMatrix),
    Compensated(CompensatedSum),
}

impl Accumulator {
    pub fn new(rows: usize, cols: usize, compensated: bool) -> Self {
        if compensated {
            Self::Compensated(CompensatedSum::zeros(rows, cols))
        } else {
            Self::Plain(CMatrix::zeros(rows, cols))
        }
    }

    pub fn add(&mut self, term: &CMatrix) {
        match self {
            Self::Plain(sum) => *sum += term,
            Self::Compensated(acc) => acc.add(term),
        }
    }

    pub fn finish(self) -> CMatrix {
        match self {
            Self::Plain(sum) => sum,
            Self::Compensated(acc) => acc.finish(),
        }
    }
}
