//! Algebraic least-squares conic fitting for phasor paths.
//!
//! Fits `A x² + B xy + C y² + D x + E y + F = 0` by taking the right
//! singular vector of the design matrix with the smallest singular value.
//! Coefficients are normalised to unit Euclidean norm with `A + C ≥ 0`.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Minimum number of points for a unique conic.
pub const MIN_POINTS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conic {
    /// `[A, B, C, D, E, F]`.
    pub coeffs: [f64; 6],
}

impl Conic {
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let [a, b, c, d, e, f] = self.coeffs;
        a * x * x + b * x * y + c * y * y + d * x + e * y + f
    }

    /// `B² − 4AC`; negative for an ellipse.
    pub fn discriminant(&self) -> f64 {
        let [a, b, c, ..] = self.coeffs;
        b * b - 4.0 * a * c
    }

    pub fn is_ellipse(&self) -> bool {
        self.discriminant() < 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicFit {
    pub conic: Conic,
    /// `max_i |conic(p_i)|` with the normalised coefficients.
    pub residual: f64,
}

pub fn fit_conic(points: &[[f64; 2]]) -> Result<ConicFit> {
    if points.len() < MIN_POINTS {
        return Err(Error::Degenerate(format!(
            "need at least {MIN_POINTS} points to fit a conic, got {}",
            points.len()
        )));
    }
    let spread = points
        .iter()
        .map(|p| p[0].abs().max(p[1].abs()))
        .fold(0.0, f64::max);
    if !(spread > 0.0) || !spread.is_finite() {
        return Err(Error::Degenerate(
            "all points coincide with the origin".into(),
        ));
    }

    // SVD of a short matrix only yields min(rows, 6) right vectors.
    let rows = points.len().max(6);
    let mut design = DMatrix::<f64>::zeros(rows, 6);
    for (i, &[x, y]) in points.iter().enumerate() {
        let row = [x * x, x * y, y * y, x, y, 1.0];
        for (j, v) in row.into_iter().enumerate() {
            design[(i, j)] = v;
        }
    }
    let svd = design.svd(false, true);
    let v_t = svd
        .v_t
        .ok_or_else(|| Error::Degenerate("SVD did not converge".into()))?;
    let (k, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("six singular values");
    let mut coeffs = [0.0; 6];
    for (j, c) in coeffs.iter_mut().enumerate() {
        *c = v_t[(k, j)];
    }
    let norm = coeffs.iter().map(|c| c * c).sum::<f64>().sqrt();
    let sign = if coeffs[0] + coeffs[2] < 0.0 {
        -1.0
    } else {
        1.0
    };
    for c in &mut coeffs {
        *c *= sign / norm;
    }
    let conic = Conic { coeffs };
    let residual = points
        .iter()
        .map(|&[x, y]| conic.eval(x, y).abs())
        .fold(0.0, f64::max);
    Ok(ConicFit { conic, residual })
}
