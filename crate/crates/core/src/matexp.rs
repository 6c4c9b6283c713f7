//! `e^{Jθ}` for matrix roots of −1.
//!
//! Because `J² = −I` the exponential series splits into the cosine and sine
//! series, so `e^{Jθ} = I cos θ + J sin θ`. [`euler_exp`] evaluates that
//! closed form directly. [`series_exp`] and [`expm`] are general power-series
//! exponentials kept only as independent oracles; they are never used on a
//! production transform path.

use num_complex::Complex64;

use crate::dd::DdMatrix;
use crate::error::{Error, Result};
use crate::linalg::{re, CMatrix};
use crate::root::MatrixRoot;

/// Term cap for [`series_exp`].
pub const MAX_SERIES_TERMS: usize = 200;

/// `e^{Jθ}` together with the root and angle it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasorMatrix<'a> {
    entries: CMatrix,
    theta: f64,
    root: &'a MatrixRoot,
}

impl<'a> PhasorMatrix<'a> {
    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn into_entries(self) -> CMatrix {
        self.entries
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn root(&self) -> &'a MatrixRoot {
        self.root
    }

    pub fn n(&self) -> usize {
        self.entries.nrows()
    }
}

/// `I cos θ + J sin θ`.
pub fn euler_exp(j: &MatrixRoot, theta: f64) -> PhasorMatrix<'_> {
    PhasorMatrix {
        entries: phasor(j, theta.cos(), theta.sin()),
        theta,
        root: j,
    }
}

/// `I·cos + J·sin` from precomputed trigonometric values.
pub(crate) fn phasor(j: &MatrixRoot, cos: f64, sin: f64) -> CMatrix {
    let n = j.n();
    let mut m = j.entries() * re(sin);
    for d in 0..n {
        m[(d, d)] += cos;
    }
    m
}

/// Taylor series `Σ Aᵏ/k!`, summed in ascending `k` until a term's max-norm
/// drops below `tol`.
///
/// Terms and partial sums are carried in double-double precision, so large
/// intermediate terms (e.g. `‖A‖ ≈ 4π`) do not leave rounding residue in
/// the result. Fails after [`MAX_SERIES_TERMS`] terms.
pub fn series_exp(a: &CMatrix, tol: f64) -> Result<CMatrix> {
    assert!(a.is_square(), "series_exp needs a square matrix");
    assert!(tol > 0.0, "series_exp needs a positive tolerance");
    Ok(series_dd(&DdMatrix::from_cmatrix(a), tol)?.to_cmatrix())
}

fn series_dd(a: &DdMatrix, tol: f64) -> Result<DdMatrix> {
    let n = a.n();
    let mut sum = DdMatrix::identity(n);
    let mut term = DdMatrix::identity(n);
    for k in 1..=MAX_SERIES_TERMS {
        term = term.matmul(a).div_int(k as u32);
        sum.add_assign(&term);
        if term.max_abs_approx() < tol {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        terms: MAX_SERIES_TERMS,
    })
}

/// General matrix exponential by scaling and squaring around
/// [`series_exp`], all in double-double precision.
///
/// Handles arguments of any size, such as `−J·2πmu/M` with unreduced `mu`.
/// Oracle use only.
pub fn expm(a: &CMatrix) -> CMatrix {
    assert!(a.is_square(), "expm needs a square matrix");
    let norm1 = (0..a.ncols())
        .map(|c| a.column(c).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let squarings = if norm1 > 0.5 {
        (norm1 / 0.5).log2().ceil() as i32
    } else {
        0
    };
    // Power-of-two scaling is exact.
    let scaled = a * Complex64::new(2f64.powi(-squarings), 0.0);
    let mut e = series_dd(&DdMatrix::from_cmatrix(&scaled), 1e-34)
        .expect("series converges for norm <= 1/2");
    for _ in 0..squarings {
        e = e.matmul(&e);
    }
    e.to_cmatrix()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{max_abs, max_abs_diff, real_matrix};
    use crate::root::{cl20_root, complex_root, quaternion_root};
    use std::f64::consts::PI;

    #[test]
    fn zero_angle_is_identity() {
        let j = complex_root();
        assert_eq!(euler_exp(&j, 0.0).entries(), &CMatrix::identity(2, 2));
    }

    #[test]
    fn quarter_turn_is_j() {
        let j = complex_root();
        let e = euler_exp(&j, PI / 2.0);
        assert!(max_abs_diff(e.entries(), j.entries()) < 1e-16);
        assert_eq!(e.theta(), PI / 2.0);
    }

    #[test]
    fn quaternion_phasor_pattern() {
        let (x, y, z) = (0.6, 0.0, 0.8);
        let j = quaternion_root(x, y, z).unwrap();
        let t = 0.7f64;
        let (c, s) = (t.cos(), t.sin());
        #[rustfmt::skip]
        let expected = real_matrix(4, 4, &[
            c,      -x * s, -y * s, -z * s,
            x * s,   c,     -z * s,  y * s,
            y * s,   z * s,  c,     -x * s,
            z * s,  -y * s,  x * s,  c,
        ]);
        assert!(max_abs_diff(euler_exp(&j, t).entries(), &expected) < 1e-15);
    }

    #[test]
    fn series_of_zero_is_identity() {
        let z = CMatrix::zeros(3, 3);
        assert_eq!(series_exp(&z, 1e-15).unwrap(), CMatrix::identity(3, 3));
    }

    #[test]
    fn series_matches_closed_form() {
        let j = complex_root();
        let s = series_exp(&(j.entries() * re(1.0)), 1e-15).unwrap();
        assert!(max_abs_diff(&s, euler_exp(&j, 1.0).entries()) <= 1e-12);

        let r3 = 3f64.sqrt();
        let j = cl20_root(1.0, 1.0, r3).unwrap();
        for &t in &[-PI, -2.1, 0.4, 3.0] {
            let s = series_exp(&(j.entries() * re(t)), 1e-15).unwrap();
            let d = max_abs_diff(&s, euler_exp(&j, t).entries());
            assert!(d <= 1e-12, "theta {t}: {d:e}");
        }
    }

    #[test]
    fn series_gives_up_on_huge_arguments() {
        let a = real_matrix(2, 2, &[0.0, -1.0, 1.0, 0.0]) * re(400.0);
        assert!(matches!(
            series_exp(&a, 1e-15),
            Err(Error::NonConvergence {
                terms: MAX_SERIES_TERMS
            })
        ));
    }

    #[test]
    fn expm_handles_large_angles() {
        let j = quaternion_root(0.6, 0.0, 0.8).unwrap();
        let theta = 2.0 * PI * 255.0 * 255.0 / 256.0;
        let e = expm(&(j.entries() * re(theta)));
        let d = max_abs_diff(&e, euler_exp(&j, theta).entries());
        assert!(d < 1e-12, "{d:e}");
        assert!(max_abs(&e) <= 1.0 + 1e-12);
    }
}
