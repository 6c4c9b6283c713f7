//! Complex and hypercomplex discrete Fourier transforms written entirely in
//! terms of matrix roots of −1.
//!
//! A DFT over complex numbers, quaternions, biquaternions or the Clifford
//! algebras Cl(1,1) and Cl(2,0) becomes an ordinary DFT in which the
//! imaginary unit is replaced by a square matrix `J` with `J² = −I`, and
//! `e^{Jθ} = I cos θ + J sin θ`. The algebra only enters through the layout
//! of `J` and of the samples.
//!
//! - [`algebra`]: multiplication tables, [`HValue`] arithmetic and the
//!   matrix representations.
//! - [`root`]: validated roots of −1 and their constructors.
//! - [`matexp`]: the closed-form exponential plus power-series oracles.
//! - [`dft`]: 1D one-sided and 2D two-sided transforms with reference
//!   implementations.
//! - [`io`]: signal and root file formats.
//! - [`conic`]: conic fitting for phasor paths.

// Negated float comparisons are used on purpose: they reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod conic;
mod dd;
pub mod dft;
pub mod error;
pub mod io;
pub mod linalg;
pub mod matexp;
pub mod root;

pub use algebra::{
    from_matrix, make_algebra, multiply, to_matrix, AlgebraSpec, AlgebraTag, GroundField, HValue,
};
pub use dft::{
    classic_complex_dft, dft1d, dft2d_two_sided, phasor_path, reference_dft1d, reference_dft2d,
    Direction, ScaleConvention, Signal1D, Signal2D,
};
pub use error::{Error, Result, RootRejection};
pub use linalg::CMatrix;
pub use matexp::{euler_exp, series_exp, PhasorMatrix};
pub use root::{
    biquaternion_root, cl11_root, cl20_root, quaternion_root, root2x2_ab, root2x2_bc, transmute,
    transmute_matrix, validate_root, MatrixRoot, Provenance,
};

pub use num_complex::Complex64;
