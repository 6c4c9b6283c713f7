//! Matrix roots of −1: validation, the per-algebra constructors, the
//! algebra-free 2×2 families, and quaternion transmutation.

use num_complex::Complex64;

use crate::algebra::{multiply, to_matrix, AlgebraTag, GroundField, HValue};
use crate::error::{Error, Result, RootRejection};
use crate::linalg::{is_real, max_abs, real_matrix, CMatrix};

/// Default tolerance for matrices supplied from outside the crate.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Tolerance on the parameter constraints of the constructors.
pub const CONSTRAINT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    AlgebraEmbedding(AlgebraTag),
    Parametric2x2,
    UserSupplied,
}

/// A square matrix `J` with `J² = −I` to within the tolerance it was
/// validated at.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRoot {
    entries: CMatrix,
    field: GroundField,
    provenance: Provenance,
}

impl MatrixRoot {
    pub fn n(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn field(&self) -> GroundField {
        self.field
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// `J⁻¹ = −J`; the negation is again a root with the same provenance.
    pub fn negated(&self) -> MatrixRoot {
        MatrixRoot {
            entries: -&self.entries,
            field: self.field,
            provenance: self.provenance,
        }
    }

    /// `‖J·J + I‖_max`.
    pub fn residual(&self) -> f64 {
        square_residual(&self.entries)
    }

    /// Relabels the provenance, e.g. after loading a file.
    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }
}

fn square_residual(m: &CMatrix) -> f64 {
    let n = m.nrows();
    max_abs(&(m * m + CMatrix::identity(n, n)))
}

/// Accepts `m` iff `‖m² + I‖_max ≤ tol`.
///
/// Real matrices of odd order are refused before any arithmetic: their
/// determinant would have to satisfy `det(J)² = −1`.
pub fn validate_root(m: &CMatrix, tol: f64) -> std::result::Result<MatrixRoot, RootRejection> {
    validate_with_provenance(m, tol, Provenance::UserSupplied)
}

fn validate_with_provenance(
    m: &CMatrix,
    tol: f64,
    provenance: Provenance,
) -> std::result::Result<MatrixRoot, RootRejection> {
    let (rows, cols) = m.shape();
    if rows != cols {
        return Err(RootRejection::NotSquare { rows, cols });
    }
    if rows == 0 {
        return Err(RootRejection::Empty);
    }
    let real = is_real(m);
    if real && rows % 2 == 1 {
        return Err(RootRejection::OddDimensionReal { n: rows });
    }
    let residual = square_residual(m);
    // NaN residuals must fail too.
    if !(residual <= tol) {
        return Err(RootRejection::Residual { residual, tol });
    }
    Ok(MatrixRoot {
        entries: m.clone(),
        field: if real {
            GroundField::Real
        } else {
            GroundField::Complex
        },
        provenance,
    })
}

/// Validation for constructor outputs. Rounding in `J·J` grows with the
/// entry magnitudes, so the tolerance is scaled by `max(1, ‖J‖²_max)`.
fn constructed(m: CMatrix, provenance: Provenance) -> Result<MatrixRoot> {
    let scale = max_abs(&m).powi(2).max(1.0);
    Ok(validate_with_provenance(
        &m,
        DEFAULT_TOL * scale,
        provenance,
    )?)
}

/// Embeds an algebra element and validates it as a root.
pub fn algebra_root(value: &HValue) -> Result<MatrixRoot> {
    constructed(to_matrix(value), Provenance::AlgebraEmbedding(value.tag()))
}

/// The standard complex root `j`, `[[0, −1], [1, 0]]`.
pub fn complex_root() -> MatrixRoot {
    algebra_root(&HValue::basis(AlgebraTag::Complex, 1)).expect("j is a root of -1")
}

/// Unit pure quaternion `x i + y j + z k`, requiring `x² + y² + z² = 1`.
pub fn quaternion_root(x: f64, y: f64, z: f64) -> Result<MatrixRoot> {
    let norm2 = x * x + y * y + z * z;
    if !((norm2 - 1.0).abs() <= CONSTRAINT_TOL) {
        return Err(Error::Constraint(format!(
            "quaternion root needs x^2 + y^2 + z^2 = 1, got {norm2}"
        )));
    }
    algebra_root(&HValue::from_real(AlgebraTag::Quaternion, &[0.0, x, y, z])?)
}

/// `μ = (i + j + k)/√3`.
pub fn quaternion_mu() -> MatrixRoot {
    let s = 1.0 / 3f64.sqrt();
    quaternion_root(s, s, s).expect("mu is a unit pure quaternion")
}

/// Any biquaternion squaring to −1, checked with the multiplication table.
pub fn biquaternion_root(q: &HValue) -> Result<MatrixRoot> {
    if q.tag() != AlgebraTag::Biquaternion {
        return Err(Error::AlgebraMismatch {
            left: q.tag(),
            right: AlgebraTag::Biquaternion,
        });
    }
    let sq = multiply(q, q)?;
    let minus_one = HValue::one(AlgebraTag::Biquaternion).scale(-1.0);
    let err = sq.max_abs_diff(&minus_one);
    if !(err <= DEFAULT_TOL) {
        return Err(Error::Constraint(format!(
            "biquaternion {q} squares to {sq}, not -1 (error {err:e})"
        )));
    }
    algebra_root(q)
}

/// `i + j + k + I(j − k)`.
pub fn biquaternion_example() -> HValue {
    let c = Complex64::new;
    HValue::new(
        AlgebraTag::Biquaternion,
        vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(1.0, -1.0)],
    )
    .expect("four complex coefficients")
}

/// `b1 e1 + b2 e2 + β e12` in Cl(1,1), requiring `b1² − b2² + β² = −1`.
pub fn cl11_root(b1: f64, b2: f64, beta: f64) -> Result<MatrixRoot> {
    let lhs = b1 * b1 - b2 * b2 + beta * beta;
    if !((lhs + 1.0).abs() <= CONSTRAINT_TOL) {
        return Err(Error::Constraint(format!(
            "Cl(1,1) root needs b1^2 - b2^2 + beta^2 = -1, got {lhs}"
        )));
    }
    algebra_root(&HValue::from_real(AlgebraTag::Cl11, &[0.0, b1, b2, beta])?)
}

/// `b1 e1 + b2 e2 + β e12` in Cl(2,0), requiring `b1² + b2² − β² = −1`.
pub fn cl20_root(b1: f64, b2: f64, beta: f64) -> Result<MatrixRoot> {
    let lhs = b1 * b1 + b2 * b2 - beta * beta;
    if !((lhs + 1.0).abs() <= CONSTRAINT_TOL) {
        return Err(Error::Constraint(format!(
            "Cl(2,0) root needs b1^2 + b2^2 - beta^2 = -1, got {lhs}"
        )));
    }
    algebra_root(&HValue::from_real(AlgebraTag::Cl20, &[0.0, b1, b2, beta])?)
}

/// `[[a, b], [−(1 + a²)/b, −a]]`, `b ≠ 0`.
pub fn root2x2_ab(a: f64, b: f64) -> Result<MatrixRoot> {
    if b == 0.0 || !a.is_finite() || !b.is_finite() {
        return Err(Error::Constraint(format!(
            "(a, b) family needs finite a and b != 0, got a = {a}, b = {b}"
        )));
    }
    let c = -(1.0 + a * a) / b;
    constructed(real_matrix(2, 2, &[a, b, c, -a]), Provenance::Parametric2x2)
}

/// `[[±κ, b], [c, ∓κ]]` with `κ = √(−1 − bc)`, `bc ≤ −1`. `positive`
/// selects the sign of `κ` in the top-left entry.
pub fn root2x2_bc(b: f64, c: f64, positive: bool) -> Result<MatrixRoot> {
    let bc = b * c;
    if !(bc <= -1.0) || !bc.is_finite() {
        return Err(Error::Constraint(format!(
            "(b, c) family needs bc <= -1, got bc = {bc}"
        )));
    }
    let kappa = (-1.0 - bc).sqrt();
    let k = if positive { kappa } else { -kappa };
    constructed(real_matrix(2, 2, &[k, b, c, -k]), Provenance::Parametric2x2)
}

/// Turns the left-multiplication matrix of a quaternion into its
/// right-multiplication matrix by negating the off-diagonal entries of the
/// lower-right 3×3 block. Works on any quaternion, root or not.
pub fn transmute_matrix(m: &CMatrix) -> Result<CMatrix> {
    if m.shape() != (4, 4) {
        return Err(Error::Transmute(format!(
            "matrix is {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let mut out = m.clone();
    for r in 1..4 {
        for c in 1..4 {
            if r != c {
                out[(r, c)] = -out[(r, c)];
            }
        }
    }
    Ok(out)
}

/// [`transmute_matrix`] on a root embedded from the quaternions.
pub fn transmute(j: &MatrixRoot) -> Result<MatrixRoot> {
    if j.provenance() != Provenance::AlgebraEmbedding(AlgebraTag::Quaternion) {
        return Err(Error::Transmute(format!(
            "root has provenance {:?}",
            j.provenance()
        )));
    }
    Ok(MatrixRoot {
        entries: transmute_matrix(&j.entries)?,
        field: j.field,
        provenance: j.provenance,
    })
}

/// The five printed examples plus one member of each 2×2 family.
pub fn builtin_roots() -> Vec<(&'static str, MatrixRoot)> {
    let r3 = 3f64.sqrt();
    vec![
        ("complex j", complex_root()),
        ("quaternion mu", quaternion_mu()),
        (
            "biquaternion i+j+k+I(j-k)",
            biquaternion_root(&biquaternion_example()).expect("printed example"),
        ),
        (
            "cl11 e1+sqrt3 e2+e12",
            cl11_root(1.0, r3, 1.0).expect("printed example"),
        ),
        (
            "cl20 e1+e2+sqrt3 e12",
            cl20_root(1.0, 1.0, r3).expect("printed example"),
        ),
        ("param-ab (2, 1)", root2x2_ab(2.0, 1.0).expect("b != 0")),
        (
            "param-bc (1, -2, +)",
            root2x2_bc(1.0, -2.0, true).expect("bc = -2"),
        ),
    ]
}
