//! Supported algebras, their multiplication tables, and the matrix
//! representations used by the transforms.
//!
//! Every supported algebra is a (complexified) Clifford algebra on at most
//! two generators, so each basis product is ± one basis element. Basis
//! elements are indexed by generator bitmask:
//!
//! | index | complex | quaternion / biquaternion | Cl(1,1), Cl(2,0) |
//! |-------|---------|---------------------------|------------------|
//! | 0     | 1       | 1                         | 1                |
//! | 1     | j       | i                         | e1               |
//! | 2     |         | j                         | e2               |
//! | 3     |         | k                         | e12              |
//!
//! The matrix of a value `a` is its left-regular representation: column `c`
//! holds the coefficients of `a·e_c`. For the five algebras here that is
//! exactly the layout with the coefficient vector in column 0 and the sign
//! pattern of the classical complex and Ward quaternion embeddings.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{max_abs_diff, re, CMatrix, ZERO};

/// Tolerance used by [`from_matrix`] when checking the re-embedding.
pub const IMAGE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroundField {
    Real,
    Complex,
}

impl GroundField {
    /// Smallest field containing both.
    pub fn join(self, other: GroundField) -> GroundField {
        if self == GroundField::Complex || other == GroundField::Complex {
            GroundField::Complex
        } else {
            GroundField::Real
        }
    }
}

impl fmt::Display for GroundField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroundField::Real => "real",
            GroundField::Complex => "complex",
        })
    }
}

impl FromStr for GroundField {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "real" => Ok(GroundField::Real),
            "complex" => Ok(GroundField::Complex),
            _ => Err(format!("unknown field '{s}' (expected real or complex)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraTag {
    Complex,
    Quaternion,
    Biquaternion,
    Cl11,
    Cl20,
}

impl AlgebraTag {
    pub const ALL: [AlgebraTag; 5] = [
        AlgebraTag::Complex,
        AlgebraTag::Quaternion,
        AlgebraTag::Biquaternion,
        AlgebraTag::Cl11,
        AlgebraTag::Cl20,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraTag::Complex => "complex",
            AlgebraTag::Quaternion => "quaternion",
            AlgebraTag::Biquaternion => "biquaternion",
            AlgebraTag::Cl11 => "cl11",
            AlgebraTag::Cl20 => "cl20",
        }
    }

    /// Squares of the generators, in bit order.
    fn generator_squares(self) -> &'static [f64] {
        match self {
            AlgebraTag::Complex => &[-1.0],
            AlgebraTag::Quaternion | AlgebraTag::Biquaternion => &[-1.0, -1.0],
            AlgebraTag::Cl11 => &[1.0, -1.0],
            AlgebraTag::Cl20 => &[1.0, 1.0],
        }
    }

    fn basis_names(self) -> &'static [&'static str] {
        match self {
            AlgebraTag::Complex => &["1", "j"],
            AlgebraTag::Quaternion | AlgebraTag::Biquaternion => &["1", "i", "j", "k"],
            AlgebraTag::Cl11 | AlgebraTag::Cl20 => &["1", "e1", "e2", "e12"],
        }
    }

    pub fn field(self) -> GroundField {
        match self {
            AlgebraTag::Biquaternion => GroundField::Complex,
            _ => GroundField::Real,
        }
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        AlgebraTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| {
                format!("unknown algebra '{s}' (expected complex, quaternion, biquaternion, cl11 or cl20)")
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// `e_a · e_b = sign · e_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisProduct {
    pub sign: Sign,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraSpec {
    pub tag: AlgebraTag,
    pub dim: usize,
    pub field: GroundField,
    /// `table[a][b]` is the product `e_a · e_b`.
    pub table: Vec<Vec<BasisProduct>>,
}

impl AlgebraSpec {
    pub fn basis_name(&self, k: usize) -> &'static str {
        self.tag.basis_names()[k]
    }

    pub fn product(&self, a: usize, b: usize) -> BasisProduct {
        self.table[a][b]
    }

    /// Checks `(e_a e_b) e_c = e_a (e_b e_c)` over every basis triple.
    pub fn is_associative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    let ab = self.table[a][b];
                    let left = self.table[ab.index][c];
                    let bc = self.table[b][c];
                    let right = self.table[a][bc.index];
                    left.index == right.index
                        && ab.sign.times(left.sign) == bc.sign.times(right.sign)
                })
            })
        })
    }

    pub fn has_identity_at_zero(&self) -> bool {
        (0..self.dim).all(|k| {
            let plus_k = BasisProduct {
                sign: Sign::Plus,
                index: k,
            };
            self.table[0][k] == plus_k && self.table[k][0] == plus_k
        })
    }
}

/// Product of two basis blades given as generator bitmasks.
fn blade_product(a: usize, b: usize, squares: &[f64]) -> BasisProduct {
    // Count transpositions needed to bring the generators into canonical order.
    let mut swaps = 0u32;
    let mut shifted = a >> 1;
    while shifted != 0 {
        swaps += (shifted & b).count_ones();
        shifted >>= 1;
    }
    let mut sign = if swaps.is_multiple_of(2) {
        Sign::Plus
    } else {
        Sign::Minus
    };
    let common = a & b;
    for (g, &sq) in squares.iter().enumerate() {
        if common & (1 << g) != 0 && sq < 0.0 {
            sign = sign.times(Sign::Minus);
        }
    }
    BasisProduct { sign, index: a ^ b }
}

/// Assembles the multiplication table for `tag`.
///
/// Panics if the generated table is not associative or basis 0 is not the
/// identity; both are fixed properties of the closed set of algebras.
pub fn make_algebra(tag: AlgebraTag) -> AlgebraSpec {
    let squares = tag.generator_squares();
    let dim = 1 << squares.len();
    let table = (0..dim)
        .map(|a| (0..dim).map(|b| blade_product(a, b, squares)).collect())
        .collect();
    let spec = AlgebraSpec {
        tag,
        dim,
        field: tag.field(),
        table,
    };
    assert!(
        spec.has_identity_at_zero(),
        "{tag}: basis 0 is not the identity"
    );
    assert!(spec.is_associative(), "{tag}: table is not associative");
    spec
}

/// Shared, lazily built spec for `tag`.
pub fn algebra(tag: AlgebraTag) -> &'static AlgebraSpec {
    static SPECS: [OnceLock<AlgebraSpec>; 5] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let slot = AlgebraTag::ALL.iter().position(|&t| t == tag).unwrap();
    SPECS[slot].get_or_init(|| make_algebra(tag))
}

/// A hypercomplex number: one coefficient per basis element.
#[derive(Debug, Clone, PartialEq)]
pub struct HValue {
    algebra: &'static AlgebraSpec,
    coeffs: Vec<Complex64>,
}

impl HValue {
    pub fn new(tag: AlgebraTag, coeffs: Vec<Complex64>) -> Result<Self> {
        let algebra = algebra(tag);
        if coeffs.len() != algebra.dim {
            return Err(Error::CoefficientCount {
                algebra: tag,
                expected: algebra.dim,
                got: coeffs.len(),
            });
        }
        if algebra.field == GroundField::Real && coeffs.iter().any(|z| z.im != 0.0) {
            return Err(Error::ComplexCoefficients(tag));
        }
        Ok(Self { algebra, coeffs })
    }

    pub fn from_real(tag: AlgebraTag, coeffs: &[f64]) -> Result<Self> {
        Self::new(tag, coeffs.iter().map(|&x| re(x)).collect())
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        let algebra = algebra(tag);
        Self {
            algebra,
            coeffs: vec![ZERO; algebra.dim],
        }
    }

    pub fn basis(tag: AlgebraTag, k: usize) -> Self {
        let mut v = Self::zero(tag);
        v.coeffs[k] = re(1.0);
        v
    }

    pub fn one(tag: AlgebraTag) -> Self {
        Self::basis(tag, 0)
    }

    pub fn algebra(&self) -> &'static AlgebraSpec {
        self.algebra
    }

    pub fn tag(&self) -> AlgebraTag {
        self.algebra.tag
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            algebra: self.algebra,
            coeffs: self.coeffs.iter().map(|z| z * s).collect(),
        }
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &HValue) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for HValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, z) in self.coeffs.iter().enumerate() {
            if *z == ZERO {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if z.im == 0.0 {
                write!(f, "{}", z.re)?;
            } else {
                write!(f, "({}{:+}I)", z.re, z.im)?;
            }
            if k > 0 {
                write!(f, "{}", self.algebra.basis_name(k))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Bilinear product through the structure table.
pub fn multiply(a: &HValue, b: &HValue) -> Result<HValue> {
    if a.tag() != b.tag() {
        return Err(Error::AlgebraMismatch {
            left: a.tag(),
            right: b.tag(),
        });
    }
    let spec = a.algebra;
    let mut out = vec![ZERO; spec.dim];
    for (i, x) in a.coeffs.iter().enumerate() {
        for (j, y) in b.coeffs.iter().enumerate() {
            let p = spec.table[i][j];
            out[p.index] += x * y * p.sign.as_f64();
        }
    }
    Ok(HValue {
        algebra: spec,
        coeffs: out,
    })
}

/// Left-regular matrix representation; column 0 is the coefficient vector.
pub fn to_matrix(a: &HValue) -> CMatrix {
    let spec = a.algebra;
    let mut m = CMatrix::zeros(spec.dim, spec.dim);
    for (i, x) in a.coeffs.iter().enumerate() {
        for c in 0..spec.dim {
            let p = spec.table[i][c];
            m[(p.index, c)] += x * p.sign.as_f64();
        }
    }
    m
}

/// Inverse of [`to_matrix`]: reads column 0 and checks that re-embedding
/// reproduces `m` within [`IMAGE_TOL`].
pub fn from_matrix(m: &CMatrix, tag: AlgebraTag) -> Result<HValue> {
    let spec = algebra(tag);
    if m.nrows() != spec.dim || m.ncols() != spec.dim {
        return Err(Error::DimensionMismatch {
            expected: spec.dim,
            got: m.nrows().max(m.ncols()),
        });
    }
    let coeffs: Vec<Complex64> = m.column(0).iter().copied().collect();
    let imag = coeffs.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if spec.field == GroundField::Real && imag > IMAGE_TOL {
        return Err(Error::NotInImage {
            algebra: tag,
            residual: imag,
        });
    }
    let coeffs = match spec.field {
        GroundField::Real => coeffs.iter().map(|z| re(z.re)).collect(),
        GroundField::Complex => coeffs,
    };
    let value = HValue {
        algebra: spec,
        coeffs,
    };
    let residual = max_abs_diff(&to_matrix(&value), m);
    if residual > IMAGE_TOL {
        return Err(Error::NotInImage {
            algebra: tag,
            residual,
        });
    }
    Ok(value)
}
