//! The oracle suite behind `hxdft verify`.
//!
//! Every property reports a residual and a tolerance; the report is one
//! `PROP <name> PASS|FAIL residual=<r>` line per property. The embedding
//! under test is injectable so that a broken layout can be shown to fail.

use std::f64::consts::PI;
use std::fmt;

use hxdft::conic::fit_conic;
use hxdft::linalg::{max_abs, max_abs_diff, re, real_matrix};
use hxdft::root::{algebra_root, builtin_roots, complex_root, DEFAULT_TOL};
use hxdft::{
    biquaternion_root, cl11_root, cl20_root, dft1d, dft2d_two_sided, euler_exp, from_matrix,
    multiply, phasor_path, quaternion_root, reference_dft1d, reference_dft2d, root2x2_bc,
    series_exp, to_matrix, transmute_matrix, validate_root, AlgebraTag, CMatrix, Direction, HValue,
    MatrixRoot, ScaleConvention,
};
use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gen;

pub type Embedding = fn(&HValue) -> CMatrix;

#[derive(Debug, Clone, Copy)]
pub struct Suite {
    pub embed: Embedding,
    pub seed: u64,
}

impl Suite {
    pub fn new(seed: u64) -> Self {
        Self {
            embed: to_matrix,
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropResult {
    pub name: String,
    /// `inf` when the property could not be evaluated at all.
    pub residual: f64,
    pub tol: f64,
}

impl PropResult {
    pub fn passed(&self) -> bool {
        self.residual <= self.tol
    }
}

impl fmt::Display for PropResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PROP {} {} residual={:.3e}",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.residual
        )
    }
}

type Check = fn(&Suite, AlgebraTag, &mut ChaCha8Rng) -> hxdft::Result<f64>;

const PER_ALGEBRA: &[(&str, f64, Check)] = &[
    ("homomorphism", 1e-12, homomorphism),
    ("embedding-round-trip", 1e-12, embedding_round_trip),
    ("root-residual", 1e-10, root_residual),
    ("euler-vs-series", 1e-12, euler_vs_series),
    ("dft1d-round-trip", 1e-10, dft1d_round_trip),
    ("dft1d-reference", 1e-11, dft1d_reference),
    ("dft2d-round-trip", 1e-10, dft2d_round_trip),
    ("dft2d-reference", 1e-11, dft2d_reference),
];

type GenericCheck = fn(&mut ChaCha8Rng) -> hxdft::Result<f64>;

const GENERIC: &[(&str, f64, GenericCheck)] = &[
    ("builtin-roots", 1e-10, builtin_residuals),
    ("odd-dimension-rejected", 0.0, odd_dimension),
    ("ellipse-fit", 1e-9, ellipse),
    ("unit-circle-fit", 1e-12, unit_circle),
];

/// Runs the per-algebra properties for `algebras`, then the
/// algebra-independent ones when `generic` is set. Each property gets its
/// own generator derived from the suite seed, so results do not depend on
/// which subset runs.
pub fn run(suite: &Suite, algebras: &[AlgebraTag], generic: bool) -> Vec<PropResult> {
    let mut out = Vec::new();
    for &tag in algebras {
        for (i, &(name, tol, check)) in PER_ALGEBRA.iter().enumerate() {
            let mut rng = stream(suite.seed, tag as u64 * 64 + i as u64);
            out.push(result(
                format!("{tag}.{name}"),
                tol,
                check(suite, tag, &mut rng),
            ));
        }
        if tag == AlgebraTag::Quaternion {
            let mut rng = stream(suite.seed, 1000);
            out.push(result(
                "quaternion.transmutation".into(),
                1e-12,
                transmutation(suite, &mut rng),
            ));
        }
    }
    if generic {
        for (i, &(name, tol, check)) in GENERIC.iter().enumerate() {
            let mut rng = stream(suite.seed, 2000 + i as u64);
            out.push(result(name.into(), tol, check(&mut rng)));
        }
    }
    out
}

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

fn result(name: String, tol: f64, residual: hxdft::Result<f64>) -> PropResult {
    let residual = match residual {
        Ok(r) if r.is_nan() => f64::INFINITY,
        Ok(r) => r,
        Err(_) => f64::INFINITY,
    };
    PropResult {
        name,
        residual,
        tol,
    }
}

fn root_pair(tag: AlgebraTag) -> hxdft::Result<(MatrixRoot, MatrixRoot)> {
    let r3 = 3f64.sqrt();
    let s = 1.0 / r3;
    Ok(match tag {
        AlgebraTag::Complex => (complex_root(), complex_root()),
        AlgebraTag::Quaternion => (quaternion_root(s, s, s)?, quaternion_root(0.6, 0.0, 0.8)?),
        AlgebraTag::Biquaternion => (
            biquaternion_root(&hxdft::root::biquaternion_example())?,
            biquaternion_root(&HValue::basis(AlgebraTag::Biquaternion, 3))?,
        ),
        AlgebraTag::Cl11 => (cl11_root(1.0, r3, 1.0)?, cl11_root(0.0, 1.0, 0.0)?),
        AlgebraTag::Cl20 => (cl20_root(1.0, 1.0, r3)?, cl20_root(0.0, 0.0, 1.0)?),
    })
}

fn homomorphism(suite: &Suite, tag: AlgebraTag, rng: &mut ChaCha8Rng) -> hxdft::Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let a = gen::value(rng, tag);
        let b = gen::value(rng, tag);
        let lhs = (suite.embed)(&a) * (suite.embed)(&b);
        let rhs = (suite.embed)(&multiply(&a, &b)?);
        worst = worst.max(max_abs_diff(&lhs, &rhs));
    }
    Ok(worst)
}

fn embedding_round_trip(
    suite: &Suite,
    tag: AlgebraTag,
    rng: &mut ChaCha8Rng,
) -> hxdft::Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let a = gen::value(rng, tag);
        worst = worst.max(from_matrix(&(suite.embed)(&a), tag)?.max_abs_diff(&a));
    }
    Ok(worst)
}

fn root_residual(_: &Suite, tag: AlgebraTag, _: &mut ChaCha8Rng) -> hxdft::Result<f64> {
    let (j, k) = root_pair(tag)?;
    Ok(j.residual().max(k.residual()))
}

fn euler_vs_series(_: &Suite, tag: AlgebraTag, rng: &mut ChaCha8Rng) -> hxdft::Result<f64> {
    let (j, _) = root_pair(tag)?;
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let theta = rng.random_range(-4.0 * PI..4.0 * PI);
        let series = series_exp(&(j.entries() * re(theta)), 1e-15)?;
        worst = worst.max(max_abs_diff(euler_exp(&j, theta).entries(), &series));
    }
    Ok(worst)
}

fn dft1d_round_trip(_: &Suite, tag: AlgebraTag, rng: &mut ChaCha8Rng) -> hxdft::Result<f64> {
    let (j, _) = root_pair(tag)?;
    let mut worst = 0.0f64;
    for m_len in [1, 2, 7, 16, 64] {
        let f = gen::signal1d(rng, tag, m_len);
        for s in ScaleConvention::ALL {
            let spec = dft1d(&f, &j, Direction::Forward, s)?;
            let back = dft1d(&spec, &j, Direction::Inverse, s)?;
            let rel = max_abs_diff(back.data(), f.data()) / (1.0 + max_abs(f.data()));
            worst = worst.max(rel);
        }
    }
    Ok(worst)
}

fn dft1d_reference(_: &Suite, tag: AlgebraTag, rng: &mut ChaCha8Rng) -> hxdft::Result<f64> {
    let (j, _) = root_pair(tag)?;
    let mut worst = 0.0f64;
    for m_len in 1..=8 {
        let f = gen::signal1d(rng, tag, m_len);
        let fast = dft1d(&f, &j, Direction::Forward, ScaleConvention::InverseScaled)?;
        worst = worst.max(max_abs_diff(fast.data(), reference_dft1d(&f, &j)?.data()));
    }
    Ok(worst)
}

fn dft2d_round_trip(_: &Suite, tag: AlgebraTag, rng: &mut ChaCha8Rng) -> hxdft::Result<f64> {
    let (j, k) = root_pair(tag)?;
    let mut worst = 0.0f64;
    for s in ScaleConvention::ALL {
        let f = gen::signal2d(rng, tag, 6, 5);
        let spec = dft2d_two_sided(&f, &j, &k, Direction::Forward, s)?;
        let back = dft2d_two_sided(&spec, &j, &k, Direction::Inverse, s)?;
        worst = worst.max(back.max_abs_diff(&f) / (1.0 + f.max_abs()));
    }
    Ok(worst)
}

fn dft2d_reference(_: &Suite, tag: AlgebraTag, rng: &mut ChaCha8Rng) -> hxdft::Result<f64> {
    let (j, k) = root_pair(tag)?;
    let f = gen::signal2d(rng, tag, 4, 3);
    let fast = dft2d_two_sided(
        &f,
        &j,
        &k,
        Direction::Forward,
        ScaleConvention::InverseScaled,
    )?;
    Ok(fast.max_abs_diff(&reference_dft2d(&f, &j, &k)?))
}

fn transmutation(suite: &Suite, rng: &mut ChaCha8Rng) -> hxdft::Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let p = gen::value(rng, AlgebraTag::Quaternion);
        let q = gen::value(rng, AlgebraTag::Quaternion);
        let left = (suite.embed)(&q);
        let right = transmute_matrix(&left)?;
        let got = &right * DVector::from_column_slice(p.coeffs());
        let want = DVector::from_column_slice(multiply(&p, &q)?.coeffs());
        let law = (got - want).iter().map(|z| z.norm()).fold(0.0, f64::max);
        let involution = max_abs_diff(&transmute_matrix(&right)?, &left);
        worst = worst.max(law).max(involution);
    }
    Ok(worst)
}

fn builtin_residuals(_: &mut ChaCha8Rng) -> hxdft::Result<f64> {
    Ok(builtin_roots()
        .iter()
        .map(|(_, r)| r.residual())
        .fold(0.0, f64::max))
}

/// Counts accepted random real odd-dimensional matrices; any is a failure.
fn odd_dimension(rng: &mut ChaCha8Rng) -> hxdft::Result<f64> {
    let mut accepted = 0;
    for n in [3, 5] {
        for _ in 0..200 {
            let entries: Vec<f64> = (0..n * n).map(|_| rng.random_range(-3.0..3.0)).collect();
            if validate_root(&real_matrix(n, n, &entries), DEFAULT_TOL).is_ok() {
                accepted += 1;
            }
        }
    }
    Ok(accepted as f64)
}

fn ellipse(_: &mut ChaCha8Rng) -> hxdft::Result<f64> {
    let j = root2x2_bc(1.0, -2.0, true)?;
    let fit = fit_conic(&phasor_path(&j, 1, 64, [1.0, 0.0])?)?;
    Ok(if fit.conic.is_ellipse() {
        fit.residual
    } else {
        f64::INFINITY
    })
}

fn unit_circle(_: &mut ChaCha8Rng) -> hxdft::Result<f64> {
    let j = algebra_root(&HValue::basis(AlgebraTag::Complex, 1))?;
    let fit = fit_conic(&phasor_path(&j, 3, 64, [0.6, 0.8])?)?;
    let s = 1.0 / 3f64.sqrt();
    let want = [s, 0.0, s, 0.0, 0.0, -s];
    Ok(fit
        .conic
        .coeffs
        .iter()
        .zip(want)
        .map(|(g, w)| (g - w).abs())
        .fold(fit.residual, f64::max))
}
