#![allow(dead_code)]

use hxdft::algebra::GroundField;
use hxdft::root::{biquaternion_example, complex_root, quaternion_mu};
use hxdft::{
    biquaternion_root, cl11_root, cl20_root, quaternion_root, AlgebraTag, Complex64, HValue,
    MatrixRoot, Signal1D, Signal2D,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_value(rng: &mut impl Rng, tag: AlgebraTag) -> HValue {
    let dim = hxdft::algebra::algebra(tag).dim;
    let complex = tag.field() == GroundField::Complex;
    let coeffs = (0..dim)
        .map(|_| {
            let re = rng.random_range(-1.0..1.0);
            let im = if complex {
                rng.random_range(-1.0..1.0)
            } else {
                0.0
            };
            Complex64::new(re, im)
        })
        .collect();
    HValue::new(tag, coeffs).unwrap()
}

pub fn random_signal1d(rng: &mut impl Rng, tag: AlgebraTag, m_len: usize) -> Signal1D {
    let values: Vec<HValue> = (0..m_len).map(|_| random_value(rng, tag)).collect();
    Signal1D::from_values(&values).unwrap()
}

pub fn random_signal2d(rng: &mut impl Rng, tag: AlgebraTag, rows: usize, cols: usize) -> Signal2D {
    let grid: Vec<Vec<HValue>> = (0..rows)
        .map(|_| (0..cols).map(|_| random_value(rng, tag)).collect())
        .collect();
    Signal2D::from_values(&grid).unwrap()
}

/// Two roots per algebra, non-commuting where the algebra allows it.
pub fn root_pair(tag: AlgebraTag) -> (MatrixRoot, MatrixRoot) {
    let r3 = 3f64.sqrt();
    match tag {
        AlgebraTag::Complex => (complex_root(), complex_root()),
        AlgebraTag::Quaternion => (quaternion_mu(), quaternion_root(0.6, 0.0, 0.8).unwrap()),
        AlgebraTag::Biquaternion => (
            biquaternion_root(&biquaternion_example()).unwrap(),
            biquaternion_root(&HValue::basis(AlgebraTag::Biquaternion, 3)).unwrap(),
        ),
        AlgebraTag::Cl11 => (
            cl11_root(1.0, r3, 1.0).unwrap(),
            cl11_root(0.0, 1.0, 0.0).unwrap(),
        ),
        AlgebraTag::Cl20 => (
            cl20_root(1.0, 1.0, r3).unwrap(),
            cl20_root(0.0, 0.0, 1.0).unwrap(),
        ),
    }
}

pub fn root_for(tag: AlgebraTag) -> MatrixRoot {
    root_pair(tag).0
}

/// Hamilton product on `[w, x, y, z]`, written out by hand.
pub fn hamilton(p: [f64; 4], q: [f64; 4]) -> [f64; 4] {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

pub fn real4(v: &HValue) -> [f64; 4] {
    let c = v.coeffs();
    [c[0].re, c[1].re, c[2].re, c[3].re]
}
