//! Workloads shared by the criterion benches.

use hxdft::algebra::{algebra, GroundField};
use hxdft::root::builtin_roots;
use hxdft::{AlgebraTag, Complex64, HValue, MatrixRoot, Provenance, Signal1D, Signal2D};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn value(rng: &mut impl Rng, tag: AlgebraTag) -> HValue {
    let complex = tag.field() == GroundField::Complex;
    let coeffs = (0..algebra(tag).dim)
        .map(|_| {
            let im = if complex {
                rng.random_range(-1.0..1.0)
            } else {
                0.0
            };
            Complex64::new(rng.random_range(-1.0..1.0), im)
        })
        .collect();
    HValue::new(tag, coeffs).unwrap()
}

pub fn signal1d(tag: AlgebraTag, m_len: usize, seed: u64) -> Signal1D {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values: Vec<HValue> = (0..m_len).map(|_| value(&mut rng, tag)).collect();
    Signal1D::from_values(&values).unwrap()
}

pub fn signal2d(tag: AlgebraTag, rows: usize, cols: usize, seed: u64) -> Signal2D {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid: Vec<Vec<HValue>> = (0..rows)
        .map(|_| (0..cols).map(|_| value(&mut rng, tag)).collect())
        .collect();
    Signal2D::from_values(&grid).unwrap()
}

/// The built-in root embedded from `tag`.
pub fn root(tag: AlgebraTag) -> MatrixRoot {
    builtin_roots()
        .into_iter()
        .map(|(_, r)| r)
        .find(|r| r.provenance() == Provenance::AlgebraEmbedding(tag))
        .unwrap()
}
