//! Seeded random test data.

use hxdft::algebra::{algebra, GroundField};
use hxdft::{AlgebraTag, Complex64, HValue, Signal1D, Signal2D};
use rand::Rng;

pub fn value(rng: &mut impl Rng, tag: AlgebraTag) -> HValue {
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
    HValue::new(tag, coeffs).expect("coefficient count matches the algebra")
}

pub fn signal1d(rng: &mut impl Rng, tag: AlgebraTag, m_len: usize) -> Signal1D {
    let values: Vec<HValue> = (0..m_len).map(|_| value(rng, tag)).collect();
    Signal1D::from_values(&values).expect("non-empty signal")
}

pub fn signal2d(rng: &mut impl Rng, tag: AlgebraTag, rows: usize, cols: usize) -> Signal2D {
    let grid: Vec<Vec<HValue>> = (0..rows)
        .map(|_| (0..cols).map(|_| value(rng, tag)).collect())
        .collect();
    Signal2D::from_values(&grid).expect("non-empty grid")
}
