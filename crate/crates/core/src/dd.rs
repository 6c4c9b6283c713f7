//! Double-double arithmetic for the exponential oracle.
//!
//! Values are unevaluated sums `hi + lo` with `|lo| ≤ ulp(hi)/2`, built from
//! the error-free transformations two-sum and fused two-product. Only the
//! handful of operations the power series needs are provided.

use std::ops::{Add, Mul};

use num_complex::Complex64;

use crate::linalg::CMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub(crate) fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub(crate) fn abs_approx(self) -> f64 {
        self.hi.abs()
    }

    /// Division by a small positive integer, accurate to about 2⁻¹⁰⁴.
    pub(crate) fn div_int(self, k: u32) -> Self {
        let d = f64::from(k);
        let q1 = self.hi / d;
        let (p, e) = two_prod(q1, d);
        let r = ((self.hi - p) - e + self.lo) / d;
        let (hi, lo) = quick_two_sum(q1, r);
        Dd { hi, lo }
    }

    fn neg(self) -> Self {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;

    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Mul for Dd {
    type Output = Dd;

    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct CDd {
    re: Dd,
    im: Dd,
}

impl CDd {
    pub(crate) fn from_c64(z: Complex64) -> Self {
        CDd {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    pub(crate) fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    fn abs_approx(self) -> f64 {
        self.re.abs_approx().hypot(self.im.abs_approx())
    }

    fn div_int(self, k: u32) -> Self {
        CDd {
            re: self.re.div_int(k),
            im: self.im.div_int(k),
        }
    }
}

impl Add for CDd {
    type Output = CDd;

    fn add(self, o: CDd) -> CDd {
        CDd {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Mul for CDd {
    type Output = CDd;

    fn mul(self, o: CDd) -> CDd {
        CDd {
            re: self.re * o.re + (self.im * o.im).neg(),
            im: self.re * o.im + self.im * o.re,
        }
    }
}

/// Square double-double complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct DdMatrix {
    n: usize,
    data: Vec<CDd>,
}

impl DdMatrix {
    pub(crate) fn identity(n: usize) -> Self {
        let mut data = vec![CDd::default(); n * n];
        for i in 0..n {
            data[i * n + i] = CDd::from_c64(Complex64::new(1.0, 0.0));
        }
        DdMatrix { n, data }
    }

    pub(crate) fn from_cmatrix(m: &CMatrix) -> Self {
        let n = m.nrows();
        let data = (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .map(|(r, c)| CDd::from_c64(m[(r, c)]))
            .collect();
        DdMatrix { n, data }
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn to_cmatrix(&self) -> CMatrix {
        CMatrix::from_row_iterator(self.n, self.n, self.data.iter().map(|z| z.to_c64()))
    }

    pub(crate) fn matmul(&self, o: &DdMatrix) -> DdMatrix {
        let n = self.n;
        let mut data = vec![CDd::default(); n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = CDd::default();
                for k in 0..n {
                    acc = acc + self.data[r * n + k] * o.data[k * n + c];
                }
                data[r * n + c] = acc;
            }
        }
        DdMatrix { n, data }
    }

    pub(crate) fn div_int(&self, k: u32) -> DdMatrix {
        DdMatrix {
            n: self.n,
            data: self.data.iter().map(|z| z.div_int(k)).collect(),
        }
    }

    pub(crate) fn add_assign(&mut self, o: &DdMatrix) {
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            *a = *a + *b;
        }
    }

    pub(crate) fn max_abs_approx(&self) -> f64 {
        self.data.iter().map(|z| z.abs_approx()).fold(0.0, f64::max)
    }
}
