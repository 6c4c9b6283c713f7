//! Root constructors fed from the command line.
//!
//! Parameters typed by hand are usually truncated (`0.577350269`,
//! `1.7320508`), which misses the library's 1e-12 constraint tolerance.
//! Within [`SNAP_TOL`] of the constraint surface the parameters are
//! projected back onto it before construction; further out the
//! constructor's own error is reported unchanged.

use hxdft::root::{biquaternion_example, complex_root};
use hxdft::{
    biquaternion_root, cl11_root, cl20_root, quaternion_root, root2x2_ab, root2x2_bc, AlgebraTag,
    Complex64, HValue, MatrixRoot,
};

pub const SNAP_TOL: f64 = 1e-6;

#[derive(Debug, thiserror::Error)]
pub enum RootArgError {
    #[error("{kind} takes {expected} parameters, got {got}")]
    Arity {
        kind: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("cannot parse {0:?} as a number")]
    Number(String),
    #[error("sign must be + or -, got {0:?}")]
    Sign(String),
    #[error("unknown root kind {0:?}; expected one of {KINDS}")]
    Kind(String),
    #[error(transparent)]
    Core(#[from] hxdft::Error),
}

pub const KINDS: &str = "complex, quaternion, biquaternion, cl11, cl20, param-ab, param-bc";

fn numbers(params: &[String]) -> Result<Vec<f64>, RootArgError> {
    params
        .iter()
        .map(|p| {
            p.parse::<f64>()
                .map_err(|_| RootArgError::Number(p.clone()))
        })
        .collect()
}

fn arity(
    kind: &'static str,
    expected: &'static str,
    ok: bool,
    got: usize,
) -> Result<(), RootArgError> {
    if ok {
        Ok(())
    } else {
        Err(RootArgError::Arity {
            kind,
            expected,
            got,
        })
    }
}

/// Rescales `(x, y, z)` to unit length when it is already close.
pub fn snap_quaternion(x: f64, y: f64, z: f64) -> (f64, f64, f64) {
    let n2 = x * x + y * y + z * z;
    if (n2 - 1.0).abs() <= SNAP_TOL {
        let n = n2.sqrt();
        (x / n, y / n, z / n)
    } else {
        (x, y, z)
    }
}

/// Re-solves `b2` from `b1² − b2² + β² = −1`, keeping its sign.
pub fn snap_cl11(b1: f64, b2: f64, beta: f64) -> (f64, f64, f64) {
    let lhs = b1 * b1 - b2 * b2 + beta * beta;
    if (lhs + 1.0).abs() <= SNAP_TOL {
        let b2_exact = (1.0 + b1 * b1 + beta * beta).sqrt().copysign(b2);
        (b1, b2_exact, beta)
    } else {
        (b1, b2, beta)
    }
}

/// Re-solves `β` from `b1² + b2² − β² = −1`, keeping its sign.
pub fn snap_cl20(b1: f64, b2: f64, beta: f64) -> (f64, f64, f64) {
    let lhs = b1 * b1 + b2 * b2 - beta * beta;
    if (lhs + 1.0).abs() <= SNAP_TOL {
        let beta_exact = (1.0 + b1 * b1 + b2 * b2).sqrt().copysign(beta);
        (b1, b2, beta_exact)
    } else {
        (b1, b2, beta)
    }
}

/// Builds the root named by `kind` from its positional parameters.
pub fn build_root(kind: &str, params: &[String]) -> Result<MatrixRoot, RootArgError> {
    let n = params.len();
    match kind {
        "complex" => {
            arity("complex", "0", n == 0, n)?;
            Ok(complex_root())
        }
        "quaternion" => {
            arity("quaternion", "3 (x y z)", n == 3, n)?;
            let v = numbers(params)?;
            let (x, y, z) = snap_quaternion(v[0], v[1], v[2]);
            Ok(quaternion_root(x, y, z)?)
        }
        "biquaternion" => {
            arity(
                "biquaternion",
                "0 or 8 (re im per coefficient)",
                n == 0 || n == 8,
                n,
            )?;
            let q = if n == 0 {
                biquaternion_example()
            } else {
                let v = numbers(params)?;
                let coeffs = v.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect();
                HValue::new(AlgebraTag::Biquaternion, coeffs)?
            };
            Ok(biquaternion_root(&q)?)
        }
        "cl11" => {
            arity("cl11", "3 (b1 b2 beta)", n == 3, n)?;
            let v = numbers(params)?;
            let (b1, b2, beta) = snap_cl11(v[0], v[1], v[2]);
            Ok(cl11_root(b1, b2, beta)?)
        }
        "cl20" => {
            arity("cl20", "3 (b1 b2 beta)", n == 3, n)?;
            let v = numbers(params)?;
            let (b1, b2, beta) = snap_cl20(v[0], v[1], v[2]);
            Ok(cl20_root(b1, b2, beta)?)
        }
        "param-ab" => {
            arity("param-ab", "2 (a b)", n == 2, n)?;
            let v = numbers(params)?;
            Ok(root2x2_ab(v[0], v[1])?)
        }
        "param-bc" => {
            arity("param-bc", "3 (b c +|-)", n == 3, n)?;
            let v = numbers(&params[..2])?;
            let positive = match params[2].as_str() {
                "+" => true,
                "-" => false,
                other => return Err(RootArgError::Sign(other.to_string())),
            };
            Ok(root2x2_bc(v[0], v[1], positive)?)
        }
        other => Err(RootArgError::Kind(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hxdft::linalg::{max_abs_diff, real_matrix};
    use hxdft::root::quaternion_mu;

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn truncated_mu_snaps_to_exact_mu() {
        let root = build_root("quaternion", &strings(&["0.577350269"; 3])).unwrap();
        assert!(max_abs_diff(root.entries(), quaternion_mu().entries()) <= 1e-15);
    }

    #[test]
    fn truncated_sqrt3_snaps() {
        let root = build_root("cl20", &strings(&["1", "1", "1.7320508"])).unwrap();
        let exact = cl20_root(1.0, 1.0, 3f64.sqrt()).unwrap();
        assert_eq!(root.entries(), exact.entries());
        let root = build_root("cl11", &strings(&["1", "1.7320508", "1"])).unwrap();
        assert_eq!(
            root.entries(),
            cl11_root(1.0, 3f64.sqrt(), 1.0).unwrap().entries()
        );
    }

    #[test]
    fn far_from_constraint_is_not_snapped() {
        let err = build_root("quaternion", &strings(&["0.5", "0.5", "0.5"])).unwrap_err();
        assert!(err.to_string().contains("x^2 + y^2 + z^2 = 1"), "{err}");
    }

    #[test]
    fn param_bc_with_sign() {
        let root = build_root("param-bc", &strings(&["1", "-2", "+"])).unwrap();
        assert_eq!(root.entries(), &real_matrix(2, 2, &[1.0, 1.0, -2.0, -1.0]));
        assert!(matches!(
            build_root("param-bc", &strings(&["1", "-2", "x"])),
            Err(RootArgError::Sign(_))
        ));
    }

    #[test]
    fn argument_errors() {
        assert!(matches!(
            build_root("octonion", &[]),
            Err(RootArgError::Kind(_))
        ));
        assert!(matches!(
            build_root("cl11", &strings(&["1"])),
            Err(RootArgError::Arity { .. })
        ));
        assert!(matches!(
            build_root("param-ab", &strings(&["1", "two"])),
            Err(RootArgError::Number(_))
        ));
        assert!(build_root("biquaternion", &[]).is_ok());
    }
}
