//! Scalar root finding on a bracket: Newton iteration safeguarded by
//! bisection. Internal helper for locating equilibria, the inflection point
//! of the field, and the inner endpoint of the homoclinic loop.

use crate::error::{Error, Result};

/// Maximum iterations for the bracketed solver; generous, since each
/// iteration at worst halves the bracket.
const MAX_ITER: usize = 200;

/// Finds the root of `f` inside `[lo, hi]` using Newton steps safeguarded by
/// the bracket: any Newton iterate that leaves the current bracket (or whose
/// derivative is unusable) is replaced by a bisection step, so convergence is
/// guaranteed and typically quadratic near the root.
pub(crate) fn newton_bracketed(
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    x_tol: f64,
    what: &'static str,
) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let (mut fa, fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return Err(Error::BracketFailure { what });
    }
    let mut x = 0.5 * (a + b);
    for _ in 0..MAX_ITER {
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        // Shrink the bracket around the sign change.
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        if (b - a).abs() <= x_tol * x.abs().max(1.0) {
            return Ok(0.5 * (a + b));
        }
        let dfx = df(x);
        let newton = x - fx / dfx;
        x = if dfx.is_finite() && dfx != 0.0 && newton > a && newton < b {
            newton
        } else {
            0.5 * (a + b)
        };
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_finds_transcendental_root() {
        // x = cos x near 0.739085...
        let root = newton_bracketed(
            |x| x - x.cos(),
            |x| 1.0 + x.sin(),
            0.0,
            1.0,
            1e-14,
            "fixed point of cos",
        )
        .unwrap();
        assert!((root - 0.739_085_133_215_160_6).abs() < 1e-12);
    }

    #[test]
    fn newton_survives_bad_derivative() {
        // Derivative callback is deliberately wrong (zero): must fall back to
        // bisection and still converge.
        let root = newton_bracketed(|x| x * x - 2.0, |_| 0.0, 0.0, 2.0, 1e-13, "sqrt 2").unwrap();
        assert!((root - std::f64::consts::SQRT_2).abs() < 1e-11);
    }

    #[test]
    fn missing_sign_change_is_reported() {
        let err = newton_bracketed(|x| x * x + 1.0, |x| 2.0 * x, -1.0, 1.0, 1e-12, "impossible")
            .unwrap_err();
        assert!(matches!(err, Error::BracketFailure { .. }));
    }

    #[test]
    fn exact_endpoint_roots_accepted() {
        assert_eq!(
            newton_bracketed(|x| x, |_| 1.0, 0.0, 1.0, 1e-12, "zero").unwrap(),
            0.0
        );
        assert_eq!(
            newton_bracketed(|x| x - 1.0, |_| 1.0, 0.0, 1.0, 1e-12, "one").unwrap(),
            1.0
        );
    }
}
