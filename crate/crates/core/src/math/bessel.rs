//! Zeroth-order modified Bessel function of the first kind.
//!
//! `I0(z)` is evaluated as a mantissa and a log-scale, `I0(z) = m·e^s`, so
//! that ratios such as `I0(z)/I0(k)` never overflow even for `k` in the
//! thousands. Small arguments use the power series; large ones the
//! Hankel-type asymptotic expansion including the `e^{-z}` branch, which keeps
//! it accurate close to the imaginary axis (where `I0(iy) = J0(y)`).

use std::f64::consts::PI;

use super::ComplexValue;
use crate::{Error, Result};

/// Below this modulus the power series is used.
const SERIES_LIMIT: f64 = 25.0;
const MAX_TERMS: usize = 500;

#[derive(Debug, Clone, Copy)]
struct Scaled {
    mantissa: ComplexValue,
    log_scale: f64,
}

fn series(z: ComplexValue) -> Scaled {
    let q = z * z * 0.25;
    let mut term = ComplexValue::new(1.0, 0.0);
    let mut sum = term;
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        term *= q / (kf * kf);
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() && kf * kf > q.norm() {
            break;
        }
    }
    Scaled {
        mantissa: sum,
        log_scale: 0.0,
    }
}

/// `I0(z) ~ e^z/√(2πz) Σ a_k z^-k + s·i·e^-z/√(2πz) Σ(-1)^k a_k z^-k`,
/// `a_k = ((2k-1)!!)² / (k! 8^k)`, valid for `Re z >= 0`, `s = sign(Im z)`.
fn asymptotic(z: ComplexValue) -> Scaled {
    let inv = z.inv();
    let mut t = ComplexValue::new(1.0, 0.0);
    let mut alternating = t;
    let mut plain = t;
    let mut prev = f64::INFINITY;
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        let c = (2.0 * kf - 1.0).powi(2) / (8.0 * kf);
        t *= inv * c;
        let size = t.norm();
        if size > prev {
            // asymptotic series has started to diverge
            break;
        }
        if k % 2 == 1 {
            alternating -= t;
        } else {
            alternating += t;
        }
        plain += t;
        prev = size;
        if size < 1e-17 {
            break;
        }
    }
    let sign = if z.im > 0.0 {
        1.0
    } else if z.im < 0.0 {
        -1.0
    } else {
        0.0
    };
    let reflected = ComplexValue::new(0.0, sign) * (-2.0 * z).exp() * alternating;
    let phase = ComplexValue::new(0.0, z.im).exp();
    Scaled {
        mantissa: phase / (2.0 * PI * z).sqrt() * (plain + reflected),
        log_scale: z.re,
    }
}

fn scaled(z: ComplexValue) -> Scaled {
    // I0 is even: fold onto the right half plane.
    let z = if z.re < 0.0 { -z } else { z };
    if z.norm() < SERIES_LIMIT {
        series(z)
    } else {
        asymptotic(z)
    }
}

/// `I0(z)` for complex `z`.
///
/// Fails with [`Error::Overflow`] once `e^{Re z}` leaves the `f64` range;
/// use [`bessel_i0_ratio`] in that regime.
pub fn bessel_i0(z: ComplexValue) -> Result<ComplexValue> {
    let s = scaled(z);
    let out = s.mantissa * s.log_scale.exp();
    if out.re.is_finite() && out.im.is_finite() {
        Ok(out)
    } else {
        Err(Error::Overflow { re: z.re, im: z.im })
    }
}

/// `I0(z) / I0(k)` without forming either factor.
pub fn bessel_i0_ratio(z: ComplexValue, k: f64) -> ComplexValue {
    let num = scaled(z);
    let den = scaled(ComplexValue::new(k, 0.0));
    num.mantissa / den.mantissa * (num.log_scale - den.log_scale).exp()
}

/// Exponentially scaled `I0(x)·e^{-|x|}` for real `x`.
pub fn bessel_i0e(x: f64) -> f64 {
    let s = scaled(ComplexValue::new(x, 0.0));
    s.mantissa.re * (s.log_scale - x.abs()).exp()
}
