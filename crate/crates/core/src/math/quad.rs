use std::f64::consts::PI;

use super::{ComplexValue, Tolerance};
use crate::{Error, Result};

/// Integral of `f` over one period `[-π, π]`.
///
/// Repeated trapezoidal refinement. For smooth periodic integrands the
/// trapezoidal rule converges geometrically, so the difference between two
/// successive halvings is a sharp error estimate.
pub fn integrate_periodic<F>(f: F, tol: Tolerance) -> Result<ComplexValue>
where
    F: Fn(f64) -> ComplexValue,
{
    let mut n = 16usize;
    let h = 2.0 * PI / n as f64;
    let mut sum: ComplexValue = (0..n).map(|i| f(-PI + i as f64 * h)).sum();
    let mut estimate = sum * h;
    for _ in 0..tol.max_iter {
        let h = 2.0 * PI / n as f64;
        // midpoints of the current grid
        let mids: ComplexValue = (0..n).map(|i| f(-PI + (i as f64 + 0.5) * h)).sum();
        sum += mids;
        n *= 2;
        let refined = sum * (2.0 * PI / n as f64);
        let err = (refined - estimate).norm();
        estimate = refined;
        if tol.accepts(err, refined.norm()) {
            return Ok(refined);
        }
    }
    Err(Error::NoConvergence {
        what: "periodic trapezoidal quadrature",
        iterations: tol.max_iter,
    })
}

// 15-point Gauss-Kronrod nodes and weights; the 7-point Gauss rule uses the
// odd-indexed nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut gauss = fc * WG[3];
    let mut kron = fc * WGK[7];
    for j in 0..7 {
        let x = h * XGK[j];
        let pair = f(c - x) + f(c + x);
        kron += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    whole: (f64, f64),
    abs_tol: f64,
    depth: usize,
) -> Result<f64> {
    let (value, err) = whole;
    if !value.is_finite() || !err.is_finite() {
        return Err(Error::NonFinite {
            what: "quadrature integrand",
        });
    }
    if err <= abs_tol || (b - a).abs() < 1e-14 * (a.abs() + b.abs()) {
        return Ok(value);
    }
    if depth == 0 {
        return Err(Error::NoConvergence {
            what: "adaptive Gauss-Kronrod quadrature",
            iterations: depth,
        });
    }
    let m = 0.5 * (a + b);
    let left = kronrod(f, a, m);
    let right = kronrod(f, m, b);
    Ok(adapt(f, a, m, left, 0.5 * abs_tol, depth - 1)?
        + adapt(f, m, b, right, 0.5 * abs_tol, depth - 1)?)
}

/// Adaptive 7/15 Gauss–Kronrod integral of `f` over `[a, b]`.
///
/// `tol.max_iter` bounds the bisection depth. The relative tolerance is
/// applied to a first whole-interval estimate.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let whole = kronrod(&f, a, b);
    let target = tol.abs_tol.max(tol.rel_tol * whole.0.abs());
    adapt(&f, a, b, whole, target, tol.max_iter).map_err(|e| match e {
        Error::NonFinite { .. } => e,
        _ => Error::NoConvergence {
            what: "adaptive Gauss-Kronrod quadrature",
            iterations: tol.max_iter,
        },
    })
}

/// Standard normal density.
fn phi(u: f64) -> f64 {
    (-0.5 * u * u).exp() / (2.0 * PI).sqrt()
}

/// Integration cut-off in standard deviations.
const GAUSS_SPAN: f64 = 12.0;

/// `E[f(X)]` for `X ~ N(m, s²)`.
pub fn gaussian_expectation<F: Fn(f64) -> f64>(f: F, m: f64, s: f64, tol: Tolerance) -> Result<f64> {
    if s < 0.0 || !s.is_finite() {
        return Err(Error::param("s", s, "standard deviation must be finite and >= 0"));
    }
    if s == 0.0 {
        return Ok(f(m));
    }
    integrate(|u| f(m + s * u) * phi(u), -GAUSS_SPAN, GAUSS_SPAN, tol)
}

/// `E[f(X) | X >= lower]` for `X ~ N(m, s²)`.
///
/// The normalizer is integrated with the same rule as the numerator so that
/// the result is exact for constant `f`.
pub fn truncated_gaussian_expectation<F: Fn(f64) -> f64>(
    f: F,
    m: f64,
    s: f64,
    lower: f64,
    tol: Tolerance,
) -> Result<f64> {
    if s < 0.0 || !s.is_finite() {
        return Err(Error::param("s", s, "standard deviation must be finite and >= 0"));
    }
    if s == 0.0 {
        return if m >= lower {
            Ok(f(m))
        } else {
            Err(Error::param("m", m, "degenerate distribution below truncation point"))
        };
    }
    let lo = ((lower - m) / s).max(-GAUSS_SPAN);
    if lo >= GAUSS_SPAN {
        return Err(Error::param("lower", lower, "truncation removes all mass"));
    }
    let mass = integrate(phi, lo, GAUSS_SPAN, tol)?;
    let num = integrate(|u| f(m + s * u) * phi(u), lo, GAUSS_SPAN, tol)?;
    Ok(num / mass)
}
