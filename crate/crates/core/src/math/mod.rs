//! Numerical primitives shared by the analytic modules: the modified Bessel
//! function `I0` on the complex plane, quadrature, first-crossing root
//! finding and Gaussian expectations.
//!
//! Everything here is a pure function of its inputs.

mod bessel;
mod quad;
mod roots;

pub use bessel::{bessel_i0, bessel_i0_ratio, bessel_i0e};
pub use quad::{
    gaussian_expectation, integrate, integrate_periodic, truncated_gaussian_expectation,
};
pub use roots::{find_first_crossing, DEFAULT_SCAN_STEPS};

/// Complex correlation values and Bessel arguments.
pub type ComplexValue = num_complex::Complex64;

/// Convergence controls for the iterative routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iter: usize,
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64, max_iter: usize) -> crate::Result<Self> {
        if !(abs_tol >= 0.0 && rel_tol >= 0.0) || (abs_tol == 0.0 && rel_tol == 0.0) {
            return Err(crate::Error::param(
                "tolerance",
                abs_tol.max(rel_tol),
                "need abs_tol or rel_tol strictly positive, both non-negative",
            ));
        }
        if max_iter == 0 {
            return Err(crate::Error::param("max_iter", 0.0, "must be positive"));
        }
        Ok(Tolerance {
            abs_tol,
            rel_tol,
            max_iter,
        })
    }

    /// Whether `err` is acceptable for an estimate of magnitude `scale`.
    pub fn accepts(&self, err: f64, scale: f64) -> bool {
        err <= self.abs_tol.max(self.rel_tol * scale.abs())
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_iter: 50,
        }
    }
}
