use super::Tolerance;
use crate::{Error, Result};

/// Default number of scan intervals on `(0, tau_max]`.
pub const DEFAULT_SCAN_STEPS: usize = 4096;

/// Smallest `τ ∈ (0, tau_max]` at which `f` comes down to `level`.
///
/// `f` is scanned on a uniform grid of `steps` intervals; the first interval
/// whose right end is at or below `level` is refined by bisection until its
/// width satisfies `tol` (absolute and relative tolerances apply to `τ`).
/// The scan stops at the first bracket, so the cost is proportional to the
/// crossing time, not to `tau_max`. If `f(0) <= level` the crossing is at 0.
///
/// Non-monotone `f` is handled as long as the grid resolves its oscillation.
pub fn find_first_crossing<F: Fn(f64) -> f64>(
    f: F,
    level: f64,
    tau_max: f64,
    steps: usize,
    tol: Tolerance,
) -> Result<f64> {
    if !(tau_max > 0.0) || steps == 0 {
        return Err(Error::param("tau_max", tau_max, "scan range must be positive"));
    }
    if f(0.0) <= level {
        return Ok(0.0);
    }
    let h = tau_max / steps as f64;
    let mut lo = 0.0;
    for i in 1..=steps {
        let hi = if i == steps { tau_max } else { i as f64 * h };
        if f(hi) <= level {
            return Ok(bisect(&f, level, lo, hi, tol));
        }
        lo = hi;
    }
    Err(Error::NoCrossing { level, tau_max })
}

/// `f(lo) > level >= f(hi)`.
fn bisect<F: Fn(f64) -> f64>(f: &F, level: f64, mut lo: f64, mut hi: f64, tol: Tolerance) -> f64 {
    for _ in 0..tol.max_iter.max(64) {
        if tol.accepts(hi - lo, hi) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f(mid) <= level {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let (flo, fhi) = (f(lo) - level, f(hi) - level);
    if flo > fhi && fhi <= 0.0 {
        // secant on the final bracket
        lo + (hi - lo) * flo / (flo - fhi)
    } else {
        hi
    }
}
