//! Sum-of-sinusoids simulator for the NLOS channel seen through a drifting
//! von Mises beam, and an ensemble correlation estimator.
//!
//! Arrival angles sit on a fixed uniform grid over `(-π, π]`; only the phases
//! are random. Each sinusoid's amplitude follows the beam as its center
//! drifts with the receiver displacement.

use std::f64::consts::PI;
use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::correlation::CorrelationSample;
use crate::math::{bessel_i0e, ComplexValue};
use crate::scenario::{pointing_error_nlos, Beam, Scenario};
use crate::{Error, Result};

/// A sampled channel realization.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelTrace {
    pub dt: f64,
    pub samples: Vec<ComplexValue>,
    pub seed: u64,
    pub stream: u64,
}

impl ChannelTrace {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Writes `t,re,im` rows with a header.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "t,re,im")?;
        for (n, h) in self.samples.iter().enumerate() {
            writeln!(w, "{:.8e},{:.8e},{:.8e}", n as f64 * self.dt, h.re, h.im)?;
        }
        Ok(())
    }
}

/// Precomputed grid, amplitudes and per-step rotations for one scenario.
#[derive(Debug, Clone)]
pub struct NlosSimulator {
    dt: f64,
    n_samples: usize,
    // amplitude[k * n_samples + n] = √(P(α_k | μ_r(t_n)) w)
    amplitude: Vec<f64>,
    rotation: Vec<ComplexValue>,
}

impl NlosSimulator {
    /// `duration / dt` must be an integer; the trace holds the
    /// `duration/dt + 1` samples at `0, dt, …, duration`.
    pub fn new(sc: &Scenario, beam: &Beam, n_sinusoids: usize, duration: f64, dt: f64) -> Result<Self> {
        if n_sinusoids < 100 {
            return Err(Error::param("n_sinusoids", n_sinusoids as f64, "must be >= 100"));
        }
        if !(dt > 0.0) || !(duration >= 0.0) {
            return Err(Error::param("dt", dt, "dt must be > 0 and duration >= 0"));
        }
        let steps = (duration / dt).round();
        if (steps * dt - duration).abs() > 1e-9 * duration.max(dt) {
            return Err(Error::param("duration", duration, "must be an integer multiple of dt"));
        }
        let n_samples = steps as usize + 1;
        let kr = beam.kr();
        let w = 2.0 * PI / n_sinusoids as f64;
        // e^{k cos(α-μ)} / (2π I0(k)) = e^{k(cos(α-μ) - 1)} / (2π I0e(k))
        let norm = 1.0 / (2.0 * PI * bessel_i0e(kr));
        let centers: Vec<f64> = (0..n_samples)
            .map(|n| sc.pointing() + pointing_error_nlos(sc, n as f64 * dt))
            .collect();
        let mut amplitude = Vec::with_capacity(n_sinusoids * n_samples);
        let mut rotation = Vec::with_capacity(n_sinusoids);
        let step = 2.0 * PI * sc.doppler() * dt;
        for k in 0..n_sinusoids {
            let alpha = -PI + (k + 1) as f64 * w;
            for &mu in &centers {
                let p = norm * (kr * ((alpha - mu).cos() - 1.0)).exp();
                amplitude.push((p * w).sqrt());
            }
            rotation.push(ComplexValue::from_polar(1.0, step * alpha.cos()));
        }
        Ok(NlosSimulator {
            dt,
            n_samples,
            amplitude,
            rotation,
        })
    }

    pub fn n_sinusoids(&self) -> usize {
        self.rotation.len()
    }

    pub fn n_samples(&self) -> usize {
        self.n_samples
    }

    /// Expected power `Σ_k P(α_k|μ_r) w` at `t = 0`.
    fn power(&self) -> f64 {
        (0..self.n_sinusoids())
            .map(|k| self.amplitude[k * self.n_samples].powi(2))
            .sum()
    }

    /// One realization with phases drawn from `ChaCha8(seed)` on `stream`.
    pub fn trace(&self, seed: u64, stream: u64) -> ChannelTrace {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let ns = self.n_samples;
        let mut samples = vec![ComplexValue::new(0.0, 0.0); ns];
        for (k, rot) in self.rotation.iter().enumerate() {
            let phase: f64 = rng.random::<f64>() * 2.0 * PI;
            let mut z = ComplexValue::from_polar(1.0, phase);
            let amps = &self.amplitude[k * ns..(k + 1) * ns];
            for (h, &a) in samples.iter_mut().zip(amps) {
                *h += z * a;
                z *= rot;
            }
        }
        let scale = 1.0 / self.power().sqrt();
        for h in &mut samples {
            *h *= scale;
        }
        ChannelTrace {
            dt: self.dt,
            samples,
            seed,
            stream,
        }
    }

    /// `count` independent traces on streams `0..count`, generated in
    /// parallel. The result does not depend on the thread count.
    pub fn ensemble(&self, seed: u64, count: usize) -> Vec<ChannelTrace> {
        (0..count as u64)
            .into_par_iter()
            .map(|s| self.trace(seed, s))
            .collect()
    }
}

/// A single realization, normalized to unit expected power.
pub fn simulate_nlos(
    sc: &Scenario,
    beam: &Beam,
    n_sinusoids: usize,
    duration: f64,
    dt: f64,
    seed: u64,
) -> Result<ChannelTrace> {
    Ok(NlosSimulator::new(sc, beam, n_sinusoids, duration, dt)?.trace(seed, 0))
}

/// Average of `h[n] h*[n+m]` over all origins and traces, divided by the
/// lag-0 average. Lags are in samples.
pub fn empirical_correlation(traces: &[ChannelTrace], lag_steps: &[usize]) -> Result<Vec<CorrelationSample>> {
    let Some(first) = traces.first() else {
        return Err(Error::param("traces", 0.0, "at least one trace required"));
    };
    let dt = first.dt;
    let len = traces.iter().map(ChannelTrace::len).min().unwrap_or(0);
    if traces.iter().any(|t| t.dt != dt) {
        return Err(Error::param("dt", dt, "all traces must share dt"));
    }
    if let Some(&m) = lag_steps.iter().find(|&&m| m >= len) {
        return Err(Error::LagOutOfRange { lag: m, len });
    }
    let raw = |m: usize| -> ComplexValue {
        let sum: ComplexValue = traces
            .iter()
            .map(|t| {
                t.samples[..len - m]
                    .iter()
                    .zip(&t.samples[m..len])
                    .map(|(a, b)| a * b.conj())
                    .sum::<ComplexValue>()
            })
            .sum();
        sum / ((len - m) * traces.len()) as f64
    };
    let zero = raw(0);
    Ok(lag_steps
        .iter()
        .map(|&m| CorrelationSample {
            lag_tau: m as f64 * dt,
            value: raw(m) / zero,
        })
        .collect())
}

/// Mean of `|h|²` over all samples of all traces.
pub fn empirical_power(traces: &[ChannelTrace]) -> f64 {
    let (sum, n) = traces.iter().fold((0.0, 0usize), |(s, n), t| {
        (s + t.samples.iter().map(|h| h.norm_sqr()).sum::<f64>(), n + t.len())
    });
    sum / n as f64
}
