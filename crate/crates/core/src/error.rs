use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("I0({re}{im:+}j) overflows f64; use the ratio form")]
    Overflow { re: f64, im: f64 },

    #[error("{what} is not finite")]
    NonFinite { what: &'static str },

    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    #[error("function stays above level {level} on (0, {tau_max}]")]
    NoCrossing { level: f64, tau_max: f64 },

    #[error("{what}: argument {value} outside the valid domain")]
    Domain { what: &'static str, value: f64 },

    #[error("closed form is outside its valid regime (denominator {denominator})")]
    InvalidRegime { denominator: f64 },

    #[error("codebook with {levels} level(s) gives {beams_per_level:.3} beams per level, need at least 2")]
    InvalidCodebook { levels: u32, beams_per_level: f64 },

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("lag of {lag} samples exceeds trace length {len}")]
    LagOutOfRange { lag: usize, len: usize },

    #[error("config key `{key}`: {message}")]
    Config { key: String, message: String },
}

impl Error {
    pub(crate) fn param(name: &'static str, value: f64, reason: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value,
            reason,
        }
    }
}
