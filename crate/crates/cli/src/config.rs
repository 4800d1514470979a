//! `key = value` run configuration: scenario keys plus experiment settings.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use beamcoh::scenario::ScenarioConfig;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunConfig {
    pub scenario: ScenarioConfig,
    pub settings: BTreeMap<String, f64>,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut scenario_lines = String::new();
        let mut settings = BTreeMap::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("config line `{line}`: expected `key = value`");
            };
            let key = key.trim();
            if ScenarioConfig::KEYS.contains(&key) {
                scenario_lines.push_str(line);
                scenario_lines.push('\n');
                continue;
            }
            let value = value.trim();
            let v: f64 = value
                .parse()
                .map_err(|_| anyhow!("config key `{key}`: `{value}` is not a number"))?;
            if !v.is_finite() {
                bail!("config key `{key}`: value must be finite");
            }
            settings.insert(key.to_string(), v);
        }
        let scenario = ScenarioConfig::parse(&scenario_lines)?;
        Ok(RunConfig { scenario, settings })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in config {}", path.display()))
    }
}

/// Experiment settings resolved against a table of defaults.
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    values: BTreeMap<&'static str, f64>,
}

impl Settings {
    /// Overrides `defaults` with `given`; any key not in `defaults` is an
    /// error naming the key.
    pub fn resolve(defaults: &[(&'static str, f64)], given: &BTreeMap<String, f64>, experiment: &str) -> Result<Self> {
        let mut values: BTreeMap<&'static str, f64> = defaults.iter().copied().collect();
        for (k, &v) in given {
            let Some(slot) = values.iter_mut().find(|(name, _)| **name == k.as_str()) else {
                bail!("config key `{k}`: not used by experiment {experiment}");
            };
            *slot.1 = v;
        }
        Ok(Settings { values })
    }

    pub fn get(&self, key: &str) -> f64 {
        *self
            .values
            .get(key)
            .unwrap_or_else(|| panic!("setting `{key}` has no default"))
    }

    /// Value that must be strictly positive.
    pub fn positive(&self, key: &str) -> Result<f64> {
        let v = self.get(key);
        if v > 0.0 {
            Ok(v)
        } else {
            bail!("config key `{key}`: must be > 0, got {v}")
        }
    }

    /// Value that must be a positive integer.
    pub fn count(&self, key: &str) -> Result<usize> {
        let v = self.get(key);
        if v >= 1.0 && v.fract() == 0.0 {
            Ok(v as usize)
        } else {
            bail!("config key `{key}`: must be a positive integer, got {v}")
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        self.values.iter().map(|(k, v)| (*k, *v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_scenario_and_settings() {
        let c = RunConfig::parse("speed_mps = 20\n# note\nn_seeds = 50 # inline\n").unwrap();
        assert_eq!(c.scenario.speed_mps, Some(20.0));
        assert_eq!(c.settings.get("n_seeds"), Some(&50.0));
    }

    #[test]
    fn errors_name_the_key() {
        let e = RunConfig::parse("n_seeds = many").unwrap_err();
        assert!(format!("{e:#}").contains("n_seeds"));
        let e = RunConfig::parse("carrier_ghz = x").unwrap_err();
        assert!(format!("{e:#}").contains("carrier_ghz"));
        let s = RunConfig::parse("bogus = 1").unwrap();
        let e = Settings::resolve(&[("kr", 50.0)], &s.settings, "fig3").unwrap_err();
        assert!(e.to_string().contains("`bogus`"));
    }

    #[test]
    fn integer_settings() {
        let given = BTreeMap::from([("n".to_string(), 2.5)]);
        let s = Settings::resolve(&[("n", 1.0)], &given, "x").unwrap();
        assert!(s.count("n").is_err());
    }
}
