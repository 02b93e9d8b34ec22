//! Resource caps for exact enumeration.
//!
//! The defaults can be overridden with the `KRONBOUND_LIMITS` environment
//! variable, a comma-separated list of `key=value` pairs, e.g.
//! `KRONBOUND_LIMITS="kronecker_n=14,max_states=1000000"`.

use serde::Serialize;

use crate::error::{Error, Result};

pub const LIMITS_ENV: &str = "KRONBOUND_LIMITS";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest `n` for the character-formula Kronecker coefficient.
    pub kronecker_n: usize,
    /// Largest `n` for exact 2D/3D contingency-table counts.
    pub tables_n: usize,
    /// Largest `n` for exact binary-table counts.
    pub binary_n: usize,
    /// Largest `n` for pyramid and plane-partition enumeration.
    pub pyramid_n: usize,
    /// Largest `n` for the Vallejo (inverse Kostka / multi-LR) evaluation.
    pub vallejo_n: usize,
    /// Cap on enumerated intermediate objects in a single count.
    pub max_states: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            kronecker_n: 20,
            tables_n: 12,
            binary_n: 10,
            pyramid_n: 40,
            vallejo_n: 8,
            max_states: 50_000_000,
        }
    }
}

impl Limits {
    /// Defaults with `KRONBOUND_LIMITS` applied on top.
    pub fn from_env() -> Result<Self> {
        match std::env::var(LIMITS_ENV) {
            Ok(overrides) => Self::default().with_overrides(&overrides),
            Err(_) => Ok(Self::default()),
        }
    }

    /// Applies `key=value` overrides, comma separated.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("limit override {item:?} is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|e| Error::InvalidArgument(format!("limit {key:?}: {e}")))?;
            let slot = match key.trim() {
                "kronecker_n" => &mut self.kronecker_n,
                "tables_n" => &mut self.tables_n,
                "binary_n" => &mut self.binary_n,
                "pyramid_n" => &mut self.pyramid_n,
                "vallejo_n" => &mut self.vallejo_n,
                "max_states" => &mut self.max_states,
                other => return Err(Error::InvalidArgument(format!("unknown limit {other:?}"))),
            };
            *slot = value;
        }
        Ok(self)
    }

    /// No caps at all; for callers that size their own inputs.
    pub fn unlimited() -> Self {
        Limits {
            kronecker_n: usize::MAX,
            tables_n: usize::MAX,
            binary_n: usize::MAX,
            pyramid_n: usize::MAX,
            vallejo_n: usize::MAX,
            max_states: usize::MAX,
        }
    }

    pub(crate) fn check(what: &str, value: usize, limit: usize) -> Result<()> {
        if value > limit {
            return Err(Error::LimitExceeded { what: what.to_string(), value, limit });
        }
        Ok(())
    }
}

/// Counts visited states against `max_states`.
pub(crate) struct StateBudget {
    used: usize,
    cap: usize,
    what: &'static str,
}

impl StateBudget {
    pub(crate) fn new(what: &'static str, cap: usize) -> Self {
        StateBudget { used: 0, cap, what }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            return Err(Error::LimitExceeded { what: format!("{} states", self.what), value: self.used, limit: self.cap });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides() {
        let l = Limits::default().with_overrides("kronecker_n=9, max_states=10").unwrap();
        assert_eq!(l.kronecker_n, 9);
        assert_eq!(l.max_states, 10);
        assert!(Limits::default().with_overrides("bogus=1").is_err());
        assert!(Limits::default().with_overrides("tables_n").is_err());
        assert!(Limits::default().with_overrides("tables_n=x").is_err());
        assert_eq!(Limits::default().with_overrides("").unwrap(), Limits::default());
    }

    #[test]
    fn budget() {
        let mut b = StateBudget::new("test", 2);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(matches!(b.tick(), Err(Error::LimitExceeded { .. })));
    }
}
