//! Resource caps for the exponential-time oracles.
//!
//! Every brute-force routine checks a cap and fails with
//! [`Error::BudgetExceeded`] instead of running unbounded.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Search steps allowed for brute-force cycle enumeration.
    pub cycle_steps: u64,
    /// Largest host graph accepted by the branch-set minor search.
    pub minor_max_vertices: usize,
    /// Largest graph accepted by backtracking isomorphism.
    pub iso_max_vertices: usize,
    /// Partial states allowed in the outerplanar embedding search.
    pub embedding_states: u64,
    /// Largest graph accepted by brute-force independence number.
    pub independence_max_vertices: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            cycle_steps: 10_000_000,
            minor_max_vertices: 64,
            iso_max_vertices: 16,
            embedding_states: 1_000_000,
            independence_max_vertices: 40,
        }
    }
}

impl Budget {
    pub const ENV_VAR: &'static str = "CYCLECENSUS_BUDGET";

    /// Parses overrides on top of the defaults.
    ///
    /// Accepts either a bare integer (cycle enumeration steps) or a comma
    /// separated list of `key=value` pairs with keys `cycles`, `minor`, `iso`,
    /// `embed` and `independence`. All values must be positive.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut budget = Budget::default();
        let spec = spec.trim();
        if spec.is_empty() {
            return Ok(budget);
        }
        if let Ok(steps) = spec.parse::<u64>() {
            budget.cycle_steps = positive("cycles", steps)?;
            return Ok(budget);
        }
        for part in spec.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("budget entry `{part}` is not key=value")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("budget value `{value}` is not an integer")))?;
            let key = key.trim();
            let value = positive(key, value)?;
            match key {
                "cycles" => budget.cycle_steps = value,
                "minor" => budget.minor_max_vertices = value as usize,
                "iso" => budget.iso_max_vertices = value as usize,
                "embed" => budget.embedding_states = value,
                "independence" => budget.independence_max_vertices = value as usize,
                other => return Err(Error::Parse(format!("unknown budget key `{other}`"))),
            }
        }
        Ok(budget)
    }

    /// Defaults overridden by `CYCLECENSUS_BUDGET` when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(spec) => Self::parse(&spec),
            Err(_) => Ok(Budget::default()),
        }
    }
}

fn positive(key: &str, value: u64) -> Result<u64> {
    if value == 0 {
        Err(Error::Parse(format!("budget `{key}` must be positive")))
    } else {
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bare_integer_sets_cycle_steps() {
        let b = Budget::parse("1234").unwrap();
        assert_eq!(b.cycle_steps, 1234);
        assert_eq!(b.iso_max_vertices, Budget::default().iso_max_vertices);
    }

    #[test]
    fn key_value_pairs() {
        let b = Budget::parse("iso=20, minor=12,embed=5").unwrap();
        assert_eq!(b.iso_max_vertices, 20);
        assert_eq!(b.minor_max_vertices, 12);
        assert_eq!(b.embedding_states, 5);
    }

    #[test]
    fn rejects_zero_and_unknown_keys() {
        assert!(Budget::parse("0").is_err());
        assert!(Budget::parse("iso=0").is_err());
        assert!(Budget::parse("speed=3").is_err());
        assert!(Budget::parse("iso").is_err());
    }
}
