//! Size guards for exhaustive enumeration.

use crate::error::{Error, Result};

/// Environment variable that overrides [`Limits::max_states`].
pub const MAX_STATES_ENV: &str = "BSOL_MAX_STATES";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted by partition enumeration.
    pub max_partition_n: u32,
    /// Largest `n` accepted by composition enumeration (2^(n-1) states).
    pub max_composition_n: u32,
    /// Largest state space any exhaustive analysis may materialize.
    pub max_states: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_partition_n: 80,
            max_composition_n: 20,
            max_states: 20_000_000,
        }
    }
}

impl Limits {
    /// Defaults, with `max_states` taken from `BSOL_MAX_STATES` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_STATES_ENV) {
            limits.max_states = raw.trim().parse().map_err(|_| {
                Error::parse(format!(
                    "{MAX_STATES_ENV}={raw:?} is not a nonnegative integer"
                ))
            })?;
        }
        Ok(limits)
    }

    pub(crate) fn check_states(&self, what: &'static str, count: u64) -> Result<()> {
        if count > self.max_states {
            return Err(Error::BoundExceeded {
                what,
                requested: count,
                limit: self.max_states,
            });
        }
        Ok(())
    }
}
