use crate::error::{Error, Result};

/// Largest `p` accepted by enumeration-bound operations unless raised.
pub const DEFAULT_MAX_P: u32 = 7;

/// Largest `p` for which the perfect index fits in 64 bits.
pub const INDEXABLE_MAX_P: u32 = 13;

/// Environment variable that overrides [`DEFAULT_MAX_P`].
pub const MAX_P_ENV: &str = "BDG_MAX_P";

/// Resource limit on operations that touch every element of G(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gate {
    pub max_p: u32,
}

impl Default for Gate {
    fn default() -> Self {
        Gate {
            max_p: DEFAULT_MAX_P,
        }
    }
}

impl Gate {
    pub fn new(max_p: u32) -> Self {
        Gate { max_p }
    }

    /// Default limit, overridden by `BDG_MAX_P` when it parses.
    pub fn from_env() -> Self {
        std::env::var(MAX_P_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Gate::new)
            .unwrap_or_default()
    }

    /// Lifts the limit to everything the index can address.
    pub fn unlimited() -> Self {
        Gate {
            max_p: INDEXABLE_MAX_P,
        }
    }

    pub fn check(&self, p: u32) -> Result<()> {
        if p > self.max_p {
            Err(Error::GateExceeded {
                p,
                max_p: self.max_p,
            })
        } else {
            Ok(())
        }
    }
}
