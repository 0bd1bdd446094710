//! Enumeration bounds shared by the brute-force solvers.

use crate::error::{Error, Result};

/// Rule subsets are bitmasks in a `u64`; no program with more rules can be
/// enumerated regardless of configuration.
pub const MASK_WIDTH: usize = 64;

pub const ENV_MAX_RULES: &str = "PREFAS_MAX_RULES";
pub const ENV_MAX_ATOMS: &str = "PREFAS_MAX_ATOMS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of rules for subset enumeration (generating sets).
    pub max_rules: usize,
    /// Maximum number of atoms for candidate enumeration in the
    /// Gelfond-Lifschitz oracle.
    pub max_atoms: usize,
    /// Maximum number of rules for fragment enumeration.
    pub max_fragment_rules: usize,
    /// Maximum number of distinct negated literals for the guess-based
    /// stable model search used on transformed programs.
    pub max_guess_literals: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_rules: 20,
            max_atoms: 16,
            max_fragment_rules: 14,
            max_guess_literals: 24,
        }
    }
}

impl Limits {
    /// Defaults, overridden by `PREFAS_MAX_RULES` / `PREFAS_MAX_ATOMS` when
    /// set. Unparsable values are reported as errors rather than ignored.
    pub fn from_env() -> std::result::Result<Self, String> {
        let mut limits = Self::default();
        if let Some(v) = read_env(ENV_MAX_RULES)? {
            limits.max_rules = v;
            limits.max_fragment_rules = limits.max_fragment_rules.min(v);
        }
        if let Some(v) = read_env(ENV_MAX_ATOMS)? {
            limits.max_atoms = v;
        }
        Ok(limits)
    }

    pub(crate) fn check(what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if actual > limit {
            return Err(Error::BoundExceeded { what, actual, limit });
        }
        Ok(())
    }
}

fn read_env(name: &str) -> std::result::Result<Option<usize>, String> {
    match std::env::var(name) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{name} must be a non-negative integer, got `{s}`")),
        Err(_) => Ok(None),
    }
}
