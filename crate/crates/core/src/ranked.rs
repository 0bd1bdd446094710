use std::ops::Deref;

use crate::base::{Compiled, RuleSet};
use crate::error::Result;
use crate::syntax::PrefProgram;

/// [`Compiled`] plus the preference relation as per-rule bitmasks.
#[derive(Debug, Clone)]
pub struct PrefCompiled<'p> {
    base: Compiled<'p>,
    lpp: &'p PrefProgram,
    /// per rule r: the rules p with p < r
    below: Vec<u64>,
}

impl<'p> PrefCompiled<'p> {
    pub fn new(lpp: &'p PrefProgram) -> Result<Self> {
        let base = Compiled::new(lpp.program())?;
        let mut below = vec![0u64; base.len()];
        for (lo, hi) in lpp.preferences().pairs() {
            below[hi] |= 1 << lo;
        }
        Ok(Self { base, lpp, below })
    }

    pub fn compiled(&self) -> &Compiled<'p> {
        &self.base
    }

    pub fn pref_program(&self) -> &'p PrefProgram {
        self.lpp
    }

    /// `lo < hi`: `hi` is preferred over `lo`.
    pub fn less(&self, lo: usize, hi: usize) -> bool {
        self.below[hi] & (1 << lo) != 0
    }

    /// Rules strictly less preferred than `r`.
    pub fn less_than(&self, r: usize) -> RuleSet {
        RuleSet::from_bits(self.below[r])
    }
}

impl<'p> Deref for PrefCompiled<'p> {
    type Target = Compiled<'p>;

    fn deref(&self) -> &Self::Target {
        &self.base
    }
}
