//! Semantics D: preferences act only between directly conflicting rules.

use std::collections::BTreeSet;

use crate::base::{AnswerSet, RuleSet};
use crate::error::Result;
use crate::limits::Limits;
use crate::ranked::PrefCompiled;
use crate::syntax::PrefProgram;

impl PrefCompiled<'_> {
    /// Mutual defeat between two rules.
    pub fn directly_conflicting(&self, r1: usize, r2: usize) -> bool {
        self.defeats(RuleSet::single(r1), RuleSet::single(r2)) && self.defeats(RuleSet::single(r2), RuleSet::single(r1))
    }

    /// `r1` and `r2` directly conflict and `r2 < r1`.
    pub fn directly_overrides(&self, r1: usize, r2: usize) -> bool {
        self.directly_conflicting(r1, r2) && self.less(r2, r1)
    }

    /// Removes each rule defeated by some member of `r` that it does not
    /// directly override.
    pub fn reduct_d(&self, r: RuleSet) -> RuleSet {
        let mut kept = RuleSet::EMPTY;
        for target in self.all().iter() {
            let removed = r.iter().any(|attacker| {
                self.defeats(RuleSet::single(attacker), RuleSet::single(target))
                    && !self.directly_overrides(target, attacker)
            });
            if !removed {
                kept.insert(target);
            }
        }
        kept
    }

    pub fn is_preferred_generating_d(&self, r: RuleSet) -> bool {
        self.minpos(self.reduct_d(r)) == r
    }

    pub fn preferred_answer_sets_d(&self, limits: &Limits) -> Result<Vec<AnswerSet>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for r in self.subsets("number of rules", limits.max_rules)? {
            if !self.is_preferred_generating_d(r) || !self.heads_consistent(r) {
                continue;
            }
            let literals = self.heads(r);
            if seen.insert(literals.clone()) {
                out.push(AnswerSet {
                    literals,
                    generating: r,
                });
            }
        }
        Ok(out)
    }
}

pub fn preferred_answer_sets_d(lpp: &PrefProgram, limits: &Limits) -> Result<Vec<AnswerSet>> {
    PrefCompiled::new(lpp)?.preferred_answer_sets_d(limits)
}
