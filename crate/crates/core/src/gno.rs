//! Semantics GNO: a rule can be defeated only by rules that are not less
//! preferred than it and do not depend on such rules.

use std::collections::{BTreeSet, HashMap};

use crate::base::{AnswerSet, RuleSet};
use crate::error::Result;
use crate::limits::Limits;
use crate::ranked::PrefCompiled;
use crate::syntax::PrefProgram;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GnoOptions {
    /// Search every rule subset instead of only generating sets. Extra
    /// fixpoints can appear (`{r1, r2}` in the Brewka-Eiter program), which
    /// is why the default keeps to generating sets.
    pub all_subsets: bool,
}

impl PrefCompiled<'_> {
    /// `minpos` of the members of `candidate` that are not less preferred
    /// than `r`.
    pub fn trules(&self, r: usize, candidate: RuleSet) -> RuleSet {
        self.minpos(candidate.difference(self.less_than(r)))
    }

    /// Removes each rule whose negative body meets the heads of its
    /// `trules` in `r`.
    pub fn reduct_gno(&self, r: RuleSet) -> RuleSet {
        // rules with equal `less_than` masks share their trules
        let mut memo: HashMap<RuleSet, RuleSet> = HashMap::new();
        let mut kept = RuleSet::EMPTY;
        for q in self.all().iter() {
            let allowed = r.difference(self.less_than(q));
            let attackers = *memo.entry(allowed).or_insert_with(|| self.minpos(allowed));
            if !self.defeats(attackers, RuleSet::single(q)) {
                kept.insert(q);
            }
        }
        kept
    }

    pub fn is_preferred_generating_gno(&self, r: RuleSet) -> bool {
        self.minpos(self.reduct_gno(r)) == r
    }

    pub fn preferred_generating_sets_gno(&self, limits: &Limits, options: GnoOptions) -> Result<Vec<RuleSet>> {
        let candidates: Vec<RuleSet> = if options.all_subsets {
            self.subsets("number of rules", limits.max_rules)?.collect()
        } else {
            self.generating_sets(limits)?
        };
        Ok(candidates
            .into_iter()
            .filter(|&r| self.is_preferred_generating_gno(r))
            .collect())
    }

    pub fn preferred_answer_sets_gno(&self, limits: &Limits, options: GnoOptions) -> Result<Vec<AnswerSet>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for r in self.preferred_generating_sets_gno(limits, options)? {
            if !self.heads_consistent(r) {
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

pub fn preferred_answer_sets_gno(lpp: &PrefProgram, limits: &Limits) -> Result<Vec<AnswerSet>> {
    PrefCompiled::new(lpp)?.preferred_answer_sets_gno(limits, GnoOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{answer_sets, LiteralSet};
    use crate::fixtures;
    use crate::syntax::parse_pref_program;

    fn rs(pc: &PrefCompiled, labels: &[&str]) -> RuleSet {
        RuleSet::from_labels(pc.program(), labels.iter().copied()).unwrap()
    }

    fn pos(pc: &PrefCompiled, label: &str) -> usize {
        pc.program().position(&label.into()).unwrap()
    }

    #[test]
    fn trules_running() {
        let run = parse_pref_program(fixtures::RUNNING).unwrap();
        let pc = PrefCompiled::new(&run).unwrap();
        let r1 = rs(&pc, &["r1", "r2"]);
        assert_eq!(pc.trules(pos(&pc, "r3"), r1), RuleSet::EMPTY);
        assert_eq!(pc.trules(pos(&pc, "r1"), r1), r1);
        assert_eq!(pc.trules(pos(&pc, "r2"), r1), r1);
        assert_eq!(pc.trules(pos(&pc, "r2"), RuleSet::EMPTY), RuleSet::EMPTY);
        // a rule is never less preferred than itself
        assert_eq!(pc.trules(pos(&pc, "r3"), rs(&pc, &["r3"])), rs(&pc, &["r3"]));
    }

    #[test]
    fn trules_car() {
        let car = parse_pref_program(fixtures::CAR).unwrap();
        let pc = PrefCompiled::new(&car).unwrap();
        let r1 = rs(&pc, &["r1", "r2", "r3", "u1"]);
        // u1 alone is not positively supported once r1..r3 are excluded
        assert_eq!(pc.trules(pos(&pc, "u4"), r1), RuleSet::EMPTY);
    }

    #[test]
    fn reduct_examples() {
        let run = parse_pref_program(fixtures::RUNNING).unwrap();
        let pc = PrefCompiled::new(&run).unwrap();
        assert_eq!(pc.reduct_gno(rs(&pc, &["r1", "r2"])), pc.all());
        assert_eq!(pc.reduct_gno(RuleSet::EMPTY), pc.all());
        assert!(!pc.is_preferred_generating_gno(rs(&pc, &["r1", "r2"])));

        let be = parse_pref_program(fixtures::BREWKA_EITER).unwrap();
        let pc = PrefCompiled::new(&be).unwrap();
        assert_eq!(pc.reduct_gno(rs(&pc, &["r2"])), rs(&pc, &["r1", "r2"]));
    }

    #[test]
    fn preferred_examples() {
        let limits = Limits::default();
        let run = parse_pref_program(fixtures::RUNNING).unwrap();
        let got = preferred_answer_sets_gno(&run, &limits).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].literals, LiteralSet::of(&["b"]));
        let pc = PrefCompiled::new(&run).unwrap();
        assert_eq!(got[0].generating, rs(&pc, &["r3"]));

        let be = parse_pref_program(fixtures::BREWKA_EITER).unwrap();
        assert!(preferred_answer_sets_gno(&be, &limits).unwrap().is_empty());

        let car = parse_pref_program(fixtures::CAR).unwrap();
        let got = preferred_answer_sets_gno(&car, &limits).unwrap();
        let pc = PrefCompiled::new(&car).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(
            got[0].literals,
            LiteralSet::of(&["nice(car_1)", "safe(car_2)", "-rec(car_1)", "rec(car_2)"])
        );
        assert_eq!(got[0].generating, rs(&pc, &["r1", "r2", "u4", "u2"]));
    }

    #[test]
    fn widened_search_adds_only_non_generating_sets() {
        let limits = Limits::default();
        let wide_opts = GnoOptions { all_subsets: true };
        for text in [
            fixtures::RUNNING,
            fixtures::CAR,
            fixtures::BREWKA_EITER,
            fixtures::PRINCIPLE2_EXTENDED,
        ] {
            let lpp = parse_pref_program(text).unwrap();
            let pc = PrefCompiled::new(&lpp).unwrap();
            let narrow = pc
                .preferred_generating_sets_gno(&limits, GnoOptions::default())
                .unwrap();
            let wide = pc.preferred_generating_sets_gno(&limits, wide_opts).unwrap();
            assert!(narrow.iter().all(|r| wide.contains(r)));
            for r in wide.iter().filter(|r| !narrow.contains(r)) {
                assert!(!pc.is_generating(*r));
            }
        }

        // both rules of the Brewka-Eiter program form a reduct fixpoint, and
        // its heads {a, b} are even consistent
        let be = parse_pref_program(fixtures::BREWKA_EITER).unwrap();
        let pc = PrefCompiled::new(&be).unwrap();
        let both = rs(&pc, &["r1", "r2"]);
        assert!(pc.is_preferred_generating_gno(both));
        assert!(!pc.is_generating(both));
        assert_eq!(
            pc.preferred_generating_sets_gno(&limits, wide_opts).unwrap(),
            vec![both]
        );
        assert!(pc
            .preferred_answer_sets_gno(&limits, GnoOptions::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn empty_preferences_give_answer_sets() {
        let limits = Limits::default();
        for text in [fixtures::RUNNING, fixtures::CAR, fixtures::BREWKA_EITER] {
            let lpp = parse_pref_program(text).unwrap();
            let plain = PrefProgram::without_preferences(lpp.program().clone());
            let got: Vec<_> = preferred_answer_sets_gno(&plain, &limits)
                .unwrap()
                .into_iter()
                .map(|a| a.literals)
                .collect();
            let want: Vec<_> = answer_sets(plain.program(), &limits)
                .unwrap()
                .into_iter()
                .map(|a| a.literals)
                .collect();
            assert_eq!(got, want);
        }
    }
}
