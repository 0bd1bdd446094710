//! Semantics G: conflicts between fragments, i.e. rule sets closed under
//! positive support, and a fragment-level reduct in which a fragment cannot
//! be removed by a fragment it overrides.

use std::fmt;

use crate::base::{AnswerSet, Compiled, LiteralSet, RuleSet};
use crate::error::Result;
use crate::limits::Limits;
use crate::ranked::PrefCompiled;
use crate::syntax::{PrefProgram, Program};

/// A set of fragments with its cached union and heads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentSet {
    members: Vec<RuleSet>,
    union: RuleSet,
    heads: LiteralSet,
}

impl FragmentSet {
    pub fn new(c: &Compiled, members: impl IntoIterator<Item = RuleSet>) -> Self {
        let mut members: Vec<RuleSet> = members.into_iter().collect();
        members.sort();
        members.dedup();
        let union = members.iter().fold(RuleSet::EMPTY, |acc, &m| acc.union(m));
        Self {
            members,
            union,
            heads: c.heads(union),
        }
    }

    /// Members in increasing bitmask order.
    pub fn members(&self) -> &[RuleSet] {
        &self.members
    }

    pub fn union(&self) -> RuleSet {
        self.union
    }

    pub fn heads(&self) -> &LiteralSet {
        &self.heads
    }

    pub fn contains(&self, fragment: RuleSet) -> bool {
        self.members.binary_search(&fragment).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn display<'a>(&'a self, p: &'a Program) -> impl fmt::Display + 'a {
        DisplayFragments(self, p)
    }

    /// Member label lists, each in source order.
    pub fn labels(&self, p: &Program) -> Vec<Vec<String>> {
        self.members
            .iter()
            .map(|m| m.labels(p).iter().map(ToString::to_string).collect())
            .collect()
    }
}

struct DisplayFragments<'a>(&'a FragmentSet, &'a Program);

impl fmt::Display for DisplayFragments<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.members.iter().map(|m| m.display(self.1)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A G-preferred answer set with its preferred stable fragment set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GPreferred {
    pub answer_set: AnswerSet,
    pub fragments: FragmentSet,
}

impl PrefCompiled<'_> {
    /// Mutual defeat between two rule sets.
    pub fn conflicting(&self, x: RuleSet, y: RuleSet) -> bool {
        self.defeats(x, y) && self.defeats(y, x)
    }

    /// `x` and `y` conflict, and every rule of `x` defeated by `y` is
    /// answered by a strictly less preferred rule of `y` that `x` defeats.
    pub fn overrides(&self, x: RuleSet, y: RuleSet) -> bool {
        self.overrides_with(x, self.defeated_by(x), y, self.defeated_by(y))
    }

    fn overrides_with(&self, x: RuleSet, by_x: RuleSet, y: RuleSet, by_y: RuleSet) -> bool {
        if !(by_x.intersects(y) && by_y.intersects(x)) {
            return false;
        }
        let answers = y.intersection(by_x);
        x.intersection(by_y)
            .iter()
            .all(|r1| self.less_than(r1).intersects(answers))
    }

    /// All fragments, in increasing bitmask order.
    pub fn fragments(&self, limits: &Limits) -> Result<Vec<RuleSet>> {
        Ok(self
            .subsets("number of rules for fragment enumeration", limits.max_fragment_rules)?
            .filter(|&t| self.is_fragment(t))
            .collect())
    }
}

/// The fragments of one program, materialized once and reused by every
/// reduct computed against it.
#[derive(Debug, Clone)]
pub struct FragmentSpace<'a, 'p> {
    pc: &'a PrefCompiled<'p>,
    fragments: Vec<RuleSet>,
    defeated: Vec<RuleSet>,
}

impl<'a, 'p> FragmentSpace<'a, 'p> {
    pub fn new(pc: &'a PrefCompiled<'p>, limits: &Limits) -> Result<Self> {
        let fragments = pc.fragments(limits)?;
        let defeated = fragments.iter().map(|&f| pc.defeated_by(f)).collect();
        Ok(Self {
            pc,
            fragments,
            defeated,
        })
    }

    pub fn fragments(&self) -> &[RuleSet] {
        &self.fragments
    }

    pub fn compiled(&self) -> &'a PrefCompiled<'p> {
        self.pc
    }

    fn reduct_members(&self, e: &[RuleSet], use_preferences: bool) -> Vec<RuleSet> {
        let attackers: Vec<(RuleSet, RuleSet)> = e.iter().map(|&y| (y, self.pc.defeated_by(y))).collect();
        self.fragments
            .iter()
            .zip(&self.defeated)
            .filter(|&(&x, &by_x)| {
                !attackers.iter().any(|&(y, by_y)| {
                    by_y.intersects(x) && !(use_preferences && self.pc.overrides_with(x, by_x, y, by_y))
                })
            })
            .map(|(&x, _)| x)
            .collect()
    }

    /// The fragment reduct ignoring preferences.
    pub fn reduct(&self, e: &FragmentSet) -> FragmentSet {
        FragmentSet::new(self.pc, self.reduct_members(e.members(), false))
    }

    /// The preference-aware fragment reduct.
    pub fn reduct_g(&self, e: &FragmentSet) -> FragmentSet {
        FragmentSet::new(self.pc, self.reduct_members(e.members(), true))
    }

    pub fn is_stable(&self, e: &FragmentSet) -> bool {
        self.reduct_members(e.members(), false) == e.members()
    }

    pub fn is_preferred_stable(&self, e: &FragmentSet) -> bool {
        self.reduct_members(e.members(), true) == e.members()
    }

    /// The fragments contained in `rules`.
    pub fn fragments_within(&self, rules: RuleSet) -> FragmentSet {
        FragmentSet::new(self.pc, self.fragments.iter().copied().filter(|f| f.is_subset(rules)))
    }

    /// One stable fragment set per generating set: the fragments it
    /// contains. Each candidate is checked against the plain reduct.
    pub fn stable_fragment_sets(&self, limits: &Limits) -> Result<Vec<FragmentSet>> {
        Ok(self
            .pc
            .generating_sets(limits)?
            .into_iter()
            .map(|r| self.fragments_within(r))
            .filter(|e| self.is_stable(e))
            .collect())
    }

    /// Stable fragment sets that are fixpoints of the preference-aware
    /// reduct and have consistent heads. Every preferred stable fragment set
    /// is stable, so only those are searched.
    pub fn preferred(&self, limits: &Limits) -> Result<Vec<GPreferred>> {
        Ok(self
            .stable_fragment_sets(limits)?
            .into_iter()
            .filter(|e| e.heads().is_consistent() && self.is_preferred_stable(e))
            .map(|e| GPreferred {
                answer_set: AnswerSet {
                    literals: e.heads().clone(),
                    generating: e.union(),
                },
                fragments: e,
            })
            .collect())
    }
}

pub fn fragments(p: &Program, limits: &Limits) -> Result<Vec<RuleSet>> {
    let lpp = PrefProgram::without_preferences(p.clone());
    PrefCompiled::new(&lpp)?.fragments(limits)
}

pub fn stable_fragment_sets(p: &Program, limits: &Limits) -> Result<Vec<FragmentSet>> {
    let lpp = PrefProgram::without_preferences(p.clone());
    let pc = PrefCompiled::new(&lpp)?;
    FragmentSpace::new(&pc, limits)?.stable_fragment_sets(limits)
}

pub fn preferred_answer_sets_g(lpp: &PrefProgram, limits: &Limits) -> Result<Vec<GPreferred>> {
    let pc = PrefCompiled::new(lpp)?;
    FragmentSpace::new(&pc, limits)?.preferred(limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::answer_sets;
    use crate::fixtures;
    use crate::syntax::parse_pref_program;

    fn rs(p: &Program, labels: &[&str]) -> RuleSet {
        RuleSet::from_labels(p, labels.iter().copied()).unwrap()
    }

    #[test]
    fn running_fragments() {
        let run = parse_pref_program(fixtures::RUNNING).unwrap();
        let p = run.program();
        let got = fragments(p, &Limits::default()).unwrap();
        let mut want = vec![
            RuleSet::EMPTY,
            rs(p, &["r2"]),
            rs(p, &["r3"]),
            rs(p, &["r1", "r2"]),
            rs(p, &["r2", "r3"]),
            rs(p, &["r1", "r2", "r3"]),
        ];
        want.sort();
        assert_eq!(got, want);
        assert!(!got.contains(&rs(p, &["r1"])));
        assert_eq!(
            fragments(&Program::default(), &Limits::default()).unwrap(),
            vec![RuleSet::EMPTY]
        );
    }

    #[test]
    fn conflicts_and_overrides() {
        let run = parse_pref_program(fixtures::RUNNING).unwrap();
        let p = run.program();
        let pc = PrefCompiled::new(&run).unwrap();
        let (f2, f3, f4, f6) = (
            rs(p, &["r2"]),
            rs(p, &["r3"]),
            rs(p, &["r1", "r2"]),
            rs(p, &["r1", "r2", "r3"]),
        );
        assert!(pc.conflicting(f3, f4));
        assert!(!pc.conflicting(f2, f3));
        assert!(!pc.conflicting(RuleSet::EMPTY, f6));

        assert!(pc.overrides(f3, f4));
        assert!(pc.overrides(f3, f6));
        assert!(!pc.overrides(f3, f2));
        assert!(!pc.overrides(f6, f6));
        assert!(!pc.overrides(f4, f3));

        let plain = PrefProgram::without_preferences(p.clone());
        let pc = PrefCompiled::new(&plain).unwrap();
        assert!(pc.conflicting(f3, f4));
        assert!(!pc.overrides(f3, f4));
    }

    #[test]
    fn fragment_reducts() {
        let run = parse_pref_program(fixtures::RUNNING).unwrap();
        let p = run.program();
        let pc = PrefCompiled::new(&run).unwrap();
        let space = FragmentSpace::new(&pc, &Limits::default()).unwrap();
        let (f1, f2, f3, f4) = (RuleSet::EMPTY, rs(p, &["r2"]), rs(p, &["r3"]), rs(p, &["r1", "r2"]));
        let e1 = FragmentSet::new(&pc, [f1, f2, f4]);

        // F5 and F6 override F4 for the same reason F3 does, so they
        // survive too
        let (f5, f6) = (rs(p, &["r2", "r3"]), pc.all());
        assert!(pc.overrides(f5, f4) && pc.overrides(f6, f4));
        assert_eq!(space.reduct_g(&e1), FragmentSet::new(&pc, [f1, f2, f3, f4, f5, f6]));
        assert_eq!(space.reduct(&e1), e1);
        // nothing has x in a negative body
        let e2 = FragmentSet::new(&pc, [f2]);
        assert_eq!(space.reduct(&e2).len(), 6);
        assert!(!space.is_stable(&e2));
        let empty = FragmentSet::new(&pc, []);
        assert_eq!(space.reduct_g(&empty).members(), space.fragments());
    }

    #[test]
    fn running_stable_fragment_sets() {
        let run = parse_pref_program(fixtures::RUNNING).unwrap();
        let p = run.program();
        let sets = stable_fragment_sets(p, &Limits::default()).unwrap();
        let members: Vec<Vec<RuleSet>> = sets.iter().map(|e| e.members().to_vec()).collect();
        let mut e1 = vec![RuleSet::EMPTY, rs(p, &["r2"]), rs(p, &["r1", "r2"])];
        e1.sort();
        let mut e3 = vec![RuleSet::EMPTY, rs(p, &["r3"])];
        e3.sort();
        assert_eq!(members, vec![e1, e3]);

        let empty = stable_fragment_sets(&Program::default(), &Limits::default()).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].members(), &[RuleSet::EMPTY]);
    }

    #[test]
    fn car_stable_fragment_sets_match_named_families() {
        let car = parse_pref_program(fixtures::CAR).unwrap();
        let p = car.program();
        let sets = stable_fragment_sets(p, &Limits::default()).unwrap();
        let named = |groups: &[&[&str]]| {
            let mut v: Vec<RuleSet> = groups.iter().map(|g| rs(p, g)).collect();
            v.sort();
            v
        };
        let facts: [&[&str]; 4] = [&[], &["r1"], &["r2"], &["r1", "r2"]];
        let mut e1: Vec<&[&str]> = facts.to_vec();
        e1.extend::<[&[&str]; 4]>([
            &["r1", "r3"],
            &["r1", "r3", "u1"],
            &["r1", "r2", "r3"],
            &["r1", "r2", "r3", "u1"],
        ]);
        let mut e2: Vec<&[&str]> = facts.to_vec();
        e2.extend::<[&[&str]; 4]>([
            &["r2", "u4"],
            &["r2", "u4", "u2"],
            &["r1", "r2", "u4"],
            &["r1", "r2", "u4", "u2"],
        ]);
        let mut got: Vec<Vec<RuleSet>> = sets.iter().map(|e| e.members().to_vec()).collect();
        got.sort();
        let mut want = vec![named(&e1), named(&e2)];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn preferred_examples() {
        let limits = Limits::default();
        let run = parse_pref_program(fixtures::RUNNING).unwrap();
        let got = preferred_answer_sets_g(&run, &limits).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].answer_set.literals, LiteralSet::of(&["b"]));
        assert_eq!(
            got[0].fragments.members(),
            &[RuleSet::EMPTY, rs(run.program(), &["r3"])]
        );
        assert_eq!(got[0].fragments.display(run.program()).to_string(), "{{}, {r3}}");

        let be = parse_pref_program(fixtures::BREWKA_EITER).unwrap();
        let got = preferred_answer_sets_g(&be, &limits).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].answer_set.literals, LiteralSet::of(&["b"]));

        let car = parse_pref_program(fixtures::CAR).unwrap();
        let got = preferred_answer_sets_g(&car, &limits).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(
            got[0].answer_set.literals,
            LiteralSet::of(&["nice(car_1)", "safe(car_2)", "-rec(car_1)", "rec(car_2)"])
        );
    }

    #[test]
    fn car_override_of_a_fragments() {
        let car = parse_pref_program(fixtures::CAR).unwrap();
        let p = car.program();
        let pc = PrefCompiled::new(&car).unwrap();
        let (a2, a4) = (rs(p, &["r1", "r3", "u1"]), rs(p, &["r1", "r2", "r3", "u1"]));
        let (b2, b3, b4) = (
            rs(p, &["r2", "u4", "u2"]),
            rs(p, &["r1", "r2", "u4"]),
            rs(p, &["r1", "r2", "u4", "u2"]),
        );
        // without u2 nothing in B3 defeats r3, so B3 conflicts with neither
        assert!(pc.defeats(a2, b3) && !pc.defeats(b3, a2));
        assert!(!pc.overrides(b3, a2) && !pc.overrides(b3, a4));
        for b in [b2, b4] {
            assert!(pc.overrides(b, a2) && pc.overrides(b, a4));
            assert!(!pc.overrides(a2, b) && !pc.overrides(a4, b));
        }
        let space = FragmentSpace::new(&pc, &Limits::default()).unwrap();
        let e1 = space.fragments_within(rs(p, &["r1", "r2", "r3", "u1"]));
        assert_eq!(e1.len(), 8);
        let reduct = space.reduct_g(&e1);
        assert!(reduct.contains(b2) && reduct.contains(b4) && !reduct.contains(b3));
        assert!(!space.is_preferred_stable(&e1));
        let e2 = space.fragments_within(rs(p, &["r1", "r2", "u4", "u2"]));
        assert!(space.is_preferred_stable(&e2));
    }

    #[test]
    fn empty_preferences_give_answer_sets() {
        let limits = Limits::default();
        for text in [
            fixtures::RUNNING,
            fixtures::CAR,
            fixtures::DIRECT,
            fixtures::PRINCIPLE2_EXTENDED,
        ] {
            let lpp = parse_pref_program(text).unwrap();
            let plain = PrefProgram::without_preferences(lpp.program().clone());
            let mut g: Vec<_> = preferred_answer_sets_g(&plain, &limits)
                .unwrap()
                .into_iter()
                .map(|x| x.answer_set.literals)
                .collect();
            g.sort();
            let mut a: Vec<_> = answer_sets(plain.program(), &limits)
                .unwrap()
                .into_iter()
                .map(|x| x.literals)
                .collect();
            a.sort();
            assert_eq!(g, a);
        }
    }

    #[test]
    fn fragment_bound() {
        let car = parse_pref_program(fixtures::CAR).unwrap();
        let limits = Limits {
            max_fragment_rules: 4,
            ..Limits::default()
        };
        assert!(preferred_answer_sets_g(&car, &limits).is_err());
    }
}
