//! Answer sets through generating sets, plus two independent routes to
//! the same answer sets: the classic Gelfond-Lifschitz guess-and-check over
//! literal candidates, and a guess over negated literals that scales to
//! the large plain programs produced by the transformation.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::limits::{Limits, MASK_WIDTH};
use crate::syntax::{Literal, Program, Rule, RuleId};

/// A set of rules of a host program, as a bitmask over source positions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RuleSet(u64);

impl RuleSet {
    pub const EMPTY: RuleSet = RuleSet(0);

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All rules of a program with `n` rules.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MASK_WIDTH);
        if n == MASK_WIDTH {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    pub fn single(i: usize) -> Self {
        Self(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1u64 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: RuleSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: RuleSet) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: RuleSet) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: RuleSet) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn intersects(self, other: RuleSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Member positions in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub fn labels(self, p: &Program) -> Vec<RuleId> {
        self.iter().map(|i| p.rules()[i].label.clone()).collect()
    }

    /// Looks labels up in `p`; `None` if any is unknown.
    pub fn from_labels<'a>(p: &Program, labels: impl IntoIterator<Item = &'a str>) -> Option<Self> {
        let mut set = Self::EMPTY;
        for label in labels {
            set.insert(p.position(&RuleId::new(label))?);
        }
        Some(set)
    }

    /// `{r1, r2}` in source order.
    pub fn display(self, p: &Program) -> String {
        let labels: Vec<String> = self.labels(p).iter().map(ToString::to_string).collect();
        format!("{{{}}}", labels.join(", "))
    }
}

/// A set of literals. Ordered by literal, printed sorted by rendered text.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LiteralSet(BTreeSet<Literal>);

impl LiteralSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses each entry with [`Literal::parse`]; panics on malformed input.
    /// Meant for fixtures and tests.
    pub fn of(literals: &[&str]) -> Self {
        literals
            .iter()
            .map(|s| Literal::parse(s).unwrap_or_else(|e| panic!("bad literal `{s}`: {e}")))
            .collect()
    }

    pub fn is_consistent(&self) -> bool {
        // complementary literals share an atom and sort next to each other
        self.0
            .iter()
            .zip(self.0.iter().skip(1))
            .all(|(a, b)| !a.is_complementary(b))
    }

    pub fn contains(&self, l: &Literal) -> bool {
        self.0.contains(l)
    }

    pub fn insert(&mut self, l: Literal) -> bool {
        self.0.insert(l)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Literal> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &LiteralSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &LiteralSet) -> LiteralSet {
        Self(self.0.union(&other.0).cloned().collect())
    }

    /// Rendered literals in lexicographic order of their text.
    pub fn sorted_strings(&self) -> Vec<String> {
        let mut out: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        out.sort();
        out
    }
}

impl FromIterator<Literal> for LiteralSet {
    fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> FromIterator<&'a Literal> for LiteralSet {
    fn from_iter<I: IntoIterator<Item = &'a Literal>>(iter: I) -> Self {
        Self(iter.into_iter().cloned().collect())
    }
}

impl IntoIterator for LiteralSet {
    type Item = Literal;
    type IntoIter = std::collections::btree_set::IntoIter<Literal>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Display for LiteralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.sorted_strings().join(", "))
    }
}

impl Serialize for LiteralSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.sorted_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LiteralSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Vec::<Literal>::deserialize(d)?.into_iter().collect())
    }
}

/// An answer set with the generating set it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnswerSet {
    pub literals: LiteralSet,
    pub generating: RuleSet,
}

/// Index of a program with at most 64 rules, used by every subset-based
/// solver. Literals are interned; defeat and support are rule bitmasks.
#[derive(Debug, Clone)]
pub struct Compiled<'p> {
    program: &'p Program,
    literals: Vec<Literal>,
    complement: Vec<Option<usize>>,
    heads: Vec<usize>,
    pos: Vec<Vec<usize>>,
    neg: Vec<Vec<usize>>,
    /// per literal: rules with that head
    suppliers: Vec<u64>,
    /// per rule: rules whose negative body contains its head
    defeats: Vec<u64>,
    all: RuleSet,
}

impl<'p> Compiled<'p> {
    pub fn new(program: &'p Program) -> Result<Self> {
        Limits::check("number of rules (bitmask width)", program.len(), MASK_WIDTH)?;
        let mut ids: HashMap<&Literal, usize> = HashMap::new();
        let mut literals = Vec::new();
        let mut intern = |l: &'p Literal| {
            *ids.entry(l).or_insert_with(|| {
                literals.push(l.clone());
                literals.len() - 1
            })
        };
        let mut heads = Vec::with_capacity(program.len());
        let mut pos = Vec::with_capacity(program.len());
        let mut neg = Vec::with_capacity(program.len());
        for rule in program.rules() {
            heads.push(intern(&rule.head));
            pos.push(rule.pos_body.iter().map(&mut intern).collect::<Vec<_>>());
            neg.push(rule.neg_body.iter().map(&mut intern).collect::<Vec<_>>());
        }
        let by_literal: HashMap<&Literal, usize> = literals.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let complement = literals
            .iter()
            .map(|l| by_literal.get(&l.complement()).copied())
            .collect();

        let mut suppliers = vec![0u64; literals.len()];
        for (i, &h) in heads.iter().enumerate() {
            suppliers[h] |= 1 << i;
        }
        let mut defeats = vec![0u64; program.len()];
        for (i, &h) in heads.iter().enumerate() {
            for (j, body) in neg.iter().enumerate() {
                if body.contains(&h) {
                    defeats[i] |= 1 << j;
                }
            }
        }
        Ok(Self {
            program,
            literals,
            complement,
            heads,
            pos,
            neg,
            suppliers,
            defeats,
            all: RuleSet::full(program.len()),
        })
    }

    pub fn program(&self) -> &'p Program {
        self.program
    }

    pub fn len(&self) -> usize {
        self.heads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heads.is_empty()
    }

    pub fn all(&self) -> RuleSet {
        self.all
    }

    pub fn rule(&self, i: usize) -> &'p Rule {
        &self.program.rules()[i]
    }

    /// Rules whose negative body meets `head(attackers)`.
    pub fn defeated_by(&self, attackers: RuleSet) -> RuleSet {
        RuleSet(attackers.iter().fold(0, |acc, i| acc | self.defeats[i]))
    }

    /// Set-level defeat: some member of `attacker` defeats some member of
    /// `target`. Singletons give the rule-level relation.
    pub fn defeats(&self, attacker: RuleSet, target: RuleSet) -> bool {
        self.defeated_by(attacker).intersects(target)
    }

    pub fn heads(&self, rules: RuleSet) -> LiteralSet {
        rules.iter().map(|i| &self.literals[self.heads[i]]).collect()
    }

    pub fn heads_consistent(&self, rules: RuleSet) -> bool {
        let mut seen = vec![false; self.literals.len()];
        for i in rules.iter() {
            seen[self.heads[i]] = true;
        }
        rules.iter().all(|i| match self.complement[self.heads[i]] {
            Some(c) => !seen[c],
            None => true,
        })
    }

    /// `GR_S(P)`: rules whose positive body lies in `s` and whose negative
    /// body avoids `s`.
    pub fn gr(&self, s: &LiteralSet) -> RuleSet {
        let inside: Vec<bool> = self.literals.iter().map(|l| s.contains(l)).collect();
        let mut out = RuleSet::EMPTY;
        for i in 0..self.len() {
            if self.pos[i].iter().all(|&l| inside[l]) && !self.neg[i].iter().any(|&l| inside[l]) {
                out.insert(i);
            }
        }
        out
    }

    /// Least set of rules from `rules` closed under positive support;
    /// negative bodies are ignored.
    pub fn minpos(&self, rules: RuleSet) -> RuleSet {
        let mut applied = 0u64;
        loop {
            let mut changed = false;
            for i in RuleSet(rules.0 & !applied).iter() {
                if self.pos[i].iter().all(|&l| self.suppliers[l] & applied != 0) {
                    applied |= 1 << i;
                    changed = true;
                }
            }
            if !changed {
                return RuleSet(applied);
            }
        }
    }

    pub fn is_fragment(&self, rules: RuleSet) -> bool {
        self.minpos(rules) == rules
    }

    /// `P^R`: the program without the rules defeated by `r`.
    pub fn reduct(&self, r: RuleSet) -> RuleSet {
        self.all.difference(self.defeated_by(r))
    }

    pub fn is_generating(&self, r: RuleSet) -> bool {
        self.minpos(self.reduct(r)) == r
    }

    /// Every generating set, in increasing bitmask order. Heads may be
    /// inconsistent.
    pub fn generating_sets(&self, limits: &Limits) -> Result<Vec<RuleSet>> {
        self.subsets("number of rules", limits.max_rules)
            .map(|it| it.filter(|&r| self.is_generating(r)).collect())
    }

    pub fn answer_sets(&self, limits: &Limits) -> Result<Vec<AnswerSet>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for r in self.generating_sets(limits)? {
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

    /// All rule subsets in bitmask order, after checking the bound.
    pub(crate) fn subsets(&self, what: &'static str, limit: usize) -> Result<impl Iterator<Item = RuleSet>> {
        Limits::check(what, self.len(), limit.min(MASK_WIDTH - 1))?;
        Ok((0..=self.all.0).map(RuleSet))
    }
}

pub fn generating_sets(p: &Program, limits: &Limits) -> Result<Vec<RuleSet>> {
    Compiled::new(p)?.generating_sets(limits)
}

pub fn answer_sets(p: &Program, limits: &Limits) -> Result<Vec<AnswerSet>> {
    Compiled::new(p)?.answer_sets(limits)
}

/// Answer sets by the classic guess-and-check: each consistent candidate
/// built from head literals is accepted iff it equals the least model of
/// the program with rules blocked by the candidate deleted and remaining
/// negative bodies dropped. Shares no code with the generating-set route.
pub fn gl_answer_sets(p: &Program, limits: &Limits) -> Result<Vec<LiteralSet>> {
    Limits::check("number of atoms", p.atoms().len(), limits.max_atoms)?;

    // per head atom: the literals it may contribute (absent is always an option)
    let mut choices: Vec<Vec<Literal>> = Vec::new();
    let head_atoms: BTreeSet<_> = p.rules().iter().map(|r| &r.head.atom).collect();
    for atom in head_atoms {
        let options: Vec<Literal> = p
            .rules()
            .iter()
            .map(|r| &r.head)
            .filter(|h| &h.atom == atom)
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        choices.push(options);
    }

    let mut found = BTreeSet::new();
    let mut digits = vec![0usize; choices.len()];
    loop {
        let candidate: BTreeSet<Literal> = digits
            .iter()
            .zip(&choices)
            .filter(|(&d, _)| d > 0)
            .map(|(&d, opts)| opts[d - 1].clone())
            .collect();
        if gl_least_model(p, &candidate) == candidate {
            found.insert(candidate.into_iter().collect::<LiteralSet>());
        }
        // mixed-radix increment; digit k ranges over 0..=choices[k].len()
        let mut k = 0;
        loop {
            if k == digits.len() {
                return Ok(found.into_iter().collect());
            }
            digits[k] += 1;
            if digits[k] <= choices[k].len() {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

fn gl_least_model(p: &Program, candidate: &BTreeSet<Literal>) -> BTreeSet<Literal> {
    let kept: Vec<&Rule> = p.rules().iter().filter(|r| r.neg_body.is_disjoint(candidate)).collect();
    let mut model = BTreeSet::new();
    loop {
        let before = model.len();
        for r in &kept {
            if r.pos_body.is_subset(&model) {
                model.insert(r.head.clone());
            }
        }
        if model.len() == before {
            return model;
        }
    }
}

/// Consistent answer sets of a plain program of any size. Guesses which
/// literals occurring under `not` are true; each guess fixes the reduct, whose
/// least model must reproduce the guess. Exponential only in the number of
/// distinct negated literals.
pub fn stable_models(p: &Program, limits: &Limits) -> Result<Vec<LiteralSet>> {
    let mut ids: HashMap<&Literal, usize> = HashMap::new();
    let mut literals: Vec<&Literal> = Vec::new();
    for l in p.rules().iter().flat_map(Rule::literals) {
        ids.entry(l).or_insert_with(|| {
            literals.push(l);
            literals.len() - 1
        });
    }
    let negated: Vec<usize> = p
        .rules()
        .iter()
        .flat_map(|r| r.neg_body.iter())
        .map(|l| ids[l])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Limits::check(
        "number of negated literals",
        negated.len(),
        limits.max_guess_literals.min(MASK_WIDTH - 1),
    )?;
    let mut slot = vec![usize::MAX; literals.len()];
    for (k, &l) in negated.iter().enumerate() {
        slot[l] = k;
    }
    let complement: Vec<Option<usize>> = literals.iter().map(|l| ids.get(&l.complement()).copied()).collect();

    struct Compact {
        head: usize,
        pos: Vec<usize>,
        neg_mask: u64,
    }
    let rules: Vec<Compact> = p
        .rules()
        .iter()
        .map(|r| Compact {
            head: ids[&r.head],
            pos: r.pos_body.iter().map(|l| ids[l]).collect(),
            neg_mask: r.neg_body.iter().fold(0, |m, l| m | 1 << slot[ids[l]]),
        })
        .collect();
    let mut watchers: Vec<Vec<usize>> = vec![Vec::new(); literals.len()];
    for (i, r) in rules.iter().enumerate() {
        for &l in &r.pos {
            watchers[l].push(i);
        }
    }

    let mut out = Vec::new();
    let mut missing = vec![0usize; rules.len()];
    let mut model = vec![false; literals.len()];
    let mut queue = Vec::new();
    for guess in 0..(1u64 << negated.len()) {
        model.iter_mut().for_each(|m| *m = false);
        queue.clear();
        for (i, r) in rules.iter().enumerate() {
            missing[i] = if r.neg_mask & guess != 0 {
                usize::MAX
            } else {
                r.pos.len()
            };
            if missing[i] == 0 {
                queue.push(r.head);
            }
        }
        while let Some(l) = queue.pop() {
            if model[l] {
                continue;
            }
            model[l] = true;
            for &i in &watchers[l] {
                if missing[i] != usize::MAX {
                    missing[i] -= 1;
                    if missing[i] == 0 {
                        queue.push(rules[i].head);
                    }
                }
            }
        }
        let reproduced = negated
            .iter()
            .enumerate()
            .all(|(k, &l)| model[l] == (guess & (1 << k) != 0));
        let consistent = (0..literals.len()).all(|l| !model[l] || complement[l].is_none_or(|c| !model[c]));
        if reproduced && consistent {
            out.push(
                (0..literals.len())
                    .filter(|&l| model[l])
                    .map(|l| literals[l])
                    .collect::<LiteralSet>(),
            );
        }
    }
    out.sort();
    Ok(out)
}

/// No dependency cycle passes through default negation. Nodes are
/// classical literals (`a` and `-a` are distinct); edges run from a rule's
/// head to each body literal.
pub fn is_stratified(p: &Program) -> bool {
    let mut graph: DiGraph<(), bool> = DiGraph::new();
    let mut nodes = HashMap::new();
    let mut node = |g: &mut DiGraph<(), bool>, l: &Literal| *nodes.entry(l.clone()).or_insert_with(|| g.add_node(()));
    let mut negative_edges = Vec::new();
    for r in p.rules() {
        let h = node(&mut graph, &r.head);
        for l in &r.pos_body {
            let b = node(&mut graph, l);
            graph.add_edge(h, b, false);
        }
        for l in &r.neg_body {
            let b = node(&mut graph, l);
            graph.add_edge(h, b, true);
            negative_edges.push((h, b));
        }
    }
    let mut component = vec![0usize; graph.node_count()];
    for (c, scc) in tarjan_scc(&graph).into_iter().enumerate() {
        for n in scc {
            component[n.index()] = c;
        }
    }
    negative_edges
        .iter()
        .all(|(h, b)| component[h.index()] != component[b.index()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures;
    use crate::syntax::parse_program;

    fn program(text: &str) -> Program {
        parse_program(text).unwrap().program
    }

    fn set(c: &Compiled, labels: &[&str]) -> RuleSet {
        RuleSet::from_labels(c.program(), labels.iter().copied()).unwrap()
    }

    fn family(sets: &[&[&str]]) -> Vec<LiteralSet> {
        let mut v: Vec<LiteralSet> = sets.iter().map(|s| LiteralSet::of(s)).collect();
        v.sort();
        v
    }

    #[test]
    fn defeat_relation() {
        let p = program(fixtures::RUNNING);
        let c = Compiled::new(&p).unwrap();
        assert!(c.defeats(set(&c, &["r1"]), set(&c, &["r3"])));
        assert!(!c.defeats(set(&c, &["r2"]), set(&c, &["r3"])));
        assert!(!c.defeats(RuleSet::EMPTY, set(&c, &["r1"])));
        assert!(!c.defeats(RuleSet::EMPTY, c.all()));
        // rule-level helper agrees
        assert!(p.rules()[0].defeats(&p.rules()[2]));
        assert!(!p.rules()[1].defeats(&p.rules()[2]));
    }

    #[test]
    fn gr_examples() {
        let p = program(fixtures::GENERATING);
        let c = Compiled::new(&p).unwrap();
        assert_eq!(c.gr(&LiteralSet::of(&["a"])), set(&c, &["r1"]));
        // S = {}: rules with empty positive body
        assert_eq!(c.gr(&LiteralSet::new()), set(&c, &["r1", "r3"]));

        let car = program(fixtures::CAR);
        let c = Compiled::new(&car).unwrap();
        let s2 = LiteralSet::of(&["nice(car_1)", "safe(car_2)", "-rec(car_1)", "rec(car_2)"]);
        assert_eq!(c.gr(&s2), set(&c, &["r1", "r2", "u4", "u2"]));
    }

    #[test]
    fn minpos_examples() {
        let p = program(fixtures::MINPOS);
        let c = Compiled::new(&p).unwrap();
        assert_eq!(c.minpos(c.all()), set(&c, &["r1", "r2"]));
        assert_eq!(c.minpos(RuleSet::EMPTY), RuleSet::EMPTY);

        let p = program("r1: a :- a.");
        let c = Compiled::new(&p).unwrap();
        assert_eq!(c.minpos(c.all()), RuleSet::EMPTY);
    }

    #[test]
    fn reduct_examples() {
        let p = program(fixtures::GENERATING);
        let c = Compiled::new(&p).unwrap();
        assert_eq!(c.reduct(set(&c, &["r1"])), set(&c, &["r1", "r2"]));
        assert_eq!(c.reduct(RuleSet::EMPTY), c.all());

        let p = program(fixtures::RUNNING);
        let c = Compiled::new(&p).unwrap();
        assert_eq!(c.reduct(set(&c, &["r3"])), set(&c, &["r1", "r3"]));
    }

    #[test]
    fn generating_examples() {
        let p = program(fixtures::GENERATING);
        let c = Compiled::new(&p).unwrap();
        assert!(c.is_generating(set(&c, &["r1"])));

        let p = program(fixtures::RUNNING);
        let c = Compiled::new(&p).unwrap();
        assert!(c.is_generating(set(&c, &["r1", "r2"])));
        assert!(!c.is_generating(set(&c, &["r2"])));
        // the empty set generates only when nothing is applicable from scratch
        assert!(!c.is_generating(RuleSet::EMPTY));
        let p = program("r1: a :- b.");
        assert!(Compiled::new(&p).unwrap().is_generating(RuleSet::EMPTY));
    }

    #[test]
    fn generating_sets_running_and_car() {
        let p = program(fixtures::RUNNING);
        let c = Compiled::new(&p).unwrap();
        assert_eq!(
            c.generating_sets(&Limits::default()).unwrap(),
            vec![set(&c, &["r1", "r2"]), set(&c, &["r3"])]
        );

        let empty = Program::default();
        assert_eq!(
            generating_sets(&empty, &Limits::default()).unwrap(),
            vec![RuleSet::EMPTY]
        );

        let car = program(fixtures::CAR);
        let c = Compiled::new(&car).unwrap();
        let mut got = c.generating_sets(&Limits::default()).unwrap();
        got.sort();
        let mut want = vec![set(&c, &["r1", "r2", "r3", "u1"]), set(&c, &["r1", "r2", "u4", "u2"])];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn answer_set_examples() {
        let limits = Limits::default();
        let p = program(fixtures::GENERATING);
        let got: Vec<_> = answer_sets(&p, &limits)
            .unwrap()
            .into_iter()
            .map(|a| a.literals)
            .collect();
        assert!(got.contains(&LiteralSet::of(&["a"])));

        let car = program(fixtures::CAR);
        let mut got: Vec<_> = answer_sets(&car, &limits)
            .unwrap()
            .into_iter()
            .map(|a| a.literals)
            .collect();
        got.sort();
        assert_eq!(
            got,
            family(&[
                &["nice(car_1)", "safe(car_2)", "rec(car_1)", "-rec(car_2)"],
                &["nice(car_1)", "safe(car_2)", "-rec(car_1)", "rec(car_2)"],
            ])
        );

        let p3x = program(fixtures::PRINCIPLE3_EXTENDED);
        let got: Vec<_> = answer_sets(&p3x, &limits)
            .unwrap()
            .into_iter()
            .map(|a| a.literals)
            .collect();
        assert_eq!(got, family(&[&["-select(a)"]]));
    }

    #[test]
    fn inconsistent_generating_sets_are_not_answer_sets() {
        let p = program("r1: a.\nr2: -a.");
        let limits = Limits::default();
        assert_eq!(generating_sets(&p, &limits).unwrap(), vec![RuleSet::from_bits(0b11)]);
        assert!(answer_sets(&p, &limits).unwrap().is_empty());
        assert!(gl_answer_sets(&p, &limits).unwrap().is_empty());
        assert!(stable_models(&p, &limits).unwrap().is_empty());
    }

    #[test]
    fn gl_oracle_examples() {
        let limits = Limits::default();
        assert_eq!(
            gl_answer_sets(&program(fixtures::RUNNING), &limits).unwrap(),
            family(&[&["a", "x"], &["b"]])
        );
        assert_eq!(
            gl_answer_sets(&Program::default(), &limits).unwrap(),
            vec![LiteralSet::new()]
        );
        assert_eq!(
            gl_answer_sets(&program(fixtures::GENERATING), &limits).unwrap(),
            family(&[&["a"], &["b"]])
        );
    }

    #[test]
    fn stable_models_examples() {
        let limits = Limits::default();
        assert_eq!(
            stable_models(&program(fixtures::RUNNING), &limits).unwrap(),
            family(&[&["a", "x"], &["b"]])
        );
        assert_eq!(
            stable_models(&program(fixtures::PRINCIPLE3_EXTENDED), &limits).unwrap(),
            family(&[&["-select(a)"]])
        );
        assert_eq!(
            stable_models(&Program::default(), &limits).unwrap(),
            vec![LiteralSet::new()]
        );
        // odd loop: no answer set
        assert!(stable_models(&program("r1: a :- not a."), &limits).unwrap().is_empty());
    }

    #[test]
    fn bounds_are_enforced() {
        let limits = Limits {
            max_rules: 2,
            max_atoms: 1,
            max_guess_literals: 1,
            ..Limits::default()
        };
        let p = program(fixtures::RUNNING);
        assert!(matches!(answer_sets(&p, &limits), Err(Error::BoundExceeded { .. })));
        assert!(matches!(gl_answer_sets(&p, &limits), Err(Error::BoundExceeded { .. })));
        assert!(matches!(stable_models(&p, &limits), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn stratification() {
        assert!(is_stratified(&program(fixtures::BREWKA_EITER)));
        assert!(!is_stratified(&program(fixtures::RUNNING)));
        assert!(is_stratified(&Program::default()));
        assert!(!is_stratified(&program("r1: a :- not a.")));
        // positive cycles are fine
        assert!(is_stratified(&program("r1: a :- b.\nr2: b :- a.\nr3: c :- not a.")));
        // a and -a are separate nodes
        assert!(is_stratified(&program("r1: a :- not -a.")));
    }

    #[test]
    fn literal_set_display_and_consistency() {
        let s = LiteralSet::of(&["rec(car_2)", "-rec(car_1)", "safe(car_2)", "nice(car_1)"]);
        assert_eq!(s.to_string(), "{-rec(car_1), nice(car_1), rec(car_2), safe(car_2)}");
        assert!(s.is_consistent());
        assert!(!LiteralSet::of(&["a", "b", "-a"]).is_consistent());
        assert_eq!(LiteralSet::new().to_string(), "{}");
    }
}
