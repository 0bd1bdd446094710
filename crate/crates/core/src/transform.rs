//! Rewriting of a program with preferences into a plain program whose
//! answer sets, restricted to the source atoms, are exactly the
//! GNO-preferred answer sets.
//!
//! For every rule `r` the rewrite emits
//!
//! 1. `head(r) :- n_r.`
//! 2. `n_r :- body+(r), not x^r ...` for `x` in `body-(r)`
//! 3. `head(p)^r :- body+(p)^r, n_p.` for every `p` with `p` not below `r`
//! 4. `inc :- n_r, x, not inc.` for `x` in `body-(r)`
//!
//! Generated atoms live in the reserved `__` namespace: `__n_<label>`,
//! `__s_<label>_<atom>`, `__s_<label>_neg_<atom>` and `__inc`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::base::{stable_models, LiteralSet, RuleSet};
use crate::error::{Error, Result};
use crate::gno::GnoOptions;
use crate::limits::Limits;
use crate::ranked::PrefCompiled;
use crate::syntax::{Atom, Literal, PrefProgram, Program, Rule, RuleId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    /// `head(r) :- n_r.`
    Head,
    /// `n_r :- body+(r), not body-(r)^r.`
    Name,
    /// `head(p)^r :- body+(p)^r, n_p.`
    Shadow,
    /// `inc :- n_r, x, not inc.`
    Constraint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformedProgram {
    program: Program,
    forms: Vec<Form>,
    source_atoms: BTreeSet<Atom>,
    /// `n_r`, by source rule position
    name_atoms: Vec<Atom>,
    /// `x^r`, keyed by (x, position of r)
    shadow_atoms: BTreeMap<(Literal, usize), Atom>,
    inc_atom: Atom,
    source_labels: Vec<RuleId>,
}

impl TransformedProgram {
    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn form(&self, i: usize) -> Form {
        self.forms[i]
    }

    pub fn count(&self, form: Form) -> usize {
        self.forms.iter().filter(|&&f| f == form).count()
    }

    pub fn name_atom(&self, label: &RuleId) -> Option<&Atom> {
        let i = self.source_labels.iter().position(|l| l == label)?;
        Some(&self.name_atoms[i])
    }

    pub fn name_atoms(&self) -> BTreeMap<&RuleId, &Atom> {
        self.source_labels.iter().zip(&self.name_atoms).collect()
    }

    pub fn shadow_atom(&self, literal: &Literal, label: &RuleId) -> Option<&Atom> {
        let i = self.source_labels.iter().position(|l| l == label)?;
        self.shadow_atoms.get(&(literal.clone(), i))
    }

    pub fn shadow_atoms(&self) -> impl Iterator<Item = ((&Literal, &RuleId), &Atom)> {
        self.shadow_atoms
            .iter()
            .map(|((l, r), a)| ((l, &self.source_labels[*r]), a))
    }

    pub fn inc_atom(&self) -> &Atom {
        &self.inc_atom
    }

    pub fn source_atoms(&self) -> &BTreeSet<Atom> {
        &self.source_atoms
    }

    fn shadow(&self, literal: &Literal, r: usize) -> Literal {
        let atom = self
            .shadow_atoms
            .get(&(literal.clone(), r))
            .unwrap_or_else(|| panic!("no shadow of {literal} for rule {}", self.source_labels[r]));
        Literal::pos(atom.clone())
    }
}

impl fmt::Display for TransformedProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.program)
    }
}

/// Hands out names, appending `_<k>` when the preferred spelling is taken.
#[derive(Default)]
struct Fresh {
    used: HashSet<String>,
}

impl Fresh {
    fn take(&mut self, base: String) -> String {
        if self.used.insert(base.clone()) {
            return base;
        }
        (1..)
            .map(|k| format!("{base}_{k}"))
            .find(|name| self.used.insert(name.clone()))
            .expect("unbounded suffixes")
    }
}

/// `a(x)` -> `__s_r_a(x)`: the label and sign go into the stem so that the
/// argument list stays at the end.
fn shadow_base(label: &RuleId, literal: &Literal) -> String {
    let sign = if literal.positive { "" } else { "neg_" };
    format!("__s_{label}_{sign}{}", literal.atom)
}

pub fn transform(lpp: &PrefProgram) -> TransformedProgram {
    let src = lpp.program();
    let prefs = lpp.preferences();
    let rules = src.rules();
    let n = rules.len();

    let mut atoms = Fresh::default();
    let mut labels = Fresh::default();
    for a in src.atoms() {
        atoms.used.insert(a.name().to_owned());
    }
    let atom = |fresh: &mut Fresh, base: String| {
        Atom::reserved(fresh.take(base)).expect("generated atom names are well formed")
    };

    let name_atoms: Vec<Atom> = rules
        .iter()
        .map(|r| atom(&mut atoms, format!("__n_{}", r.label)))
        .collect();
    let mut shadow_atoms: BTreeMap<(Literal, usize), Atom> = BTreeMap::new();
    let mut shadow = |atoms: &mut Fresh, l: &Literal, r: usize| -> Literal {
        let a = shadow_atoms
            .entry((l.clone(), r))
            .or_insert_with(|| atom(atoms, shadow_base(&rules[r].label, l)));
        Literal::pos(a.clone())
    };

    let mut out: Vec<(Form, Rule)> = Vec::new();
    for (r, rule) in rules.iter().enumerate() {
        out.push((
            Form::Head,
            Rule::new(
                labels.take(format!("h_{}", rule.label)),
                rule.head.clone(),
                [Literal::pos(name_atoms[r].clone())],
                [],
            ),
        ));
    }
    for (r, rule) in rules.iter().enumerate() {
        let neg: Vec<Literal> = rule.neg_body.iter().map(|x| shadow(&mut atoms, x, r)).collect();
        out.push((
            Form::Name,
            Rule::new(
                labels.take(format!("n_{}", rule.label)),
                Literal::pos(name_atoms[r].clone()),
                rule.pos_body.iter().cloned(),
                neg,
            ),
        ));
    }
    for (p, prule) in rules.iter().enumerate() {
        for (r, rrule) in rules.iter().enumerate() {
            if prefs.less(p, r) {
                continue;
            }
            let head = shadow(&mut atoms, &prule.head, r);
            let mut body: Vec<Literal> = prule.pos_body.iter().map(|l| shadow(&mut atoms, l, r)).collect();
            body.push(Literal::pos(name_atoms[p].clone()));
            out.push((
                Form::Shadow,
                Rule::new(
                    labels.take(format!("s_{}_{}", rrule.label, prule.label)),
                    head,
                    body,
                    [],
                ),
            ));
        }
    }
    // `inc` is allocated last so user atoms and other generated names win
    let inc_atom = atom(&mut atoms, "__inc".to_owned());
    let inc = Literal::pos(inc_atom.clone());
    for (r, rule) in rules.iter().enumerate() {
        for (k, x) in rule.neg_body.iter().enumerate() {
            out.push((
                Form::Constraint,
                Rule::new(
                    labels.take(format!("c_{}_{}", rule.label, k + 1)),
                    inc.clone(),
                    [Literal::pos(name_atoms[r].clone()), x.clone()],
                    [inc.clone()],
                ),
            ));
        }
    }

    let (forms, rules_out): (Vec<Form>, Vec<Rule>) = out.into_iter().unzip();
    let program = Program::new(rules_out).expect("transformed rules have distinct labels and shapes");
    debug_assert_eq!(program.len(), expected_rule_count(lpp));
    TransformedProgram {
        program,
        forms,
        source_atoms: src.atoms().into_iter().cloned().collect(),
        name_atoms,
        shadow_atoms,
        inc_atom,
        source_labels: (0..n).map(|i| rules[i].label.clone()).collect(),
    }
}

/// `2|P| + |{(p, r) : p not below r}| + sum of |body-(r)|`.
pub fn expected_rule_count(lpp: &PrefProgram) -> usize {
    let n = lpp.program().len();
    let negs: usize = lpp.program().rules().iter().map(|r| r.neg_body.len()).sum();
    2 * n + (n * n - lpp.preferences().len()) + negs
}

/// Restriction to literals over source atoms.
pub fn project(a: &LiteralSet, t: &TransformedProgram) -> LiteralSet {
    a.iter().filter(|l| t.source_atoms.contains(&l.atom)).collect()
}

/// `S ∪ {n_r : r ∈ R} ∪ ⋃_r head(trules(r, R))^r` with `R = GR_S(P)`.
/// Refuses `s` unless it is a GNO-preferred answer set.
pub fn embed(s: &LiteralSet, lpp: &PrefProgram, t: &TransformedProgram, limits: &Limits) -> Result<LiteralSet> {
    let pc = PrefCompiled::new(lpp)?;
    let preferred = pc.preferred_answer_sets_gno(limits, GnoOptions::default())?;
    if !preferred.iter().any(|a| &a.literals == s) {
        return Err(Error::NotPreferred(s.to_string()));
    }
    Ok(embed_unchecked(s, &pc, t))
}

fn embed_unchecked(s: &LiteralSet, pc: &PrefCompiled, t: &TransformedProgram) -> LiteralSet {
    let r = pc.gr(s);
    let mut a = s.clone();
    for i in r.iter() {
        a.insert(Literal::pos(t.name_atoms[i].clone()));
    }
    for q in pc.all().iter() {
        for l in pc.heads(pc.trules(q, r)) {
            a.insert(t.shadow(&l, q));
        }
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mismatch {
    RuleCount {
        expected: usize,
        actual: usize,
    },
    /// preferred under GNO, but no answer set of the transform projects to it
    MissingFromTransform {
        set: LiteralSet,
    },
    /// an answer set of the transform projects to a non-preferred set
    ExtraFromTransform {
        set: LiteralSet,
    },
    /// an answer set of the transform is not the embedding of its projection
    Embedding {
        answer_set: LiteralSet,
        embedded: LiteralSet,
    },
    /// an answer set contains `n_r` together with a member of `body-(r)`
    NameWithBlocker {
        answer_set: LiteralSet,
        rule: RuleId,
        literal: Literal,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceReport {
    pub transformed_rules: usize,
    pub transformed_answer_sets: Vec<LiteralSet>,
    pub projected: Vec<LiteralSet>,
    pub preferred: Vec<LiteralSet>,
    pub mismatches: Vec<Mismatch>,
}

impl CorrespondenceReport {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Solves both sides independently (the transform with the guess-based
/// stable model search, the source with the GNO solver) and compares them
/// set by set, including the exact shape of each transformed answer set.
pub fn check_correspondence(lpp: &PrefProgram, limits: &Limits) -> Result<CorrespondenceReport> {
    let t = transform(lpp);
    let pc = PrefCompiled::new(lpp)?;
    let mut mismatches = Vec::new();

    let expected = expected_rule_count(lpp);
    if t.program.len() != expected {
        mismatches.push(Mismatch::RuleCount {
            expected,
            actual: t.program.len(),
        });
    }

    let transformed = stable_models(&t.program, limits)?;
    let preferred: BTreeSet<LiteralSet> = pc
        .preferred_answer_sets_gno(limits, GnoOptions::default())?
        .into_iter()
        .map(|a| a.literals)
        .collect();
    let projected: BTreeSet<LiteralSet> = transformed.iter().map(|a| project(a, &t)).collect();

    for s in preferred.difference(&projected) {
        mismatches.push(Mismatch::MissingFromTransform { set: s.clone() });
    }
    for s in projected.difference(&preferred) {
        mismatches.push(Mismatch::ExtraFromTransform { set: s.clone() });
    }
    for a in &transformed {
        let embedded = embed_unchecked(&project(a, &t), &pc, &t);
        if &embedded != a {
            mismatches.push(Mismatch::Embedding {
                answer_set: a.clone(),
                embedded,
            });
        }
        for (i, rule) in lpp.program().rules().iter().enumerate() {
            if !a.contains(&Literal::pos(t.name_atoms[i].clone())) {
                continue;
            }
            if let Some(x) = rule.neg_body.iter().find(|x| a.contains(x)) {
                mismatches.push(Mismatch::NameWithBlocker {
                    answer_set: a.clone(),
                    rule: rule.label.clone(),
                    literal: x.clone(),
                });
            }
        }
    }

    Ok(CorrespondenceReport {
        transformed_rules: t.program.len(),
        transformed_answer_sets: transformed,
        projected: projected.into_iter().collect(),
        preferred: preferred.into_iter().collect(),
        mismatches,
    })
}

/// Used by tests that need a rule set of the source program.
#[doc(hidden)]
pub fn generating_set_of(lpp: &PrefProgram, s: &LiteralSet) -> Result<RuleSet> {
    Ok(PrefCompiled::new(lpp)?.gr(s))
}
