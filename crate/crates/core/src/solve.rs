//! One entry point over all four semantics, with deterministic ordering.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::base::{answer_sets, stable_models, AnswerSet, LiteralSet};
use crate::error::Result;
use crate::fragment::FragmentSpace;
use crate::gno::GnoOptions;
use crate::limits::Limits;
use crate::ranked::PrefCompiled;
use crate::syntax::{PrefProgram, Program};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    As,
    D,
    G,
    Gno,
}

impl Semantics {
    pub const ALL: [Semantics; 4] = [Semantics::As, Semantics::D, Semantics::G, Semantics::Gno];
    pub const PREFERRED: [Semantics; 3] = [Semantics::D, Semantics::G, Semantics::Gno];

    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::As => "as",
            Semantics::D => "d",
            Semantics::G => "g",
            Semantics::Gno => "gno",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Semantics::ALL
            .into_iter()
            .find(|sem| sem.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown semantics `{s}` (expected as, d, g or gno)"))
    }
}

/// Why a set is (preferred) answer set: its generating set, or for `g` its
/// preferred stable fragment set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Generating(Vec<String>),
    Fragments(Vec<Vec<String>>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Generating(labels) => write!(f, "{{{}}}", labels.join(", ")),
            Witness::Fragments(members) => {
                let parts: Vec<String> = members.iter().map(|m| format!("{{{}}}", m.join(", "))).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

/// Answer sets and preferred answer sets, each family sorted by the sorted
/// string form of its sets. `witnesses[i]` belongs to `preferred[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub semantics: Semantics,
    pub answer_sets: Vec<LiteralSet>,
    pub preferred: Vec<LiteralSet>,
    pub witnesses: Vec<Witness>,
}

impl Solution {
    /// Exit-code relevant: something was found.
    pub fn found(&self) -> bool {
        !self.preferred.is_empty()
    }
}

fn sort_key(s: &LiteralSet) -> Vec<String> {
    s.sorted_strings()
}

fn sorted_family(sets: impl IntoIterator<Item = LiteralSet>) -> Vec<LiteralSet> {
    let mut v: Vec<LiteralSet> = sets.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    v.sort_by_cached_key(sort_key);
    v
}

/// Keeps the first witness per literal set, then sorts.
fn sorted_with_witness(pairs: Vec<(LiteralSet, Witness)>) -> (Vec<LiteralSet>, Vec<Witness>) {
    let mut seen = BTreeSet::new();
    let mut kept: Vec<(LiteralSet, Witness)> = pairs.into_iter().filter(|(s, _)| seen.insert(s.clone())).collect();
    kept.sort_by_cached_key(|(s, _)| sort_key(s));
    kept.into_iter().unzip()
}

/// Answer sets of a plain program of any size: the generating-set solver
/// within `max_rules`, the guess-based search beyond it (transformed
/// programs). Witnesses are `GR_S(P)`.
fn solve_plain(p: &Program, limits: &Limits) -> Result<Solution> {
    let sets: Vec<LiteralSet> = if p.len() <= limits.max_rules {
        answer_sets(p, limits)?.into_iter().map(|a| a.literals).collect()
    } else {
        stable_models(p, limits)?
    };
    let answer_sets = sorted_family(sets);
    let witnesses = answer_sets
        .iter()
        .map(|s| {
            let applicable = p
                .rules()
                .iter()
                .filter(|r| r.pos_body.iter().all(|l| s.contains(l)) && !r.neg_body.iter().any(|l| s.contains(l)));
            Witness::Generating(applicable.map(|r| r.label.to_string()).collect())
        })
        .collect();
    Ok(Solution {
        semantics: Semantics::As,
        preferred: answer_sets.clone(),
        answer_sets,
        witnesses,
    })
}

pub fn solve(lpp: &PrefProgram, semantics: Semantics, limits: &Limits) -> Result<Solution> {
    if semantics == Semantics::As {
        return solve_plain(lpp.program(), limits);
    }
    let pc = PrefCompiled::new(lpp)?;
    let p = lpp.program();
    let generating =
        |a: &AnswerSet| Witness::Generating(a.generating.labels(p).iter().map(ToString::to_string).collect());

    let base = pc.answer_sets(limits)?;
    let answer_sets = sorted_family(base.iter().map(|a| a.literals.clone()));
    let pairs: Vec<(LiteralSet, Witness)> = match semantics {
        Semantics::As => unreachable!("handled above"),
        Semantics::D => pc
            .preferred_answer_sets_d(limits)?
            .iter()
            .map(|a| (a.literals.clone(), generating(a)))
            .collect(),
        Semantics::G => FragmentSpace::new(&pc, limits)?
            .preferred(limits)?
            .into_iter()
            .map(|g| (g.answer_set.literals, Witness::Fragments(g.fragments.labels(p))))
            .collect(),
        Semantics::Gno => pc
            .preferred_answer_sets_gno(limits, GnoOptions::default())?
            .iter()
            .map(|a| (a.literals.clone(), generating(a)))
            .collect(),
    };
    let (preferred, witnesses) = sorted_with_witness(pairs);
    Ok(Solution {
        semantics,
        answer_sets,
        preferred,
        witnesses,
    })
}

/// The sorted preferred family alone (answer sets for `as`).
pub fn preferred_family(lpp: &PrefProgram, semantics: Semantics, limits: &Limits) -> Result<Vec<LiteralSet>> {
    Ok(solve(lpp, semantics, limits)?.preferred)
}

/// Preferred families of every semantics at once, as literal sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemanticsReport {
    pub answer_sets: Vec<LiteralSet>,
    pub d: Vec<LiteralSet>,
    pub g: Vec<LiteralSet>,
    pub gno: Vec<LiteralSet>,
}

impl SemanticsReport {
    pub fn get(&self, semantics: Semantics) -> &[LiteralSet] {
        match semantics {
            Semantics::As => &self.answer_sets,
            Semantics::D => &self.d,
            Semantics::G => &self.g,
            Semantics::Gno => &self.gno,
        }
    }
}

pub fn report(lpp: &PrefProgram, limits: &Limits) -> Result<SemanticsReport> {
    let pc = PrefCompiled::new(lpp)?;
    let lits = |v: Vec<AnswerSet>| sorted_family(v.into_iter().map(|a| a.literals));
    Ok(SemanticsReport {
        answer_sets: lits(pc.answer_sets(limits)?),
        d: lits(pc.preferred_answer_sets_d(limits)?),
        g: sorted_family(
            FragmentSpace::new(&pc, limits)?
                .preferred(limits)?
                .into_iter()
                .map(|g| g.answer_set.literals),
        ),
        gno: lits(pc.preferred_answer_sets_gno(limits, GnoOptions::default())?),
    })
}
