//! Executable checks of the expected properties of the semantics, a seeded
//! random program generator, and a parallel fuzz driver over both.
//!
//! Every [`Violation`] carries enough evidence to be re-checked on its own
//! with [`Violation::recheck`].

mod checks;
mod fuzz;
mod generate;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::base::{LiteralSet, RuleSet};
use crate::error::Result;
use crate::limits::Limits;
use crate::ranked::PrefCompiled;
use crate::solve::{preferred_family, Semantics};
use crate::syntax::{PrefProgram, RuleId};
use crate::transform::{check_correspondence, Mismatch};

pub use checks::{
    check_empty_preferences, check_hierarchy, check_monotonicity, check_override_asymmetry, check_pas_subset_as,
    check_principle_1, check_principle_23_fixtures, check_strat_equivalence, check_transform, FixtureFamilies,
    FixtureReport,
};
pub use fuzz::{check_program, fuzz, weaken_preferences, FuzzReport, SeededError, SeededViolation, Strictness};
pub use generate::{random_lpp, GenParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Principle1,
    Hierarchy,
    StratEq,
    EmptyPref,
    Monotonicity,
    TransformEq,
    OverrideAsym,
    PasSubsetAs,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::Principle1,
        Property::Hierarchy,
        Property::StratEq,
        Property::EmptyPref,
        Property::Monotonicity,
        Property::TransformEq,
        Property::OverrideAsym,
        Property::PasSubsetAs,
    ];

    /// Command-line spelling.
    pub fn name(self) -> &'static str {
        match self {
            Property::Principle1 => "principle1",
            Property::Hierarchy => "hierarchy",
            Property::StratEq => "strat-eq",
            Property::EmptyPref => "empty-pref",
            Property::Monotonicity => "monotonicity",
            Property::TransformEq => "transform-eq",
            Property::OverrideAsym => "override-asym",
            Property::PasSubsetAs => "pas-subset-as",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let wanted = s.replace('_', "-");
        Property::ALL.into_iter().find(|p| p.name() == wanted).ok_or_else(|| {
            let names: Vec<_> = Property::ALL.iter().map(|p| p.name()).collect();
            format!("unknown property `{s}` (expected one of {}, all)", names.join(", "))
        })
    }
}

/// What went wrong, in terms that can be checked again from scratch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    /// `s2` is preferred although the generating sets of `s1` and `s2`
    /// differ only in `r1` versus the less preferred `r2`.
    Principle1 {
        semantics: Semantics,
        s1: LiteralSet,
        s2: LiteralSet,
        r1: RuleId,
        r2: RuleId,
    },
    /// `set` belongs to the `sub` family but not to the `sup` family.
    NotIncluded {
        sub: Semantics,
        sup: Semantics,
        set: LiteralSet,
    },
    /// Two families that should coincide do not.
    NotEqual {
        left: Semantics,
        right: Semantics,
        only_left: Vec<LiteralSet>,
        only_right: Vec<LiteralSet>,
    },
    /// `set` is preferred under the `stronger` relation but not under the
    /// program's own, which is contained in it.
    NotMonotone {
        semantics: Semantics,
        stronger: Vec<(RuleId, RuleId)>,
        set: LiteralSet,
    },
    Transform {
        mismatches: Vec<Mismatch>,
    },
    /// Fragments that override each other.
    MutualOverride {
        x: Vec<RuleId>,
        y: Vec<RuleId>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: Property,
    #[serde(serialize_with = "program_text")]
    pub program: PrefProgram,
    pub evidence: Evidence,
}

fn program_text<S: Serializer>(p: &PrefProgram, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.kind)?;
        match &self.evidence {
            Evidence::Principle1 { semantics, s1, s2, r1, r2 } => write!(
                f,
                "{s2} is {semantics}-preferred but differs from answer set {s1} only by using {r2} in place of {r1}, and {r2} < {r1}"
            )?,
            Evidence::NotIncluded { sub, sup, set } => write!(f, "{set} is in {sub} but not in {sup}")?,
            Evidence::NotEqual { left, right, only_left, only_right } => {
                let show = |v: &[LiteralSet]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                write!(f, "{left} and {right} differ; only {left}: [{}]; only {right}: [{}]", show(only_left), show(only_right))?
            }
            Evidence::NotMonotone { semantics, stronger, set } => {
                let pairs: Vec<String> = stronger.iter().map(|(lo, hi)| format!("{lo} < {hi}")).collect();
                write!(f, "{set} is {semantics}-preferred under [{}] but not under the weaker relation", pairs.join(", "))?
            }
            Evidence::Transform { mismatches } => write!(f, "{} transform mismatch(es): {mismatches:?}", mismatches.len())?,
            Evidence::MutualOverride { x, y } => write!(f, "{{{}}} and {{{}}} override each other", join(x), join(y))?,
        }
        write!(f, "\n{}", self.program)
    }
}

fn join(labels: &[RuleId]) -> String {
    labels.iter().map(RuleId::as_str).collect::<Vec<_>>().join(", ")
}

fn rule_set(pc: &PrefCompiled, labels: &[RuleId]) -> Option<RuleSet> {
    RuleSet::from_labels(pc.program(), labels.iter().map(RuleId::as_str))
}

impl Violation {
    /// Re-derives the violation from the program and the evidence alone.
    /// `Ok(false)` means the evidence does not demonstrate a violation.
    pub fn recheck(&self, limits: &Limits) -> Result<bool> {
        let lpp = &self.program;
        Ok(match &self.evidence {
            Evidence::Principle1 {
                semantics,
                s1,
                s2,
                r1,
                r2,
            } => {
                let pc = PrefCompiled::new(lpp)?;
                let (Some(i1), Some(i2)) = (pc.program().position(r1), pc.program().position(r2)) else {
                    return Ok(false);
                };
                let (g1, g2) = (pc.gr(s1), pc.gr(s2));
                let is_answer =
                    |g: RuleSet, s: &LiteralSet| pc.is_generating(g) && pc.heads_consistent(g) && &pc.heads(g) == s;
                is_answer(g1, s1)
                    && is_answer(g2, s2)
                    && g1.difference(g2) == RuleSet::single(i1)
                    && g2.difference(g1) == RuleSet::single(i2)
                    && pc.less(i2, i1)
                    && preferred_family(lpp, *semantics, limits)?.contains(s2)
            }
            Evidence::NotIncluded { sub, sup, set } => {
                preferred_family(lpp, *sub, limits)?.contains(set)
                    && !preferred_family(lpp, *sup, limits)?.contains(set)
            }
            Evidence::NotEqual {
                left,
                right,
                only_left,
                only_right,
            } => {
                let l = preferred_family(lpp, *left, limits)?;
                let r = preferred_family(lpp, *right, limits)?;
                let (ol, or) = checks::differences(&l, &r);
                l != r && &ol == only_left && &or == only_right
            }
            Evidence::NotMonotone {
                semantics,
                stronger,
                set,
            } => {
                let strong = PrefProgram::from_labels(lpp.program().clone(), stronger)?;
                lpp.preferences().is_subset(strong.preferences())
                    && preferred_family(&strong, *semantics, limits)?.contains(set)
                    && !preferred_family(lpp, *semantics, limits)?.contains(set)
            }
            Evidence::Transform { .. } => !check_correspondence(lpp, limits)?.is_match(),
            Evidence::MutualOverride { x, y } => {
                let pc = PrefCompiled::new(lpp)?;
                match (rule_set(&pc, x), rule_set(&pc, y)) {
                    (Some(x), Some(y)) => {
                        pc.is_fragment(x) && pc.is_fragment(y) && pc.overrides(x, y) && pc.overrides(y, x)
                    }
                    _ => false,
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert_eq!("strat_eq".parse::<Property>().unwrap(), Property::StratEq);
        assert!("all".parse::<Property>().is_err());
        assert_eq!(serde_json::to_string(&Property::StratEq).unwrap(), "\"strat_eq\"");
    }
}
