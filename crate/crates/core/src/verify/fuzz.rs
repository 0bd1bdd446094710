use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::checks::{hierarchy_with, pas_subset_as_with, principle_1_with};
use super::generate::{random_lpp, GenParams};
use super::{
    check_empty_preferences, check_monotonicity, check_override_asymmetry, check_strat_equivalence, check_transform,
    Property, Violation,
};
use crate::error::Result;
use crate::limits::Limits;
use crate::solve::{report, Semantics, SemanticsReport};
use crate::syntax::{PrefProgram, Preferences};

/// How many reproducer seeds to keep per strictness kind.
const KEEP_SEEDS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeededViolation {
    pub seed: u64,
    pub violation: Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeededError {
    pub seed: u64,
    pub error: String,
}

/// Programs on which an inclusion of the hierarchy is strict.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Strictness {
    pub gno_strictly_in_g: usize,
    pub g_strictly_in_d: usize,
    pub gno_strictly_in_g_seeds: Vec<u64>,
    pub g_strictly_in_d_seeds: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzReport {
    pub params: GenParams,
    pub count: usize,
    pub properties: Vec<Property>,
    pub violations: Vec<SeededViolation>,
    pub errors: Vec<SeededError>,
    pub strictness: Strictness,
}

impl FuzzReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.errors.is_empty()
    }

    pub fn violations_of(&self, kind: Property) -> usize {
        self.violations.iter().filter(|v| v.violation.kind == kind).count()
    }
}

/// A random sub-relation of `prefs`, closed again. Deterministic in `seed`.
pub fn weaken_preferences(prefs: &Preferences, seed: u64) -> Preferences {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let kept: Vec<(usize, usize)> = prefs.pairs().into_iter().filter(|_| rng.gen_bool(0.5)).collect();
    Preferences::closure(prefs.num_rules(), &kept).expect("a subset of an order is acyclic")
}

fn is_strict(sub: &[crate::base::LiteralSet], sup: &[crate::base::LiteralSet]) -> bool {
    let sub: BTreeSet<_> = sub.iter().collect();
    let sup: BTreeSet<_> = sup.iter().collect();
    sub.is_subset(&sup) && sub != sup
}

/// Violations found on one program, and whether GNO ⊊ G and G ⊊ D.
type ProgramOutcome = (Vec<Violation>, bool, bool);

/// Results of the selected checks on one program. Returns the violations and
/// whether GNO ⊊ G and G ⊊ D hold on it. `seed` drives the choice of the
/// weaker relation for the monotonicity check, which also always compares
/// against no preferences at all.
pub fn check_program(
    lpp: &PrefProgram,
    seed: u64,
    properties: &BTreeSet<Property>,
    limits: &Limits,
) -> Result<ProgramOutcome> {
    let families: SemanticsReport = report(lpp, limits)?;
    let mut out = Vec::new();
    for &property in properties {
        match property {
            Property::Principle1 => {
                for sem in Semantics::PREFERRED {
                    out.extend(principle_1_with(lpp, sem, families.get(sem), limits)?);
                }
            }
            Property::Hierarchy => out.extend(hierarchy_with(lpp, &families)),
            Property::PasSubsetAs => out.extend(pas_subset_as_with(lpp, &families)),
            Property::EmptyPref => out.extend(check_empty_preferences(lpp.program(), limits)?),
            Property::StratEq => out.extend(check_strat_equivalence(lpp, limits)?),
            Property::Monotonicity => {
                let none = Preferences::empty(lpp.program().len());
                out.extend(check_monotonicity(lpp.program(), &none, lpp.preferences(), limits)?);
                let weaker = weaken_preferences(lpp.preferences(), seed);
                out.extend(check_monotonicity(lpp.program(), &weaker, lpp.preferences(), limits)?);
            }
            Property::TransformEq => out.extend(check_transform(lpp, limits)?),
            Property::OverrideAsym => out.extend(check_override_asymmetry(lpp, limits)?),
        }
    }
    Ok((
        out,
        is_strict(&families.gno, &families.g),
        is_strict(&families.g, &families.d),
    ))
}

/// Runs `properties` on `count` programs with seeds `params.seed`,
/// `params.seed + 1`, ... in parallel. Output order is by seed, so the
/// report is reproducible from `params` alone.
pub fn fuzz(params: &GenParams, count: usize, properties: &BTreeSet<Property>, limits: &Limits) -> FuzzReport {
    let outcomes: Vec<(u64, Result<ProgramOutcome>)> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let seed = params.seed.wrapping_add(i);
            let lpp = random_lpp(&params.with_seed(seed));
            let mut outcome = check_program(&lpp, seed, properties, limits);
            if properties.contains(&Property::StratEq) {
                // most random programs are not stratified, so a stratified
                // sibling from the same seed keeps the check meaningful
                let sibling = random_lpp(&GenParams {
                    stratified: true,
                    ..params.with_seed(seed)
                });
                outcome = outcome.and_then(|(mut v, a, b)| {
                    v.extend(check_strat_equivalence(&sibling, limits)?);
                    Ok((v, a, b))
                });
            }
            (seed, outcome)
        })
        .collect();

    let mut report = FuzzReport {
        params: *params,
        count,
        properties: properties.iter().copied().collect(),
        violations: Vec::new(),
        errors: Vec::new(),
        strictness: Strictness::default(),
    };
    for (seed, outcome) in outcomes {
        match outcome {
            Ok((violations, gno_g, g_d)) => {
                report.violations.extend(
                    violations
                        .into_iter()
                        .map(|violation| SeededViolation { seed, violation }),
                );
                let s = &mut report.strictness;
                if gno_g {
                    s.gno_strictly_in_g += 1;
                    if s.gno_strictly_in_g_seeds.len() < KEEP_SEEDS {
                        s.gno_strictly_in_g_seeds.push(seed);
                    }
                }
                if g_d {
                    s.g_strictly_in_d += 1;
                    if s.g_strictly_in_d_seeds.len() < KEEP_SEEDS {
                        s.g_strictly_in_d_seeds.push(seed);
                    }
                }
            }
            Err(e) => report.errors.push(SeededError {
                seed,
                error: e.to_string(),
            }),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all() -> BTreeSet<Property> {
        Property::ALL.into_iter().collect()
    }

    #[test]
    fn zero_count_is_empty() {
        let r = fuzz(&GenParams::default(), 0, &all(), &Limits::default());
        assert!(r.is_clean());
        assert_eq!(r.strictness, Strictness::default());
    }

    #[test]
    fn small_campaign_is_clean_and_reproducible() {
        let params = GenParams::default().with_seed(7);
        let limits = Limits::default();
        let a = fuzz(&params, 40, &all(), &limits);
        assert!(a.is_clean(), "{:?}", a.violations);
        let b = fuzz(&params, 40, &all(), &limits);
        assert_eq!(a, b);
    }

    #[test]
    fn weakening_is_nested() {
        let params = GenParams {
            pref_density: 0.8,
            ..GenParams::default()
        };
        for seed in 0..30 {
            let lpp = random_lpp(&params.with_seed(seed));
            let weaker = weaken_preferences(lpp.preferences(), seed);
            assert!(weaker.is_subset(lpp.preferences()));
            assert_eq!(weaker, weaken_preferences(lpp.preferences(), seed));
        }
    }
}
