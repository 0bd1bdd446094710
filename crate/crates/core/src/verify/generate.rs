use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::base::is_stratified;
use crate::limits::MASK_WIDTH;
use crate::syntax::{Atom, Literal, PrefProgram, Preferences, Program, Rule};

const ATOM_NAMES: &str = "abcdefghijklmnopqrstuvwxyz";

/// Shape of randomly generated programs. `n_atoms` and `n_rules` are upper
/// bounds: each program draws its own counts from `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GenParams {
    pub n_atoms: usize,
    pub n_rules: usize,
    pub max_pos_body: usize,
    pub max_neg_body: usize,
    pub p_classical_neg: f64,
    /// Probability of each pair of the hidden total order becoming a
    /// preference.
    pub pref_density: f64,
    pub seed: u64,
    /// Only negative-cycle-free programs.
    pub stratified: bool,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            n_atoms: 6,
            n_rules: 8,
            max_pos_body: 2,
            max_neg_body: 2,
            p_classical_neg: 0.25,
            pref_density: 0.3,
            seed: 0,
            stratified: false,
        }
    }
}

impl GenParams {
    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.n_atoms == 0 || self.n_atoms > ATOM_NAMES.len() {
            return Err(format!("n_atoms must be in 1..={}", ATOM_NAMES.len()));
        }
        if self.n_rules == 0 || self.n_rules > MASK_WIDTH {
            return Err(format!("n_rules must be in 1..={MASK_WIDTH}"));
        }
        for (name, p) in [
            ("p_classical_neg", self.p_classical_neg),
            ("pref_density", self.pref_density),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(format!("{name} must be a probability, got {p}"));
            }
        }
        Ok(())
    }
}

/// A program determined entirely by `params` (seed included). Preferences
/// are a random subset of a hidden total order on a shuffled rule list, so
/// their closure is always asymmetric.
///
/// # Panics
///
/// If `params` does not validate.
pub fn random_lpp(params: &GenParams) -> PrefProgram {
    if let Err(e) = params.validate() {
        panic!("invalid generator parameters: {e}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n_atoms = rng.gen_range(1..=params.n_atoms);
    let n_rules = rng.gen_range(1..=params.n_rules);
    let atoms: Vec<Atom> = ATOM_NAMES[..n_atoms]
        .chars()
        .map(|c| Atom::new(c.to_string()).expect("single letters are atoms"))
        .collect();

    let literal = |rng: &mut ChaCha8Rng, index: usize| {
        let atom = atoms[index].clone();
        if rng.gen_bool(params.p_classical_neg) {
            Literal::neg(atom)
        } else {
            Literal::pos(atom)
        }
    };
    // distinct literals over atoms in `range`, at most `max` of them
    let body = |rng: &mut ChaCha8Rng, max: usize, range: std::ops::Range<usize>| {
        let mut out = BTreeSet::new();
        if range.is_empty() {
            return out;
        }
        for _ in 0..rng.gen_range(0..=max) {
            let i = rng.gen_range(range.clone());
            out.insert(literal(rng, i));
        }
        out
    };

    let mut rules = Vec::new();
    let mut shapes = HashSet::new();
    for k in 0..n_rules {
        // duplicates of an existing rule body are redrawn a few times, then
        // the rule is dropped
        for _ in 0..16 {
            let h = rng.gen_range(0..n_atoms);
            let head = literal(&mut rng, h);
            // stratified: positive bodies stay at or below the head's atom,
            // negative bodies strictly below, so no cycle passes a `not`
            let (pos_range, neg_range) = if params.stratified {
                (0..h + 1, 0..h)
            } else {
                (0..n_atoms, 0..n_atoms)
            };
            let pos = body(&mut rng, params.max_pos_body, pos_range);
            let neg = body(&mut rng, params.max_neg_body, neg_range);
            if shapes.insert((head.clone(), pos.clone(), neg.clone())) {
                rules.push(Rule::new(format!("r{}", k + 1), head, pos, neg));
                break;
            }
        }
    }
    let program = Program::new(rules).expect("generated rules have distinct labels and shapes");
    debug_assert!(!params.stratified || is_stratified(&program));

    let n = program.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut raw = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(params.pref_density) {
                raw.push((order[i], order[j]));
            }
        }
    }
    let prefs = Preferences::closure(n, &raw).expect("a subset of a total order is acyclic");
    PrefProgram::new(program, prefs)
}
