//! Named example programs.

/// `r1: a :- x. r2: x :- not b. r3: b :- not a.` with `r2 < r3`.
pub const RUNNING: &str = include_str!("../fixtures/running.lpp");
/// `r1: a :- not b. r2: b.` with `r2 < r1`; stratified.
pub const BREWKA_EITER: &str = include_str!("../fixtures/brewka_eiter.lpp");
/// The eight-rule car recommender, every user rule preferred over every
/// developer rule.
pub const CAR: &str = include_str!("../fixtures/car.lpp");
pub const MINPOS: &str = include_str!("../fixtures/minpos.lpp");
pub const GENERATING: &str = include_str!("../fixtures/generating.lpp");
/// Two directly conflicting rules with `r2 < r1`.
pub const DIRECT: &str = include_str!("../fixtures/direct.lpp");
pub const PRINCIPLE2: &str = include_str!("../fixtures/principle2.lpp");
/// [`PRINCIPLE2`] plus `r4: -select(b) :- select(a).`
pub const PRINCIPLE2_EXTENDED: &str = include_str!("../fixtures/principle2_extended.lpp");
pub const PRINCIPLE3_EXTENDED: &str = include_str!("../fixtures/principle3_extended.lpp");
