//! Preferred answer sets for propositional logic programs with a strict
//! partial order on rules.
//!
//! Four semantics are provided: plain answer sets, `D` (preferences act
//! between directly conflicting rules), `G` (preferences act between
//! fragments) and `GNO` (a rule is defeated only by rules that are not less
//! preferred). [`transform`] compiles `GNO` into an ordinary program and
//! [`verify`] checks the expected relationships on random programs.

pub mod base;
pub mod direct;
pub mod error;
pub mod fixtures;
pub mod fragment;
pub mod gno;
pub mod limits;
pub mod ranked;
pub mod solve;
pub mod syntax;
pub mod transform;
pub mod verify;

pub use base::{answer_sets, gl_answer_sets, is_stratified, stable_models, AnswerSet, Compiled, LiteralSet, RuleSet};
pub use direct::preferred_answer_sets_d;
pub use error::{Error, Result};
pub use fragment::{preferred_answer_sets_g, FragmentSet, FragmentSpace, GPreferred};
pub use gno::{preferred_answer_sets_gno, GnoOptions};
pub use limits::Limits;
pub use ranked::PrefCompiled;
pub use solve::{report, solve, Semantics, SemanticsReport, Solution, Witness};
pub use syntax::{
    format_program, parse_pref_program, parse_program, parse_program_with, Atom, Literal, ParseOptions, ParsedProgram,
    PrefProgram, Preferences, Program, Rule, RuleId,
};
pub use transform::{check_correspondence, embed, project, transform, TransformedProgram};
