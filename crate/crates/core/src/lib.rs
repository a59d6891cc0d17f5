//! Exact computations around Herzog-Northcott ideals and the numerical
//! semigroups `<m1, m2, m3>` attached to them.
//!
//! * [`semigroup`]: minimal generators, Apéry sets, Frobenius number, gaps,
//!   symmetry, pseudo-Frobenius numbers and type.
//! * [`cover`]: oversemigroups of fixed multiplicity and the decision whether
//!   a semigroup sits inside a symmetric one of the same multiplicity.
//! * [`hn`]: the exponent matrix, its minors, the multiplier triple and the
//!   exponent recovery for `m1 in {3, 4}`.
//! * [`cases`]: decomposition shapes `sum(sigma * length) = e`.
//! * [`catalogue`]: worked examples over `k[X,Y,Z,W]`, checked by weights and gcds.

pub mod binomial;
pub mod cases;
pub mod catalogue;
pub mod cover;
pub mod hn;
pub mod semigroup;

pub use binomial::{binomial_weight_vanishes, Binomial, WeightAssignment};
pub use cases::{check_consistency, enumerate_cases, CaseRecord, Component};
pub use catalogue::{verify_example, ExampleFamily, ExampleSpec, FamilyRegistry};
pub use cover::{
    oversemigroups_with_multiplicity, symmetric_cover, verify_delta, CoverQuery, DELTA,
};
pub use hn::{build, solve_exponents, theorem_verdict, vanishing_check, ExponentPair, HnIdeal};
pub use semigroup::{GapProfile, GeneratorSet, NumericalSemigroup, SemigroupError, TraitReport};
