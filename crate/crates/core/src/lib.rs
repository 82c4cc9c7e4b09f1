//! Exact arithmetic for towers of algebras built from the rationals by
//! iterated Cayley-Dickson and Conway-Smith doubling, together with
//! constructive Hilbert-90 witnesses, norm-one parametrizations, Pythagorean
//! tuple generation, and a seeded property checker over a catalog of
//! algebraic identities.
//!
//! Everything is computed over arbitrary-precision rationals; every equality
//! in this crate is exact, with no tolerances anywhere.

pub mod element;
pub mod error;
pub mod hilbert90;
pub mod properties;
pub mod rational;
pub mod tower;

#[cfg(feature = "cli")]
pub mod cli;

pub use element::Element;
pub use error::Error;
pub use hilbert90::{
    hilbert90_witness, norm_one_from_seed, param_coordinates, pythagorean_tuple, SeedVector,
    WitnessBranch, WitnessResult,
};
pub use properties::{
    check_identity, compare_towers, find_counterexample, random_element, t_project, CheckKind,
    CheckReport, IdentityId, Outcome, SearchBudget, SplitMix64,
};
pub use rational::Rational;
pub use tower::{multi_index, parse_tower, DoublingKind, LevelSpec, MultiIndex, TowerSpec};

pub type Result<T> = std::result::Result<T, Error>;
