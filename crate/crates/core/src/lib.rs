//! Cellular automata over semigroups.
//!
//! The crate defines cellular automata over concrete semigroup families
//! (ℕ, ℕᵈ, ℤᵈ, free monoids, the bicyclic monoid, finite tables) and
//! produces re-checkable certificates about them:
//!
//! - [`semigroup`]: exact arithmetic, division, cancellability, balls and Følner windows;
//! - [`geometry`]: K-interiors, K-adherences, both K-boundaries and amenability constants;
//! - [`tiling`]: greedy K-tilings, their verification and density bounds;
//! - [`automaton`]: local rules evaluated on finite patterns;
//! - [`analysis`]: Garden-of-Eden patterns, mutually erasable pairs, entropy traces
//!   and the combined surjectivity / pre-injectivity audit.

pub mod analysis;
pub mod automaton;
mod error;
pub mod geometry;
pub mod semigroup;
pub mod tiling;

pub use error::{Error, Result};
pub use semigroup::{Element, Family, Semigroup, Window, WindowSchedule};
