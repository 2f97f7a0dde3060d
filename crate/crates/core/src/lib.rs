//! Exact finite test spaces and the machinery around them.
//!
//! Layers, bottom-up: [`group`] (finite groups, orbits, cosets), [`testspace`]
//! (events, orthogonality, logic, morphisms), [`states`] (exact vertex
//! enumeration of the state polytope), [`products`], [`symmetry`] (the coset
//! construction and its checks) and [`extensions`]. [`suites`] bundles the
//! checks into reports.
//!
//! Probabilities are [`Q`], reduced big rationals. Nothing here uses floats.

pub mod bitset;
pub mod error;
pub mod extensions;
pub mod group;
pub mod limits;
pub mod products;
pub mod rational;
pub mod report;
pub mod states;
pub mod suites;
pub mod symmetry;
pub mod testspace;

pub use error::{Error, Result};
pub use limits::Limits;
pub use rational::Q;
