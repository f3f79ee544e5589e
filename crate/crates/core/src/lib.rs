//! Exact arithmetic for the complex reflection groups G(m,p,n) and tools
//! for deciding full commutativity of their elements.
//!
//! Elements are monomial matrices stored as a permutation plus a vector of
//! root-of-unity exponents, so everything is exact integer arithmetic.
//! Full commutativity can be decided three independent ways:
//!
//! * brute force over the Cayley graph ([`cayley`]),
//! * the block-shape test on canonical reduced words ([`canonical`]),
//! * signed pattern avoidance ([`patterns`]).
//!
//! [`counting`] holds the closed-form counts, and [`app`] ties it all
//! together with table reproduction and cross-verification reports.

pub mod app;
pub mod canonical;
pub mod cayley;
pub mod counting;
mod error;
pub mod group;
pub mod patterns;

pub use error::Error;
pub use group::{Element, GeneratorId, GensetKind, GroupSpec};

pub type Result<T> = std::result::Result<T, Error>;
