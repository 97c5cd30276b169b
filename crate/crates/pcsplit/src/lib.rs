//! Exact-arithmetic construction and verification of Poisson-commutative
//! subalgebras of `S(g)` attached to 2-splittings `g = h ⊕ r` of classical
//! Lie algebras.
//!
//! The library builds classical Lie algebras from explicit matrix
//! realizations, forms the contracted Poisson brackets of a splitting and the
//! one-parameter bracket family they span, generates the commutative
//! subalgebras from bi-homogeneous components of the basic symmetric
//! invariants, and certifies the expected identities (commutativity, counts,
//! transcendence degree, index, completeness, pencil dimensions) by exact
//! symbolic computation over arbitrary-precision rationals. There are no
//! floating-point numbers and no tolerances anywhere.
//!
//! Top-level layout:
//!
//! * [`rootdata`] — algebras, splittings, distinguished points
//! * [`polyring`] — sparse exact polynomials and the bigrading
//! * [`brackets`] — Lie–Poisson and contracted brackets, Poisson tensors
//! * [`invariants`] — basic symmetric invariants with exact certification
//! * [`generators`] — generator sets of the commutative subalgebras
//! * [`pencil`] — exact linear algebra for pencils of skew forms
//! * [`verify`] — orchestrated checks producing machine-readable reports
//! * [`cli`] — command-line front end

pub mod brackets;
pub mod cli;
pub mod docs;
pub mod error;
pub mod generators;
pub mod invariants;
pub mod linalg;
pub mod pencil;
pub mod polyring;
pub mod rational;
pub mod rootdata;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rat;
