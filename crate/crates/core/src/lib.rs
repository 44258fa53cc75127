//! Exact computer algebra for quantum-group and braided-group gauge theory
//! on finite-dimensional examples.
//!
//! The crate builds quantum principal bundles over cyclotomic ground fields,
//! connections and gauge transformations on them, cocycle cross products,
//! braided groups and their bosonisations, and entwining structures — and
//! mechanically verifies every identity involved, with exact arithmetic and
//! a named basis element as witness whenever a check fails.
//!
//! Layer map:
//! - [`scalar`], [`linalg`], [`echelon`]: cyclotomic scalars and
//!   deterministic exact linear algebra;
//! - [`hopf`]: algebras, coalgebras, Hopf algebras, convolution,
//!   dual-quasitriangular structures;
//! - [`comodule`]: comodule algebras, fixed subalgebras, intertwiners;
//! - [`calculus`]: the universal differential calculus;
//! - [`bundle`]: quantum principal bundles, connections, gauge theory;
//! - [`local`]: base-space gauge calculus (curvature, Bianchi, matter);
//! - [`braided`], [`bosonisation`]: braided categories, braided groups,
//!   braided bundles, bosonisation and entwining structures;
//! - [`catalog`], [`suites`], [`report`], [`json`]: named example inputs,
//!   verification suites and machine-readable reports for the CLI.

pub mod error;
pub mod par;
pub mod scalar;

pub mod linalg;

pub mod echelon;

pub mod hopf;

pub mod comodule;

pub mod calculus;

pub mod catalog;

pub mod report;

pub use error::{Error, Result};
pub use scalar::Scalar;
