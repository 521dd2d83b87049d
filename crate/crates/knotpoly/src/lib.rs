//! Knot invariants from planar diagram codes.
//!
//! The crate parses PD codes into planar diagrams, builds the two signed
//! checkerboard graphs, and computes the Jones polynomial by two independent
//! routes: a Tutte-polynomial evaluation at `(-t, -1/t)` for alternating
//! diagrams and a Kauffman bracket state sum for arbitrary diagrams. On top
//! of that it extracts twist numbers from Jones coefficients, evaluates
//! two-sided hyperbolic volume bounds, and runs a census-scan pipeline over
//! CSV records of knots with known volumes.
//!
//! Entry points:
//!
//! * [`diagram::PlanarDiagram`] — parse with [`diagram::PlanarDiagram::parse`],
//!   or use the built-in [`diagram::PlanarDiagram::trefoil`] /
//!   [`diagram::PlanarDiagram::figure_eight`] fixtures.
//! * [`jones::jones_via_tutte`] / [`jones::jones_via_bracket`] — the two routes.
//! * [`invariants::twist_profile`], [`invariants::volume_bounds`].
//! * [`census::scan`] — batch pipeline over census records.

pub mod census;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod jones;
pub mod polynomial;
pub mod tutte;

pub use error::{Error, Result};
