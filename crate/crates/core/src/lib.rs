//! Hyperbolic unit disk graphs.
//!
//! Geometry of the hyperbolic plane ([`hypgeo`]), line arrangements and their
//! sign-vector combinatorics ([`arrangement`]), the gadget graph that turns an
//! arrangement into a recognition instance ([`reduction`]), exact certificate
//! checks ([`witness`]), the Euclidean-to-hyperbolic embedding ([`embed`]),
//! bisector-based recovery of the arrangement ([`extract`]) and a numerical
//! realization search ([`solver`]). [`document`], [`plot`] and [`cli`] provide
//! file formats, SVG output and the command-line front end.

pub mod arrangement;
pub mod cli;
pub mod document;
pub mod embed;
pub mod error;
pub mod extract;
pub mod graph;
pub mod hypgeo;
pub mod plane;
pub mod pipeline;
pub mod plot;
pub mod reduction;
pub mod solver;
pub mod witness;

pub use arrangement::{CombinatorialDescription, OrientedLine, Sign, SignVector};
pub use error::{Error, Result};
pub use graph::{LabeledGraph, Role};
pub use hypgeo::{HPoint, KPoint, PolarPoint};
pub use plane::Point2;
pub use witness::{Geometry, Points, Realization, ThresholdInterval};
