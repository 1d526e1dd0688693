//! Geometry of hv-convex switching components on the integer lattice.
//!
//! A *switching component* is a pair of disjoint, equally sized lattice sets
//! with identical horizontal and vertical projections: swapping one for the
//! other inside a larger set changes nothing a two-direction tomograph can
//! see. This crate implements the geometric theory of the *hv-convex* ones:
//!
//! - [`lattice`] — points, finite lattice sets, row/column projections,
//!   closed quadrants, hv-convex polyomino and Q-convexity predicates;
//! - [`switching`] — validated switching pairs, free regions, the two
//!   equivalent hv-convexity conditions, dual sets;
//! - [`spiral`] — closed squared spirals (alternating horizontal/vertical
//!   segments), turn profiles, window/curl classification, hv-sequences,
//!   Z-path decompositions, and the induced switching pairs;
//! - [`characterize`] — executable forms of the window characterization
//!   (quadrant-separating certificates) and the even-run obstruction for
//!   curls, with explicit certificates and witnesses;
//! - [`generate`] — constructive families: nested-rectangle windows,
//!   `(3,3)_h` curl chains, L-path insertion, and the `(3,5)_2` curl;
//! - [`enumerate`] — exhaustive desk-scale search over all squared spirals
//!   on small grids, an hv-convexity census per hv-sequence, a maximally
//!   naive brute-force oracle, and a scan for tomographically equivalent
//!   hv-convex polyomino pairs.

pub mod characterize;
pub mod enumerate;
pub mod generate;
pub mod lattice;
pub mod spiral;
pub mod switching;

pub use characterize::{EvenRunWitness, WindowCertificate};
pub use enumerate::{CensusEntry, SearchSpace};
pub use lattice::{LatticeSet, Point, ProjectionVector, Quadrant};
pub use spiral::{HvSequence, SpiralClass, SquaredSpiral, Turn, TurnProfile, ZPath};
pub use switching::SwitchingPair;
