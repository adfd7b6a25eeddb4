//! Exact toolkit for k-touching systems of non-crossing strings in the plane.
//!
//! A *string* is a simple polyline; a family of strings is *touching* if no
//! pair crosses (branches never alternate around a shared point) and
//! *k-touching* if no point of the plane lies on more than k strings.  This
//! crate validates and classifies such systems, audits the counting
//! identities and edge/degree bounds they satisfy, colors their intersection
//! graphs, solves the associated linear programs in exact rational
//! arithmetic, and generates the extremal constructions.
//!
//! All geometric predicates use exact rationals; floating point appears only
//! in SVG output.

pub mod rational;
pub mod geometry;
pub mod arrangement;
pub mod graphs;
pub mod bounds;
pub mod lp;
pub mod constructions;
pub mod transforms;
pub mod io;

pub use rational::Rational;
