//! Constructive cover decomposition for translates of an octant.
//!
//! The library works in the dual setting: a finite point set in space is
//! colored with `k` colors so that every octant translate holding at least
//! `m(k)` of the points sees all `k` colors. Points are reduced to per-axis
//! ranks and projected to an ordered planar set ([`geom`]); the recursive
//! coloring ([`coloring`]) splits that set into important points and their
//! regions ([`partition`]). [`verify`] holds the exhaustive checkers,
//! [`duality`] turns colorings into decompositions of octant and triangle
//! covers, [`wedgegraph`] builds the 4-colorable graph of wedge-isolable
//! pairs, and [`search`] computes exact minimal thresholds on small instances.

pub mod backtrack;
pub mod coloring;
pub mod duality;
mod error;
pub mod generate;
pub mod geom;
pub mod io;
pub mod partition;
pub mod search;
pub mod svg;
pub mod verify;
pub mod wedgegraph;

pub use error::{Error, Result};
