//! Conflict-free connectivity of small graphs.
//!
//! A path in a vertex-colored graph is conflict-free when some color occurs
//! on exactly one of its vertices (for edge colorings: on exactly one of its
//! edges). A colored graph is conflict-free (vertex-)connected when every
//! vertex pair is joined by at least one conflict-free path. This crate
//! provides:
//!
//! * [`graph`] — the graph type, edge-list / graph6 parsing, and structural
//!   predicates (connectivity, cut vertices, components, spanning trees);
//! * [`verify`] — certificate checking for vertex and edge colorings;
//! * [`color`] — a constructive coloring for trees (lifted to connected
//!   graphs through a spanning tree) that needs at most `ceil(log2(n+1))`
//!   colors;
//! * [`exact`] — brute-force exact values of the two conflict-free
//!   connection numbers and of the minimum vertex ranking, with witnesses;
//! * [`enumerate`] — catalogs of non-isomorphic trees and connected graphs
//!   at small orders, and sweep harnesses that test the library's claims
//!   against the exact solver over entire catalogs.

pub mod color;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod graph;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;

/// `ceil(log2(x))` for `x >= 1`; zero for `x <= 1`.
pub fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}
