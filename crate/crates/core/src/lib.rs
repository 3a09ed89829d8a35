//! Monomial cut ideals of finite simple connected graphs.
//!
//! For a graph `G` and an unordered partition `A | B` of its vertices, the cut
//! monomial `u_{A|B}` multiplies `s_e` over the edges crossing the partition
//! and `t_e` over the others. The monomial cut ideal `I(G)` is generated by all
//! of them. This crate builds these ideals and computes their minimal primes,
//! Alexander duals, Stanley–Reisner face counts and graded Betti numbers, and
//! compares closed-form structural descriptions against brute-force results.
//!
//! ```
//! use cutideal::{cut::cut_ideal, graph::cycle_graph, structure::general_decomposition};
//!
//! let c4 = cycle_graph(4).unwrap();
//! let ideal = cut_ideal(&c4).unwrap();
//! assert_eq!(ideal.gens().len(), 8);
//! assert_eq!(general_decomposition(&c4).unwrap().primes().count(), 12);
//! ```

pub mod cut;
pub mod error;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod monomial;
pub mod report;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{EdgeIndex, Graph};
pub use ideal::{MonomialIdeal, PrimeSupport};
pub use monomial::{Monomial, VarContext};
