//! Graph invariants and Hamiltonicity tools for 1-tough, `k`-connected,
//! `(P2 u kP1)`-free graphs: exact toughness and essential-set invariants,
//! exact Hamiltonian-cycle search, a step-by-step replay of the cycle-surgery
//! argument that forces the Petersen graph as the only non-Hamiltonian case,
//! and exhaustive verification harnesses.

pub mod graph;
pub mod graph6;
pub mod hamiltonicity;
pub mod invariants;
pub mod limits;
pub mod rational;
pub mod surgery;
pub mod verifier;

pub use graph::{Graph, GraphError, VertexSet};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use rational::Rational;
