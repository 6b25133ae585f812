//! Built-in monoid families with their family-specific oracles.

pub mod coxeter;
pub mod hecke;
pub mod incidence;
pub mod ndpf;
pub mod quiver_built;
pub mod straubing;
pub mod ubool;

pub use coxeter::{CoxeterGroup, CoxeterType};
pub use hecke::{hecke_monoid, HeckeMonoid};
pub use incidence::{incidence_monoid, IncidenceElement};
pub use ndpf::{brute_force_ndpf_maps, catalan, ndpf};
pub use quiver_built::{quiver_lattice_monoid, quiver_monoid, simple_quiver_monoid, Digraph};
pub use straubing::straubing_example;
pub use ubool::{extensive_to_matrix, pair_positions, unitriangular_boolean, BoolMatrix};
