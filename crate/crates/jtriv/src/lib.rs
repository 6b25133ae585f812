//! Combinatorial representation theory of finite J-trivial monoids.
//!
//! A finite monoid is J-trivial when distinct elements generate distinct
//! two-sided ideals; equivalently, when it carries a partial order with
//! xy <= x and xy <= y. For such monoids the whole numerical side of the
//! representation theory of the monoid algebra (simple modules, radical,
//! orthogonal idempotents, Cartan matrix, quiver, projective modules)
//! can be computed by counting elements of the monoid itself, with exact
//! rational arithmetic confined to the idempotent-lifting and radical
//! filtration routines.
//!
//! The crate is organized as:
//!
//! * [`monoid`]: generated monoid tables, Cayley graphs, products by
//!   word recursion, J-order, omega powers, left/right symbols;
//! * [`algebra`]: the monoid algebra over exact rationals, the
//!   idempotent lattice and its Möbius inversion, lifting, Cartan
//!   matrix, quiver, radical filtration, projective modules;
//! * [`families`]: built-in constructions, namely 0-Hecke monoids of
//!   Coxeter groups (types A, B, D, I), nondecreasing parking
//!   functions, unitriangular Boolean matrices, incidence monoids, and
//!   monoids realizing a prescribed quiver;
//! * [`regressive`]: posets and the monoid of order-preserving
//!   regressive functions, idempotent combinatorics, signed-diagram
//!   demipotents, and the meet-semilattice orthogonality checker;
//! * [`cli`]: the `jtriv` command-line surface with JSON and DOT export.
//!
//! See the `examples/` directory for a runnable tour of each capability.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod families;
pub mod monoid;
pub mod regressive;

pub use error::{Error, Result};
pub use monoid::{ElementId, GeneratorSpec, MonoidTable};
