//! Posets and the monoid of order-preserving regressive functions.

mod demipotents;
mod eab;
mod enumerate;
mod or_monoid;
mod poset;

pub use demipotents::{
    conjecture_check, ndpf_diagram_demipotent, ndpf_norton_form, ndpf_orthogonal_set,
    semilattice_demipotents, ConjectureReport, DiagramOutcome, SemilatticeDemipotents,
    SignedDiagram,
};
pub use eab::{e_ab, evaluate_cover_word, factor_idempotent};
pub use enumerate::{brute_force_poset_count, canonical_key, enumerate_posets, PosetFilter};
pub use or_monoid::{
    element_index, is_valid_image_set, lex_compare, lex_symbol_order_check, or_functions,
    or_idempotent_images, or_monoid, or_symbols, sup_map, OrFunction,
};
pub use poset::{Poset, MAX_POSET_SIZE};
