//! Instance generators for the two hardness reductions and the extractors
//! that map solutions back.

mod cohc;
mod graph;
mod map;
mod x3c;

pub use cohc::{
    check_cohc_structure, extract_cycle, reduce_cohc, witness_from_cycle, StructureViolation,
};
pub use graph::{check_hamiltonian_cycle, Graph};
pub use map::{beta, Gadget, ReductionKind, ReductionMap};
pub use x3c::{extract_cover, reduce_x3c, X3cInstance};
