//! Order-preserving matching of colored strings with equal character
//! multisets: instance model, verifiers, exact solvers, the X3C and co-HC
//! reductions, brute-force oracles, seeded generators and text formats.
//!
//! All positions exposed by this crate are 1-based.
//!
//! ```
//! use omdci::{ColoredString, Instance, Variant, solve_plus_fpt};
//!
//! let m = ColoredString::from_tokens("a2/1 a1/2 a4/4 a3/3").unwrap();
//! let a = ColoredString::from_tokens("a1/1 a4/4 a2/2 a3/3 a3/4 a4/3").unwrap();
//! let inst = Instance::new(Variant::OmdciPlus, m, a).unwrap();
//! let best = solve_plus_fpt(&inst).unwrap().best.unwrap();
//! assert_eq!(best.idx_a, vec![1, 3, 5, 6]);
//! ```

pub mod error;
pub mod gen;
pub mod io;
pub mod model;
pub mod oracle;
pub mod reduce;
pub mod solve;
pub mod verify;

pub use error::{GenError, IoError, ModelError, ReduceError, SolveError};
pub use model::{
    Block, Color, ColoredString, CriticalChar, Instance, Multiset, SolutionPair, Variant,
};
pub use reduce::{Graph, ReductionMap, X3cInstance};
pub use solve::{
    find_positive_solution, has_positive_solution, pad_for_hardness, solve, solve_general,
    solve_omdci_max, solve_plus_backtrack, solve_plus_fpt, solve_plus_fpt_with, FptOptions,
    SolveBudget, SolveOutcome,
};
pub use verify::{verify, verify_general, verify_omdci, verify_plus, VerifyResult, Violation};
