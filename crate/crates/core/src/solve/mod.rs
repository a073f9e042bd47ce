//! Exact solvers.
//!
//! * [`solve_plus_fpt`]: permutation enumeration for the full-cover variant,
//!   `O(d! · |A|)` in the pattern length `d`.
//! * [`solve_omdci_max`] / [`solve_general`]: branch-and-bound for a maximum
//!   solution.
//! * [`has_positive_solution`]: the same search, stopping at the first
//!   solution of any positive size.
//!
//! Sizes are not downward closed: an instance can have a solution of size 2
//! and none of size 1, so no solver stops after failing at small sizes.

mod encode;
mod fpt;
mod search;

use std::collections::HashSet;

use crate::error::SolveError;
use crate::model::{Block, Color, ColoredString, CriticalChar, Instance, SolutionPair, Variant};

use encode::Encoded;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub best: Option<SolutionPair>,
    pub k_max: usize,
    /// No budget limit was hit. For maximising searches this makes `k_max`
    /// optimal; for first-solution searches it makes a negative answer final.
    pub exhausted: bool,
    pub nodes_explored: u64,
}

impl SolveOutcome {
    fn from_picks(picks: Option<(Vec<usize>, Vec<usize>)>, exhausted: bool, nodes: u64) -> Self {
        let best = picks.map(|(m, a)| SolutionPair::new(m, a));
        Self {
            k_max: best.as_ref().map_or(0, SolutionPair::k),
            best,
            exhausted,
            nodes_explored: nodes,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveBudget {
    pub max_nodes: Option<u64>,
    /// Largest number of M positions considered (general variant only).
    pub max_k_subset: Option<usize>,
}

impl SolveBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            max_k_subset: None,
        }
    }
}

/// Options for [`solve_plus_fpt_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FptOptions {
    pub threads: usize,
    /// Caps candidate-prefix attempts; forces a sequential run.
    pub max_nodes: Option<u64>,
}

impl Default for FptOptions {
    fn default() -> Self {
        Self {
            threads: 1,
            max_nodes: None,
        }
    }
}

fn require_permutation(inst: &Instance) -> Result<(), SolveError> {
    if inst.m().is_permutation_string() {
        Ok(())
    } else {
        Err(SolveError::NotPermutation)
    }
}

/// Full-cover search by enumerating character permutations of `M`.
pub fn solve_plus_fpt(inst: &Instance) -> Result<SolveOutcome, SolveError> {
    solve_plus_fpt_with(inst, FptOptions::default())
}

pub fn solve_plus_fpt_with(inst: &Instance, opts: FptOptions) -> Result<SolveOutcome, SolveError> {
    if inst.variant() != Variant::OmdciPlus {
        return Err(SolveError::WrongVariant {
            expected: Variant::OmdciPlus,
            got: inst.variant(),
        });
    }
    require_permutation(inst)?;
    let enc = Encoded::new(inst);
    let run = fpt::run(&enc, opts.threads.max(1), opts.max_nodes);
    let d = inst.m().len();
    let picks = run
        .picks
        .map(|a| ((1..=d).collect(), a.into_iter().map(|p| p + 1).collect()));
    Ok(SolveOutcome::from_picks(picks, !run.aborted, run.nodes))
}

fn backtrack(inst: &Instance, cfg: search::Config) -> SolveOutcome {
    let enc = Encoded::new(inst);
    let found = search::run(&enc, &cfg);
    SolveOutcome::from_picks(found.best, !found.aborted && !found.capped, found.nodes)
}

/// Maximum-size solution for a permutation pattern.
pub fn solve_omdci_max(inst: &Instance, budget: SolveBudget) -> Result<SolveOutcome, SolveError> {
    require_permutation(inst)?;
    Ok(backtrack(
        inst,
        search::Config {
            require_full: false,
            stop_at_first: false,
            max_nodes: budget.max_nodes,
            max_k: None,
        },
    ))
}

/// Full-cover search by backtracking; the cross-check for [`solve_plus_fpt`].
pub fn solve_plus_backtrack(
    inst: &Instance,
    budget: SolveBudget,
) -> Result<SolveOutcome, SolveError> {
    require_permutation(inst)?;
    Ok(backtrack(
        inst,
        search::Config {
            require_full: true,
            stop_at_first: true,
            max_nodes: budget.max_nodes,
            max_k: None,
        },
    ))
}

/// Maximum-size solution with no assumption on `M`.
pub fn solve_general(inst: &Instance, budget: SolveBudget) -> SolveOutcome {
    backtrack(
        inst,
        search::Config {
            require_full: false,
            stop_at_first: false,
            max_nodes: budget.max_nodes,
            max_k: budget.max_k_subset,
        },
    )
}

/// First solution of positive size, if any; `exhausted` tells whether a
/// negative answer is proven.
pub fn find_positive_solution(
    inst: &Instance,
    budget: SolveBudget,
) -> Result<SolveOutcome, SolveError> {
    require_permutation(inst)?;
    Ok(backtrack(
        inst,
        search::Config {
            require_full: false,
            stop_at_first: true,
            max_nodes: budget.max_nodes,
            max_k: None,
        },
    ))
}

/// Whether a solution with `k > 0` exists.
pub fn has_positive_solution(inst: &Instance) -> Result<bool, SolveError> {
    Ok(find_positive_solution(inst, SolveBudget::unlimited())?
        .best
        .is_some())
}

/// Dispatches on the variant tag: full-cover instances go to the
/// permutation enumerator, the others to the maximising search.
pub fn solve(
    inst: &Instance,
    budget: SolveBudget,
    threads: usize,
) -> Result<SolveOutcome, SolveError> {
    match inst.variant() {
        Variant::General => Ok(solve_general(inst, budget)),
        Variant::Omdci => solve_omdci_max(inst, budget),
        Variant::OmdciPlus => solve_plus_fpt_with(
            inst,
            FptOptions {
                threads,
                max_nodes: budget.max_nodes,
            },
        ),
    }
}

fn fresh(base: &str, taken: &HashSet<&str>) -> String {
    let mut name = base.to_string();
    while taken.contains(name.as_str()) {
        name.push('_');
    }
    name
}

/// Appends the same two blocks, with fresh colors and fresh characters, to
/// both strings. Every solution grows by exactly 2 and the two blocks alone
/// form a solution, so the original maximum is 0 iff the padded one is 2.
pub fn pad_for_hardness(inst: &Instance) -> Result<Instance, SolveError> {
    require_permutation(inst)?;
    let (m, a) = (inst.m(), inst.a());
    let colors: HashSet<&str> = m.colors().chain(a.colors()).map(Color::as_str).collect();
    let chars: HashSet<&str> = m
        .chars()
        .chain(a.chars())
        .map(CriticalChar::as_str)
        .collect();
    let extra: Vec<Block> = (1..=2)
        .map(|i| {
            let ch = fresh(&format!("pad{i}_x"), &chars);
            let color = fresh(&format!("pad{i}_c"), &colors);
            Block::parse(&ch, &color).expect("generated identifiers are valid")
        })
        .collect();
    let extend = |s: &ColoredString| -> ColoredString {
        s.iter().cloned().chain(extra.iter().cloned()).collect()
    };
    Ok(Instance::new(inst.variant(), extend(m), extend(a)).expect("padding keeps M a permutation"))
}
