//! Hamiltonian cycle to "is there any positive solution".
//!
//! Three families of symbols are indexed by a position `i` in the cycle and
//! a vertex `j`: `p`/`P` pick vertex `j` as the `i`-th of the cycle, `s`/`S`
//! open an interval in `A` and `t`/`T` close it. The pattern is
//!
//! ```text
//! M = MSelection_1 ⋯ MSelection_n · MLinking_1 ⋯ MLinking_n
//!     MSelection_i = p_i_1/P_i_1 ⋯ p_i_n/P_i_n
//!     MLinking_j   = s_1_j/S_1_j t_1_j/T_1_j ⋯ s_n_j/S_n_j t_n_j/T_n_j
//! ```
//!
//! and the program is
//!
//! ```text
//! A = ASelection_1 ⋯ ASelection_n · ALinking_1 ⋯ ALinking_n
//!     ASelection_i = s_i_n/P_i_n ⋯ s_i_1/P_i_1
//!     ALinking_j   = t_1_j/S_1_j ⋯ t_n_j/S_n_j · APostLink_1_j ⋯ APostLink_n_j
//!     APostLink_i_j = p_{i'}_{a}/T_i_j for each neighbor a of j, ascending
//! ```
//!
//! where `i'` is the cyclic successor of `i` in `1..=n`.

use std::collections::HashSet;

use crate::error::ReduceError;
use crate::model::{Block, ColoredString, Instance, SolutionPair, Variant};
use crate::verify::verify_omdci;

use super::graph::{check_hamiltonian_cycle, Graph};
use super::map::{Gadget, ReductionKind, ReductionMap};

fn succ(i: usize, n: usize) -> usize {
    i % n + 1
}

fn block(ch: &str, i: usize, j: usize, color: &str, ci: usize, cj: usize) -> Block {
    Block::parse(&format!("{ch}_{i}_{j}"), &format!("{color}_{ci}_{cj}"))
        .expect("gadget identifiers are valid")
}

/// Emits the instance with `|M| = 3n^2` and `|A| = 2n^2 + 2n|E|`.
pub fn reduce_cohc(g: &Graph) -> Result<(Instance, ReductionMap), ReduceError> {
    let n = g.n();
    if n < 3 {
        return Err(ReduceError::TooFewVertices(n));
    }
    let mut pattern = ColoredString::default();
    let mut program = ColoredString::default();
    let mut m_tags = Vec::with_capacity(3 * n * n);
    let mut a_tags = Vec::with_capacity(2 * n * n + 2 * n * g.edge_count());

    for i in 1..=n {
        for j in 1..=n {
            pattern.push(block("p", i, j, "P", i, j));
            m_tags.push(Gadget::MSelection { i, j });
        }
        for j in (1..=n).rev() {
            program.push(block("s", i, j, "P", i, j));
            a_tags.push(Gadget::ASelection { i, j });
        }
    }
    for j in 1..=n {
        for i in 1..=n {
            pattern.push(block("s", i, j, "S", i, j));
            m_tags.push(Gadget::MPreLink { i, j });
            pattern.push(block("t", i, j, "T", i, j));
            m_tags.push(Gadget::MPostLink { i, j });
        }
        for i in 1..=n {
            program.push(block("t", i, j, "S", i, j));
            a_tags.push(Gadget::APreLink { i, j });
        }
        for i in 1..=n {
            for (r, &a) in g.neighbors(j).iter().enumerate() {
                program.push(block("p", succ(i, n), a, "T", i, j));
                a_tags.push(Gadget::APostLink { i, j, r: r + 1 });
            }
        }
    }

    let inst =
        Instance::new(Variant::Omdci, pattern, program).expect("pattern symbols are distinct");
    Ok((
        inst,
        ReductionMap {
            kind: ReductionKind::Cohc { n },
            m_tags,
            a_tags,
        },
    ))
}

fn checked_instance(g: &Graph, map: &ReductionMap) -> Result<Instance, ReduceError> {
    let (inst, expected) = reduce_cohc(g)?;
    if &expected != map {
        return Err(ReduceError::MapMismatch);
    }
    Ok(inst)
}

/// Reads the vertex picked in each selection gadget; the result is a
/// Hamiltonian cycle `h_1, …, h_n`.
pub fn extract_cycle(
    g: &Graph,
    map: &ReductionMap,
    sol: &SolutionPair,
) -> Result<Vec<usize>, ReduceError> {
    let inst = checked_instance(g, map)?;
    if let Some(v) = verify_omdci(&inst, sol).violation {
        return Err(ReduceError::Unverified(v));
    }
    let n = g.n();
    let mut picked = vec![Vec::new(); n + 1];
    for &p in &sol.idx_m {
        if let Some(Gadget::MSelection { i, j }) = map.m_gadget(p) {
            picked[i].push(j);
        }
    }
    let mut cycle = Vec::with_capacity(n);
    for (i, js) in picked.iter().enumerate().skip(1) {
        match js.as_slice() {
            [j] => cycle.push(*j),
            [] => {
                return Err(ReduceError::MalformedWitness(format!(
                    "selection gadget {i} contributed no color"
                )))
            }
            _ => {
                return Err(ReduceError::MalformedWitness(format!(
                    "selection gadget {i} contributed {js:?}"
                )))
            }
        }
    }
    check_hamiltonian_cycle(g, &cycle)
        .map_err(|e| ReduceError::MalformedWitness(format!("extracted {cycle:?}: {e}")))?;
    Ok(cycle)
}

/// Builds the size-`3n` solution for a Hamiltonian cycle `q_1, …, q_n`:
/// per `i`, the selection block `P_i_{q_i}`, the pre-link `S_i_{q_i}` and the
/// post-link block of `T_i_{q_i}` carrying `p_{i'}_{q_{i'}}`.
pub fn witness_from_cycle(
    g: &Graph,
    map: &ReductionMap,
    cycle: &[usize],
) -> Result<SolutionPair, ReduceError> {
    check_hamiltonian_cycle(g, cycle)?;
    checked_instance(g, map)?;
    let n = g.n();
    let (mut idx_m, mut idx_a) = (Vec::with_capacity(3 * n), Vec::with_capacity(3 * n));
    let locate = |pos: Option<usize>, what: Gadget| {
        pos.ok_or_else(|| ReduceError::MalformedWitness(format!("map lacks {what}")))
    };
    for i in 1..=n {
        let j = cycle[i - 1];
        let next = cycle[succ(i, n) - 1];
        for tag in [
            Gadget::MSelection { i, j },
            Gadget::MPreLink { i, j },
            Gadget::MPostLink { i, j },
        ] {
            idx_m.push(locate(map.position_of_m(tag), tag)?);
        }
        let r = g
            .neighbors(j)
            .iter()
            .position(|&a| a == next)
            .expect("cycle checked for adjacency")
            + 1;
        for tag in [
            Gadget::ASelection { i, j },
            Gadget::APreLink { i, j },
            Gadget::APostLink { i, j, r },
        ] {
            idx_a.push(locate(map.position_of_a(tag), tag)?);
        }
    }
    idx_m.sort_unstable();
    idx_a.sort_unstable();
    Ok(SolutionPair::new(idx_m, idx_a))
}

/// A failed structural check on a verified solution of a co-HC instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureViolation {
    /// More than one matched block in selection gadget `i` (of M or of A).
    SelectionOverused(usize),
    /// `P_i_j` matched without `S_i_j`.
    PickWithoutStart(usize, usize),
    /// `S_i_j` matched without `T_i_j`.
    StartWithoutEnd(usize, usize),
    /// Two matched `S` colors share the vertex subscript.
    RepeatedVertex(usize),
}

/// Checks the per-gadget structure every solution of a reduced co-HC
/// instance must have.
pub fn check_cohc_structure(
    map: &ReductionMap,
    sol: &SolutionPair,
) -> Result<(), StructureViolation> {
    let m_tags: HashSet<Gadget> = sol.idx_m.iter().filter_map(|&p| map.m_gadget(p)).collect();
    let n = match map.kind {
        ReductionKind::Cohc { n } => n,
        ReductionKind::X3c { .. } => 0,
    };
    let mut m_sel = vec![0usize; n + 1];
    let mut a_sel = vec![0usize; n + 1];
    let mut starts = vec![0usize; n + 1];
    for tag in &m_tags {
        match *tag {
            Gadget::MSelection { i, j } => {
                m_sel[i] += 1;
                if !m_tags.contains(&Gadget::MPreLink { i, j }) {
                    return Err(StructureViolation::PickWithoutStart(i, j));
                }
            }
            Gadget::MPreLink { i, j } => {
                starts[j] += 1;
                if !m_tags.contains(&Gadget::MPostLink { i, j }) {
                    return Err(StructureViolation::StartWithoutEnd(i, j));
                }
            }
            _ => {}
        }
    }
    for &p in &sol.idx_a {
        if let Some(Gadget::ASelection { i, .. }) = map.a_gadget(p) {
            a_sel[i] += 1;
        }
    }
    if let Some(i) = (1..=n).find(|&i| m_sel[i] > 1 || a_sel[i] > 1) {
        return Err(StructureViolation::SelectionOverused(i));
    }
    if let Some(j) = (1..=n).find(|&j| starts[j] > 1) {
        return Err(StructureViolation::RepeatedVertex(j));
    }
    Ok(())
}
