//! Exact cover by 3-sets to the full-cover variant.
//!
//! For every copy `i` of the base block the pattern gets `T^(i)`: rows
//! `1..m-1` carry filler characters `C_i_1 .. C_i_{3m-3}`, row `m` carries
//! the base elements `b_{3i-2}, b_{3i-1}, b_{3i}`. The program gets
//! `X^(i) = P_1 L_2 H_1 · P_2 L_3 H_2 ⋯ P_{m-1} L_m H_{m-1} · P_m`, where
//! `P_j` spells the elements of triple `j`, and `L_j`, `H_j` re-supply the
//! filler characters one row late or on time. Picking `P_j` in copy `i`
//! shifts the filler characters by one row from there on, which is how one
//! triple per copy gets selected.

use std::collections::BTreeSet;

use crate::error::ReduceError;
use crate::model::{Block, ColoredString, Instance, SolutionPair, Variant};
use crate::verify::verify_plus;

use super::map::{Gadget, ReductionKind, ReductionMap};

/// Base set `[3q]` and `m` triples over it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct X3cInstance {
    q: usize,
    triples: Vec<[usize; 3]>,
}

impl X3cInstance {
    pub fn new(q: usize, triples: Vec<[usize; 3]>) -> Result<Self, ReduceError> {
        if q == 0 {
            return Err(ReduceError::InvalidX3c("q must be positive".into()));
        }
        if triples.is_empty() {
            return Err(ReduceError::InvalidX3c("need at least one triple".into()));
        }
        for (j, t) in triples.iter().enumerate() {
            if t.iter().any(|&e| e == 0 || e > 3 * q) {
                return Err(ReduceError::InvalidX3c(format!(
                    "triple {} has an element outside 1..={}",
                    j + 1,
                    3 * q
                )));
            }
            if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
                return Err(ReduceError::InvalidX3c(format!(
                    "triple {} repeats an element",
                    j + 1
                )));
            }
        }
        Ok(Self { q, triples })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn m(&self) -> usize {
        self.triples.len()
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    /// 1-based triple `j`.
    pub fn triple(&self, j: usize) -> [usize; 3] {
        self.triples[j - 1]
    }
}

fn block(ch: String, color: String) -> Block {
    Block::parse(&ch, &color).expect("gadget identifiers are valid")
}

fn color(i: usize, j: usize, k: usize) -> String {
    format!("v_{i}_{j}_{k}")
}

fn filler(i: usize, l: usize) -> String {
    format!("C_{i}_{l}")
}

fn base(e: usize) -> String {
    format!("b_{e}")
}

/// Emits the instance with `|M| = 3mq` and `|A| = (9m - 6)q`.
pub fn reduce_x3c(x: &X3cInstance) -> (Instance, ReductionMap) {
    let (q, m) = (x.q(), x.m());
    let mut pattern = ColoredString::default();
    let mut program = ColoredString::default();
    let mut m_tags = Vec::with_capacity(3 * m * q);
    let mut a_tags = Vec::with_capacity((9 * m - 6) * q);

    for i in 1..=q {
        for j in 1..=m {
            for k in 1..=3 {
                let ch = if j < m {
                    filler(i, 3 * (j - 1) + k)
                } else {
                    base(3 * i - 3 + k)
                };
                pattern.push(block(ch, color(i, j, k)));
                m_tags.push(Gadget::T { i, j, k });
            }
        }

        let mut emit = |tag: Gadget, ch: String, row: usize, k: usize| {
            program.push(block(ch, color(i, row, k)));
            a_tags.push(tag);
        };
        for j in 1..=m {
            let t = x.triple(j);
            for k in 1..=3 {
                emit(Gadget::P { i, j, k }, base(t[k - 1]), j, k);
            }
            if j == m {
                break;
            }
            let next = j + 1;
            for k in 1..=3 {
                emit(
                    Gadget::L { i, j: next, k },
                    filler(i, 3 * next - 6 + k),
                    next,
                    k,
                );
            }
            for k in 1..=3 {
                emit(Gadget::H { i, j, k }, filler(i, 3 * j - 3 + k), j, k);
            }
        }
    }

    let inst =
        Instance::new(Variant::OmdciPlus, pattern, program).expect("T blocks form a permutation");
    let map = ReductionMap {
        kind: ReductionKind::X3c { q, m },
        m_tags,
        a_tags,
    };
    (inst, map)
}

/// Recovers the chosen triple (1-based) for each copy `i`, in copy order.
pub fn extract_cover(
    x: &X3cInstance,
    map: &ReductionMap,
    sol: &SolutionPair,
) -> Result<Vec<usize>, ReduceError> {
    let (inst, expected) = reduce_x3c(x);
    if &expected != map {
        return Err(ReduceError::MapMismatch);
    }
    let res = verify_plus(&inst, sol);
    if let Some(v) = res.violation {
        return Err(ReduceError::Unverified(v));
    }

    let mut chosen = Vec::with_capacity(x.q());
    for i in 1..=x.q() {
        let rows: Vec<usize> = sol
            .idx_a
            .iter()
            .filter_map(|&p| match map.a_gadget(p) {
                Some(Gadget::P { i: gi, j, .. }) if gi == i => Some(j),
                _ => None,
            })
            .collect();
        match rows.as_slice() {
            [a, b, c] if a == b && b == c => chosen.push(*a),
            _ => {
                return Err(ReduceError::MalformedWitness(format!(
                    "copy {i} draws base elements from rows {rows:?}"
                )))
            }
        }
    }

    let covered: BTreeSet<usize> = chosen.iter().flat_map(|&j| x.triple(j)).collect();
    if covered.len() != 3 * x.q() {
        return Err(ReduceError::MalformedWitness(format!(
            "triples {chosen:?} do not partition the base set"
        )));
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ColoredString;
    use crate::solve::solve_plus_fpt;

    fn sample_instance() -> X3cInstance {
        X3cInstance::new(2, vec![[1, 3, 5], [2, 5, 6], [2, 4, 6], [1, 2, 4]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(X3cInstance::new(0, vec![[1, 2, 3]]).is_err());
        assert!(X3cInstance::new(1, vec![]).is_err());
        assert!(X3cInstance::new(1, vec![[1, 2, 4]]).is_err());
        assert!(X3cInstance::new(1, vec![[1, 1, 2]]).is_err());
    }

    #[test]
    fn sizes_and_first_gadget() {
        let (inst, map) = reduce_x3c(&sample_instance());
        assert_eq!(inst.m().len(), 24);
        assert_eq!(inst.a().len(), 60);
        assert!(inst.m().is_permutation_string());
        assert_eq!(map.m_tags.len(), 24);
        assert_eq!(map.a_tags.len(), 60);

        let t1 = ColoredString::from_tokens(
            "C_1_1/v_1_1_1 C_1_2/v_1_1_2 C_1_3/v_1_1_3 \
             C_1_4/v_1_2_1 C_1_5/v_1_2_2 C_1_6/v_1_2_3 \
             C_1_7/v_1_3_1 C_1_8/v_1_3_2 C_1_9/v_1_3_3 \
             b_1/v_1_4_1 b_2/v_1_4_2 b_3/v_1_4_3",
        )
        .unwrap();
        let first: Vec<usize> = (1..=12).collect();
        assert_eq!(inst.m().subsequence_at(&first).unwrap(), t1);

        let x1 = ColoredString::from_tokens(
            "b_1/v_1_1_1 b_3/v_1_1_2 b_5/v_1_1_3 \
             C_1_1/v_1_2_1 C_1_2/v_1_2_2 C_1_3/v_1_2_3 \
             C_1_1/v_1_1_1 C_1_2/v_1_1_2 C_1_3/v_1_1_3 \
             b_2/v_1_2_1 b_5/v_1_2_2 b_6/v_1_2_3 \
             C_1_4/v_1_3_1 C_1_5/v_1_3_2 C_1_6/v_1_3_3 \
             C_1_4/v_1_2_1 C_1_5/v_1_2_2 C_1_6/v_1_2_3 \
             b_2/v_1_3_1 b_4/v_1_3_2 b_6/v_1_3_3 \
             C_1_7/v_1_4_1 C_1_8/v_1_4_2 C_1_9/v_1_4_3 \
             C_1_7/v_1_3_1 C_1_8/v_1_3_2 C_1_9/v_1_3_3 \
             b_1/v_1_4_1 b_2/v_1_4_2 b_4/v_1_4_3",
        )
        .unwrap();
        let first: Vec<usize> = (1..=30).collect();
        assert_eq!(inst.a().subsequence_at(&first).unwrap(), x1);
    }

    #[test]
    fn printed_first_copy_solution() {
        // The first copy selects P_1, L_2, L_3, L_4 of X^(1).
        let (inst, map) = reduce_x3c(&sample_instance());
        let mut idx_a = vec![1, 2, 3, 4, 5, 6, 13, 14, 15, 22, 23, 24];
        for (k, p) in idx_a.iter().enumerate() {
            let want = [
                Gadget::P { i: 1, j: 1, k: 1 },
                Gadget::P { i: 1, j: 1, k: 2 },
                Gadget::P { i: 1, j: 1, k: 3 },
                Gadget::L { i: 1, j: 2, k: 1 },
                Gadget::L { i: 1, j: 2, k: 2 },
                Gadget::L { i: 1, j: 2, k: 3 },
                Gadget::L { i: 1, j: 3, k: 1 },
                Gadget::L { i: 1, j: 3, k: 2 },
                Gadget::L { i: 1, j: 3, k: 3 },
                Gadget::L { i: 1, j: 4, k: 1 },
                Gadget::L { i: 1, j: 4, k: 2 },
                Gadget::L { i: 1, j: 4, k: 3 },
            ][k];
            assert_eq!(map.a_gadget(*p), Some(want));
        }
        // Second copy covers S_3 = {2, 4, 6} via H_1, H_2, P_3, L_4 of X^(2).
        idx_a.extend([7, 8, 9, 16, 17, 18, 19, 20, 21, 22, 23, 24].map(|p| p + 30));
        let sol = SolutionPair::new((1..=24).collect(), idx_a);
        assert!(
            verify_plus(&inst, &sol).ok(),
            "{:?}",
            verify_plus(&inst, &sol)
        );
        assert_eq!(
            extract_cover(&sample_instance(), &map, &sol).unwrap(),
            vec![1, 3]
        );
    }

    #[test]
    fn solver_finds_cover() {
        let x = sample_instance();
        let (inst, map) = reduce_x3c(&x);
        let out = solve_plus_fpt(&inst).unwrap();
        let sol = out.best.expect("instance has a cover");
        let mut cover = extract_cover(&x, &map, &sol).unwrap();
        cover.sort_unstable();
        assert_eq!(cover, vec![1, 3]);
    }

    #[test]
    fn single_triple() {
        let x = X3cInstance::new(1, vec![[1, 2, 3]]).unwrap();
        let (inst, map) = reduce_x3c(&x);
        assert_eq!((inst.m().len(), inst.a().len()), (3, 3));
        let sol = solve_plus_fpt(&inst).unwrap().best.unwrap();
        assert_eq!(extract_cover(&x, &map, &sol).unwrap(), vec![1]);
    }

    #[test]
    fn extract_rejects_bad_input() {
        let x = sample_instance();
        let (_, map) = reduce_x3c(&x);
        let bogus = SolutionPair::new(vec![1], vec![1]);
        assert!(matches!(
            extract_cover(&x, &map, &bogus),
            Err(ReduceError::Unverified(_))
        ));
        let other = X3cInstance::new(2, vec![[1, 3, 5], [2, 4, 6]]).unwrap();
        assert_eq!(
            extract_cover(&other, &map, &bogus),
            Err(ReduceError::MapMismatch)
        );
    }
}
