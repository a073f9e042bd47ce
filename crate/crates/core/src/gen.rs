//! Seeded generators for instances, graphs and X3C inputs.
//!
//! Every generator is a pure function of its seed and parameters. The
//! random source is SplitMix64 (state increment `0x9e3779b97f4a7c15`, then
//! the xor-shift-multiply finalizer with constants `0xbf58476d1ce4e5b9`
//! and `0x94d049bb133111eb`). Bounded draws use the high 64 bits of
//! `x * bound` and shuffles are Fisher-Yates from the top, so the outputs
//! can be reproduced from the description alone.

use std::collections::BTreeSet;

use crate::error::GenError;
use crate::model::{Block, ColoredString, Instance, Variant};
use crate::reduce::{Graph, X3cInstance};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: usize) -> usize {
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }

    /// Uniform in `[0, 1)` with 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i + 1);
            xs.swap(i, j);
        }
    }
}

fn block(ch: usize, color: usize) -> Block {
    Block::parse(&format!("a{ch}"), &color.to_string()).expect("generated identifiers are valid")
}

/// Random instance over chars `a1..a{n_chars}` and colors `1..n_colors`.
///
/// For `general` both strings are uniform. For the permutation variants `M`
/// pairs a shuffled char order with a shuffled color order, and `A` is
/// uniform over the same alphabets.
pub fn gen_random_instance(
    seed: u64,
    variant: Variant,
    m_len: usize,
    a_len: usize,
    n_colors: usize,
    n_chars: usize,
) -> Result<Instance, GenError> {
    if variant.requires_permutation() && !(m_len == n_colors && m_len == n_chars) {
        return Err(GenError::Inconsistent(format!(
            "{variant} needs m_len = n_colors = n_chars, got {m_len}, {n_colors}, {n_chars}"
        )));
    }
    if (m_len > 0 || a_len > 0) && (n_colors == 0 || n_chars == 0) {
        return Err(GenError::Inconsistent(
            "non-empty strings need non-empty alphabets".into(),
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let m = if variant.requires_permutation() {
        let mut chars: Vec<usize> = (1..=m_len).collect();
        let mut colors = chars.clone();
        rng.shuffle(&mut chars);
        rng.shuffle(&mut colors);
        chars
            .into_iter()
            .zip(colors)
            .map(|(c, k)| block(c, k))
            .collect()
    } else {
        uniform(&mut rng, m_len, n_colors, n_chars)
    };
    let a = uniform(&mut rng, a_len, n_colors, n_chars);
    Ok(Instance::new(variant, m, a).expect("pattern is a permutation by construction"))
}

fn uniform(rng: &mut SplitMix64, len: usize, n_colors: usize, n_chars: usize) -> ColoredString {
    (0..len)
        .map(|_| {
            let ch = rng.below(n_chars) + 1;
            let color = rng.below(n_colors) + 1;
            block(ch, color)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GraphKind {
    Cycle(usize),
    Complete(usize),
    /// `1 - 2 - ... - n`.
    Path(usize),
    /// Center `1`.
    Star(usize),
    /// Outer 5-cycle `1..5`, spokes `i - i+5`, inner pentagram on `6..10`.
    Petersen,
    /// Each pair independently with probability `p`.
    Random {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// A Hamiltonian cycle through a shuffled vertex order, plus each other
    /// pair with probability `extra_p`.
    PlantedHc {
        n: usize,
        extra_p: f64,
        seed: u64,
    },
}

pub fn gen_graph(kind: GraphKind) -> Result<Graph, GenError> {
    let need = |n: usize, min: usize| {
        if n < min {
            Err(GenError::Inconsistent(format!(
                "need at least {min} vertices, got {n}"
            )))
        } else {
            Ok(())
        }
    };
    let prob = |p: f64| {
        if (0.0..=1.0).contains(&p) {
            Ok(())
        } else {
            Err(GenError::Inconsistent(format!(
                "probability {p} outside [0, 1]"
            )))
        }
    };
    let edges: Vec<(usize, usize)> = match kind {
        GraphKind::Cycle(n) => {
            need(n, 3)?;
            (1..=n).map(|i| (i, i % n + 1)).collect()
        }
        GraphKind::Complete(n) => {
            need(n, 1)?;
            pairs(n).collect()
        }
        GraphKind::Path(n) => {
            need(n, 1)?;
            (1..n).map(|i| (i, i + 1)).collect()
        }
        GraphKind::Star(n) => {
            need(n, 1)?;
            (2..=n).map(|i| (1, i)).collect()
        }
        GraphKind::Petersen => {
            let outer = (0..5).map(|i| (i + 1, (i + 1) % 5 + 1));
            let spokes = (0..5).map(|i| (i + 1, i + 6));
            let inner = (0..5).map(|i| (i + 6, (i + 2) % 5 + 6));
            outer.chain(spokes).chain(inner).collect()
        }
        GraphKind::Random { n, p, seed } => {
            need(n, 1)?;
            prob(p)?;
            let mut rng = SplitMix64::new(seed);
            pairs(n).filter(|_| rng.next_f64() < p).collect()
        }
        GraphKind::PlantedHc { n, extra_p, seed } => {
            need(n, 3)?;
            prob(extra_p)?;
            let mut rng = SplitMix64::new(seed);
            let mut order: Vec<usize> = (1..=n).collect();
            rng.shuffle(&mut order);
            let mut set: BTreeSet<(usize, usize)> = (0..n)
                .map(|i| {
                    let (u, v) = (order[i], order[(i + 1) % n]);
                    (u.min(v), u.max(v))
                })
                .collect();
            for e in pairs(n) {
                if !set.contains(&e) && rng.next_f64() < extra_p {
                    set.insert(e);
                }
            }
            set.into_iter().collect()
        }
    };
    let n = match kind {
        GraphKind::Cycle(n) | GraphKind::Complete(n) | GraphKind::Path(n) | GraphKind::Star(n) => n,
        GraphKind::Petersen => 10,
        GraphKind::Random { n, .. } | GraphKind::PlantedHc { n, .. } => n,
    };
    Ok(Graph::new(n, edges).expect("generated edges are simple"))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |u| (u + 1..=n).map(move |v| (u, v)))
}

fn binomial3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// `m` distinct triples over `[3q]`, each listed ascending. With `planted`
/// the set contains a partition of `[3q]` into `q` triples; the final order
/// is shuffled either way.
pub fn gen_x3c(seed: u64, q: usize, m: usize, planted: bool) -> Result<X3cInstance, GenError> {
    if q == 0 || m == 0 {
        return Err(GenError::Inconsistent("q and m must be positive".into()));
    }
    if planted && m < q {
        return Err(GenError::Inconsistent(format!(
            "planted cover needs m >= q, got m={m} q={q}"
        )));
    }
    let base = 3 * q;
    if m > binomial3(base) {
        return Err(GenError::Inconsistent(format!(
            "only {} distinct triples exist over {base} elements",
            binomial3(base)
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut seen = BTreeSet::new();
    let mut triples = Vec::with_capacity(m);
    if planted {
        let mut elems: Vec<usize> = (1..=base).collect();
        rng.shuffle(&mut elems);
        for chunk in elems.chunks(3) {
            let mut t = [chunk[0], chunk[1], chunk[2]];
            t.sort_unstable();
            seen.insert(t);
            triples.push(t);
        }
    }
    while triples.len() < m {
        let mut elems: Vec<usize> = (1..=base).collect();
        for i in 0..3 {
            let j = i + rng.below(base - i);
            elems.swap(i, j);
        }
        let mut t = [elems[0], elems[1], elems[2]];
        t.sort_unstable();
        if seen.insert(t) {
            triples.push(t);
        }
    }
    rng.shuffle(&mut triples);
    Ok(X3cInstance::new(q, triples).expect("generated triples are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{hamiltonian_oracle, x3c_oracle};

    #[test]
    fn splitmix_vectors() {
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xe220_a839_7b1d_cdaf);
        assert_eq!(r.next_u64(), 0x6e78_9e6a_a1b9_65f4);
        assert_eq!(r.next_u64(), 0x06c4_5d18_8009_454f);
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = SplitMix64::new(9);
        for bound in 1..50 {
            assert!(r.below(bound) < bound);
        }
        let x = r.next_f64();
        assert!((0.0..1.0).contains(&x));
    }

    #[test]
    fn instances_are_reproducible() {
        let a = gen_random_instance(1, Variant::OmdciPlus, 4, 6, 4, 4).unwrap();
        let b = gen_random_instance(1, Variant::OmdciPlus, 4, 6, 4, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.m().len(), a.a().len()), (4, 6));
        assert!(a.m().is_permutation_string());
        let distinct: BTreeSet<String> = (0..100)
            .map(|s| {
                let i = gen_random_instance(s, Variant::Omdci, 4, 6, 4, 4).unwrap();
                format!("{} | {}", i.m(), i.a())
            })
            .collect();
        assert!(distinct.len() > 90);
    }

    #[test]
    fn instance_parameter_errors() {
        assert!(gen_random_instance(1, Variant::Omdci, 4, 6, 3, 4).is_err());
        assert!(gen_random_instance(1, Variant::General, 2, 2, 0, 2).is_err());
        assert!(gen_random_instance(1, Variant::General, 0, 0, 0, 0).is_ok());
    }

    #[test]
    fn named_graphs() {
        assert_eq!(gen_graph(GraphKind::Cycle(5)).unwrap().edge_count(), 5);
        assert_eq!(gen_graph(GraphKind::Complete(4)).unwrap().edge_count(), 6);
        assert_eq!(gen_graph(GraphKind::Path(4)).unwrap().edge_count(), 3);
        assert_eq!(gen_graph(GraphKind::Star(4)).unwrap().degree(1), 3);
        let p = gen_graph(GraphKind::Petersen).unwrap();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!((1..=10).all(|v| p.degree(v) == 3));
        assert!(gen_graph(GraphKind::Cycle(2)).is_err());
        assert!(gen_graph(GraphKind::Random {
            n: 4,
            p: 1.5,
            seed: 0
        })
        .is_err());
    }

    #[test]
    fn random_graph_extremes() {
        let full = gen_graph(GraphKind::Random {
            n: 5,
            p: 1.0,
            seed: 3,
        })
        .unwrap();
        assert_eq!(full.edge_count(), 10);
        let empty = gen_graph(GraphKind::Random {
            n: 5,
            p: 0.0,
            seed: 3,
        })
        .unwrap();
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn planted_graphs_are_hamiltonian() {
        let g = gen_graph(GraphKind::PlantedHc {
            n: 6,
            extra_p: 0.2,
            seed: 7,
        })
        .unwrap();
        assert!(hamiltonian_oracle(&g).is_some());
        for seed in 0..30 {
            let g = gen_graph(GraphKind::PlantedHc {
                n: 7,
                extra_p: 0.1,
                seed,
            })
            .unwrap();
            assert!(hamiltonian_oracle(&g).is_some());
        }
    }

    #[test]
    fn x3c_generation() {
        let x = gen_x3c(5, 2, 4, true).unwrap();
        assert!(x3c_oracle(&x).is_some());
        assert_eq!(x, gen_x3c(5, 2, 4, true).unwrap());
        let single = gen_x3c(11, 1, 1, true).unwrap();
        assert_eq!(single.triples(), &[[1, 2, 3]]);
        let all = gen_x3c(2, 2, 20, false).unwrap();
        let set: BTreeSet<_> = all.triples().iter().collect();
        assert_eq!(set.len(), 20);
        assert!(gen_x3c(2, 2, 21, false).is_err());
        assert!(gen_x3c(2, 3, 2, true).is_err());
        for seed in 0..50 {
            assert!(x3c_oracle(&gen_x3c(seed, 2, 3, true).unwrap()).is_some());
        }
    }
}
