//! Permutation enumeration for the full-cover variant.
//!
//! The colors of `M` stay in place; the characters of `M` are assigned to the
//! color positions in every possible order, lexicographic over character
//! identifiers. Each candidate is scanned greedily (earliest A position with
//! both the same color and the same character). Candidates sharing a prefix
//! share the scan of that prefix, so a prefix that cannot be placed rules out
//! all of its completions at once; the first success in enumeration order is
//! the same as with one-by-one enumeration.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use super::encode::Encoded;

pub(crate) struct FptRun {
    /// 0-based A positions of the winning candidate.
    pub picks: Option<Vec<usize>>,
    pub nodes: u64,
    pub aborted: bool,
}

struct Tables {
    d: usize,
    /// M's characters sorted by identifier.
    order: Vec<u32>,
    /// pair_pos[color][rank]: ascending A positions carrying (color, order[rank]).
    pair_pos: Vec<Vec<Vec<usize>>>,
    m_col: Vec<u32>,
}

impl Tables {
    fn new(enc: &Encoded) -> Self {
        let d = enc.m_col.len();
        let mut order: Vec<u32> = enc.m_chr.clone();
        order.sort_by(|&x, &y| enc.char_names[x as usize].cmp(&enc.char_names[y as usize]));
        let mut rank_of = vec![usize::MAX; enc.n_chars];
        for (r, &c) in order.iter().enumerate() {
            rank_of[c as usize] = r;
        }
        let mut pair_pos = vec![vec![Vec::new(); d]; enc.n_colors];
        for (p, (&col, &ch)) in enc.a_col.iter().zip(&enc.a_chr).enumerate() {
            let r = rank_of[ch as usize];
            if r != usize::MAX {
                pair_pos[col as usize][r].push(p);
            }
        }
        Self {
            d,
            order,
            pair_pos,
            m_col: enc.m_col.clone(),
        }
    }

    fn first_at_or_after(&self, level: usize, rank: usize, from: usize) -> Option<usize> {
        let occ = &self.pair_pos[self.m_col[level] as usize][rank];
        let i = occ.partition_point(|&p| p < from);
        occ.get(i).copied()
    }
}

struct Branch<'a> {
    t: &'a Tables,
    used: Vec<bool>,
    picks: Vec<usize>,
    nodes: u64,
    limit: Option<u64>,
    aborted: bool,
}

impl Branch<'_> {
    /// Tries assigning `rank` at `level`; counts one node per attempt.
    fn attempt(&mut self, level: usize, rank: usize, from: usize) -> bool {
        self.nodes += 1;
        if self.limit.is_some_and(|l| self.nodes > l) {
            self.aborted = true;
            return false;
        }
        let Some(p) = self.t.first_at_or_after(level, rank, from) else {
            return false;
        };
        self.used[rank] = true;
        self.picks.push(p);
        if self.extend(level + 1, p + 1) {
            return true;
        }
        self.picks.pop();
        self.used[rank] = false;
        false
    }

    fn extend(&mut self, level: usize, from: usize) -> bool {
        if level == self.t.d {
            return true;
        }
        for rank in 0..self.t.d {
            if self.used[rank] {
                continue;
            }
            if self.attempt(level, rank, from) {
                return true;
            }
            if self.aborted {
                return false;
            }
        }
        false
    }
}

fn new_branch(t: &Tables, limit: Option<u64>) -> Branch<'_> {
    Branch {
        t,
        used: vec![false; t.d],
        picks: Vec::with_capacity(t.d),
        nodes: 0,
        limit,
        aborted: false,
    }
}

pub(crate) fn run(enc: &Encoded, threads: usize, max_nodes: Option<u64>) -> FptRun {
    let t = Tables::new(enc);
    if t.d == 0 {
        return FptRun {
            picks: None,
            nodes: 0,
            aborted: false,
        };
    }
    debug_assert_eq!(t.order.len(), t.d);
    if threads <= 1 || max_nodes.is_some() || t.d == 1 {
        let mut b = new_branch(&t, max_nodes);
        let found = b.extend(0, 0);
        return FptRun {
            picks: found.then_some(b.picks),
            nodes: b.nodes,
            aborted: b.aborted,
        };
    }
    parallel(&t, threads)
}

/// Splits on the character placed first. Each top-level branch is explored
/// to completion or first success; the winner is the lowest successful
/// branch, and only branches up to it are counted, so the outcome matches the
/// sequential run exactly.
type BranchResult = (bool, u64, Vec<usize>);

fn parallel(t: &Tables, threads: usize) -> FptRun {
    let d = t.d;
    let next = AtomicUsize::new(0);
    let winner = AtomicUsize::new(usize::MAX);
    let results: Mutex<Vec<Option<BranchResult>>> = Mutex::new(vec![None; d]);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(d) {
            scope.spawn(|| loop {
                let rank = next.fetch_add(1, Ordering::SeqCst);
                if rank >= d || rank > winner.load(Ordering::SeqCst) {
                    break;
                }
                let mut b = new_branch(t, None);
                let ok = b.attempt(0, rank, 0);
                if ok {
                    winner.fetch_min(rank, Ordering::SeqCst);
                }
                results.lock().unwrap()[rank] = Some((ok, b.nodes, b.picks));
            });
        }
    });
    let results = results.into_inner().unwrap();
    let mut nodes = 0;
    for r in results {
        let (ok, n, picks) = r.expect("branches up to the winner are always run");
        nodes += n;
        if ok {
            return FptRun {
                picks: Some(picks),
                nodes,
                aborted: false,
            };
        }
    }
    FptRun {
        picks: None,
        nodes,
        aborted: false,
    }
}
