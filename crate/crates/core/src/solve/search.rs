//! Depth-first search over M positions.
//!
//! Each M position is either matched to a later A position of the same color
//! or skipped. Matching tries A positions in ascending order before skipping,
//! so states are reached in lexicographic order of `(idx_m, idx_a)` and the
//! first state recorded at a given size is the tie-break winner.
//!
//! A signed per-character balance (taken from M minus taken from A) is kept.
//! A branch is cut when some owed character can no longer be supplied: a
//! surplus on the M side needs enough A positions in the remaining suffix
//! whose color still occurs in the remaining M suffix, and symmetrically.

use super::encode::Encoded;

const NONE: u32 = u32::MAX;

pub(crate) struct Config {
    pub require_full: bool,
    pub stop_at_first: bool,
    pub max_nodes: Option<u64>,
    pub max_k: Option<usize>,
}

pub(crate) struct Found {
    pub best: Option<(Vec<usize>, Vec<usize>)>,
    pub nodes: u64,
    pub aborted: bool,
    pub capped: bool,
}

struct Search<'a> {
    enc: &'a Encoded,
    cfg: &'a Config,
    nc: usize,
    // next_a[j * nc + c]: first A index >= j with color c.
    next_a: Vec<u32>,
    // last index + 1 of each color (0 if absent).
    last_m: Vec<usize>,
    last_a: Vec<usize>,
    a_by_char: Vec<Vec<usize>>,
    m_by_char: Vec<Vec<usize>>,
    balance: Vec<i32>,
    nonzero: Vec<u32>,
    nz_slot: Vec<usize>,
    pick_m: Vec<usize>,
    pick_a: Vec<usize>,
    best: Option<(Vec<usize>, Vec<usize>)>,
    best_k: usize,
    nodes: u64,
    aborted: bool,
    capped: bool,
    done: bool,
}

pub(crate) fn run(enc: &Encoded, cfg: &Config) -> Found {
    let nc = enc.n_colors.max(1);
    let (ml, al) = (enc.m_col.len(), enc.a_col.len());
    let mut next_a = vec![NONE; (al + 1) * nc];
    for j in (0..al).rev() {
        next_a.copy_within((j + 1) * nc..(j + 2) * nc, j * nc);
        next_a[j * nc + enc.a_col[j] as usize] = j as u32;
    }
    let mut last_m = vec![0; nc];
    for (i, &c) in enc.m_col.iter().enumerate() {
        last_m[c as usize] = i + 1;
    }
    let mut last_a = vec![0; nc];
    for (i, &c) in enc.a_col.iter().enumerate() {
        last_a[c as usize] = i + 1;
    }
    let mut a_by_char = vec![Vec::new(); enc.n_chars];
    for (i, &c) in enc.a_chr.iter().enumerate() {
        a_by_char[c as usize].push(i);
    }
    let mut m_by_char = vec![Vec::new(); enc.n_chars];
    for (i, &c) in enc.m_chr.iter().enumerate() {
        m_by_char[c as usize].push(i);
    }
    let mut s = Search {
        enc,
        cfg,
        nc,
        next_a,
        last_m,
        last_a,
        a_by_char,
        m_by_char,
        balance: vec![0; enc.n_chars],
        nonzero: Vec::new(),
        nz_slot: vec![usize::MAX; enc.n_chars],
        pick_m: Vec::with_capacity(ml),
        pick_a: Vec::with_capacity(ml),
        best: None,
        best_k: 0,
        nodes: 0,
        aborted: false,
        capped: false,
        done: false,
    };
    s.dfs(0, 0);
    Found {
        best: s.best,
        nodes: s.nodes,
        aborted: s.aborted,
        capped: s.capped,
    }
}

impl Search<'_> {
    fn next_a(&self, from: usize, color: u32) -> u32 {
        self.next_a[from * self.nc + color as usize]
    }

    fn bump(&mut self, ch: u32, delta: i32) {
        let c = ch as usize;
        let before = self.balance[c];
        let after = before + delta;
        self.balance[c] = after;
        if before == 0 {
            self.nz_slot[c] = self.nonzero.len();
            self.nonzero.push(ch);
        } else if after == 0 {
            let slot = self.nz_slot[c];
            self.nonzero.swap_remove(slot);
            if let Some(&moved) = self.nonzero.get(slot) {
                self.nz_slot[moved as usize] = slot;
            }
            self.nz_slot[c] = usize::MAX;
        }
    }

    /// Every owed character must still be obtainable from the suffixes
    /// starting at `m_next` and `a_next`.
    fn feasible(&self, m_next: usize, a_next: usize) -> bool {
        let enc = self.enc;
        self.nonzero.iter().all(|&ch| {
            let c = ch as usize;
            let b = self.balance[c];
            if b > 0 {
                let occ = &self.a_by_char[c];
                let start = occ.partition_point(|&p| p < a_next);
                occ[start..]
                    .iter()
                    .filter(|&&p| self.last_m[enc.a_col[p] as usize] > m_next)
                    .take(b as usize)
                    .count()
                    == b as usize
            } else {
                let need = (-b) as usize;
                let occ = &self.m_by_char[c];
                let start = occ.partition_point(|&p| p < m_next);
                occ[start..]
                    .iter()
                    .filter(|&&p| self.last_a[enc.m_col[p] as usize] > a_next)
                    .take(need)
                    .count()
                    == need
            }
        })
    }

    fn dfs(&mut self, mi: usize, a_next: usize) {
        if self.done || self.aborted {
            return;
        }
        self.nodes += 1;
        if let Some(limit) = self.cfg.max_nodes {
            if self.nodes > limit {
                self.aborted = true;
                return;
            }
        }
        let ml = self.enc.m_col.len();
        let al = self.enc.a_col.len();
        let k = self.pick_m.len();
        if k > self.best_k && self.nonzero.is_empty() && (!self.cfg.require_full || k == ml) {
            self.best_k = k;
            self.best = Some((self.pick_m.clone(), self.pick_a.clone()));
            if self.cfg.stop_at_first {
                self.done = true;
                return;
            }
        }
        if mi == ml {
            return;
        }
        let rem_m = ml - mi;
        let rem_a = al - a_next;
        if self.cfg.require_full && rem_a < rem_m {
            return;
        }
        if k + rem_m.min(rem_a) <= self.best_k {
            return;
        }

        let color = self.enc.m_col[mi];
        let m_ch = self.enc.m_chr[mi];
        let mut p = self.next_a(a_next, color);
        if self.cfg.max_k.is_some_and(|cap| k >= cap) {
            if p != NONE {
                self.capped = true;
            }
        } else {
            while p != NONE {
                let pa = p as usize;
                let a_ch = self.enc.a_chr[pa];
                if a_ch != m_ch {
                    self.bump(m_ch, 1);
                    self.bump(a_ch, -1);
                }
                if self.feasible(mi + 1, pa + 1) {
                    self.pick_m.push(mi + 1);
                    self.pick_a.push(pa + 1);
                    self.dfs(mi + 1, pa + 1);
                    self.pick_m.pop();
                    self.pick_a.pop();
                }
                if a_ch != m_ch {
                    self.bump(a_ch, 1);
                    self.bump(m_ch, -1);
                }
                if self.done || self.aborted {
                    return;
                }
                p = self.next_a(pa + 1, color);
            }
        }

        if !self.cfg.require_full && self.feasible(mi + 1, a_next) {
            self.dfs(mi + 1, a_next);
        }
    }
}
