//! Backtracking over bitmasks: the leftmost free position must start some unused
//! symbol, so each node tries the symbols whose whole progression is still free.
//!
//! Positions are 0-based bits of a `u128`, so rows of at most 128 cells. States
//! `(free, unused)` proven to have no completion are remembered, across attempts
//! too, since that fact does not depend on the order symbols are tried in.

use rustc_hash::FxHashSet;

use super::exact_cover::Outcome;

pub const MAX_LENGTH: usize = 128;

/// Cap on remembered dead states.
const MEMO_LIMIT: usize = 1 << 23;

pub struct BitSearch {
    length: usize,
    /// Progression masks anchored at bit 0, indexed by symbol.
    pattern: Vec<u128>,
    /// Last offset of each progression.
    span: Vec<usize>,
    start_free: u128,
    start_unused: u128,
    dead: FxHashSet<(u128, u128)>,
    order: Vec<usize>,
    starts: Vec<(usize, usize)>,
    budget: u64,
    nodes: u64,
}

impl BitSearch {
    /// `j` copies of each symbol `1..=n` in a row of `length` cells, with the
    /// 0-based `hole` left empty.
    pub fn new(n: usize, j: usize, length: usize, hole: Option<usize>) -> BitSearch {
        assert!(length <= MAX_LENGTH && n < 128);
        let pattern = (0..=n)
            .map(|i| if i == 0 { 0 } else { (0..j).fold(0u128, |m, w| m | 1u128 << (w * i)) })
            .collect();
        let all = if length == 128 { u128::MAX } else { (1u128 << length) - 1 };
        BitSearch {
            length,
            pattern,
            span: (0..=n).map(|i| (j - 1) * i).collect(),
            start_free: hole.map_or(all, |h| all & !(1u128 << h)),
            start_unused: (1..=n).fold(0u128, |m, i| m | 1u128 << i),
            dead: FxHashSet::default(),
            order: Vec::new(),
            starts: Vec::with_capacity(n),
            budget: 0,
            nodes: 0,
        }
    }

    /// One attempt trying symbols in `order`, giving up after `budget` nodes.
    ///
    /// `Found` carries `symbol * length + start` per symbol, starts 0-based.
    /// Also returns the nodes visited.
    pub fn attempt(&mut self, order: &[usize], budget: u64) -> (Outcome, u64) {
        self.order.clear();
        self.order.extend_from_slice(order);
        self.starts.clear();
        self.budget = budget;
        self.nodes = 0;
        let outcome = if self.search(self.start_free, self.start_unused) {
            Outcome::Found(self.starts.iter().map(|&(i, r)| i * self.length + r).collect())
        } else if self.nodes > self.budget {
            Outcome::BudgetExceeded
        } else {
            Outcome::Exhausted
        };
        (outcome, self.nodes.min(self.budget))
    }

    fn search(&mut self, free: u128, unused: u128) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if free == 0 {
            return true;
        }
        if self.dead.contains(&(free, unused)) {
            return false;
        }
        let p = free.trailing_zeros() as usize;
        for k in 0..self.order.len() {
            let i = self.order[k];
            if unused >> i & 1 == 0 || p + self.span[i] >= self.length {
                continue;
            }
            let m = self.pattern[i] << p;
            if free & m != m {
                continue;
            }
            self.starts.push((i, p));
            if self.search(free & !m, unused & !(1u128 << i)) {
                return true;
            }
            self.starts.pop();
            if self.nodes > self.budget {
                return false;
            }
        }
        if self.dead.len() < MEMO_LIMIT {
            self.dead.insert((free, unused));
        }
        false
    }
}
