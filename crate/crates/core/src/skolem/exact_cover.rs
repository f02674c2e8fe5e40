//! Dancing-links exact cover with minimum-remaining-values column choice.
//!
//! Deterministic: among columns of equal size the lowest index is branched on,
//! and rows are tried in insertion order.

pub struct ExactCover {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    column: Vec<usize>,
    row: Vec<usize>,
    size: Vec<usize>,
    rows: usize,
    budget: u64,
    nodes: u64,
}

/// Result of a search bounded by a node budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(Vec<usize>),
    Exhausted,
    BudgetExceeded,
}



const ROOT: usize = 0;

impl ExactCover {
    /// A problem with `columns` primary columns, all of which must be covered exactly once.
    pub fn new(columns: usize) -> ExactCover {
        let n = columns + 1;
        let mut ec = ExactCover {
            left: (0..n).map(|i| if i == 0 { columns } else { i - 1 }).collect(),
            right: (0..n).map(|i| if i == columns { 0 } else { i + 1 }).collect(),
            up: (0..n).collect(),
            down: (0..n).collect(),
            column: (0..n).collect(),
            row: vec![usize::MAX; n],
            size: vec![0; n],
            rows: 0,
            budget: u64::MAX,
            nodes: 0,
        };
        ec.size[ROOT] = usize::MAX;
        ec
    }

    /// Adds a row covering the given (0-based, distinct) columns; returns its id.
    pub fn add_row(&mut self, cols: &[usize]) -> usize {
        let id = self.rows;
        self.rows += 1;
        let first = self.left.len();
        for (k, &c) in cols.iter().enumerate() {
            let header = c + 1;
            let node = self.left.len();
            let (l, r) = if k == 0 { (node, node) } else { (node - 1, first) };
            self.left.push(l);
            self.right.push(r);
            if k > 0 {
                self.right[node - 1] = node;
                self.left[first] = node;
            }
            let above = self.up[header];
            self.up.push(above);
            self.down.push(header);
            self.down[above] = node;
            self.up[header] = node;
            self.column.push(header);
            self.row.push(id);
            self.size[header] += 1;
        }
        id
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.column[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                self.size[self.column[j]] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    fn choose_column(&self) -> Option<usize> {
        let mut best = None;
        let mut best_size = usize::MAX;
        let mut c = self.right[ROOT];
        while c != ROOT {
            if self.size[c] < best_size {
                best_size = self.size[c];
                best = Some(c);
                if best_size <= 1 {
                    break;
                }
            }
            c = self.right[c];
        }
        best
    }

    /// The first exact cover found, as row ids in the order they were chosen.
    pub fn solve_first(self) -> Option<Vec<usize>> {
        match self.solve_bounded(u64::MAX).0 {
            Outcome::Found(rows) => Some(rows),
            _ => None,
        }
    }

    /// Like [`ExactCover::solve_first`], giving up after `budget` search nodes.
    /// Also returns the number of nodes visited.
    pub fn solve_bounded(mut self, budget: u64) -> (Outcome, u64) {
        self.budget = budget;
        let mut chosen = Vec::new();
        let outcome = if self.search(&mut chosen) {
            Outcome::Found(chosen.iter().map(|&node| self.row[node]).collect())
        } else if self.nodes > self.budget {
            Outcome::BudgetExceeded
        } else {
            Outcome::Exhausted
        };
        (outcome, self.nodes.min(self.budget))
    }

    fn search(&mut self, chosen: &mut Vec<usize>) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        let Some(c) = self.choose_column() else {
            return true;
        };
        if self.size[c] == 0 {
            return false;
        }
        self.cover(c);
        let mut r = self.down[c];
        while r != c {
            chosen.push(r);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            if self.search(chosen) {
                return true;
            }
            if self.nodes > self.budget {
                return false;
            }
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            chosen.pop();
            r = self.down[r];
        }
        self.uncover(c);
        false
    }
}
