use super::Colouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default number of extended path prefixes [`find_repetition`] may visit.
pub const REPETITION_BUDGET: u64 = 10_000_000;
/// Default vertex cap for [`pi_exact`].
pub const PI_CAP: usize = 9;

struct PathSearch<'a> {
    g: &'a Graph,
    colours: &'a [usize],
    /// Only vertices with `allowed[v]` may be used.
    allowed: Option<&'a [bool]>,
    /// A path counts only if it visits this vertex.
    through: Option<usize>,
    max_len: usize,
    path: Vec<usize>,
    on_path: Vec<bool>,
    steps: u64,
    budget: u64,
}

impl PathSearch<'_> {
    fn repetitive(&self) -> bool {
        let len = self.path.len();
        if len % 2 == 1 || len == 0 {
            return false;
        }
        if let Some(t) = self.through {
            if !self.on_path[t] {
                return false;
            }
        }
        let s = len / 2;
        (0..s).all(|i| self.colours[self.path[i]] == self.colours[self.path[i + s]])
    }

    fn usable(&self, v: usize) -> bool {
        !self.on_path[v] && self.allowed.map_or(true, |a| a[v])
    }

    fn extend(&mut self) -> Result<bool> {
        if self.repetitive() {
            return Ok(true);
        }
        if self.path.len() == self.max_len {
            return Ok(false);
        }
        let last = *self.path.last().expect("path is never empty here");
        for w in self.g.neighbours(last) {
            if !self.usable(w) {
                continue;
            }
            self.steps += 1;
            if self.steps > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            self.path.push(w);
            self.on_path[w] = true;
            if self.extend()? {
                return Ok(true);
            }
            self.on_path[w] = false;
            self.path.pop();
        }
        Ok(false)
    }

    fn run(&mut self) -> Result<Option<Vec<usize>>> {
        for v in 0..self.g.n() {
            if !self.usable(v) {
                continue;
            }
            self.path.push(v);
            self.on_path[v] = true;
            if self.extend()? {
                return Ok(Some(self.path.clone()));
            }
            self.on_path[v] = false;
            self.path.pop();
        }
        Ok(None)
    }
}

fn search<'a>(
    g: &'a Graph,
    colours: &'a [usize],
    allowed: Option<&'a [bool]>,
    through: Option<usize>,
    max_half: usize,
    budget: u64,
) -> PathSearch<'a> {
    PathSearch {
        g,
        colours,
        allowed,
        through,
        max_len: 2 * max_half,
        path: Vec::new(),
        on_path: vec![false; g.n()],
        steps: 0,
        budget,
    }
}

/// The lexicographically least path `v_1 … v_2s` with `s ≤ max_half` on
/// which `c` is repetitive, if any.
pub fn find_repetition(c: &Colouring, max_half: usize) -> Result<Option<Vec<usize>>> {
    find_repetition_with_budget(c, max_half, REPETITION_BUDGET)
}

pub fn find_repetition_with_budget(c: &Colouring, max_half: usize, budget: u64) -> Result<Option<Vec<usize>>> {
    search(c.graph(), c.colours(), None, None, max_half, budget).run()
}

/// Whether no path at all is repetitively coloured.
pub fn is_nonrepetitive(c: &Colouring) -> Result<bool> {
    Ok(find_repetition(c, c.graph().n() / 2)?.is_none())
}

struct ColourSearch<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    colours: Vec<usize>,
    coloured: Vec<bool>,
    steps: u64,
    budget: u64,
}

impl ColourSearch<'_> {
    fn clean_after(&mut self, v: usize) -> Result<bool> {
        if self.g.neighbours(v).any(|w| self.coloured[w] && self.colours[w] == self.colours[v]) {
            return Ok(false);
        }
        let left = self.budget.saturating_sub(self.steps);
        let n = self.g.n();
        let mut s = search(self.g, &self.colours, Some(&self.coloured), Some(v), n / 2, left);
        let found = s.run();
        self.steps += s.steps;
        match found {
            Ok(hit) => Ok(hit.is_none()),
            Err(_) => Err(Error::BudgetExceeded(self.budget)),
        }
    }

    fn place(&mut self, i: usize, used: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        let v = self.order[i];
        for c in 0..(used + 1).min(self.k) {
            self.colours[v] = c;
            self.coloured[v] = true;
            if self.clean_after(v)? && self.place(i + 1, used.max(c + 1))? {
                return Ok(true);
            }
            self.coloured[v] = false;
        }
        Ok(false)
    }
}

/// Breadth-first order, component by component, so that each new vertex
/// tends to close paths among those already coloured.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut head = start;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

/// A non-repetitive colouring of `g` with at most `k` colours, found by
/// exhaustive search, or `None` if there is none. Fails with
/// [`Error::BudgetExceeded`] once `budget` path extensions have been spent.
pub fn nonrep_colouring(g: &Graph, k: usize, budget: u64) -> Result<Option<Colouring>> {
    if g.n() == 0 {
        return Ok(Some(Colouring::new(g.clone(), vec![])?));
    }
    let mut s = ColourSearch {
        g,
        k,
        order: bfs_order(g),
        colours: vec![0; g.n()],
        coloured: vec![false; g.n()],
        steps: 0,
        budget,
    };
    if s.place(0, 0)? {
        Ok(Some(Colouring::new(g.clone(), s.colours)?))
    } else {
        Ok(None)
    }
}

/// `π(g)`, the fewest colours in a non-repetitive colouring, with a witness.
pub fn pi_exact(g: &Graph) -> Result<(usize, Colouring)> {
    pi_exact_with_cap(g, PI_CAP)
}

pub fn pi_exact_with_cap(g: &Graph, cap: usize) -> Result<(usize, Colouring)> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "pi_exact", size: g.n(), cap });
    }
    for k in 0.. {
        if let Some(c) = nonrep_colouring(g, k, u64::MAX)? {
            return Ok((k, c));
        }
    }
    unreachable!("distinct colours are non-repetitive")
}
