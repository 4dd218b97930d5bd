//! A small depth-first constraint search over byte-valued cells.
//!
//! Cells are assigned in index order. Every constraint instance names a
//! trigger cell, the last of the cells it reads unconditionally; it is
//! evaluated as soon as that cell is assigned. Instances whose outcome
//! depends on a cell chosen by an earlier value (`θ_{θ_x(y)}(..)`, say)
//! may answer `Pending(cell)`; they are parked on that cell and
//! re-evaluated when it is assigned.

pub(crate) const UNSET: u8 = u8::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Status {
    Holds,
    Fails,
    Pending(usize),
}

pub(crate) struct Problem<I> {
    pub cells: usize,
    pub domain: usize,
    /// `(trigger, instance)`.
    pub instances: Vec<(usize, I)>,
}

struct State<'p, I, F> {
    problem: &'p Problem<I>,
    eval: &'p F,
    by_trigger: Vec<Vec<u32>>,
    watch: Vec<Vec<u32>>,
    /// Cells whose watch list grew, in push order.
    log: Vec<usize>,
    assign: Vec<u8>,
}

impl<I, F: Fn(&I, &[u8]) -> Status> State<'_, I, F> {
    fn check(&mut self, inst: u32) -> bool {
        match (self.eval)(&self.problem.instances[inst as usize].1, &self.assign) {
            Status::Holds => true,
            Status::Fails => false,
            Status::Pending(c) => {
                debug_assert_eq!(self.assign[c], UNSET);
                self.watch[c].push(inst);
                self.log.push(c);
                true
            }
        }
    }

    fn consistent_at(&mut self, cell: usize) -> bool {
        for i in 0..self.by_trigger[cell].len() {
            if !self.check(self.by_trigger[cell][i]) {
                return false;
            }
        }
        for i in 0..self.watch[cell].len() {
            if !self.check(self.watch[cell][i]) {
                return false;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.log.len() > mark {
            let c = self.log.pop().expect("non-empty log");
            self.watch[c].pop();
        }
    }

    fn dfs(&mut self, depth: usize, limit: usize, prefix: &[u8], emit: &mut dyn FnMut(&[u8])) {
        if depth == limit {
            emit(&self.assign[..limit]);
            return;
        }
        let values = if depth < prefix.len() {
            prefix[depth]..prefix[depth] + 1
        } else {
            0..self.problem.domain as u8
        };
        for v in values {
            self.assign[depth] = v;
            let mark = self.log.len();
            if self.consistent_at(depth) {
                self.dfs(depth + 1, limit, prefix, emit);
            }
            self.undo(mark);
        }
        self.assign[depth] = UNSET;
    }
}

/// Calls `emit` with every assignment of the first `limit` cells that
/// extends `prefix` and violates no instance decidable within those cells.
pub(crate) fn search<I, F: Fn(&I, &[u8]) -> Status>(
    problem: &Problem<I>,
    eval: &F,
    prefix: &[u8],
    limit: usize,
    emit: &mut dyn FnMut(&[u8]),
) {
    assert!(problem.domain <= UNSET as usize);
    let mut by_trigger = vec![Vec::new(); problem.cells];
    for (i, (t, _)) in problem.instances.iter().enumerate() {
        by_trigger[*t].push(i as u32);
    }
    let mut state = State {
        problem,
        eval,
        by_trigger,
        watch: vec![Vec::new(); problem.cells],
        log: Vec::new(),
        assign: vec![UNSET; problem.cells],
    };
    state.dfs(0, limit.min(problem.cells), prefix, emit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pending_instances_are_rechecked() {
        // Three cells over {0,1,2}; cell a[0] names a cell that must equal 1.
        let problem = Problem {
            cells: 3,
            domain: 3,
            instances: vec![(0, ())],
        };
        let eval = |_: &(), a: &[u8]| {
            let c = a[0] as usize;
            if c == 0 {
                return Status::Fails;
            }
            match a[c] {
                UNSET => Status::Pending(c),
                1 => Status::Holds,
                _ => Status::Fails,
            }
        };
        let mut found = Vec::new();
        search(&problem, &eval, &[], 3, &mut |a| found.push(a.to_vec()));
        let mut brute = Vec::new();
        for a in 0..3u8 {
            for b in 0..3u8 {
                for c in 0..3u8 {
                    let v = [a, b, c];
                    if a != 0 && v[a as usize] == 1 {
                        brute.push(v.to_vec());
                    }
                }
            }
        }
        assert_eq!(found, brute);
    }
}
