//! Solver entry points and a deterministic DPLL engine: unit propagation, pure-literal elimination,
//! chronological backtracking. Branches on the lowest-index unassigned
//! variable, true first. No clause learning.
//!
//! Clause state is tracked with counters (true and false literals per
//! clause), which also yields the per-literal occurrence counts over
//! not-yet-satisfied clauses that pure-literal detection needs.

use super::cnf::Cnf;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    /// `assignment[v - 1]` is the value of variable v. Always verified
    /// against every clause before being returned.
    Sat(Vec<bool>),
    Unsat,
}

impl SolveResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveResult::Sat(_))
    }

    pub fn assignment(&self) -> Option<&[bool]> {
        match self {
            SolveResult::Sat(a) => Some(a),
            SolveResult::Unsat => None,
        }
    }

    pub fn status_str(&self) -> &'static str {
        match self {
            SolveResult::Sat(_) => "sat",
            SolveResult::Unsat => "unsat",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub decisions: u64,
    pub conflicts: u64,
    pub propagations: u64,
    pub pure_literals: u64,
}

/// Solves `cnf` with the clause-learning engine. `Err` only on an internal
/// defect (a model that fails the re-check).
pub fn solve(cnf: &Cnf) -> Result<SolveResult> {
    solve_with_stats(cnf).map(|(r, _)| r)
}

pub fn solve_with_stats(cnf: &Cnf) -> Result<(SolveResult, SolveStats)> {
    if cnf.has_empty_clause() {
        return Ok((SolveResult::Unsat, SolveStats::default()));
    }
    let Some(mut solver) = super::cdcl::Cdcl::new(cnf) else {
        return Ok((SolveResult::Unsat, SolveStats::default()));
    };
    let result = solver.run();
    checked(cnf, result, solver.stats)
}

/// Solves `cnf` with plain DPLL (no learning). Slower, but small enough to
/// audit; used to cross-check the default engine.
pub fn solve_dpll(cnf: &Cnf) -> Result<SolveResult> {
    solve_dpll_with_stats(cnf).map(|(r, _)| r)
}

pub fn solve_dpll_with_stats(cnf: &Cnf) -> Result<(SolveResult, SolveStats)> {
    if cnf.has_empty_clause() {
        return Ok((SolveResult::Unsat, SolveStats::default()));
    }
    let mut solver = Dpll::new(cnf);
    let result = solver.run();
    checked(cnf, result, solver.stats)
}

fn checked(cnf: &Cnf, result: SolveResult, stats: SolveStats) -> Result<(SolveResult, SolveStats)> {
    if let SolveResult::Sat(assignment) = &result {
        if let Some(i) = cnf.first_falsified(assignment) {
            return Err(Error::Internal(format!(
                "solver model falsifies clause {i}: {:?}",
                cnf.clauses()[i]
            )));
        }
    }
    Ok((result, stats))
}

#[inline]
fn code(l: i32) -> usize {
    ((l.unsigned_abs() as usize) << 1) | (l < 0) as usize
}

#[derive(Debug, Clone, Copy)]
struct Decision {
    trail_len: usize,
    lit: usize,
    flipped: bool,
}

struct Dpll<'a> {
    clauses: &'a [Vec<i32>],
    nvars: usize,
    /// Clause ids containing each literal code.
    occ: Vec<Vec<u32>>,
    n_true: Vec<u32>,
    n_false: Vec<u32>,
    /// Occurrences of each literal code in clauses with no true literal.
    open_occ: Vec<u32>,
    satisfied: usize,
    /// Per variable: 0 unassigned, 1 true, -1 false.
    value: Vec<i8>,
    trail: Vec<usize>,
    decisions: Vec<Decision>,
    pending: Vec<u32>,
    stats: SolveStats,
}

impl<'a> Dpll<'a> {
    fn new(cnf: &'a Cnf) -> Self {
        let nvars = cnf.variable_count() as usize;
        let clauses = cnf.clauses();
        let mut occ = vec![Vec::new(); 2 * nvars + 2];
        let mut open_occ = vec![0u32; 2 * nvars + 2];
        for (ci, clause) in clauses.iter().enumerate() {
            for &l in clause {
                occ[code(l)].push(ci as u32);
                open_occ[code(l)] += 1;
            }
        }
        let pending = clauses
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() == 1)
            .map(|(i, _)| i as u32)
            .collect();
        Dpll {
            clauses,
            nvars,
            occ,
            n_true: vec![0; clauses.len()],
            n_false: vec![0; clauses.len()],
            open_occ,
            satisfied: 0,
            value: vec![0; nvars + 1],
            trail: Vec::with_capacity(nvars),
            decisions: Vec::new(),
            pending,
            stats: SolveStats::default(),
        }
    }

    #[inline]
    fn lit_value(&self, l: i32) -> i8 {
        let v = self.value[l.unsigned_abs() as usize];
        if l < 0 {
            -v
        } else {
            v
        }
    }

    /// Makes literal `lit` (a code) true. Returns false if some clause
    /// became fully false. Counters are always updated in full so that
    /// [`unassign`](Self::unassign) can reverse them.
    fn assign(&mut self, lit: usize) -> bool {
        let var = lit >> 1;
        self.value[var] = if lit & 1 == 0 { 1 } else { -1 };
        self.trail.push(lit);
        for &c in &self.occ[lit] {
            let c = c as usize;
            self.n_true[c] += 1;
            if self.n_true[c] == 1 {
                self.satisfied += 1;
                for &l in &self.clauses[c] {
                    self.open_occ[code(l)] -= 1;
                }
            }
        }
        let mut ok = true;
        for &c in &self.occ[lit ^ 1] {
            let ci = c as usize;
            self.n_false[ci] += 1;
            if self.n_true[ci] == 0 {
                let len = self.clauses[ci].len() as u32;
                if self.n_false[ci] == len {
                    ok = false;
                } else if self.n_false[ci] + 1 == len {
                    self.pending.push(c);
                }
            }
        }
        ok
    }

    fn unassign(&mut self, lit: usize) {
        for &c in &self.occ[lit ^ 1] {
            self.n_false[c as usize] -= 1;
        }
        for &c in &self.occ[lit] {
            let c = c as usize;
            if self.n_true[c] == 1 {
                self.satisfied -= 1;
                for &l in &self.clauses[c] {
                    self.open_occ[code(l)] += 1;
                }
            }
            self.n_true[c] -= 1;
        }
        self.value[lit >> 1] = 0;
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            let lit = self.trail.pop().expect("non-empty");
            self.unassign(lit);
        }
    }

    fn propagate(&mut self) -> bool {
        while let Some(c) = self.pending.pop() {
            let ci = c as usize;
            if self.n_true[ci] > 0 {
                continue;
            }
            let Some(&unit) = self.clauses[ci].iter().find(|&&l| self.lit_value(l) == 0) else {
                self.pending.clear();
                return false;
            };
            self.stats.propagations += 1;
            if !self.assign(code(unit)) {
                self.pending.clear();
                return false;
            }
        }
        true
    }

    fn eliminate_pure(&mut self) {
        loop {
            let mut changed = false;
            for v in 1..=self.nvars {
                if self.value[v] != 0 {
                    continue;
                }
                let pos = self.open_occ[v << 1];
                let neg = self.open_occ[(v << 1) | 1];
                let lit = match (pos, neg) {
                    (p, 0) if p > 0 => v << 1,
                    (0, n) if n > 0 => (v << 1) | 1,
                    _ => continue,
                };
                // A pure literal touches no open clause negatively.
                let ok = self.assign(lit);
                debug_assert!(ok);
                self.stats.pure_literals += 1;
                changed = true;
            }
            if !changed {
                break;
            }
        }
    }

    /// Undoes to the most recent decision with an untried branch and takes
    /// it. `None` when the search space is exhausted, otherwise whether the
    /// flipped assignment was conflict-free.
    fn backtrack(&mut self) -> Option<bool> {
        self.pending.clear();
        while let Some(d) = self.decisions.pop() {
            self.undo_to(d.trail_len);
            if !d.flipped {
                let lit = d.lit ^ 1;
                self.decisions.push(Decision {
                    trail_len: d.trail_len,
                    lit,
                    flipped: true,
                });
                return Some(self.assign(lit));
            }
        }
        None
    }

    fn run(&mut self) -> SolveResult {
        let total = self.clauses.len();
        let mut ok = true;
        loop {
            if ok {
                ok = self.propagate();
            }
            if !ok {
                self.stats.conflicts += 1;
                match self.backtrack() {
                    Some(assigned) => {
                        ok = assigned;
                        continue;
                    }
                    None => return SolveResult::Unsat,
                }
            }
            self.eliminate_pure();
            if self.satisfied == total {
                break;
            }
            let Some(var) = (1..=self.nvars).find(|&v| self.value[v] == 0) else {
                break;
            };
            self.stats.decisions += 1;
            let lit = var << 1;
            self.decisions.push(Decision {
                trail_len: self.trail.len(),
                lit,
                flipped: false,
            });
            ok = self.assign(lit);
        }
        // Variables left open occur in no unsatisfied clause.
        SolveResult::Sat((1..=self.nvars).map(|v| self.value[v] >= 0).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(vars: u32, clauses: &[&[i32]]) -> Cnf {
        Cnf::new(vars, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn contradictory_units() {
        assert_eq!(solve(&cnf(1, &[&[1], &[-1]])).unwrap(), SolveResult::Unsat);
    }

    #[test]
    fn resolution_forces_variable_two() {
        let r = solve(&cnf(2, &[&[1, 2], &[-1, 2]])).unwrap();
        assert!(r.assignment().unwrap()[1]);
    }

    #[test]
    fn empty_clause_is_unsat() {
        assert_eq!(solve(&cnf(2, &[&[1], &[]])).unwrap(), SolveResult::Unsat);
    }

    #[test]
    fn empty_formula_is_sat() {
        assert_eq!(
            solve(&cnf(3, &[])).unwrap(),
            SolveResult::Sat(vec![true; 3])
        );
        assert_eq!(
            solve_dpll(&cnf(3, &[])).unwrap(),
            SolveResult::Sat(vec![true; 3])
        );
    }

    #[test]
    fn pigeonhole_three_into_two() {
        // p_{i,h}: pigeon i in hole h; var = 2*(i-1) + h
        let v = |i: i32, h: i32| 2 * (i - 1) + h;
        let mut clauses: Vec<Vec<i32>> = (1..=3).map(|i| vec![v(i, 1), v(i, 2)]).collect();
        for h in 1..=2 {
            for i in 1..=3 {
                for j in i + 1..=3 {
                    clauses.push(vec![-v(i, h), -v(j, h)]);
                }
            }
        }
        let f = Cnf::new(6, clauses).unwrap();
        for (r, stats) in [
            solve_with_stats(&f).unwrap(),
            solve_dpll_with_stats(&f).unwrap(),
        ] {
            assert_eq!(r, SolveResult::Unsat);
            assert!(stats.conflicts > 0);
        }
    }

    #[test]
    fn runs_are_repeatable() {
        let f = cnf(4, &[&[1, -2, 3], &[-1, 2], &[2, 4], &[-3, -4], &[-1, -4]]);
        let a = solve_with_stats(&f).unwrap();
        let b = solve_with_stats(&f).unwrap();
        assert_eq!(a, b);
        assert!(f.is_satisfied_by(a.0.assignment().unwrap()));
        let c = solve_dpll_with_stats(&f).unwrap();
        assert_eq!(c, solve_dpll_with_stats(&f).unwrap());
        assert!(f.is_satisfied_by(c.0.assignment().unwrap()));
    }
}
