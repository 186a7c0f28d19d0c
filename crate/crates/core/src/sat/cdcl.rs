//! Conflict-driven clause learning: two watched literals, first-UIP
//! learning with local minimization, VSIDS, phase saving, Luby restarts and
//! LBD-based clause deletion.
//!
//! Every heuristic is deterministic. Ties in the variable order go to the
//! lowest index and the initial phase is true, so a fresh solver makes the
//! same first decisions as the DPLL engine and repeated runs are identical.

use super::cnf::Cnf;
use super::dpll::{SolveResult, SolveStats};

const UNDEF: u8 = 2;
const NO_REASON: u32 = u32::MAX;
const VAR_DECAY: f64 = 0.95;
const CLAUSE_DECAY: f64 = 0.999;
const RESTART_UNIT: u64 = 100;

#[inline]
fn lit_of(l: i32) -> u32 {
    ((l.unsigned_abs() - 1) << 1) | (l < 0) as u32
}

#[inline]
fn var(l: u32) -> usize {
    (l >> 1) as usize
}

#[derive(Debug, Clone, Copy)]
struct Watcher {
    cref: u32,
    blocker: u32,
}

#[derive(Debug)]
struct Clause {
    lits: Vec<u32>,
    learnt: bool,
    deleted: bool,
    lbd: u32,
    activity: f64,
}

/// Indexed max-heap over variables keyed by activity, lower index first on
/// ties.
struct VarHeap {
    heap: Vec<u32>,
    pos: Vec<u32>,
}

impl VarHeap {
    const ABSENT: u32 = u32::MAX;

    fn new(n: usize) -> Self {
        VarHeap {
            heap: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
        }
    }

    #[inline]
    fn before(act: &[f64], a: u32, b: u32) -> bool {
        let (x, y) = (act[a as usize], act[b as usize]);
        x > y || (x == y && a < b)
    }

    fn contains(&self, v: usize) -> bool {
        self.pos[v] != Self::ABSENT
    }

    fn sift_up(&mut self, act: &[f64], mut i: usize) {
        let v = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            if !Self::before(act, v, self.heap[parent]) {
                break;
            }
            self.heap[i] = self.heap[parent];
            self.pos[self.heap[i] as usize] = i as u32;
            i = parent;
        }
        self.heap[i] = v;
        self.pos[v as usize] = i as u32;
    }

    fn sift_down(&mut self, act: &[f64], mut i: usize) {
        let v = self.heap[i];
        let len = self.heap.len();
        loop {
            let l = 2 * i + 1;
            if l >= len {
                break;
            }
            let r = l + 1;
            let child = if r < len && Self::before(act, self.heap[r], self.heap[l]) {
                r
            } else {
                l
            };
            if !Self::before(act, self.heap[child], v) {
                break;
            }
            self.heap[i] = self.heap[child];
            self.pos[self.heap[i] as usize] = i as u32;
            i = child;
        }
        self.heap[i] = v;
        self.pos[v as usize] = i as u32;
    }

    fn insert(&mut self, act: &[f64], v: usize) {
        if self.contains(v) {
            return;
        }
        self.heap.push(v as u32);
        let i = self.heap.len() - 1;
        self.pos[v] = i as u32;
        self.sift_up(act, i);
    }

    fn increased(&mut self, act: &[f64], v: usize) {
        if self.contains(v) {
            self.sift_up(act, self.pos[v] as usize);
        }
    }

    fn pop(&mut self, act: &[f64]) -> Option<usize> {
        let top = *self.heap.first()?;
        let last = self.heap.pop().expect("non-empty");
        self.pos[top as usize] = Self::ABSENT;
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.pos[last as usize] = 0;
            self.sift_down(act, 0);
        }
        Some(top as usize)
    }
}

/// Luby sequence 1, 1, 2, 1, 1, 2, 4, ...
fn luby(mut i: u64) -> u64 {
    let (mut size, mut seq) = (1u64, 0u32);
    while size < i + 1 {
        seq += 1;
        size = 2 * size + 1;
    }
    while size - 1 != i {
        size = (size - 1) >> 1;
        seq -= 1;
        i %= size;
    }
    1 << seq
}

pub(super) struct Cdcl {
    clauses: Vec<Clause>,
    watches: Vec<Vec<Watcher>>,
    assigns: Vec<u8>,
    level: Vec<u32>,
    reason: Vec<u32>,
    polarity: Vec<bool>,
    activity: Vec<f64>,
    var_inc: f64,
    clause_inc: f64,
    heap: VarHeap,
    trail: Vec<u32>,
    trail_lim: Vec<usize>,
    qhead: usize,
    seen: Vec<bool>,
    level_stamp: Vec<u64>,
    stamp: u64,
    learnt_count: usize,
    next_reduce: u64,
    pub(super) stats: SolveStats,
}

impl Cdcl {
    pub(super) fn new(cnf: &Cnf) -> Option<Self> {
        let nvars = cnf.variable_count() as usize;
        let mut s = Cdcl {
            clauses: Vec::with_capacity(cnf.clause_count()),
            watches: vec![Vec::new(); 2 * nvars],
            assigns: vec![UNDEF; nvars],
            level: vec![0; nvars],
            reason: vec![NO_REASON; nvars],
            polarity: vec![true; nvars],
            activity: vec![0.0; nvars],
            var_inc: 1.0,
            clause_inc: 1.0,
            heap: VarHeap::new(nvars),
            trail: Vec::with_capacity(nvars),
            trail_lim: Vec::new(),
            qhead: 0,
            seen: vec![false; nvars],
            level_stamp: vec![0; nvars + 1],
            stamp: 0,
            learnt_count: 0,
            next_reduce: 2000,
            stats: SolveStats::default(),
        };
        for clause in cnf.clauses() {
            let lits: Vec<u32> = clause.iter().map(|&l| lit_of(l)).collect();
            match lits.len() {
                0 => return None,
                1 => match s.lit_value(lits[0]) {
                    0 => return None,
                    1 => {}
                    _ => s.enqueue(lits[0], NO_REASON),
                },
                _ => {
                    s.attach(lits, false, 0);
                }
            }
        }
        Some(s)
    }

    /// 1 true, 0 false, 2 unassigned.
    #[inline]
    fn lit_value(&self, l: u32) -> u8 {
        let a = self.assigns[var(l)];
        if a == UNDEF {
            UNDEF
        } else {
            a ^ (l & 1) as u8
        }
    }

    fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    fn enqueue(&mut self, l: u32, reason: u32) {
        let v = var(l);
        self.assigns[v] = (l & 1 == 0) as u8;
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(l);
    }

    fn attach(&mut self, lits: Vec<u32>, learnt: bool, lbd: u32) -> u32 {
        let cref = self.clauses.len() as u32;
        self.watches[lits[0] as usize].push(Watcher {
            cref,
            blocker: lits[1],
        });
        self.watches[lits[1] as usize].push(Watcher {
            cref,
            blocker: lits[0],
        });
        self.clauses.push(Clause {
            lits,
            learnt,
            deleted: false,
            lbd,
            activity: 0.0,
        });
        if learnt {
            self.learnt_count += 1;
        }
        cref
    }

    /// Returns the conflicting clause, if any.
    fn propagate(&mut self) -> Option<u32> {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            let false_lit = p ^ 1;
            let mut ws = std::mem::take(&mut self.watches[false_lit as usize]);
            let mut i = 0;
            let mut j = 0;
            let mut conflict = None;
            while i < ws.len() {
                let w = ws[i];
                i += 1;
                if self.lit_value(w.blocker) == 1 {
                    ws[j] = w;
                    j += 1;
                    continue;
                }
                let cref = w.cref as usize;
                if self.clauses[cref].deleted {
                    continue;
                }
                let lits = &mut self.clauses[cref].lits;
                if lits[0] == false_lit {
                    lits.swap(0, 1);
                }
                let first = lits[0];
                let a = self.assigns[var(first)];
                let first_val = if a == UNDEF {
                    UNDEF
                } else {
                    a ^ (first & 1) as u8
                };
                if first != w.blocker && first_val == 1 {
                    ws[j] = Watcher {
                        cref: w.cref,
                        blocker: first,
                    };
                    j += 1;
                    continue;
                }
                let mut moved = false;
                for k in 2..lits.len() {
                    let l = lits[k];
                    let a = self.assigns[var(l)];
                    if a == UNDEF || a ^ (l & 1) as u8 == 1 {
                        lits.swap(1, k);
                        let new_watch = lits[1];
                        self.watches[new_watch as usize].push(Watcher {
                            cref: w.cref,
                            blocker: first,
                        });
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                ws[j] = Watcher {
                    cref: w.cref,
                    blocker: first,
                };
                j += 1;
                if first_val == 0 {
                    conflict = Some(w.cref);
                    while i < ws.len() {
                        ws[j] = ws[i];
                        i += 1;
                        j += 1;
                    }
                } else {
                    self.stats.propagations += 1;
                    self.enqueue(first, w.cref);
                }
            }
            ws.truncate(j);
            // Watchers pushed for false_lit during the scan cannot exist:
            // a clause never moves its watch onto a false literal.
            self.watches[false_lit as usize] = ws;
            if conflict.is_some() {
                self.qhead = self.trail.len();
                return conflict;
            }
        }
        None
    }

    fn bump_var(&mut self, v: usize) {
        self.activity[v] += self.var_inc;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
        self.heap.increased(&self.activity, v);
    }

    fn bump_clause(&mut self, cref: usize) {
        let c = &mut self.clauses[cref];
        if !c.learnt {
            return;
        }
        c.activity += self.clause_inc;
        if c.activity > 1e20 {
            for c in self.clauses.iter_mut().filter(|c| c.learnt) {
                c.activity *= 1e-20;
            }
            self.clause_inc *= 1e-20;
        }
    }

    /// First-UIP learning. Returns the learnt clause (asserting literal
    /// first) and the backjump level.
    fn analyze(&mut self, mut confl: u32) -> (Vec<u32>, u32) {
        let mut learnt: Vec<u32> = vec![0];
        let mut path = 0u32;
        let mut p: Option<u32> = None;
        let mut index = self.trail.len();
        let current = self.decision_level();
        loop {
            self.bump_clause(confl as usize);
            let start = usize::from(p.is_some());
            let len = self.clauses[confl as usize].lits.len();
            for k in start..len {
                let q = self.clauses[confl as usize].lits[k];
                let v = var(q);
                if !self.seen[v] && self.level[v] > 0 {
                    self.seen[v] = true;
                    self.bump_var(v);
                    if self.level[v] >= current {
                        path += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                index -= 1;
                if self.seen[var(self.trail[index])] {
                    break;
                }
            }
            let lit = self.trail[index];
            p = Some(lit);
            confl = self.reason[var(lit)];
            self.seen[var(lit)] = false;
            path -= 1;
            if path == 0 {
                break;
            }
        }
        learnt[0] = p.expect("conflict at a decision level") ^ 1;

        // Local minimization: drop literals implied by other learnt literals.
        let keep: Vec<bool> = learnt
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                if i == 0 {
                    return true;
                }
                let r = self.reason[var(l)];
                if r == NO_REASON {
                    return true;
                }
                self.clauses[r as usize].lits[1..]
                    .iter()
                    .any(|&q| !self.seen[var(q)] && self.level[var(q)] > 0)
            })
            .collect();
        for &l in &learnt[1..] {
            self.seen[var(l)] = false;
        }
        let mut learnt: Vec<u32> = learnt
            .into_iter()
            .zip(keep)
            .filter_map(|(l, k)| k.then_some(l))
            .collect();

        let back = if learnt.len() == 1 {
            0
        } else {
            let (mut best, mut lvl) = (1, self.level[var(learnt[1])]);
            for (i, &l) in learnt.iter().enumerate().skip(2) {
                if self.level[var(l)] > lvl {
                    best = i;
                    lvl = self.level[var(l)];
                }
            }
            learnt.swap(1, best);
            lvl
        };
        (learnt, back)
    }

    fn lbd(&mut self, lits: &[u32]) -> u32 {
        self.stamp += 1;
        let mut n = 0;
        for &l in lits {
            let lv = self.level[var(l)] as usize;
            if self.level_stamp[lv] != self.stamp {
                self.level_stamp[lv] = self.stamp;
                n += 1;
            }
        }
        n
    }

    fn cancel_until(&mut self, lvl: u32) {
        if self.decision_level() <= lvl {
            return;
        }
        let lim = self.trail_lim[lvl as usize];
        for i in (lim..self.trail.len()).rev() {
            let l = self.trail[i];
            let v = var(l);
            self.polarity[v] = l & 1 == 0;
            self.assigns[v] = UNDEF;
            self.reason[v] = NO_REASON;
            self.heap.insert(&self.activity, v);
        }
        self.trail.truncate(lim);
        self.trail_lim.truncate(lvl as usize);
        self.qhead = lim;
    }

    fn locked(&self, cref: usize) -> bool {
        let l = self.clauses[cref].lits[0];
        self.lit_value(l) == 1 && self.reason[var(l)] == cref as u32
    }

    fn reduce_db(&mut self) {
        let mut candidates: Vec<usize> = (0..self.clauses.len())
            .filter(|&i| {
                let c = &self.clauses[i];
                c.learnt && !c.deleted && c.lbd > 2 && !self.locked(i)
            })
            .collect();
        candidates.sort_by(|&a, &b| {
            let (x, y) = (&self.clauses[a], &self.clauses[b]);
            y.lbd
                .cmp(&x.lbd)
                .then(x.activity.total_cmp(&y.activity))
                .then(a.cmp(&b))
        });
        for &i in &candidates[..candidates.len() / 2] {
            self.clauses[i].deleted = true;
            self.clauses[i].lits = Vec::new();
            self.learnt_count -= 1;
        }
        let clauses = &self.clauses;
        for ws in &mut self.watches {
            ws.retain(|w| !clauses[w.cref as usize].deleted);
        }
    }

    fn pick_branch(&mut self) -> Option<u32> {
        while let Some(v) = self.heap.pop(&self.activity) {
            if self.assigns[v] == UNDEF {
                return Some(((v as u32) << 1) | (!self.polarity[v]) as u32);
            }
        }
        None
    }

    pub(super) fn run(&mut self) -> SolveResult {
        if self.propagate().is_some() {
            return SolveResult::Unsat;
        }
        let mut restarts = 0u64;
        loop {
            let budget = luby(restarts) * RESTART_UNIT;
            let mut conflicts_here = 0u64;
            loop {
                if let Some(confl) = self.propagate() {
                    self.stats.conflicts += 1;
                    conflicts_here += 1;
                    if self.decision_level() == 0 {
                        return SolveResult::Unsat;
                    }
                    let (learnt, back) = self.analyze(confl);
                    self.cancel_until(back);
                    if learnt.len() == 1 {
                        self.enqueue(learnt[0], NO_REASON);
                    } else {
                        let lbd = self.lbd(&learnt);
                        let first = learnt[0];
                        let cref = self.attach(learnt, true, lbd);
                        self.bump_clause(cref as usize);
                        self.enqueue(first, cref);
                    }
                    self.var_inc /= VAR_DECAY;
                    self.clause_inc /= CLAUSE_DECAY;
                    continue;
                }
                if conflicts_here >= budget {
                    self.cancel_until(0);
                    restarts += 1;
                    break;
                }
                if self.stats.conflicts >= self.next_reduce {
                    self.next_reduce = self.stats.conflicts + 2000 + 300 * (restarts + 1);
                    self.reduce_db();
                }
                match self.pick_branch() {
                    None => {
                        let model = self.assigns.iter().map(|&a| a == 1).collect();
                        return SolveResult::Sat(model);
                    }
                    Some(lit) => {
                        self.stats.decisions += 1;
                        self.trail_lim.push(self.trail.len());
                        self.enqueue(lit, NO_REASON);
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn luby_prefix() {
        let seq: Vec<u64> = (0..15).map(luby).collect();
        assert_eq!(seq, [1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8]);
    }

    #[test]
    fn heap_orders_by_activity_then_index() {
        let act = vec![0.0, 2.0, 2.0, 1.0];
        let mut h = VarHeap::new(4);
        for v in 0..4 {
            h.sift_up(&act, h.pos[v] as usize);
        }
        let order: Vec<usize> = std::iter::from_fn(|| h.pop(&act)).collect();
        assert_eq!(order, [1, 2, 3, 0]);
    }

    #[test]
    fn detects_conflicting_units() {
        let cnf = Cnf::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert!(Cdcl::new(&cnf).is_none());
        let cnf = Cnf::new(3, vec![vec![1, 2]]).unwrap();
        assert_eq!(Cdcl::new(&cnf).unwrap().assigns.len(), 3);
    }
}
