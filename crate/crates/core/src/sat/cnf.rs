use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A DIMACS-style literal: `v` is "variable v true", `-v` is "false".
pub type Lit = i32;

/// Canonical literal order: by variable, positive before negative.
#[inline]
fn lit_key(l: Lit) -> (u32, bool) {
    (l.unsigned_abs(), l < 0)
}

fn cmp_clause(a: &[Lit], b: &[Lit]) -> Ordering {
    a.iter()
        .map(|&l| lit_key(l))
        .cmp(b.iter().map(|&l| lit_key(l)))
}

/// A CNF formula in canonical form.
///
/// Construction sorts each clause, removes repeated literals, drops
/// tautologies, then sorts and deduplicates the clause list, so two formulas
/// with the same clause set compare (and serialize) identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    variable_count: u32,
    clauses: Vec<Vec<Lit>>,
}

impl Cnf {
    pub fn new(variable_count: u32, clauses: Vec<Vec<Lit>>) -> Result<Self> {
        if variable_count > i32::MAX as u32 {
            return Err(Error::param("too many variables"));
        }
        let mut out = Vec::with_capacity(clauses.len());
        for mut clause in clauses {
            for &l in &clause {
                if l == 0 || l.unsigned_abs() > variable_count {
                    return Err(Error::param(format!(
                        "literal {l} outside [1, {variable_count}]"
                    )));
                }
            }
            clause.sort_unstable_by_key(|&l| lit_key(l));
            clause.dedup();
            if clause.windows(2).any(|w| w[0] == -w[1]) {
                continue;
            }
            out.push(clause);
        }
        out.sort_unstable_by(|a, b| cmp_clause(a, b));
        out.dedup();
        Ok(Cnf {
            variable_count,
            clauses: out,
        })
    }

    pub fn variable_count(&self) -> u32 {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn has_empty_clause(&self) -> bool {
        self.clauses.first().is_some_and(Vec::is_empty)
    }

    /// Index of the first clause falsified by `assignment` (`assignment[v-1]`
    /// is the value of variable v), if any.
    pub fn first_falsified(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses.iter().position(|clause| {
            !clause
                .iter()
                .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.variable_count as usize
            && self.first_falsified(assignment).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalizes() {
        let cnf = Cnf::new(
            3,
            vec![vec![-2, -1], vec![2, 1], vec![1, 2, 1], vec![3, -3]],
        )
        .unwrap();
        assert_eq!(cnf.clauses(), &[vec![1, 2], vec![-1, -2]]);
        let cnf = Cnf::new(2, vec![vec![1], vec![]]).unwrap();
        assert!(cnf.has_empty_clause());
        assert!(Cnf::new(2, vec![vec![3]]).is_err());
        assert!(Cnf::new(2, vec![vec![0]]).is_err());
    }

    #[test]
    fn evaluation() {
        let cnf = Cnf::new(2, vec![vec![1, 2], vec![-1, 2]]).unwrap();
        assert!(cnf.is_satisfied_by(&[false, true]));
        assert_eq!(cnf.first_falsified(&[false, false]), Some(0));
        assert!(!cnf.is_satisfied_by(&[true]));
    }
}
