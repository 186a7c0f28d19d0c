//! Brute-force oracle over all `2^V` assignments, independent of the DPLL
//! code path.

use super::cnf::Cnf;
use super::dpll::SolveResult;
use crate::error::{Error, Result};

/// Largest variable count the oracle accepts.
pub const MAX_EXHAUSTIVE_VARS: u32 = 25;

/// Per clause, the bitmask of positive and of negative variables.
fn masks(cnf: &Cnf) -> Result<Vec<(u32, u32)>> {
    if cnf.variable_count() > MAX_EXHAUSTIVE_VARS {
        return Err(Error::SizeLimit(format!(
            "exhaustive check refused: {} variables > {MAX_EXHAUSTIVE_VARS}",
            cnf.variable_count()
        )));
    }
    Ok(cnf
        .clauses()
        .iter()
        .map(|clause| {
            clause.iter().fold((0u32, 0u32), |(p, n), &l| {
                let bit = 1u32 << (l.unsigned_abs() - 1);
                if l > 0 {
                    (p | bit, n)
                } else {
                    (p, n | bit)
                }
            })
        })
        .collect())
}

#[inline]
fn satisfies(masks: &[(u32, u32)], a: u32) -> bool {
    masks.iter().all(|&(p, n)| a & p != 0 || !a & n != 0)
}

fn to_assignment(a: u32, vars: u32) -> Vec<bool> {
    (0..vars).map(|i| a >> i & 1 == 1).collect()
}

/// First model in increasing binary order (bit `v-1` is variable v), or
/// unsat.
pub fn exhaustive_check(cnf: &Cnf) -> Result<SolveResult> {
    let masks = masks(cnf)?;
    let vars = cnf.variable_count();
    let found = (0..1u64 << vars)
        .map(|a| a as u32)
        .find(|&a| satisfies(&masks, a));
    Ok(match found {
        Some(a) => SolveResult::Sat(to_assignment(a, vars)),
        None => SolveResult::Unsat,
    })
}

/// Number of satisfying assignments.
pub fn count_models(cnf: &Cnf) -> Result<u64> {
    let masks = masks(cnf)?;
    Ok((0..1u64 << cnf.variable_count())
        .filter(|&a| satisfies(&masks, a as u32))
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let unit = Cnf::new(1, vec![vec![1]]).unwrap();
        assert_eq!(
            exhaustive_check(&unit).unwrap(),
            SolveResult::Sat(vec![true])
        );
        let empty = Cnf::new(3, vec![]).unwrap();
        assert!(exhaustive_check(&empty).unwrap().is_sat());
        assert_eq!(count_models(&empty).unwrap(), 8);
        let contradiction = Cnf::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert_eq!(
            exhaustive_check(&contradiction).unwrap(),
            SolveResult::Unsat
        );
        let with_empty = Cnf::new(2, vec![vec![]]).unwrap();
        assert_eq!(count_models(&with_empty).unwrap(), 0);
    }

    #[test]
    fn refuses_large_instances() {
        let big = Cnf::new(26, vec![vec![26]]).unwrap();
        assert!(matches!(exhaustive_check(&big), Err(Error::SizeLimit(_))));
    }
}
