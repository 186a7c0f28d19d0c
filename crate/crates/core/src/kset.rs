//! k-element subsets of `[N] = {1..N}`, shift adjacency and lexicographic
//! ranking.
//!
//! Elements are 1-based throughout. Every enumeration, file and report uses
//! lexicographic order, so `rank` doubles as the storage index of a coloring.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set size supported. `C(64, k)` fits in a `u64` for every k.
pub const MAX_N: u32 = 64;

const BINOM_DIM: usize = MAX_N as usize + 2;

static BINOM: [[u64; BINOM_DIM]; BINOM_DIM] = {
    let mut t = [[0u64; BINOM_DIM]; BINOM_DIM];
    let mut n = 0;
    while n < BINOM_DIM {
        t[n][0] = 1;
        let mut k = 1;
        while k <= n {
            t[n][k] = t[n - 1][k - 1].saturating_add(t[n - 1][k]);
            k += 1;
        }
        n += 1;
    }
    t
};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    if (n as usize) < BINOM_DIM {
        return BINOM[n as usize][k as usize];
    }
    // Outside the table: multiplicative formula, saturating.
    let k = k.min(n - k) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n as u128 - i) / (i + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// A sorted k-element subset of `[N]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSet(Vec<u32>);

impl KSet {
    /// Validates strict increase and positivity. Upper bounds are checked by
    /// the operation that knows `N`.
    pub fn new(elems: Vec<u32>) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::param("a k-set needs at least one element"));
        }
        if elems[0] == 0 {
            return Err(Error::param("elements are 1-based"));
        }
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::param(format!(
                "elements must be strictly increasing: {elems:?}"
            )));
        }
        Ok(KSet(elems))
    }

    /// `{lo, lo+1, .., hi}`.
    pub fn interval(lo: u32, hi: u32) -> Result<Self> {
        KSet::new((lo..=hi).collect())
    }

    pub(crate) fn from_sorted_unchecked(elems: Vec<u32>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        KSet(elems)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn max(&self) -> u32 {
        *self.0.last().expect("non-empty")
    }

    /// True when every element lies in `[1, n]`.
    pub fn within(&self, n: u32) -> bool {
        self.max() <= n
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// The set with the element at 0-based `pos` removed.
    pub fn without_position(&self, pos: usize) -> KSet {
        let mut v = self.0.clone();
        v.remove(pos);
        KSet(v)
    }
}

impl fmt::Debug for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl AsRef<[u32]> for KSet {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

fn check_nk(n: u32, k: u32) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::param(format!("need 1 <= k <= N, got N={n}, k={k}")));
    }
    if n > MAX_N {
        return Err(Error::param(format!(
            "N={n} exceeds the supported maximum {MAX_N}"
        )));
    }
    Ok(())
}

/// Lending cursor over the k-subsets of `[n]` in lexicographic order.
///
/// Scans use this instead of [`KSubsets`] to avoid one allocation per set.
#[derive(Debug, Clone)]
pub struct SubsetCursor {
    n: u32,
    cur: Vec<u32>,
    started: bool,
    done: bool,
}

impl SubsetCursor {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        check_nk(n, k)?;
        Ok(SubsetCursor {
            n,
            cur: (1..=k).collect(),
            started: false,
            done: false,
        })
    }

    /// Cursor positioned so that the next call to [`advance`](Self::advance)
    /// yields the subset of lexicographic rank `r`.
    pub fn starting_at(n: u32, k: u32, r: u64) -> Result<Self> {
        check_nk(n, k)?;
        let total = binomial(n, k);
        if r >= total {
            return Ok(SubsetCursor {
                n,
                cur: Vec::new(),
                started: true,
                done: true,
            });
        }
        let set = unrank(r, n, k)?;
        Ok(SubsetCursor {
            n,
            cur: set.into_vec(),
            started: false,
            done: false,
        })
    }

    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.cur);
        }
        let k = self.cur.len();
        let n = self.n;
        let mut i = k;
        while i > 0 {
            i -= 1;
            let limit = n - (k - 1 - i) as u32;
            if self.cur[i] < limit {
                self.cur[i] += 1;
                for j in i + 1..k {
                    self.cur[j] = self.cur[j - 1] + 1;
                }
                return Some(&self.cur);
            }
        }
        self.done = true;
        None
    }
}

/// Owning iterator over the k-subsets of `[n]` in lexicographic order.
#[derive(Debug, Clone)]
pub struct KSubsets(SubsetCursor);

impl Iterator for KSubsets {
    type Item = KSet;

    fn next(&mut self) -> Option<KSet> {
        self.0.advance().map(|s| KSet(s.to_vec()))
    }
}

/// All `C(n, k)` k-subsets of `[n]`, lexicographically.
pub fn ksubsets(n: u32, k: u32) -> Result<KSubsets> {
    Ok(KSubsets(SubsetCursor::new(n, k)?))
}

/// Oriented shift adjacency: `x_{i+1} = y_i` for all `i < k`.
pub fn is_shift(x: &KSet, y: &KSet) -> Result<bool> {
    if x.arity() != y.arity() {
        return Err(Error::param(format!(
            "arity mismatch: {} vs {}",
            x.arity(),
            y.arity()
        )));
    }
    Ok(is_shift_slice(x.elements(), y.elements()))
}

pub(crate) fn is_shift_slice(x: &[u32], y: &[u32]) -> bool {
    x.len() == y.len() && x[1..] == y[..y.len() - 1]
}

/// Shift adjacency ignoring orientation.
pub fn is_shift_undirected(x: &KSet, y: &KSet) -> Result<bool> {
    Ok(is_shift(x, y)? || is_shift(y, x)?)
}

/// The `|S| - w + 1` consecutive w-windows of `S`.
pub fn windows(s: &KSet, w: usize) -> Result<Vec<KSet>> {
    if w < 1 || w > s.arity() {
        return Err(Error::param(format!(
            "window size {w} out of range for a {}-set",
            s.arity()
        )));
    }
    Ok(s.0.windows(w).map(|win| KSet(win.to_vec())).collect())
}

/// Splits `X` into `parts` consecutive blocks of equal size.
pub fn segments(x: &KSet, parts: usize) -> Result<Vec<KSet>> {
    if parts == 0 || !x.arity().is_multiple_of(parts) {
        return Err(Error::param(format!(
            "{parts} does not divide the arity {}",
            x.arity()
        )));
    }
    let size = x.arity() / parts;
    Ok(x.0.chunks(size).map(|c| KSet(c.to_vec())).collect())
}

/// An ordered path in the shift graph: consecutive vertices are in shift
/// position, earlier before later.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPath {
    vertices: Vec<KSet>,
}

impl OrderedPath {
    pub fn new(vertices: Vec<KSet>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::param("a path needs at least one vertex"));
        }
        for pair in vertices.windows(2) {
            if !is_shift(&pair[0], &pair[1])? {
                return Err(Error::param(format!(
                    "{} and {} are not in shift position",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(OrderedPath { vertices })
    }

    pub fn vertices(&self) -> &[KSet] {
        &self.vertices
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The `(k + m - 1)`-set the path spans.
    pub fn superset(&self) -> KSet {
        let mut elems = self.vertices[0].0.clone();
        elems.extend(self.vertices[1..].iter().map(KSet::max));
        KSet(elems)
    }
}

/// The path formed by the consecutive k-windows of `S`.
pub fn path_from_superset(s: &KSet, k: usize) -> Result<OrderedPath> {
    if k < 1 || s.arity() < k {
        return Err(Error::param(format!(
            "a {}-set has no {k}-windows",
            s.arity()
        )));
    }
    OrderedPath::new(windows(s, k)?)
}

/// Lexicographic rank (0-based) of `x` among the k-subsets of `[n]`.
pub fn rank(x: &KSet, n: u32) -> Result<u64> {
    check_nk(n, x.arity() as u32)?;
    if !x.within(n) {
        return Err(Error::param(format!("{x} is not a subset of [{n}]")));
    }
    Ok(rank_slice(x.elements(), n))
}

/// Rank of an already-validated sorted slice.
#[inline]
pub(crate) fn rank_slice(x: &[u32], n: u32) -> u64 {
    let k = x.len() as u32;
    let mut r = 0u64;
    let mut prev = 0u32;
    for (i, &xi) in x.iter().enumerate() {
        let rem = k - i as u32 - 1;
        // Sets whose i-th element is v in (prev, xi) all precede x:
        // sum_{v=prev+1}^{xi-1} C(n-v, rem) = C(n-prev, rem+1) - C(n-xi+1, rem+1)
        if xi > prev + 1 {
            r += binomial(n - prev, rem + 1) - binomial(n - xi + 1, rem + 1);
        }
        prev = xi;
    }
    r
}

/// Inverse of [`rank`].
pub fn unrank(r: u64, n: u32, k: u32) -> Result<KSet> {
    check_nk(n, k)?;
    let total = binomial(n, k);
    if r >= total {
        return Err(Error::param(format!(
            "rank {r} out of range [0, {total}) for N={n}, k={k}"
        )));
    }
    let mut out = Vec::with_capacity(k as usize);
    let mut r = r;
    let mut v = 1u32;
    for i in 0..k {
        let rem = k - i - 1;
        loop {
            let block = binomial(n - v, rem);
            if r < block {
                break;
            }
            r -= block;
            v += 1;
        }
        out.push(v);
        v += 1;
    }
    Ok(KSet(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ks(v: &[u32]) -> KSet {
        KSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_small_cases() {
        let all: Vec<_> = ksubsets(3, 2).unwrap().collect();
        assert_eq!(all, vec![ks(&[1, 2]), ks(&[1, 3]), ks(&[2, 3])]);
        let all: Vec<_> = ksubsets(5, 5).unwrap().collect();
        assert_eq!(all, vec![ks(&[1, 2, 3, 4, 5])]);
        let all: Vec<_> = ksubsets(8, 2).unwrap().collect();
        assert_eq!(all.len() as u64, binomial(8, 2));
        assert_eq!(all.len(), 8 * 7 / 2);
        assert_eq!(all[0], ks(&[1, 2]));
        assert_eq!(all[27], ks(&[7, 8]));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(ksubsets(3, 0).is_err());
        assert!(ksubsets(3, 4).is_err());
        assert!(KSet::new(vec![2, 2]).is_err());
        assert!(KSet::new(vec![0, 1]).is_err());
        assert!(KSet::new(vec![]).is_err());
    }

    #[test]
    fn shift_predicate() {
        assert!(is_shift(&ks(&[1, 2, 3]), &ks(&[2, 3, 4])).unwrap());
        assert!(!is_shift(&ks(&[1, 2, 3]), &ks(&[3, 4, 5])).unwrap());
        assert!(is_shift(&ks(&[1, 3]), &ks(&[3, 7])).unwrap());
        assert!(!is_shift(&ks(&[3, 7]), &ks(&[1, 3])).unwrap());
        assert!(is_shift(&ks(&[1, 3]), &ks(&[1, 3, 4])).is_err());
    }

    #[test]
    fn windows_and_segments() {
        let w = windows(&ks(&[1, 2, 3, 4, 5]), 3).unwrap();
        assert_eq!(w, vec![ks(&[1, 2, 3]), ks(&[2, 3, 4]), ks(&[3, 4, 5])]);
        assert_eq!(windows(&ks(&[2, 4, 7]), 3).unwrap(), vec![ks(&[2, 4, 7])]);
        let w = windows(&KSet::interval(1, 8).unwrap(), 4).unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(w[0], ks(&[1, 2, 3, 4]));
        assert_eq!(w[4], ks(&[5, 6, 7, 8]));
        assert!(windows(&ks(&[1, 2]), 3).is_err());
        assert!(windows(&ks(&[1, 2]), 0).is_err());

        let s = segments(&KSet::interval(1, 8).unwrap(), 4).unwrap();
        assert_eq!(s, vec![ks(&[1, 2]), ks(&[3, 4]), ks(&[5, 6]), ks(&[7, 8])]);
        let s = segments(&ks(&[2, 3, 5, 8]), 4).unwrap();
        assert_eq!(s, vec![ks(&[2]), ks(&[3]), ks(&[5]), ks(&[8])]);
        let s = segments(&ks(&[1, 4, 6, 9, 10, 12]), 2).unwrap();
        assert_eq!(s, vec![ks(&[1, 4, 6]), ks(&[9, 10, 12])]);
        assert!(segments(&ks(&[1, 2, 3]), 2).is_err());
    }

    #[test]
    fn paths_from_supersets() {
        let p = path_from_superset(&ks(&[1, 2, 3, 4]), 3).unwrap();
        assert_eq!(p.vertices(), &[ks(&[1, 2, 3]), ks(&[2, 3, 4])]);
        assert_eq!(
            path_from_superset(&KSet::interval(1, 5).unwrap(), 3)
                .unwrap()
                .len(),
            3
        );
        let p = path_from_superset(&KSet::interval(1, 9).unwrap(), 7).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.superset(), KSet::interval(1, 9).unwrap());
        assert!(path_from_superset(&ks(&[1, 2]), 3).is_err());
        assert!(OrderedPath::new(vec![ks(&[1, 2]), ks(&[3, 4])]).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&ks(&[1, 2]), 8).unwrap(), 0);
        assert_eq!(rank(&ks(&[7, 8]), 8).unwrap(), binomial(8, 2) - 1);
        assert!(unrank(28, 8, 2).is_err());
        assert!(rank(&ks(&[7, 9]), 8).is_err());
    }

    #[test]
    fn rank_unrank_exhaustive() {
        for n in 1..=12 {
            for k in 1..=n {
                let mut cursor = SubsetCursor::new(n, k).unwrap();
                let mut expected = 0u64;
                while let Some(s) = cursor.advance() {
                    assert_eq!(rank_slice(s, n), expected);
                    assert_eq!(unrank(expected, n, k).unwrap().elements(), s);
                    expected += 1;
                }
                assert_eq!(expected, binomial(n, k));
            }
        }
    }

    #[test]
    fn cursor_can_start_mid_sequence() {
        let all: Vec<_> = ksubsets(9, 4).unwrap().collect();
        for start in [0u64, 1, 17, 125, 126] {
            let mut c = SubsetCursor::starting_at(9, 4, start).unwrap();
            let mut rest = Vec::new();
            while let Some(s) = c.advance() {
                rest.push(KSet(s.to_vec()));
            }
            assert_eq!(rest, all[start as usize..]);
        }
    }

    #[test]
    fn shift_edges_of_a_superset() {
        // Among the k-subsets of a (k+1)-set only (S minus last, S minus first)
        // is a shift pair.
        for s in ksubsets(7, 4).unwrap() {
            let subs: Vec<_> = (0..4).map(|p| s.without_position(p)).collect();
            for (i, x) in subs.iter().enumerate() {
                for (j, y) in subs.iter().enumerate() {
                    let expect = i == 3 && j == 0;
                    assert_eq!(is_shift(x, y).unwrap(), expect, "{s} {x} {y}");
                }
            }
        }
    }
}
