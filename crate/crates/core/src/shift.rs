//! Proper colorings of shift graphs `Sh(N, k)`.
//!
//! Vertices are the k-subsets of `[N]`; `X -> Y` is an edge when
//! `x_{i+1} = y_i` for all `i`. Every edge is the pair of windows of a
//! unique (k+1)-set `S`, namely `(S \ {max}, S \ {min})`, so edge scans run
//! over (k+1)-subsets. Colors are `0..c`.

use crate::error::{Error, Result};
use crate::kset::{binomial, rank_slice, KSet, SubsetCursor};
use crate::par;
use crate::sat::{self, SolveResult};

/// Largest `C(N, k) * c` accepted by the SAT search.
pub const MAX_COLORING_VARS: u64 = 20_000;

/// A total coloring of the k-subsets of `[N]` with no monochromatic shift
/// edge. Colors are stored by lexicographic rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperColoring {
    n: u32,
    k: u32,
    c: u32,
    colors: Vec<u8>,
}

impl ProperColoring {
    /// Checks shape, color range and properness.
    pub fn new(n: u32, k: u32, c: u32, colors: Vec<u8>) -> Result<Self> {
        Self::with_workers(n, k, c, colors, 1)
    }

    pub fn with_workers(n: u32, k: u32, c: u32, colors: Vec<u8>, workers: usize) -> Result<Self> {
        if c == 0 || c > u8::MAX as u32 + 1 {
            return Err(Error::param(format!("color count {c} out of range")));
        }
        SubsetCursor::new(n, k)?;
        let expected = binomial(n, k);
        if colors.len() as u64 != expected {
            return Err(Error::param(format!(
                "{} colors given for {expected} {k}-subsets of [{n}]",
                colors.len()
            )));
        }
        if let Some((i, &col)) = colors.iter().enumerate().find(|(_, &x)| x as u32 >= c) {
            return Err(Error::param(format!(
                "color {col} at rank {i} is not below {c}"
            )));
        }
        let coloring = ProperColoring { n, k, c, colors };
        if let Some((x, y)) = coloring.first_conflict(workers) {
            return Err(Error::NotProper(format!(
                "shift edge {x} -> {y} has both ends colored {}",
                coloring.colors[rank_slice(x.elements(), n) as usize]
            )));
        }
        Ok(coloring)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Size of the palette, not necessarily the number of colors used.
    pub fn c(&self) -> u32 {
        self.c
    }

    /// Colors by lexicographic rank.
    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, x: &KSet) -> Result<u8> {
        if x.arity() != self.k as usize || !x.within(self.n) {
            return Err(Error::param(format!(
                "{x} is not a {}-subset of [{}]",
                self.k, self.n
            )));
        }
        Ok(self.color_of(x.elements()))
    }

    /// Color of a sorted k-slice of `[N]`; the caller guarantees the shape.
    #[inline]
    pub(crate) fn color_of(&self, x: &[u32]) -> u8 {
        self.colors[rank_slice(x, self.n) as usize]
    }

    pub fn colors_used(&self) -> u32 {
        let mut seen = [false; 256];
        for &x in &self.colors {
            seen[x as usize] = true;
        }
        seen.iter().filter(|&&s| s).count() as u32
    }

    /// `(set, color)` pairs in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (KSet, u8)> + '_ {
        let mut cursor = SubsetCursor::new(self.n, self.k).expect("validated shape");
        self.colors.iter().map(move |&col| {
            (
                KSet::from_sorted_unchecked(cursor.advance().expect("rank in range").to_vec()),
                col,
            )
        })
    }

    /// First monochromatic shift edge in the order of the (k+1)-sets that
    /// carry them.
    pub fn first_conflict(&self, workers: usize) -> Option<(KSet, KSet)> {
        if self.k >= self.n {
            return None;
        }
        let total = binomial(self.n, self.k + 1);
        let k = self.k as usize;
        par::first_hit(total, workers, |range| {
            let mut cursor = SubsetCursor::starting_at(self.n, self.k + 1, range.start).ok()?;
            for r in range {
                let s = cursor.advance().expect("rank in range");
                if self.color_of(&s[..k]) == self.color_of(&s[1..]) {
                    return Some((r, (s[..k].to_vec(), s[1..].to_vec())));
                }
            }
            None
        })
        .map(|(_, (x, y))| {
            (
                KSet::from_sorted_unchecked(x),
                KSet::from_sorted_unchecked(y),
            )
        })
    }
}

/// Shift edges of `Sh(n, k)` as 1-based vertex numbers (rank + 1), in the
/// order of their (k+1)-sets.
pub fn shift_edges(n: u32, k: u32) -> Result<Vec<(u32, u32)>> {
    SubsetCursor::new(n, k)?;
    if k >= n {
        return Ok(Vec::new());
    }
    let mut cursor = SubsetCursor::new(n, k + 1)?;
    let k = k as usize;
    let mut edges = Vec::with_capacity(binomial(n, k as u32 + 1) as usize);
    while let Some(s) = cursor.advance() {
        edges.push((
            rank_slice(&s[..k], n) as u32 + 1,
            rank_slice(&s[1..], n) as u32 + 1,
        ));
    }
    Ok(edges)
}

/// Colors `{i < j}` by the most significant bit where `i - 1` and `j - 1`
/// differ, giving a proper coloring of `Sh(N, 2)` with `ceil(log2 N)`
/// colors.
pub fn bit_color_pairs(n: u32) -> Result<ProperColoring> {
    if n < 2 {
        return Err(Error::param("bit coloring needs N >= 2"));
    }
    let c = 32 - (n - 1).leading_zeros();
    let mut cursor = SubsetCursor::new(n, 2)?;
    let mut colors = Vec::with_capacity(binomial(n, 2) as usize);
    while let Some(p) = cursor.advance() {
        colors.push(bit_color(p[0], p[1]));
    }
    ProperColoring::new(n, 2, c, colors)
}

#[inline]
fn bit_color(i: u32, j: u32) -> u8 {
    (31 - ((i - 1) ^ (j - 1)).leading_zeros()) as u8
}

/// `{i} -> i - 1` on `Sh(N, 1) = K_N`, which is 3-colorable only for
/// `N <= 3`.
pub fn complete_color_singletons(n: u32) -> Result<ProperColoring> {
    if n == 0 {
        return Err(Error::param("N must be at least 1"));
    }
    if n > 3 {
        return Err(Error::param(format!(
            "Sh({n},1) is the complete graph K_{n} and has no proper 3-coloring"
        )));
    }
    ProperColoring::new(n, 1, 3, (0..n as u8).collect())
}

fn check_sat_size(n: u32, k: u32, c: u32) -> Result<()> {
    SubsetCursor::new(n, k)?;
    let vars = binomial(n, k).saturating_mul(c as u64);
    if vars > MAX_COLORING_VARS {
        return Err(Error::SizeLimit(format!(
            "C({n},{k}) * {c} = {vars} variables exceeds {MAX_COLORING_VARS}"
        )));
    }
    Ok(())
}

/// Proper c-coloring of `Sh(n, k)` found by the SAT solver, re-verified
/// before return. `None` iff none exists.
pub fn find_coloring_sat(n: u32, k: u32, c: u32) -> Result<Option<ProperColoring>> {
    if c == 0 || c > 256 {
        return Err(Error::param(format!("color count {c} out of range")));
    }
    check_sat_size(n, k, c)?;
    let vertices = binomial(n, k) as u32;
    let edges = shift_edges(n, k)?;
    let cnf = sat::encode_graph_kcolor(&edges, vertices, c)?;
    match sat::solve(&cnf)? {
        SolveResult::Unsat => Ok(None),
        SolveResult::Sat(model) => {
            let colors = sat::decode_graph_coloring(&model, vertices, c)?;
            let colors = colors.into_iter().map(|x| x as u8).collect();
            match ProperColoring::new(n, k, c, colors) {
                Ok(p) => Ok(Some(p)),
                Err(e) => Err(Error::Internal(format!(
                    "decoded shift coloring rejected: {e}"
                ))),
            }
        }
    }
}

/// Outcome of [`chromatic_shift`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chromatic {
    /// The chromatic number, with a proper coloring using that many colors.
    Exactly(u32, ProperColoring),
    /// No proper coloring with `c_max` colors.
    Exceeds(u32),
}

impl Chromatic {
    pub fn value(&self) -> Option<u32> {
        match self {
            Chromatic::Exactly(c, _) => Some(*c),
            Chromatic::Exceeds(_) => None,
        }
    }
}

/// Least `c <= c_max` for which `Sh(n, k)` has a proper c-coloring.
pub fn chromatic_shift(n: u32, k: u32, c_max: u32) -> Result<Chromatic> {
    if c_max == 0 {
        return Err(Error::param("c_max must be at least 1"));
    }
    for c in 1..=c_max {
        if let Some(p) = find_coloring_sat(n, k, c)? {
            return Ok(Chromatic::Exactly(c, p));
        }
    }
    Ok(Chromatic::Exceeds(c_max))
}

/// Outcome of [`s_exact_upto`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SScan {
    /// Largest N certified to have `chi(Sh(N, k)) <= 3`.
    pub largest_colorable: u32,
    /// True when `Sh(largest_colorable + 1, k)` was shown not 3-colorable,
    /// making the value exactly `s(k)`.
    pub exact: bool,
    /// First N refused by the size bound, if the scan stopped there.
    pub refused_at: Option<u32>,
}

/// `s(k) = max { N : chi(Sh(N, k)) <= 3 }` searched over `N <= n_max`.
///
/// `Sh(N, k)` is an induced subgraph of `Sh(N + 1, k)`, so the scan stops at
/// the first N that is not 3-colorable.
pub fn s_exact_upto(k: u32, n_max: u32) -> Result<SScan> {
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    if n_max < k {
        return Err(Error::param(format!("N_max = {n_max} is below k = {k}")));
    }
    let mut scan = SScan {
        largest_colorable: k - 1,
        exact: false,
        refused_at: None,
    };
    for n in k..=n_max {
        match find_coloring_sat(n, k, 3) {
            Ok(Some(_)) => scan.largest_colorable = n,
            Ok(None) => {
                scan.exact = true;
                break;
            }
            Err(Error::SizeLimit(_)) => {
                scan.refused_at = Some(n);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ks(v: &[u32]) -> KSet {
        KSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn bit_coloring_values() {
        let p = bit_color_pairs(8).unwrap();
        assert_eq!(p.c(), 3);
        assert_eq!(p.color(&ks(&[1, 2])).unwrap(), 0);
        assert_eq!(p.color(&ks(&[2, 3])).unwrap(), 1);
        assert_eq!(p.color(&ks(&[4, 5])).unwrap(), 2);
        assert_eq!(p.color(&ks(&[2, 4])).unwrap(), 1);
        assert_eq!(p.colors().len(), 28);
        assert!(p.colors().iter().all(|&x| x < 3));
    }

    #[test]
    fn bit_coloring_is_proper_up_to_64() {
        for n in 2..=64 {
            let p = bit_color_pairs(n).unwrap();
            assert_eq!(p.first_conflict(1), None);
            assert_eq!(p.colors_used(), 32 - (n - 1).leading_zeros());
        }
    }

    #[test]
    fn singletons() {
        assert_eq!(complete_color_singletons(3).unwrap().colors(), &[0, 1, 2]);
        assert_eq!(complete_color_singletons(2).unwrap().colors(), &[0, 1]);
        assert!(complete_color_singletons(4).is_err());
    }

    #[test]
    fn improper_coloring_is_rejected() {
        // {1,2} -> {2,3} in Sh(3,2)
        let err = ProperColoring::new(3, 2, 2, vec![0, 1, 0]).unwrap_err();
        assert!(matches!(err, Error::NotProper(_)), "{err}");
        assert!(ProperColoring::new(3, 2, 2, vec![0, 0, 1]).is_ok());
        assert!(ProperColoring::new(3, 2, 2, vec![0, 2, 1]).is_err());
        assert!(ProperColoring::new(3, 2, 2, vec![0, 0]).is_err());
    }

    #[test]
    fn conflict_witness_is_worker_independent() {
        let colors: Vec<u8> = (0..binomial(10, 3)).map(|r| (r % 3) as u8).collect();
        let p = ProperColoring {
            n: 10,
            k: 3,
            c: 3,
            colors,
        };
        let w = p.first_conflict(1);
        assert!(w.is_some());
        for workers in [2, 3, 4, 7] {
            assert_eq!(p.first_conflict(workers), w);
        }
    }

    #[test]
    fn edge_list() {
        // Sh(4,2): {1,2}{2,3} {1,2}{2,4} {1,3}{3,4} {2,3}{3,4}
        assert_eq!(
            shift_edges(4, 2).unwrap(),
            vec![(1, 4), (1, 5), (2, 6), (4, 6)]
        );
        assert!(shift_edges(3, 3).unwrap().is_empty());
    }

    #[test]
    fn sat_search_small() {
        assert!(find_coloring_sat(8, 2, 3).unwrap().is_some());
        assert!(find_coloring_sat(9, 2, 3).unwrap().is_none());
        assert_eq!(chromatic_shift(4, 2, 4).unwrap().value(), Some(2));
        assert_eq!(chromatic_shift(5, 2, 4).unwrap().value(), Some(3));
        assert_eq!(chromatic_shift(3, 3, 4).unwrap().value(), Some(1));
        assert!(matches!(
            find_coloring_sat(30, 4, 3),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn s_values() {
        let one = s_exact_upto(1, 10).unwrap();
        assert_eq!((one.largest_colorable, one.exact), (3, true));
        let two = s_exact_upto(2, 12).unwrap();
        assert_eq!((two.largest_colorable, two.exact), (8, true));
        let open = s_exact_upto(2, 6).unwrap();
        assert_eq!((open.largest_colorable, open.exact), (6, false));
    }
}
