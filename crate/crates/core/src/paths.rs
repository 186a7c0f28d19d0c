//! Red/blue colorings of k-sets built from a proper 3-coloring `phi` of a
//! shift graph, and verifiers for the ordered-path properties they avoid.
//!
//! * `p23`: phi on (k-4)-sets; no red path on 2 vertices, no blue path on 3.
//! * `p33`: phi on (k-1)-sets; no monochromatic path on 3 vertices.
//! * `k1_2k1`: phi on k-sets; no red `K_{k+1}`, no blue `K_{2k+1}`.
//!
//! Paths are counted in vertices. Color comparisons use the labels
//! `1 < 2 < 3`, with residue 0 read as label 3.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kset::{binomial, is_shift_slice, rank_slice, KSet, SubsetCursor};
use crate::par;
use crate::shift::ProperColoring;
use crate::verdict::{Scan, Status};

pub const RED: u8 = 1;
pub const BLUE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    P23,
    P33,
    K1_2k1,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::P23 => "p23",
            Variant::P33 => "p33",
            Variant::K1_2k1 => "k1_2k1",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        match s {
            "p23" => Some(Variant::P23),
            "p33" => Some(Variant::P33),
            "k1_2k1" => Some(Variant::K1_2k1),
            _ => None,
        }
    }

    /// Arity of the sets `phi` colors, given the arity `k` of the path
    /// coloring.
    pub fn phi_arity(self, k: u32) -> Option<u32> {
        match self {
            Variant::P23 => k.checked_sub(4).filter(|&a| a >= 1),
            Variant::P33 => k.checked_sub(1).filter(|&a| a >= 1),
            Variant::K1_2k1 => Some(k).filter(|&a| a >= 1),
        }
    }

    fn min_k(self) -> u32 {
        match self {
            Variant::P23 => 5,
            Variant::P33 => 2,
            Variant::K1_2k1 => 1,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Label of a residue color: `0 -> 3`, otherwise unchanged.
#[inline]
pub fn label(residue: u8) -> u8 {
    if residue == 0 {
        3
    } else {
        residue
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RedType {
    /// `c2 < c3 > c4`
    I,
    /// `c1 > c2 > c3 < c4 < c5`
    II,
}

pub fn is_type_one(c: &[u8; 5]) -> bool {
    c[1] < c[2] && c[2] > c[3]
}

pub fn is_type_two(c: &[u8; 5]) -> bool {
    c[0] > c[1] && c[1] > c[2] && c[2] < c[3] && c[3] < c[4]
}

/// Classifies five window labels.
pub fn red_type(c: &[u8; 5]) -> Option<RedType> {
    if is_type_one(c) {
        Some(RedType::I)
    } else if is_type_two(c) {
        Some(RedType::II)
    } else {
        None
    }
}

fn check_phi(variant: Variant, k: u32, phi: &ProperColoring) -> Result<()> {
    if k < variant.min_k() {
        return Err(Error::param(format!(
            "{variant} needs k >= {}, got {k}",
            variant.min_k()
        )));
    }
    let arity = variant.phi_arity(k).expect("k checked");
    if phi.k() != arity {
        return Err(Error::param(format!(
            "{variant} with k = {k} needs phi on {arity}-sets, got {}-sets",
            phi.k()
        )));
    }
    if phi.c() > 3 {
        return Err(Error::param(format!(
            "phi must use at most 3 colors, has {}",
            phi.c()
        )));
    }
    Ok(())
}

fn check_member(x: &KSet, k: u32, phi: &ProperColoring) -> Result<()> {
    if x.arity() != k as usize || !x.within(phi.n()) {
        return Err(Error::param(format!(
            "{x} is not a {k}-subset of [{}]",
            phi.n()
        )));
    }
    Ok(())
}

fn p23_labels(x: &[u32], phi: &ProperColoring) -> [u8; 5] {
    let w = x.len() - 4;
    std::array::from_fn(|i| label(phi.color_of(&x[i..i + w])))
}

/// Red when the five `(k-4)`-window labels are of type I or II.
pub fn p23_color(x: &KSet, phi: &ProperColoring) -> Result<(u8, Option<RedType>)> {
    let k = x.arity() as u32;
    check_phi(Variant::P23, k, phi)?;
    check_member(x, k, phi)?;
    let t = red_type(&p23_labels(x.elements(), phi));
    Ok((if t.is_some() { RED } else { BLUE }, t))
}

fn p33_value(x: &[u32], phi: &ProperColoring) -> Result<u8> {
    let w = x.len() - 1;
    let (a, b) = (label(phi.color_of(&x[..w])), label(phi.color_of(&x[1..])));
    match a.cmp(&b) {
        std::cmp::Ordering::Less => Ok(RED),
        std::cmp::Ordering::Greater => Ok(BLUE),
        std::cmp::Ordering::Equal => Err(Error::NotProper(format!(
            "windows of {x:?} share color label {a}"
        ))),
    }
}

/// Red when the first `(k-1)`-window has the smaller label.
pub fn p33_color(x: &KSet, phi: &ProperColoring) -> Result<u8> {
    let k = x.arity() as u32;
    check_phi(Variant::P33, k, phi)?;
    check_member(x, k, phi)?;
    p33_value(x.elements(), phi)
}

/// Red when `phi(X)` is label 1.
pub fn k1_2k1_color(x: &KSet, phi: &ProperColoring) -> Result<u8> {
    let k = x.arity() as u32;
    check_phi(Variant::K1_2k1, k, phi)?;
    check_member(x, k, phi)?;
    Ok(if label(phi.color(x)?) == 1 { RED } else { BLUE })
}

/// A red/blue coloring of the k-subsets of `[N]`, colors by rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathColoring {
    n: u32,
    k: u32,
    variant: Variant,
    colors: Vec<u8>,
}

impl PathColoring {
    /// Applies the variant's rule to every k-subset of `[n]`.
    pub fn build(variant: Variant, n: u32, k: u32, phi: &ProperColoring) -> Result<Self> {
        check_phi(variant, k, phi)?;
        if phi.n() != n {
            return Err(Error::param(format!("phi is on [{}], not [{n}]", phi.n())));
        }
        let mut cursor = SubsetCursor::new(n, k)?;
        let mut colors = Vec::with_capacity(binomial(n, k) as usize);
        while let Some(x) = cursor.advance() {
            colors.push(match variant {
                Variant::P23 => {
                    if red_type(&p23_labels(x, phi)).is_some() {
                        RED
                    } else {
                        BLUE
                    }
                }
                Variant::P33 => p33_value(x, phi)?,
                Variant::K1_2k1 => {
                    if label(phi.color_of(x)) == 1 {
                        RED
                    } else {
                        BLUE
                    }
                }
            });
        }
        Ok(PathColoring {
            n,
            k,
            variant,
            colors,
        })
    }

    /// An arbitrary red/blue coloring, checked only for shape.
    pub fn from_colors(variant: Variant, n: u32, k: u32, colors: Vec<u8>) -> Result<Self> {
        SubsetCursor::new(n, k)?;
        if colors.len() as u64 != binomial(n, k) {
            return Err(Error::param(format!(
                "{} colors given for {} sets",
                colors.len(),
                binomial(n, k)
            )));
        }
        if let Some(x) = colors.iter().find(|&&x| x != RED && x != BLUE) {
            return Err(Error::param(format!("color {x} not in {{1, 2}}")));
        }
        Ok(PathColoring {
            n,
            k,
            variant,
            colors,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    #[inline]
    fn color_of(&self, x: &[u32]) -> u8 {
        self.colors[rank_slice(x, self.n) as usize]
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

    pub fn iter(&self) -> impl Iterator<Item = (KSet, u8)> + '_ {
        let mut cursor = SubsetCursor::new(self.n, self.k).expect("validated shape");
        self.colors.iter().map(move |&col| {
            (
                KSet::from_sorted_unchecked(cursor.advance().expect("rank in range").to_vec()),
                col,
            )
        })
    }
}

/// Red and blue halves of a path verification. Each witness is the superset
/// carrying the forbidden configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathReport {
    pub red: Scan<KSet>,
    pub blue: Scan<KSet>,
}

impl PathReport {
    pub fn status(&self) -> Status {
        self.red.status().and(self.blue.status())
    }

    pub fn holds(&self) -> bool {
        self.red.holds() && self.blue.holds()
    }
}

/// First `size`-subset of `[n]` satisfying `bad`, sharded over `workers`.
fn scan_supersets(
    n: u32,
    size: u32,
    workers: usize,
    bad: impl Fn(&[u32]) -> bool + Sync,
) -> Scan<KSet> {
    if size == 0 || size > n {
        return Scan {
            witness: None,
            scanned: 0,
        };
    }
    let total = binomial(n, size);
    let hit = par::first_hit(total, workers, |range| {
        let mut cursor = SubsetCursor::starting_at(n, size, range.start).ok()?;
        for r in range {
            let s = cursor.advance().expect("rank in range");
            if bad(s) {
                return Some((r, s.to_vec()));
            }
        }
        None
    });
    Scan {
        witness: hit.map(|(_, s)| KSet::from_sorted_unchecked(s)),
        scanned: total,
    }
}

/// Every consecutive k-window of `s` has color `col`.
fn windows_all(pc: &PathColoring, s: &[u32], col: u8) -> bool {
    let k = pc.k as usize;
    (0..=s.len() - k).all(|i| pc.color_of(&s[i..i + k]) == col)
}

/// No red path on 2 vertices ((k+1)-sets) and no blue path on 3 vertices
/// ((k+2)-sets).
pub fn verify_p23_coloring(pc: &PathColoring, workers: usize) -> PathReport {
    PathReport {
        red: scan_supersets(pc.n, pc.k + 1, workers, |s| windows_all(pc, s, RED)),
        blue: scan_supersets(pc.n, pc.k + 2, workers, |s| windows_all(pc, s, BLUE)),
    }
}

/// No monochromatic path on 3 vertices.
pub fn verify_p33_coloring(pc: &PathColoring, workers: usize) -> PathReport {
    PathReport {
        red: scan_supersets(pc.n, pc.k + 2, workers, |s| windows_all(pc, s, RED)),
        blue: scan_supersets(pc.n, pc.k + 2, workers, |s| windows_all(pc, s, BLUE)),
    }
}

/// No red `K_{k+1}` and no blue `K_{2k+1}`. The red scan rejects any
/// (k+1)-set whose shift pair `(S \ {max}, S \ {min})` is red, which
/// subsumes an all-red (k+1)-set.
pub fn verify_k1_2k1_coloring(pc: &PathColoring, workers: usize) -> PathReport {
    let k = pc.k;
    let blue = scan_supersets(pc.n, 2 * k + 1, workers, |y| {
        let mut inner = SubsetCursor::new(2 * k + 1, k).expect("k < 2k+1");
        let mut sub = vec![0u32; k as usize];
        while let Some(pos) = inner.advance() {
            for (slot, &p) in sub.iter_mut().zip(pos) {
                *slot = y[p as usize - 1];
            }
            if pc.color_of(&sub) != BLUE {
                return false;
            }
        }
        true
    });
    PathReport {
        red: scan_supersets(pc.n, k + 1, workers, |s| windows_all(pc, s, RED)),
        blue,
    }
}

pub fn verify_coloring(pc: &PathColoring, workers: usize) -> PathReport {
    match pc.variant {
        Variant::P23 => verify_p23_coloring(pc, workers),
        Variant::P33 => verify_p33_coloring(pc, workers),
        Variant::K1_2k1 => verify_k1_2k1_coloring(pc, workers),
    }
}

/// Builds the variant's coloring from `phi` and verifies it.
pub fn verify(
    variant: Variant,
    n: u32,
    k: u32,
    phi: &ProperColoring,
    workers: usize,
) -> Result<PathReport> {
    Ok(verify_coloring(
        &PathColoring::build(variant, n, k, phi)?,
        workers,
    ))
}

pub fn verify_p23(n: u32, k: u32, phi: &ProperColoring, workers: usize) -> Result<PathReport> {
    verify(Variant::P23, n, k, phi, workers)
}

pub fn verify_p33(n: u32, k: u32, phi: &ProperColoring, workers: usize) -> Result<PathReport> {
    verify(Variant::P33, n, k, phi, workers)
}

pub fn verify_k1_2k1(n: u32, k: u32, phi: &ProperColoring, workers: usize) -> Result<PathReport> {
    verify(Variant::K1_2k1, n, k, phi, workers)
}

/// A shortest odd cycle among the k-subsets of `y` (`|y| = 2k+1`) under
/// undirected shift adjacency. Vertices are listed once; the last is
/// adjacent to the first.
pub fn odd_cycle_in_shift(y: &KSet, k: usize) -> Result<Vec<KSet>> {
    if k == 0 || y.arity() != 2 * k + 1 {
        return Err(Error::param(format!(
            "need a set of size 2k+1 = {}, got {}",
            2 * k + 1,
            y.arity()
        )));
    }
    let m = y.arity() as u32;
    // Work on positions 1..=m, then map back to the elements of y.
    let verts: Vec<Vec<u32>> = crate::kset::ksubsets(m, k as u32)?
        .map(KSet::into_vec)
        .collect();
    let index = |s: &[u32]| rank_slice(s, m) as usize;
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|x| {
            let mut out = Vec::new();
            for e in 1..x[0] {
                let mut s = vec![e];
                s.extend_from_slice(&x[..k - 1]);
                out.push(index(&s));
            }
            for e in x[k - 1] + 1..=m {
                let mut s = x[1..].to_vec();
                s.push(e);
                out.push(index(&s));
            }
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect();

    let mut best: Option<Vec<usize>> = None;
    for s in 0..verts.len() {
        // BFS on (vertex, parity); a path (s,0) -> (s,1) is an odd closed walk.
        let mut prev = vec![[usize::MAX; 2]; verts.len()];
        let mut dist = vec![[u32::MAX; 2]; verts.len()];
        dist[s][0] = 0;
        let mut queue = VecDeque::from([(s, 0usize)]);
        while let Some((v, p)) = queue.pop_front() {
            if v == s && p == 1 {
                break;
            }
            if best
                .as_ref()
                .is_some_and(|b| dist[v][p] as usize + 1 >= b.len())
            {
                break;
            }
            for &w in &adj[v] {
                let q = 1 - p;
                if dist[w][q] == u32::MAX {
                    dist[w][q] = dist[v][p] + 1;
                    prev[w][q] = v;
                    queue.push_back((w, q));
                }
            }
        }
        if dist[s][1] == u32::MAX {
            continue;
        }
        let len = dist[s][1] as usize;
        if best.as_ref().is_some_and(|b| b.len() <= len) {
            continue;
        }
        let mut walk = Vec::with_capacity(len);
        let (mut v, mut p) = (s, 1usize);
        while walk.len() < len {
            let u = prev[v][p];
            walk.push(u);
            v = u;
            p = 1 - p;
        }
        walk.reverse();
        best = Some(walk);
    }
    let cycle =
        best.ok_or_else(|| Error::Internal(format!("no odd cycle among the {k}-subsets of {y}")))?;
    let e = y.elements();
    let cycle: Vec<KSet> = cycle
        .into_iter()
        .map(|i| KSet::from_sorted_unchecked(verts[i].iter().map(|&p| e[p as usize - 1]).collect()))
        .collect();
    if !is_odd_cycle(&cycle) {
        return Err(Error::Internal(format!(
            "search returned an invalid cycle {cycle:?}"
        )));
    }
    Ok(cycle)
}

/// Odd length, at least 3, distinct vertices, consecutive (cyclically)
/// vertices shift-adjacent in some direction.
pub fn is_odd_cycle(cycle: &[KSet]) -> bool {
    let len = cycle.len();
    if len < 3 || len.is_multiple_of(2) {
        return false;
    }
    let mut sorted: Vec<&KSet> = cycle.iter().collect();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != len {
        return false;
    }
    (0..len).all(|i| {
        let (a, b) = (cycle[i].elements(), cycle[(i + 1) % len].elements());
        a.len() == b.len() && (is_shift_slice(a, b) || is_shift_slice(b, a))
    })
}

fn label_sequences<const L: usize>(consecutive_distinct: bool) -> Vec<[u8; L]> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(L as u32) {
        let mut c = [0u8; L];
        let mut x = code;
        for slot in c.iter_mut().rev() {
            *slot = (x % 3) as u8 + 1;
            x /= 3;
        }
        if !consecutive_distinct || c.windows(2).all(|w| w[0] != w[1]) {
            out.push(c);
        }
    }
    out
}

fn window5<const L: usize>(c: &[u8; L], start: usize) -> [u8; 5] {
    std::array::from_fn(|i| c[start + i])
}

/// No label quintuple is of both red types (all 243).
pub fn sweep_type_disjointness() -> Scan<[u8; 5]> {
    let all = label_sequences::<5>(false);
    Scan {
        witness: all
            .iter()
            .find(|c| is_type_one(c) && is_type_two(c))
            .copied(),
        scanned: all.len() as u64,
    }
}

/// Two overlapping quintuples of a proper label sequence are never both
/// red (96 sextuples).
pub fn sweep_no_red_pair() -> Scan<[u8; 6]> {
    let all = label_sequences::<6>(true);
    Scan {
        witness: all
            .iter()
            .find(|c| red_type(&window5(c, 0)).is_some() && red_type(&window5(c, 1)).is_some())
            .copied(),
        scanned: all.len() as u64,
    }
}

/// Three overlapping quintuples of a proper label sequence are never all
/// blue (192 septuples).
pub fn sweep_no_blue_triple() -> Scan<[u8; 7]> {
    let all = label_sequences::<7>(true);
    Scan {
        witness: all
            .iter()
            .find(|c| (0..3).all(|s| red_type(&window5(c, s)).is_none()))
            .copied(),
        scanned: all.len() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kset::ksubsets;
    use crate::shift::{bit_color_pairs, find_coloring_sat};

    fn ks(v: &[u32]) -> KSet {
        KSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn red_types() {
        assert_eq!(red_type(&[3, 1, 2, 1, 3]), Some(RedType::I));
        assert_eq!(red_type(&[3, 2, 1, 2, 3]), Some(RedType::II));
        assert_eq!(red_type(&[1, 2, 3, 1, 2]), Some(RedType::I));
        assert_eq!(red_type(&[1, 2, 1, 2, 1]), None);
        assert_eq!(red_type(&[2, 1, 2, 3, 1]), None);
    }

    #[test]
    fn labels_put_residue_zero_last() {
        assert_eq!([0, 1, 2].map(label), [3, 1, 2]);
    }

    #[test]
    fn p33_examples() {
        let phi = bit_color_pairs(8).unwrap();
        // phi{1,2} = 0 (label 3), phi{2,3} = 1
        assert_eq!(p33_color(&ks(&[1, 2, 3]), &phi).unwrap(), BLUE);
        // phi{2,4} = 1
        assert_eq!(p33_color(&ks(&[1, 2, 4]), &phi).unwrap(), BLUE);
        // phi{1,3} = 1, phi{3,5} = 2
        assert_eq!(p33_color(&ks(&[1, 3, 5]), &phi).unwrap(), RED);
    }

    #[test]
    fn k1_2k1_rule() {
        let phi = bit_color_pairs(8).unwrap();
        assert_eq!(k1_2k1_color(&ks(&[2, 3]), &phi).unwrap(), RED);
        assert_eq!(k1_2k1_color(&ks(&[1, 2]), &phi).unwrap(), BLUE);
        assert_eq!(k1_2k1_color(&ks(&[4, 5]), &phi).unwrap(), BLUE);
    }

    #[test]
    fn bit_coloring_instances() {
        let phi = bit_color_pairs(8).unwrap();
        let r = verify_p23(8, 6, &phi, 1).unwrap();
        assert!(r.holds());
        assert_eq!((r.red.scanned, r.blue.scanned), (8, 1));
        let r = verify_p33(8, 3, &phi, 1).unwrap();
        assert!(r.holds());
        assert_eq!(r.red.scanned, 56);
        let r = verify_k1_2k1(8, 2, &phi, 1).unwrap();
        assert!(r.holds());
        assert_eq!((r.red.scanned, r.blue.scanned), (56, 56));
    }

    #[test]
    fn vacuous_blue_scan() {
        let phi = find_coloring_sat(7, 2, 3).unwrap().unwrap();
        let r = verify_p23(7, 6, &phi, 1).unwrap();
        assert_eq!(r.red.status(), Status::Pass);
        assert_eq!(r.blue.status(), Status::Vacuous);
        assert_eq!(r.status(), Status::Pass);
    }

    #[test]
    fn monochromatic_colorings_are_caught() {
        let blue = PathColoring::from_colors(Variant::K1_2k1, 8, 2, vec![BLUE; 28]).unwrap();
        let r = verify_k1_2k1_coloring(&blue, 1);
        assert_eq!(r.blue.witness, Some(KSet::interval(1, 5).unwrap()));
        let red = PathColoring::from_colors(Variant::K1_2k1, 8, 2, vec![RED; 28]).unwrap();
        let r = verify_k1_2k1_coloring(&red, 1);
        assert_eq!(r.red.witness, Some(KSet::interval(1, 3).unwrap()));
        assert_eq!(r.status(), Status::Fail);
    }

    #[test]
    fn adversarial_p23_coloring() {
        // Red wherever the first window is red: two consecutive type I sets.
        let mut colors = vec![BLUE; binomial(8, 6) as usize];
        colors[0] = RED;
        colors[1] = RED;
        let pc = PathColoring::from_colors(Variant::P23, 8, 6, colors).unwrap();
        // ranks 0 and 1 are {1..6} and {1,2,3,4,5,7}: not a shift pair
        let r = verify_p23_coloring(&pc, 1);
        assert!(r.red.holds());
        let pair_end = rank_slice(&[2, 3, 4, 5, 6, 7], 8) as usize;
        let mut colors = vec![BLUE; binomial(8, 6) as usize];
        colors[0] = RED;
        colors[pair_end] = RED;
        let pc = PathColoring::from_colors(Variant::P23, 8, 6, colors).unwrap();
        let r = verify_p23_coloring(&pc, 1);
        assert_eq!(r.red.witness, Some(KSet::interval(1, 7).unwrap()));
        for w in [2, 4] {
            assert_eq!(verify_p23_coloring(&pc, w), r);
        }
    }

    #[test]
    fn odd_cycles() {
        let c = odd_cycle_in_shift(&KSet::interval(1, 5).unwrap(), 2).unwrap();
        assert_eq!(c.len(), 5);
        assert!(is_odd_cycle(&c));
        let c = odd_cycle_in_shift(&KSet::interval(1, 7).unwrap(), 3).unwrap();
        assert!(is_odd_cycle(&c) && c.len() >= 5);
        let c = odd_cycle_in_shift(&ks(&[2, 4, 5, 7, 9]), 2).unwrap();
        assert!(is_odd_cycle(&c));
        assert!(c
            .iter()
            .all(|v| v.elements().iter().all(|e| [2, 4, 5, 7, 9].contains(e))));
        for y in ksubsets(8, 5).unwrap() {
            let c = odd_cycle_in_shift(&y, 2).unwrap();
            assert!(is_odd_cycle(&c) && c.len() >= 5);
        }
        assert!(odd_cycle_in_shift(&KSet::interval(1, 4).unwrap(), 2).is_err());
        let path = [ks(&[1, 2]), ks(&[2, 3]), ks(&[3, 4])];
        assert!(!is_odd_cycle(&path));
    }

    #[test]
    fn syntactic_sweeps() {
        let s = sweep_type_disjointness();
        assert_eq!((s.scanned, s.witness), (243, None));
        let s = sweep_no_red_pair();
        assert_eq!((s.scanned, s.witness), (96, None));
        let s = sweep_no_blue_triple();
        assert_eq!((s.scanned, s.witness), (192, None));
    }

    #[test]
    fn shape_errors() {
        let phi = bit_color_pairs(8).unwrap();
        assert!(verify_p23(8, 4, &phi, 1).is_err());
        assert!(verify_p33(8, 4, &phi, 1).is_err());
        assert!(p23_color(&ks(&[1, 2, 3, 4, 5, 6]), &phi).is_ok());
        let four = bit_color_pairs(9).unwrap();
        assert!(verify_k1_2k1(9, 2, &four, 1).is_err());
    }
}
