//! Brute-force ground truth for tiny instances. Nothing here calls the SAT
//! solver except [`p222_identity`], which compares a backtracking search
//! against the SAT-based [`s_exact_upto`](crate::shift::s_exact_upto).

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::kset::{binomial, rank_slice, SubsetCursor};
use crate::par;
use crate::shift::{s_exact_upto, shift_edges};

/// Largest number of pairs a 2-coloring sweep may range over.
pub const MAX_SWEEP_PAIRS: u64 = 21;
/// Largest shift graph the bipartiteness and backtracking oracles accept.
pub const MAX_ORACLE_VERTICES: u64 = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleStatus {
    Holds,
    Fails,
    /// The decidable range did not settle the claim.
    Partial,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub claim: String,
    pub params: BTreeMap<String, Value>,
    pub status: OracleStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub search_space: u64,
}

impl OracleReport {
    fn new(
        claim: &str,
        params: &[(&str, Value)],
        status: OracleStatus,
        witness: Option<Value>,
        search_space: u64,
    ) -> Self {
        OracleReport {
            claim: claim.to_string(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            status,
            witness,
            search_space,
        }
    }

    pub fn holds(&self) -> bool {
        self.status == OracleStatus::Holds
    }
}

/// A 2-coloring of the pairs of `[n]` as a bitmask over pair ranks; bit set
/// means red (color 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairColoring {
    pub n: u32,
    pub red: u64,
}

impl PairColoring {
    pub fn color(&self, i: u32, j: u32) -> u8 {
        let r = rank_slice(&[i.min(j), i.max(j)], self.n);
        if self.red >> r & 1 == 1 {
            1
        } else {
            2
        }
    }

    /// `[i, j, color]` triples in lexicographic order.
    pub fn triples(&self) -> Vec<[u32; 3]> {
        let mut cursor = SubsetCursor::new(self.n, 2).expect("n >= 2");
        let mut out = Vec::new();
        let mut r = 0;
        while let Some(p) = cursor.advance() {
            out.push([p[0], p[1], if self.red >> r & 1 == 1 { 1 } else { 2 }]);
            r += 1;
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "colors": self.triples() })
    }
}

/// Pair masks of every `size`-subset of `[n]`: all its pairs when
/// `clique`, else its consecutive pairs (an ordered path).
fn pattern_masks(n: u32, size: u32, clique: bool) -> Vec<u64> {
    if size > n || size < 2 {
        return Vec::new();
    }
    let mut cursor = SubsetCursor::new(n, size).expect("valid");
    let mut out = Vec::new();
    while let Some(s) = cursor.advance() {
        let mut mask = 0u64;
        for i in 0..s.len() {
            let hi = if clique {
                s.len()
            } else {
                (i + 2).min(s.len())
            };
            for j in i + 1..hi {
                mask |= 1 << rank_slice(&[s[i], s[j]], n);
            }
        }
        out.push(mask);
    }
    out
}

/// First pair coloring of `[n]` (by mask) that contains no all-red pattern
/// from `red` and no all-blue pattern from `blue`.
fn first_avoiding(n: u32, red: &Pattern, blue: &Pattern, workers: usize) -> Option<PairColoring> {
    let pairs = binomial(n, 2);
    let full = if pairs == 64 {
        u64::MAX
    } else {
        (1u64 << pairs) - 1
    };
    if red.always || blue.always {
        return None;
    }
    par::first_hit(1u64 << pairs, workers, |range| {
        for mask in range {
            let has_red = red.masks.iter().any(|&m| m & !mask == 0);
            if has_red {
                continue;
            }
            let blue_mask = !mask & full;
            if blue.masks.iter().any(|&m| m & !blue_mask == 0) {
                continue;
            }
            return Some((mask, ()));
        }
        None
    })
    .map(|(red, ())| PairColoring { n, red })
}

struct Pattern {
    masks: Vec<u64>,
    /// Satisfied by every coloring (a pattern with no pairs that fits).
    always: bool,
}

impl Pattern {
    /// All-one-color copies of a `vertices`-vertex clique or ordered path
    /// in the pairs of `[n]`. Paths have `vertices + 1` elements.
    fn new(n: u32, vertices: u32, clique: bool) -> Pattern {
        let size = if clique { vertices } else { vertices + 1 };
        if size > n {
            return Pattern {
                masks: Vec::new(),
                always: false,
            };
        }
        // A clique on at most one vertex has no pairs.
        if clique && vertices <= 1 {
            return Pattern {
                masks: Vec::new(),
                always: true,
            };
        }
        Pattern {
            masks: pattern_masks(n, size, clique),
            always: false,
        }
    }
}

fn check_sweep(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::param("need N >= 2"));
    }
    let pairs = binomial(n, 2);
    if pairs > MAX_SWEEP_PAIRS {
        return Err(Error::SizeLimit(format!(
            "C({n},2) = {pairs} pairs exceeds the sweep cap {MAX_SWEEP_PAIRS}"
        )));
    }
    Ok(())
}

/// Whether every red/blue coloring of the pairs of `[n]` has a red `K_l` or
/// a blue `K_m`. A failing report carries the first avoiding coloring.
pub fn ramsey2_holds(l: u32, m: u32, n: u32, workers: usize) -> Result<OracleReport> {
    check_sweep(n)?;
    if l == 0 || m == 0 {
        return Err(Error::param("clique sizes must be positive"));
    }
    let red = Pattern::new(n, l, true);
    let blue = Pattern::new(n, m, true);
    let hit = first_avoiding(n, &red, &blue, workers);
    let params = [("l", json!(l)), ("m", json!(m)), ("N", json!(n))];
    Ok(match hit {
        None => OracleReport::new(
            "ramsey2",
            &params,
            OracleStatus::Holds,
            None,
            1 << binomial(n, 2),
        ),
        Some(w) => OracleReport::new(
            "ramsey2",
            &params,
            OracleStatus::Fails,
            Some(w.to_json()),
            1 << binomial(n, 2),
        ),
    })
}

/// First coloring avoiding a red `K_l` and a blue `K_m`, if any.
pub fn ramsey2_witness(l: u32, m: u32, n: u32, workers: usize) -> Result<Option<PairColoring>> {
    check_sweep(n)?;
    Ok(first_avoiding(
        n,
        &Pattern::new(n, l, true),
        &Pattern::new(n, m, true),
        workers,
    ))
}

/// Proper 2-coloring of `Sh(n, k)` by breadth-first search, or `None` when
/// an odd cycle exists. Colors are 0/1 by rank.
pub fn shift_bipartition(n: u32, k: u32) -> Result<Option<Vec<u8>>> {
    let (vertices, adj) = shift_adjacency(n, k)?;
    let mut side = vec![u8::MAX; vertices];
    for s in 0..vertices {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(side))
}

fn shift_adjacency(n: u32, k: u32) -> Result<(usize, Vec<Vec<usize>>)> {
    SubsetCursor::new(n, k)?;
    let vertices = binomial(n, k);
    if vertices > MAX_ORACLE_VERTICES {
        return Err(Error::SizeLimit(format!(
            "C({n},{k}) = {vertices} vertices exceeds {MAX_ORACLE_VERTICES}"
        )));
    }
    let mut adj = vec![Vec::new(); vertices as usize];
    for (u, v) in shift_edges(n, k)? {
        let (u, v) = (u as usize - 1, v as usize - 1);
        adj[u].push(v);
        adj[v].push(u);
    }
    Ok((vertices as usize, adj))
}

/// "`P_k(2,2) <= n`": every red/blue coloring of the k-subsets of `[n]` has
/// a monochromatic shift edge, i.e. `Sh(n, k)` is not bipartite. A failing
/// report carries a proper 2-coloring.
pub fn path_ramsey2_upper(k: u32, n: u32) -> Result<OracleReport> {
    let params = [("k", json!(k)), ("N", json!(n))];
    let space = binomial(n, k);
    Ok(match shift_bipartition(n, k)? {
        None => OracleReport::new("path2", &params, OracleStatus::Holds, None, space),
        Some(side) => {
            let colors: Vec<u8> = side.iter().map(|&s| s + 1).collect();
            OracleReport::new(
                "path2",
                &params,
                OracleStatus::Fails,
                Some(json!({ "n": n, "k": k, "colors_by_rank": colors })),
                space,
            )
        }
    })
}

/// Proper c-coloring by backtracking with saturation ordering (most
/// distinct neighbor colors first, then higher degree, then lower index).
/// New colors are opened only in increasing order.
pub fn backtrack_coloring(adj: &[Vec<usize>], c: u8) -> Option<Vec<u8>> {
    const NONE: u8 = u8::MAX;
    let n = adj.len();
    let mut color = vec![NONE; n];
    // forbidden[v][j]: neighbors of v currently colored j
    let mut forbidden = vec![vec![0u32; c as usize]; n];

    fn pick(adj: &[Vec<usize>], color: &[u8], forbidden: &[Vec<u32>]) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..adj.len() {
            if color[v] != u8::MAX {
                continue;
            }
            let sat = forbidden[v].iter().filter(|&&x| x > 0).count();
            let key = (sat, adj[v].len());
            if best.is_none_or(|(s, d, _)| key > (s, d)) {
                best = Some((sat, adj[v].len(), v));
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn go(
        adj: &[Vec<usize>],
        c: u8,
        color: &mut [u8],
        forbidden: &mut [Vec<u32>],
        used: u8,
    ) -> bool {
        let Some(v) = pick(adj, color, forbidden) else {
            return true;
        };
        let limit = c.min(used + 1);
        for j in 0..limit {
            if forbidden[v][j as usize] > 0 {
                continue;
            }
            color[v] = j;
            for &w in &adj[v] {
                forbidden[w][j as usize] += 1;
            }
            if go(adj, c, color, forbidden, used.max(j + 1)) {
                return true;
            }
            for &w in &adj[v] {
                forbidden[w][j as usize] -= 1;
            }
            color[v] = u8::MAX;
        }
        false
    }

    if c == 0 {
        return if n == 0 { Some(Vec::new()) } else { None };
    }
    if go(adj, c, &mut color, &mut forbidden, 0) {
        Some(color)
    } else {
        None
    }
}

/// Backtracking 3-colorability of `Sh(n, k)`.
pub fn shift_3colorable_backtrack(n: u32, k: u32) -> Result<bool> {
    let (_, adj) = shift_adjacency(n, k)?;
    Ok(backtrack_coloring(&adj, 3).is_some())
}

/// "`P_l(2,2,2) = s(l) + 1`": the least N whose `Sh(N, l)` is not
/// 3-colorable (backtracking) against the SAT-based `s(l)` scan, both up to
/// `n_max + 1`.
pub fn p222_identity(l: u32, n_max: u32) -> Result<OracleReport> {
    if l == 0 {
        return Err(Error::param("l must be at least 1"));
    }
    let mut p = None;
    let mut scanned = 0;
    for n in l..=n_max + 1 {
        scanned += 1;
        if !shift_3colorable_backtrack(n, l)? {
            p = Some(n);
            break;
        }
    }
    let s = s_exact_upto(l, n_max + 1)?;
    let params = [("l", json!(l)), ("N_max", json!(n_max))];
    let detail = json!({
        "p222": p,
        "s_largest_colorable": s.largest_colorable,
        "s_exact": s.exact,
    });
    let status = match (p, s.exact) {
        (Some(p), true) if p == s.largest_colorable + 1 => OracleStatus::Holds,
        (None, false) => OracleStatus::Partial,
        (Some(_), false) if s.refused_at.is_some() => OracleStatus::Partial,
        _ => OracleStatus::Fails,
    };
    let witness = (status != OracleStatus::Holds).then_some(detail);
    Ok(OracleReport::new("p222", &params, status, witness, scanned))
}

/// Least `N` in `[2, n_max]` at which every coloring of pairs contains the
/// red or blue pattern; `None` if no such N in range.
fn least_forcing(
    n_max: u32,
    red_vertices: u32,
    blue_vertices: u32,
    clique: bool,
    workers: usize,
) -> Option<u32> {
    (2..=n_max).find(|&n| {
        let red = Pattern::new(n, red_vertices, clique);
        let blue = Pattern::new(n, blue_vertices, clique);
        first_avoiding(n, &red, &blue, workers).is_none()
    })
}

/// Audits `P_k(m,n) <= R_k(k+m-1, k+n-1)` for `k = 2` by computing both
/// minima over `N <= n_max` (at most 7).
pub fn inequality_audit(
    k: u32,
    m: u32,
    n: u32,
    n_max: u32,
    workers: usize,
) -> Result<OracleReport> {
    if k != 2 {
        return Err(Error::SizeLimit(format!(
            "the audit sweeps pairs only (k = 2), got k = {k}"
        )));
    }
    if !(1..=3).contains(&m) || !(1..=3).contains(&n) {
        return Err(Error::SizeLimit("path lengths are limited to 1..=3".into()));
    }
    if n_max > 7 {
        return Err(Error::SizeLimit(format!("N_max = {n_max} exceeds 7")));
    }
    check_sweep(n_max.max(2))?;
    let p = least_forcing(n_max, m, n, false, workers);
    let r = least_forcing(n_max, k + m - 1, k + n - 1, true, workers);
    let status = match (p, r) {
        (Some(p), Some(r)) if p <= r => OracleStatus::Holds,
        (Some(_), None) => OracleStatus::Holds,
        (None, None) => OracleStatus::Partial,
        _ => OracleStatus::Fails,
    };
    let params = [
        ("k", json!(k)),
        ("m", json!(m)),
        ("n", json!(n)),
        ("N_max", json!(n_max)),
    ];
    let space = (2..=n_max).map(|x| 1u64 << binomial(x, 2)).sum();
    let detail = json!({ "path_minimum": p, "clique_minimum": r });
    let mut report = OracleReport::new("audit", &params, status, None, space);
    report.params.insert("result".into(), detail);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kset::SubsetCursor;
    use crate::shift::find_coloring_sat;

    fn is_pentagon(w: &PairColoring) -> bool {
        let red: Vec<[u32; 2]> = w
            .triples()
            .iter()
            .filter(|t| t[2] == 1)
            .map(|t| [t[0], t[1]])
            .collect();
        if red.len() != 5 {
            return false;
        }
        let mut degree = [0; 6];
        for [a, b] in &red {
            degree[*a as usize] += 1;
            degree[*b as usize] += 1;
        }
        // 2-regular and simple on 5 vertices forces a single 5-cycle
        degree[1..].iter().all(|&d| d == 2)
    }

    #[test]
    fn classical_r33() {
        assert!(ramsey2_holds(3, 3, 6, 1).unwrap().holds());
        let r = ramsey2_holds(3, 3, 5, 1).unwrap();
        assert_eq!(r.status, OracleStatus::Fails);
        let w = ramsey2_witness(3, 3, 5, 1).unwrap().unwrap();
        assert!(is_pentagon(&w));
        for workers in [2, 4] {
            assert_eq!(ramsey2_witness(3, 3, 5, workers).unwrap(), Some(w));
        }
        let mut cursor = SubsetCursor::new(5, 3).unwrap();
        while let Some(t) = cursor.advance() {
            let c = [
                w.color(t[0], t[1]),
                w.color(t[0], t[2]),
                w.color(t[1], t[2]),
            ];
            assert!(c.iter().any(|&x| x != c[0]));
        }
        assert!(matches!(
            ramsey2_holds(3, 3, 8, 1),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn degenerate_clique_sizes() {
        // Any red edge is a red K_2; the all-blue coloring needs a blue K_m.
        assert!(ramsey2_holds(2, 3, 3, 1).unwrap().holds());
        assert!(!ramsey2_holds(2, 4, 3, 1).unwrap().holds());
        assert!(ramsey2_holds(1, 5, 2, 1).unwrap().holds());
    }

    #[test]
    fn path2_upper() {
        assert!(path_ramsey2_upper(2, 5).unwrap().holds());
        assert_eq!(
            path_ramsey2_upper(2, 4).unwrap().status,
            OracleStatus::Fails
        );
        assert!(path_ramsey2_upper(3, 7).unwrap().holds());
        assert_eq!(
            path_ramsey2_upper(3, 6).unwrap().status,
            OracleStatus::Fails
        );
        for (k, n) in [(2, 4), (2, 5), (3, 6), (3, 7), (4, 9)] {
            let bfs = shift_bipartition(n, k).unwrap().is_some();
            let sat = find_coloring_sat(n, k, 2).unwrap().is_some();
            assert_eq!(bfs, sat, "k={k} n={n}");
        }
    }

    #[test]
    fn backtracking_agrees_with_sat() {
        for (n, k) in [(8, 2), (9, 2), (12, 3), (3, 1), (4, 1)] {
            let bt = shift_3colorable_backtrack(n, k).unwrap();
            let sat = find_coloring_sat(n, k, 3).unwrap().is_some();
            assert_eq!(bt, sat, "n={n} k={k}");
        }
    }

    #[test]
    fn p222() {
        let one = p222_identity(1, 10).unwrap();
        assert!(one.holds(), "{one:?}");
        let two = p222_identity(2, 12).unwrap();
        assert!(two.holds(), "{two:?}");
    }

    #[test]
    fn audit_small() {
        let r = inequality_audit(2, 2, 2, 7, 1).unwrap();
        assert!(r.holds());
        assert_eq!(
            r.params["result"],
            json!({ "path_minimum": 5, "clique_minimum": 6 })
        );
        let r = inequality_audit(2, 1, 1, 7, 1).unwrap();
        assert_eq!(
            r.params["result"],
            json!({ "path_minimum": 2, "clique_minimum": 2 })
        );
        assert!(inequality_audit(3, 2, 2, 7, 1).is_err());
    }
}
