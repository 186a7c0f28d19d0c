//! Bridges over `Z_c^n` and 2-colorings of the bridge hypergraph.
//!
//! A bridge from `a` to `b` (with `a_i != b_i` for every i) is the chain
//! obtained from `a` by replacing ever longer suffixes with those of `b`:
//!
//! ```text
//! (a1, .., a_{n-1}, a_n), (a1, .., a_{n-1}, b_n), .., (a1, b2, .., b_n), (b1, .., b_n)
//! ```
//!
//! Colors of the alphabet are residues `0..c`; the label `c` of the 1-based
//! alphabet corresponds to residue 0. Vector `v` has index
//! `sum_i v_i * c^(n-i)` and CNF variable `index + 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::par;
use crate::sat::{self, Cnf, SolveResult};

/// Encoder bound on the number of vertices `c^n`.
pub const MAX_BRIDGE_VERTICES: u64 = 1024;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorVector {
    coords: Vec<u8>,
    c: u8,
}

impl ColorVector {
    pub fn new(coords: Vec<u8>, c: u8) -> Result<Self> {
        if c < 2 {
            return Err(Error::param("alphabet size must be at least 2"));
        }
        if coords.len() < 2 {
            return Err(Error::param("vector length must be at least 2"));
        }
        if let Some(&x) = coords.iter().find(|&&x| x >= c) {
            return Err(Error::param(format!(
                "coordinate {x} is not a residue mod {c}"
            )));
        }
        Ok(ColorVector { coords, c })
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn c(&self) -> u8 {
        self.c
    }

    /// Base-c positional index, first coordinate most significant.
    pub fn index(&self) -> u32 {
        self.coords
            .iter()
            .fold(0u32, |acc, &x| acc * self.c as u32 + x as u32)
    }

    pub fn from_index(mut index: u32, n: usize, c: u8) -> Result<Self> {
        let mut coords = vec![0u8; n];
        for slot in coords.iter_mut().rev() {
            *slot = (index % c as u32) as u8;
            index /= c as u32;
        }
        if index != 0 {
            return Err(Error::param("index out of range"));
        }
        ColorVector::new(coords, c)
    }

    /// CNF variable of this vertex.
    pub fn variable(&self) -> u32 {
        self.index() + 1
    }
}

impl fmt::Debug for ColorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

fn vertex_count(n: usize, c: u8) -> Option<u64> {
    (c as u64).checked_pow(n as u32)
}

fn check_shape(n: usize, c: u8) -> Result<()> {
    if n < 2 || c < 2 {
        return Err(Error::param(format!(
            "need n >= 2 and c >= 2, got n={n}, c={c}"
        )));
    }
    match vertex_count(n, c) {
        Some(v) if v <= u32::MAX as u64 => Ok(()),
        _ => Err(Error::SizeLimit(format!("{c}^{n} vertices"))),
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Bridge {
    a: ColorVector,
    b: ColorVector,
    members: Vec<ColorVector>,
}

impl Bridge {
    pub fn new(a: ColorVector, b: ColorVector) -> Result<Self> {
        let members = bridge_members(&a, &b)?;
        Ok(Bridge { a, b, members })
    }

    pub fn a(&self) -> &ColorVector {
        &self.a
    }

    pub fn b(&self) -> &ColorVector {
        &self.b
    }

    /// The `n + 1` chain members, from `a` to `b`.
    pub fn members(&self) -> &[ColorVector] {
        &self.members
    }
}

impl fmt::Debug for Bridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bridge{:?}", self.members)
    }
}

/// The chain `[a, .., b]`; member j is `a` with its last j coordinates taken
/// from `b`.
pub fn bridge_members(a: &ColorVector, b: &ColorVector) -> Result<Vec<ColorVector>> {
    if a.n() != b.n() || a.c != b.c {
        return Err(Error::param("endpoints differ in length or alphabet"));
    }
    if let Some(i) = (0..a.n()).find(|&i| a.coords[i] == b.coords[i]) {
        return Err(Error::DegenerateBridge(i + 1));
    }
    let n = a.n();
    Ok((0..=n)
        .map(|j| {
            let mut coords = a.coords[..n - j].to_vec();
            coords.extend_from_slice(&b.coords[n - j..]);
            ColorVector { coords, c: a.c }
        })
        .collect())
}

/// Bridge hypergraph over `Z_c^n` with edges addressed by their position in
/// the lexicographic `(a, b)` order, without materializing them.
#[derive(Debug, Clone, Copy)]
pub struct BridgeSpace {
    n: usize,
    c: u8,
    per_a: u64,
}

impl BridgeSpace {
    pub fn new(n: usize, c: u8) -> Result<Self> {
        check_shape(n, c)?;
        let per_a = (c as u64 - 1).pow(n as u32);
        Ok(BridgeSpace { n, c, per_a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> u8 {
        self.c
    }

    pub fn vertex_count(&self) -> u64 {
        (self.c as u64).pow(self.n as u32)
    }

    /// `c^n (c-1)^n`.
    pub fn edge_count(&self) -> u64 {
        self.vertex_count() * self.per_a
    }

    /// Endpoint coordinates of edge `i`. The second endpoint's digits run
    /// over `0..c-1` per coordinate, skipping `a_i`, which keeps `b` in
    /// increasing order for a fixed `a`.
    fn endpoints(&self, i: u64, a: &mut [u8], b: &mut [u8]) {
        let c = self.c as u64;
        let (mut ai, mut bi) = (i / self.per_a, i % self.per_a);
        for pos in (0..self.n).rev() {
            a[pos] = (ai % c) as u8;
            ai /= c;
            let d = (bi % (c - 1)) as u8;
            bi /= c - 1;
            b[pos] = if d < a[pos] { d } else { d + 1 };
        }
    }

    /// Vertex indices of the members of edge `i`, written into `out`
    /// (length `n + 1`).
    fn member_indices(&self, i: u64, a: &mut [u8], b: &mut [u8], out: &mut [u32]) {
        self.endpoints(i, a, b);
        let n = self.n;
        let c = self.c as u32;
        for (j, slot) in out.iter_mut().enumerate() {
            *slot = (0..n).fold(0u32, |acc, pos| {
                let x = if pos < n - j { a[pos] } else { b[pos] };
                acc * c + x as u32
            });
        }
    }

    pub fn bridge(&self, i: u64) -> Bridge {
        let mut a = vec![0u8; self.n];
        let mut b = vec![0u8; self.n];
        self.endpoints(i, &mut a, &mut b);
        Bridge::new(
            ColorVector {
                coords: a,
                c: self.c,
            },
            ColorVector {
                coords: b,
                c: self.c,
            },
        )
        .expect("endpoints disagree everywhere by construction")
    }

    /// Every edge as a list of 1-based CNF variables.
    pub fn edge_variables(&self) -> Vec<Vec<u32>> {
        let mut a = vec![0u8; self.n];
        let mut b = vec![0u8; self.n];
        let mut idx = vec![0u32; self.n + 1];
        (0..self.edge_count())
            .map(|i| {
                self.member_indices(i, &mut a, &mut b, &mut idx);
                idx.iter().map(|&x| x + 1).collect()
            })
            .collect()
    }
}

/// All bridges, lexicographic in `(a, b)`. Both orientations of an endpoint
/// pair are listed.
pub fn enumerate_bridges(n: usize, c: u8) -> Result<Vec<Bridge>> {
    let space = BridgeSpace::new(n, c)?;
    Ok((0..space.edge_count()).map(|i| space.bridge(i)).collect())
}

/// If the set `s` is the member set of some bridge, its endpoints.
pub fn is_bridge_set(s: &[ColorVector]) -> Option<(ColorVector, ColorVector)> {
    let first = s.first()?;
    if s.iter().any(|v| v.n() != first.n() || v.c != first.c) {
        return None;
    }
    let mut set: Vec<&ColorVector> = s.iter().collect();
    set.sort();
    set.dedup();
    if set.len() != first.n() + 1 {
        return None;
    }
    for a in &set {
        for b in &set {
            let Ok(members) = bridge_members(a, b) else {
                continue;
            };
            let mut m: Vec<&ColorVector> = members.iter().collect();
            m.sort();
            if m == set {
                return Some(((*a).clone(), (*b).clone()));
            }
        }
    }
    None
}

/// A total 2-coloring of `Z_c^n` with colors `{1, 2}`, stored by vector index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorColoring {
    n: usize,
    c: u8,
    colors: Vec<u8>,
}

impl VectorColoring {
    pub fn new(n: usize, c: u8, colors: Vec<u8>) -> Result<Self> {
        check_shape(n, c)?;
        let expected = vertex_count(n, c).expect("checked");
        if colors.len() as u64 != expected {
            return Err(Error::param(format!(
                "coloring covers {} of {expected} vectors",
                colors.len()
            )));
        }
        if let Some(x) = colors.iter().find(|&&x| x != 1 && x != 2) {
            return Err(Error::param(format!("color {x} not in {{1, 2}}")));
        }
        Ok(VectorColoring { n, c, colors })
    }

    pub fn from_fn(n: usize, c: u8, f: impl Fn(&ColorVector) -> u8) -> Result<Self> {
        check_shape(n, c)?;
        let total = vertex_count(n, c).expect("checked") as u32;
        let colors = (0..total)
            .map(|i| f(&ColorVector::from_index(i, n, c).expect("in range")))
            .collect();
        VectorColoring::new(n, c, colors)
    }

    /// Builds from explicit `(vector, color)` pairs; every vector must be
    /// assigned exactly once.
    pub fn from_pairs(
        n: usize,
        c: u8,
        pairs: impl IntoIterator<Item = (ColorVector, u8)>,
    ) -> Result<Self> {
        check_shape(n, c)?;
        let total = vertex_count(n, c).expect("checked") as usize;
        let mut colors = vec![0u8; total];
        for (v, color) in pairs {
            if v.n() != n || v.c != c {
                return Err(Error::param(format!("{v:?} is not in Z_{c}^{n}")));
            }
            let slot = &mut colors[v.index() as usize];
            if *slot != 0 {
                return Err(Error::param(format!("{v:?} colored twice")));
            }
            *slot = color;
        }
        if let Some(i) = colors.iter().position(|&x| x == 0) {
            let v = ColorVector::from_index(i as u32, n, c).expect("in range");
            return Err(Error::param(format!(
                "partial coloring: {v:?} has no color"
            )));
        }
        VectorColoring::new(n, c, colors)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> u8 {
        self.c
    }

    pub fn color(&self, v: &ColorVector) -> u8 {
        self.colors[v.index() as usize]
    }

    pub fn color_at(&self, index: u32) -> u8 {
        self.colors[index as usize]
    }

    /// `(vector, color)` in index order.
    pub fn iter(&self) -> impl Iterator<Item = (ColorVector, u8)> + '_ {
        self.colors.iter().enumerate().map(|(i, &col)| {
            (
                ColorVector::from_index(i as u32, self.n, self.c).expect("in range"),
                col,
            )
        })
    }
}

/// The explicit coloring of `Z_3^4`: 1 when `v1+v2+v3+v4 = 0` or
/// `v1+v3 = 0` (mod 3), else 2.
pub fn chi_key(v: &ColorVector) -> Result<u8> {
    if v.n() != 4 || v.c != 3 {
        return Err(Error::param(format!(
            "key coloring is defined on Z_3^4, got Z_{}^{}",
            v.c,
            v.n()
        )));
    }
    let x = v.coords();
    let total = x.iter().map(|&t| t as u32).sum::<u32>() % 3;
    let odd = (x[0] as u32 + x[2] as u32) % 3;
    Ok(if total == 0 || odd == 0 { 1 } else { 2 })
}

pub fn chi_key_coloring() -> VectorColoring {
    VectorColoring::from_fn(4, 3, |v| chi_key(v).expect("shape is Z_3^4")).expect("total")
}

/// First monochromatic bridge in enumeration order, scanning with `workers`
/// threads. The witness does not depend on `workers`.
pub fn has_mono_bridge(coloring: &VectorColoring, workers: usize) -> Option<Bridge> {
    let space = BridgeSpace::new(coloring.n, coloring.c).expect("validated at construction");
    let n = space.n;
    let hit = par::first_hit(space.edge_count(), workers, |range| {
        let mut a = vec![0u8; n];
        let mut b = vec![0u8; n];
        let mut idx = vec![0u32; n + 1];
        for i in range {
            space.member_indices(i, &mut a, &mut b, &mut idx);
            let first = coloring.colors[idx[0] as usize];
            if idx[1..]
                .iter()
                .all(|&m| coloring.colors[m as usize] == first)
            {
                return Some((i, ()));
            }
        }
        None
    });
    hit.map(|(i, ())| space.bridge(i))
}

/// The NAE encoding of the bridge hypergraph with the documented variable
/// numbering.
pub fn bridge_cnf(n: usize, c: u8) -> Result<Cnf> {
    let space = BridgeSpace::new(n, c)?;
    if space.vertex_count() > MAX_BRIDGE_VERTICES {
        return Err(Error::SizeLimit(format!(
            "{c}^{n} = {} vertices exceeds the encoder bound {MAX_BRIDGE_VERTICES}",
            space.vertex_count()
        )));
    }
    sat::encode_nae2(&space.edge_variables(), space.vertex_count() as u32)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Colorability {
    /// A proper 2-coloring, already re-checked for monochromatic bridges.
    Colorable(VectorColoring),
    NotColorable,
}

impl Colorability {
    pub fn is_colorable(&self) -> bool {
        matches!(self, Colorability::Colorable(_))
    }
}

/// Decides 2-colorability of the bridge hypergraph with the embedded solver,
/// adding symmetry-breaking clauses. True variables become color 1.
pub fn bridge_2colorable(n: usize, c: u8) -> Result<Colorability> {
    bridge_2colorable_with(n, c, true)
}

/// As [`bridge_2colorable`]; `symmetry_breaking = false` solves the plain
/// encoding of [`bridge_cnf`].
pub fn bridge_2colorable_with(n: usize, c: u8, symmetry_breaking: bool) -> Result<Colorability> {
    let mut cnf = bridge_cnf(n, c)?;
    if symmetry_breaking {
        let (vars, extra) = symmetry_breaking_clauses(n, c);
        let mut clauses = cnf.clauses().to_vec();
        clauses.extend(extra);
        cnf = Cnf::new(vars, clauses)?;
    }
    match sat::solve(&cnf)? {
        SolveResult::Unsat => Ok(Colorability::NotColorable),
        SolveResult::Sat(assignment) => {
            let vertices = (c as usize).pow(n as u32);
            let coloring = decode_assignment(n, c, &assignment[..vertices])?;
            if let Some(b) = has_mono_bridge(&coloring, 1) {
                return Err(Error::Internal(format!(
                    "decoded bridge coloring has monochromatic {b:?}"
                )));
            }
            Ok(Colorability::Colorable(coloring))
        }
    }
}

/// Lex-leader constraints for the symmetries of the bridge hypergraph: the
/// color swap, and the transposition of adjacent symbols in each coordinate.
/// Variables are ordered by index with false before true. Returns the total
/// variable count (auxiliaries follow the `c^n` vertex variables) and the
/// clauses.
///
/// Both kinds of map send bridges to bridges and preserve NAE-satisfaction,
/// so every orbit keeps its lexicographically least member and
/// satisfiability is unchanged.
pub fn symmetry_breaking_clauses(n: usize, c: u8) -> (u32, Vec<Vec<i32>>) {
    let vertices = (c as u32).pow(n as u32);
    let mut next = vertices;
    let mut clauses = vec![vec![-1]];
    let weight = |pos: usize| (c as u32).pow((n - 1 - pos) as u32);
    for pos in 0..n {
        let w = weight(pos);
        for s in 0..c - 1 {
            let pairs: Vec<(i32, i32)> = (0..vertices)
                .filter_map(|v| {
                    let digit = (v / w) % c as u32;
                    let image = match digit {
                        d if d == s as u32 => v + w,
                        d if d == s as u32 + 1 => v - w,
                        _ => return None,
                    };
                    Some((v as i32 + 1, image as i32 + 1))
                })
                .collect();
            let mut equal_so_far: Option<i32> = None;
            for (j, &(x, y)) in pairs.iter().enumerate() {
                let mut guard: Vec<i32> = equal_so_far.map(|e| vec![-e]).unwrap_or_default();
                clauses.push([guard.as_slice(), &[-x, y]].concat());
                if j + 1 == pairs.len() {
                    break;
                }
                next += 1;
                let e = next as i32;
                clauses.push([guard.as_slice(), &[x, y, e]].concat());
                guard.extend([-x, -y, e]);
                clauses.push(guard);
                equal_so_far = Some(e);
            }
        }
    }
    (next, clauses)
}

pub(crate) fn decode_assignment(n: usize, c: u8, assignment: &[bool]) -> Result<VectorColoring> {
    VectorColoring::new(
        n,
        c,
        assignment.iter().map(|&t| if t { 1 } else { 2 }).collect(),
    )
}

/// Outcome of [`minimal_bridgeable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalScan {
    /// Least n found 2-colorable.
    pub found: Option<usize>,
    /// Each decided n with its colorability, in increasing order.
    pub decided: Vec<(usize, bool)>,
    /// First n that was refused by the size bound, if the scan stopped early.
    pub stopped_at: Option<usize>,
}

/// Least `n` in `[2, n_max]` whose bridge hypergraph over `Z_c^n` is
/// 2-colorable.
pub fn minimal_bridgeable(c: u8, n_max: usize) -> Result<MinimalScan> {
    if c < 2 {
        return Err(Error::param("alphabet size must be at least 2"));
    }
    let mut scan = MinimalScan {
        found: None,
        decided: Vec::new(),
        stopped_at: None,
    };
    for n in 2..=n_max {
        match bridge_2colorable(n, c) {
            Ok(result) => {
                let ok = result.is_colorable();
                scan.decided.push((n, ok));
                if ok {
                    scan.found = Some(n);
                    break;
                }
            }
            Err(Error::SizeLimit(_)) => {
                scan.stopped_at = Some(n);
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

    fn cv(coords: &[u8], c: u8) -> ColorVector {
        ColorVector::new(coords.to_vec(), c).unwrap()
    }

    #[test]
    fn chain_members() {
        let m = bridge_members(&cv(&[0, 0], 2), &cv(&[1, 1], 2)).unwrap();
        assert_eq!(m, vec![cv(&[0, 0], 2), cv(&[0, 1], 2), cv(&[1, 1], 2)]);

        let m = bridge_members(&cv(&[1, 1, 1, 1], 3), &cv(&[2, 2, 2, 2], 3)).unwrap();
        let expected = [
            [1, 1, 1, 1],
            [1, 1, 1, 2],
            [1, 1, 2, 2],
            [1, 2, 2, 2],
            [2, 2, 2, 2],
        ];
        assert_eq!(m, expected.iter().map(|e| cv(e, 3)).collect::<Vec<_>>());

        let m = bridge_members(&cv(&[0, 1, 2], 3), &cv(&[1, 2, 0], 3)).unwrap();
        let expected = [[0, 1, 2], [0, 1, 0], [0, 2, 0], [1, 2, 0]];
        assert_eq!(m, expected.iter().map(|e| cv(e, 3)).collect::<Vec<_>>());

        assert_eq!(
            bridge_members(&cv(&[0, 1], 3), &cv(&[1, 1], 3)),
            Err(Error::DegenerateBridge(2))
        );
    }

    #[test]
    fn bridge_counts() {
        assert_eq!(enumerate_bridges(2, 2).unwrap().len(), 4);
        assert_eq!(BridgeSpace::new(4, 3).unwrap().edge_count(), 1296);
        assert_eq!(BridgeSpace::new(4, 4).unwrap().edge_count(), 20736);
        let all = enumerate_bridges(4, 3).unwrap();
        assert_eq!(all.len(), 3usize.pow(4) * 2usize.pow(4));
        // lexicographic in (a, b)
        for w in all.windows(2) {
            assert!((w[0].a(), w[0].b()) < (w[1].a(), w[1].b()));
        }
        assert!(enumerate_bridges(1, 3).is_err());
    }

    #[test]
    fn enumeration_matches_a_direct_double_loop() {
        for (n, c) in [(2usize, 3u8), (3, 3), (3, 4), (2, 5)] {
            let total = (c as u32).pow(n as u32);
            let mut direct = Vec::new();
            for ai in 0..total {
                for bi in 0..total {
                    let a = ColorVector::from_index(ai, n, c).unwrap();
                    let b = ColorVector::from_index(bi, n, c).unwrap();
                    if let Ok(br) = Bridge::new(a, b) {
                        direct.push(br);
                    }
                }
            }
            assert_eq!(enumerate_bridges(n, c).unwrap(), direct);
        }
    }

    #[test]
    fn bridge_set_recognition() {
        let s = [cv(&[0, 0], 2), cv(&[0, 1], 2), cv(&[1, 1], 2)];
        assert_eq!(is_bridge_set(&s), Some((cv(&[0, 0], 2), cv(&[1, 1], 2))));
        assert_eq!(is_bridge_set(&[cv(&[0, 0], 2), cv(&[1, 1], 2)]), None);
        assert_eq!(is_bridge_set(&[]), None);
        for br in enumerate_bridges(4, 3).unwrap() {
            let mut shuffled = br.members().to_vec();
            shuffled.reverse();
            assert_eq!(
                is_bridge_set(&shuffled),
                Some((br.a().clone(), br.b().clone()))
            );
        }
    }

    #[test]
    fn key_coloring_values() {
        assert_eq!(chi_key(&cv(&[0, 0, 0, 0], 3)).unwrap(), 1);
        assert_eq!(chi_key(&cv(&[1, 2, 0, 1], 3)).unwrap(), 2);
        assert_eq!(chi_key(&cv(&[2, 0, 1, 0], 3)).unwrap(), 1);
        assert!(chi_key(&cv(&[0, 0, 0], 3)).is_err());
        assert!(chi_key(&cv(&[0, 0, 0, 0], 4)).is_err());
    }

    #[test]
    fn key_coloring_has_no_mono_bridge() {
        let chi = chi_key_coloring();
        assert_eq!(has_mono_bridge(&chi, 1), None);
        assert_eq!(has_mono_bridge(&chi, 4), None);
    }

    #[test]
    fn mono_bridge_witnesses() {
        let constant = VectorColoring::from_fn(2, 3, |_| 1).unwrap();
        let first = enumerate_bridges(2, 3).unwrap().remove(0);
        assert_eq!(has_mono_bridge(&constant, 1), Some(first.clone()));
        assert_eq!(has_mono_bridge(&constant, 3), Some(first));

        let by_first =
            VectorColoring::from_fn(2, 3, |v| if v.coords()[0] == 0 { 1 } else { 2 }).unwrap();
        let w = has_mono_bridge(&by_first, 1).expect("witness");
        let colors: Vec<u8> = w.members().iter().map(|m| by_first.color(m)).collect();
        assert!(colors.iter().all(|&x| x == colors[0]));
        assert_eq!(has_mono_bridge(&by_first, 4), Some(w));
    }

    #[test]
    fn partial_colorings_are_rejected() {
        let pairs = vec![(cv(&[0, 0], 2), 1), (cv(&[0, 1], 2), 2)];
        assert!(VectorColoring::from_pairs(2, 2, pairs).is_err());
        assert!(VectorColoring::new(2, 2, vec![1, 2, 1]).is_err());
        assert!(VectorColoring::new(2, 2, vec![1, 2, 1, 3]).is_err());
    }

    #[test]
    fn small_colorability_facts() {
        assert_eq!(bridge_2colorable(2, 3).unwrap(), Colorability::NotColorable);
        assert_eq!(bridge_2colorable(3, 3).unwrap(), Colorability::NotColorable);
        // Over a binary alphabet the four 2-bridges of Z_2^2 are already
        // broken by 00, 01 -> 1 and 10, 11 -> 2.
        let scan = minimal_bridgeable(2, 3).unwrap();
        assert_eq!(scan.found, Some(2));
        let by_hand = VectorColoring::new(2, 2, vec![1, 1, 2, 2]).unwrap();
        assert_eq!(has_mono_bridge(&by_hand, 1), None);
        let cnf = bridge_cnf(2, 2).unwrap();
        assert!(sat::exhaustive_check(&cnf).unwrap().is_sat());
        assert!(matches!(bridge_cnf(7, 3), Err(Error::SizeLimit(_))));
        let scan = minimal_bridgeable(3, 8).unwrap();
        assert_eq!(scan.found, Some(4));
    }

    #[test]
    fn symmetry_breaking_preserves_the_answer() {
        for (n, c) in [
            (2, 2),
            (3, 2),
            (2, 3),
            (3, 3),
            (4, 3),
            (2, 4),
            (3, 4),
            (2, 5),
        ] {
            let plain = bridge_2colorable_with(n, c, false).unwrap();
            let reduced = bridge_2colorable_with(n, c, true).unwrap();
            assert_eq!(plain.is_colorable(), reduced.is_colorable(), "n={n} c={c}");
        }
    }

    #[test]
    fn symmetry_clauses_shape() {
        // Z_2^2: one transposition per coordinate, four moved vertices each.
        let (vars, clauses) = symmetry_breaking_clauses(2, 2);
        assert_eq!(vars, 4 + 2 * 3);
        assert_eq!(clauses[0], vec![-1]);
        assert_eq!(clauses[1], vec![-1, 3]);
        assert_eq!(clauses.len(), 1 + 2 * (1 + 3 * 3));
        // The lexicographically least proper coloring survives.
        let cnf = bridge_cnf(2, 2).unwrap();
        let mut all = cnf.clauses().to_vec();
        all.extend(clauses);
        let with_sb = Cnf::new(vars, all).unwrap();
        assert!(sat::solve_dpll(&with_sb).unwrap().is_sat());
    }

    #[test]
    fn variable_numbering_is_positional() {
        assert_eq!(cv(&[0, 0, 0, 0], 3).variable(), 1);
        assert_eq!(cv(&[0, 0, 0, 1], 3).variable(), 2);
        assert_eq!(cv(&[1, 0, 0, 0], 3).variable(), 28);
        assert_eq!(cv(&[2, 2, 2, 2], 3).variable(), 81);
        for i in 0..81 {
            assert_eq!(ColorVector::from_index(i, 4, 3).unwrap().index(), i);
        }
    }
}
