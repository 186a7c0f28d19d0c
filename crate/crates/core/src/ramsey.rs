//! The composite coloring `psi . lambda` of the k-subsets of `[N]` and its
//! verifiers.
//!
//! A k-set X is cut into `parts` consecutive segments of size `l = k/parts`;
//! `lambda(X)` is the vector of `phi` colors of the segments, where `phi` is
//! a proper coloring of `Sh(N, l)`. `psi` then 2-colors that vector. When
//! `psi` has no monochromatic bridge, no (k+1)-set is monochromatic.

use crate::bridge::{ColorVector, VectorColoring};
use crate::error::{Error, Result};
use crate::kset::{binomial, rank_slice, segments, KSet, SubsetCursor};
use crate::par;
use crate::shift::ProperColoring;
use crate::verdict::Scan;

/// Largest number of k-sets [`build_coloring`] will materialize.
pub const MAX_RAMSEY_SETS: u64 = 5_000_000;

/// `lambda(X)` with segment colors supplied by `value`; `None` from `value`
/// is reported as a parameter error.
pub fn lambda_with(
    x: &KSet,
    parts: usize,
    c: u8,
    value: impl Fn(&KSet) -> Option<u8>,
) -> Result<ColorVector> {
    let coords = segments(x, parts)?
        .iter()
        .map(|seg| value(seg).ok_or_else(|| Error::param(format!("no color for segment {seg}"))))
        .collect::<Result<Vec<u8>>>()?;
    ColorVector::new(coords, c)
}

/// The vector of `phi` colors on the `parts` consecutive segments of `x`.
pub fn lambda_map(x: &KSet, phi: &ProperColoring, parts: usize) -> Result<ColorVector> {
    let c = u8::try_from(phi.c()).map_err(|_| Error::param("phi uses more than 255 colors"))?;
    lambda_with(x, parts, c, |seg| phi.color(seg).ok())
}

fn check_special_shape(y: &KSet, l: usize, parts: usize) -> Result<()> {
    if l == 0 || parts == 0 {
        return Err(Error::param(
            "segment length and part count must be positive",
        ));
    }
    if y.arity() != parts * l + 1 {
        return Err(Error::param(format!(
            "expected a set of size {}, got {}",
            parts * l + 1,
            y.arity()
        )));
    }
    Ok(())
}

/// `Z_j = Y \ {y_{jl+1}}` for `j = 0..=parts`, where `|Y| = parts*l + 1`.
pub fn special_subsets_n(y: &KSet, l: usize, parts: usize) -> Result<Vec<KSet>> {
    check_special_shape(y, l, parts)?;
    Ok((0..=parts).map(|j| y.without_position(j * l)).collect())
}

/// The five special subsets `Z_0..Z_4` of a `(4l+1)`-set.
pub fn special_subsets(y: &KSet, l: usize) -> Result<Vec<KSet>> {
    special_subsets_n(y, l, 4)
}

/// Blocks `A_j = {y_{jl+2}, .., y_{(j+1)l+1}}` and
/// `B_j = {y_{jl+1}, .., y_{(j+1)l}}`. `Z_i` is `B_0 .. B_{i-1}` followed by
/// `A_i .. A_{parts-1}`, and each `B_j -> A_j` is a shift edge.
pub fn blocks_n(y: &KSet, l: usize, parts: usize) -> Result<(Vec<KSet>, Vec<KSet>)> {
    check_special_shape(y, l, parts)?;
    let e = y.elements();
    let block = |from: usize| KSet::from_sorted_unchecked(e[from..from + l].to_vec());
    let a = (0..parts).map(|j| block(j * l + 1)).collect();
    let b = (0..parts).map(|j| block(j * l)).collect();
    Ok((a, b))
}

pub fn blocks(y: &KSet, l: usize) -> Result<(Vec<KSet>, Vec<KSet>)> {
    blocks_n(y, l, 4)
}

/// `lambda(Z_0) .. lambda(Z_parts)` when block `A_j` has value `values[j].0`
/// and `B_j` has `values[j].1`. Each segment of `Z_i` is checked against the
/// block it must equal (`B_j` for `j < i`, else `A_j`).
pub fn block_lambdas(y: &KSet, l: usize, c: u8, values: &[(u8, u8)]) -> Result<Vec<ColorVector>> {
    let parts = values.len();
    let (a, b) = blocks_n(y, l, parts)?;
    special_subsets_n(y, l, parts)?
        .iter()
        .enumerate()
        .map(|(i, z)| {
            let segs = segments(z, parts)?;
            let coords = segs
                .iter()
                .enumerate()
                .map(|(j, seg)| {
                    let (block, v) = if j < i {
                        (&b[j], values[j].1)
                    } else {
                        (&a[j], values[j].0)
                    };
                    if seg != block {
                        return Err(Error::Internal(format!(
                            "segment {j} of Z_{i} is {seg}, expected {block}"
                        )));
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<u8>>>()?;
            ColorVector::new(coords, c)
        })
        .collect()
}

/// A 2-coloring of the k-subsets of `[N]`, colors `{1, 2}` by lexicographic
/// rank. Built by [`build_coloring`] it remembers `phi` and `psi`; loaded
/// from a file it carries only the colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyColoring {
    n: u32,
    k: u32,
    parts: usize,
    source: Option<Box<(ProperColoring, VectorColoring)>>,
    colors: Vec<u8>,
}

impl RamseyColoring {
    /// A coloring given by its colors alone. `parts` must divide `k`; it
    /// fixes which special subsets the verifier inspects.
    pub fn from_colors(n: u32, k: u32, parts: usize, colors: Vec<u8>) -> Result<Self> {
        if parts == 0 || !(k as usize).is_multiple_of(parts) {
            return Err(Error::param(format!("{parts} parts do not divide k = {k}")));
        }
        SubsetCursor::new(n, k)?;
        if colors.len() as u64 != binomial(n, k) {
            return Err(Error::param(format!(
                "{} colors given for {} sets",
                colors.len(),
                binomial(n, k)
            )));
        }
        if let Some(x) = colors.iter().find(|&&x| x != 1 && x != 2) {
            return Err(Error::param(format!("color {x} not in {{1, 2}}")));
        }
        Ok(RamseyColoring {
            n,
            k,
            parts,
            source: None,
            colors,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn parts(&self) -> usize {
        self.parts
    }

    pub fn phi(&self) -> Option<&ProperColoring> {
        self.source.as_ref().map(|s| &s.0)
    }

    pub fn psi(&self) -> Option<&VectorColoring> {
        self.source.as_ref().map(|s| &s.1)
    }

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

    #[inline]
    fn color_of(&self, x: &[u32]) -> u8 {
        self.colors[rank_slice(x, self.n) as usize]
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
}

/// Materializes `psi . lambda` on every k-subset of `[n]`.
pub fn build_coloring(
    n: u32,
    k: u32,
    phi: &ProperColoring,
    psi: &VectorColoring,
    parts: usize,
) -> Result<RamseyColoring> {
    if parts < 2 {
        return Err(Error::param("at least two parts are needed"));
    }
    if k == 0 || !(k as usize).is_multiple_of(parts) {
        return Err(Error::param(format!("{parts} parts do not divide k = {k}")));
    }
    let l = k / parts as u32;
    if l == 1 && n > 3 {
        return Err(Error::param(format!(
            "segments of size 1 need a proper 3-coloring of Sh({n},1) = K_{n}, which does not exist"
        )));
    }
    if phi.n() != n || phi.k() != l {
        return Err(Error::param(format!(
            "phi colors Sh({},{}) but Sh({n},{l}) is needed",
            phi.n(),
            phi.k()
        )));
    }
    if psi.n() != parts || psi.c() as u32 != phi.c() {
        return Err(Error::param(format!(
            "psi colors Z_{}^{} but Z_{}^{parts} is needed",
            psi.c(),
            psi.n(),
            phi.c()
        )));
    }
    SubsetCursor::new(n, k)?;
    let total = binomial(n, k);
    if total > MAX_RAMSEY_SETS {
        return Err(Error::SizeLimit(format!(
            "C({n},{k}) = {total} sets exceeds {MAX_RAMSEY_SETS}"
        )));
    }
    let c = phi.c() as u64;
    let l = l as usize;
    let mut cursor = SubsetCursor::new(n, k)?;
    let mut colors = Vec::with_capacity(total as usize);
    while let Some(x) = cursor.advance() {
        let index = x
            .chunks(l)
            .fold(0u64, |acc, seg| acc * c + phi.color_of(seg) as u64);
        colors.push(psi.color_at(index as u32));
    }
    Ok(RamseyColoring {
        n,
        k,
        parts,
        source: Some(Box::new((phi.clone(), psi.clone()))),
        colors,
    })
}

/// First q-subset of `[N]` whose k-subsets all share a color. Vacuous when
/// `q > N`.
pub fn verify_no_mono_clique(rc: &RamseyColoring, q: u32, workers: usize) -> Result<Scan<KSet>> {
    let k = rc.k;
    if q <= k {
        return Err(Error::param(format!("clique size {q} must exceed k = {k}")));
    }
    if q > rc.n {
        return Ok(Scan {
            witness: None,
            scanned: 0,
        });
    }
    let total = binomial(rc.n, q);
    let hit = par::first_hit(total, workers, |range| {
        let mut cursor = SubsetCursor::starting_at(rc.n, q, range.start).ok()?;
        let mut sub = vec![0u32; k as usize];
        for r in range {
            let y = cursor.advance().expect("rank in range");
            let mut inner = SubsetCursor::new(q, k).expect("k < q");
            let mut first = None;
            let mut mono = true;
            while let Some(pos) = inner.advance() {
                for (slot, &p) in sub.iter_mut().zip(pos) {
                    *slot = y[p as usize - 1];
                }
                let col = rc.color_of(&sub);
                match first {
                    None => first = Some(col),
                    Some(f) if f != col => {
                        mono = false;
                        break;
                    }
                    _ => {}
                }
            }
            if mono {
                return Some((r, y.to_vec()));
            }
        }
        None
    });
    Ok(Scan {
        witness: hit.map(|(_, y)| KSet::from_sorted_unchecked(y)),
        scanned: total,
    })
}

/// A (k+1)-set whose special subsets all received one color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialWitness {
    pub superset: KSet,
    pub colors: Vec<u8>,
}

/// For every (k+1)-set Y, checks that the `parts + 1` special subsets of Y
/// are not all the same color.
pub fn verify_special_subsets(rc: &RamseyColoring, workers: usize) -> Result<Scan<SpecialWitness>> {
    let k = rc.k;
    if k + 1 > rc.n {
        return Ok(Scan {
            witness: None,
            scanned: 0,
        });
    }
    let l = k as usize / rc.parts;
    let total = binomial(rc.n, k + 1);
    let hit = par::first_hit(total, workers, |range| {
        let mut cursor = SubsetCursor::starting_at(rc.n, k + 1, range.start).ok()?;
        let mut z = vec![0u32; k as usize];
        for r in range {
            let y = cursor.advance().expect("rank in range");
            let colors: Vec<u8> = (0..=rc.parts)
                .map(|j| {
                    let skip = j * l;
                    z[..skip].copy_from_slice(&y[..skip]);
                    z[skip..].copy_from_slice(&y[skip + 1..]);
                    rc.color_of(&z)
                })
                .collect();
            if colors.iter().all(|&c| c == colors[0]) {
                return Some((
                    r,
                    SpecialWitness {
                        superset: KSet::from_sorted_unchecked(y.to_vec()),
                        colors,
                    },
                ));
            }
        }
        None
    });
    Ok(Scan {
        witness: hit.map(|(_, w)| w),
        scanned: total,
    })
}

/// [`verify_special_subsets`] for the four-part construction.
pub fn verify_special_five(rc: &RamseyColoring, workers: usize) -> Result<Scan<SpecialWitness>> {
    if rc.parts != 4 {
        return Err(Error::param(format!(
            "the five special subsets need 4 parts, coloring has {}",
            rc.parts
        )));
    }
    verify_special_subsets(rc, workers)
}
