//! Text formats for colorings. All are LF-terminated, one object per line
//! in lexicographic order, elements 1-based.
//!
//! ```text
//! shiftcoloring N k c      then "x1 .. xk color"   color in 0..c
//! ramseycoloring N k       then "x1 .. xk color"   color in {1, 2}
//! pathcoloring N k         then "x1 .. xk color"   1 = red, 2 = blue
//! v1 .. vn color           vector colorings, residues 0..c, color in {1, 2}
//! ```

use std::fmt::Write as _;

use crate::bridge::{ColorVector, VectorColoring};
use crate::error::{Error, Result};
use crate::kset::{binomial, SubsetCursor};
use crate::oracle::PairColoring;
use crate::paths::{PathColoring, Variant};
use crate::ramsey::RamseyColoring;
use crate::shift::ProperColoring;

fn write_sets(out: &mut String, n: u32, k: u32, colors: &[u8]) {
    let mut cursor = SubsetCursor::new(n, k).expect("validated shape");
    for &col in colors {
        let set = cursor.advance().expect("one color per set");
        for x in set {
            write!(out, "{x} ").expect("write to string");
        }
        writeln!(out, "{col}").expect("write to string");
    }
}

pub fn write_shift_coloring(p: &ProperColoring) -> String {
    let mut out = format!("shiftcoloring {} {} {}\n", p.n(), p.k(), p.c());
    write_sets(&mut out, p.n(), p.k(), p.colors());
    out
}

pub fn write_ramsey_coloring(rc: &RamseyColoring) -> String {
    let mut out = format!("ramseycoloring {} {}\n", rc.n(), rc.k());
    write_sets(&mut out, rc.n(), rc.k(), rc.colors());
    out
}

/// A pair coloring from the oracle, in the Ramsey coloring format.
pub fn write_pair_coloring(p: &PairColoring) -> String {
    let colors: Vec<u8> = p.triples().iter().map(|t| t[2] as u8).collect();
    let mut out = format!("ramseycoloring {} 2\n", p.n);
    write_sets(&mut out, p.n, 2, &colors);
    out
}

pub fn write_path_coloring(pc: &PathColoring) -> String {
    let mut out = format!("pathcoloring {} {}\n", pc.n(), pc.k());
    write_sets(&mut out, pc.n(), pc.k(), pc.colors());
    out
}

pub fn write_vector_coloring(vc: &VectorColoring) -> String {
    let mut out = String::new();
    for (v, col) in vc.iter() {
        for x in v.coords() {
            write!(out, "{x} ").expect("write to string");
        }
        writeln!(out, "{col}").expect("write to string");
    }
    out
}

fn parse_u32(tok: &str, line: usize, what: &str) -> Result<u32> {
    tok.parse().map_err(|_| {
        Error::parse(
            line,
            format!("{what} {tok:?} is not a non-negative integer"),
        )
    })
}

/// Non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Parses a header `token a b ..` with `arity` numbers, then one line per
/// k-set in lexicographic order. Returns the header numbers and colors.
fn read_sets(text: &str, token: &str, arity: usize) -> Result<(Vec<u32>, Vec<u8>)> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, format!("missing \"{token}\" header")))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.first() != Some(&token) || fields.len() != arity + 1 {
        return Err(Error::parse(
            hline,
            format!("expected header \"{token}\" with {arity} numbers"),
        ));
    }
    let nums = fields[1..]
        .iter()
        .map(|t| parse_u32(t, hline, "header field"))
        .collect::<Result<Vec<u32>>>()?;
    let (n, k) = (nums[0], nums[1]);
    let mut cursor = SubsetCursor::new(n, k).map_err(|e| Error::parse(hline, e.to_string()))?;
    let mut colors = Vec::with_capacity(binomial(n, k) as usize);
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != k as usize + 1 {
            return Err(Error::parse(
                lineno,
                format!("expected {k} elements and a color"),
            ));
        }
        let set = toks[..k as usize]
            .iter()
            .map(|t| parse_u32(t, lineno, "element"))
            .collect::<Result<Vec<u32>>>()?;
        let color = parse_u32(toks[k as usize], lineno, "color")?;
        let expected = cursor
            .advance()
            .ok_or_else(|| Error::parse(lineno, "more lines than subsets"))?;
        if set != expected {
            return Err(Error::parse(
                lineno,
                format!("expected set {expected:?} in lexicographic order, found {set:?}"),
            ));
        }
        let color = u8::try_from(color).map_err(|_| Error::parse(lineno, "color out of range"))?;
        colors.push(color);
    }
    if cursor.advance().is_some() {
        return Err(Error::parse(
            last_line,
            format!(
                "only {} of {} subsets colored",
                colors.len(),
                binomial(n, k)
            ),
        ));
    }
    Ok((nums, colors))
}

fn at_header(e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::parse(1, other.to_string()),
    }
}

/// Reads and re-verifies a proper coloring.
pub fn read_shift_coloring(text: &str) -> Result<ProperColoring> {
    let (h, colors) = read_sets(text, "shiftcoloring", 3)?;
    ProperColoring::new(h[0], h[1], h[2], colors).map_err(|e| match e {
        Error::NotProper(_) => e,
        other => at_header(other),
    })
}

pub fn read_ramsey_coloring(text: &str, parts: usize) -> Result<RamseyColoring> {
    let (h, colors) = read_sets(text, "ramseycoloring", 2)?;
    RamseyColoring::from_colors(h[0], h[1], parts, colors).map_err(at_header)
}

pub fn read_path_coloring(text: &str, variant: Variant) -> Result<PathColoring> {
    let (h, colors) = read_sets(text, "pathcoloring", 2)?;
    PathColoring::from_colors(variant, h[0], h[1], colors).map_err(at_header)
}

/// Reads "v1 .. vn color" lines covering all of `Z_c^n` exactly once.
pub fn read_vector_coloring(text: &str, n: usize, c: u8) -> Result<VectorColoring> {
    let mut pairs = Vec::new();
    let mut last = 1;
    for (lineno, line) in content_lines(text) {
        last = lineno;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != n + 1 {
            return Err(Error::parse(
                lineno,
                format!("expected {n} coordinates and a color"),
            ));
        }
        let coords = toks[..n]
            .iter()
            .map(|t| {
                let x = parse_u32(t, lineno, "coordinate")?;
                u8::try_from(x)
                    .ok()
                    .filter(|&x| x < c)
                    .ok_or_else(|| Error::parse(lineno, format!("coordinate {x} not below {c}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        let color = parse_u32(toks[n], lineno, "color")?;
        if color != 1 && color != 2 {
            return Err(Error::parse(
                lineno,
                format!("color {color} not in {{1, 2}}"),
            ));
        }
        let v = ColorVector::new(coords, c).map_err(|e| Error::parse(lineno, e.to_string()))?;
        pairs.push((v, color as u8));
    }
    VectorColoring::from_pairs(n, c, pairs).map_err(|e| Error::parse(last, e.to_string()))
}
