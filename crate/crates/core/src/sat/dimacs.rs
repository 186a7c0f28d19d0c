//! DIMACS CNF text: a `p cnf V C` header, then one clause per line with
//! space-separated literals and a trailing ` 0`.

use std::fmt::Write as _;

use super::cnf::{Cnf, Lit};
use crate::error::{Error, Result};

/// Serializes `cnf` in its canonical clause order. Output is byte-stable.
pub fn write_dimacs(cnf: &Cnf) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p cnf {} {}", cnf.variable_count(), cnf.clause_count());
    for clause in cnf.clauses() {
        for l in clause {
            let _ = write!(out, "{l} ");
        }
        out.push_str("0\n");
    }
    out
}

/// Parses DIMACS text. Comment lines start with `c`; a clause may span
/// lines. The result is canonicalized.
pub fn read_dimacs(text: &str) -> Result<Cnf> {
    let mut header: Option<(u32, usize, usize)> = None;
    let mut clauses: Vec<Vec<Lit>> = Vec::new();
    let mut pending: Vec<Lit> = Vec::new();
    let mut last_line = 0;

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(lineno, "duplicate problem line"));
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(Error::parse(lineno, "expected `p cnf <vars> <clauses>`"));
            }
            let vars: u32 = fields[2]
                .parse()
                .map_err(|_| Error::parse(lineno, "bad variable count"))?;
            let count: usize = fields[3]
                .parse()
                .map_err(|_| Error::parse(lineno, "bad clause count"))?;
            header = Some((vars, count, lineno));
            continue;
        }
        let Some((vars, _, _)) = header else {
            return Err(Error::parse(lineno, "clause before the problem line"));
        };
        for tok in trimmed.split_whitespace() {
            let l: Lit = tok
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad literal {tok:?}")))?;
            if l == 0 {
                clauses.push(std::mem::take(&mut pending));
            } else if l.unsigned_abs() > vars {
                return Err(Error::parse(
                    lineno,
                    format!("literal {l} exceeds the declared {vars} variables"),
                ));
            } else {
                pending.push(l);
            }
        }
    }

    let Some((vars, count, header_line)) = header else {
        return Err(Error::parse(last_line.max(1), "missing problem line"));
    };
    if !pending.is_empty() {
        return Err(Error::parse(
            last_line,
            "last clause is not terminated by 0",
        ));
    }
    if clauses.len() != count {
        return Err(Error::parse(
            header_line,
            format!("header declares {count} clauses, found {}", clauses.len()),
        ));
    }
    Cnf::new(vars, clauses)
}
