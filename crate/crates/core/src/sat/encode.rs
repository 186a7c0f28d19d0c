use super::cnf::{Cnf, Lit};
use crate::error::{Error, Result};

/// Not-all-equal encoding of hypergraph 2-coloring: per edge one all-positive
/// and one all-negative clause. Variable true means color 1.
pub fn encode_nae2(edges: &[Vec<u32>], variable_count: u32) -> Result<Cnf> {
    let mut clauses = Vec::with_capacity(edges.len() * 2);
    for (i, edge) in edges.iter().enumerate() {
        if edge.len() < 2 {
            return Err(Error::param(format!("edge {i} has fewer than 2 vertices")));
        }
        if let Some(&v) = edge.iter().find(|&&v| v == 0 || v > variable_count) {
            return Err(Error::param(format!(
                "edge {i}: vertex {v} outside [1, {variable_count}]"
            )));
        }
        clauses.push(edge.iter().map(|&v| v as Lit).collect());
        clauses.push(edge.iter().map(|&v| -(v as Lit)).collect());
    }
    Cnf::new(variable_count, clauses)
}

/// Variable of "vertex `v` (1-based) takes color `j` (0-based)".
#[inline]
pub fn color_var(v: u32, j: u32, c: u32) -> u32 {
    1 + (v - 1) * c + j
}

/// Proper c-coloring of a graph: at-least-one and pairwise at-most-one color
/// per vertex, and for every edge and color, not both endpoints.
pub fn encode_graph_kcolor(edges: &[(u32, u32)], vertex_count: u32, c: u32) -> Result<Cnf> {
    if c < 1 {
        return Err(Error::param("need at least one color"));
    }
    let vars = vertex_count
        .checked_mul(c)
        .filter(|&v| v <= i32::MAX as u32)
        .ok_or_else(|| Error::SizeLimit("too many coloring variables".into()))?;
    let var = |v: u32, j: u32| color_var(v, j, c) as Lit;
    let mut clauses = Vec::new();
    for v in 1..=vertex_count {
        clauses.push((0..c).map(|j| var(v, j)).collect());
        for i in 0..c {
            for j in i + 1..c {
                clauses.push(vec![-var(v, i), -var(v, j)]);
            }
        }
    }
    for &(u, v) in edges {
        if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
            return Err(Error::param(format!(
                "edge ({u}, {v}) outside [1, {vertex_count}]"
            )));
        }
        if u == v {
            return Err(Error::param(format!("self-loop at {u}")));
        }
        for j in 0..c {
            clauses.push(vec![-var(u, j), -var(v, j)]);
        }
    }
    Cnf::new(vars, clauses)
}

/// Reads the color of each vertex from a satisfying assignment of
/// [`encode_graph_kcolor`].
pub fn decode_graph_coloring(assignment: &[bool], vertex_count: u32, c: u32) -> Result<Vec<u32>> {
    (1..=vertex_count)
        .map(|v| {
            let chosen: Vec<u32> = (0..c)
                .filter(|&j| assignment[color_var(v, j, c) as usize - 1])
                .collect();
            match chosen.as_slice() {
                [j] => Ok(*j),
                _ => Err(Error::Internal(format!(
                    "vertex {v} has {} colors in the model",
                    chosen.len()
                ))),
            }
        })
        .collect()
}
