//! CNF construction, DIMACS I/O and a deterministic complete solver.

mod brute;
mod cdcl;
mod cnf;
mod dimacs;
mod dpll;
mod encode;

pub use brute::{count_models, exhaustive_check, MAX_EXHAUSTIVE_VARS};
pub use cnf::{Cnf, Lit};
pub use dimacs::{read_dimacs, write_dimacs};
pub use dpll::{
    solve, solve_dpll, solve_dpll_with_stats, solve_with_stats, SolveResult, SolveStats,
};
pub use encode::{color_var, decode_graph_coloring, encode_graph_kcolor, encode_nae2};
