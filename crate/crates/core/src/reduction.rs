//! Gadget graph of a simple combinatorial description.
//!
//! Vertices are `a1..an`, `b1..bn` (one pair per line) and `c1..cm` (one per
//! cell, `m = 1 + n(n+1)/2`). Each of the three groups is a clique; `a_i` sees
//! the cells on the negative side of line `i` and `b_i` those on the positive
//! side. There are no edges between the `a` and `b` groups. The graph is a unit
//! disk graph exactly when the description is stretchable.

use crate::arrangement::{simple_cell_count, CombinatorialDescription, Sign};
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, Role};

/// Vertex index of `a_i` in a gadget graph for `n` lines.
pub fn a_index(i: usize) -> usize {
    i
}

pub fn b_index(n: usize, i: usize) -> usize {
    n + i
}

pub fn c_index(n: usize, j: usize) -> usize {
    2 * n + j
}

/// Edge count of the gadget graph: `2·C(n,2) + C(m,2) + n·m`.
pub fn gadget_edge_count(n: usize) -> usize {
    let m = simple_cell_count(n);
    n * n.saturating_sub(1) + m * (m - 1) / 2 + n * m
}

/// Builds the gadget graph. Cell `j` is the `j`-th vector in canonical
/// (lexicographic) order and becomes vertex `c_{j+1}`.
pub fn build_gd(d: &CombinatorialDescription) -> Result<LabeledGraph> {
    let n = d.n();
    if !d.is_simple() {
        return Err(Error::InvalidDescription(format!(
            "{} cells given, a simple arrangement of {n} lines has {}",
            d.len(),
            simple_cell_count(n)
        )));
    }
    let m = d.len();
    let roles: Vec<Role> = (0..n)
        .map(Role::A)
        .chain((0..n).map(Role::B))
        .chain((0..m).map(Role::C))
        .collect();

    let mut edges = Vec::with_capacity(gadget_edge_count(n));
    for i in 0..n {
        for k in i + 1..n {
            edges.push((a_index(i), a_index(k)));
            edges.push((b_index(n, i), b_index(n, k)));
        }
    }
    for j in 0..m {
        for l in j + 1..m {
            edges.push((c_index(n, j), c_index(n, l)));
        }
    }
    for (j, cell) in d.cells().enumerate() {
        for i in 0..n {
            let other = match cell.get(i) {
                Sign::Minus => a_index(i),
                Sign::Plus => b_index(n, i),
                Sign::Zero => unreachable!("descriptions are zero-free"),
            };
            edges.push((other, c_index(n, j)));
        }
    }
    LabeledGraph::new(roles, edges)
}
