//! Undirected graphs whose vertices carry gadget roles.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

/// Role of a vertex. Indices are zero-based; labels print one-based (`a1`, `c7`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    A(usize),
    B(usize),
    C(usize),
    Plain,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::A(i) => write!(f, "a{}", i + 1),
            Role::B(i) => write!(f, "b{}", i + 1),
            Role::C(j) => write!(f, "c{}", j + 1),
            Role::Plain => f.write_str("v"),
        }
    }
}

impl FromStr for Role {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "v" {
            return Ok(Role::Plain);
        }
        let bad = || Error::InvalidGraph(format!("unknown vertex role {s:?}"));
        let (kind, idx) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let idx: usize = idx.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match kind {
            "a" => Ok(Role::A(idx - 1)),
            "b" => Ok(Role::B(idx - 1)),
            "c" => Ok(Role::C(idx - 1)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Role {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Role {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Simple undirected graph with labeled vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct LabeledGraph {
    roles: Vec<Role>,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertices: Vec<Role>,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for LabeledGraph {
    type Error = Error;
    fn try_from(r: RawGraph) -> Result<Self> {
        LabeledGraph::new(r.vertices, r.edges)
    }
}

impl From<LabeledGraph> for RawGraph {
    fn from(g: LabeledGraph) -> Self {
        RawGraph { vertices: g.roles, edges: g.edges.into_iter().collect() }
    }
}

impl LabeledGraph {
    /// Rejects self-loops, out-of-range endpoints, duplicate edges and
    /// duplicate non-plain roles.
    pub fn new(roles: Vec<Role>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = roles.len();
        let mut seen = BTreeSet::new();
        for r in &roles {
            if *r != Role::Plain && !seen.insert(*r) {
                return Err(Error::InvalidGraph(format!("role {r} used twice")));
            }
        }
        let mut set = BTreeSet::new();
        let mut adjacency = vec![false; n * n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !set.insert(key) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
            adjacency[u * n + v] = true;
            adjacency[v * n + u] = true;
        }
        Ok(Self { roles, edges: set, adjacency })
    }

    /// Graph on `n` plain vertices.
    pub fn plain(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(vec![Role::Plain; n], edges)
    }

    pub fn complete(n: usize) -> Self {
        Self::plain(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid")
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        Self::plain(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid")
    }

    pub fn path(n: usize) -> Self {
        Self::plain(n, (1..n).map(|v| (v - 1, v))).expect("valid")
    }

    pub fn cycle(n: usize) -> Self {
        Self::plain(n, (0..n).map(|v| (v, (v + 1) % n))).expect("n >= 3")
    }

    pub fn vertex_count(&self) -> usize {
        self.roles.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.roles.len() + v]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn role_index(&self) -> HashMap<Role, usize> {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| **r != Role::Plain)
            .map(|(i, r)| (*r, i))
            .collect()
    }

    /// `(n, m)` when the roles are exactly `a1..an`, `b1..bn`, `c1..cm`.
    pub fn gadget_shape(&self) -> Option<(usize, usize)> {
        let (mut a, mut b, mut c) = (0, 0, 0);
        for r in &self.roles {
            match r {
                Role::A(_) => a += 1,
                Role::B(_) => b += 1,
                Role::C(_) => c += 1,
                Role::Plain => return None,
            }
        }
        let idx = self.role_index();
        let complete = (0..a).all(|i| idx.contains_key(&Role::A(i)) && idx.contains_key(&Role::B(i)))
            && (0..c).all(|j| idx.contains_key(&Role::C(j)));
        (a == b && complete).then_some((a, c))
    }

    /// Unordered vertex pairs, each exactly once, with their adjacency.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
        let n = self.roles.len();
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v, self.has_edge(u, v))))
    }
}
