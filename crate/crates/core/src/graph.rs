//! Simple undirected graphs with a dense adjacency matrix, plus parsing,
//! distance primitives, and exact walk counting.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matrix::Mat;

/// Simple undirected graph on vertices `0..n`.
///
/// The adjacency matrix and the per-vertex neighbour lists are kept in sync;
/// both are immutable after construction. Dense storage is fine here: the
/// target graphs have at most a few hundred vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adjacency: Mat<i64>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adjacency = Mat::zeros(order, order);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            adjacency[(u, v)] = 1;
            adjacency[(v, u)] = 1;
        }
        let neighbors =
            (0..order).map(|u| (0..order).filter(|&v| adjacency[(u, v)] == 1).collect()).collect();
        Ok(Graph { adjacency, neighbors })
    }

    pub fn order(&self) -> usize {
        self.neighbors.len()
    }

    pub fn size(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[(u, v)] == 1
    }

    pub fn adjacency(&self) -> &Mat<i64> {
        &self.adjacency
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, order: self.order() })
        }
    }
}

/// Parses the edge-list text format: one `u v` pair per line, `#` starts a
/// comment, and an optional `n <count>` line fixes the vertex count (otherwise
/// it is one past the largest vertex id).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_order: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_id: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = line.split_whitespace();
        let Some(first) = tokens.next() else { continue };

        if first == "n" {
            let tok = tokens.next().ok_or(Error::BadEdgeLine { line: line_no })?;
            let count = tok
                .parse::<usize>()
                .map_err(|_| Error::BadToken { line: line_no, token: tok.to_string() })?;
            if tokens.next().is_some() {
                return Err(Error::BadEdgeLine { line: line_no });
            }
            declared_order = Some(count);
            continue;
        }

        let parse = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| Error::BadToken { line: line_no, token: tok.to_string() })
        };
        let u = parse(first)?;
        let v = parse(tokens.next().ok_or(Error::BadEdgeLine { line: line_no })?)?;
        if tokens.next().is_some() {
            return Err(Error::BadEdgeLine { line: line_no });
        }
        if u == v {
            return Err(Error::SelfLoop { line: line_no, vertex: u });
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }

    let order = declared_order.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Graph::from_edges(order, &edges)
}

/// Parses the graph6 format (6-bit big-endian encoding of the upper triangle,
/// columns `j = 1..n`, rows `i < j`).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bad = |reason: &str| Error::BadGraph6 { reason: reason.to_string() };
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside the printable range 63..=126"));
    }
    let vals: Vec<u64> = bytes.iter().map(|&b| (b - 63) as u64).collect();
    if vals.is_empty() {
        return Err(bad("empty string"));
    }

    let (order, header_len) = if vals[0] < 63 {
        (vals[0] as usize, 1)
    } else if vals.len() >= 4 && vals[1] < 63 {
        (((vals[1] << 12) | (vals[2] << 6) | vals[3]) as usize, 4)
    } else if vals.len() >= 8 {
        let mut n = 0u64;
        for &v in &vals[2..8] {
            n = (n << 6) | v;
        }
        (n as usize, 8)
    } else {
        return Err(bad("truncated order header"));
    };

    let bit_count = order * order.saturating_sub(1) / 2;
    let expected = header_len + bit_count.div_ceil(6);
    if vals.len() != expected {
        return Err(bad("length does not match the declared vertex count"));
    }

    let mut edges = Vec::new();
    let mut pos = 0usize;
    for j in 1..order {
        for i in 0..j {
            let group = vals[header_len + pos / 6];
            if (group >> (5 - pos % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    // padding bits must be zero
    if pos % 6 != 0 {
        let group = vals[header_len + pos / 6];
        let mask = (1u64 << (6 - pos % 6)) - 1;
        if group & mask != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Graph::from_edges(order, &edges)
}

/// BFS distances from `u`; errors naming an unreachable vertex when the graph
/// is disconnected.
pub fn distances_from(g: &Graph, u: usize) -> Result<Vec<usize>> {
    g.check_vertex(u)?;
    let mut dist = vec![usize::MAX; g.order()];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if let Some(unreachable) = dist.iter().position(|&d| d == usize::MAX) {
        return Err(Error::Disconnected { from: u, unreachable });
    }
    Ok(dist)
}

pub fn eccentricity(g: &Graph, u: usize) -> Result<usize> {
    Ok(distances_from(g, u)?.into_iter().max().unwrap_or(0))
}

pub fn is_connected(g: &Graph) -> bool {
    g.order() == 0 || distances_from(g, 0).is_ok()
}

/// Errors with an unreachable-vertex witness unless the graph is connected.
pub fn require_connected(g: &Graph) -> Result<()> {
    if g.order() > 0 {
        distances_from(g, 0)?;
    }
    Ok(())
}

/// `Some(k)` iff every vertex has degree `k`.
pub fn is_regular(g: &Graph) -> Option<usize> {
    let mut degrees = (0..g.order()).map(|u| g.degree(u));
    let k = degrees.next()?;
    degrees.all(|d| d == k).then_some(k)
}

/// Exact walk counts `A^len` with overflow detection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WalkCountMatrix {
    length: usize,
    entries: Mat<i64>,
}

impl WalkCountMatrix {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn entries(&self) -> &Mat<i64> {
        &self.entries
    }

    pub fn count(&self, u: usize, v: usize) -> i64 {
        self.entries[(u, v)]
    }
}

pub fn walk_counts(g: &Graph, length: usize) -> Result<WalkCountMatrix> {
    let entries =
        g.adjacency.checked_pow(length).map_err(|_| Error::WalkCountOverflow { length })?;
    Ok(WalkCountMatrix { length, entries })
}
