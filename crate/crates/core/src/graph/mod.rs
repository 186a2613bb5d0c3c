// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Simple undirected graphs and the connectivity primitives the enumeration
//! engines are built on.

mod generate;
mod order;
mod parse;

pub use generate::{generate_graph, GraphFamily};
pub use order::{dfs_ordering, DfsOrdering};
pub use parse::{parse_edge_list, read_edge_list};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::union_find::DisjointSet;
use crate::Vertex;

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted ascending and free of loops and duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::Validation(format!("self-loop at vertex {u}")));
            }
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut total = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            total += list.len();
        }
        Ok(Self { adj, m: total / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Checks the representation invariants: sorted, loop-free, duplicate-free,
    /// symmetric adjacency and a consistent edge count.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let mut total = 0;
        for (u, list) in self.adj.iter().enumerate() {
            total += list.len();
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::Validation(format!(
                        "adjacency of {u} is not strictly ascending"
                    )));
                }
            }
            for &v in list {
                if v >= n {
                    return Err(Error::VertexOutOfRange(v));
                }
                if v == u {
                    return Err(Error::Validation(format!("self-loop at vertex {u}")));
                }
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(Error::Validation(format!("edge {u}-{v} is not symmetric")));
                }
            }
        }
        if total != 2 * self.m {
            return Err(Error::Validation(format!(
                "edge count {} disagrees with adjacency total {total}",
                self.m
            )));
        }
        Ok(())
    }

    /// The subgraph induced on `vertices`, relabelled so that new vertex `i`
    /// is `vertices[i]`. Returns the graph and that label map.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let local = &local;
            self.adj[v].iter().filter_map(move |&w| {
                (local[w] != usize::MAX && i < local[w]).then_some((i, local[w]))
            })
        });
        let sub = Graph::from_edges(vertices.len(), edges.collect::<Vec<_>>())
            .expect("induced subgraph of a valid graph is valid");
        (sub, vertices.to_vec())
    }
}

/// Maximal connected vertex sets, each ascending, listed by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn sorted_members(g: &Graph, s: &[Vertex]) -> Result<Vec<Vertex>> {
    if s.is_empty() {
        return Err(Error::Contract("vertex set is empty".into()));
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    if let Some(&v) = sorted.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange(v));
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Contract("vertex set has repeated members".into()));
    }
    Ok(sorted)
}

/// Whether the subgraph induced on `s` is connected.
///
/// Unions every edge of `g` with both endpoints in `s` and tests for a single
/// remaining component.
pub fn is_connected_subset(g: &Graph, s: &[Vertex]) -> Result<bool> {
    let sorted = sorted_members(g, s)?;
    let mut ds = DisjointSet::new(sorted.len());
    for (i, &v) in sorted.iter().enumerate() {
        for &w in g.neighbors(v) {
            if w > v {
                if let Ok(j) = sorted.binary_search(&w) {
                    ds.union(i, j);
                }
            }
        }
    }
    Ok(ds.component_count() == 1)
}

/// A vertex `v != exclude` of `s` whose removal leaves `G[s]` connected.
///
/// Builds the DFS tree of `G[s]` rooted at `exclude` (neighbors in ascending
/// label order) and returns the last vertex in preorder, which is always a leaf.
pub fn spanning_tree_leaf(g: &Graph, s: &[Vertex], exclude: Vertex) -> Result<Vertex> {
    let sorted = sorted_members(g, s)?;
    if sorted.binary_search(&exclude).is_err() {
        return Err(Error::Contract(format!(
            "vertex {exclude} is not in the set"
        )));
    }
    if sorted.len() == 1 {
        return Err(Error::NoLeaf);
    }
    contracted_tree_leaf(g, &sorted, &[exclude])
}

/// Like [`spanning_tree_leaf`], but with the vertices of `root` contracted into
/// a single tree root. The returned leaf is never in `root`.
pub fn contracted_tree_leaf(g: &Graph, s: &[Vertex], root: &[Vertex]) -> Result<Vertex> {
    let sorted = sorted_members(g, s)?;
    let mut visited = vec![false; sorted.len()];
    let index = |v: Vertex| sorted.binary_search(&v).ok();
    for &r in root {
        let i =
            index(r).ok_or_else(|| Error::Contract(format!("root vertex {r} not in the set")))?;
        visited[i] = true;
    }
    let mut last = None;
    // Frames are (vertex, next neighbor index). The contracted root expands
    // its members' neighbors in ascending member order.
    let mut root_members: Vec<Vertex> = root.to_vec();
    root_members.sort_unstable();
    let mut stack: Vec<(Vertex, usize)> = Vec::new();
    for &r in &root_members {
        for &w in g.neighbors(r) {
            if let Some(j) = index(w) {
                if !visited[j] {
                    visited[j] = true;
                    last = Some(w);
                    stack.push((w, 0));
                    while let Some(frame) = stack.last_mut() {
                        let (v, pos) = *frame;
                        let adj = g.neighbors(v);
                        if pos == adj.len() {
                            stack.pop();
                            continue;
                        }
                        frame.1 += 1;
                        let x = adj[pos];
                        if let Some(jx) = index(x) {
                            if !visited[jx] {
                                visited[jx] = true;
                                last = Some(x);
                                stack.push((x, 0));
                            }
                        }
                    }
                }
            }
        }
    }
    if visited.iter().any(|&b| !b) {
        return Err(Error::Contract("induced subgraph is not connected".into()));
    }
    last.ok_or(Error::NoLeaf)
}

/// Layered multi-source BFS from `a`; returns per-vertex predecessor and the
/// first layer index at which `b` is met, with the smallest-label hit there.
fn bfs_towards(g: &Graph, a: &[Vertex], in_b: &[bool]) -> Option<(Vec<Vertex>, Vertex)> {
    let mut pred = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    let mut layer: Vec<Vertex> = a.to_vec();
    layer.sort_unstable();
    for &v in &layer {
        seen[v] = true;
        pred[v] = v;
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    pred[w] = v;
                    next.push(w);
                }
            }
        }
        next.sort_unstable();
        if let Some(&hit) = next.iter().find(|&&w| in_b[w]) {
            return Some((pred, hit));
        }
        layer = next;
    }
    None
}

/// Shortest path `u0, ..., ur` from set `a` to set `b` (disjoint), with
/// interior vertices outside both. Ties go to smaller labels.
pub fn shortest_path_between_sets(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Result<Vec<Vertex>> {
    let a = sorted_members(g, a)?;
    let b = sorted_members(g, b)?;
    let mut in_b = vec![false; g.n()];
    for &v in &b {
        in_b[v] = true;
    }
    if a.iter().any(|&v| in_b[v]) {
        return Err(Error::Contract("sets overlap (distance is zero)".into()));
    }
    let (pred, hit) = bfs_towards(g, &a, &in_b)
        .ok_or_else(|| Error::Contract("sets lie in different components".into()))?;
    let mut path = vec![hit];
    let mut cur = hit;
    while pred[cur] != cur {
        cur = pred[cur];
        path.push(cur);
    }
    path.reverse();
    Ok(path)
}

/// Graph distance between two vertex sets; `Some(0)` when they intersect,
/// `None` when no path exists.
pub fn set_distance(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Option<usize> {
    let mut in_b = vec![false; g.n()];
    for &v in b {
        in_b[v] = true;
    }
    if a.iter().any(|&v| in_b[v]) {
        return Some(0);
    }
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &v in a {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                if in_b[w] {
                    return Some(dist[w]);
                }
                queue.push_back(w);
            }
        }
    }
    None
}
