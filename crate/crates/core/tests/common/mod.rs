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

//! Shared corpus and independent graph helpers for integration tests.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use cisgen::{generate_graph, Graph, GraphFamily};

pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::from_edges(n, edges).unwrap()
}

/// BFS reachability inside `s`; independent of the library's union-find.
pub fn induced_connected(g: &Graph, s: &[usize]) -> bool {
    if s.is_empty() {
        return false;
    }
    let inside: HashSet<usize> = s.iter().copied().collect();
    let mut seen = HashSet::from([s[0]]);
    let mut queue = VecDeque::from([s[0]]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if inside.contains(&w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == inside.len()
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && induced_connected(g, &(0..g.n()).collect::<Vec<_>>())
}

/// Distance between vertex sets by plain BFS; 0 when they intersect.
pub fn set_distance(g: &Graph, a: &[usize], b: &[usize]) -> usize {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &v in a {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        if b.contains(&v) {
            return dist[v];
        }
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    usize::MAX
}

/// Every connected labelled graph on `n` vertices.
pub fn connected_labelled(n: usize) -> Vec<Graph> {
    let pairs = all_pairs(n);
    (0u64..1 << pairs.len())
        .map(|mask| graph_from_mask(n, &pairs, mask))
        .filter(is_connected)
        .collect()
}

/// Canonical edge mask: the smallest mask over all vertex relabellings.
fn canonical_mask(n: usize, pairs: &[(usize, usize)], g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let table: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| if u == v { 0 } else { index(u, v) })
                .collect()
        })
        .collect();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |m, &(u, v)| m | 1 << table[p[u]][p[v]])
        })
        .min()
        .unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}

/// One representative per isomorphism class of graphs on `n` vertices
/// (connected or not).
pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
    let pairs = all_pairs(n);
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let g = graph_from_mask(n, &pairs, mask);
        if seen.insert(canonical_mask(n, &pairs, &g, &perms)) {
            out.push(g);
        }
    }
    out
}

/// Connected graphs on `n + 1` vertices obtained by attaching a new vertex
/// `n` to every neighbor subset of every class representative on `n`
/// vertices. Covers every connected `(n+1)`-vertex graph up to isomorphism.
pub fn one_vertex_extensions(base: &[Graph]) -> Vec<Graph> {
    let mut out = Vec::new();
    for g in base {
        let n = g.n();
        for attach in 1u64..1 << n {
            let extra = (0..n).filter(|v| attach >> v & 1 == 1).map(|v| (v, n));
            let h = Graph::from_edges(n + 1, g.edges().chain(extra)).unwrap();
            if is_connected(&h) {
                out.push(h);
            }
        }
    }
    out
}

pub fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for (i, g) in connected_labelled(n).into_iter().enumerate() {
            out.push(Instance {
                name: format!("labelled{n}#{i}"),
                graph: g,
            });
        }
    }
    for (i, g) in one_vertex_extensions(&isomorphism_classes(6))
        .into_iter()
        .enumerate()
    {
        out.push(Instance {
            name: format!("ext7#{i}"),
            graph: g,
        });
    }
    let mut families = Vec::new();
    for n in 1..=12 {
        families.push(GraphFamily::Path(n));
        families.push(GraphFamily::Complete(n));
        families.push(GraphFamily::Star(n));
        if n >= 3 {
            families.push(GraphFamily::Cycle(n));
        }
    }
    for r in 1..=3 {
        for c in r..=4 {
            families.push(GraphFamily::Grid(r, c));
        }
    }
    families.push(GraphFamily::CounterexamplePath { n: 7, k: 2 });
    families.push(GraphFamily::CounterexamplePath { n: 11, k: 3 });
    for p in [0.2, 0.4, 0.6] {
        for seed in 1..=5 {
            families.push(GraphFamily::Gnp { n: 12, p, seed });
        }
    }
    for f in families {
        out.push(Instance {
            name: f.to_string(),
            graph: generate_graph(&f).unwrap(),
        });
    }
    out
}
