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

//! Brute-force ground truth: exhaustive subset enumeration, the explicit
//! supergraph, and the counting bound.

use std::collections::VecDeque;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{is_connected_subset, Graph};
use crate::supergraph::KSet;

pub const DEFAULT_MAX_SUBSETS: u128 = 5_000_000;

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Every connected k-set of `g`, found by testing all `C(n, k)` subsets.
/// Sets are label-ascending and listed in lexicographic label order.
pub fn enumerate_brute_force(g: &Graph, k: usize, max_subsets: u128) -> Result<Vec<KSet>> {
    if k < 1 {
        return Err(Error::KOutOfRange { k, max: g.n() });
    }
    let subsets = binomial(g.n(), k);
    if subsets > max_subsets {
        return Err(Error::ScaleGuard {
            subsets,
            cap: max_subsets,
        });
    }
    let mut out = Vec::new();
    for combo in (0..g.n()).combinations(k) {
        if is_connected_subset(g, &combo)? {
            out.push(KSet::from_labels(combo));
        }
    }
    Ok(out)
}

/// `C(G;k)` with the exchange relation made explicit: two sets are joined
/// when they share `k - 1` vertices, or for `k = 1` when they are adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitSupergraph {
    pub nodes: Vec<KSet>,
    pub arcs: Vec<Vec<usize>>,
}

impl ExplicitSupergraph {
    pub fn index_of(&self, set: &KSet) -> Option<usize> {
        let key = set.sorted_labels();
        self.nodes
            .binary_search_by(|probe| probe.members().cmp(&key[..]))
            .ok()
    }
}

pub fn build_supergraph(g: &Graph, k: usize, max_subsets: u128) -> Result<ExplicitSupergraph> {
    let nodes = enumerate_brute_force(g, k, max_subsets)?;
    let mut arcs = vec![Vec::new(); nodes.len()];
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            let a = nodes[i].members();
            let b = nodes[j].members();
            // singletons have no common vertex to keep; they exchange along edges
            let linked = if k == 1 {
                g.has_edge(a[0], b[0])
            } else {
                a.iter().filter(|v| b.binary_search(v).is_ok()).count() + 1 == k
            };
            if linked {
                arcs[i].push(j);
                arcs[j].push(i);
            }
        }
    }
    Ok(ExplicitSupergraph { nodes, arcs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrongConnectivity {
    pub connected: bool,
    /// Largest shortest-path arc count between any two nodes that reach
    /// each other.
    pub max_eccentricity: usize,
}

pub fn check_strong_connectivity(sg: &ExplicitSupergraph) -> StrongConnectivity {
    let n = sg.nodes.len();
    let mut connected = true;
    let mut ecc = 0;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        queue.push_back(s);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            ecc = ecc.max(dist[v]);
            for &w in &sg.arcs[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        connected &= reached == n;
    }
    StrongConnectivity {
        connected,
        max_eccentricity: ecc,
    }
}

/// `n (e Δ)^k / ((Δ - 1) k)`, an upper bound on the number of connected
/// k-sets of a graph with `n` vertices and maximum degree `Δ >= 2`.
pub fn count_upper_bound(n: usize, max_degree: usize, k: usize) -> Result<f64> {
    if max_degree < 2 {
        return Err(Error::UndefinedBound(max_degree));
    }
    if k < 1 {
        return Err(Error::KOutOfRange { k, max: n });
    }
    let d = max_degree as f64;
    Ok(n as f64 * (std::f64::consts::E * d).powi(k as i32) / ((d - 1.0) * k as f64))
}
