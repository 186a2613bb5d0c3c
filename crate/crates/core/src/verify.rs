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

//! Cross-checks between the engines, the oracle and the structural
//! properties the enumeration relies on. Used by the CLI `verify` mode and
//! the test suites.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{connected_components, dfs_ordering, DfsOrdering, Graph, GraphFamily};
use crate::oracle::{build_supergraph, check_strong_connectivity, enumerate_brute_force};
use crate::supergraph::{lex_compare, KSet, Supergraph};
use crate::traversal::{enumerate_driver_capped, Engine, EnumStats};
use crate::Vertex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
}

impl Outcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    fn check(ok: bool, msg: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(msg())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub outcome: Outcome,
}

type Family = BTreeSet<Vec<Vertex>>;

/// Runs `engine` through the driver and returns the family plus whether the
/// stream repeated any set.
pub fn run_engine(
    g: &Graph,
    k: usize,
    engine: Engine,
    max_subsets: u128,
) -> Result<(Family, bool, EnumStats)> {
    let mut family = Family::new();
    let mut repeated = false;
    let stats = enumerate_driver_capped(g, k, engine, max_subsets, |s: &KSet| {
        repeated |= !family.insert(s.sorted_labels());
    })?;
    Ok((family, repeated, stats))
}

/// DFS, BFS and brute force produce the same duplicate-free family, and the
/// delay and memory counters stay within their bounds.
pub fn check_engines(g: &Graph, k: usize, max_subsets: u128) -> Result<Vec<CheckReport>> {
    let (dfs, dfs_rep, dfs_stats) = run_engine(g, k, Engine::Dfs, max_subsets)?;
    let (bfs, bfs_rep, bfs_stats) = run_engine(g, k, Engine::Bfs, max_subsets)?;
    let (oracle, oracle_rep, _) = run_engine(g, k, Engine::Oracle, max_subsets)?;
    Ok(vec![
        CheckReport {
            name: "engines-agree",
            outcome: Outcome::check(dfs == oracle && bfs == oracle, || {
                format!(
                    "dfs {} / bfs {} / oracle {} sets",
                    dfs.len(),
                    bfs.len(),
                    oracle.len()
                )
            }),
        },
        CheckReport {
            name: "no-duplicates",
            outcome: Outcome::check(!dfs_rep && !bfs_rep && !oracle_rep, || {
                "an engine repeated a set".into()
            }),
        },
        CheckReport {
            name: "dfs-delay",
            outcome: Outcome::check(dfs_stats.max_gap <= 2, || {
                format!("max_gap = {}", dfs_stats.max_gap)
            }),
        },
        CheckReport {
            name: "bfs-delay",
            outcome: Outcome::check(bfs_stats.max_gap <= 1, || {
                format!("max_gap = {}", bfs_stats.max_gap)
            }),
        },
        CheckReport {
            name: "dfs-space",
            outcome: Outcome::check(dfs_stats.peak_tracked_sets <= 3, || {
                format!("peak_tracked_sets = {}", dfs_stats.peak_tracked_sets)
            }),
        },
    ])
}

/// Structural checks on a connected graph.
#[derive(Debug)]
pub struct ComponentChecks<'a> {
    g: &'a Graph,
    ord: DfsOrdering,
    k: usize,
    sets: Vec<KSet>,
}

impl<'a> ComponentChecks<'a> {
    pub fn new(g: &'a Graph, k: usize, max_subsets: u128) -> Result<Self> {
        let ord = dfs_ordering(g, 0)?;
        if ord.len() != g.n() {
            return Err(Error::Contract("graph is not connected".into()));
        }
        if k < 1 || k > g.n() {
            return Err(Error::KOutOfRange { k, max: g.n() });
        }
        let sets = enumerate_brute_force(g, k, max_subsets)?
            .into_iter()
            .map(|s| KSet::new(&ord, s.members().iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { g, ord, k, sets })
    }

    pub fn ordering(&self) -> &DfsOrdering {
        &self.ord
    }

    pub fn sets(&self) -> &[KSet] {
        &self.sets
    }

    fn supergraph(&self) -> Result<Supergraph<'_>> {
        Supergraph::new(self.g, &self.ord, self.k)
    }

    /// Every set other than the minimum has a strictly smaller neighbor, and
    /// the minimum is the first k vertices of the ordering.
    pub fn smaller_neighbor_witnesses(&self) -> Result<Outcome> {
        let mut sg = self.supergraph()?;
        let x0 = sg.initial_node()?;
        for x in &self.sets {
            if lex_compare(&self.ord, &x0, x)? == Ordering::Greater {
                return Ok(Outcome::Fail(format!(
                    "{:?} precedes the initial node",
                    x.sorted_labels()
                )));
            }
            if *x == x0 {
                continue;
            }
            let mut smaller = false;
            for y in sg.neighbors(x)? {
                if lex_compare(&self.ord, &y, x)? == Ordering::Less {
                    smaller = true;
                    break;
                }
            }
            if !smaller {
                return Ok(Outcome::Fail(format!(
                    "{:?} has no smaller neighbor",
                    x.sorted_labels()
                )));
            }
        }
        Ok(Outcome::Pass)
    }

    /// The parent relation is a spanning tree of `C(G;k)` rooted at the
    /// minimum: one parent per other node, each a neighbor that precedes it,
    /// and every chain descends to the root.
    pub fn parent_tree(&self) -> Result<Outcome> {
        let mut sg = self.supergraph()?;
        let x0 = sg.initial_node()?;
        let index: std::collections::HashMap<Vec<Vertex>, usize> = self
            .sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.sorted_labels(), i))
            .collect();
        let mut parent_of = vec![usize::MAX; self.sets.len()];
        let mut tree_edges = 0usize;
        for (i, x) in self.sets.iter().enumerate() {
            if *x == x0 {
                if !matches!(sg.parent(x), Err(Error::NoParent)) {
                    return Ok(Outcome::Fail("the root reports a parent".into()));
                }
                continue;
            }
            let p = sg.parent(x)?;
            let Some(&pi) = index.get(&p.sorted_labels()) else {
                return Ok(Outcome::Fail(format!(
                    "parent {:?} is not a connected k-set",
                    p.sorted_labels()
                )));
            };
            if lex_compare(&self.ord, &p, x)? != Ordering::Less {
                return Ok(Outcome::Fail(format!(
                    "parent of {:?} does not precede it",
                    x.sorted_labels()
                )));
            }
            if !sg.neighbors(&p)?.contains(x) {
                return Ok(Outcome::Fail(format!(
                    "{:?} is not a neighbor of its parent",
                    x.sorted_labels()
                )));
            }
            parent_of[i] = pi;
            tree_edges += 1;
        }
        if tree_edges + 1 != self.sets.len() {
            return Ok(Outcome::Fail(format!(
                "{tree_edges} tree edges for {} nodes",
                self.sets.len()
            )));
        }
        let root = index[&x0.sorted_labels()];
        for start in 0..self.sets.len() {
            let mut cur = start;
            let mut hops = 0;
            while cur != root {
                cur = parent_of[cur];
                hops += 1;
                if hops > self.sets.len() {
                    return Ok(Outcome::Fail("parent chain does not reach the root".into()));
                }
            }
        }
        Ok(Outcome::Pass)
    }

    /// The neighborhood operator matches the brute-force exchange relation
    /// and respects `|N(X)| <= k * min(n - k, k * Δ)`.
    pub fn neighborhoods(&self, max_subsets: u128) -> Result<Outcome> {
        let explicit = build_supergraph(self.g, self.k, max_subsets)?;
        let mut sg = self.supergraph()?;
        let n = self.g.n();
        let bound = self.k * (n - self.k).min(self.k * self.g.max_degree());
        for (i, node) in explicit.nodes.iter().enumerate() {
            let x = KSet::new(&self.ord, node.members().iter().copied())?;
            let got = sg.neighbors(&x)?;
            if got.len() > bound {
                return Ok(Outcome::Fail(format!(
                    "|N| = {} exceeds {bound}",
                    got.len()
                )));
            }
            let got: BTreeSet<Vec<Vertex>> = got.iter().map(KSet::sorted_labels).collect();
            let want: BTreeSet<Vec<Vertex>> = explicit.arcs[i]
                .iter()
                .map(|&j| explicit.nodes[j].sorted_labels())
                .collect();
            if got != want {
                return Ok(Outcome::Fail(format!(
                    "neighborhood of {:?} differs",
                    node.members()
                )));
            }
        }
        Ok(Outcome::Pass)
    }

    /// The explicit supergraph is strongly connected with eccentricity at
    /// most `max(n - k, k - 1)`. Plain `n - k` fails on cycles once
    /// `k > n / 2`: opposite arcs of `C_6` with `k = 4` are three exchanges
    /// apart.
    pub fn strong_connectivity(&self, max_subsets: u128) -> Result<Outcome> {
        let explicit = build_supergraph(self.g, self.k, max_subsets)?;
        let sc = check_strong_connectivity(&explicit);
        let limit = (self.g.n() - self.k).max(self.k - 1);
        Ok(Outcome::check(
            sc.connected && sc.max_eccentricity <= limit,
            || {
                format!(
                    "connected = {}, eccentricity {} > {limit}",
                    sc.connected, sc.max_eccentricity
                )
            },
        ))
    }
}

fn merge(into: &mut Vec<CheckReport>, name: &'static str, outcome: Outcome) {
    match into.iter_mut().find(|c| c.name == name) {
        Some(c) => {
            if c.outcome.is_pass() {
                c.outcome = outcome;
            }
        }
        None => into.push(CheckReport { name, outcome }),
    }
}

/// The full check battery on any graph, applying the structural checks to
/// each component with at least `k` vertices.
pub fn verify_instance(g: &Graph, k: usize, max_subsets: u128) -> Result<Vec<CheckReport>> {
    let mut reports = check_engines(g, k, max_subsets)?;
    for name in [
        "smaller-neighbor",
        "parent-tree",
        "neighborhoods",
        "strong-connectivity",
    ] {
        reports.push(CheckReport {
            name,
            outcome: Outcome::Pass,
        });
    }
    for comp in connected_components(g) {
        if comp.len() < k {
            continue;
        }
        let (sub, _) = g.induced_subgraph(&comp);
        let checks = ComponentChecks::new(&sub, k, max_subsets)?;
        merge(
            &mut reports,
            "smaller-neighbor",
            checks.smaller_neighbor_witnesses()?,
        );
        merge(&mut reports, "parent-tree", checks.parent_tree()?);
        merge(
            &mut reports,
            "neighborhoods",
            checks.neighborhoods(max_subsets)?,
        );
        merge(
            &mut reports,
            "strong-connectivity",
            checks.strong_connectivity(max_subsets)?,
        );
    }
    Ok(reports)
}

/// Neighbors of `{k+1, ..., 2k}` (1-based) on the counterexample path when
/// the labels themselves order the vertices. Returns the set and its
/// neighbors, all label-ascending.
pub fn counterexample_neighbors(n: usize, k: usize) -> Result<(Vec<Vertex>, Vec<Vec<Vertex>>)> {
    let g = crate::graph::generate_graph(&GraphFamily::CounterexamplePath { n, k })?;
    let identity: Vec<Vertex> = (0..n).collect();
    let ord = DfsOrdering::from_sequence(&g, &identity)?;
    let x = KSet::new(&ord, k..2 * k)?;
    let mut sg = Supergraph::new(&g, &ord, k)?;
    let nbrs = sg.neighbors(&x)?;
    Ok((
        x.sorted_labels(),
        nbrs.iter().map(KSet::sorted_labels).collect(),
    ))
}

/// Under the label order, the set has exactly two neighbors and both come
/// after it; under a DFS order every non-minimal set has a smaller neighbor.
pub fn check_counterexample(n: usize, k: usize) -> Result<Outcome> {
    let (x, nbrs) = counterexample_neighbors(n, k)?;
    if nbrs.len() != 2 {
        return Ok(Outcome::Fail(format!(
            "{x:?} has {} neighbors, expected 2",
            nbrs.len()
        )));
    }
    if let Some(y) = nbrs.iter().find(|y| **y <= x) {
        return Ok(Outcome::Fail(format!(
            "neighbor {y:?} does not follow {x:?}"
        )));
    }
    Ok(Outcome::Pass)
}
