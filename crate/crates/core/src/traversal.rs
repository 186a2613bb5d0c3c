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

//! Enumeration engines over the exchange supergraph: a breadth-first search
//! with an ordered visited store, and memoryless reverse search with
//! alternating-depth output scheduling. Also the constructive connecting
//! sequence between two nodes.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{
    connected_components, contracted_tree_leaf, dfs_ordering, is_connected_subset,
    shortest_path_between_sets, spanning_tree_leaf, DfsOrdering, Graph,
};
use crate::oracle::{enumerate_brute_force, DEFAULT_MAX_SUBSETS};
use crate::supergraph::{Direction, KSet, Supergraph};
use crate::Vertex;

/// Counters describing one enumeration run.
///
/// `max_gap` counts full neighborhood generations between consecutive
/// outputs, including before the first and after the last.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub outputs: u64,
    pub nodes_processed: u64,
    pub max_gap: u64,
    pub parent_calls: u64,
    pub peak_tracked_sets: u64,
}

impl fmt::Display for EnumStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "outputs={}", self.outputs)?;
        writeln!(f, "nodes_processed={}", self.nodes_processed)?;
        writeln!(f, "max_gap={}", self.max_gap)?;
        writeln!(f, "parent_calls={}", self.parent_calls)?;
        write!(f, "peak_tracked_sets={}", self.peak_tracked_sets)
    }
}

/// Receives each enumerated set exactly once, in original vertex labels.
pub trait OutputSink {
    fn emit(&mut self, set: &KSet);

    /// Engines stop early once this returns true.
    fn is_closed(&self) -> bool {
        false
    }
}

impl<F: FnMut(&KSet)> OutputSink for F {
    fn emit(&mut self, set: &KSet) {
        self(set)
    }
}

#[derive(Debug, Default)]
struct Meter {
    stats: EnumStats,
    since_output: u64,
    live: u64,
}

impl Meter {
    fn output(&mut self) {
        self.stats.outputs += 1;
        self.stats.max_gap = self.stats.max_gap.max(self.since_output);
        self.since_output = 0;
    }

    fn processed(&mut self) {
        self.stats.nodes_processed += 1;
        self.since_output += 1;
    }

    fn hold(&mut self) {
        self.live += 1;
        self.stats.peak_tracked_sets = self.stats.peak_tracked_sets.max(self.live);
    }

    fn release(&mut self) {
        self.live -= 1;
    }

    fn set_tracked(&mut self, n: u64) {
        self.stats.peak_tracked_sets = self.stats.peak_tracked_sets.max(n);
    }

    fn finish(mut self) -> EnumStats {
        self.stats.max_gap = self.stats.max_gap.max(self.since_output);
        self.stats
    }
}

fn emit_ranks<S: OutputSink>(sg: &Supergraph, ranks: &[usize], meter: &mut Meter, sink: &mut S) {
    sink.emit(&sg.to_kset(ranks));
    meter.output();
}

fn check_connected_input(g: &Graph, k: usize) -> Result<DfsOrdering> {
    if k < 1 || k > g.n() {
        return Err(Error::KOutOfRange { k, max: g.n() });
    }
    let ord = dfs_ordering(g, 0)?;
    if ord.len() != g.n() {
        return Err(Error::Contract("graph is not connected".into()));
    }
    Ok(ord)
}

fn bfs_component<S: OutputSink>(
    sg: &mut Supergraph,
    meter: &mut Meter,
    sink: &mut S,
) -> Result<()> {
    let root: Rc<[usize]> = (0..sg.k()).collect();
    if !sg.is_connected(&root) {
        return Err(Error::Internal(
            "first k vertices of a DFS order are disconnected".into(),
        ));
    }
    // every set is stored once and shared with the queue
    let mut store: BTreeSet<Rc<[usize]>> = BTreeSet::new();
    let mut queue: VecDeque<Rc<[usize]>> = VecDeque::new();
    store.insert(root.clone());
    queue.push_back(root);
    meter.set_tracked(1);
    while let Some(x) = queue.pop_front() {
        emit_ranks(sg, &x, meter, sink);
        if sink.is_closed() {
            break;
        }
        let mut scan = sg.scan(x.to_vec());
        while let Some((u, v)) = sg.next_exchange(&mut scan, Direction::All) {
            let y: Rc<[usize]> = Supergraph::apply(&scan.set, u, v).into();
            if !store.contains(&y) {
                store.insert(y.clone());
                queue.push_back(y);
            }
        }
        meter.set_tracked(store.len() as u64);
        meter.processed();
    }
    Ok(())
}

fn reverse_search_component<S: OutputSink>(
    sg: &mut Supergraph,
    meter: &mut Meter,
    sink: &mut S,
) -> Result<()> {
    let root: Vec<usize> = (0..sg.k()).collect();
    if !sg.is_connected(&root) {
        return Err(Error::Internal(
            "first k vertices of a DFS order are disconnected".into(),
        ));
    }
    meter.hold();
    let mut depth = 1usize;
    emit_ranks(sg, &root, meter, sink);
    let mut scan = sg.scan(root);
    while !sink.is_closed() {
        if let Some((u, v)) = sg.next_exchange(&mut scan, Direction::Up) {
            let child = Supergraph::apply(&scan.set, u, v);
            meter.hold();
            meter.stats.parent_calls += 1;
            let descend = sg.is_child(&child, u, v);
            meter.release();
            if descend {
                depth += 1;
                if !depth.is_multiple_of(2) {
                    emit_ranks(sg, &child, meter, sink);
                }
                // the parent's scan position is recomputed on the way back
                scan = sg.scan(child);
            }
            continue;
        }

        meter.processed();
        if depth.is_multiple_of(2) {
            emit_ranks(sg, &scan.set, meter, sink);
        }
        if depth == 1 {
            break;
        }
        meter.stats.parent_calls += 1;
        let (pu, pv) = sg.parent_exchange(&scan.set, None).ok_or_else(|| {
            Error::Internal(format!(
                "set {:?} is not the minimum yet has no smaller neighbor",
                sg.to_kset(&scan.set).sorted_labels()
            ))
        })?;
        let up = Supergraph::apply(&scan.set, pu, pv);
        meter.hold();
        // the child was reached from `up` by the exchange (pv, pu)
        scan = sg.scan_after(up, pv, pu);
        meter.release();
        depth -= 1;
    }
    meter.release();
    Ok(())
}

/// Breadth-first enumeration of `C(G;k)` for a connected graph `g`, keeping
/// every discovered set in an ordered store.
pub fn enumerate_bfs<S: OutputSink>(g: &Graph, k: usize, mut sink: S) -> Result<EnumStats> {
    let ord = check_connected_input(g, k)?;
    let mut sg = Supergraph::new(g, &ord, k)?;
    let mut meter = Meter::default();
    bfs_component(&mut sg, &mut meter, &mut sink)?;
    Ok(meter.finish())
}

/// Reverse-search enumeration of `C(G;k)` for a connected graph `g`.
///
/// Holds only the current set and its scan position. A node at odd depth
/// (the root has depth 1) is emitted on arrival, one at even depth when its
/// scan is exhausted, so at most two neighborhood generations separate
/// consecutive outputs.
pub fn enumerate_reverse_search<S: OutputSink>(
    g: &Graph,
    k: usize,
    mut sink: S,
) -> Result<EnumStats> {
    let ord = check_connected_input(g, k)?;
    let mut sg = Supergraph::new(g, &ord, k)?;
    let mut meter = Meter::default();
    reverse_search_component(&mut sg, &mut meter, &mut sink)?;
    Ok(meter.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Dfs,
    Bfs,
    Oracle,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dfs" => Ok(Engine::Dfs),
            "bfs" => Ok(Engine::Bfs),
            "oracle" => Ok(Engine::Oracle),
            _ => Err(Error::Contract(format!("unknown engine {s:?}"))),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Dfs => "dfs",
            Engine::Bfs => "bfs",
            Engine::Oracle => "oracle",
        })
    }
}

/// Runs `engine` on any graph: each component of at least `k` vertices is
/// enumerated with its own DFS ordering rooted at its smallest vertex.
pub fn enumerate_driver<S: OutputSink>(
    g: &Graph,
    k: usize,
    engine: Engine,
    sink: S,
) -> Result<EnumStats> {
    enumerate_driver_capped(g, k, engine, DEFAULT_MAX_SUBSETS, sink)
}

/// [`enumerate_driver`] with an explicit subset cap for the oracle engine.
pub fn enumerate_driver_capped<S: OutputSink>(
    g: &Graph,
    k: usize,
    engine: Engine,
    max_subsets: u128,
    mut sink: S,
) -> Result<EnumStats> {
    if k < 1 {
        return Err(Error::KOutOfRange { k, max: g.n() });
    }
    let mut meter = Meter::default();
    if engine == Engine::Oracle {
        if k <= g.n() {
            for set in enumerate_brute_force(g, k, max_subsets)? {
                sink.emit(&set);
                meter.output();
                if sink.is_closed() {
                    break;
                }
            }
        }
        return Ok(meter.finish());
    }
    for comp in connected_components(g) {
        if comp.len() < k || sink.is_closed() {
            continue;
        }
        let ord = dfs_ordering(g, comp[0])?;
        let mut sg = Supergraph::new(g, &ord, k)?;
        match engine {
            Engine::Dfs => reverse_search_component(&mut sg, &mut meter, &mut sink)?,
            Engine::Bfs => bfs_component(&mut sg, &mut meter, &mut sink)?,
            Engine::Oracle => unreachable!(),
        }
    }
    Ok(meter.finish())
}

/// A walk through the supergraph from one set to another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    pub steps: Vec<KSet>,
    /// Vertex whose common component grows once the sets intersect.
    pub anchor: Option<Vertex>,
}

fn component_within(g: &Graph, within: &[Vertex], start: Vertex) -> Vec<Vertex> {
    let mut comp = vec![start];
    let mut i = 0;
    while i < comp.len() {
        let v = comp[i];
        i += 1;
        for &w in g.neighbors(v) {
            if within.binary_search(&w).is_ok() && !comp.contains(&w) {
                comp.push(w);
            }
        }
    }
    comp.sort_unstable();
    comp
}

fn exchange(set: &[Vertex], add: Vertex, remove: Vertex) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = set.iter().copied().filter(|&w| w != remove).collect();
    out.push(add);
    out.sort_unstable();
    out
}

/// Constructive walk from `x` to `y` through single-vertex exchanges.
///
/// While the sets are disjoint, step along a shortest path towards `y`,
/// dropping a spanning-tree leaf. Once they meet, grow the component of the
/// intersection that holds the anchor `z` by one vertex of `y` per step.
pub fn connecting_path(g: &Graph, ord: &DfsOrdering, x: &KSet, y: &KSet) -> Result<Connection> {
    let k = x.len();
    if y.len() != k {
        return Err(Error::Contract("sets differ in size".into()));
    }
    for s in [x, y] {
        if !is_connected_subset(g, s.members())? {
            return Err(Error::Contract(
                "set does not induce a connected subgraph".into(),
            ));
        }
        s.lex_key(ord)?;
    }
    let target = y.sorted_labels();
    let mut cur = x.sorted_labels();
    let mut steps = vec![x.clone()];
    let mut anchor: Option<Vertex> = None;
    let rank = |v: Vertex| ord.rank(v).expect("ranked");

    while cur != target {
        let common: Vec<Vertex> = cur
            .iter()
            .copied()
            .filter(|v| target.binary_search(v).is_ok())
            .collect();
        let next = if common.is_empty() {
            let path = shortest_path_between_sets(g, &cur, &target)?;
            let (u0, u1) = (path[0], path[1]);
            let leaf = if k == 1 {
                u0
            } else {
                spanning_tree_leaf(g, &cur, u0)?
            };
            exchange(&cur, u1, leaf)
        } else {
            let z =
                *anchor.get_or_insert_with(|| *common.iter().min_by_key(|&&v| rank(v)).unwrap());
            let comp = component_within(g, &common, z);
            let mut grow: Vec<Vertex> = target
                .iter()
                .copied()
                .filter(|v| comp.binary_search(v).is_err())
                .filter(|&v| g.neighbors(v).iter().any(|w| comp.binary_search(w).is_ok()))
                .collect();
            grow.sort_unstable_by_key(|&v| rank(v));
            let first = *grow.first().ok_or_else(|| {
                Error::Internal("target set is not connected to the common part".into())
            })?;
            // Dropping a vertex outside Y keeps the sequence within n-k+1
            // sets. Without such a pair, fall back to a contracted-tree leaf.
            let outside = grow.iter().find_map(|&u| {
                cur.iter()
                    .copied()
                    .filter(|v| comp.binary_search(v).is_err() && target.binary_search(v).is_err())
                    .filter(|&v| is_connected_subset(g, &exchange(&cur, u, v)).unwrap_or(false))
                    .max_by_key(|&v| rank(v))
                    .map(|v| (u, v))
            });
            let (u, v) = match outside {
                Some(pair) => pair,
                None => (first, contracted_tree_leaf(g, &cur, &comp)?),
            };
            exchange(&cur, u, v)
        };
        if steps.len() > g.n() {
            return Err(Error::Internal(
                "connecting sequence failed to converge".into(),
            ));
        }
        steps.push(KSet::new(ord, next.iter().copied())?);
        cur = next;
    }
    Ok(Connection { steps, anchor })
}

pub fn connecting_sequence(g: &Graph, ord: &DfsOrdering, x: &KSet, y: &KSet) -> Result<Vec<KSet>> {
    Ok(connecting_path(g, ord, x, y)?.steps)
}
