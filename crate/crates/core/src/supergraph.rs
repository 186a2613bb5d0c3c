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

//! The exchange supergraph on connected k-sets: lexicographic order, the
//! minimum node, neighborhoods and the reverse-search parent function.
//!
//! Internally every set is held as its ascending vector of ranks under the
//! vertex ordering, so the lexicographic order is plain `Vec` comparison and
//! `X - v + u` precedes `X` exactly when `rank(u) < rank(v)`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{DfsOrdering, Graph};
use crate::union_find::DisjointSet;
use crate::Vertex;

/// A set of `k` distinct vertices, members sorted by rank in the ordering
/// that built it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KSet {
    members: Vec<Vertex>,
}

impl KSet {
    pub fn new<I: IntoIterator<Item = Vertex>>(ord: &DfsOrdering, members: I) -> Result<Self> {
        let mut ranks = members
            .into_iter()
            .map(|v| ord.rank_or_err(v))
            .collect::<Result<Vec<_>>>()?;
        ranks.sort_unstable();
        if ranks.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Contract("set has repeated members".into()));
        }
        Ok(Self::from_ranks(ord, &ranks))
    }

    /// A set ordered by label, for contexts without a vertex ordering.
    pub fn from_labels<I: IntoIterator<Item = Vertex>>(members: I) -> Self {
        let mut members: Vec<Vertex> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    pub(crate) fn from_ranks(ord: &DfsOrdering, ranks: &[usize]) -> Self {
        Self {
            members: ranks.iter().map(|&r| ord.vertex_at(r)).collect(),
        }
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.contains(&v)
    }

    /// Members in ascending label order.
    pub fn sorted_labels(&self) -> Vec<Vertex> {
        let mut out = self.members.clone();
        out.sort_unstable();
        out
    }

    pub fn lex_key(&self, ord: &DfsOrdering) -> Result<LexKey> {
        let mut ranks = self
            .members
            .iter()
            .map(|&v| ord.rank_or_err(v))
            .collect::<Result<Vec<_>>>()?;
        ranks.sort_unstable();
        Ok(LexKey(ranks))
    }
}

/// Ascending rank sequence of a set. Its derived `Ord` is the lexicographic
/// order on equal-size sets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LexKey(pub Vec<usize>);

pub fn lex_compare(ord: &DfsOrdering, x: &KSet, y: &KSet) -> Result<Ordering> {
    if x.len() != y.len() {
        return Err(Error::Contract(format!(
            "cannot compare sets of sizes {} and {}",
            x.len(),
            y.len()
        )));
    }
    Ok(x.lex_key(ord)?.cmp(&y.lex_key(ord)?))
}

/// Cursor over the exchange pairs `(u, v)` of one node, `u` ascending over
/// the boundary and `v` descending over the members, all in rank space.
#[derive(Clone, Debug)]
pub(crate) struct NeighborScan {
    pub(crate) set: Vec<usize>,
    boundary: Vec<usize>,
    // cut[i]: removing set[i] disconnects G[set]
    cut: Vec<bool>,
    ui: usize,
    // next member to try is set[vi - 1]; 0 means advance u
    vi: usize,
}

/// Which exchanges a scan yields.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Direction {
    /// Every exchange.
    All,
    /// Only `X - v + u` with `rank(v) < rank(u)`, i.e. successors of `X`.
    Up,
}

#[derive(Debug)]
struct Scratch {
    mark: Vec<u32>,
    slot: Vec<usize>,
    epoch: u32,
    ds: DisjointSet,
    members: Vec<usize>,
    boundary: Vec<usize>,
    cuts: CutScratch,
}

/// Buffers for articulation-point search on an induced subgraph.
#[derive(Debug, Default)]
struct CutScratch {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    disc: Vec<usize>,
    low: Vec<usize>,
    stack: Vec<(usize, usize, usize)>,
    cut: Vec<bool>,
}

/// Supergraph operators for one graph, one vertex ordering and one `k`.
///
/// Holds the rank-relabelled adjacency and per-call scratch, so repeated
/// queries allocate little. Not `Sync`; create one per thread.
#[derive(Debug)]
pub struct Supergraph<'a> {
    g: &'a Graph,
    ord: &'a DfsOrdering,
    k: usize,
    adj: Vec<Vec<usize>>,
    scratch: Scratch,
}

impl<'a> Supergraph<'a> {
    /// `ord` must cover a union of whole components of `g`.
    pub fn new(g: &'a Graph, ord: &'a DfsOrdering, k: usize) -> Result<Self> {
        if k < 1 || k > ord.len() {
            return Err(Error::KOutOfRange { k, max: ord.len() });
        }
        let mut adj = Vec::with_capacity(ord.len());
        for &v in ord.vertices() {
            let mut list = g
                .neighbors(v)
                .iter()
                .map(|&w| {
                    ord.rank(w).ok_or_else(|| {
                        Error::Contract(format!("ordering omits vertex {w}, a neighbor of {v}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            list.sort_unstable();
            adj.push(list);
        }
        let n = ord.len();
        Ok(Self {
            g,
            ord,
            k,
            adj,
            scratch: Scratch {
                mark: vec![0; n],
                slot: vec![0; n],
                epoch: 0,
                ds: DisjointSet::new(k),
                members: Vec::with_capacity(k),
                boundary: Vec::new(),
                cuts: CutScratch::default(),
            },
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn ordering(&self) -> &DfsOrdering {
        self.ord
    }

    pub(crate) fn to_kset(&self, ranks: &[usize]) -> KSet {
        KSet::from_ranks(self.ord, ranks)
    }

    /// Rank vector of `x`, checking size and induced connectivity.
    pub(crate) fn ranks_of(&mut self, x: &KSet) -> Result<Vec<usize>> {
        if x.len() != self.k {
            return Err(Error::Contract(format!(
                "set has {} members, expected {}",
                x.len(),
                self.k
            )));
        }
        let LexKey(ranks) = x.lex_key(self.ord)?;
        if ranks.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Contract("set has repeated members".into()));
        }
        if !self.is_connected(&ranks) {
            return Err(Error::Contract(
                "set does not induce a connected subgraph".into(),
            ));
        }
        Ok(ranks)
    }

    fn next_epoch(&mut self) -> u32 {
        let s = &mut self.scratch;
        s.epoch = s.epoch.wrapping_add(1);
        if s.epoch == 0 {
            s.mark.iter_mut().for_each(|m| *m = 0);
            s.epoch = 1;
        }
        s.epoch
    }

    /// Union-find connectivity of the subgraph induced on `set` (rank space).
    pub(crate) fn is_connected(&mut self, set: &[usize]) -> bool {
        let epoch = self.next_epoch();
        let Scratch { mark, slot, ds, .. } = &mut self.scratch;
        for (i, &r) in set.iter().enumerate() {
            mark[r] = epoch;
            slot[r] = i;
        }
        ds.reset(set.len());
        for (i, &r) in set.iter().enumerate() {
            for &w in &self.adj[r] {
                if w > r && mark[w] == epoch {
                    ds.union(i, slot[w]);
                    if ds.component_count() == 1 {
                        return true;
                    }
                }
            }
        }
        ds.component_count() == 1
    }

    /// Vertices outside `set` adjacent to it, ascending.
    pub(crate) fn boundary(&mut self, set: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        self.boundary_into(set, usize::MAX, &mut out);
        out
    }

    /// Boundary vertices of rank at most `below`, ascending, written to `out`.
    fn boundary_into(&mut self, set: &[usize], below: usize, out: &mut Vec<usize>) {
        out.clear();
        let epoch = self.next_epoch();
        let mark = &mut self.scratch.mark;
        for &r in set {
            mark[r] = epoch;
        }
        for &r in set {
            for &w in &self.adj[r] {
                if w <= below && mark[w] != epoch {
                    mark[w] = epoch;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
    }

    /// Articulation points of `G[set]`, by position in `set`.
    pub(crate) fn cut_vertices(&mut self, set: &[usize]) -> Vec<bool> {
        self.fill_cut_vertices(set);
        self.scratch.cuts.cut.clone()
    }

    /// Writes the articulation points of `G[set]` into `scratch.cuts.cut`.
    fn fill_cut_vertices(&mut self, set: &[usize]) {
        let k = set.len();
        let epoch = self.next_epoch();
        let Scratch {
            mark, slot, cuts, ..
        } = &mut self.scratch;
        let CutScratch {
            offsets,
            targets,
            disc,
            low,
            stack,
            cut,
        } = cuts;
        cut.clear();
        cut.resize(k, false);
        if k < 3 {
            return;
        }
        for (i, &r) in set.iter().enumerate() {
            mark[r] = epoch;
            slot[r] = i;
        }
        offsets.clear();
        targets.clear();
        offsets.push(0);
        for &r in set {
            targets.extend(
                self.adj[r]
                    .iter()
                    .filter(|&&w| mark[w] == epoch)
                    .map(|&w| slot[w]),
            );
            offsets.push(targets.len());
        }
        disc.clear();
        disc.resize(k, usize::MAX);
        low.clear();
        low.resize(k, 0);
        stack.clear();
        let mut time = 0;
        let mut root_children = 0;
        // frames: (vertex, parent, next neighbor position)
        stack.push((0, usize::MAX, offsets[0]));
        disc[0] = 0;
        while let Some(frame) = stack.last_mut() {
            let (v, p, pos) = *frame;
            if pos < offsets[v + 1] {
                frame.2 += 1;
                let w = targets[pos];
                if disc[w] == usize::MAX {
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, v, offsets[w]));
                } else if w != p {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if p != usize::MAX {
                    low[p] = low[p].min(low[v]);
                    if p != 0 && low[v] >= disc[p] {
                        cut[p] = true;
                    }
                }
            }
        }
        cut[0] = root_children > 1;
    }

    /// Whether `set - v + u` induces a connected subgraph, for `u` on the
    /// boundary of `set` and `v = set[vi]`. `cut` is [`Self::cut_vertices`]
    /// of `set`.
    pub(crate) fn exchange_is_connected_at(
        &mut self,
        set: &[usize],
        cut: &[bool],
        u: usize,
        vi: usize,
    ) -> bool {
        if self.k == 1 {
            return true;
        }
        let v = set[vi];
        if !cut[vi] {
            // G[set - v] is connected, so only u's attachment matters
            let epoch = self.next_epoch();
            let mark = &mut self.scratch.mark;
            for &r in set {
                mark[r] = epoch;
            }
            return self.adj[u].iter().any(|&w| w != v && mark[w] == epoch);
        }
        self.exchange_is_connected(set, u, v)
    }

    /// Whether `set - v + u` induces a connected subgraph, for `u` on the
    /// boundary of `set` and `v` in `set`. Always runs the union-find check.
    pub(crate) fn exchange_is_connected(&mut self, set: &[usize], u: usize, v: usize) -> bool {
        if self.k == 1 {
            return true;
        }
        let epoch = self.next_epoch();
        {
            let mark = &mut self.scratch.mark;
            for &r in set {
                mark[r] = epoch;
            }
            // u must touch set - v, otherwise it would be isolated
            if !self.adj[u].iter().any(|&w| w != v && mark[w] == epoch) {
                return false;
            }
        }
        let mut members = std::mem::take(&mut self.scratch.members);
        members.clear();
        members.extend(set.iter().copied().filter(|&r| r != v));
        members.push(u);
        let connected = self.is_connected(&members);
        self.scratch.members = members;
        connected
    }

    pub(crate) fn apply(set: &[usize], u: usize, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().copied().filter(|&r| r != v).collect();
        let at = out.partition_point(|&r| r < u);
        out.insert(at, u);
        out
    }

    pub(crate) fn scan(&mut self, set: Vec<usize>) -> NeighborScan {
        let boundary = self.boundary(&set);
        let cut = self.cut_vertices(&set);
        let vi = set.len();
        NeighborScan {
            set,
            boundary,
            cut,
            ui: 0,
            vi,
        }
    }

    /// A scan of `set` positioned just after the exchange `(u, v)`.
    pub(crate) fn scan_after(&mut self, set: Vec<usize>, u: usize, v: usize) -> NeighborScan {
        let mut scan = self.scan(set);
        scan.ui = scan.boundary.binary_search(&u).expect("u on the boundary");
        scan.vi = scan.set.binary_search(&v).expect("v in the set");
        scan
    }

    pub(crate) fn next_exchange(
        &mut self,
        scan: &mut NeighborScan,
        dir: Direction,
    ) -> Option<(usize, usize)> {
        loop {
            let u = *scan.boundary.get(scan.ui)?;
            if scan.vi == 0 {
                scan.ui += 1;
                scan.vi = scan.set.len();
                continue;
            }
            scan.vi -= 1;
            let v = scan.set[scan.vi];
            if dir == Direction::Up && v > u {
                // remaining members of this round are smaller; jump to them
                scan.vi = scan.set.partition_point(|&r| r < u);
                continue;
            }
            if self.exchange_is_connected_at(&scan.set, &scan.cut, u, scan.vi) {
                return Some((u, v));
            }
        }
    }

    /// First exchange `(u, v)` with `rank(u) < rank(v)` in scan order, giving
    /// the parent `set - v + u`. Stops once `u` exceeds `u_limit`.
    pub(crate) fn parent_exchange(
        &mut self,
        set: &[usize],
        u_limit: Option<usize>,
    ) -> Option<(usize, usize)> {
        let top = *set.last()?;
        let below = u_limit.map_or(top, |lim| lim.min(top));
        let mut boundary = std::mem::take(&mut self.scratch.boundary);
        self.boundary_into(set, below, &mut boundary);
        let mut found = None;
        'scan: for &u in &boundary {
            for &v in set.iter().rev() {
                if v < u {
                    break;
                }
                if self.exchange_is_connected(set, u, v) {
                    found = Some((u, v));
                    break 'scan;
                }
            }
        }
        self.scratch.boundary = boundary;
        found
    }

    /// Whether `child`, reached from `set` by the exchange `(u, v)`, has `set`
    /// as its parent.
    pub(crate) fn is_child(&mut self, child: &[usize], u: usize, v: usize) -> bool {
        // from the child's side the exchange back is (v, u)
        self.parent_exchange(child, Some(v)) == Some((v, u))
    }

    /// The lexicographically smallest connected k-set: the first k vertices of
    /// the ordering.
    pub fn initial_node(&mut self) -> Result<KSet> {
        let ranks: Vec<usize> = (0..self.k).collect();
        if !self.is_connected(&ranks) {
            return Err(Error::Contract(
                "the first k vertices of the ordering are not connected".into(),
            ));
        }
        Ok(self.to_kset(&ranks))
    }

    pub fn neighbors(&mut self, x: &KSet) -> Result<Vec<KSet>> {
        let ranks = self.ranks_of(x)?;
        let mut scan = self.scan(ranks);
        let mut out = Vec::new();
        while let Some((u, v)) = self.next_exchange(&mut scan, Direction::All) {
            out.push(self.to_kset(&Self::apply(&scan.set, u, v)));
        }
        Ok(out)
    }

    pub fn parent(&mut self, x: &KSet) -> Result<KSet> {
        let ranks = self.ranks_of(x)?;
        if ranks.iter().enumerate().all(|(i, &r)| i == r) {
            return Err(Error::NoParent);
        }
        let (u, v) = self.parent_exchange(&ranks, None).ok_or_else(|| {
            Error::Internal(format!(
                "set {:?} is not the minimum yet has no smaller neighbor",
                x.sorted_labels()
            ))
        })?;
        Ok(self.to_kset(&Self::apply(&ranks, u, v)))
    }
}

pub fn initial_node(g: &Graph, ord: &DfsOrdering, k: usize) -> Result<KSet> {
    Supergraph::new(g, ord, k)?.initial_node()
}

/// Exchange neighbors of `x`, in scan order (`u` ascending, then `v` descending).
pub fn neighbors(g: &Graph, ord: &DfsOrdering, x: &KSet) -> Result<Vec<KSet>> {
    Supergraph::new(g, ord, x.len())?.neighbors(x)
}

/// Reverse-search parent of `x`. `x0` is the minimum node, which has none.
pub fn parent(g: &Graph, ord: &DfsOrdering, x: &KSet, x0: &KSet) -> Result<KSet> {
    if x.len() == x0.len() && lex_compare(ord, x, x0)? == Ordering::Equal {
        return Err(Error::NoParent);
    }
    Supergraph::new(g, ord, x.len())?.parent(x)
}
