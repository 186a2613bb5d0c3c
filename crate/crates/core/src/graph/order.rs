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

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Vertex;

const UNRANKED: usize = usize::MAX;

/// A vertex order over one connected component, fixing the lexicographic
/// order on vertex sets. Normally a DFS preorder; see [`DfsOrdering::from_sequence`]
/// for arbitrary orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DfsOrdering {
    rank: Vec<usize>,
    vertex_at: Vec<Vertex>,
    root: Vertex,
}

impl DfsOrdering {
    /// Uses `sequence` as the order as given, with no DFS check. Intended for
    /// exhibiting what goes wrong under non-DFS orders.
    pub fn from_sequence(g: &Graph, sequence: &[Vertex]) -> Result<Self> {
        let mut rank = vec![UNRANKED; g.n()];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange(v));
            }
            if rank[v] != UNRANKED {
                return Err(Error::Contract(format!("vertex {v} repeated in ordering")));
            }
            rank[v] = i;
        }
        let root = *sequence
            .first()
            .ok_or_else(|| Error::Contract("empty ordering".into()))?;
        Ok(Self {
            rank,
            vertex_at: sequence.to_vec(),
            root,
        })
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn len(&self) -> usize {
        self.vertex_at.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_at.is_empty()
    }

    pub fn rank(&self, v: Vertex) -> Option<usize> {
        self.rank.get(v).copied().filter(|&r| r != UNRANKED)
    }

    pub fn vertex_at(&self, r: usize) -> Vertex {
        self.vertex_at[r]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertex_at
    }

    pub(crate) fn rank_or_err(&self, v: Vertex) -> Result<usize> {
        self.rank(v).ok_or(Error::Unranked(v))
    }

    /// Whether every vertex after the first is adjacent to an earlier one and
    /// the order is a preorder of some depth-first traversal.
    pub fn is_dfs_order(&self, g: &Graph) -> bool {
        // Simulate: each vertex must be adjacent to the deepest vertex on the
        // current DFS stack that still has it as a neighbor, and every vertex
        // popped must have no unvisited neighbors left.
        let mut stack: Vec<Vertex> = vec![self.root];
        let mut visited = vec![false; g.n()];
        visited[self.root] = true;
        for &v in &self.vertex_at[1..] {
            loop {
                let Some(&top) = stack.last() else {
                    return false;
                };
                if g.has_edge(top, v) {
                    break;
                }
                if g.neighbors(top).iter().any(|&w| !visited[w]) {
                    return false;
                }
                stack.pop();
            }
            visited[v] = true;
            stack.push(v);
        }
        true
    }
}

/// Depth-first preorder of the component containing `root`, visiting
/// neighbors in ascending label order.
pub fn dfs_ordering(g: &Graph, root: Vertex) -> Result<DfsOrdering> {
    if root >= g.n() {
        return Err(Error::VertexOutOfRange(root));
    }
    let mut rank = vec![UNRANKED; g.n()];
    let mut vertex_at = vec![root];
    rank[root] = 0;
    let mut stack: Vec<(Vertex, usize)> = vec![(root, 0)];
    while let Some(frame) = stack.last_mut() {
        let (v, pos) = *frame;
        let adj = g.neighbors(v);
        if pos == adj.len() {
            stack.pop();
            continue;
        }
        frame.1 += 1;
        let w = adj[pos];
        if rank[w] == UNRANKED {
            rank[w] = vertex_at.len();
            vertex_at.push(w);
            stack.push((w, 0));
        }
    }
    Ok(DfsOrdering {
        rank,
        vertex_at,
        root,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_graph, GraphFamily};

    #[test]
    fn preorder_examples() {
        let p5 = generate_graph(&GraphFamily::Path(5)).unwrap();
        assert_eq!(dfs_ordering(&p5, 0).unwrap().vertices(), &[0, 1, 2, 3, 4]);

        let g = Graph::from_edges(4, [(0, 2), (0, 1), (2, 3)]).unwrap();
        assert_eq!(dfs_ordering(&g, 0).unwrap().vertices(), &[0, 1, 2, 3]);

        let star = generate_graph(&GraphFamily::Star(5)).unwrap();
        let ord = dfs_ordering(&star, 0).unwrap();
        assert_eq!(ord.vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(ord.rank(0), Some(0));
    }

    #[test]
    fn covers_only_the_root_component() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        let ord = dfs_ordering(&g, 3).unwrap();
        assert_eq!(ord.vertices(), &[3, 4]);
        assert_eq!(ord.rank(0), None);
        assert!(dfs_ordering(&g, 5).is_err());
    }

    #[test]
    fn deterministic_and_valid() {
        let g = generate_graph(&GraphFamily::Gnp {
            n: 15,
            p: 0.3,
            seed: 7,
        })
        .unwrap();
        let a = dfs_ordering(&g, 0).unwrap();
        let b = dfs_ordering(&g, 0).unwrap();
        assert_eq!(a, b);
        assert!(a.is_dfs_order(&g));
        for r in 0..a.len() {
            assert_eq!(a.rank(a.vertex_at(r)), Some(r));
        }
        for i in 1..a.len() {
            let v = a.vertex_at(i);
            assert!((0..i).any(|j| g.has_edge(a.vertex_at(j), v)));
        }
    }

    #[test]
    fn counterexample_labeling_is_not_dfs() {
        let g = generate_graph(&GraphFamily::CounterexamplePath { n: 7, k: 2 }).unwrap();
        let identity: Vec<Vertex> = (0..7).collect();
        let ord = DfsOrdering::from_sequence(&g, &identity).unwrap();
        assert!(!ord.is_dfs_order(&g));
        assert!(dfs_ordering(&g, 0).unwrap().is_dfs_order(&g));
    }
}
