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

//! Enumeration of the connected induced subgraphs with exactly `k` vertices,
//! with polynomial delay between outputs.
//!
//! The enumeration walks a supergraph whose nodes are the connected k-sets
//! and whose arcs exchange one vertex. Two engines are provided:
//!
//! * [`enumerate_reverse_search`] keeps only the current set and uses a
//!   parent function to avoid revisits, so its working memory is linear in
//!   the graph size;
//! * [`enumerate_bfs`] keeps every set discovered in an ordered store.
//!
//! [`enumerate_driver`] handles disconnected inputs, and the [`oracle`] and
//! [`verify`] modules hold brute-force ground truth for testing.

pub mod cli;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod supergraph;
pub mod traversal;
pub mod union_find;
pub mod verify;

pub type Vertex = usize;

pub use error::{Error, Result};
pub use graph::{
    connected_components, dfs_ordering, generate_graph, is_connected_subset, parse_edge_list,
    read_edge_list, shortest_path_between_sets, spanning_tree_leaf, DfsOrdering, Graph,
    GraphFamily,
};
pub use oracle::{
    build_supergraph, check_strong_connectivity, count_upper_bound, enumerate_brute_force,
    ExplicitSupergraph, DEFAULT_MAX_SUBSETS,
};
pub use supergraph::{initial_node, lex_compare, neighbors, parent, KSet, LexKey, Supergraph};
pub use traversal::{
    connecting_path, connecting_sequence, enumerate_bfs, enumerate_driver, enumerate_driver_capped,
    enumerate_reverse_search, Connection, Engine, EnumStats, OutputSink,
};
pub use union_find::DisjointSet;
