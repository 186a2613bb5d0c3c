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

//! Randomized invariants over small connected graphs.

mod common;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use cisgen::{
    dfs_ordering, enumerate_bfs, enumerate_brute_force, enumerate_reverse_search,
    is_connected_subset, lex_compare, Graph, KSet, Supergraph,
};
use common::{induced_connected, is_connected};
use proptest::prelude::*;

/// Connected graphs on 1..=9 vertices: a random spanning tree plus extra edges.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9).prop_flat_map(|n| {
        let tree = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = proptest::collection::vec((0..n, 0..n), 0..=2 * n);
        (Just(n), tree, extra).prop_map(|(n, tree, extra)| {
            let mut edges: Vec<(usize, usize)> = tree
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_and_k() -> impl Strategy<Value = (Graph, usize)> {
    connected_graph().prop_flat_map(|g| {
        let n = g.n();
        (Just(g), 1..=n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn engines_agree_with_brute_force((g, k) in graph_and_k()) {
        prop_assert!(is_connected(&g));
        let oracle: BTreeSet<Vec<usize>> =
            enumerate_brute_force(&g, k, 1 << 20).unwrap().iter().map(|s| s.members().to_vec()).collect();
        let mut dfs = Vec::new();
        enumerate_reverse_search(&g, k, |s: &KSet| dfs.push(s.sorted_labels())).unwrap();
        let mut bfs = Vec::new();
        enumerate_bfs(&g, k, |s: &KSet| bfs.push(s.sorted_labels())).unwrap();
        prop_assert_eq!(dfs.len(), oracle.len());
        prop_assert_eq!(bfs.len(), oracle.len());
        prop_assert_eq!(dfs.into_iter().collect::<BTreeSet<_>>(), oracle.clone());
        prop_assert_eq!(bfs.into_iter().collect::<BTreeSet<_>>(), oracle);
    }

    #[test]
    fn neighborhoods_are_symmetric_exchanges((g, k) in graph_and_k()) {
        let ord = dfs_ordering(&g, 0).unwrap();
        prop_assert!(ord.is_dfs_order(&g));
        let mut sg = Supergraph::new(&g, &ord, k).unwrap();
        let x0 = sg.initial_node().unwrap();
        for set in enumerate_brute_force(&g, k, 1 << 20).unwrap() {
            let x = KSet::new(&ord, set.members().iter().copied()).unwrap();
            prop_assert_ne!(lex_compare(&ord, &x0, &x).unwrap(), Ordering::Greater);
            for y in sg.neighbors(&x).unwrap() {
                let labels = y.sorted_labels();
                prop_assert!(induced_connected(&g, &labels));
                prop_assert!(is_connected_subset(&g, y.members()).unwrap());
                if k > 1 {
                    let shared = labels.iter().filter(|v| x.contains(**v)).count();
                    prop_assert_eq!(shared, k - 1);
                }
                let back = sg.neighbors(&y).unwrap();
                prop_assert!(back.contains(&x), "{:?} not a neighbor of {:?}", x.sorted_labels(), labels);
            }
        }
    }

    #[test]
    fn parents_are_smaller_neighbors((g, k) in graph_and_k()) {
        let ord = dfs_ordering(&g, 0).unwrap();
        let mut sg = Supergraph::new(&g, &ord, k).unwrap();
        let x0 = sg.initial_node().unwrap();
        for set in enumerate_brute_force(&g, k, 1 << 20).unwrap() {
            let x = KSet::new(&ord, set.members().iter().copied()).unwrap();
            if x == x0 {
                prop_assert!(sg.parent(&x).is_err());
                continue;
            }
            let p = sg.parent(&x).unwrap();
            prop_assert_eq!(lex_compare(&ord, &p, &x).unwrap(), Ordering::Less);
            prop_assert!(sg.neighbors(&p).unwrap().contains(&x));
        }
    }

    #[test]
    fn dfs_ordering_is_deterministic(g in connected_graph(), root in 0usize..9) {
        let root = root % g.n();
        let a = dfs_ordering(&g, root).unwrap();
        let b = dfs_ordering(&g, root).unwrap();
        prop_assert_eq!(a.root(), root);
        prop_assert!(a.is_dfs_order(&g));
        prop_assert_eq!(a.vertices(), b.vertices());
    }
}
