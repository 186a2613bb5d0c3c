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

//! Disjoint-set forest with union by size and path compression.

#[derive(Clone, Debug)]
pub struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    /// Resets to `n` singletons, keeping the allocation.
    pub fn reset(&mut self, n: usize) {
        self.parent.clear();
        self.parent.extend(0..n);
        self.size.clear();
        self.size.resize(n, 1);
        self.components = n;
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`. Returns false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn component_count(&self) -> usize {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn union_merges_once() {
        let mut ds = DisjointSet::new(4);
        assert_eq!(ds.component_count(), 4);
        assert!(ds.union(0, 1));
        assert!(!ds.union(1, 0));
        assert_eq!(ds.component_count(), 3);
        assert!(ds.union(2, 3));
        assert!(ds.union(0, 3));
        assert_eq!(ds.component_count(), 1);
        assert!(ds.same(1, 2));
    }

    #[test]
    fn reset_restores_singletons() {
        let mut ds = DisjointSet::new(3);
        ds.union(0, 2);
        ds.reset(5);
        assert_eq!(ds.len(), 5);
        assert_eq!(ds.component_count(), 5);
        assert!(!ds.same(0, 2));
    }

    proptest! {
        #[test]
        fn count_matches_distinct_roots(n in 1usize..30, ops in proptest::collection::vec((0usize..30, 0usize..30), 0..60)) {
            let mut ds = DisjointSet::new(n);
            for (a, b) in ops {
                let (a, b) = (a % n, b % n);
                let before = ds.component_count();
                let merged = ds.union(a, b);
                prop_assert_eq!(ds.component_count(), if merged { before - 1 } else { before });
            }
            let roots: std::collections::BTreeSet<usize> = (0..n).map(|x| ds.find(x)).collect();
            prop_assert_eq!(roots.len(), ds.component_count());
            for x in 0..n {
                let r = ds.find(x);
                prop_assert_eq!(ds.find(r), r);
            }
        }
    }
}
