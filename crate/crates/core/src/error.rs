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

use thiserror::Error;

use crate::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    Validation(String),

    #[error("invalid generator parameters: {0}")]
    Generator(String),

    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),

    #[error("vertex {0} is not covered by the ordering")]
    Unranked(Vertex),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("k = {k} out of range (must satisfy 1 <= k <= {max})")]
    KOutOfRange { k: usize, max: usize },

    #[error("set of size 1 has no spanning-tree leaf other than the excluded vertex")]
    NoLeaf,

    #[error("the lexicographically smallest set has no parent")]
    NoParent,

    #[error("max degree {0} leaves the count bound undefined (needs >= 2)")]
    UndefinedBound(usize),

    #[error("instance needs {subsets} subsets, above the cap of {cap}")]
    ScaleGuard { subsets: u128, cap: u128 },

    /// A set other than the minimum has no smaller neighbor. Never expected on
    /// a DFS ordering; reaching this means a bug or a non-DFS order.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
