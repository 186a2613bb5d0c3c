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

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Vertex;

/// Named graph families used for test corpora and the CLI `--gen` flag.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphFamily {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Star on `n` vertices: center 0, leaves `1..n`.
    Star(usize),
    Grid(usize, usize),
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// Path whose vertices, 1-based, appear in the order
    /// `1, 2, ..., k, n, k+1, ..., n-1`; shifted to 0-based labels.
    CounterexamplePath {
        n: usize,
        k: usize,
    },
}

fn need_positive(name: &str, n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::Generator(format!("{name} needs n >= 1")));
    }
    Ok(())
}

fn path_edges(order: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    order.windows(2).map(|w| (w[0], w[1])).collect()
}

pub fn generate_graph(family: &GraphFamily) -> Result<Graph> {
    use GraphFamily::*;
    match *family {
        Path(n) => {
            need_positive("path", n)?;
            Graph::from_edges(n, path_edges(&(0..n).collect::<Vec<_>>()))
        }
        Cycle(n) => {
            if n < 3 {
                return Err(Error::Generator("cycle needs n >= 3".into()));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Complete(n) => {
            need_positive("complete", n)?;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Star(n) => {
            need_positive("star", n)?;
            Graph::from_edges(n, (1..n).map(|v| (0, v)))
        }
        Grid(r, c) => {
            if r < 1 || c < 1 {
                return Err(Error::Generator("grid needs r, c >= 1".into()));
            }
            let id = |i: usize, j: usize| i * c + j;
            let mut edges = Vec::new();
            for i in 0..r {
                for j in 0..c {
                    if j + 1 < c {
                        edges.push((id(i, j), id(i, j + 1)));
                    }
                    if i + 1 < r {
                        edges.push((id(i, j), id(i + 1, j)));
                    }
                }
            }
            Graph::from_edges(r * c, edges)
        }
        Gnp { n, p, seed } => {
            need_positive("gnp", n)?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Generator(format!("gnp needs p in [0, 1], got {p}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
        CounterexamplePath { n, k } => {
            if k < 1 || n <= 2 * k + 1 {
                return Err(Error::Generator(format!(
                    "counterexample path needs k >= 1 and n > 2k+1, got n={n}, k={k}"
                )));
            }
            Graph::from_edges(n, path_edges(&GraphFamily::counterexample_path_order(n, k)))
        }
    }
}

impl GraphFamily {
    /// Order of the vertices along the path for [`GraphFamily::CounterexamplePath`].
    pub fn counterexample_path_order(n: usize, k: usize) -> Vec<Vertex> {
        let mut order: Vec<Vertex> = (0..k).collect();
        order.push(n - 1);
        order.extend(k..n - 1);
        order
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphFamily::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Star(n) => write!(f, "star:{n}"),
            Grid(r, c) => write!(f, "grid:{r}:{c}"),
            Gnp { n, p, seed } => write!(f, "gnp:{n}:{p}:{seed}"),
            CounterexamplePath { n, k } => write!(f, "counterexample-path:{n}:{k}"),
        }
    }
}

/// Parses `name:arg1:arg2...`. A `gnp` spec without a seed gets seed 0;
/// callers with a separate seed source can use [`GraphFamily::parse_with_seed`].
impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_with_seed(s, 0)
    }
}

impl GraphFamily {
    pub fn parse_with_seed(s: &str, default_seed: u64) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Generator(format!("cannot parse generator spec {s:?}"));
        let int = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .ok_or_else(bad)?
                .parse::<usize>()
                .map_err(|_| bad())
        };
        let arity = |want: usize| -> Result<()> {
            if parts.len() == want + 1 {
                Ok(())
            } else {
                Err(bad())
            }
        };
        let fam = match parts[0] {
            "path" => {
                arity(1)?;
                GraphFamily::Path(int(1)?)
            }
            "cycle" => {
                arity(1)?;
                GraphFamily::Cycle(int(1)?)
            }
            "complete" => {
                arity(1)?;
                GraphFamily::Complete(int(1)?)
            }
            "star" => {
                arity(1)?;
                GraphFamily::Star(int(1)?)
            }
            "grid" => {
                arity(2)?;
                GraphFamily::Grid(int(1)?, int(2)?)
            }
            "gnp" => {
                if parts.len() != 3 && parts.len() != 4 {
                    return Err(bad());
                }
                let p = parts[2].parse::<f64>().map_err(|_| bad())?;
                let seed = match parts.get(3) {
                    Some(t) => t.parse::<u64>().map_err(|_| bad())?,
                    None => default_seed,
                };
                GraphFamily::Gnp {
                    n: int(1)?,
                    p,
                    seed,
                }
            }
            "counterexample-path" | "counterexample_path" => {
                arity(2)?;
                GraphFamily::CounterexamplePath {
                    n: int(1)?,
                    k: int(2)?,
                }
            }
            _ => return Err(bad()),
        };
        Ok(fam)
    }
}
