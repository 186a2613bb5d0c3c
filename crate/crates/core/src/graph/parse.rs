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

//! Plain-text edge lists: `#` comments, one `u v` pair per line, and an
//! optional leading `p <n> <m>` header that fixes the vertex count.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Vertex;

fn parse_label(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, found {tok:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    read_edge_list(text.as_bytes())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut header_n: Option<usize> = None;
    let mut seen_content = false;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut max_label: Option<usize> = None;

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: lineno,
            msg: e.to_string(),
        })?;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks[0] == "p" {
            if seen_content {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "header must precede all edges".into(),
                });
            }
            // accept both "p <n> <m>" and the DIMACS "p edge <n> <m>"
            let nums: Vec<&str> = match toks.get(1) {
                Some(t) if t.parse::<usize>().is_err() => toks[2..].to_vec(),
                _ => toks[1..].to_vec(),
            };
            if nums.len() != 2 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "header must read \"p <n> <m>\"".into(),
                });
            }
            header_n = Some(parse_label(nums[0], lineno)?);
            parse_label(nums[1], lineno)?;
            seen_content = true;
            continue;
        }
        seen_content = true;
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected two labels, found {} tokens", toks.len()),
            });
        }
        let u = parse_label(toks[0], lineno)?;
        let v = parse_label(toks[1], lineno)?;
        if u == v {
            return Err(Error::Validation(format!(
                "self-loop at vertex {u} (line {lineno})"
            )));
        }
        if let Some(n) = header_n {
            if u >= n || v >= n {
                return Err(Error::Validation(format!(
                    "edge {u} {v} on line {lineno} exceeds the declared vertex count {n}"
                )));
            }
        }
        max_label = Some(max_label.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }

    let n = header_n.unwrap_or_else(|| max_label.map_or(0, |m| m + 1));
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_path() {
        let g = parse_edge_list("0 1\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn duplicates_collapse() {
        assert_eq!(parse_edge_list("0 1\n0 1\n").unwrap().m(), 1);
        assert_eq!(parse_edge_list("0 1\n1 0\n").unwrap().m(), 1);
    }

    #[test]
    fn self_loop_rejected() {
        assert!(matches!(
            parse_edge_list("0 0\n"),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn comments_blank_lines_and_header() {
        let g = parse_edge_list("# a graph\n\np 5 1\n  # edge below\n0 3\n").unwrap();
        assert_eq!((g.n(), g.m()), (5, 1));
        let g = parse_edge_list("p edge 4 1\n2 3\n").unwrap();
        assert_eq!(g.n(), 4);
    }

    #[test]
    fn header_bound_enforced() {
        assert!(matches!(
            parse_edge_list("p 3 1\n0 3\n"),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn malformed_reports_line() {
        assert_eq!(
            parse_edge_list("0 1\n\n1 x\n").unwrap_err(),
            Error::Parse {
                line: 3,
                msg: "expected a non-negative integer, found \"x\"".into()
            }
        );
        assert!(matches!(
            parse_edge_list("0 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("-1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\np 3 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn empty_input_is_empty_graph() {
        assert_eq!(parse_edge_list("# nothing\n").unwrap().n(), 0);
    }
}
