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

//! Simple undirected graphs, their 0/1 adjacency matrices, and the
//! plain-text edge-list format.
//!
//! The edge-list format is line oriented:
//!
//! ```text
//! # optional comments anywhere
//! n 3
//! 0 1
//! 1 2
//! ```
//!
//! Node ids are 0-based.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// An immutable simple undirected graph on nodes `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    // normalized so that u < v
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from `n` and an edge sequence. Pair order is
    /// normalized and repeated edges collapse into one.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n < 1 {
            return Err(Error::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: set, adj })
    }

    /// `n` isolated nodes.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// True iff every node is reachable from node 0.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn to_adjacency(&self) -> AdjacencyMatrix {
        let mut cells = vec![0u8; self.n * self.n];
        for &(u, v) in &self.edges {
            cells[u * self.n + v] = 1;
            cells[v * self.n + u] = 1;
        }
        AdjacencyMatrix { n: self.n, cells }
    }

    pub fn from_adjacency(matrix: &AdjacencyMatrix) -> Result<Self> {
        matrix.validate()?;
        let n = matrix.n;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| matrix.get(u, v) == 1);
        Self::new(n, edges)
    }

    /// Serializes to the edge-list format. Each comment becomes one `# `
    /// line ahead of the header.
    pub fn to_edge_list(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            for line in c.lines() {
                let _ = writeln!(out, "# {line}");
            }
        }
        let _ = writeln!(out, "n {}", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Parses the edge-list format. Blank lines are ignored alongside comments.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if tokens.len() != 2 || tokens[0] != "n" {
                    return Err(Error::MissingHeader);
                }
                let count = parse_id(tokens[1], line_no)?;
                n = Some(count);
            }
            Some(_) => {
                if tokens.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected `<u> <v>`, found {line:?}"),
                    });
                }
                edges.push((parse_id(tokens[0], line_no)?, parse_id(tokens[1], line_no)?));
            }
        }
    }
    let n = n.ok_or(Error::MissingHeader)?;
    Graph::new(n, edges)
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("{token:?} is not a non-negative integer"),
    })
}

/// Dense symmetric 0/1 matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    cells: Vec<u8>,
}

impl AdjacencyMatrix {
    /// Wraps rows without checking them; `Graph::from_adjacency` validates.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidAdjacency("matrix is not square".into()));
        }
        Ok(AdjacencyMatrix {
            n,
            cells: rows.concat(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.cells[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.cells[i * self.n..(i + 1) * self.n]
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.n {
            if self.get(i, i) != 0 {
                return Err(Error::InvalidAdjacency(format!("nonzero diagonal at {i}")));
            }
            for j in 0..self.n {
                let c = self.get(i, j);
                if c > 1 {
                    return Err(Error::InvalidAdjacency(format!("cell ({i}, {j}) = {c}")));
                }
                if c != self.get(j, i) {
                    return Err(Error::InvalidAdjacency(format!("asymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binary_tree_15() -> Graph {
        Graph::new(15, (1..15).map(|c| ((c - 1) / 2, c))).unwrap()
    }

    #[test]
    fn single_edge() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degrees(), vec![1, 1]);
    }

    #[test]
    fn reversed_pair_is_deduplicated() {
        let g = Graph::new(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn binary_tree_degree_sequence() {
        let g = binary_tree_15();
        assert_eq!(g.edge_count(), 14);
        let d = g.degrees();
        assert_eq!(d.iter().filter(|&&x| x == 2).count(), 1);
        assert_eq!(d.iter().filter(|&&x| x == 3).count(), 6);
        assert_eq!(d.iter().filter(|&&x| x == 1).count(), 8);
        assert_eq!(d[0], 2);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(0, []), Err(Error::EmptyGraph));
        assert_eq!(Graph::new(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::EndpointOutOfRange { u: 0, v: 2, n: 2 })
        );
    }

    #[test]
    fn adjacency_matrices() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap().to_adjacency();
        assert_eq!(k2.row(0), &[0, 1]);
        assert_eq!(k2.row(1), &[1, 0]);

        let empty = Graph::empty(3).unwrap().to_adjacency();
        assert!((0..3).all(|i| empty.row(i).iter().all(|&c| c == 0)));

        let tree = binary_tree_15().to_adjacency();
        let mut row0 = vec![0u8; 15];
        row0[1] = 1;
        row0[2] = 1;
        assert_eq!(tree.row(0), row0.as_slice());
        // rows 1..=6 of the 15-node reference tree
        let expected: [&[usize]; 6] = [
            &[0, 3, 4],
            &[0, 5, 6],
            &[1, 7, 8],
            &[1, 9, 10],
            &[2, 11, 12],
            &[2, 13, 14],
        ];
        for (i, ones) in expected.iter().enumerate() {
            let row = tree.row(i + 1);
            let got: Vec<usize> = (0..15).filter(|&j| row[j] == 1).collect();
            assert_eq!(got, ones.to_vec());
        }
    }

    #[test]
    fn from_adjacency_rejects_bad_matrices() {
        let asym = AdjacencyMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(Graph::from_adjacency(&asym).is_err());
        let diag = AdjacencyMatrix::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert!(Graph::from_adjacency(&diag).is_err());
        assert!(AdjacencyMatrix::from_rows(&[vec![0, 1]]).is_err());
    }

    #[test]
    fn parse_examples() {
        let k2 = parse_edge_list("n 2\n0 1\n").unwrap();
        assert_eq!(k2, Graph::new(2, [(0, 1)]).unwrap());

        let p3 = parse_edge_list("n 3\n# comment\n0 1\n1 2").unwrap();
        assert_eq!(p3, Graph::new(3, [(0, 1), (1, 2)]).unwrap());

        assert_eq!(parse_edge_list("n 2\n0 0\n"), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_edge_list(""), Err(Error::MissingHeader));
        assert_eq!(parse_edge_list("# only\n"), Err(Error::MissingHeader));
        assert_eq!(parse_edge_list("0 1\n"), Err(Error::MissingHeader));
        assert!(matches!(
            parse_edge_list("n 3\n0 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 3\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 3\n0 3\n"),
            Err(Error::EndpointOutOfRange { .. })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::new(3, [(0, 1), (1, 2)]).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(binary_tree_15().is_connected());
    }

    #[test]
    fn serialization_carries_comments() {
        let g = Graph::new(3, [(2, 1)]).unwrap();
        let text = g.to_edge_list(&["model test".to_string()]);
        assert_eq!(text, "# model test\nn 3\n1 2\n");
    }
}
