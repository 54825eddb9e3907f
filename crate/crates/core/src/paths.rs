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

//! All-pairs hop distances and the separation statistics built on them.
//!
//! [`matrix_apsp`] fills the distance matrix by level propagation: cells
//! holding `p` are extended through the distance-1 cells of the
//! intermediate node's row to write `p + 1`. [`bfs_oracle`] computes the
//! same matrix by one breadth-first traversal per source and exists to
//! check the former.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense `n x n` matrix of hop counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    cells: Vec<u32>,
}

impl DistanceMatrix {
    /// Marks pairs with no connecting path. Distinct from the zero diagonal.
    pub const UNREACHABLE: u32 = u32::MAX;

    fn unfilled(n: usize) -> Self {
        let mut cells = vec![Self::UNREACHABLE; n * n];
        for i in 0..n {
            cells[i * n + i] = 0;
        }
        DistanceMatrix { n, cells }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `None` when `j` cannot be reached from `i`.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        match self.cells[i * self.n + j] {
            Self::UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Raw row including [`Self::UNREACHABLE`] sentinels.
    pub fn row(&self, i: usize) -> &[u32] {
        &self.cells[i * self.n..(i + 1) * self.n]
    }

    /// Largest finite cell. Zero for graphs without any reachable pair.
    pub fn diameter(&self) -> u32 {
        self.cells
            .iter()
            .copied()
            .filter(|&d| d != Self::UNREACHABLE)
            .max()
            .unwrap_or(0)
    }

    /// `n,<N>` followed by one comma-separated row per node, `INF` for
    /// unreachable cells.
    pub fn to_csv(&self) -> String {
        let mut out = format!("n,{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = self
                .row(i)
                .iter()
                .map(|&d| match d {
                    Self::UNREACHABLE => "INF".to_string(),
                    d => d.to_string(),
                })
                .collect();
            let _ = writeln!(out, "{}", row.join(","));
        }
        out
    }
}

/// Shortest-path matrix by level propagation.
///
/// Starting from the adjacency matrix, every cell `(i, j)` equal to `p` is
/// extended through each `k` with `(j, k) = 1`, writing `p + 1` into
/// `(i, k)` when that cell is still unfilled or larger. Passes continue
/// until one writes nothing, which takes at most `n - 1` passes; cells
/// that are never written stay [`DistanceMatrix::UNREACHABLE`].
pub fn matrix_apsp(graph: &Graph) -> DistanceMatrix {
    let n = graph.node_count();
    let mut dm = DistanceMatrix::unfilled(n);
    let adjacency = graph.to_adjacency();
    for i in 0..n {
        for j in 0..n {
            if adjacency.get(i, j) == 1 {
                dm.cells[i * n + j] = 1;
            }
        }
    }
    // the x_jk = 1 entries of every row, fixed once p = 1 is written
    let ones: Vec<Vec<usize>> = (0..n)
        .map(|j| (0..n).filter(|&k| dm.cells[j * n + k] == 1).collect())
        .collect();

    let mut p = 1u32;
    loop {
        let mut wrote = false;
        for i in 0..n {
            for (j, through) in ones.iter().enumerate() {
                if dm.cells[i * n + j] != p {
                    continue;
                }
                for &k in through {
                    let cell = &mut dm.cells[i * n + k];
                    if *cell == DistanceMatrix::UNREACHABLE || *cell > p + 1 {
                        *cell = p + 1;
                        wrote = true;
                    }
                }
            }
        }
        if !wrote {
            break;
        }
        p += 1;
        debug_assert!((p as usize) < n.max(2));
    }
    dm
}

/// Shortest-path matrix from one breadth-first traversal per source.
/// Sources run in parallel; rows are placed by source index.
pub fn bfs_oracle(graph: &Graph) -> DistanceMatrix {
    let n = graph.node_count();
    let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| bfs_row(graph, s)).collect();
    DistanceMatrix {
        n,
        cells: rows.concat(),
    }
}

fn bfs_row(graph: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![DistanceMatrix::UNREACHABLE; graph.node_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in graph.neighbors(u) {
            if dist[w] == DistanceMatrix::UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Distance totals and the two averages derived from them.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparationSummary {
    pub n: usize,
    /// Sum of finite distances over ordered pairs `i != j`.
    pub distance_sum: u64,
    pub reachable_ordered_pairs: u64,
    pub diameter: u32,
    /// `distance_sum / (N - 1)^2`, rescaled to reachable pairs when the
    /// graph is disconnected.
    pub mean_paper_norm: f64,
    /// `distance_sum / reachable_ordered_pairs`.
    pub mean_ordered_pairs: f64,
}

impl SeparationSummary {
    pub fn is_connected(&self) -> bool {
        self.reachable_ordered_pairs == (self.n as u64) * (self.n as u64 - 1)
    }
}

pub fn summarize(dm: &DistanceMatrix) -> Result<SeparationSummary> {
    let n = dm.dim();
    if n < 2 {
        return Err(Error::TooFewNodes(n));
    }
    let mut distance_sum = 0u64;
    let mut reachable = 0u64;
    for i in 0..n {
        for (j, &d) in dm.row(i).iter().enumerate() {
            if i != j && d != DistanceMatrix::UNREACHABLE {
                distance_sum += u64::from(d);
                reachable += 1;
            }
        }
    }
    let all_pairs = (n as u64) * (n as u64 - 1);
    let (mean_ordered_pairs, mean_paper_norm) = if reachable == 0 {
        (0.0, 0.0)
    } else if reachable == all_pairs {
        let m = (n - 1) as f64;
        (
            distance_sum as f64 / all_pairs as f64,
            distance_sum as f64 / (m * m),
        )
    } else {
        let ordered = distance_sum as f64 / reachable as f64;
        (ordered, ordered * n as f64 / (n - 1) as f64)
    };
    Ok(SeparationSummary {
        n,
        distance_sum,
        reachable_ordered_pairs: reachable,
        diameter: dm.diameter(),
        mean_paper_norm,
        mean_ordered_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let dm = matrix_apsp(&g);
        assert_eq!(dm.row(0), &[0, 1]);
        assert_eq!(dm.row(1), &[1, 0]);
        let s = summarize(&dm).unwrap();
        assert_eq!(s.distance_sum, 2);
        assert_eq!(s.mean_paper_norm, 2.0);
        assert_eq!(s.mean_ordered_pairs, 1.0);
        assert_eq!(s.diameter, 1);
    }

    #[test]
    fn isolated_pair_is_unreachable() {
        let g = Graph::empty(2).unwrap();
        for dm in [matrix_apsp(&g), bfs_oracle(&g)] {
            assert_eq!(dm.get(0, 1), None);
            assert_eq!(dm.get(0, 0), Some(0));
            let s = summarize(&dm).unwrap();
            assert_eq!(s.reachable_ordered_pairs, 0);
            assert_eq!(s.distance_sum, 0);
            assert_eq!(s.diameter, 0);
            assert!(!s.is_connected());
        }
    }

    #[test]
    fn path_three() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(bfs_oracle(&g).get(0, 2), Some(2));
        assert_eq!(matrix_apsp(&g).get(0, 2), Some(2));
    }

    #[test]
    fn partially_connected_means_use_reachable_pairs() {
        // P3 plus an isolated node: six reachable ordered pairs summing to 8
        let g = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        let s = summarize(&matrix_apsp(&g)).unwrap();
        assert_eq!(s.reachable_ordered_pairs, 6);
        assert_eq!(s.distance_sum, 8);
        assert!((s.mean_ordered_pairs - 8.0 / 6.0).abs() < 1e-15);
        assert!((s.mean_paper_norm - 8.0 / 6.0 * 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn summarize_needs_two_nodes() {
        let g = Graph::empty(1).unwrap();
        assert_eq!(summarize(&matrix_apsp(&g)), Err(Error::TooFewNodes(1)));
    }

    #[test]
    fn csv_export() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(
            matrix_apsp(&g).to_csv(),
            "n,3\n0,1,INF\n1,0,INF\nINF,INF,0\n"
        );
    }
}
