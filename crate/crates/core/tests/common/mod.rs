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

#![allow(dead_code)]

use std::collections::VecDeque;

use degsep::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Cell = fn(i64) -> i64;

/// Reference generalized reachability tables, one `(level, cells)` entry
/// per row from the leaf level up to the root. Cell `s - 1` gives the
/// count at distance `s` as a function of the branching factor.
pub fn reference_table(levels: u32) -> Vec<(u32, Vec<Cell>)> {
    match levels {
        3 => vec![
            (3, vec![|_| 1, |r| r, |r| r - 1, |r| (r - 1) * r]),
            (2, vec![|r| r + 1, |r| r - 1, |r| (r - 1) * r]),
            (1, vec![|r| r, |r| r * r]),
        ],
        4 => vec![
            (
                4,
                vec![|_| 1, |r| r, |r| r, |r| r * r - 1, |r| r * r - r, |r| {
                    r.pow(3) - r * r
                }],
            ),
            (
                3,
                vec![|r| r + 1, |r| r, |r| r * r - 1, |r| r * r - r, |r| {
                    r.pow(3) - r * r
                }],
            ),
            (
                2,
                vec![|r| r + 1, |r| r * r + r - 1, |r| r * r - r, |r| {
                    r.pow(3) - r * r
                }],
            ),
            (1, vec![|r| r, |r| r * r, |r| r.pow(3)]),
        ],
        5 => vec![
            (
                5,
                vec![
                    |_| 1,
                    |r| r,
                    |r| r,
                    |r| r * r,
                    |r| r * r - 1,
                    |r| (r * r - 1) * r,
                    |r| r.pow(3) - r * r,
                    |r| r.pow(4) - r.pow(3),
                ],
            ),
            (
                4,
                vec![
                    |r| r + 1,
                    |r| r,
                    |r| r * r,
                    |r| r * r - 1,
                    |r| (r * r - 1) * r,
                    |r| r.pow(3) - r * r,
                    |r| r.pow(4) - r.pow(3),
                ],
            ),
            (
                3,
                vec![
                    |r| r + 1,
                    |r| r + r * r,
                    |r| r * r - 1,
                    |r| (r * r - 1) * r,
                    |r| r.pow(3) - r * r,
                    |r| r.pow(4) - r.pow(3),
                ],
            ),
            (
                2,
                vec![
                    |r| r + 1,
                    |r| r + r * r - 1,
                    |r| (r + r * r - 1) * r,
                    |r| r.pow(3) - r * r,
                    |r| r.pow(4) - r.pow(3),
                ],
            ),
            (1, vec![|r| r, |r| r * r, |r| r.pow(3), |r| r.pow(4)]),
        ],
        6 => vec![
            (
                6,
                vec![
                    |_| 1,
                    |r| r,
                    |r| r,
                    |r| r * r,
                    |r| r * r,
                    |r| r.pow(3) - 1,
                    |r| r + r * r,
                    |r| r * r + r.pow(3),
                    |r| r.pow(4) - r.pow(3),
                    |r| r.pow(5) - r.pow(4),
                ],
            ),
            (
                5,
                vec![
                    |r| r + 1,
                    |r| r,
                    |r| r * r,
                    |r| r * r,
                    |r| r.pow(3) - 1,
                    |r| r + r * r,
                    |r| r * r + r.pow(3),
                    |r| r.pow(4) - r.pow(3),
                    |r| r.pow(5) - r.pow(4),
                ],
            ),
            (
                4,
                vec![
                    |r| r + 1,
                    |r| r + r * r,
                    |r| r * r,
                    |r| r.pow(3) - 1,
                    |r| r + r * r,
                    |r| r * r + r.pow(3),
                    |r| r.pow(4) - r.pow(3),
                    |r| r.pow(5) - r.pow(4),
                ],
            ),
            (
                3,
                vec![
                    |r| r + 1,
                    |r| r + r * r,
                    |r| r.pow(3) + r * r - 1,
                    |r| r + r * r,
                    |r| r * r + r.pow(3),
                    |r| r.pow(4) - r.pow(3),
                    |r| r.pow(5) - r.pow(4),
                ],
            ),
            (
                2,
                vec![
                    |r| r + 1,
                    |r| r * r + r - 1,
                    |r| (r * r + r - 1) * r,
                    |r| (r.pow(3) + r * r - 1) * r * r,
                    |r| r.pow(4) - r.pow(3),
                    |r| r.pow(5) - r.pow(4),
                ],
            ),
            (
                1,
                vec![|r| r, |r| r * r, |r| r.pow(3), |r| r.pow(4), |r| r.pow(5)],
            ),
        ],
        _ => panic!("no reference table for {levels} levels"),
    }
}

/// Numeric values of the r = 3, k = 4 table, leaf row first.
pub const TERNARY_FOUR_LEVEL_TABLE: [&[u64]; 4] = [
    &[1, 3, 3, 8, 6, 18],
    &[4, 3, 8, 6, 18],
    &[4, 11, 6, 18],
    &[3, 9, 27],
];

/// Reference final distance matrix for the 15-node binary tree.
pub const BINARY_TREE_DISTANCES: [[u32; 15]; 15] = [
    [0, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3],
    [1, 0, 2, 1, 1, 3, 3, 2, 2, 2, 2, 4, 4, 4, 4],
    [1, 2, 0, 3, 3, 1, 1, 4, 4, 4, 4, 2, 2, 2, 2],
    [2, 1, 3, 0, 2, 4, 4, 1, 1, 3, 3, 5, 5, 5, 5],
    [2, 1, 3, 2, 0, 4, 4, 3, 3, 1, 1, 5, 5, 5, 5],
    [2, 3, 1, 4, 4, 0, 2, 5, 5, 5, 5, 1, 1, 3, 3],
    [2, 3, 1, 4, 4, 2, 0, 5, 5, 5, 5, 3, 3, 1, 1],
    [3, 2, 4, 1, 3, 5, 5, 0, 2, 4, 4, 6, 6, 6, 6],
    [3, 2, 4, 1, 3, 5, 5, 2, 0, 4, 4, 6, 6, 6, 6],
    [3, 2, 4, 3, 1, 5, 5, 4, 4, 0, 2, 6, 6, 6, 6],
    [3, 2, 4, 3, 1, 5, 5, 4, 4, 2, 0, 6, 6, 6, 6],
    [3, 4, 2, 5, 5, 1, 3, 6, 6, 6, 6, 0, 2, 4, 4],
    [3, 4, 2, 5, 5, 1, 3, 6, 6, 6, 6, 2, 0, 4, 4],
    [3, 4, 2, 5, 5, 3, 1, 6, 6, 6, 6, 4, 4, 0, 2],
    [3, 4, 2, 5, 5, 3, 1, 6, 6, 6, 6, 4, 4, 2, 0],
];

/// Single-source hop counts, `None` where unreachable.
pub fn bfs_from(graph: &Graph, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; graph.node_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in graph.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Seeded G(n, density) sample.
pub fn random_graph(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < density {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// The `i`-th graph of the mixed-density corpus used for oracle checks.
pub fn corpus_graph(i: u64) -> Graph {
    const DENSITIES: [f64; 6] = [0.0, 0.03, 0.06, 0.1, 0.25, 0.6];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ i);
    let n = rng.random_range(1..=64);
    let density = DENSITIES[(i as usize) % DENSITIES.len()];
    random_graph(n, density, rng.random())
}
