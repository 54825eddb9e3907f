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

//! Ring lattices, Watts-Strogatz small-world graphs, and power-of-two
//! circulant graphs.
//!
//! Random generators draw from ChaCha8 seeded with `seed_from_u64`, so a
//! given `(params, seed)` produces the same graph on every platform.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Identifier of the random stream, recorded in generated files.
pub const RNG_ALGORITHM: &str = "chacha8";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Move the far endpoint of lattice edges; edge count is preserved.
    Rewire,
    /// Add absent pairs on top of the lattice.
    Add,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Rewire => "rewire",
            Mode::Add => "add",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rewire" => Ok(Mode::Rewire),
            "add" => Ok(Mode::Add),
            other => Err(Error::InvalidParameter(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WsParams {
    pub n: usize,
    /// Lattice degree; each node starts linked to `kdeg / 2` neighbors per side.
    pub kdeg: usize,
    pub p: f64,
    pub seed: u64,
    pub mode: Mode,
}

impl WsParams {
    pub fn validate(&self) -> Result<()> {
        validate_lattice(self.n, self.kdeg)?;
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidParameter(format!(
                "probability {} is outside [0, 1]",
                self.p
            )));
        }
        Ok(())
    }

    /// One-line description for edge-list comments.
    pub fn provenance(&self) -> String {
        format!(
            "model ws mode {} n {} kdeg {} p {} seed {} rng {}",
            self.mode, self.n, self.kdeg, self.p, self.seed, RNG_ALGORITHM
        )
    }
}

fn validate_lattice(n: usize, kdeg: usize) -> Result<()> {
    if kdeg < 2 || !kdeg.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "kdeg must be even and at least 2, got {kdeg}"
        )));
    }
    if kdeg >= n {
        return Err(Error::InvalidParameter(format!(
            "kdeg {kdeg} must be smaller than n {n}"
        )));
    }
    Ok(())
}

/// A generated graph together with how many candidate endpoints were
/// rejected while rewiring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub resamples: usize,
}

/// Node `i` joined to `i +- 1, ..., i +- kdeg/2` (mod `n`).
pub fn ring_lattice(n: usize, kdeg: usize) -> Result<Graph> {
    validate_lattice(n, kdeg)?;
    Graph::new(n, lattice_edges(n, kdeg))
}

// source-major, then offset
fn lattice_edges(n: usize, kdeg: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (1..=kdeg / 2).map(move |off| (i, (i + off) % n)))
}

/// Dispatches on `params.mode`.
pub fn generate(params: &WsParams) -> Result<Generated> {
    match params.mode {
        Mode::Rewire => rewire(params),
        Mode::Add => edge_addition(params).map(|graph| Generated {
            graph,
            resamples: 0,
        }),
    }
}

pub fn watts_strogatz(params: &WsParams) -> Result<Graph> {
    rewire(params).map(|g| g.graph)
}

/// Watts-Strogatz rewiring of the ring lattice.
///
/// Lattice edges `(i, i + off)` are visited by source, then offset. With
/// probability `p` the far endpoint is replaced by a uniform node; a
/// candidate equal to `i` or already adjacent to it is redrawn, and after
/// `n` rejected draws the edge is left where it is.
pub fn rewire(params: &WsParams) -> Result<Generated> {
    params.validate()?;
    if params.mode != Mode::Rewire {
        return Err(Error::InvalidParameter(
            "rewire requires mode rewire".into(),
        ));
    }
    let n = params.n;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (u, v) in lattice_edges(n, params.kdeg) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let mut resamples = 0;
    for (u, v) in lattice_edges(n, params.kdeg) {
        if rng.random::<f64>() >= params.p {
            continue;
        }
        for _ in 0..n {
            let w = rng.random_range(0..n);
            if w == u || adj[u].contains(&w) {
                resamples += 1;
                continue;
            }
            adj[u].remove(&v);
            adj[v].remove(&u);
            adj[u].insert(w);
            adj[w].insert(u);
            break;
        }
    }
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, set)| set.iter().filter(move |&&v| u < v).map(move |&v| (u, v)));
    let graph = Graph::new(n, edges)?;
    Ok(Generated { graph, resamples })
}

/// Ring lattice plus each absent pair `(u, v)`, `u < v`, added
/// independently with probability `p`, pairs drawn in lexicographic order.
pub fn edge_addition(params: &WsParams) -> Result<Graph> {
    params.validate()?;
    if params.mode != Mode::Add {
        return Err(Error::InvalidParameter(
            "edge addition requires mode add".into(),
        ));
    }
    let lattice = ring_lattice(params.n, params.kdeg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = params.n;
    let mut edges: Vec<(usize, usize)> = lattice.edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !lattice.has_edge(u, v) && rng.random::<f64>() < params.p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Circulant graph on `n = 2^t` nodes with chords at offsets
/// `1, 2, 4, ..., n/2`. The `n/2` chord pairs each node with its antipode,
/// so every node has degree `2t - 1`.
pub fn structured_graph(n: usize) -> Result<Graph> {
    validate_structured(n)?;
    let offsets: Vec<usize> = (0..n.trailing_zeros()).map(|j| 1 << j).collect();
    Graph::new(
        n,
        (0..n).flat_map(|i| offsets.iter().map(move |&off| (i, (i + off) % n))),
    )
}

pub(crate) fn validate_structured(n: usize) -> Result<()> {
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "n must be a power of two >= 8, got {n}"
        )));
    }
    Ok(())
}
