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

//! Complete r-ary trees and the level-by-level separation method.
//!
//! Levels are numbered from 1 at the root, so level `m` holds
//! `branching^(m-1)` nodes and a tree with `levels` levels has
//! `(branching^levels - 1) / (branching - 1)` nodes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest tree [`tree_graph`] will materialize.
pub const MAX_TREE_GRAPH_NODES: u64 = 1 << 24;

/// Shape of a complete r-ary tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeSpec {
    branching: u64,
    levels: u32,
    nodes: u64,
}

impl TreeSpec {
    /// `branching >= 2`, `levels >= 1`, and the node count must fit in a `u64`.
    pub fn new(branching: u64, levels: u32) -> Result<Self> {
        let nodes = node_count(branching, levels)?;
        Ok(TreeSpec {
            branching,
            levels,
            nodes,
        })
    }

    pub fn branching(&self) -> u64 {
        self.branching
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    pub fn node_count(&self) -> u64 {
        self.nodes
    }

    /// Tree diameter, `2 (levels - 1)`.
    pub fn max_steps(&self) -> u32 {
        max_steps(self.levels)
    }

    /// Number of nodes on `level` (1-based).
    pub fn level_size(&self, level: u32) -> u64 {
        self.branching.pow(level - 1)
    }
}

/// `1 + r + ... + r^(k-1)`, the node count of a complete r-ary tree
/// with `k` levels.
pub fn node_count(branching: u64, levels: u32) -> Result<u64> {
    if branching < 2 {
        return Err(Error::InvalidTree {
            branching,
            levels,
            msg: "branching must be at least 2".into(),
        });
    }
    if levels < 1 {
        return Err(Error::InvalidTree {
            branching,
            levels,
            msg: "at least one level is required".into(),
        });
    }
    let overflow = Error::TreeOverflow { branching, levels };
    let mut total = 0u64;
    let mut level_size = 1u64;
    for i in 0..levels {
        total = total
            .checked_add(level_size)
            .ok_or_else(|| overflow.clone())?;
        if i + 1 < levels {
            level_size = level_size
                .checked_mul(branching)
                .ok_or_else(|| overflow.clone())?;
        }
    }
    Ok(total)
}

/// Longest leaf-to-leaf path, `2 (k - 1)`.
pub fn max_steps(levels: u32) -> u32 {
    2 * levels.saturating_sub(1)
}

/// Builds the tree with node 0 as root and the children of `v` at
/// `r v + 1 ..= r v + r`.
pub fn tree_graph(spec: &TreeSpec) -> Result<Graph> {
    if spec.nodes > MAX_TREE_GRAPH_NODES {
        return Err(Error::TreeOverflow {
            branching: spec.branching,
            levels: spec.levels,
        });
    }
    let n = spec.nodes as usize;
    let r = spec.branching as usize;
    Graph::new(n, (1..n).map(|child| ((child - 1) / r, child)))
}

/// Number of nodes at exactly `s` hops from one node of `level`, for
/// `s = 1 ..= max distance from that level`.
///
/// A node at depth `d` in a tree of depth `D` sees, at distance `s`:
/// its `r^s` descendants when `s <= D - d`; its ancestor `s` levels up
/// when `s <= d`; and, for each ancestor height `a` with `1 <= a < s`,
/// `a <= d`, the `(r - 1) r^(s - a - 1)` nodes reached by descending
/// `s - a` levels into that ancestor's other subtrees, provided that
/// stays within the tree.
pub fn reachability_counts(spec: &TreeSpec, level: u32) -> Result<Vec<u64>> {
    if level < 1 || level > spec.levels {
        return Err(Error::InvalidLevel {
            level,
            levels: spec.levels,
        });
    }
    let r = spec.branching;
    let depth = level - 1;
    let tree_depth = spec.levels - 1;
    let farthest = if depth == 0 {
        tree_depth
    } else {
        depth + tree_depth
    };
    let counts = (1..=farthest)
        .map(|s| {
            let mut count = 0u64;
            if s <= tree_depth - depth {
                count += r.pow(s);
            }
            if s <= depth {
                count += 1;
            }
            for a in 1..=depth.min(s - 1) {
                let down = s - a;
                if down <= tree_depth - depth + a {
                    count += (r - 1) * r.pow(down - 1);
                }
            }
            count
        })
        .collect();
    Ok(counts)
}

/// Reachability counts for every level of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachabilityTable {
    spec: TreeSpec,
    // rows[m - 1] belongs to level m
    rows: Vec<Vec<u64>>,
}

impl ReachabilityTable {
    pub fn generate(spec: &TreeSpec) -> Self {
        let rows = (1..=spec.levels)
            .map(|m| reachability_counts(spec, m).expect("level in range"))
            .collect();
        ReachabilityTable { spec: *spec, rows }
    }

    pub fn spec(&self) -> &TreeSpec {
        &self.spec
    }

    /// Counts for `level` (1-based), index `s - 1` holding distance `s`.
    pub fn row(&self, level: u32) -> Option<&[u64]> {
        let idx = usize::try_from(level).ok()?.checked_sub(1)?;
        self.rows.get(idx).map(Vec::as_slice)
    }

    /// Header `level,s1,...,sL`, then one row per level from the leaves up
    /// to the root, absent distances left blank.
    pub fn to_csv(&self) -> String {
        let width = self.spec.max_steps() as usize;
        let mut out = String::from("level");
        for s in 1..=width {
            let _ = write!(out, ",s{s}");
        }
        out.push('\n');
        for level in (1..=self.spec.levels).rev() {
            let row = &self.rows[level as usize - 1];
            let _ = write!(out, "S{level}");
            for s in 0..width {
                match row.get(s) {
                    Some(c) => {
                        let _ = write!(out, ",{c}");
                    }
                    None => out.push(','),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Sum of all ordered-pair distances in the tree, from the table:
/// `sum over levels of |level| * sum_s s * count(s)`.
pub fn tree_distance_sum(spec: &TreeSpec) -> u128 {
    let table = ReachabilityTable::generate(spec);
    (1..=spec.levels)
        .map(|level| {
            let weighted: u128 = table.rows[level as usize - 1]
                .iter()
                .zip(1u128..)
                .map(|(&c, s)| u128::from(c) * s)
                .sum();
            u128::from(spec.level_size(level)) * weighted
        })
        .sum()
}

/// Level-weighted average separation of the tree.
///
/// Each level contributes its per-node mean distance `sum_s s count(s) /
/// (N - 1)`, weighted by the number of nodes on it, and the total is
/// divided by `N`. This equals the ordered-pair mean
/// `distance_sum / (N (N - 1))`; it is evaluated from the exact integer
/// total with a single final division.
pub fn tree_average_separation(spec: &TreeSpec) -> Result<f64> {
    if spec.levels < 2 {
        return Err(Error::InvalidTree {
            branching: spec.branching,
            levels: spec.levels,
            msg: "at least two levels are required for any pair".into(),
        });
    }
    let n = u128::from(spec.nodes);
    let total = tree_distance_sum(spec);
    Ok(total as f64 / (n * (n - 1)) as f64)
}
