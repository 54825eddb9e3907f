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

//! Average degree of separation for simple undirected graphs.
//!
//! Two routes to the same quantity live here: a level-by-level counting
//! method for complete r-ary trees ([`tree`]) and a matrix-propagation
//! all-pairs shortest-path method for arbitrary graphs ([`paths`]), each
//! checked against a breadth-first oracle. [`generators`] builds ring
//! lattices, Watts-Strogatz graphs and power-of-two circulants, and
//! [`experiments`] runs seeded probability sweeps over them.

pub mod error;
pub mod experiments;
pub mod generators;
pub mod graph;
pub mod paths;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{AdjacencyMatrix, Graph};
pub use paths::{DistanceMatrix, SeparationSummary};
pub use tree::{ReachabilityTable, TreeSpec};
