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

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    EmptyGraph,
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing `n <count>` header")]
    MissingHeader,
    #[error("adjacency matrix is not a symmetric 0/1 matrix with zero diagonal: {0}")]
    InvalidAdjacency(String),
    #[error("at least two nodes are required, got {0}")]
    TooFewNodes(usize),
    #[error("invalid tree (branching {branching}, levels {levels}): {msg}")]
    InvalidTree {
        branching: u64,
        levels: u32,
        msg: String,
    },
    #[error("tree with branching {branching} and {levels} levels is too large")]
    TreeOverflow { branching: u64, levels: u32 },
    #[error("level {level} is outside 1..={levels}")]
    InvalidLevel { level: u32, levels: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
