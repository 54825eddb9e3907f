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

//! Probability sweeps over small-world graphs, the circulant diameter
//! bound, and the comparison of the two tree methods.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generators::{self, Mode, WsParams};
use crate::paths::{matrix_apsp, summarize, SeparationSummary};
use crate::tree::{self, TreeSpec};

/// Redraws allowed per trial when disconnected samples are rejected.
pub const MAX_CONNECTED_ATTEMPTS: u32 = 10_000;

/// Header of [`records_csv`].
pub const RECORDS_HEADER: &str =
    "p,trial,seed,n,kdeg,mode,mean_paper_norm,mean_ordered_pairs,diameter,connected,resamples";

/// Header of [`summary_csv`].
pub const SUMMARY_HEADER: &str = "p,trials,mean,stddev";

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-trial seed: `splitmix64(splitmix64(base ^ splitmix64(p_index)) ^ trial)`.
pub fn mix_seed(base_seed: u64, p_index: usize, trial: usize) -> u64 {
    let z = splitmix64(base_seed ^ splitmix64(p_index as u64));
    splitmix64(z ^ trial as u64)
}

/// `start, start + step, ...` up to `stop` inclusive, each value rounded
/// to 12 decimals so that `0.05 * 3` prints as `0.15`.
pub fn p_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if step.is_nan() || step <= 0.0 || start.is_nan() || stop.is_nan() || start > stop {
        return Err(Error::InvalidParameter(format!(
            "bad grid start {start} stop {stop} step {step}"
        )));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize;
    Ok((0..=count)
        .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
        .collect())
}

/// `0.00, 0.05, ..., 0.50`.
pub fn default_p_grid() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 20.0).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub n: usize,
    pub kdeg: usize,
    pub p_grid: Vec<f64>,
    pub trials: usize,
    pub base_seed: u64,
    pub mode: Mode,
    /// Redraw disconnected samples instead of keeping them flagged.
    pub resample_disconnected: bool,
    /// Run trials on the rayon pool. Results do not depend on this.
    pub parallel: bool,
}

impl SweepConfig {
    pub fn new(n: usize, kdeg: usize, trials: usize, base_seed: u64, mode: Mode) -> Self {
        SweepConfig {
            n,
            kdeg,
            p_grid: default_p_grid(),
            trials,
            base_seed,
            mode,
            resample_disconnected: false,
            parallel: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        if self.p_grid.is_empty() {
            return Err(Error::InvalidParameter("probability grid is empty".into()));
        }
        for &p in &self.p_grid {
            self.params(p, 0).validate()?;
        }
        Ok(())
    }

    fn params(&self, p: f64, seed: u64) -> WsParams {
        WsParams {
            n: self.n,
            kdeg: self.kdeg,
            p,
            seed,
            mode: self.mode,
        }
    }
}

/// One generated graph of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub p: f64,
    pub p_index: usize,
    pub trial: usize,
    /// Seed the recorded graph was generated from.
    pub seed: u64,
    pub n: usize,
    pub kdeg: usize,
    pub mode: Mode,
    pub mean_paper_norm: f64,
    pub mean_ordered_pairs: f64,
    pub diameter: u32,
    /// When false the means cover reachable pairs only.
    pub connected: bool,
    pub resamples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stats {
    pub mean: f64,
    /// Sample standard deviation; zero for a single trial.
    pub stddev: f64,
}

impl Stats {
    fn of(values: impl IntoIterator<Item = f64>) -> Self {
        // Welford: identical inputs give exactly zero spread
        let (mut count, mut mean, mut m2) = (0u64, 0.0f64, 0.0f64);
        for x in values {
            count += 1;
            let delta = x - mean;
            mean += delta / count as f64;
            m2 += delta * (x - mean);
        }
        let stddev = if count > 1 {
            (m2 / (count - 1) as f64).sqrt()
        } else {
            0.0
        };
        Stats { mean, stddev }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub p: f64,
    pub trials: usize,
    pub ordered_pairs: Stats,
    pub paper_norm: Stats,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub points: Vec<SweepPoint>,
}

impl SweepSummary {
    /// Spearman correlation between `p` and the per-`p` mean.
    pub fn rank_correlation(&self, normalization: Normalization) -> f64 {
        let ps: Vec<f64> = self.points.iter().map(|pt| pt.p).collect();
        let means: Vec<f64> = self
            .points
            .iter()
            .map(|pt| pt.stats(normalization).mean)
            .collect();
        spearman(&ps, &means)
    }
}

impl SweepPoint {
    pub fn stats(&self, normalization: Normalization) -> Stats {
        match normalization {
            Normalization::OrderedPairs => self.ordered_pairs,
            Normalization::SquaredNMinusOne => self.paper_norm,
        }
    }
}

/// Which average a summary column refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// `sum / (N (N - 1))`
    OrderedPairs,
    /// `sum / (N - 1)^2`
    SquaredNMinusOne,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutcome {
    /// Sorted by `(p_index, trial)`.
    pub records: Vec<SweepRecord>,
    pub summary: SweepSummary,
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome> {
    config.validate()?;
    let jobs: Vec<(usize, usize)> = (0..config.p_grid.len())
        .flat_map(|pi| (0..config.trials).map(move |t| (pi, t)))
        .collect();
    let records: Vec<SweepRecord> = if config.parallel {
        jobs.par_iter()
            .map(|&(pi, t)| run_trial(config, pi, t))
            .collect::<Result<_>>()?
    } else {
        jobs.iter()
            .map(|&(pi, t)| run_trial(config, pi, t))
            .collect::<Result<_>>()?
    };

    let points = config
        .p_grid
        .iter()
        .enumerate()
        .map(|(pi, &p)| {
            let group = &records[pi * config.trials..(pi + 1) * config.trials];
            SweepPoint {
                p,
                trials: group.len(),
                ordered_pairs: Stats::of(group.iter().map(|r| r.mean_ordered_pairs)),
                paper_norm: Stats::of(group.iter().map(|r| r.mean_paper_norm)),
            }
        })
        .collect();
    Ok(SweepOutcome {
        records,
        summary: SweepSummary { points },
    })
}

fn run_trial(config: &SweepConfig, p_index: usize, trial: usize) -> Result<SweepRecord> {
    let p = config.p_grid[p_index];
    let mut seed = mix_seed(config.base_seed, p_index, trial);
    let mut attempts = 0;
    loop {
        let generated = generators::generate(&config.params(p, seed))?;
        let summary = summarize(&matrix_apsp(&generated.graph))?;
        let connected = summary.is_connected();
        if connected || !config.resample_disconnected {
            return Ok(SweepRecord {
                p,
                p_index,
                trial,
                seed,
                n: config.n,
                kdeg: config.kdeg,
                mode: config.mode,
                mean_paper_norm: summary.mean_paper_norm,
                mean_ordered_pairs: summary.mean_ordered_pairs,
                diameter: summary.diameter,
                connected,
                resamples: generated.resamples,
            });
        }
        attempts += 1;
        if attempts >= MAX_CONNECTED_ATTEMPTS {
            return Err(Error::InvalidParameter(format!(
                "no connected sample at p {p} after {attempts} draws"
            )));
        }
        seed = splitmix64(seed);
    }
}

pub fn records_csv(records: &[SweepRecord]) -> String {
    let mut out = format!("{RECORDS_HEADER}\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.p,
            r.trial,
            r.seed,
            r.n,
            r.kdeg,
            r.mode,
            r.mean_paper_norm,
            r.mean_ordered_pairs,
            r.diameter,
            r.connected,
            r.resamples
        );
    }
    out
}

pub fn summary_csv(summary: &SweepSummary, normalization: Normalization) -> String {
    let mut out = format!("{SUMMARY_HEADER}\n");
    for pt in &summary.points {
        let s = pt.stats(normalization);
        let _ = writeln!(out, "{},{},{},{}", pt.p, pt.trials, s.mean, s.stddev);
    }
    out
}

fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = rank;
        }
        i = j + 1;
    }
    ranks
}

/// Spearman rank correlation with average ranks for ties. NaN when either
/// side is constant or shorter than two.
pub fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let (rx, ry) = (average_ranks(xs), average_ranks(ys));
    let n = rx.len() as f64;
    let (mx, my) = (rx.iter().sum::<f64>() / n, ry.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in rx.iter().zip(&ry) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    sxy / (sxx * syy).sqrt()
}

/// `ceil(log2(n / 8) / 2) + 2` for `n` a power of two, `n >= 8`.
pub fn diameter_bound(n: usize) -> Result<u32> {
    generators::validate_structured(n)?;
    let excess = n.trailing_zeros() - 3;
    Ok(excess.div_ceil(2) + 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub diameter: u32,
    pub bound: u32,
    pub pass: bool,
}

/// Diameter of the structured graph on `n` nodes against [`diameter_bound`].
pub fn check_bound(n: usize) -> Result<BoundReport> {
    let bound = diameter_bound(n)?;
    let graph = generators::structured_graph(n)?;
    let diameter = matrix_apsp(&graph).diameter();
    Ok(BoundReport {
        n,
        diameter,
        bound,
        pass: diameter <= bound,
    })
}

/// Tolerance for the tree cross-check.
pub const CROSS_CHECK_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct TreeCrossCheck {
    pub spec: TreeSpec,
    /// Level-weighted table formula.
    pub formula: f64,
    /// Matrix propagation on the materialized tree.
    pub matrix: SeparationSummary,
    /// `mean_paper_norm / mean_ordered_pairs = N / (N - 1)`, as `(N, N - 1)`.
    pub ratio: (u64, u64),
    pub agrees: bool,
}

pub fn cross_check_tree_methods(spec: &TreeSpec) -> Result<TreeCrossCheck> {
    let formula = tree::tree_average_separation(spec)?;
    let graph = tree::tree_graph(spec)?;
    let matrix = summarize(&matrix_apsp(&graph))?;
    let n = spec.node_count();
    Ok(TreeCrossCheck {
        spec: *spec,
        formula,
        agrees: (formula - matrix.mean_ordered_pairs).abs() <= CROSS_CHECK_TOLERANCE,
        matrix,
        ratio: (n, n - 1),
    })
}
