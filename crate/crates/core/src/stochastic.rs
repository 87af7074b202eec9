//! Seeded simulation of the random solitaires.
//!
//! Popov's game takes one card from each pile independently with
//! probability `p`; the EJS game takes each card independently with
//! probability `p`. Sampling draws the realized choice from a ChaCha8
//! stream and hands it to the deterministic masked step.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::operators::{ejs_masked_step, popov_masked_step};
use crate::par::Exec;
use crate::partition::{triangular_decompose, Partition};

/// Identifier of the random generator behind every chain. Two runs agree
/// bit for bit only when this matches.
pub const GENERATOR: &str = "rand_chacha::ChaCha8Rng/seed_from_u64";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainVariant {
    Popov,
    Ejs,
}

impl fmt::Display for ChainVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainVariant::Popov => "popov",
            ChainVariant::Ejs => "ejs",
        })
    }
}

impl FromStr for ChainVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "popov" => Ok(ChainVariant::Popov),
            "ejs" => Ok(ChainVariant::Ejs),
            other => Err(Error::parse(format!("unknown random variant {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainConfig {
    pub n: u32,
    pub variant: ChainVariant,
    pub p: f64,
    pub seed: u64,
    pub burn_in: usize,
    pub samples: usize,
    /// Starting state; a single pile of `n` cards when absent.
    pub initial: Option<Partition>,
}

impl ChainConfig {
    /// Burn-in of `50n` and `500n` recorded steps from the single pile.
    pub fn new(variant: ChainVariant, n: u32, p: f64, seed: u64) -> Self {
        ChainConfig {
            n,
            variant,
            p,
            seed,
            burn_in: 50 * n as usize,
            samples: 500 * n as usize,
            initial: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::invalid("a chain needs n >= 1 cards"));
        }
        // p = 1 is the deterministic limit for both variants
        if !(self.p > 0.0 && self.p <= 1.0) {
            return Err(Error::invalid(format!("p = {} is outside (0, 1]", self.p)));
        }
        if let Some(init) = &self.initial {
            if init.n() != self.n {
                return Err(Error::invalid(format!(
                    "initial state {init} has {} cards, expected {}",
                    init.n(),
                    self.n
                )));
            }
        }
        Ok(())
    }

    fn start(&self) -> Partition {
        self.initial
            .clone()
            .unwrap_or_else(|| Partition::new(vec![self.n]).expect("n >= 1"))
    }
}

/// A running chain: current state plus its generator.
#[derive(Debug, Clone)]
pub struct Chain {
    variant: ChainVariant,
    p: f64,
    rng: ChaCha8Rng,
    state: Partition,
}

impl Chain {
    pub fn new(config: &ChainConfig) -> Result<Self> {
        config.validate()?;
        Ok(Chain {
            variant: config.variant,
            p: config.p,
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            state: config.start(),
        })
    }

    pub fn state(&self) -> &Partition {
        &self.state
    }

    /// Draws the piles Popov's rule takes a card from (0-based).
    pub fn sample_popov_mask(&mut self) -> Vec<usize> {
        let p = self.p;
        let rng = &mut self.rng;
        (0..self.state.len()).filter(|_| rng.gen_bool(p)).collect()
    }

    /// Draws how many cards the EJS rule takes from each pile, one
    /// Bernoulli trial per card.
    pub fn sample_ejs_picks(&mut self) -> Vec<u32> {
        let p = self.p;
        let rng = &mut self.rng;
        self.state
            .parts()
            .iter()
            .map(|&a| (0..a).filter(|_| rng.gen_bool(p)).count() as u32)
            .collect()
    }

    pub fn step(&mut self) -> &Partition {
        let next = match self.variant {
            ChainVariant::Popov => {
                let mask = self.sample_popov_mask();
                popov_masked_step(&self.state, &mask)
            }
            ChainVariant::Ejs => {
                let picks = self.sample_ejs_picks();
                ejs_masked_step(&self.state, &picks)
            }
        }
        .expect("sampled choices are valid for the current state");
        self.state = next;
        &self.state
    }
}

/// Summary of the recorded phase of one chain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainStats {
    pub generator: &'static str,
    pub n: u32,
    pub variant: ChainVariant,
    pub p: f64,
    pub seed: u64,
    pub samples: usize,
    /// Visits per state after burn-in, keyed by the comma-separated text.
    #[serde(serialize_with = "serialize_visits")]
    pub visit_counts: BTreeMap<Partition, u64>,
    /// Mean of the sorted part vectors, zero padded to the longest one.
    pub mean_shape: Vec<f64>,
    pub mean_staircase_distance: f64,
    pub mean_energy: f64,
    pub final_state: Partition,
}

fn serialize_visits<S: Serializer>(
    visits: &BTreeMap<Partition, u64>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_map(visits.iter().map(|(k, v)| (k.to_string(), v)))
}

impl ChainStats {
    /// `mean_shape` as `index,mean` CSV rows with a header, index from 1.
    pub fn mean_shape_csv(&self) -> String {
        let mut out = String::from("index,mean_part\n");
        for (i, v) in self.mean_shape.iter().enumerate() {
            out.push_str(&format!("{},{}\n", i + 1, v));
        }
        out
    }
}

pub fn run_chain(config: &ChainConfig) -> Result<ChainStats> {
    let mut chain = Chain::new(config)?;
    for _ in 0..config.burn_in {
        chain.step();
    }
    let mut visit_counts = BTreeMap::new();
    let mut shape_sum: Vec<u64> = Vec::new();
    let mut distance_sum = 0.0;
    let mut energy_sum: u128 = 0;
    for _ in 0..config.samples {
        let s = chain.step();
        *visit_counts.entry(s.clone()).or_insert(0u64) += 1;
        if shape_sum.len() < s.len() {
            shape_sum.resize(s.len(), 0);
        }
        for (acc, &part) in shape_sum.iter_mut().zip(s.parts()) {
            *acc += part as u64;
        }
        distance_sum += staircase_distance(s);
        energy_sum += s.potential_energy() as u128;
    }
    let denom = config.samples.max(1) as f64;
    Ok(ChainStats {
        generator: GENERATOR,
        n: config.n,
        variant: config.variant,
        p: config.p,
        seed: config.seed,
        samples: config.samples,
        visit_counts,
        mean_shape: shape_sum.iter().map(|&v| v as f64 / denom).collect(),
        mean_staircase_distance: distance_sum / denom,
        mean_energy: energy_sum as f64 / denom,
        final_state: chain.state().clone(),
    })
}

/// Runs independent chains, returning their stats in input order.
pub fn run_chains(configs: &[ChainConfig], exec: Exec) -> Result<Vec<ChainStats>> {
    exec.map(configs, run_chain).into_iter().collect()
}

/// The states visited by `steps` moves from the configured start, the
/// start itself excluded.
pub fn trajectory(config: &ChainConfig, steps: usize) -> Result<Vec<Partition>> {
    let mut chain = Chain::new(config)?;
    Ok((0..steps).map(|_| chain.step().clone()).collect())
}

/// `(1/n) * sum_i |λ_i - max(k + 1 - i, 0)|` against the full staircase of
/// `k`, where `(k, r)` decomposes `n`. Zero for the empty partition.
pub fn staircase_distance(lambda: &Partition) -> f64 {
    let n = lambda.n();
    if n == 0 {
        return 0.0;
    }
    let k = triangular_decompose(n as u64).expect("n >= 1").k as usize;
    let parts = lambda.parts();
    let len = parts.len().max(k);
    let total: u64 = (0..len)
        .map(|i| {
            let have = parts.get(i).copied().unwrap_or(0) as i64;
            let want = k.saturating_sub(i) as i64;
            (have - want).unsigned_abs()
        })
        .sum();
    total as f64 / n as f64
}

/// Least-squares fit of one model to the mean shape.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fit {
    /// Linear: `[intercept, slope]`. Exponential: `[amplitude, rate]` for
    /// `amplitude * exp(-rate * i)`.
    pub params: [f64; 2],
    /// Sum of squared residuals.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShapeProfile {
    pub mean_shape: Vec<f64>,
    /// Number of leading entries the fits use.
    pub support: usize,
    pub linear: Fit,
    pub exponential: Fit,
}

impl ShapeProfile {
    /// `"linear"`, `"exponential"`, or `"tie"`.
    pub fn better_fit(&self) -> &'static str {
        if self.linear.residual < self.exponential.residual {
            "linear"
        } else if self.exponential.residual < self.linear.residual {
            "exponential"
        } else {
            "tie"
        }
    }
}

/// Fits a line and a decaying exponential to the mean shape over the
/// piles present on average at least half the time (entries >= 1/2), with
/// pile index `i` counted from 1.
pub fn shape_profile(stats: &ChainStats) -> Result<ShapeProfile> {
    if stats.samples == 0 {
        return Err(Error::invalid("shape profile needs recorded samples"));
    }
    let support = stats.mean_shape.iter().take_while(|&&v| v >= 0.5).count();
    let ys = &stats.mean_shape[..support];
    Ok(ShapeProfile {
        mean_shape: stats.mean_shape.clone(),
        support,
        linear: fit_linear(ys),
        exponential: fit_exponential(ys),
    })
}

fn fit_linear(ys: &[f64]) -> Fit {
    let m = ys.len() as f64;
    if ys.is_empty() {
        return Fit {
            params: [0.0, 0.0],
            residual: 0.0,
        };
    }
    let xs = (1..=ys.len()).map(|i| i as f64);
    let mean_x = (m + 1.0) / 2.0;
    let mean_y = ys.iter().sum::<f64>() / m;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, &y) in xs.zip(ys) {
        sxy += (x - mean_x) * (y - mean_y);
        sxx += (x - mean_x) * (x - mean_x);
    }
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let intercept = mean_y - slope * mean_x;
    let residual = ys
        .iter()
        .enumerate()
        .map(|(i, &y)| (y - intercept - slope * (i + 1) as f64).powi(2))
        .sum();
    Fit {
        params: [intercept, slope],
        residual,
    }
}

/// For a fixed rate the best amplitude is closed form, so only the rate
/// is searched: a coarse grid followed by golden-section refinement.
fn fit_exponential(ys: &[f64]) -> Fit {
    let eval = |rate: f64| -> (f64, f64) {
        let (mut sye, mut see) = (0.0, 0.0);
        for (i, &y) in ys.iter().enumerate() {
            let e = (-rate * (i + 1) as f64).exp();
            sye += y * e;
            see += e * e;
        }
        let amp = if see > 0.0 { sye / see } else { 0.0 };
        let sse = ys
            .iter()
            .enumerate()
            .map(|(i, &y)| (y - amp * (-rate * (i + 1) as f64).exp()).powi(2))
            .sum();
        (amp, sse)
    };
    const MAX_RATE: f64 = 5.0;
    const GRID: usize = 500;
    let best = (0..=GRID)
        .map(|g| MAX_RATE * g as f64 / GRID as f64)
        .min_by(|&a, &b| eval(a).1.total_cmp(&eval(b).1))
        .unwrap_or(0.0);
    let step = MAX_RATE / GRID as f64;
    let (mut lo, mut hi) = ((best - step).max(0.0), best + step);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..100 {
        let a = hi - phi * (hi - lo);
        let b = lo + phi * (hi - lo);
        if eval(a).1 <= eval(b).1 {
            hi = b;
        } else {
            lo = a;
        }
    }
    let rate = (lo + hi) / 2.0;
    let (amp, residual) = eval(rate);
    Fit {
        params: [amp, rate],
        residual,
    }
}
