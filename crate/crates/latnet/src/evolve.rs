//! Hill-climbing evolution of directed networks under the quality function
//! Q(λ) = λ·Eff_D + (1−λ)·Eff_L.
//!
//! One step removes a uniformly random arc and adds a uniformly random
//! absent non-self-loop arc; the move is kept only if Q strictly increases.
//! A run stops after `a` consecutive rejections (a = arc count, which the
//! moves preserve) or when the proposal cap is hit.

use crate::arcpaths::{self, ArcPathError};
use crate::net::{random_er, DirectedNetwork, NetError, RngSeed};
use crate::par;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EvolveError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Net(#[from] NetError),
    #[error(transparent)]
    ArcPath(#[from] ArcPathError),
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct EvolutionConfig {
    pub n: usize,
    pub p: f64,
    pub lambda: f64,
    pub seed: RngSeed,
    /// Safety cap on the number of proposals (accepted or not).
    pub max_steps: u64,
}

pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;

impl EvolutionConfig {
    pub fn new(n: usize, p: f64, lambda: f64, seed: RngSeed) -> Result<Self, EvolveError> {
        if n < 2 {
            return Err(EvolveError::Config("n must be >= 2".into()));
        }
        if !(0.0..=1.0).contains(&lambda) {
            return Err(EvolveError::Config("lambda must lie in [0, 1]".into()));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(EvolveError::Config("p must lie in [0, 1]".into()));
        }
        Ok(EvolutionConfig {
            n,
            p,
            lambda,
            seed,
            max_steps: DEFAULT_MAX_STEPS,
        })
    }

    pub fn with_max_steps(mut self, max_steps: u64) -> Self {
        self.max_steps = max_steps;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    /// `a` consecutive proposals were rejected.
    Stagnation,
    /// The proposal cap was reached first.
    StepCap,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EvolutionRun {
    pub config: EvolutionConfig,
    /// (proposal index, Q) — entry 0 is the initial network, then one entry
    /// per accepted proposal. Q values are strictly increasing.
    pub q_trace: Vec<(u64, f64)>,
    pub final_network: DirectedNetwork,
    pub stop_reason: StopReason,
}

impl EvolutionRun {
    pub fn final_q(&self) -> f64 {
        self.q_trace.last().expect("trace has the initial entry").1
    }
}

/// Q(λ) = λ·Eff_D + (1−λ)·Eff_L.
pub fn quality(g: &DirectedNetwork, lambda: f64) -> Result<f64, EvolveError> {
    let eff_d = arcpaths::directed_efficiency(g)?;
    let eff_l = arcpaths::lateral_efficiency(g)?;
    Ok(lambda * eff_d + (1.0 - lambda) * eff_l)
}

/// Run the optimizer. Fully reproducible from the config seed.
pub fn evolve(config: EvolutionConfig) -> Result<EvolutionRun, EvolveError> {
    let initial = random_er(config.n, config.p, config.seed)?;
    let a = initial.arc_count();
    if a < 2 {
        return Err(EvolveError::Config(format!(
            "initial network has {a} arcs; need at least 2"
        )));
    }
    let n = config.n;
    let nodes: Vec<String> = initial.node_names().to_vec();
    let mut arcs: Vec<(usize, usize)> = initial.arcs().to_vec();
    let mut present: HashSet<(usize, usize)> = arcs.iter().copied().collect();
    let quality_of = |arcs: &[(usize, usize)]| -> Result<f64, EvolveError> {
        let g = DirectedNetwork::new(nodes.clone(), arcs.to_vec(), true)?;
        quality(&g, config.lambda)
    };
    let mut q = quality_of(&arcs)?;
    let mut q_trace = vec![(0u64, q)];
    let mut rng = config.seed.child(1, 0).rng();
    let mut consecutive_rejects = 0usize;
    let mut steps = 0u64;
    let mut stop_reason = StopReason::StepCap;
    while steps < config.max_steps {
        if consecutive_rejects >= a {
            stop_reason = StopReason::Stagnation;
            break;
        }
        steps += 1;
        let idx = rng.gen_range(0..a);
        let removed = arcs[idx];
        present.remove(&removed);
        // Uniform absent ordered pair without self-loops. The pair just
        // removed is absent, so re-adding it is a legal (always rejected)
        // proposal and the sampling loop terminates.
        let added = loop {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            if i != j && !present.contains(&(i, j)) {
                break (i, j);
            }
        };
        present.insert(added);
        arcs[idx] = added;
        let q_new = quality_of(&arcs)?;
        if q_new > q {
            q = q_new;
            q_trace.push((steps, q));
            consecutive_rejects = 0;
        } else {
            present.remove(&added);
            present.insert(removed);
            arcs[idx] = removed;
            consecutive_rejects += 1;
        }
    }
    if consecutive_rejects >= a {
        stop_reason = StopReason::Stagnation;
    }
    let final_network = DirectedNetwork::new(nodes, arcs, true)?;
    Ok(EvolutionRun {
        config,
        q_trace,
        final_network,
        stop_reason,
    })
}

/// Run many configurations, concurrently when the `parallel` feature is on.
/// Results are in input order and independent of scheduling.
pub fn evolve_batch(configs: &[EvolutionConfig]) -> Vec<Result<EvolutionRun, EvolveError>> {
    par::map_range(configs.len(), |i| evolve(configs[i]))
}

/// Pearson correlation; `None` when either side has zero variance (or
/// fewer than 2 points).
pub fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len();
    if n != ys.len() || n < 2 {
        return None;
    }
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let (mx, my) = (mean(xs), mean(ys));
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}

/// Pearson correlation between the per-arc LBC and DBC vectors of `g`;
/// `None` when either vector has zero variance.
pub fn lbc_dbc_correlation(g: &DirectedNetwork) -> Result<Option<f64>, EvolveError> {
    if g.arc_count() < 2 {
        return Err(EvolveError::Config(
            "correlation needs at least 2 arcs".into(),
        ));
    }
    let lbc = arcpaths::betweenness(&arcpaths::lateral_metric(g));
    let dbc = arcpaths::betweenness(&arcpaths::directed_metric(g));
    Ok(pearson(&lbc.values, &dbc.values))
}
