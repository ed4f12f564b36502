//! Finite-state measures, kernels, Dirichlet forms, spectral gaps, and
//! one-step Lipschitz constants, plus exact enumeration oracles and Monte
//! Carlo tail estimators for small state spaces.
//!
//! Everything here is immutable after construction and safe to share
//! across workers. The Monte Carlo routines parallelize over fixed-size
//! replicas with derived RNG streams and merge results in replica order,
//! so thread count never changes a result.

use std::collections::HashMap;
use std::hash::Hash;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::symmetric_eigenvalues;
use crate::rng::{rng_stream, StreamRng};

/// Probability weights must sum to 1 within this tolerance.
pub const MEASURE_TOL: f64 = 1e-12;
/// Kernel rows must sum to 1 within this tolerance.
pub const KERNEL_TOL: f64 = 1e-12;
/// Reversibility precondition tolerance for spectral computations.
pub const GAP_REVERSIBILITY_TOL: f64 = 1e-10;
/// Off-diagonal residual target for the dense eigensolver.
pub const EIGEN_TOL: f64 = 1e-10;
/// Default cap on enumerable state spaces.
pub const DEFAULT_STATE_CAP: usize = 20_000;

/// A probability measure on an indexed finite state space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiniteMeasure {
    weights: Vec<f64>,
}

impl FiniteMeasure {
    /// Validate nonnegative weights summing to 1 within [`MEASURE_TOL`].
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidMeasure("no states".into()));
        }
        if let Some(w) = weights.iter().find(|w| !(**w >= 0.0)) {
            return Err(Error::InvalidMeasure(format!("negative or NaN weight {w}")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > MEASURE_TOL {
            return Err(Error::InvalidMeasure(format!("weights sum to {sum}, not 1")));
        }
        Ok(Self { weights })
    }

    /// Normalize arbitrary nonnegative weights.
    pub fn from_unnormalized(weights: Vec<f64>) -> Result<Self> {
        let sum: f64 = weights.iter().sum();
        if !(sum > 0.0) {
            return Err(Error::InvalidMeasure(format!("total weight {sum} not positive")));
        }
        Self::new(weights.iter().map(|w| w / sum).collect())
    }

    /// The uniform measure on `n` states.
    pub fn uniform(n: usize) -> Self {
        Self { weights: vec![1.0 / n as f64; n] }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, state: usize) -> f64 {
        self.weights[state]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Non-degenerate means every state carries positive weight; spectral
    /// quantities are only defined in that case.
    pub fn check_non_degenerate(&self) -> Result<()> {
        match self.weights.iter().position(|w| *w <= 0.0) {
            Some(state) => Err(Error::DegenerateMeasure { state, weight: self.weights[state] }),
            None => Ok(()),
        }
    }

    /// Sample a state index.
    pub fn sample(&self, rng: &mut StreamRng) -> usize {
        sample_discrete(&self.weights, rng)
    }
}

/// Draw an index from a normalized weight slice by inverse CDF scan.
pub(crate) fn sample_discrete(weights: &[f64], rng: &mut StreamRng) -> usize {
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (i, w) in weights.iter().enumerate() {
        acc += w;
        if u < acc {
            return i;
        }
    }
    weights.len() - 1
}

/// An explicit row-stochastic transition matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseKernel {
    dim: usize,
    entries: Vec<f64>, // row-major
}

impl DenseKernel {
    /// Validate nonnegative entries with rows summing to 1 within
    /// [`KERNEL_TOL`].
    pub fn new(dim: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {dim} x {dim} kernel, got {}",
                dim * dim,
                entries.len()
            )));
        }
        for (i, row) in entries.chunks_exact(dim).enumerate() {
            if let Some(e) = row.iter().find(|e| !(**e >= 0.0)) {
                return Err(Error::InvalidKernel(format!("row {i} has entry {e}")));
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > KERNEL_TOL {
                return Err(Error::InvalidKernel(format!("row {i} sums to {sum}")));
            }
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let dim = rows.len();
        Self::new(dim, rows.into_iter().flatten().collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, from: usize, to: usize) -> f64 {
        self.entries[from * self.dim + to]
    }

    pub fn row(&self, from: usize) -> &[f64] {
        &self.entries[from * self.dim..(from + 1) * self.dim]
    }

    /// Matrix product with another kernel over the same space.
    pub fn compose(&self, other: &DenseKernel) -> Result<DenseKernel> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.dim, other.dim)));
        }
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for x in 0..n {
            for k in 0..n {
                let p = self.entries[x * n + k];
                if p == 0.0 {
                    continue;
                }
                let row = &other.entries[k * n..(k + 1) * n];
                for (o, q) in out[x * n..(x + 1) * n].iter_mut().zip(row) {
                    *o += p * q;
                }
            }
        }
        // Products of stochastic matrices are stochastic up to roundoff.
        Ok(DenseKernel { dim: n, entries: out })
    }

    /// Sample one step from `from`.
    pub fn step(&self, from: usize, rng: &mut StreamRng) -> usize {
        sample_discrete(self.row(from), rng)
    }
}

/// A chain too large to materialize: a one-step sampler plus a per-state
/// enumerator of `(successor, probability)` pairs with duplicates merged.
pub trait ImplicitKernel {
    type State: Clone;

    /// One step of the chain from `state`.
    fn step(&self, state: &Self::State, rng: &mut StreamRng) -> Self::State;

    /// All one-step successors with their probabilities (summing to 1).
    fn neighbors(&self, state: &Self::State) -> Vec<(Self::State, f64)>;

    /// Number of coordinates in a state, for reporting.
    fn state_dimension(&self) -> usize;
}

fn check_dims(mu: &FiniteMeasure, kernel: &DenseKernel) -> Result<usize> {
    if mu.len() != kernel.dim() {
        return Err(Error::DimensionMismatch(format!(
            "measure has {} states, kernel {}",
            mu.len(),
            kernel.dim()
        )));
    }
    Ok(mu.len())
}

/// Max-norm residual of the stationarity equation `mu P = mu`.
pub fn stationarity_residual(mu: &FiniteMeasure, kernel: &DenseKernel) -> Result<f64> {
    let n = check_dims(mu, kernel)?;
    let mut worst = 0.0f64;
    for x in 0..n {
        let mut image = 0.0;
        for y in 0..n {
            image += mu.weight(y) * kernel.entry(y, x);
        }
        worst = worst.max((mu.weight(x) - image).abs());
    }
    Ok(worst)
}

/// Whether `mu P = mu` holds within `tol`.
pub fn check_stationary(mu: &FiniteMeasure, kernel: &DenseKernel, tol: f64) -> Result<bool> {
    Ok(stationarity_residual(mu, kernel)? <= tol)
}

/// Max-norm residual of detailed balance `mu(x) P(x,y) = mu(y) P(y,x)`.
pub fn reversibility_residual(mu: &FiniteMeasure, kernel: &DenseKernel) -> Result<f64> {
    let n = check_dims(mu, kernel)?;
    let mut worst = 0.0f64;
    for x in 0..n {
        for y in x + 1..n {
            let flow = mu.weight(x) * kernel.entry(x, y) - mu.weight(y) * kernel.entry(y, x);
            worst = worst.max(flow.abs());
        }
    }
    Ok(worst)
}

/// Whether detailed balance holds within `tol`.
pub fn check_reversible(mu: &FiniteMeasure, kernel: &DenseKernel, tol: f64) -> Result<bool> {
    Ok(reversibility_residual(mu, kernel)? <= tol)
}

/// Expectation of `f` under `mu`.
pub fn mean(mu: &FiniteMeasure, f: &[f64]) -> f64 {
    assert_eq!(mu.len(), f.len(), "observable must be defined on every state");
    mu.weights().iter().zip(f).map(|(w, v)| w * v).sum()
}

/// Variance of `f` under `mu`.
pub fn variance(mu: &FiniteMeasure, f: &[f64]) -> f64 {
    let m = mean(mu, f);
    mu.weights().iter().zip(f).map(|(w, v)| w * (v - m) * (v - m)).sum()
}

/// Dirichlet form as the pair-difference sum
/// `(1/2) sum_{x,y} (f(x)-f(y))(g(x)-g(y)) mu(x) P(x,y)`.
pub fn dirichlet_form(
    mu: &FiniteMeasure,
    kernel: &DenseKernel,
    f: &[f64],
    g: &[f64],
) -> Result<f64> {
    let n = check_dims(mu, kernel)?;
    if f.len() != n || g.len() != n {
        return Err(Error::DimensionMismatch("observable length".into()));
    }
    let mut total = 0.0;
    for x in 0..n {
        let wx = mu.weight(x);
        if wx == 0.0 {
            continue;
        }
        for y in 0..n {
            total += (f[x] - f[y]) * (g[x] - g[y]) * wx * kernel.entry(x, y);
        }
    }
    Ok(0.5 * total)
}

/// The same form evaluated through the generator: `sum f(x) ((I-P)g)(x) mu(x)`.
///
/// Agrees with [`dirichlet_form`] when `mu` is reversible for the kernel;
/// both paths are exposed so that equivalence is testable.
pub fn dirichlet_form_operator(
    mu: &FiniteMeasure,
    kernel: &DenseKernel,
    f: &[f64],
    g: &[f64],
) -> Result<f64> {
    let n = check_dims(mu, kernel)?;
    if f.len() != n || g.len() != n {
        return Err(Error::DimensionMismatch("observable length".into()));
    }
    let mut total = 0.0;
    for x in 0..n {
        let pg: f64 = (0..n).map(|y| kernel.entry(x, y) * g[y]).sum();
        total += f[x] * (g[x] - pg) * mu.weight(x);
    }
    Ok(total)
}

/// Full spectrum of the kernel in the `mu`-weighted inner product, sorted
/// in descending order.
///
/// Requires detailed balance within [`GAP_REVERSIBILITY_TOL`] and a
/// non-degenerate measure; under those conditions the symmetrization
/// `D^{1/2} P D^{-1/2}` is symmetric with the same spectrum, and a Jacobi
/// eigensolve resolves it to [`EIGEN_TOL`].
pub fn spectrum(mu: &FiniteMeasure, kernel: &DenseKernel) -> Result<Vec<f64>> {
    let n = check_dims(mu, kernel)?;
    if n < 2 {
        return Err(Error::InvalidArgument("spectral gap needs at least 2 states".into()));
    }
    mu.check_non_degenerate()?;
    let residual = reversibility_residual(mu, kernel)?;
    if residual > GAP_REVERSIBILITY_TOL {
        return Err(Error::NotReversible { residual, tol: GAP_REVERSIBILITY_TOL });
    }
    let sqrt: Vec<f64> = mu.weights().iter().map(|w| w.sqrt()).collect();
    let mut sym = vec![0.0; n * n];
    for x in 0..n {
        for y in 0..n {
            sym[x * n + y] = sqrt[x] * kernel.entry(x, y) / sqrt[y];
        }
    }
    // Kill the roundoff asymmetry before the eigensolve.
    for x in 0..n {
        for y in x + 1..n {
            let avg = 0.5 * (sym[x * n + y] + sym[y * n + x]);
            sym[x * n + y] = avg;
            sym[y * n + x] = avg;
        }
    }
    symmetric_eigenvalues(n, &sym, EIGEN_TOL)
}

/// Spectral gap `1 - lambda_2`, the minimal Rayleigh quotient
/// `E(f,f) / Var(f)` over nonconstant `f`.
pub fn spectral_gap(mu: &FiniteMeasure, kernel: &DenseKernel) -> Result<f64> {
    let eigs = spectrum(mu, kernel)?;
    Ok(1.0 - eigs[1])
}

/// A Lipschitz value tagged with whether it is an exact maximum or a
/// sampled lower bound on the true maximum.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LipEstimate {
    pub value: f64,
    /// True when the maximum ran over the entire state space.
    pub exact: bool,
}

/// Squared one-step deviation of `f` at one state given its outgoing
/// probabilities, restricted to decreases of `f` in the asymmetric variant.
fn deviation_sq(fx: f64, outcomes: impl Iterator<Item = (f64, f64)>, asymmetric: bool) -> f64 {
    let mut total = 0.0;
    for (p, fy) in outcomes {
        let d = fx - fy;
        if asymmetric && d <= 0.0 {
            continue;
        }
        total += p * d * d;
    }
    total
}

/// One-step Lipschitz constant over an explicit kernel: the max over states
/// of the root mean square one-step change of `f` (decreases only when
/// `asymmetric`). Exact.
pub fn lip_constant_dense(kernel: &DenseKernel, f: &[f64], asymmetric: bool) -> Result<LipEstimate> {
    let n = kernel.dim();
    if f.len() != n {
        return Err(Error::DimensionMismatch("observable length".into()));
    }
    let mut worst = 0.0f64;
    for x in 0..n {
        let row = kernel.row(x);
        let d = deviation_sq(f[x], row.iter().copied().zip(f.iter().copied()), asymmetric);
        worst = worst.max(d);
    }
    Ok(LipEstimate { value: worst.sqrt(), exact: true })
}

/// One-step Lipschitz constant of an implicit kernel over a supplied state
/// list. The result is a certified lower bound on the true maximum (tagged
/// not exact); analytic upper bounds are carried separately by callers.
pub fn lip_constant_implicit<K: ImplicitKernel>(
    kernel: &K,
    f: impl Fn(&K::State) -> f64,
    asymmetric: bool,
    states: &[K::State],
) -> Result<LipEstimate> {
    if states.is_empty() {
        return Err(Error::EmptyStates);
    }
    let mut worst = 0.0f64;
    for state in states {
        let fx = f(state);
        let d = deviation_sq(
            fx,
            kernel.neighbors(state).iter().map(|(y, p)| (*p, f(y))),
            asymmetric,
        );
        worst = worst.max(d);
    }
    Ok(LipEstimate { value: worst.sqrt(), exact: false })
}

/// Root mean square `t`-step decrease of `f` under the joint law
/// `mu(x_0) P^t(x_0, x_t)`, computed exactly from matrix powers.
///
/// Bounded by `t` times the asymmetric one-step Lipschitz constant.
pub fn t_step_asym_deviation(
    mu: &FiniteMeasure,
    kernel: &DenseKernel,
    f: &[f64],
    t: usize,
    cap: usize,
) -> Result<f64> {
    let n = check_dims(mu, kernel)?;
    if f.len() != n {
        return Err(Error::DimensionMismatch("observable length".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded { states: n, cap });
    }
    if t == 0 {
        return Ok(0.0);
    }
    let mut power = kernel.clone();
    for _ in 1..t {
        power = power.compose(kernel)?;
    }
    let mut total = 0.0;
    for x in 0..n {
        let wx = mu.weight(x);
        if wx == 0.0 {
            continue;
        }
        total += wx * deviation_sq(f[x], power.row(x).iter().copied().zip(f.iter().copied()), true);
    }
    Ok(total.sqrt())
}

/// Exact positive and negative fluctuation probabilities
/// `(P(f - E f >= a), P(-(f - E f) >= a))` by enumeration. States exactly
/// at the level count toward the event.
pub fn exact_fluctuations(mu: &FiniteMeasure, f: &[f64], a: f64) -> (f64, f64) {
    let m = mean(mu, f);
    let mut plus = 0.0;
    let mut minus = 0.0;
    for (w, v) in mu.weights().iter().zip(f) {
        let g = v - m;
        if g >= a {
            plus += w;
        }
        if -g >= a {
            minus += w;
        }
    }
    (plus, minus)
}

/// Exact `(int_0^inf F^+(t) dt, int_0^inf F^-(t) dt)` by piecewise-constant
/// integration over the sorted level sets. The two integrals agree because
/// the centered observable has zero mean.
pub fn fluctuation_integrals(mu: &FiniteMeasure, f: &[f64]) -> (f64, f64) {
    let m = mean(mu, f);
    let centered: Vec<(f64, f64)> = mu.weights().iter().zip(f).map(|(w, v)| (v - m, *w)).collect();
    let flipped: Vec<(f64, f64)> = centered.iter().map(|(g, w)| (-g, *w)).collect();
    (piecewise_tail_integral(&centered), piecewise_tail_integral(&flipped))
}

/// `int_0^inf mass{g >= t} dt` for a finite weighted sample, exactly.
fn piecewise_tail_integral(sample: &[(f64, f64)]) -> f64 {
    let mut positive: Vec<(f64, f64)> = sample.iter().copied().filter(|(g, _)| *g > 0.0).collect();
    positive.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite values"));
    let mut integral = 0.0;
    let mut mass = 0.0;
    let mut i = 0;
    while i < positive.len() {
        let level = positive[i].0;
        while i < positive.len() && positive[i].0 == level {
            mass += positive[i].1;
            i += 1;
        }
        let next = if i < positive.len() { positive[i].0 } else { 0.0 };
        integral += mass * (level - next);
    }
    integral
}

/// How the centering mean is estimated for empirical tails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Centering {
    /// Mean from an independent replica set (default: avoids correlation
    /// between the centering and the counted events).
    IndependentRun,
    /// Mean from the same samples that are counted; flagged in output.
    SameRun,
}

/// Monte Carlo tail estimates of `P(f - E f >= a)` for a grid of levels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TailCurve {
    pub levels: Vec<f64>,
    /// Binomial point estimates per level.
    pub estimates: Vec<f64>,
    /// Binomial standard errors per level.
    pub std_errors: Vec<f64>,
    /// Estimated centering mean and its standard error.
    pub mean: f64,
    pub mean_std_error: f64,
    pub n_samples: usize,
    pub centering: Centering,
}

/// Samples per deterministic replica; fixed so that parallelism cannot
/// change results.
const REPLICA_CHUNK: usize = 4096;

fn replica_sizes(n_samples: usize) -> Vec<(u64, usize)> {
    let replicas = n_samples.div_ceil(REPLICA_CHUNK);
    (0..replicas)
        .map(|r| {
            let start = r * REPLICA_CHUNK;
            (r as u64, REPLICA_CHUNK.min(n_samples - start))
        })
        .collect()
}

/// Estimate the tail curve of `f` over samples drawn by `sampler`.
///
/// Deterministic for fixed `(seed, levels, n_samples, centering)`: replica
/// `r` draws from `rng_stream(seed, label, r)` and partial results merge in
/// replica order.
pub fn empirical_tail_curve<S, Samp, F>(
    sampler: &Samp,
    f: &F,
    levels: &[f64],
    n_samples: usize,
    seed: u64,
    centering: Centering,
) -> Result<TailCurve>
where
    S: Send,
    Samp: Fn(&mut StreamRng) -> S + Sync,
    F: Fn(&S) -> f64 + Sync,
{
    if n_samples == 0 {
        return Err(Error::InvalidArgument("n_samples must be >= 1".into()));
    }
    if levels.is_empty() {
        return Err(Error::InvalidArgument("levels must be non-empty".into()));
    }

    let values_for = |label: &'static str| -> Vec<f64> {
        replica_sizes(n_samples)
            .into_par_iter()
            .map(|(r, count)| {
                let mut rng = rng_stream(seed, label, r);
                (0..count).map(|_| f(&sampler(&mut rng))).collect::<Vec<f64>>()
            })
            .collect::<Vec<Vec<f64>>>()
            .concat()
    };

    let samples = values_for("tail");
    let (mean, mean_se) = match centering {
        Centering::IndependentRun => moments(&values_for("mean")),
        Centering::SameRun => moments(&samples),
    };

    let n = n_samples as f64;
    let mut estimates = Vec::with_capacity(levels.len());
    let mut std_errors = Vec::with_capacity(levels.len());
    for &a in levels {
        let count = samples.iter().filter(|v| **v - mean >= a).count();
        let p = count as f64 / n;
        estimates.push(p);
        std_errors.push((p * (1.0 - p) / n).sqrt());
    }

    Ok(TailCurve {
        levels: levels.to_vec(),
        estimates,
        std_errors,
        mean,
        mean_std_error: mean_se,
        n_samples,
        centering,
    })
}

fn moments(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Single-level convenience wrapper around [`empirical_tail_curve`].
pub fn empirical_tail<S, Samp, F>(
    sampler: &Samp,
    f: &F,
    a: f64,
    n_samples: usize,
    seed: u64,
    centering: Centering,
) -> Result<(f64, f64)>
where
    S: Send,
    Samp: Fn(&mut StreamRng) -> S + Sync,
    F: Fn(&S) -> f64 + Sync,
{
    let curve = empirical_tail_curve(sampler, f, &[a], n_samples, seed, centering)?;
    Ok((curve.estimates[0], curve.std_errors[0]))
}

/// Chi-square statistic comparing `n_samples` draws of `kernel.step` from
/// `state` against the enumerated neighbor distribution. Returns
/// `(statistic, degrees_of_freedom)`; a draw outside the neighbor list
/// yields an infinite statistic.
pub fn one_step_chi_square<K>(
    kernel: &K,
    state: &K::State,
    n_samples: usize,
    seed: u64,
) -> (f64, usize)
where
    K: ImplicitKernel,
    K::State: Eq + Hash,
{
    let neighbors = kernel.neighbors(state);
    let index: HashMap<&K::State, usize> =
        neighbors.iter().enumerate().map(|(i, (s, _))| (s, i)).collect();
    let mut counts = vec![0usize; neighbors.len()];
    let mut rng = rng_stream(seed, "one-step-chi-square", 0);
    for _ in 0..n_samples {
        let next = kernel.step(state, &mut rng);
        match index.get(&next) {
            Some(&i) => counts[i] += 1,
            None => return (f64::INFINITY, neighbors.len().saturating_sub(1)),
        }
    }
    let mut chi2 = 0.0;
    for (&count, (_, p)) in counts.iter().zip(&neighbors) {
        let expected = p * n_samples as f64;
        if expected > 0.0 {
            chi2 += (count as f64 - expected).powi(2) / expected;
        } else if count > 0 {
            return (f64::INFINITY, neighbors.len().saturating_sub(1));
        }
    }
    (chi2, neighbors.len().saturating_sub(1))
}

#[cfg(test)]
pub(crate) fn random_reversible(n: usize, seed: u64) -> (FiniteMeasure, DenseKernel) {
    // Random walk on a complete weighted graph is reversible for the
    // degree measure.
    let mut rng = rng_stream(seed, "random-reversible", 0);
    let mut w = vec![0.0; n * n];
    for x in 0..n {
        for y in x..n {
            let v: f64 = 0.05 + rng.random::<f64>();
            w[x * n + y] = v;
            w[y * n + x] = v;
        }
    }
    let degrees: Vec<f64> = (0..n).map(|x| w[x * n..(x + 1) * n].iter().sum()).collect();
    let total: f64 = degrees.iter().sum();
    let mu = FiniteMeasure::new(degrees.iter().map(|d| d / total).collect()).unwrap();
    let mut rows = vec![0.0; n * n];
    for x in 0..n {
        for y in 0..n {
            rows[x * n + y] = w[x * n + y] / degrees[x];
        }
    }
    (mu, DenseKernel::new(n, rows).unwrap())
}
