//! Exact minimal thresholds for colorings with `c` colors that must show
//! `d` distinct colors in every wedge, and sweeps over instance families.

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::backtrack::prefix_search;
use crate::coloring::{Color, Coloring};
use crate::generate::{generate_set, random_set, Kind};
use crate::geom::{OrderedPointSet, Rank};
use crate::verify::verify;
use crate::{Error, Result};

/// Minimal threshold together with its proof data.
#[derive(Clone, Debug, Serialize)]
pub struct ThresholdCertificate {
    pub threshold: usize,
    /// A coloring passing `verify(threshold, d)`.
    pub witness: Coloring,
    /// Backtracking nodes spent over all thresholds tried.
    pub nodes: u64,
}

/// Smallest `m >= d` such that some coloring with colors `1..=c` passes
/// `verify(set, coloring, m, d)`. Thresholds are tried in ascending order and
/// each failure is an exhaustive refutation, so the answer is certified.
/// Each threshold gets its own `node_budget`.
pub fn min_feasible_threshold(
    set: &OrderedPointSet,
    c: usize,
    d: usize,
    node_budget: u64,
) -> Result<ThresholdCertificate> {
    if d == 0 || c < d {
        return Err(Error::Domain(format!("need c >= d >= 1, got c={c}, d={d}")));
    }
    let colors: Vec<Color> = (1..=c as Color).collect();
    let mut nodes = 0;
    for m in d..=set.len().max(d) + 1 {
        let out = prefix_search(set, &colors, m, d, node_budget)?;
        nodes += out.nodes;
        if let Some(witness) = out.coloring {
            if !verify(set, &witness, m, d)?.is_empty() {
                return Err(Error::Contract(format!("witness at m={m} fails verification")));
            }
            return Ok(ThresholdCertificate {
                threshold: m,
                witness,
                nodes,
            });
        }
    }
    unreachable!("a threshold above the set size is vacuous")
}

#[derive(Clone, Debug, Serialize)]
pub enum Generator {
    /// Every ordered rank configuration with `1..=n_max` points, up to
    /// exchanging the two axes.
    Exhaustive { n_max: usize },
    /// `count` uniformly random configurations of `n` points.
    Random { n: usize, count: usize, seed: u64 },
    /// One instance of `kind` per size `1..=n_max`.
    Family { kind: Kind, n_max: usize, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub instance_id: String,
    #[serde(skip)]
    pub set: OrderedPointSet,
    /// `None` when the budget ran out before the threshold was certified.
    pub threshold: Option<usize>,
    #[serde(skip)]
    pub witness: Option<Coloring>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub colors: usize,
    pub distinct: usize,
    pub instances: usize,
    pub max_threshold: usize,
    pub argmax: Vec<String>,
    pub budget_exhausted: Vec<String>,
    pub results: Vec<InstanceResult>,
}

/// Configurations `(xs, ys)` with time = index, keeping one representative
/// of each pair related by swapping the axes.
pub fn exhaustive_configurations(n: usize) -> Vec<(Vec<Rank>, Vec<Rank>)> {
    let perms: Vec<Vec<Rank>> = (1..=n as Rank).permutations(n).collect();
    let mut out = Vec::new();
    for xs in &perms {
        for ys in &perms {
            if xs <= ys {
                out.push((xs.clone(), ys.clone()));
            }
        }
    }
    out
}

fn perm_label(v: &[Rank]) -> String {
    v.iter().map(|r| r.to_string()).join(".")
}

fn instances(generator: &Generator) -> Vec<(String, OrderedPointSet)> {
    match *generator {
        Generator::Exhaustive { n_max } => (1..=n_max)
            .flat_map(exhaustive_configurations)
            .map(|(xs, ys)| {
                let id = format!("n{}-x{}-y{}", xs.len(), perm_label(&xs), perm_label(&ys));
                (id, OrderedPointSet::from_ranks(&xs, &ys).expect("permutations"))
            })
            .collect(),
        Generator::Random { n, count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|i| (format!("random-s{seed}-{i}"), random_set(n, &mut rng)))
                .collect()
        }
        Generator::Family { kind, n_max, seed } => (1..=n_max)
            .map(|n| (format!("{kind}-{n}"), generate_set(kind, n, seed)))
            .collect(),
    }
}

/// Minimal thresholds over every generated instance, with the maximum and
/// the instances attaining it. Instances run in parallel; results keep
/// generation order.
pub fn sweep(generator: &Generator, c: usize, d: usize, node_budget: u64) -> Result<SweepReport> {
    if d == 0 || c < d {
        return Err(Error::Domain(format!("need c >= d >= 1, got c={c}, d={d}")));
    }
    let results: Vec<InstanceResult> = instances(generator)
        .into_par_iter()
        .map(|(instance_id, set)| {
            match min_feasible_threshold(&set, c, d, node_budget) {
                Ok(cert) => Ok(InstanceResult {
                    instance_id,
                    set,
                    threshold: Some(cert.threshold),
                    witness: Some(cert.witness),
                }),
                Err(Error::BudgetExhausted { .. }) => Ok(InstanceResult {
                    instance_id,
                    set,
                    threshold: None,
                    witness: None,
                }),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;
    let max_threshold = results.iter().filter_map(|r| r.threshold).max().unwrap_or(0);
    let argmax = results
        .iter()
        .filter(|r| r.threshold == Some(max_threshold))
        .map(|r| r.instance_id.clone())
        .collect();
    let budget_exhausted = results
        .iter()
        .filter(|r| r.threshold.is_none())
        .map(|r| r.instance_id.clone())
        .collect();
    Ok(SweepReport {
        colors: c,
        distinct: d,
        instances: results.len(),
        max_threshold,
        argmax,
        budget_exhausted,
        results,
    })
}
