//! Deterministic instance generators.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::geom::{project, rank_reduce, OrderedPointSet, RawPoint3, Rank};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kind {
    /// `(i, i, i)`: every pair comparable.
    Chain,
    /// `(i, n + 1 - i, i)`: every pair incomparable, arriving left to right.
    Antichain,
    /// Row-major square lattice with shuffled arrival; lattice ties are
    /// broken by id during rank reduction.
    Grid,
    /// Independent uniform permutations on each axis.
    Random,
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chain" => Ok(Kind::Chain),
            "antichain" => Ok(Kind::Antichain),
            "grid" => Ok(Kind::Grid),
            "random" => Ok(Kind::Random),
            other => Err(Error::Domain(format!("unknown instance kind '{other}'"))),
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::Chain => "chain",
            Kind::Antichain => "antichain",
            Kind::Grid => "grid",
            Kind::Random => "random",
        })
    }
}

fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> Vec<i64> {
    let mut v: Vec<i64> = (1..=n as i64).collect();
    v.shuffle(rng);
    v
}

/// `n` points of the given kind; the same `(kind, n, seed)` always gives the
/// same points. Only `Grid` and `Random` use the seed.
pub fn generate(kind: Kind, n: usize, seed: u64) -> Vec<RawPoint3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ni = n as i64;
    match kind {
        Kind::Chain => (1..=ni).map(|i| RawPoint3::from_ints(i as usize - 1, i, i, i)).collect(),
        Kind::Antichain => (1..=ni)
            .map(|i| RawPoint3::from_ints(i as usize - 1, i, ni + 1 - i, i))
            .collect(),
        Kind::Grid => {
            let w = (n as f64).sqrt().ceil().max(1.0) as i64;
            let zs = shuffled(n, &mut rng);
            (0..ni)
                .map(|i| RawPoint3::from_ints(i as usize, i % w + 1, i / w + 1, zs[i as usize]))
                .collect()
        }
        Kind::Random => {
            let xs = shuffled(n, &mut rng);
            let ys = shuffled(n, &mut rng);
            let zs = shuffled(n, &mut rng);
            (0..n).map(|i| RawPoint3::from_ints(i, xs[i], ys[i], zs[i])).collect()
        }
    }
}

/// Rank-reduced, projected instance of the given kind.
pub fn generate_set(kind: Kind, n: usize, seed: u64) -> OrderedPointSet {
    project(&rank_reduce(&generate(kind, n, seed))).expect("rank reduction yields distinct ranks")
}

/// A random ordered set with time `1..=n` and uniformly random x- and y-orders.
pub fn random_set(n: usize, rng: &mut impl rand::Rng) -> OrderedPointSet {
    let mut xs: Vec<Rank> = (1..=n as Rank).collect();
    let mut ys = xs.clone();
    xs.shuffle(rng);
    ys.shuffle(rng);
    OrderedPointSet::from_ranks(&xs, &ys).expect("permutations have distinct ranks")
}
