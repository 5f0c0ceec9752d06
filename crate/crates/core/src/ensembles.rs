//! Reproducible random-graph ensembles: Erdős–Rényi graphs and uniformly
//! random labeled trees, with several link-weight laws.
//!
//! Every sample is a pure function of its [`EnsembleSpec`]. Monte-Carlo
//! trials derive per-trial seeds with [`derive_seed`], so results do not
//! depend on how trials are scheduled across threads.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Exp, Open01};

use crate::error::{Error, Result};
use crate::graph::{build_graph, WeightedGraph};

/// Law of the i.i.d. link weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightModel {
    Identical(f64),
    /// Uniform on the open interval (0, 1).
    Uniform01,
    Exponential { mean: f64 },
    /// Uniform over the integers `lo..=hi`.
    IntegerUniform { lo: u32, hi: u32 },
}

impl WeightModel {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            WeightModel::Identical(w) => w > 0.0 && w.is_finite(),
            WeightModel::Uniform01 => true,
            WeightModel::Exponential { mean } => mean > 0.0 && mean.is_finite(),
            WeightModel::IntegerUniform { lo, hi } => lo >= 1 && lo <= hi,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidWeightModel(self.to_string()))
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match *self {
            WeightModel::Identical(w) => w,
            WeightModel::Uniform01 => Open01.sample(rng),
            WeightModel::Exponential { mean } => {
                let exp = Exp::new(1.0 / mean).expect("validated mean");
                loop {
                    let w: f64 = exp.sample(rng);
                    if w > 0.0 {
                        break w;
                    }
                }
            }
            WeightModel::IntegerUniform { lo, hi } => rng.random_range(lo..=hi) as f64,
        }
    }

    /// True when weights are drawn from a continuous law, so ties between
    /// potentials occur with probability zero.
    pub fn is_continuous(&self) -> bool {
        matches!(self, WeightModel::Uniform01 | WeightModel::Exponential { .. })
    }
}

impl fmt::Display for WeightModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WeightModel::Identical(1.0) => write!(f, "identical"),
            WeightModel::Identical(w) => write!(f, "identical:{w}"),
            WeightModel::Uniform01 => write!(f, "uniform"),
            WeightModel::Exponential { mean } => write!(f, "exp:{mean}"),
            WeightModel::IntegerUniform { lo, hi } => write!(f, "int:{lo}:{hi}"),
        }
    }
}

/// Parses `identical[:w]`, `uniform`, `exp:<mean>` or `int:<lo>:<hi>`.
impl FromStr for WeightModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidWeightModel(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        let model = match parts.as_slice() {
            ["identical"] => WeightModel::Identical(1.0),
            ["identical", w] => WeightModel::Identical(w.parse().map_err(|_| bad())?),
            ["uniform"] => WeightModel::Uniform01,
            ["exp", m] => WeightModel::Exponential {
                mean: m.parse().map_err(|_| bad())?,
            },
            ["int", lo, hi] => WeightModel::IntegerUniform {
                lo: lo.parse().map_err(|_| bad())?,
                hi: hi.parse().map_err(|_| bad())?,
            },
            _ => return Err(bad()),
        };
        model.validate()?;
        Ok(model)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphModel {
    Er { p: f64 },
    Tree,
}

/// Full description of one random graph draw.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleSpec {
    pub n: usize,
    pub model: GraphModel,
    pub weights: WeightModel,
    pub seed: u64,
}

impl EnsembleSpec {
    pub fn er(n: usize, p: f64, weights: WeightModel, seed: u64) -> Self {
        EnsembleSpec {
            n,
            model: GraphModel::Er { p },
            weights,
            seed,
        }
    }

    pub fn tree(n: usize, weights: WeightModel, seed: u64) -> Self {
        EnsembleSpec {
            n,
            model: GraphModel::Tree,
            weights,
            seed,
        }
    }

    /// Same spec reseeded for Monte-Carlo trial `trial`.
    pub fn for_trial(&self, trial: u64) -> Self {
        EnsembleSpec {
            seed: derive_seed(self.seed, trial),
            ..*self
        }
    }

    pub fn sample(&self) -> Result<WeightedGraph> {
        match self.model {
            GraphModel::Er { .. } => sample_er(self),
            GraphModel::Tree => sample_tree(self),
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of stream `index` under base seed `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index.wrapping_add(0x632b_e59b_d9b4_e019)))
}

/// Generator for one seed.
pub fn rng_from_seed(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G_p(n)`: each unordered pair is linked independently with
/// probability `p`.
///
/// Pairs are visited in lexicographic order by geometric skipping, which has
/// the same law as one Bernoulli trial per pair.
pub fn sample_er(spec: &EnsembleSpec) -> Result<WeightedGraph> {
    let GraphModel::Er { p } = spec.model else {
        return Err(Error::InvalidProbability(f64::NAN));
    };
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidProbability(p));
    }
    if spec.n < 2 {
        return Err(Error::EmptyGraph);
    }
    spec.weights.validate()?;
    let n = spec.n;
    let mut rng = rng_from_seed(spec.seed);
    let mut links = Vec::new();
    if p == 1.0 {
        for i in 0..n {
            for j in i + 1..n {
                links.push((i, j, spec.weights.sample(&mut rng)));
            }
        }
        return build_graph(n, links);
    }
    let log_q = (1.0 - p).ln();
    // Row-major walk over the strict upper triangle. `(i, i)` stands for the
    // position just before the first pair `(i, i + 1)` of row `i`.
    let (mut i, mut j) = (0usize, 0usize);
    loop {
        let u: f64 = Open01.sample(&mut rng);
        let skip = (u.ln() / log_q).floor();
        // advance j by skip + 1 positions, wrapping into later rows
        let mut advance = if skip >= (n * n) as f64 { n * n } else { skip as usize + 1 };
        while advance > 0 {
            let room = n - 1 - j;
            if advance <= room {
                j += advance;
                advance = 0;
            } else {
                advance -= room;
                i += 1;
                if i >= n - 1 {
                    break;
                }
                j = i;
            }
        }
        if i >= n - 1 {
            break;
        }
        links.push((i, j, spec.weights.sample(&mut rng)));
    }
    build_graph(n, links)
}

/// Uniformly random labeled tree decoded from a random Prüfer sequence.
pub fn sample_tree(spec: &EnsembleSpec) -> Result<WeightedGraph> {
    let n = spec.n;
    if n < 2 {
        return Err(Error::EmptyGraph);
    }
    spec.weights.validate()?;
    let mut rng = rng_from_seed(spec.seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let pairs = prufer_decode(n, &seq);
    let links: Vec<_> = pairs
        .into_iter()
        .map(|(a, b)| (a, b, spec.weights.sample(&mut rng)))
        .collect();
    build_graph(n, links)
}

/// Decodes a Prüfer sequence of length `n − 2` into `n − 1` tree links.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut links = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        links.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    links.push((a, b));
    links
}
