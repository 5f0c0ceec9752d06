//! Independent oracles and generators shared by the integration tests.
//! Nothing here calls the crate's linear algebra.

#![allow(dead_code)]

use flownet::{build_graph, WeightedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Gaussian elimination with partial pivoting on a dense system.
pub fn gauss_solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        let d = a[col][col];
        assert!(d.abs() > 1e-300, "singular system");
        for row in col + 1..n {
            let f = a[row][col] / d;
            if f != 0.0 {
                for k in col..n {
                    a[row][k] -= f * a[col][k];
                }
                b[row] -= f * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    x
}

/// Mean-zero potentials for unit injection at `i`, extraction at `j`,
/// from the bordered system `[Q u; uᵀ 0] [v; μ] = [e_i − e_j; 0]`.
pub fn potentials_oracle(g: &WeightedGraph, i: usize, j: usize) -> Vec<f64> {
    let n = g.node_count();
    let mut a = vec![vec![0.0; n + 1]; n + 1];
    for l in g.links() {
        a[l.i][l.i] += l.weight;
        a[l.j][l.j] += l.weight;
        a[l.i][l.j] -= l.weight;
        a[l.j][l.i] -= l.weight;
    }
    for k in 0..n {
        a[k][n] = 1.0;
        a[n][k] = 1.0;
    }
    let mut b = vec![0.0; n + 1];
    b[i] += 1.0;
    b[j] -= 1.0;
    let mut x = gauss_solve(a, b);
    x.truncate(n);
    x
}

pub fn resistance_oracle(g: &WeightedGraph, i: usize, j: usize) -> f64 {
    if i == j {
        return 0.0;
    }
    let v = potentials_oracle(g, i, j);
    v[i] - v[j]
}

/// Largest root of `p = 1 − e^{−λp}` by bisection on `(0, 1]`.
pub fn pb_bisection(lambda: f64) -> f64 {
    if lambda <= 1.0 {
        return 0.0;
    }
    let f = |p: f64| p - 1.0 + (-lambda * p).exp();
    // f < 0 just above 0, f(1) > 0
    let (mut lo, mut hi) = ((lambda - 1.0) / (lambda * lambda), 1.0);
    while f(lo) >= 0.0 {
        lo *= 0.5;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph: a random recursive tree plus each other pair with
/// probability `p`; weights uniform in `[lo, hi)`.
pub fn random_connected<R: Rng>(r: &mut R, n: usize, p: f64, lo: f64, hi: f64) -> WeightedGraph {
    let mut links = Vec::new();
    let mut tree = std::collections::HashSet::new();
    for k in 1..n {
        let parent = r.random_range(0..k);
        tree.insert((parent, k));
        links.push((parent, k, r.random_range(lo..hi)));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !tree.contains(&(a, b)) && r.random_bool(p) {
                links.push((a, b, r.random_range(lo..hi)));
            }
        }
    }
    links.shuffle(r);
    build_graph(n, links).unwrap()
}

pub fn complete_graph(n: usize, w: f64) -> WeightedGraph {
    let mut links = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            links.push((a, b, w));
        }
    }
    build_graph(n, links).unwrap()
}

/// Whether removing link `id` disconnects the graph, by traversal.
pub fn is_bridge(g: &WeightedGraph, id: usize) -> bool {
    !g.without_link(id).is_connected()
}

/// Nodes on the unique path between `s` and `t` of a tree.
pub fn tree_path(g: &WeightedGraph, s: usize, t: usize) -> Vec<usize> {
    let n = g.node_count();
    let mut prev = vec![usize::MAX; n];
    prev[s] = s;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &(u, _) in g.neighbors(v) {
            if prev[u] == usize::MAX {
                prev[u] = v;
                queue.push_back(u);
            }
        }
    }
    let mut path = vec![t];
    let mut x = t;
    while x != s {
        x = prev[x];
        path.push(x);
    }
    path
}

pub fn load_fixture(name: &str) -> WeightedGraph {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    flownet::io::parse_edge_list(&text).unwrap()
}
