//! Undirected weighted graphs interpreted as resistor networks.
//!
//! A link weight is a conductance; the resistance of the link is its
//! reciprocal. Links are stored once, with the smaller endpoint first, and
//! that orientation is the sign convention for link currents.

use std::collections::{HashMap, VecDeque};

use faer::Mat;

use crate::error::{Error, Result};

/// One undirected resistor, `i < j`, with conductance `weight`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Link {
    pub i: usize,
    pub j: usize,
    pub weight: f64,
}

impl Link {
    pub fn resistance(&self) -> f64 {
        1.0 / self.weight
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    /// The endpoint that is not `v`. `v` must be an endpoint.
    pub fn other(&self, v: usize) -> usize {
        if v == self.i {
            self.j
        } else {
            self.i
        }
    }
}

/// Connected-component labeling of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Component id of every node; ids are assigned in order of the lowest
    /// node they contain.
    pub labels: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    /// Id of the largest component; ties go to the lower id.
    pub fn largest(&self) -> Option<usize> {
        self.sizes
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .map(|(id, _)| id)
    }

    pub fn members(&self, id: usize) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == id)
            .map(|(v, _)| v)
            .collect()
    }
}

/// A validated resistor network on nodes `0..n`.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    n: usize,
    links: Vec<Link>,
    /// Per node: (neighbor, link index).
    adjacency: Vec<Vec<(usize, usize)>>,
    index: HashMap<(usize, usize), usize>,
}

impl PartialEq for WeightedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.links == other.links
    }
}

/// Validates a link list and builds the graph.
///
/// Endpoints may be given in either order; they are normalized to `i < j`.
/// Link order is preserved otherwise.
pub fn build_graph<I>(n: usize, links: I) -> Result<WeightedGraph>
where
    I: IntoIterator<Item = (usize, usize, f64)>,
{
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut stored = Vec::new();
    let mut index = HashMap::new();
    let mut adjacency = vec![Vec::new(); n];
    for (a, b, weight) in links {
        for node in [a, b] {
            if node >= n {
                return Err(Error::IndexOutOfRange { node, n });
            }
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::NonPositiveWeight { i, j, weight });
        }
        let id = stored.len();
        if index.insert((i, j), id).is_some() {
            return Err(Error::DuplicateLink(i, j));
        }
        adjacency[i].push((j, id));
        adjacency[j].push((i, id));
        stored.push(Link { i, j, weight });
    }
    Ok(WeightedGraph {
        n,
        links: stored,
        adjacency,
        index,
    })
}

impl WeightedGraph {
    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn link(&self, id: usize) -> &Link {
        &self.links[id]
    }

    /// `(neighbor, link index)` pairs incident to `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Sum of incident conductances, the diagonal of the Laplacian.
    pub fn strength(&self, v: usize) -> f64 {
        self.adjacency[v]
            .iter()
            .map(|&(_, l)| self.links[l].weight)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn link_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.index.get(&key).copied()
    }

    pub fn weight(&self, a: usize, b: usize) -> Option<f64> {
        self.link_index(a, b).map(|l| self.links[l].weight)
    }

    pub fn has_link(&self, a: usize, b: usize) -> bool {
        self.link_index(a, b).is_some()
    }

    /// Weighted adjacency matrix.
    pub fn adjacency_matrix(&self) -> Mat<f64> {
        let mut a = Mat::zeros(self.n, self.n);
        for l in &self.links {
            a[(l.i, l.j)] = l.weight;
            a[(l.j, l.i)] = l.weight;
        }
        a
    }

    pub fn components(&self) -> Components {
        let mut labels = vec![usize::MAX; self.n];
        let mut sizes = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if labels[start] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            labels[start] = id;
            queue.push_back(start);
            let mut size = 0;
            while let Some(v) = queue.pop_front() {
                size += 1;
                for &(u, _) in &self.adjacency[v] {
                    if labels[u] == usize::MAX {
                        labels[u] = id;
                        queue.push_back(u);
                    }
                }
            }
            sizes.push(size);
        }
        Components { labels, sizes }
    }

    pub fn is_connected(&self) -> bool {
        self.components().count() == 1
    }

    /// Same graph with every weight multiplied by `factor` (> 0).
    pub fn scaled(&self, factor: f64) -> Result<WeightedGraph> {
        build_graph(
            self.n,
            self.links.iter().map(|l| (l.i, l.j, l.weight * factor)),
        )
    }

    /// Same graph with link `id` removed.
    pub fn without_link(&self, id: usize) -> WeightedGraph {
        build_graph(
            self.n,
            self.links
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != id)
                .map(|(_, l)| (l.i, l.j, l.weight)),
        )
        .expect("subset of a valid link set is valid")
    }

    /// Induced subgraph on `nodes`, relabeled to `0..nodes.len()` in the
    /// given order. Also returns, per new link, the index of the original
    /// link.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> (WeightedGraph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (k, &v) in nodes.iter().enumerate() {
            local[v] = k;
        }
        let mut origin = Vec::new();
        let mut links = Vec::new();
        for (id, l) in self.links.iter().enumerate() {
            if local[l.i] != usize::MAX && local[l.j] != usize::MAX {
                links.push((local[l.i], local[l.j], l.weight));
                origin.push(id);
            }
        }
        let g = build_graph(nodes.len().max(1), links).expect("induced subgraph is valid");
        (g, origin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_graph() {
        let g = build_graph(2, [(0, 1, 1.0)]).unwrap();
        assert_eq!(g.link_count(), 1);
        assert_eq!(g.degrees(), vec![1, 1]);
    }

    #[test]
    fn unit_triangle() {
        let g = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        assert_eq!(g.link_count(), 3);
        assert!(g.is_connected());
        assert_eq!(g.strength(1), 2.0);
    }

    #[test]
    fn rejects_invalid_links() {
        assert_eq!(
            build_graph(3, [(0, 1, 1.0), (0, 1, 2.0)]),
            Err(Error::DuplicateLink(0, 1))
        );
        assert_eq!(
            build_graph(3, [(0, 1, 1.0), (1, 0, 2.0)]),
            Err(Error::DuplicateLink(0, 1))
        );
        assert_eq!(build_graph(3, [(2, 2, 1.0)]), Err(Error::SelfLoop(2)));
        assert!(matches!(
            build_graph(3, [(0, 1, 0.0)]),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            build_graph(3, [(0, 1, f64::NAN)]),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert_eq!(
            build_graph(3, [(0, 3, 1.0)]),
            Err(Error::IndexOutOfRange { node: 3, n: 3 })
        );
        assert_eq!(build_graph(0, []), Err(Error::EmptyGraph));
    }

    #[test]
    fn endpoints_are_normalized() {
        let g = build_graph(3, [(2, 0, 0.5)]).unwrap();
        assert_eq!(g.link(0).endpoints(), (0, 2));
        assert_eq!(g.weight(2, 0), Some(0.5));
    }

    #[test]
    fn components_and_largest() {
        let g = build_graph(6, [(0, 1, 1.0), (2, 3, 1.0), (3, 4, 1.0)]).unwrap();
        let c = g.components();
        assert_eq!(c.count(), 3);
        assert_eq!(c.largest(), Some(1));
        assert_eq!(c.members(1), vec![2, 3, 4]);
        assert_eq!(c.labels[5], 2);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = build_graph(4, [(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0)]).unwrap();
        let (sub, origin) = g.induced_subgraph(&[3, 2, 1]);
        assert_eq!(sub.link_count(), 2);
        assert_eq!(sub.weight(0, 1), Some(3.0));
        assert_eq!(origin, vec![1, 2]);
    }
}
