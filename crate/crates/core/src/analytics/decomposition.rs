//! Backbone–branch decomposition of the giant component.
//!
//! The backbone is the 2-core of the giant component: repeatedly delete
//! nodes with fewer than two surviving neighbors. What is left is the
//! maximal node set in which every node has at least two neighbors inside
//! the set; it does not depend on the deletion order. The deleted part of
//! the giant component falls apart into finite tree-like branches.

use std::collections::VecDeque;

use crate::graph::WeightedGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackboneDecomposition {
    /// Sorted node ids of the largest connected component.
    pub giant_component: Vec<usize>,
    /// Sorted node ids of the 2-core of the giant component.
    pub backbone_nodes: Vec<usize>,
    /// Connected components of `giant_component ∖ backbone_nodes`, each
    /// sorted, ordered by their lowest node.
    pub branch_components: Vec<Vec<usize>>,
}

impl BackboneDecomposition {
    pub fn backbone_fraction(&self, n: usize) -> f64 {
        self.backbone_nodes.len() as f64 / n as f64
    }

    /// `|GC ∖ B| / n`.
    pub fn branch_fraction(&self, n: usize) -> f64 {
        (self.giant_component.len() - self.backbone_nodes.len()) as f64 / n as f64
    }
}

/// Membership mask of the 2-core of the subgraph induced by `within`.
pub fn two_core(g: &WeightedGraph, within: &[bool]) -> Vec<bool> {
    let n = g.node_count();
    let mut alive = within.to_vec();
    let mut degree: Vec<usize> = (0..n)
        .map(|v| {
            if alive[v] {
                g.neighbors(v).iter().filter(|&&(u, _)| alive[u]).count()
            } else {
                0
            }
        })
        .collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| alive[v] && degree[v] < 2).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &(u, _) in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    queue.push_back(u);
                }
            }
        }
    }
    alive
}

pub fn decompose_backbone(g: &WeightedGraph) -> BackboneDecomposition {
    let n = g.node_count();
    let comps = g.components();
    let giant = comps.largest().expect("graphs have at least one node");
    let in_gc: Vec<bool> = comps.labels.iter().map(|&c| c == giant).collect();
    let core = two_core(g, &in_gc);

    let giant_component: Vec<usize> = (0..n).filter(|&v| in_gc[v]).collect();
    let backbone_nodes: Vec<usize> = (0..n).filter(|&v| core[v]).collect();

    let mut seen = vec![false; n];
    let mut branch_components = Vec::new();
    for &start in &giant_component {
        if core[start] || seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < members.len() {
            let v = members[k];
            k += 1;
            for &(u, _) in g.neighbors(v) {
                if in_gc[u] && !core[u] && !seen[u] {
                    seen[u] = true;
                    members.push(u);
                }
            }
        }
        members.sort_unstable();
        branch_components.push(members);
    }
    BackboneDecomposition {
        giant_component,
        backbone_nodes,
        branch_components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn unit(n: usize, links: &[(usize, usize)]) -> WeightedGraph {
        build_graph(n, links.iter().map(|&(a, b)| (a, b, 1.0))).unwrap()
    }

    #[test]
    fn cycle_is_all_backbone() {
        let g = unit(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let d = decompose_backbone(&g);
        assert_eq!(d.backbone_nodes, vec![0, 1, 2, 3, 4]);
        assert!(d.branch_components.is_empty());
    }

    #[test]
    fn star_peels_away() {
        let g = unit(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let d = decompose_backbone(&g);
        assert!(d.backbone_nodes.is_empty());
        assert_eq!(d.giant_component.len(), 5);
        assert_eq!(d.branch_components, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn triangle_with_tail() {
        let g = unit(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]);
        let d = decompose_backbone(&g);
        assert_eq!(d.backbone_nodes, vec![0, 1, 2]);
        assert_eq!(d.branch_components, vec![vec![3, 4]]);
    }

    #[test]
    fn only_the_giant_component_counts() {
        // triangle of 3 plus a 4-cycle elsewhere: the 4-cycle is the GC
        let g = unit(8, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 3)]);
        let d = decompose_backbone(&g);
        assert_eq!(d.giant_component, vec![3, 4, 5, 6]);
        assert_eq!(d.backbone_nodes, vec![3, 4, 5, 6]);
    }
}
