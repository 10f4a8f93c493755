//! The k-dominating graph `D_k(G)`.
//!
//! Nodes are the dominating sets of `G` with at most `k` vertices, numbered
//! by their position in the sorted [`DomFamily`]. Two nodes are adjacent when
//! their sets differ by exactly one vertex.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use crate::domination::{DomFamily, Enumerator};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subset::VertexSubset;

/// Largest order [`ReconfigGraph::is_hamiltonian`] will search.
pub const HAMILTONIAN_MAX_ORDER: usize = 20;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Meta {
    pub order: usize,
    pub size: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub components: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EulerStatus {
    Eulerian,
    TrailOnly,
    Neither,
}

impl EulerStatus {
    pub fn name(self) -> &'static str {
        match self {
            EulerStatus::Eulerian => "eulerian",
            EulerStatus::TrailOnly => "trail-only",
            EulerStatus::Neither => "neither",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// Component index of each node, numbered in order of first node.
    pub labels: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ReconfigGraph {
    base_n: usize,
    k: usize,
    nodes: DomFamily,
    adj: Vec<Vec<usize>>,
    meta: Meta,
    below_domination: bool,
}

impl ReconfigGraph {
    pub fn build(g: &Graph, k: usize) -> Result<ReconfigGraph> {
        Self::build_with(&Enumerator::default(), g, k)
    }

    pub fn build_with(enumerator: &Enumerator, g: &Graph, k: usize) -> Result<ReconfigGraph> {
        let nodes = enumerator.enumerate(g, k)?;
        let index: HashMap<u64, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, s)| (s.bits(), i))
            .collect();
        let n = g.n();
        let adj: Vec<Vec<usize>> = nodes
            .sets()
            .par_iter()
            .map(|s| {
                let mut nbrs: Vec<usize> = (0..n)
                    .filter_map(|v| index.get(&s.toggled(v).bits()).copied())
                    .collect();
                nbrs.sort_unstable();
                nbrs
            })
            .collect();
        let meta = compute_meta(&adj);
        Ok(ReconfigGraph {
            base_n: n,
            k,
            below_domination: nodes.is_empty(),
            nodes,
            adj,
            meta,
        })
    }

    pub fn base_n(&self) -> usize {
        self.base_n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nodes(&self) -> &DomFamily {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> Result<VertexSubset> {
        self.nodes
            .sets()
            .get(id)
            .copied()
            .ok_or(Error::InvalidNode {
                id,
                order: self.order(),
            })
    }

    pub fn node_id(&self, s: VertexSubset) -> Option<usize> {
        self.nodes.position(s)
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adj[id]
    }

    pub fn degree(&self, id: usize) -> usize {
        self.adj[id].len()
    }

    pub fn meta(&self) -> Meta {
        self.meta
    }

    pub fn order(&self) -> usize {
        self.meta.order
    }

    pub fn size(&self) -> usize {
        self.meta.size
    }

    /// Set when `k < γ(G)` and the graph therefore has no nodes.
    pub fn below_domination(&self) -> bool {
        self.below_domination
    }

    /// Edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, nbrs)| nbrs.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect()
    }

    /// Odd-cardinality and even-cardinality node ids.
    pub fn bipartition(&self) -> (Vec<usize>, Vec<usize>) {
        (0..self.order()).partition(|&i| self.nodes.sets()[i].card() % 2 == 1)
    }

    /// True when every edge joins the two parity classes.
    pub fn edges_cross_parity(&self) -> bool {
        let sets = self.nodes.sets();
        self.adj.iter().enumerate().all(|(i, nbrs)| {
            nbrs.iter()
                .all(|&j| sets[i].card() % 2 != sets[j].card() % 2)
        })
    }

    /// `(δ, Δ)`.
    pub fn degree_extremes(&self) -> Result<(usize, usize)> {
        if self.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok((self.meta.min_degree, self.meta.max_degree))
    }

    pub fn is_regular(&self) -> Result<bool> {
        let (lo, hi) = self.degree_extremes()?;
        Ok(lo == hi)
    }

    pub fn connected_components(&self) -> Components {
        let order = self.order();
        let mut labels = vec![usize::MAX; order];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..order {
            if labels[start] != usize::MAX {
                continue;
            }
            labels[start] = count;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if labels[w] == usize::MAX {
                        labels[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        Components { count, labels }
    }

    pub fn is_connected(&self) -> bool {
        self.meta.components <= 1
    }

    /// Hop distances from `source` to every node; `None` where unreachable.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.node(source)?;
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0) + 1;
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest reconfiguration sequence length, `None` across components.
    pub fn distance(&self, a: usize, b: usize) -> Result<Option<usize>> {
        self.node(b)?;
        Ok(self.distances_from(a)?[b])
    }

    /// Classifies by connectivity and the number of odd-degree nodes.
    /// A disconnected graph is never Eulerian, even if the other components
    /// are isolated nodes.
    pub fn euler_status(&self) -> EulerStatus {
        if !self.is_connected() {
            return EulerStatus::Neither;
        }
        match self.adj.iter().filter(|a| a.len() % 2 == 1).count() {
            0 => EulerStatus::Eulerian,
            2 => EulerStatus::TrailOnly,
            _ => EulerStatus::Neither,
        }
    }

    /// Exact backtracking search for a Hamiltonian cycle.
    ///
    /// Graphs of order below 3 have no cycle and report `false`.
    pub fn is_hamiltonian(&self) -> Result<bool> {
        let order = self.order();
        if order > HAMILTONIAN_MAX_ORDER {
            return Err(Error::TooLarge(format!(
                "Hamiltonicity search is limited to order {HAMILTONIAN_MAX_ORDER}, got {order}"
            )));
        }
        if order < 3 {
            return Ok(false);
        }
        let mut path = Vec::with_capacity(order);
        path.push(0);
        Ok(self.extend_cycle(&mut path, 1u32))
    }

    fn extend_cycle(&self, path: &mut Vec<usize>, visited: u32) -> bool {
        let last = *path.last().unwrap_or(&0);
        if path.len() == self.order() {
            return self.adj[last].binary_search(&0).is_ok();
        }
        for &next in &self.adj[last] {
            if visited >> next & 1 == 1 {
                continue;
            }
            path.push(next);
            if self.extend_cycle(path, visited | 1 << next) {
                return true;
            }
            path.pop();
        }
        false
    }
}

fn compute_meta(adj: &[Vec<usize>]) -> Meta {
    let degrees = adj.iter().map(Vec::len);
    let order = adj.len();
    let size = degrees.clone().sum::<usize>() / 2;
    let min_degree = degrees.clone().min().unwrap_or(0);
    let max_degree = degrees.max().unwrap_or(0);
    let mut seen = vec![false; order];
    let mut components = 0;
    let mut stack = Vec::new();
    for start in 0..order {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    Meta {
        order,
        size,
        min_degree,
        max_degree,
        components,
    }
}

pub fn build(g: &Graph, k: usize) -> Result<ReconfigGraph> {
    ReconfigGraph::build(g, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize, l: &[usize]) -> VertexSubset {
        VertexSubset::from_labels(n, l).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn build_examples() {
        let r = build(&complete(3), 3).unwrap();
        assert_eq!((r.order(), r.size()), (7, 9));
        assert_eq!(build(&Graph::path(3).unwrap(), 3).unwrap().order(), 5);
        for n in 1..=6 {
            let r = build(&complete(n), 1).unwrap();
            assert_eq!((r.order(), r.size()), (n, 0));
        }
    }

    #[test]
    fn below_domination_number_is_empty_not_error() {
        let r = build(&Graph::cycle(9).unwrap(), 2).unwrap();
        assert!(r.below_domination());
        assert_eq!(r.order(), 0);
        assert_eq!(r.connected_components().count, 0);
        assert!(matches!(r.degree_extremes(), Err(Error::EmptyGraph)));
        assert!(matches!(r.is_regular(), Err(Error::EmptyGraph)));
        assert!(!build(&Graph::cycle(9).unwrap(), 3)
            .unwrap()
            .below_domination());
    }

    #[test]
    fn adjacency_is_single_toggle() {
        let r = build(&Graph::cycle(7).unwrap(), 7).unwrap();
        let sets = r.nodes().sets();
        for i in 0..r.order() {
            for j in 0..r.order() {
                let one = sets[i].symmetric_difference(sets[j]).card() == 1;
                assert_eq!(r.neighbors(i).contains(&j), one);
            }
        }
    }

    #[test]
    fn bipartition_examples() {
        let sizes = |g: Graph, k| {
            let (x, y) = build(&g, k).unwrap().bipartition();
            (x.len(), y.len())
        };
        assert_eq!(sizes(complete(3), 3), (4, 3));
        assert_eq!(sizes(Graph::path(3).unwrap(), 3), (2, 3));
        assert_eq!(sizes(complete(2), 1), (2, 0));
    }

    #[test]
    fn degree_examples() {
        let ext = |g: Graph| {
            let n = g.n();
            build(&g, n).unwrap().degree_extremes().unwrap()
        };
        assert_eq!(ext(complete(4)), (3, 4));
        assert_eq!(ext(Graph::path(7).unwrap()), (3, 7));
        assert_eq!(ext(Graph::cycle(6).unwrap()), (3, 6));
    }

    #[test]
    fn regularity_examples() {
        assert!(!build(&complete(3), 3).unwrap().is_regular().unwrap());
        assert!(build(&complete(3), 1).unwrap().is_regular().unwrap());
        assert!(!build(&Graph::path(4).unwrap(), 4)
            .unwrap()
            .is_regular()
            .unwrap());
    }

    #[test]
    fn component_examples() {
        assert_eq!(
            build(&Graph::path(5).unwrap(), 5)
                .unwrap()
                .connected_components()
                .count,
            1
        );
        let iso = build(&complete(3), 1).unwrap().connected_components();
        assert_eq!(iso.count, 3);
        assert_eq!(iso.labels, vec![0, 1, 2]);
        assert_eq!(
            build(&Graph::cycle(4).unwrap(), 4)
                .unwrap()
                .connected_components()
                .count,
            1
        );
    }

    #[test]
    fn distance_examples() {
        let r = build(&Graph::path(5).unwrap(), 5).unwrap();
        let id = |l: &[usize]| r.node_id(labels(5, l)).unwrap();
        assert_eq!(r.distance(id(&[1, 4]), id(&[2, 4])).unwrap(), Some(2));
        assert_eq!(r.distance(id(&[1, 4]), id(&[1, 4])).unwrap(), Some(0));
        // disjoint 2-sets: {1,4} → {1,2,4} → {2,4} → {2,4,5} → {2,5}
        assert_eq!(r.distance(id(&[1, 4]), id(&[2, 5])).unwrap(), Some(4));
        assert!(matches!(r.distance(0, 999), Err(Error::InvalidNode { .. })));
    }

    #[test]
    fn unreachable_is_a_value() {
        let r = build(&complete(3), 1).unwrap();
        assert_eq!(r.distance(0, 1).unwrap(), None);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(
            build(&complete(3), 3).unwrap().euler_status(),
            EulerStatus::Neither
        );
        assert_eq!(
            build(&complete(4), 4).unwrap().euler_status(),
            EulerStatus::Neither
        );
        let single = build(&complete(1), 1).unwrap();
        assert_eq!(single.order(), 1);
        assert_eq!(single.euler_status(), EulerStatus::Eulerian);
        // D_2(K_2): {1}-{1,2}-{2}, a path with two odd ends
        assert_eq!(
            build(&complete(2), 2).unwrap().euler_status(),
            EulerStatus::TrailOnly
        );
    }

    #[test]
    fn hamiltonian_examples() {
        assert!(!build(&complete(3), 3).unwrap().is_hamiltonian().unwrap());
        assert!(!build(&Graph::path(3).unwrap(), 3)
            .unwrap()
            .is_hamiltonian()
            .unwrap());
        assert!(!build(&complete(2), 2).unwrap().is_hamiltonian().unwrap());
        assert!(matches!(
            build(&complete(5), 5).unwrap().is_hamiltonian(),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn finds_a_hamiltonian_cycle_when_one_exists() {
        let r = build(&complete(3), 2).unwrap();
        // {1}-{1,2}-{2}-{2,3}-{3}-{1,3}-{1}
        assert_eq!(r.order(), 6);
        assert!(r.is_hamiltonian().unwrap());
    }
}
