//! Simple undirected graphs on at most 63 vertices.
//!
//! Vertices are `0..n` internally and `1..=n` wherever a graph is displayed or
//! exported. Every graph keeps both its canonical edge list and the closed
//! neighbourhood bitmask `N[v]` of each vertex.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] may have: one word per vertex subset.
pub const MAX_VERTICES: usize = 63;

/// Named graph families.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Empty,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Path, Family::Cycle, Family::Complete, Family::Empty];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Empty => "empty",
        }
    }

    /// Smallest order for which the family is a simple graph.
    pub fn min_order(self) -> usize {
        match self {
            Family::Cycle => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "empty" => Ok(Family::Empty),
            other => Err(format!(
                "unknown family `{other}` (expected path, cycle, complete or empty)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    closed_nbhd: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

/// Wire form of a graph: 1-based vertices, edges sorted with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSize(
            "a graph needs at least one vertex".into(),
        ));
    }
    if n > MAX_VERTICES {
        return Err(Error::InvalidSize(format!(
            "{n} vertices exceeds the {MAX_VERTICES}-vertex limit"
        )));
    }
    Ok(())
}

impl Graph {
    /// Builds a simple graph from 0-based edges.
    ///
    /// Self-loops, out-of-range endpoints and repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut closed_nbhd: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!(
                    "self-loop at vertex {}",
                    u + 1
                )));
            }
            if closed_nbhd[u] >> v & 1 == 1 {
                return Err(Error::InvalidGraph(format!(
                    "repeated edge {{{},{}}}",
                    u.min(v) + 1,
                    u.max(v) + 1
                )));
            }
            closed_nbhd[u] |= 1 << v;
            closed_nbhd[v] |= 1 << u;
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        Ok(Graph {
            n,
            closed_nbhd,
            edges: canon,
        })
    }

    pub fn family(kind: Family, n: usize) -> Result<Graph> {
        check_order(n)?;
        match kind {
            Family::Path => Graph::from_edges(n, (1..n).map(|v| (v - 1, v))),
            Family::Cycle => {
                if n < 3 {
                    return Err(Error::DegenerateFamily(format!(
                        "C_{n} is not a simple cycle (need n >= 3)"
                    )));
                }
                Graph::from_edges(n, (1..n).map(|v| (v - 1, v)).chain([(n - 1, 0)]))
            }
            Family::Complete => {
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            Family::Empty => Graph::from_edges(n, []),
        }
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::family(Family::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        Graph::family(Family::Cycle, n)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::family(Family::Complete, n)
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::family(Family::Empty, n)
    }

    /// `G + H`: disjoint union plus every edge between the two vertex sets.
    /// Vertices of `self` come first.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let (p, q) = (self.n, other.n);
        check_order(p + q)?;
        let cross = (0..p).flat_map(|u| (0..q).map(move |v| (u, p + v)));
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (p + u, p + v)))
            .chain(cross);
        Graph::from_edges(p + q, edges)
    }

    /// `G ∘ H`: vertex `i` of `self` is joined to every vertex of the `i`-th
    /// copy of `other`. `self`'s vertices come first, then the copies in order.
    pub fn corona(&self, other: &Graph) -> Result<Graph> {
        let (p, q) = (self.n, other.n);
        let total = p
            .checked_mul(q + 1)
            .filter(|&t| t <= MAX_VERTICES)
            .ok_or_else(|| {
                Error::InvalidSize(format!(
                    "corona of orders {p} and {q} exceeds {MAX_VERTICES} vertices"
                ))
            })?;
        let mut edges = self.edges.clone();
        for i in 0..p {
            let base = p + i * q;
            edges.extend(other.edges.iter().map(|&(u, v)| (base + u, base + v)));
            edges.extend((0..q).map(|v| (i, base + v)));
        }
        Graph::from_edges(total, edges)
    }

    /// `G □ H` with pair `(u, v)` at index `u * |V(H)| + v`.
    pub fn cartesian(&self, other: &Graph) -> Result<Graph> {
        let (p, q) = (self.n, other.n);
        let total = p
            .checked_mul(q)
            .filter(|&t| t <= MAX_VERTICES)
            .ok_or_else(|| {
                Error::InvalidSize(format!(
                    "Cartesian product of orders {p} and {q} exceeds {MAX_VERTICES} vertices"
                ))
            })?;
        let mut edges = Vec::with_capacity(p * other.edges.len() + q * self.edges.len());
        for u in 0..p {
            edges.extend(other.edges.iter().map(|&(a, b)| (u * q + a, u * q + b)));
        }
        for &(a, b) in &self.edges {
            edges.extend((0..q).map(|v| (a * q + v, b * q + v)));
        }
        Graph::from_edges(total, edges)
    }

    /// The ladder `L_n = P_n □ K_2`.
    pub fn ladder(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidSize("ladder needs n >= 1".into()));
        }
        Graph::path(n)?.cartesian(&Graph::complete(2)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical 0-based edge list, `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `N[v]` as a bitmask.
    pub fn closed_nbhd(&self, v: usize) -> u64 {
        self.closed_nbhd[v]
    }

    pub fn closed_nbhds(&self) -> &[u64] {
        &self.closed_nbhd
    }

    /// `N(v)` as a bitmask.
    pub fn open_nbhd(&self, v: usize) -> u64 {
        self.closed_nbhd[v] & !(1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.open_nbhd(v).count_ones() as usize
    }

    /// Bitmask with every vertex set.
    pub fn full_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn is_connected(&self) -> bool {
        let full = self.full_mask();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.closed_nbhd[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    /// Re-derives every neighbourhood from the edge list and checks symmetry.
    pub fn is_consistent(&self) -> bool {
        let mut derived: Vec<u64> = (0..self.n).map(|v| 1u64 << v).collect();
        for &(u, v) in &self.edges {
            if u >= v || v >= self.n {
                return false;
            }
            derived[u] |= 1 << v;
            derived[v] |= 1 << u;
        }
        let symmetric = (0..self.n).all(|u| {
            (0..self.n).all(|v| (self.closed_nbhd[u] >> v & 1) == (self.closed_nbhd[v] >> u & 1))
        });
        derived == self.closed_nbhd && symmetric && self.edges.windows(2).all(|w| w[0] < w[1])
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph> {
        let mut edges = Vec::with_capacity(json.edges.len());
        for &[u, v] in &json.edges {
            if u == 0 || v == 0 {
                return Err(Error::InvalidGraph(format!(
                    "edge [{u},{v}] uses label 0; labels are 1-based"
                )));
            }
            edges.push((u - 1, v - 1));
        }
        Graph::from_edges(json.n, edges)
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        let json: GraphJson =
            serde_json::from_str(s).map_err(|e| Error::InvalidGraph(e.to_string()))?;
        Graph::from_json(&json)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labelled(g: &Graph) -> Vec<[usize; 2]> {
        g.to_json().edges
    }

    fn degree_sequence(g: &Graph) -> Vec<usize> {
        let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn path_and_cycle_edges() {
        assert_eq!(labelled(&Graph::path(3).unwrap()), vec![[1, 2], [2, 3]]);
        assert_eq!(
            labelled(&Graph::cycle(4).unwrap()),
            vec![[1, 2], [1, 4], [2, 3], [3, 4]]
        );
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);
    }

    #[test]
    fn family_errors() {
        assert!(matches!(Graph::path(0), Err(Error::InvalidSize(_))));
        assert!(matches!(Graph::cycle(2), Err(Error::DegenerateFamily(_))));
        assert!(matches!(Graph::cycle(1), Err(Error::DegenerateFamily(_))));
        assert!(matches!(Graph::complete(64), Err(Error::InvalidSize(_))));
    }

    #[test]
    fn rejects_non_simple_input() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.join(&k1).unwrap(), Graph::complete(2).unwrap());
        let o2 = Graph::empty(2).unwrap();
        let k22 = o2.join(&o2).unwrap();
        assert_eq!(k22.edge_count(), 4);
        assert_eq!(degree_sequence(&k22), vec![2, 2, 2, 2]);
        assert!(k22.is_connected());
        let k3 = Graph::path(2)
            .unwrap()
            .join(&Graph::empty(1).unwrap())
            .unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
    }

    #[test]
    fn corona_examples() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.corona(&k1).unwrap(), Graph::complete(2).unwrap());
        let p4 = Graph::path(2)
            .unwrap()
            .corona(&Graph::empty(1).unwrap())
            .unwrap();
        // 1-2 with pendants 3 on 1 and 4 on 2: the path 3-1-2-4
        assert_eq!(labelled(&p4), vec![[1, 2], [1, 3], [2, 4]]);
        let star = k1.corona(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(labelled(&star), vec![[1, 2], [1, 3]]);
    }

    #[test]
    fn cartesian_examples() {
        let k2 = Graph::complete(2).unwrap();
        let sq = k2.cartesian(&k2).unwrap();
        assert_eq!(labelled(&sq), vec![[1, 2], [1, 3], [2, 4], [3, 4]]);
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.cartesian(&Graph::complete(1).unwrap()).unwrap(), p3);
        let p2 = Graph::path(2).unwrap();
        assert_eq!(p2.cartesian(&p2).unwrap(), sq);
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(Graph::ladder(1).unwrap(), Graph::complete(2).unwrap());
        let l2 = Graph::ladder(2).unwrap();
        assert_eq!(degree_sequence(&l2), vec![2, 2, 2, 2]);
        assert!(l2.is_connected());
        // P_3 □ K_2: two rungs' worth of rails (2·2) plus three rungs
        let l3 = Graph::ladder(3).unwrap();
        assert_eq!((l3.n(), l3.edge_count()), (6, 7));
        assert!(Graph::ladder(32).is_err());
    }

    #[test]
    fn product_size_limits() {
        let k8 = Graph::complete(8).unwrap();
        assert!(matches!(k8.cartesian(&k8), Err(Error::InvalidSize(_))));
        assert!(matches!(k8.corona(&k8), Err(Error::InvalidSize(_))));
        let k32 = Graph::complete(32).unwrap();
        assert!(matches!(k32.join(&k32), Err(Error::InvalidSize(_))));
    }

    #[test]
    fn json_round_trip_and_validation() {
        let g = Graph::cycle(5).unwrap();
        let text = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(Graph::from_json_str(&text).unwrap(), g);
        assert!(Graph::from_json_str(r#"{"n":2,"edges":[[0,1]]}"#).is_err());
        assert!(Graph::from_json_str(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("wheel".parse::<Family>().is_err());
    }
}
