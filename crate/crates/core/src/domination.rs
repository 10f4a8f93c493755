//! Dominating-set predicates and exhaustive enumeration.
//!
//! Two enumerators produce the same [`DomFamily`]:
//!
//! * [`Enumerator::scan`] walks every subset of each cardinality in increasing
//!   bitmask order and tests it. It is slow and obviously correct, and serves
//!   as the oracle.
//! * [`Enumerator::enumerate`] branches on the lowest undominated vertex: some
//!   member of its closed neighbourhood must be chosen, and trying those
//!   members in order while forbidding the earlier ones partitions the search
//!   space. Once everything is dominated, any subset of the still-undecided
//!   vertices may be added. Counting uses the same recursion but sums
//!   binomials at the leaves instead of listing supersets.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::subset::VertexSubset;

/// Default largest order handled by full enumeration (2^24 subsets).
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// `N[S]` as a bitmask.
pub fn closed_cover(g: &Graph, s: VertexSubset) -> u64 {
    s.iter().fold(0u64, |acc, v| acc | g.closed_nbhd(v))
}

fn check_subset(g: &Graph, s: VertexSubset) -> Result<()> {
    if s.fits(g.n()) {
        Ok(())
    } else {
        Err(Error::InvalidSubset(format!(
            "subset {s} has vertices outside 1..={}",
            g.n()
        )))
    }
}

pub fn is_dominating(g: &Graph, s: VertexSubset) -> Result<bool> {
    check_subset(g, s)?;
    Ok(closed_cover(g, s) == g.full_mask())
}

/// A dominating set is minimal when no single deletion still dominates.
/// Single deletions suffice because supersets of dominating sets dominate.
pub fn is_minimal_dominating(g: &Graph, s: VertexSubset) -> Result<bool> {
    if !is_dominating(g, s)? {
        return Ok(false);
    }
    Ok(minimal_unchecked(g.closed_nbhds(), g.full_mask(), s.bits()))
}

fn minimal_unchecked(nbhd: &[u64], full: u64, s: u64) -> bool {
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let without = s & !(1 << v);
        let mut cover = 0u64;
        let mut w = without;
        while w != 0 {
            cover |= nbhd[w.trailing_zeros() as usize];
            w &= w - 1;
        }
        if cover == full {
            return false;
        }
    }
    true
}

/// All dominating sets of a graph with at most `k` vertices.
///
/// `sets` is sorted by cardinality, then bitmask value, and `by_card[j]`
/// counts the members of cardinality `j` for `j = 0..=min(k, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomFamily {
    graph_n: usize,
    k: usize,
    sets: Vec<VertexSubset>,
    by_card: Vec<u64>,
}

impl DomFamily {
    fn from_sorted(graph_n: usize, k: usize, sets: Vec<VertexSubset>) -> DomFamily {
        let mut by_card = vec![0u64; k.min(graph_n) + 1];
        for s in &sets {
            by_card[s.card()] += 1;
        }
        DomFamily {
            graph_n,
            k,
            sets,
            by_card,
        }
    }

    pub fn graph_n(&self) -> usize {
        self.graph_n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sets(&self) -> &[VertexSubset] {
        &self.sets
    }

    pub fn by_card(&self) -> &[u64] {
        &self.by_card
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Position of `s` in the sorted order.
    pub fn position(&self, s: VertexSubset) -> Option<usize> {
        self.sets.binary_search(&s).ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSubset> {
        self.sets.iter()
    }
}

impl<'a> IntoIterator for &'a DomFamily {
    type Item = &'a VertexSubset;
    type IntoIter = std::slice::Iter<'a, VertexSubset>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

/// Subsets of `0..n` with exactly `j` members, in increasing value.
fn combinations(n: usize, j: usize) -> impl Iterator<Item = u64> {
    let limit = 1u128 << n;
    let first = if j == 0 { 0 } else { (1u64 << j) - 1 };
    let mut next = (j <= n).then_some(first);
    std::iter::from_fn(move || {
        let s = next?;
        next = if s == 0 {
            None
        } else {
            // Gosper's hack
            let c = s & s.wrapping_neg();
            let r = s + c;
            let succ = (((r ^ s) >> 2) / c) | r;
            ((succ as u128) < limit && succ > s).then_some(succ)
        };
        Some(s)
    })
}

/// Depth-first search over dominating sets. See the module docs.
struct Branching<'a> {
    nbhd: &'a [u64],
    full: u64,
    k: usize,
}

impl Branching<'_> {
    /// Calls `leaf(chosen, free)` with `chosen` dominating. The sets
    /// `chosen ∪ T`, `T ⊆ free`, over all leaves are exactly the dominating
    /// sets of size `<= k` plus supersets past the bound, each listed once.
    fn visit<F: FnMut(u64, u64)>(&self, chosen: u64, cover: u64, forbidden: u64, leaf: &mut F) {
        if cover == self.full {
            leaf(chosen, self.full & !(chosen | forbidden));
            return;
        }
        if chosen.count_ones() as usize >= self.k {
            return;
        }
        let u = (!cover & self.full).trailing_zeros() as usize;
        let mut candidates = self.nbhd[u] & !forbidden;
        let mut forbidden = forbidden;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.visit(chosen | 1 << v, cover | self.nbhd[v], forbidden, leaf);
            forbidden |= 1 << v;
        }
    }
}

fn binomial_rows(n: usize) -> Vec<Vec<u128>> {
    let mut rows: Vec<Vec<u128>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = vec![1u128; m + 1];
        for t in 1..m {
            row[t] = rows[m - 1][t - 1] + rows[m - 1][t];
        }
        rows.push(row);
    }
    rows
}

/// Enumeration entry point carrying the vertex-count cap.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Enumerator {
    cap: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl Enumerator {
    pub fn with_cap(cap: usize) -> Result<Enumerator> {
        if cap == 0 || cap > MAX_VERTICES {
            return Err(Error::InvalidSize(format!(
                "enumeration cap must lie in 1..={MAX_VERTICES}, got {cap}"
            )));
        }
        Ok(Enumerator { cap })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.n() > self.cap {
            return Err(Error::TooLarge(format!(
                "{} vertices exceeds the enumeration cap of {}",
                g.n(),
                self.cap
            )));
        }
        Ok(())
    }

    fn branching<'a>(&self, g: &'a Graph, k: usize) -> Branching<'a> {
        Branching {
            nbhd: g.closed_nbhds(),
            full: g.full_mask(),
            k,
        }
    }

    /// Reference enumerator: tests every subset of size `1..=k`.
    pub fn scan(&self, g: &Graph, k: usize) -> Result<DomFamily> {
        self.check(g)?;
        let n = g.n();
        let full = g.full_mask();
        let nbhd = g.closed_nbhds();
        let layers: Vec<Vec<VertexSubset>> = (1..=k.min(n))
            .into_par_iter()
            .map(|j| {
                combinations(n, j)
                    .filter(|&s| {
                        let mut cover = 0u64;
                        let mut rest = s;
                        while rest != 0 {
                            cover |= nbhd[rest.trailing_zeros() as usize];
                            rest &= rest - 1;
                        }
                        cover == full
                    })
                    .map(VertexSubset::from_bits)
                    .collect()
            })
            .collect();
        Ok(DomFamily::from_sorted(n, k, layers.concat()))
    }

    /// Fast enumerator. Output is identical to [`Enumerator::scan`].
    pub fn enumerate(&self, g: &Graph, k: usize) -> Result<DomFamily> {
        self.check(g)?;
        let mut sets = Vec::new();
        self.branching(g, k).visit(0, 0, 0, &mut |chosen, free| {
            let room = k - chosen.count_ones() as usize;
            // every submask of `free`, including the empty one
            let mut t = free;
            loop {
                if t.count_ones() as usize <= room {
                    sets.push(VertexSubset::from_bits(chosen | t));
                }
                if t == 0 {
                    break;
                }
                t = (t - 1) & free;
            }
        });
        sets.par_sort_unstable();
        Ok(DomFamily::from_sorted(g.n(), k, sets))
    }

    /// `d(G, j)` for `j = 0..=n`, without materialising the sets.
    pub fn count_by_cardinality(&self, g: &Graph) -> Result<Vec<BigUint>> {
        self.check(g)?;
        let n = g.n();
        let binom = binomial_rows(n);
        let mut counts = vec![0u128; n + 1];
        self.branching(g, n).visit(0, 0, 0, &mut |chosen, free| {
            let c = chosen.count_ones() as usize;
            let f = free.count_ones() as usize;
            for (t, b) in binom[f].iter().enumerate() {
                counts[c + t] += b;
            }
        });
        Ok(counts.into_iter().map(BigUint::from).collect())
    }

    /// `d(G, j)` computed by the reference scan.
    pub fn scan_counts(&self, g: &Graph) -> Result<Vec<BigUint>> {
        let family = self.scan(g, g.n())?;
        Ok(family.by_card().iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Number of dominating sets of any size, i.e. the order of `D_n(G)`.
    pub fn total_count(&self, g: &Graph) -> Result<BigUint> {
        Ok(self.count_by_cardinality(g)?.into_iter().sum())
    }

    /// `γ(G)`: smallest cardinality of a dominating set.
    pub fn domination_number(&self, g: &Graph) -> Result<usize> {
        self.check(g)?;
        let full = g.full_mask();
        // V itself always dominates
        let gamma = (1..g.n())
            .find(|&j| {
                combinations(g.n(), j).any(|s| closed_cover(g, VertexSubset::from_bits(s)) == full)
            })
            .unwrap_or(g.n());
        Ok(gamma)
    }

    /// All minimal dominating sets, sorted.
    ///
    /// `chosen ∪ T` with `T` nonempty contains the dominating set `chosen`, so
    /// only the leaves' own sets can be minimal.
    pub fn minimal_dominating_sets(&self, g: &Graph) -> Result<Vec<VertexSubset>> {
        self.check(g)?;
        let nbhd = g.closed_nbhds();
        let full = g.full_mask();
        let mut out = Vec::new();
        self.branching(g, g.n()).visit(0, 0, 0, &mut |chosen, _| {
            if minimal_unchecked(nbhd, full, chosen) {
                out.push(VertexSubset::from_bits(chosen));
            }
        });
        out.sort_unstable();
        Ok(out)
    }

    /// `Γ(G)`: largest cardinality of a minimal dominating set.
    pub fn upper_domination_number(&self, g: &Graph) -> Result<usize> {
        let minimal = self.minimal_dominating_sets(g)?;
        Ok(minimal.last().map_or(0, |s| s.card()))
    }

    /// Number of γ-sets.
    pub fn count_minimum_sets(&self, g: &Graph) -> Result<BigUint> {
        let gamma = self.domination_number(g)?;
        Ok(self.count_by_cardinality(g)?.swap_remove(gamma))
    }

    /// Number of Γ-sets.
    pub fn count_maximal_minimal_sets(&self, g: &Graph) -> Result<BigUint> {
        let minimal = self.minimal_dominating_sets(g)?;
        let top = minimal.last().map_or(0, |s| s.card());
        Ok(BigUint::from(
            minimal.iter().filter(|s| s.card() == top).count(),
        ))
    }
}

pub fn enumerate_dominating(g: &Graph, k: usize) -> Result<DomFamily> {
    Enumerator::default().enumerate(g, k)
}

pub fn count_by_cardinality(g: &Graph) -> Result<Vec<BigUint>> {
    Enumerator::default().count_by_cardinality(g)
}

pub fn total_count(g: &Graph) -> Result<BigUint> {
    Enumerator::default().total_count(g)
}

pub fn domination_number(g: &Graph) -> Result<usize> {
    Enumerator::default().domination_number(g)
}

pub fn upper_domination_number(g: &Graph) -> Result<usize> {
    Enumerator::default().upper_domination_number(g)
}

pub fn count_minimum_sets(g: &Graph) -> Result<BigUint> {
    Enumerator::default().count_minimum_sets(g)
}

pub fn count_maximal_minimal_sets(g: &Graph) -> Result<BigUint> {
    Enumerator::default().count_maximal_minimal_sets(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize, l: &[usize]) -> VertexSubset {
        VertexSubset::from_labels(n, l).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn combinations_are_complete_and_ordered() {
        let all: Vec<u64> = combinations(5, 2).collect();
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|s| s.count_ones() == 2));
        assert_eq!(combinations(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(combinations(3, 3).collect::<Vec<_>>(), vec![0b111]);
        assert_eq!(combinations(2, 3).count(), 0);
        assert_eq!(combinations(63, 63).count(), 1);
    }

    #[test]
    fn domination_predicate() {
        let p3 = Graph::path(3).unwrap();
        let p4 = Graph::path(4).unwrap();
        assert!(is_dominating(&p3, labels(3, &[2])).unwrap());
        assert!(!is_dominating(&p4, labels(4, &[1])).unwrap());
        assert!(!is_dominating(&p3, VertexSubset::EMPTY).unwrap());
        let k5 = Graph::complete(5).unwrap();
        for bits in 1u64..32 {
            assert!(is_dominating(&k5, VertexSubset::from_bits(bits)).unwrap());
        }
        assert!(matches!(
            is_dominating(&p3, VertexSubset::from_bits(0b1000)),
            Err(Error::InvalidSubset(_))
        ));
    }

    #[test]
    fn minimality() {
        let p5 = Graph::path(5).unwrap();
        assert!(is_minimal_dominating(&p5, labels(5, &[1, 3, 5])).unwrap());
        let p3 = Graph::path(3).unwrap();
        assert!(!is_minimal_dominating(&p3, labels(3, &[1, 2, 3])).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_minimal_dominating(&c4, labels(4, &[1, 3])).unwrap());
        assert!(!is_minimal_dominating(&c4, labels(4, &[1])).unwrap());
    }

    #[test]
    fn enumerate_examples() {
        let p3 = Graph::path(3).unwrap();
        let fam = enumerate_dominating(&p3, 3).unwrap();
        let shown: Vec<String> = fam.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, vec!["{2}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]);
        assert_eq!(fam.by_card(), &[0, 1, 3, 1]);

        let k3 = Graph::complete(3).unwrap();
        assert_eq!(enumerate_dominating(&k3, 3).unwrap().len(), 7);

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(enumerate_dominating(&c4, 4).unwrap().len(), 11);
    }

    #[test]
    fn bounded_k() {
        let p3 = Graph::path(3).unwrap();
        let fam = enumerate_dominating(&p3, 2).unwrap();
        assert_eq!(fam.len(), 4);
        assert_eq!(fam.by_card(), &[0, 1, 3]);
        let none = enumerate_dominating(&Graph::cycle(6).unwrap(), 1).unwrap();
        assert!(none.is_empty());
        let zero = enumerate_dominating(&p3, 0).unwrap();
        assert!(zero.is_empty());
        assert_eq!(zero.by_card(), &[0]);
    }

    #[test]
    fn enumerators_agree_on_small_graphs() {
        let e = Enumerator::default();
        let mut graphs = vec![Graph::ladder(4).unwrap(), Graph::empty(5).unwrap()];
        for n in 1..=9 {
            graphs.push(Graph::path(n).unwrap());
            graphs.push(Graph::complete(n).unwrap());
        }
        for n in 3..=9 {
            graphs.push(Graph::cycle(n).unwrap());
        }
        for g in &graphs {
            for k in 0..=g.n() {
                assert_eq!(e.scan(g, k).unwrap(), e.enumerate(g, k).unwrap());
            }
            assert_eq!(
                e.scan_counts(g).unwrap(),
                e.count_by_cardinality(g).unwrap()
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        let e = Enumerator::with_cap(10).unwrap();
        let p11 = Graph::path(11).unwrap();
        assert!(matches!(e.enumerate(&p11, 11), Err(Error::TooLarge(_))));
        assert!(matches!(e.total_count(&p11), Err(Error::TooLarge(_))));
        assert!(Enumerator::with_cap(64).is_err());
        assert!(Enumerator::with_cap(0).is_err());
    }

    #[test]
    fn domination_numbers() {
        assert_eq!(domination_number(&Graph::path(7).unwrap()).unwrap(), 3);
        assert_eq!(domination_number(&Graph::complete(9).unwrap()).unwrap(), 1);
        assert_eq!(domination_number(&Graph::cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(domination_number(&Graph::empty(4).unwrap()).unwrap(), 4);
        assert_eq!(
            upper_domination_number(&Graph::path(7).unwrap()).unwrap(),
            4
        );
        assert_eq!(
            upper_domination_number(&Graph::cycle(8).unwrap()).unwrap(),
            4
        );
        assert_eq!(
            upper_domination_number(&Graph::complete(5).unwrap()).unwrap(),
            1
        );
    }

    #[test]
    fn gamma_set_counts() {
        assert_eq!(
            count_minimum_sets(&Graph::path(6).unwrap()).unwrap(),
            big(1)
        );
        assert_eq!(
            count_minimum_sets(&Graph::path(7).unwrap()).unwrap(),
            big(8)
        );
        assert_eq!(
            count_minimum_sets(&Graph::path(8).unwrap()).unwrap(),
            big(4)
        );
    }

    #[test]
    fn upper_gamma_set_counts() {
        assert_eq!(
            count_maximal_minimal_sets(&Graph::path(6).unwrap()).unwrap(),
            big(6)
        );
        assert_eq!(
            count_maximal_minimal_sets(&Graph::path(7).unwrap()).unwrap(),
            big(1)
        );
        assert_eq!(
            count_maximal_minimal_sets(&Graph::path(8).unwrap()).unwrap(),
            big(9)
        );
        assert_eq!(
            count_maximal_minimal_sets(&Graph::cycle(5).unwrap()).unwrap(),
            big(5)
        );
        assert_eq!(
            count_maximal_minimal_sets(&Graph::cycle(6).unwrap()).unwrap(),
            big(2)
        );
        assert_eq!(
            count_maximal_minimal_sets(&Graph::cycle(7).unwrap()).unwrap(),
            big(14)
        );
        assert_eq!(
            count_maximal_minimal_sets(&Graph::cycle(8).unwrap()).unwrap(),
            big(6)
        );
        assert_eq!(
            count_maximal_minimal_sets(&Graph::path(4).unwrap()).unwrap(),
            big(4)
        );
        assert_eq!(
            count_maximal_minimal_sets(&Graph::cycle(4).unwrap()).unwrap(),
            big(6)
        );
    }

    #[test]
    fn counts_by_cardinality() {
        let row = |n| count_by_cardinality(&Graph::path(n).unwrap()).unwrap();
        assert_eq!(row(5)[3], big(8));
        assert_eq!(row(4)[3], big(4));
        assert_eq!(row(6)[5], big(6));
        assert_eq!(row(6)[0], big(0));
        assert_eq!(row(6)[6], big(1));
    }

    #[test]
    fn total_counts() {
        assert_eq!(total_count(&Graph::complete(4).unwrap()).unwrap(), big(15));
        assert_eq!(total_count(&Graph::path(4).unwrap()).unwrap(), big(9));
        assert_eq!(total_count(&Graph::cycle(3).unwrap()).unwrap(), big(7));
        assert_eq!(total_count(&Graph::empty(6).unwrap()).unwrap(), big(1));
    }

    #[test]
    fn minimal_sets_match_filtered_scan() {
        let e = Enumerator::default();
        for g in [
            Graph::path(9).unwrap(),
            Graph::cycle(8).unwrap(),
            Graph::ladder(4).unwrap(),
        ] {
            let expected: Vec<VertexSubset> = e
                .scan(&g, g.n())
                .unwrap()
                .iter()
                .copied()
                .filter(|&s| is_minimal_dominating(&g, s).unwrap())
                .collect();
            assert_eq!(e.minimal_dominating_sets(&g).unwrap(), expected);
        }
    }
}
