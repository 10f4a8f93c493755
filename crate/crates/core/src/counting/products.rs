use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use crate::domination::Enumerator;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn mersenne(p: usize) -> BigUint {
    (BigUint::one() << p) - 1u8
}

/// Order of `D_{p+q}(G + H)` from the orders of `D_p(G)` and `D_q(H)`:
/// `(2^p - 1)(2^q - 1) + |V(D_p(G))| + |V(D_q(H))|`.
pub fn join_order(p: usize, q: usize, d_g: &BigUint, d_h: &BigUint) -> BigUint {
    mersenne(p) * mersenne(q) + d_g + d_h
}

/// Order of `D_{p(q+1)}(G ∘ H)`: `(2^q + |V(D_q(H))|)^p`.
///
/// Only `p` matters about `G`, since every vertex of `G` is dominated by its
/// own copy of `H`'s apex.
pub fn corona_order(p: usize, q: usize, d_h: &BigUint) -> BigUint {
    let base = (BigUint::one() << q) + d_h;
    num_traits::pow(base, p)
}

/// Orders of `D_{2n}(L_n)` for `n = 1..=n_max` from five seeds, by
/// `a_n = 3a_{n-1} + 2a_{n-2} + 2a_{n-3} - a_{n-4} - a_{n-5}`.
pub fn ladder_order_from_seeds(seeds: &[BigUint; 5], n_max: usize) -> Result<Vec<BigUint>> {
    if n_max == 0 {
        return Err(Error::InvalidSize("ladder orders need n_max >= 1".into()));
    }
    let mut seq: Vec<BigInt> = seeds.iter().map(|s| BigInt::from(s.clone())).collect();
    seq.truncate(n_max);
    while seq.len() < n_max {
        let l = seq.len();
        let next: BigInt =
            3 * &seq[l - 1] + 2 * &seq[l - 2] + 2 * &seq[l - 3] - &seq[l - 4] - &seq[l - 5];
        if next.is_negative() {
            return Err(Error::FormulaViolation(format!(
                "ladder recurrence went negative at n = {}",
                l + 1
            )));
        }
        seq.push(next);
    }
    Ok(seq
        .into_iter()
        .map(|v| v.to_biguint().unwrap_or_default())
        .collect())
}

/// Orders of `D_{2n}(L_n)` for `n = 1..=5`, by enumeration.
pub fn ladder_seeds() -> Result<[BigUint; 5]> {
    let enumerator = Enumerator::default();
    let mut seeds: [BigUint; 5] = Default::default();
    for (i, seed) in seeds.iter_mut().enumerate() {
        *seed = enumerator.total_count(&Graph::ladder(i + 1)?)?;
    }
    Ok(seeds)
}

/// Orders of `D_{2n}(L_n)` for `n = 1..=n_max`, seeded by enumeration.
pub fn ladder_order(n_max: usize) -> Result<Vec<BigUint>> {
    ladder_order_from_seeds(&ladder_seeds()?, n_max)
}
