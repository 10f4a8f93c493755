use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::SeqFamily;
use crate::error::{Error, Result};

/// A rational generating function `numerator / denominator` over the
/// integers, coefficients in ascending powers.
///
/// The coefficient of `x^m` in the expansion is the sequence term for
/// `n = offset + m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
    pub offset: usize,
}

fn ints(coeffs: &[i64]) -> Vec<BigInt> {
    coeffs.iter().map(|&c| BigInt::from(c)).collect()
}

impl RationalGF {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>, offset: usize) -> Result<Self> {
        if denominator.first().is_none_or(Zero::is_zero) {
            return Err(Error::InvalidGf(
                "denominator constant term is zero; no power series exists".into(),
            ));
        }
        Ok(RationalGF {
            numerator,
            denominator,
            offset,
        })
    }

    /// `(1+x)^2 / (1 - x - x^2 - x^3)`, the orders of `D_n(P_n)` from n = 1.
    ///
    /// Equal to `-(x+1)^2 / (x^3+x^2+x-1)`; both parts are negated so the
    /// denominator has unit constant term.
    pub fn path() -> RationalGF {
        RationalGF {
            numerator: ints(&[1, 2, 1]),
            denominator: ints(&[1, -1, -1, -1]),
            offset: 1,
        }
    }

    /// `(1+2x+3x^2) / (1 - x - x^2 - x^3)`, the orders of `D_n(C_n)` from n = 1.
    pub fn cycle() -> RationalGF {
        RationalGF {
            numerator: ints(&[1, 2, 3]),
            denominator: ints(&[1, -1, -1, -1]),
            offset: 1,
        }
    }

    pub fn for_family(family: SeqFamily) -> RationalGF {
        match family {
            SeqFamily::Path => RationalGF::path(),
            SeqFamily::Cycle => RationalGF::cycle(),
        }
    }

    /// First `terms` power-series coefficients by long division.
    ///
    /// Fails if the denominator's constant term is zero, or if a coefficient
    /// is not an integer (constant term other than ±1 with no exact quotient).
    pub fn expand(&self, terms: usize) -> Result<Vec<BigInt>> {
        let lead = match self.denominator.first() {
            Some(c) if !c.is_zero() => c,
            _ => {
                return Err(Error::InvalidGf(
                    "denominator constant term is zero; no power series exists".into(),
                ))
            }
        };
        let mut out: Vec<BigInt> = Vec::with_capacity(terms);
        for m in 0..terms {
            let mut acc = self.numerator.get(m).cloned().unwrap_or_default();
            for (i, d) in self.denominator.iter().enumerate().skip(1).take(m) {
                acc -= d * &out[m - i];
            }
            let (q, r) = acc.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InvalidGf(format!(
                    "coefficient of x^{m} is not an integer ({acc}/{lead})"
                )));
            }
            out.push(q);
        }
        Ok(out)
    }

    /// Sequence values for `n = offset..=n_max`.
    pub fn values_up_to(&self, n_max: usize) -> Result<Vec<BigInt>> {
        self.expand((n_max + 1).saturating_sub(self.offset))
    }

    pub fn has_unit_constant(&self) -> bool {
        self.denominator.first().is_some_and(|c| c.abs().is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(gf: &RationalGF, terms: usize) -> Vec<i64> {
        gf.expand(terms)
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn family_expansions() {
        assert_eq!(coeffs(&RationalGF::path(), 5), vec![1, 3, 5, 9, 17]);
        assert_eq!(coeffs(&RationalGF::cycle(), 4), vec![1, 3, 7, 11]);
    }

    #[test]
    fn geometric_series() {
        let gf = RationalGF::new(ints(&[1]), ints(&[1, -1]), 0).unwrap();
        assert_eq!(coeffs(&gf, 6), vec![1; 6]);
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        assert!(matches!(
            RationalGF::new(ints(&[1]), ints(&[0, 1]), 0),
            Err(Error::InvalidGf(_))
        ));
        let raw = RationalGF {
            numerator: ints(&[1]),
            denominator: ints(&[0, 1]),
            offset: 0,
        };
        assert!(matches!(raw.expand(3), Err(Error::InvalidGf(_))));
    }

    #[test]
    fn non_integral_expansion_is_rejected() {
        let gf = RationalGF::new(ints(&[1]), ints(&[2, 1]), 0).unwrap();
        assert!(!gf.has_unit_constant());
        assert!(matches!(gf.expand(2), Err(Error::InvalidGf(_))));
        let exact = RationalGF::new(ints(&[2, 1]), ints(&[2]), 0);
        assert!(exact.unwrap().expand(3).is_err());
    }

    #[test]
    fn values_use_offset() {
        let v = RationalGF::path().values_up_to(4).unwrap();
        assert_eq!(v.len(), 4);
        assert_eq!(v[3], BigInt::from(9));
    }
}
