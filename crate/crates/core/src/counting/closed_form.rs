use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Zero;

use super::{order_sequence, SeqFamily};
use crate::error::{Error, Result};

const ROOT_RESIDUAL: f64 = 1e-12;
const ROUNDING_RESIDUAL: f64 = 1e-6;
/// Largest magnitude at which an f64 still pins down an integer.
const EXACT_F64_LIMIT: f64 = 9_007_199_254_740_992.0;

fn cubic(x: Complex64) -> Complex64 {
    ((x + 1.0) * x + 1.0) * x - 1.0
}

fn cubic_derivative(x: Complex64) -> Complex64 {
    (x * 3.0 + 2.0) * x + 1.0
}

/// Roots of `x^3 + x^2 + x - 1` by Durand–Kerner, polished with Newton steps.
/// The real root comes first, then the complex pair by ascending imaginary part.
fn tribonacci_roots() -> Result<[Complex64; 3]> {
    let seed = Complex64::new(0.4, 0.9);
    let mut z = [seed.powu(0), seed, seed.powu(2)];
    for _ in 0..500 {
        let mut shift = 0.0f64;
        for i in 0..3 {
            let denom = (0..3)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let step = cubic(z[i]) / denom;
            z[i] -= step;
            shift = shift.max(step.norm());
        }
        if shift < 1e-16 {
            break;
        }
    }
    for root in &mut z {
        for _ in 0..3 {
            let d = cubic_derivative(*root);
            if d.norm() > 0.0 {
                *root -= cubic(*root) / d;
            }
        }
    }
    z.sort_by(|a, b| {
        a.im.abs()
            .total_cmp(&b.im.abs())
            .then(a.im.total_cmp(&b.im))
    });
    if let Some(bad) = z.iter().find(|r| cubic(**r).norm() >= ROOT_RESIDUAL) {
        return Err(Error::PrecisionFailure(format!(
            "cubic root {bad} has residual {:e}",
            cubic(*bad).norm()
        )));
    }
    Ok(z)
}

/// Root-based closed form for the orders of `D_n(P_n)` and `D_n(C_n)`.
///
/// With `τ_1, τ_2, τ_3` the roots of `x^3 + x^2 + x - 1` and `N` the
/// generating-function numerator,
///
/// ```text
/// |V(D_n)| = Σ_i  N(τ_i) / ∏_{j≠i} (τ_j - τ_i) · τ_i^{-n}
/// ```
///
/// which is the partial-fraction expansion of `N(x) / (1 - x - x^2 - x^3)`
/// read at `x^{n-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicClosedForm {
    pub family: SeqFamily,
    pub roots: [Complex64; 3],
    pub coefficients: [Complex64; 3],
}

fn numerator(family: SeqFamily, x: Complex64) -> Complex64 {
    match family {
        SeqFamily::Path => (x + 1.0) * (x + 1.0),
        SeqFamily::Cycle => (x * 3.0 + 2.0) * x + 1.0,
    }
}

fn spread(roots: &[Complex64; 3], i: usize) -> Complex64 {
    (0..3)
        .filter(|&j| j != i)
        .fold(Complex64::new(1.0, 0.0), |acc, j| {
            acc * (roots[j] - roots[i])
        })
}

impl CubicClosedForm {
    pub fn new(family: SeqFamily) -> Result<CubicClosedForm> {
        let roots = tribonacci_roots()?;
        let coefficients = std::array::from_fn(|i| numerator(family, roots[i]) / spread(&roots, i));
        Ok(CubicClosedForm {
            family,
            roots,
            coefficients,
        })
    }

    pub fn root_residuals(&self) -> [f64; 3] {
        self.roots.map(|r| cubic(r).norm())
    }

    /// Unrounded value at `n`.
    pub fn evaluate(&self, n: usize) -> Complex64 {
        let n = i32::try_from(n).unwrap_or(i32::MAX);
        self.roots
            .iter()
            .zip(&self.coefficients)
            .map(|(r, c)| c * r.powi(-n))
            .sum()
    }

    /// Rounded value and its relative residual before rounding.
    pub fn order_with_residual(&self, n: usize) -> Result<(BigUint, f64)> {
        if n == 0 {
            return Err(Error::InvalidSize(
                "closed form is indexed from n = 1".into(),
            ));
        }
        let z = self.evaluate(n);
        let rounded = z.re.round();
        if !rounded.is_finite() || rounded.abs() >= EXACT_F64_LIMIT {
            return Err(Error::PrecisionFailure(format!(
                "value at n = {n} is beyond exact f64 integers"
            )));
        }
        let residual = ((z.re - rounded).abs() + z.im.abs()) / rounded.abs().max(1.0);
        if residual > ROUNDING_RESIDUAL || rounded < 0.0 {
            return Err(Error::PrecisionFailure(format!(
                "value {z} at n = {n} is not within {ROUNDING_RESIDUAL:e} of a nonnegative integer"
            )));
        }
        Ok((BigUint::from(rounded as u64), residual))
    }

    pub fn order(&self, n: usize) -> Result<BigUint> {
        self.order_with_residual(n).map(|(v, _)| v)
    }

    /// `(-1)^n Σ_i M(τ_i)/∏_{j≠i}(τ_j - τ_i) · τ_i^{-(n+1)}` with `M(x) = N(-x)`.
    ///
    /// This variant evaluates the numerator at the negated roots and adds an
    /// alternating sign; it equals `-a_{n+1}` only when the roots of
    /// `x^3 - x^2 + x + 1` are used instead. With the roots of
    /// `x^3 + x^2 + x - 1` it does not reproduce the orders. Reports use it to
    /// show that mismatch next to the working form.
    pub fn alternating_variant(&self, n: usize) -> Complex64 {
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        let e = -i32::try_from(n).unwrap_or(i32::MAX);
        let product: Complex64 = self.roots.iter().product();
        let sum: Complex64 = (0..3)
            .map(|i| {
                let coeff = numerator(self.family, -self.roots[i]) / spread(&self.roots, i);
                coeff * self.roots[i].powi(e) * (product / self.roots[i])
            })
            .sum();
        sum * sign / product
    }
}

/// Order of `D_n(G_n)` from the root-based closed form, rounded.
pub fn closed_form_order(family: SeqFamily, n: usize) -> Result<BigUint> {
    CubicClosedForm::new(family)?.order(n)
}

/// Polynomial formulas for entries of the path triangle.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PathCountCase {
    /// `d(P_{3n}, n) = 1`
    MinimumThreeN,
    /// `d(P_{3n+2}, n+1) = n + 2`
    MinimumThreeNPlusTwo,
    /// `d(P_{3n+1}, n+1) = (n+2)(n+3)/2 - 2`
    MinimumThreeNPlusOne,
    /// `d(P_{3n}, n+1) = n(n+1)(n+8)/6`
    NextThreeN,
    /// `s_n`, the row sum, by the tribonacci recurrence from 1, 3, 5
    RowSum,
    /// `d(P_n, n-1) = n`, valid from n = 2
    AllButOne,
    /// `d(P_{3n+2}, n+2) = (n^4 + 18n^3 + 71n^2 + 78n + 24)/24`
    NextThreeNPlusTwo,
    /// `d(P_{3n+1}, n+2) = n(n+1)(n^3 + 24n^2 + 121n + 94)/120`
    NextThreeNPlusOne,
}

impl PathCountCase {
    pub const ALL: [PathCountCase; 8] = [
        PathCountCase::MinimumThreeN,
        PathCountCase::MinimumThreeNPlusTwo,
        PathCountCase::MinimumThreeNPlusOne,
        PathCountCase::NextThreeN,
        PathCountCase::RowSum,
        PathCountCase::AllButOne,
        PathCountCase::NextThreeNPlusTwo,
        PathCountCase::NextThreeNPlusOne,
    ];

    pub fn id(self) -> &'static str {
        match self {
            PathCountCase::MinimumThreeN => "d(P_3n,n)",
            PathCountCase::MinimumThreeNPlusTwo => "d(P_3n+2,n+1)",
            PathCountCase::MinimumThreeNPlusOne => "d(P_3n+1,n+1)",
            PathCountCase::NextThreeN => "d(P_3n,n+1)",
            PathCountCase::RowSum => "s_n",
            PathCountCase::AllButOne => "d(P_n,n-1)",
            PathCountCase::NextThreeNPlusTwo => "d(P_3n+2,n+2)",
            PathCountCase::NextThreeNPlusOne => "d(P_3n+1,n+2)",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            PathCountCase::AllButOne => 2,
            _ => 1,
        }
    }

    /// The triangle cell `(path order, cardinality)` the formula describes,
    /// or `None` for the row sum.
    pub fn target(self, n: usize) -> Option<(usize, usize)> {
        match self {
            PathCountCase::MinimumThreeN => Some((3 * n, n)),
            PathCountCase::MinimumThreeNPlusTwo => Some((3 * n + 2, n + 1)),
            PathCountCase::MinimumThreeNPlusOne => Some((3 * n + 1, n + 1)),
            PathCountCase::NextThreeN => Some((3 * n, n + 1)),
            PathCountCase::RowSum => None,
            PathCountCase::AllButOne => Some((n, n - 1)),
            PathCountCase::NextThreeNPlusTwo => Some((3 * n + 2, n + 2)),
            PathCountCase::NextThreeNPlusOne => Some((3 * n + 1, n + 2)),
        }
    }

    /// Path order the formula at `n` refers to.
    pub fn path_order(self, n: usize) -> usize {
        self.target(n).map_or(n, |(p, _)| p)
    }
}

impl fmt::Display for PathCountCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

fn poly(coeffs_desc: &[i64], n: &BigInt) -> BigInt {
    coeffs_desc
        .iter()
        .fold(BigInt::zero(), |acc, &c| acc * n + BigInt::from(c))
}

fn exact_div(num: BigInt, den: i64, case: PathCountCase, n: usize) -> Result<BigUint> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(Error::FormulaViolation(format!(
            "{case} at n = {n}: {num} is not divisible by {den}"
        )));
    }
    q.to_biguint()
        .ok_or_else(|| Error::FormulaViolation(format!("{case} at n = {n} is negative ({q})")))
}

/// Evaluates one of the path-count formulas exactly.
pub fn closed_d(case: PathCountCase, n: usize) -> Result<BigUint> {
    if n < case.min_n() {
        return Err(Error::InvalidSize(format!(
            "{case} is stated for n >= {}, got {n}",
            case.min_n()
        )));
    }
    let x = BigInt::from(n);
    match case {
        PathCountCase::MinimumThreeN => Ok(BigUint::from(1u8)),
        PathCountCase::MinimumThreeNPlusTwo => Ok(BigUint::from(n + 2)),
        PathCountCase::MinimumThreeNPlusOne => {
            // (n+2)(n+3)/2 - 2 = (n^2 + 5n + 2)/2
            exact_div(poly(&[1, 5, 2], &x), 2, case, n)
        }
        PathCountCase::NextThreeN => exact_div(&x * (&x + 1) * (&x + 8), 6, case, n),
        PathCountCase::RowSum => Ok(order_sequence(SeqFamily::Path, n)?
            .pop()
            .unwrap_or_default()),
        PathCountCase::AllButOne => Ok(BigUint::from(n)),
        PathCountCase::NextThreeNPlusTwo => exact_div(poly(&[1, 18, 71, 78, 24], &x), 24, case, n),
        PathCountCase::NextThreeNPlusOne => {
            exact_div(&x * (&x + 1) * poly(&[1, 24, 121, 94], &x), 120, case, n)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::path_triangle;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn roots_are_accurate() {
        let form = CubicClosedForm::new(SeqFamily::Path).unwrap();
        assert!(form.root_residuals().iter().all(|&r| r < 1e-12));
        assert!(form.roots[0].im.abs() < 1e-12);
        assert!((form.roots[0].re - 0.543_689_012_692_076).abs() < 1e-12);
        let product: Complex64 = form.roots.iter().product();
        assert!((product - 1.0).norm() < 1e-12);
    }

    #[test]
    fn closed_form_seeds() {
        assert_eq!(closed_form_order(SeqFamily::Path, 3).unwrap(), big(5));
        assert_eq!(closed_form_order(SeqFamily::Cycle, 3).unwrap(), big(7));
        assert_eq!(closed_form_order(SeqFamily::Path, 1).unwrap(), big(1));
        assert!(closed_form_order(SeqFamily::Path, 0).is_err());
    }

    #[test]
    fn closed_form_follows_recurrence() {
        for family in [SeqFamily::Path, SeqFamily::Cycle] {
            let form = CubicClosedForm::new(family).unwrap();
            let seq = order_sequence(family, 40).unwrap();
            for (i, expected) in seq.iter().enumerate() {
                let (value, residual) = form.order_with_residual(i + 1).unwrap();
                assert_eq!(&value, expected, "{family} n={}", i + 1);
                assert!(residual < 1e-6);
            }
        }
    }

    #[test]
    fn closed_form_refuses_inexact_range() {
        let form = CubicClosedForm::new(SeqFamily::Path).unwrap();
        assert!(matches!(form.order(80), Err(Error::PrecisionFailure(_))));
    }

    #[test]
    fn alternating_variant_misses_the_orders() {
        let form = CubicClosedForm::new(SeqFamily::Path).unwrap();
        let values: Vec<i64> = (1..=6)
            .map(|n| form.alternating_variant(n).re.round() as i64)
            .collect();
        assert_eq!(values, vec![1, 1, -1, 1, -3, 5]);
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(closed_d(PathCountCase::MinimumThreeN, 2).unwrap(), big(1));
        assert_eq!(closed_d(PathCountCase::NextThreeN, 2).unwrap(), big(10));
        assert_eq!(
            closed_d(PathCountCase::MinimumThreeNPlusOne, 2).unwrap(),
            big(8)
        );
        assert_eq!(
            closed_d(PathCountCase::NextThreeNPlusTwo, 1).unwrap(),
            big(8)
        );
        assert_eq!(
            closed_d(PathCountCase::NextThreeNPlusOne, 1).unwrap(),
            big(4)
        );
        assert_eq!(
            closed_d(PathCountCase::MinimumThreeNPlusTwo, 3).unwrap(),
            big(5)
        );
        assert_eq!(closed_d(PathCountCase::RowSum, 6).unwrap(), big(31));
        assert!(closed_d(PathCountCase::AllButOne, 1).is_err());
        assert!(closed_d(PathCountCase::NextThreeN, 0).is_err());
    }

    #[test]
    fn polynomials_match_triangle() {
        let table = path_triangle(95).unwrap();
        for case in PathCountCase::ALL {
            for n in case.min_n()..=30 {
                let expected = match case.target(n) {
                    Some((p, j)) => table.entry(p, j),
                    None => table.row(n).unwrap().iter().sum(),
                };
                assert_eq!(closed_d(case, n).unwrap(), expected, "{case} n={n}");
            }
        }
    }
}
