//! Truncated formal power series in one variable over ℚ.
//!
//! A series is either a polynomial (`exact`, every coefficient past the stored
//! ones is zero) or known only through `h^order`. Binary operations on
//! truncated operands truncate to the smaller order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
    exact: bool,
}

impl TruncatedSeries {
    /// Coefficients `p_0..p_N` of a series known to order `N`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least p_0");
        TruncatedSeries { coeffs, exact: false }
    }

    /// A polynomial; coefficients past the given ones are zero.
    pub fn polynomial(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        TruncatedSeries { coeffs, exact: true }
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Index of the last stored coefficient.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Highest index known, `None` for polynomials.
    fn precision(&self) -> Option<usize> {
        (!self.exact).then(|| self.order())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `p_k`; zero past the stored coefficients. Callers must respect
    /// [`order`](Self::order) for non-polynomial series.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients `0..=n`, padding polynomials with zeros.
    pub fn to_order(&self, n: usize) -> Result<TruncatedSeries> {
        if !self.exact && self.order() < n {
            return Err(Error::SeriesTooShort { have: self.order(), need: n });
        }
        Ok(TruncatedSeries::new((0..=n).map(|k| self.coeff(k)).collect()))
    }

    /// Forgets everything past `h^n`.
    pub fn truncate(&self, n: usize) -> TruncatedSeries {
        let n = self.precision().map_or(n, |p| p.min(n));
        TruncatedSeries::new((0..=n).map(|k| self.coeff(k)).collect())
    }

    fn combined_precision(&self, other: &Self) -> Option<usize> {
        match (self.precision(), other.precision()) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a),
            (Some(a), Some(b)) => Some(a.min(b)),
        }
    }

    fn build(coeffs: Vec<Rational>, precision: Option<usize>) -> TruncatedSeries {
        match precision {
            None => TruncatedSeries::polynomial(coeffs),
            Some(p) => TruncatedSeries::new((0..=p).map(|k| coeffs.get(k).cloned().unwrap_or_else(Rational::zero)).collect()),
        }
    }

    pub fn add(&self, other: &Self) -> TruncatedSeries {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::build(coeffs, self.combined_precision(other))
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect(), exact: self.exact }
    }

    pub fn mul(&self, other: &Self) -> TruncatedSeries {
        let precision = self.combined_precision(other);
        let len = match precision {
            Some(p) => p + 1,
            None => self.coeffs.len() + other.coeffs.len() - 1,
        };
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self::build(coeffs, precision)
    }

    /// `P'(h)`.
    pub fn derivative(&self) -> TruncatedSeries {
        let coeffs: Vec<Rational> = (1..self.coeffs.len())
            .map(|k| &self.coeffs[k] * Rational::from_integer(BigInt::from(k)))
            .collect();
        if self.exact {
            TruncatedSeries::polynomial(coeffs)
        } else if coeffs.is_empty() {
            // Nothing is known about the derivative of a series of order 0.
            TruncatedSeries::new(vec![Rational::zero()])
        } else {
            TruncatedSeries::new(coeffs)
        }
    }

    /// `P(γh)`.
    pub fn scale_argument(&self, gamma: &Rational) -> TruncatedSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * rational::pow(gamma, k as u32))
            .collect();
        TruncatedSeries { coeffs, exact: self.exact }
    }

    /// Equality of the coefficients up to `h^n`.
    pub fn agrees_to(&self, other: &Self, n: usize) -> bool {
        (0..=n).all(|k| self.coeff(k) == other.coeff(k))
    }

    pub fn parse(s: &str) -> Result<TruncatedSeries> {
        parse_series(s, None)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(rational::format).collect();
        f.write_str(&parts.join(","))?;
        if !self.exact {
            write!(f, " + O(h^{})", self.order() + 1)?;
        }
        Ok(())
    }
}

/// `Q_k(λ) = λ(λ+1)…(λ+k-1)/k!`, the coefficient of `h^k` in `(1-h)^{-λ}`.
pub fn q_poly(k: u32, lambda: &Rational) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (lambda + Rational::from_integer(BigInt::from(i)))
            / Rational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// The solution of `(1 - αβh)P' = αP`, `P(0) = 1`, to order `n`, through
/// `p_{k+1} = α(1+kβ)/(k+1) p_k`.
pub fn solve_family(alpha: &Rational, beta: &Rational, n: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(Rational::one());
    for k in 0..n {
        let kq = Rational::from_integer(BigInt::from(k));
        let next = alpha * (Rational::one() + &kq * beta) / (kq + Rational::one()) * &coeffs[k];
        coeffs.push(next);
    }
    TruncatedSeries::new(coeffs)
}

/// `exp(h)` to order `n`.
pub fn exp_series(n: usize) -> TruncatedSeries {
    solve_family(&Rational::one(), &Rational::zero(), n)
}

/// `s^γ` for `s(0) = 1`, as `Σ_k binom(γ, k) (s - 1)^k`, to order `n`.
pub fn binomial_power(s: &TruncatedSeries, gamma: &Rational, n: usize) -> Result<TruncatedSeries> {
    if !s.coeff(0).is_one() {
        return Err(Error::ConstantTerm { expected: "1".into(), found: rational::format(&s.coeff(0)) });
    }
    let n = s.precision().map_or(n, |p| p.min(n));
    let mut u = s.truncate(n);
    u.coeffs[0] = Rational::zero();
    let u = TruncatedSeries::new(u.coeffs);
    let mut out = vec![Rational::zero(); n + 1];
    let mut power = TruncatedSeries::new({
        let mut v = vec![Rational::zero(); n + 1];
        v[0] = Rational::one();
        v
    });
    let mut binom = Rational::one();
    for k in 0..=n {
        if k > 0 {
            power = power.mul(&u);
            binom = binom * (gamma - Rational::from_integer(BigInt::from(k - 1)))
                / Rational::from_integer(BigInt::from(k));
        }
        for (i, c) in power.coeffs.iter().enumerate() {
            out[i] += &binom * c;
        }
    }
    Ok(TruncatedSeries::new(out))
}

/// `p ∘ q` to order `n`. Requires `q(0) = 0` unless `p` is a polynomial.
pub fn compose(p: &TruncatedSeries, q: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    let q0 = q.coeff(0);
    if !q0.is_zero() && !p.is_exact() {
        return Err(Error::ConstantTerm { expected: "0".into(), found: rational::format(&q0) });
    }
    let mut n = q.precision().map_or(n, |pr| pr.min(n));
    if q0.is_zero() {
        if let Some(pp) = p.precision() {
            n = n.min(pp);
        }
    }
    let max_k = if q0.is_zero() { n } else { p.order() };
    let qn = TruncatedSeries::new((0..=n).map(|k| q.coeff(k)).collect());
    let mut out = TruncatedSeries::new(vec![Rational::zero(); n + 1]);
    let mut power = TruncatedSeries::new((0..=n).map(|k| if k == 0 { Rational::one() } else { Rational::zero() }).collect());
    for k in 0..=max_k {
        if k > 0 {
            power = power.mul(&qn);
        }
        let c = p.coeff(k);
        if !c.is_zero() {
            out = out.add(&power.scale(&c));
        }
    }
    Ok(out)
}

/// Accepts `"1,1,1/2"` (a polynomial) or `"family:α=1,β=1/2"`
/// (also `alpha=`/`beta=`); family series are generated to order `order`
/// when given, else 10.
pub fn parse_series(s: &str, order: Option<usize>) -> Result<TruncatedSeries> {
    let bad = |why: &str| Error::BadSeries(s.to_string(), why.to_string());
    let s_trim = s.trim();
    if let Some(rest) = s_trim.strip_prefix("family:") {
        let mut alpha = None;
        let mut beta = None;
        for part in rest.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let value = rational::parse(value).map_err(|_| bad("bad rational"))?;
            match key.trim() {
                "α" | "alpha" | "a" => alpha = Some(value),
                "β" | "beta" | "b" => beta = Some(value),
                other => return Err(bad(&format!("unknown key {other:?}"))),
            }
        }
        let alpha = alpha.ok_or_else(|| bad("missing α"))?;
        let beta = beta.ok_or_else(|| bad("missing β"))?;
        return Ok(solve_family(&alpha, &beta, order.unwrap_or(10)));
    }
    let coeffs = s_trim
        .split(',')
        .map(rational::parse)
        .collect::<Result<Vec<_>>>()
        .map_err(|_| bad("bad rational coefficient"))?;
    Ok(TruncatedSeries::polynomial(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn q_poly_values() {
        for l in [int(3), frac(5, 2), int(-4)] {
            assert_eq!(q_poly(0, &l), int(1));
        }
        for k in 0..=8 {
            assert_eq!(q_poly(k, &int(1)), int(1));
        }
        assert_eq!(q_poly(2, &int(3)), int(6));
    }

    #[test]
    fn family_special_cases() {
        let s = solve_family(&int(0), &frac(2, 3), 6);
        assert_eq!(s.coeffs(), ints(&[1, 0, 0, 0, 0, 0, 0]).as_slice());
        let e = solve_family(&int(1), &int(0), 6);
        let mut fact = int(1);
        for k in 0..=6 {
            if k > 0 {
                fact *= int(k);
            }
            assert_eq!(e.coeff(k as usize), int(1) / &fact);
        }
        let g = solve_family(&int(1), &int(1), 6);
        assert!(g.coeffs().iter().all(|c| *c == int(1)));
    }

    #[test]
    fn geometric_inverse() {
        let s = TruncatedSeries::polynomial(ints(&[1, -1]));
        let p = binomial_power(&s, &int(-1), 3).unwrap();
        assert_eq!(p.coeffs(), ints(&[1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn binomial_power_matches_q() {
        let s = TruncatedSeries::polynomial(ints(&[1, -1]));
        let lambda = frac(5, 2);
        let p = binomial_power(&s, &-lambda.clone(), 5).unwrap();
        for k in 0..=5 {
            assert_eq!(p.coeff(k), q_poly(k as u32, &lambda));
        }
    }

    #[test]
    fn square_root_of_square() {
        let sq = TruncatedSeries::polynomial(ints(&[1, 2, 1]));
        let r = binomial_power(&sq, &frac(1, 2), 6).unwrap();
        assert_eq!(r.coeffs(), ints(&[1, 1, 0, 0, 0, 0, 0]).as_slice());
        assert!(binomial_power(&TruncatedSeries::polynomial(ints(&[2, 1])), &int(2), 3).is_err());
    }

    #[test]
    fn composition_examples() {
        let h = TruncatedSeries::polynomial(ints(&[0, 1]));
        let p = TruncatedSeries::new(vec![int(1), frac(1, 2), int(3), int(-1)]);
        assert_eq!(compose(&p, &h, 3).unwrap(), p);
        let geom = TruncatedSeries::new(ints(&[1, 1, 1, 1]));
        let q = TruncatedSeries::polynomial(ints(&[0, 1, 1]));
        assert_eq!(compose(&geom, &q, 3).unwrap().coeffs(), ints(&[1, 1, 2, 3]).as_slice());
        let shifted = TruncatedSeries::polynomial(ints(&[1, 1]));
        assert!(compose(&geom, &shifted, 3).is_err());
        let poly = TruncatedSeries::polynomial(ints(&[0, 0, 1]));
        assert_eq!(compose(&poly, &shifted, 3).unwrap().coeffs(), ints(&[1, 2, 1, 0]).as_slice());
    }

    #[test]
    fn family_satisfies_differential_system() {
        for (a, b) in [(int(1), int(1)), (int(2), frac(-1, 2)), (frac(3, 2), frac(7, 3)), (int(1), int(0))] {
            let p = solve_family(&a, &b, 8);
            for n in 0..8usize {
                let lhs = int(n as i64 + 1) * p.coeff(n + 1) - &a * &b * int(n as i64) * p.coeff(n);
                assert_eq!(lhs, &a * p.coeff(n));
            }
        }
    }

    #[test]
    fn family_matches_closed_form() {
        use crate::trees::beta_int_factorial;
        let (a, b) = (frac(3, 2), frac(-2, 5));
        let p = solve_family(&a, &b, 7);
        for n in 0..=7u32 {
            let closed = rational::pow(&a, n) * beta_int_factorial(n, &b)
                / Rational::from_integer(rational::factorial(n));
            assert_eq!(p.coeff(n as usize), closed);
        }
    }

    #[test]
    fn mixed_order_truncates_to_minimum() {
        let a = TruncatedSeries::new(ints(&[1, 1, 1, 1, 1]));
        let b = TruncatedSeries::new(ints(&[1, 2]));
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!(a.add(&b).order(), 1);
        let c = TruncatedSeries::polynomial(ints(&[1, 2]));
        assert_eq!(a.mul(&c).order(), 4);
        assert!(c.mul(&c).is_exact());
    }

    #[test]
    fn parse_forms() {
        let p = parse_series("1,1,1/2,1/6", None).unwrap();
        assert!(p.is_exact());
        assert_eq!(p.coeff(3), frac(1, 6));
        let f = parse_series("family:α=1,β=1/2", Some(4)).unwrap();
        assert_eq!(f, solve_family(&int(1), &frac(1, 2), 4));
        assert_eq!(parse_series("family:alpha=2,beta=0", Some(3)).unwrap(), solve_family(&int(2), &int(0), 3));
        assert!(parse_series("1,x", None).is_err());
        assert!(parse_series("family:α=1", None).is_err());
    }
}
