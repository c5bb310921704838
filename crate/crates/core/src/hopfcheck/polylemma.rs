//! The rising-factorial identity
//! `Σ_{α₁+…+α_n=k} Π (X_i)^{(α_i)}/α_i! = S^{(k)}/k!`, `S = X₁ + … + X_n`,
//! checked by exact expansion in `ℚ[X₁, …, X_n]`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::{factorial, int, Rational};

/// Exponent vector to coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    fn constant(vars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars], c);
        }
        Poly { vars, terms }
    }

    fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        Poly { vars, terms: BTreeMap::from([(e, Rational::one())]) }
    }

    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Poly { vars: self.vars, terms }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::constant(self.vars, Rational::zero());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out = out.add(&Poly { vars: self.vars, terms: BTreeMap::from([(e, c1 * c2)]) });
            }
        }
        out
    }

    /// `x (x+1) … (x+m-1) / m!`
    fn rising_over_factorial(x: &Poly, m: u32) -> Poly {
        let mut out = Poly::constant(x.vars, Rational::one());
        for r in 0..m {
            out = out.mul(&x.add(&Poly::constant(x.vars, int(r as i64))));
        }
        let inv = Rational::one() / Rational::from_integer(factorial(m));
        Poly { vars: out.vars, terms: out.terms.into_iter().map(|(e, c)| (e, c * &inv)).collect() }
    }
}

fn compositions(parts: usize, total: u32) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(parts - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn verify_poly_lemma(n: usize, k: u32) -> bool {
    assert!(n >= 1 && k >= 1, "n and k must be positive");
    let xs: Vec<Poly> = (0..n).map(|i| Poly::var(n, i)).collect();
    let mut lhs = Poly::constant(n, Rational::zero());
    for alpha in compositions(n, k) {
        let term = xs
            .iter()
            .zip(&alpha)
            .fold(Poly::constant(n, Rational::one()), |acc, (x, &a)| acc.mul(&Poly::rising_over_factorial(x, a)));
        lhs = lhs.add(&term);
    }
    let s = xs.iter().fold(Poly::constant(n, Rational::zero()), |acc, x| acc.add(x));
    lhs == Poly::rising_over_factorial(&s, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        for n in 1..=4 {
            for k in 1..=4 {
                assert!(verify_poly_lemma(n, k), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn composition_count() {
        assert_eq!(compositions(3, 4).len(), 15);
    }
}
