//! Combinatorial Dyson–Schwinger equation `X = B⁺(P(X))` and the generator
//! families derived from its solution.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::algebra::{substitute_series, AlgebraElement};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::series::{binomial_power, exp_series, solve_family, TruncatedSeries};
use crate::trees::{Mode, Tree};

/// Homogeneous components `a_1..a_N` of the solution for a series `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DseSolution {
    series: TruncatedSeries,
    mode: Mode,
    components: Vec<AlgebraElement>,
}

impl DseSolution {
    pub fn series(&self) -> &TruncatedSeries {
        &self.series
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Truncation weight `N`.
    pub fn cap(&self) -> u32 {
        self.components.len() as u32
    }

    /// `a_n` for `1 ≤ n ≤ N`.
    pub fn a(&self, n: u32) -> &AlgebraElement {
        assert!(n >= 1 && n <= self.cap(), "a_{n} outside 1..={}", self.cap());
        &self.components[n as usize - 1]
    }

    pub fn components(&self) -> &[AlgebraElement] {
        &self.components
    }

    /// `X = a_1 + … + a_N`.
    pub fn x(&self) -> AlgebraElement {
        self.components.iter().fold(AlgebraElement::zero(self.mode), |acc, a| &acc + a)
    }
}

type SolveKey = (Vec<Rational>, u32, Mode);

fn solve_cache() -> &'static RwLock<HashMap<SolveKey, Arc<DseSolution>>> {
    static CACHE: OnceLock<RwLock<HashMap<SolveKey, Arc<DseSolution>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Solves `X = B⁺(P(X))` through weight `n`:
/// `a_1 = •`, `a_{m+1} = Σ_k p_k Σ_{α_1+…+α_k=m} B⁺(a_{α_1}…a_{α_k})`.
pub fn solve(p: &TruncatedSeries, n: u32, mode: Mode) -> Result<Arc<DseSolution>> {
    if !p.coeff(0).is_one() {
        return Err(Error::ConstantTerm { expected: "1".into(), found: rational::format(&p.coeff(0)) });
    }
    if n == 0 {
        return Err(Error::InvalidParameter { name: "N", reason: "weight must be at least 1".into() });
    }
    let p = p.to_order(n as usize - 1)?;
    let key = (p.coeffs().to_vec(), n, mode);
    if let Some(hit) = solve_cache().read().expect("solve cache poisoned").get(&key) {
        return Ok(hit.clone());
    }

    // powers[k][m] is the weight-m component of X^k (k, m ≥ 1).
    let zero = AlgebraElement::zero(mode);
    let mut powers: Vec<Vec<AlgebraElement>> = vec![vec![zero.clone(); n as usize + 1]; n as usize + 1];
    let mut a: Vec<AlgebraElement> = Vec::with_capacity(n as usize);
    a.push(AlgebraElement::from_tree(Tree::dot(), mode));
    for m in 1..=n as usize {
        // Extend the power table with a_m.
        powers[1][m] = a[m - 1].clone();
        for k in 2..=m {
            let mut acc = zero.clone();
            for j in 1..=m + 1 - k {
                let left = &powers[k - 1][m - j];
                if !left.is_zero() && !a[j - 1].is_zero() {
                    acc = &acc + &(left * &a[j - 1]);
                }
            }
            powers[k][m] = acc;
        }
        if m == n as usize {
            break;
        }
        let mut inside = zero.clone();
        for k in 1..=m {
            let c = p.coeff(k);
            if !c.is_zero() {
                inside = &inside + &powers[k][m].scale(&c);
            }
        }
        a.push(inside.b_plus());
    }
    let solution = Arc::new(DseSolution { series: p, mode, components: a });
    solve_cache().write().expect("solve cache poisoned").insert(key, solution.clone());
    Ok(solution)
}

/// Coefficient of the planar tree `t` in `a_{|t|}(α, β)`:
/// `α^{|t|-1} [t]_β! / t!`.
pub fn closed_coeff(t: &Tree, alpha: &Rational, beta: &Rational) -> Rational {
    rational::pow(alpha, t.weight() - 1) * t.beta_factorial(beta) / Rational::from_integer(t.factorial())
}

/// `L_P(a) = B⁺(P'(X) a)` truncated at weight `cap`; `p` must be known to
/// order `cap`.
pub fn lp_apply(
    p: &TruncatedSeries,
    solution: &DseSolution,
    a: &AlgebraElement,
    cap: u32,
) -> Result<AlgebraElement> {
    if a.mode() != solution.mode {
        return Err(Error::ModeMismatch("L_P argument and solution"));
    }
    if cap == 0 {
        return Ok(AlgebraElement::zero(a.mode()));
    }
    let inner_cap = cap - 1;
    let x = solution.x().truncate(inner_cap);
    let derivative = p.to_order(cap as usize)?.derivative();
    let dp = substitute_series(&derivative, &x, inner_cap)?;
    Ok(dp.product_truncated(&a.truncate(inner_cap), inner_cap).b_plus())
}

/// `Y = (Id - L_P)^{-1}(1)` as its components `b_0..b_N`, built degree by
/// degree from `Y = 1 + B⁺(P'(X) Y)`. In the commutative algebra this is
/// `(Z ⊗ Id)(Δ X)`; in the planar one the two differ from weight 4 on.
pub fn lp_inverse_one(p: &TruncatedSeries, n: u32, mode: Mode) -> Result<Vec<AlgebraElement>> {
    let p = p.to_order(n as usize)?;
    let mut out = vec![AlgebraElement::one(mode)];
    if n == 0 {
        return Ok(out);
    }
    let sol = solve(&p, n, mode)?;
    let inner_cap = n - 1;
    let x = sol.x().truncate(inner_cap);
    let dp = substitute_series(&p.derivative(), &x, inner_cap)?;
    let dp_parts: Vec<AlgebraElement> = (0..=inner_cap).map(|w| dp.graded_component(w)).collect();
    for m in 1..=n {
        let mut inside = AlgebraElement::zero(mode);
        for j in 0..m {
            let left = &dp_parts[(m - 1 - j) as usize];
            if !left.is_zero() {
                inside = &inside + &(left * &out[j as usize]);
            }
        }
        out.push(inside.b_plus());
    }
    Ok(out)
}

/// `b_n(α, β) = B⁻(a_{n+1}(α, β))` for `0 ≤ n ≤ N`, planar.
pub fn b_generators(alpha: &Rational, beta: &Rational, n: u32) -> Result<Vec<AlgebraElement>> {
    let p = solve_family(alpha, beta, n as usize);
    let sol = solve(&p, n + 1, Mode::Planar)?;
    (0..=n).map(|k| sol.a(k + 1).b_minus()).collect()
}

/// The closed form `Σ b_n = (1 - βX)^{-1/β}`, or `exp(X)` when `β = 0`,
/// through weight `n`.
pub fn b_series_closed_form(alpha: &Rational, beta: &Rational, n: u32) -> Result<AlgebraElement> {
    let p = solve_family(alpha, beta, n as usize);
    let x = solve(&p, n.max(1), Mode::Planar)?.x().truncate(n);
    let outer = if beta.is_zero() {
        exp_series(n as usize)
    } else {
        let base = TruncatedSeries::polynomial(vec![Rational::one(), -beta.clone()]);
        binomial_power(&base, &(-Rational::one() / beta), n as usize)?
    };
    substitute_series(&outer, &x, n)
}

/// `γ = (β + 1)/(β' + 1)`, defined and nonzero when `β, β' ≠ -1`.
pub fn iso_exponent(beta: &Rational, beta_prime: &Rational) -> Result<Rational> {
    let minus_one = -Rational::one();
    if *beta_prime == minus_one {
        return Err(Error::InvalidParameter { name: "β'", reason: "β' = -1 leaves γ undefined".into() });
    }
    if *beta == minus_one {
        return Err(Error::InvalidParameter { name: "β", reason: "β = -1 makes γ = 0".into() });
    }
    Ok((beta + Rational::one()) / (beta_prime + Rational::one()))
}

/// `y^e` for `y` with constant term 1, through weight `cap`.
pub fn element_power(y: &AlgebraElement, e: &Rational, cap: u32) -> Result<AlgebraElement> {
    let one = AlgebraElement::one(y.mode());
    if crate::algebra::counit(y) != Rational::one() {
        return Err(Error::ConstantTerm { expected: "1".into(), found: rational::format(&crate::algebra::counit(y)) });
    }
    let u = y - &one;
    let base = TruncatedSeries::polynomial(vec![Rational::one(), Rational::one()]);
    let series = binomial_power(&base, e, cap as usize)?;
    substitute_series(&series, &u, cap)
}

/// `c_0..c_N`, the homogeneous components of `Z = Y(1, β)^γ`.
pub fn c_generators(beta: &Rational, beta_prime: &Rational, n: u32) -> Result<Vec<AlgebraElement>> {
    let gamma = iso_exponent(beta, beta_prime)?;
    let b = b_generators(&Rational::one(), beta, n)?;
    let y = b.iter().fold(AlgebraElement::zero(Mode::Planar), |acc, x| &acc + x);
    let z = element_power(&y, &gamma, n)?;
    Ok((0..=n).map(|k| z.graded_component(k)).collect())
}
