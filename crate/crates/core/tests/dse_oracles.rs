use dse_hopf::algebra::{coproduct, z_functional};
use dse_hopf::dse::{
    b_generators, b_series_closed_form, c_generators, closed_coeff, lp_inverse_one, solve,
};
use dse_hopf::rational::{frac, int, pow, Rational};
use dse_hopf::series::solve_family;
use dse_hopf::{AlgebraElement, Forest, Mode, TruncatedSeries, Tree};
use num_traits::One;

fn poly(v: &[i64]) -> TruncatedSeries {
    TruncatedSeries::polynomial(v.iter().map(|&x| int(x)).collect())
}

/// Ordered compositions of `n` into `k` positive parts.
fn compositions(n: u32, k: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `b_{n+1} = Σ_k Σ (k+1)p_{k+1} B⁺(a_{α₁}…a_{α_k}) + Σ_k Σ k p_k B⁺(b_{α₁}a_{α₂}…a_{α_k})`.
fn eq3_oracle(p: &TruncatedSeries, a: &[AlgebraElement], n: u32) -> Vec<AlgebraElement> {
    let mode = Mode::Commutative;
    let mut b = vec![AlgebraElement::one(mode)];
    for m in 0..n {
        let mut next = AlgebraElement::zero(mode);
        if m == 0 {
            next = AlgebraElement::from_tree(Tree::dot(), mode).scale(&p.coeff(1));
        }
        for k in 1..=m {
            for parts in compositions(m, k) {
                let mut first = AlgebraElement::one(mode);
                let mut second = b[parts[0] as usize].clone();
                for (idx, &alpha) in parts.iter().enumerate() {
                    first = &first * &a[alpha as usize - 1];
                    if idx > 0 {
                        second = &second * &a[alpha as usize - 1];
                    }
                }
                let c1 = int(k as i64 + 1) * p.coeff(k as usize + 1);
                let c2 = int(k as i64) * p.coeff(k as usize);
                next = &next + &first.b_plus().scale(&c1);
                next = &next + &second.b_plus().scale(&c2);
            }
        }
        b.push(next);
    }
    b
}

#[test]
fn lp_inverse_matches_eq3_recursion() {
    let series = [
        solve_family(&int(1), &int(1), 6),
        solve_family(&int(2), &frac(1, 2), 6),
        solve_family(&frac(3, 2), &int(0), 6),
        poly(&[1, 1, 2, 0, 5, 1, 3]),
        poly(&[1, 0, 1]),
    ];
    for p in &series {
        let sol = solve(p, 6, Mode::Commutative).unwrap();
        let a: Vec<AlgebraElement> = (1..=6).map(|k| sol.a(k).clone()).collect();
        let oracle = eq3_oracle(p, &a, 5);
        let b = lp_inverse_one(p, 5, Mode::Commutative).unwrap();
        assert_eq!(b, oracle, "P = {p}");
    }
}

#[test]
fn lp_inverse_is_z_contraction_of_delta_x() {
    // (Z ⊗ Id)Δ(X) = (Id - L_P)^{-1}(1) in the commutative algebra, for any P
    for p in [poly(&[1, 3, 1, 4, 1, 5, 9]), solve_family(&int(1), &frac(7, 3), 6)] {
        let sol = solve(&p, 6, Mode::Commutative).unwrap();
        let b = lp_inverse_one(&p, 5, Mode::Commutative).unwrap();
        let contracted = coproduct(&sol.x(), 6).contract_left(|f| {
            z_functional(&AlgebraElement::from_forest(f.clone(), Mode::Commutative))
        });
        let total = b.iter().fold(AlgebraElement::zero(Mode::Commutative), |acc, x| &acc + x);
        assert_eq!(contracted, total);
    }
}

#[test]
fn alpha_scaling_lemma() {
    // a_n(α, β) = α^{n-1} a_n(1, β)
    for beta in [int(0), int(1), frac(-1, 3), int(2)] {
        let base = solve(&solve_family(&int(1), &beta, 6), 6, Mode::Planar).unwrap();
        for alpha in [int(2), frac(-3, 2), int(0)] {
            let scaled = solve(&solve_family(&alpha, &beta, 6), 6, Mode::Planar).unwrap();
            for n in 1..=6 {
                assert_eq!(scaled.a(n), &base.a(n).scale(&pow(&alpha, n - 1)));
            }
        }
    }
}

#[test]
fn special_parameters() {
    // a_t(1, 1) = 1, a_t(1, 0) = 1/t!, a_t(1, -1) = [t is a ladder], a_t(0, β) = δ_{t,•}
    for n in 1..=6 {
        for t in dse_hopf::trees::enumerate(n, Mode::Planar) {
            assert!(closed_coeff(&t, &int(1), &int(1)).is_one());
            let inv = Rational::one() / Rational::from_integer(t.factorial());
            assert_eq!(closed_coeff(&t, &int(1), &int(0)), inv);
            let ladder = if t.is_ladder() { int(1) } else { int(0) };
            assert_eq!(closed_coeff(&t, &int(1), &int(-1)), ladder);
            let dot = if n == 1 { int(1) } else { int(0) };
            assert_eq!(closed_coeff(&t, &int(0), &frac(5, 2)), dot);
        }
    }
}

#[test]
fn b_generators_sum_to_closed_form() {
    for beta in [int(1), int(0), frac(1, 2), int(-1), frac(7, 3)] {
        let b = b_generators(&int(1), &beta, 5).unwrap();
        let total = b.iter().fold(AlgebraElement::zero(Mode::Planar), |acc, x| &acc + x);
        assert_eq!(total, b_series_closed_form(&int(1), &beta, 5).unwrap(), "β = {beta}");
    }
}

#[test]
fn c_generators_reduce_to_b_at_equal_parameters() {
    let b = b_generators(&int(1), &frac(1, 2), 4).unwrap();
    let c = c_generators(&frac(1, 2), &frac(1, 2), 4).unwrap();
    assert_eq!(b, c);
}

#[test]
fn weight_three_generator_has_three_quarters() {
    // a_3(1, 1/2) = (3/4) B⁺(••) + B⁺(B⁺(•))
    let sol = solve(&solve_family(&int(1), &frac(1, 2), 3), 3, Mode::Planar).unwrap();
    let mut expected = AlgebraElement::zero(Mode::Planar);
    expected.add_term(Forest::parse("[[][]]").unwrap(), frac(3, 4));
    expected.add_term(Forest::parse("[[[]]]").unwrap(), int(1));
    assert_eq!(sol.a(3), &expected);
}
