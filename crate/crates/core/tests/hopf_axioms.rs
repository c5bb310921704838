use std::collections::BTreeMap;

use dse_hopf::algebra::{coproduct, coproduct_forest, counit, z_functional};
use dse_hopf::rational::{int, Rational};
use dse_hopf::trees::{enumerate, enumerate_forests};
use dse_hopf::{AlgebraElement, Forest, Mode, TensorElement, Tree};
use num_traits::Zero;
use proptest::prelude::*;

type Triple = BTreeMap<(Forest, Forest, Forest), Rational>;

fn push(out: &mut Triple, key: (Forest, Forest, Forest), c: Rational) {
    let e = out.entry(key.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        out.remove(&key);
    }
}

fn delta_left(x: &TensorElement, mode: Mode) -> Triple {
    let mut out = Triple::new();
    for ((l, r), c) in x.terms() {
        for ((a, b), d) in coproduct_forest(l, mode).terms() {
            push(&mut out, (a.clone(), b.clone(), r.clone()), c * d);
        }
    }
    out
}

fn delta_right(x: &TensorElement, mode: Mode) -> Triple {
    let mut out = Triple::new();
    for ((l, r), c) in x.terms() {
        for ((a, b), d) in coproduct_forest(r, mode).terms() {
            push(&mut out, (l.clone(), a.clone(), b.clone()), c * d);
        }
    }
    out
}

#[test]
fn coassociative_on_all_trees_to_weight_five() {
    for mode in [Mode::Commutative, Mode::Planar] {
        for n in 1..=5 {
            for t in enumerate(n, mode) {
                let d = coproduct_forest(&Forest::single(t.clone()), mode);
                assert_eq!(delta_left(&d, mode), delta_right(&d, mode), "{} {t}", mode.name());
            }
        }
    }
}

#[test]
fn counit_axioms_on_forests() {
    for mode in [Mode::Commutative, Mode::Planar] {
        for f in enumerate_forests(4, mode) {
            let d = coproduct_forest(&f, mode);
            let x = AlgebraElement::from_forest(f.clone(), mode);
            let left = d.contract_left(|g| counit(&AlgebraElement::from_forest(g.clone(), mode)));
            let right = d.contract_right(|g| counit(&AlgebraElement::from_forest(g.clone(), mode)));
            assert_eq!(left, x);
            assert_eq!(right, x);
        }
    }
}

#[test]
fn z_is_an_infinitesimal_character() {
    // Z(xy) = Z(x)ε(y) + ε(x)Z(y) on products of forests
    for mode in [Mode::Commutative, Mode::Planar] {
        let forests: Vec<Forest> = (0..=3).flat_map(|n| enumerate_forests(n, mode)).collect();
        for f in &forests {
            for g in &forests {
                let x = AlgebraElement::from_forest(f.clone(), mode);
                let y = AlgebraElement::from_forest(g.clone(), mode);
                let lhs = z_functional(&(&x * &y));
                let rhs = z_functional(&x) * counit(&y) + counit(&x) * z_functional(&y);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn b_plus_is_a_one_cocycle() {
    // Δ∘B⁺ = B⁺ ⊗ 1 + (Id ⊗ B⁺)∘Δ
    for mode in [Mode::Commutative, Mode::Planar] {
        for f in enumerate_forests(4, mode) {
            let t = f.b_plus();
            let lhs = coproduct_forest(&Forest::single(t.clone()), mode);
            let rhs = &TensorElement::pure(
                &AlgebraElement::from_tree(t, mode),
                &AlgebraElement::one(mode),
            ) + &coproduct_forest(&f, mode).map_right(|g| AlgebraElement::from_forest(g.clone(), mode).b_plus());
            assert_eq!(lhs, rhs, "{f}");
        }
    }
}

#[test]
fn abelianization_commutes_with_coproduct() {
    for n in 1..=5 {
        for t in enumerate(n, Mode::Planar) {
            let planar = coproduct_forest(&Forest::single(t.clone()), Mode::Planar).abelianize();
            let comm = coproduct_forest(&Forest::single(t.canonicalize(Mode::Commutative)), Mode::Commutative);
            assert_eq!(planar, comm, "{t}");
        }
    }
}

fn tree_strategy() -> impl Strategy<Value = Tree> {
    let leaf = Just(Tree::dot());
    leaf.prop_recursive(4, 12, 3, |inner| {
        prop::collection::vec(inner, 0..3).prop_map(|children| Tree::node(None, children))
    })
}

fn forest_strategy() -> impl Strategy<Value = Vec<Tree>> {
    prop::collection::vec(tree_strategy(), 0..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coproduct_is_multiplicative(a in forest_strategy(), b in forest_strategy(), planar in any::<bool>()) {
        let mode = if planar { Mode::Planar } else { Mode::Commutative };
        let fa = Forest::new(a, mode);
        let fb = Forest::new(b, mode);
        let whole = coproduct_forest(&fa.concat(&fb, mode), mode);
        let parts = coproduct_forest(&fa, mode).product_truncated(&coproduct_forest(&fb, mode), u32::MAX);
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn coproduct_preserves_weight(t in tree_strategy(), planar in any::<bool>()) {
        let mode = if planar { Mode::Planar } else { Mode::Commutative };
        let t = t.canonicalize(mode);
        let w = t.weight();
        let d = coproduct(&AlgebraElement::from_tree(t, mode), w);
        for ((l, r), _) in d.terms() {
            prop_assert_eq!(l.weight() + r.weight(), w);
            prop_assert_eq!(r.len(), usize::from(r.weight() > 0));
        }
    }

    #[test]
    fn canonical_form_is_idempotent(t in tree_strategy()) {
        let c = t.canonicalize(Mode::Commutative);
        prop_assert!(c.is_canonical(Mode::Commutative));
        prop_assert_eq!(c.canonicalize(Mode::Commutative), c.clone());
        prop_assert_eq!(Tree::parse(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn scaling_is_linear(t in tree_strategy(), k in -5i64..5) {
        let x = AlgebraElement::from_tree(t.canonicalize(Mode::Planar), Mode::Planar);
        let w = x.max_weight().unwrap();
        let lhs = coproduct(&x.scale(&int(k)), w);
        prop_assert_eq!(lhs, coproduct(&x, w).scale(&int(k)));
    }
}
