use dse_hopf::dse::solve;
use dse_hopf::error::Error;
use dse_hopf::fdbmulti::{
    all_words, d1_family_matches, d1_reduction, generic_reconstruct, is_admissible, specialized_aaa,
    two_vertex, verify_multi_coproduct, words_of, y_element, Word,
};
use dse_hopf::rational::int;
use dse_hopf::{AlgebraElement, Mode, Tree, TruncatedSeries};
use num_traits::One;

#[test]
fn four_letter_generic_word_has_five_shapes() {
    // Y^i_{1234} is a sum over (α, β) of five decorated shapes, each with coefficient 1
    for i in 1..=4 {
        let y = y_element(i, &Word::parse("1234", 4).unwrap(), 4).unwrap();
        assert_eq!(y.len(), 5 * 16);
        assert!(y.terms().all(|(_, c)| c.is_one()));
        let shapes: std::collections::BTreeSet<Tree> =
            y.terms().map(|(f, _)| f.trees()[0].strip_labels()).collect();
        // four of the five are ladders once decorations are forgotten
        assert_eq!(shapes.len(), 2);
    }
}

#[test]
fn every_generic_tree_is_admissible_and_reads_back() {
    let w = Word::parse("2413", 4).unwrap();
    let y = y_element(3, &w, 4).unwrap();
    for (f, _) in y.terms() {
        let t = &f.trees()[0];
        assert!(is_admissible(t));
        assert!(words_of(t).unwrap().contains(&w));
    }
    assert_eq!(generic_reconstruct(3, &w, 4).unwrap(), y);
}

#[test]
fn coproduct_law_for_three_variables() {
    for w in all_words(3, 3) {
        for i in 1..=3 {
            assert!(verify_multi_coproduct(i, &w, 3).unwrap(), "Y^{i}_{w}");
        }
    }
}

#[test]
fn one_variable_matches_the_quadratic_equation() {
    assert!(d1_reduction(6).unwrap());
    assert!(d1_family_matches(10));
    // Y₂ = 2 B⁺(B⁺(•)) because p₁ = 2
    let p = TruncatedSeries::polynomial(vec![int(1), int(2), int(1)]);
    let a2 = solve(&p, 2, Mode::Planar).unwrap().a(2).clone();
    let y2 = y_element(1, &Word::parse("111", 1).unwrap(), 1).unwrap().map_trees(Tree::strip_labels);
    assert_eq!(y2, a2);
    assert_eq!(a2.coefficient_of_tree(&Tree::parse("[[]]").unwrap()), int(2));
}

#[test]
fn aaa_specializes_the_generic_formula() {
    let y = y_element(2, &Word::parse("111", 3).unwrap(), 3).unwrap();
    assert_eq!(y, specialized_aaa(2, 1, 3));
    assert_eq!(y.coefficient_of_tree(&two_vertex((2, 1, 1), (1, 1, 1))), int(2));
}

#[test]
fn invalid_inputs() {
    assert_eq!(
        y_element(3, &Word::parse("12", 2).unwrap(), 2).unwrap_err(),
        Error::LetterOutOfRange { letter: 3, d: 2 }
    );
    assert!(matches!(Word::parse("1a", 2), Err(Error::InvalidParameter { .. })));
    assert_eq!(words_of(&Tree::parse("[[]]").unwrap()).unwrap_err(), Error::NotAdmissible);
    assert!(generic_reconstruct(1, &Word::parse("121", 2).unwrap(), 2).is_err());
    assert_eq!(y_element(1, &Word::parse("2", 2).unwrap(), 2).unwrap(), AlgebraElement::zero(Mode::Planar));
}
