//! Decorated planar trees for the multivariable Faà di Bruno algebra.
//!
//! A vertex decorated `i,(u₁,u₂)` carries a variable index `i` and a pair of
//! letters. The elements `Y^i_w` are indexed by a variable and a nonempty word
//! over `{1, …, D}`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::algebra::{coproduct, AlgebraElement, TensorElement};
use crate::dse::solve;
use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational};
use crate::series::{solve_family, TruncatedSeries};
use crate::trees::{Decoration, Mode, Tree};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>, d: u8) -> Result<Word> {
        if letters.is_empty() {
            return Err(Error::InvalidParameter { name: "word", reason: "empty word".into() });
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > d) {
            return Err(Error::LetterOutOfRange { letter, d });
        }
        Ok(Word(letters))
    }

    /// Digits `1`–`9`, one letter each.
    pub fn parse(s: &str, d: u8) -> Result<Word> {
        let letters = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|x| x as u8)
                    .ok_or_else(|| Error::InvalidParameter { name: "word", reason: format!("bad letter {c:?}") })
            })
            .collect::<Result<Vec<u8>>>()?;
        Word::new(letters, d)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_generic(&self) -> bool {
        let set: BTreeSet<u8> = self.0.iter().copied().collect();
        set.len() == self.0.len()
    }

    fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// All words of length `n` over `{1, …, d}`, lexicographic.
pub fn all_words(n: usize, d: u8) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                (1..=d).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Word).collect()
}

type YKey = (u8, Vec<u8>, u8);

fn y_cache() -> &'static RwLock<HashMap<YKey, AlgebraElement>> {
    static CACHE: OnceLock<RwLock<HashMap<YKey, AlgebraElement>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_variable(i: u8, d: u8) -> Result<()> {
    if i == 0 || i > d {
        return Err(Error::LetterOutOfRange { letter: i, d });
    }
    Ok(())
}

/// `Y^i_w`: `δ_{i,w}` for a single letter, otherwise
/// `Σ_{α,β} Σ_{w₁w₂=w} B⁺_{i,(α,β)}(Y^α_{w₁} Y^β_{w₂})`.
pub fn y_element(i: u8, w: &Word, d: u8) -> Result<AlgebraElement> {
    check_variable(i, d)?;
    Word::new(w.0.clone(), d)?;
    Ok(y_unchecked(i, &w.0, d))
}

fn y_unchecked(i: u8, w: &[u8], d: u8) -> AlgebraElement {
    let key = (i, w.to_vec(), d);
    if let Some(hit) = y_cache().read().expect("cache lock").get(&key) {
        return hit.clone();
    }
    let value = if w.len() == 1 {
        if w[0] == i {
            AlgebraElement::one(Mode::Planar)
        } else {
            AlgebraElement::zero(Mode::Planar)
        }
    } else {
        let mut sum = AlgebraElement::zero(Mode::Planar);
        for split in 1..w.len() {
            let (w1, w2) = w.split_at(split);
            for a in 1..=d {
                let left = y_unchecked(a, w1, d);
                if left.is_zero() {
                    continue;
                }
                for b in 1..=d {
                    let right = y_unchecked(b, w2, d);
                    if right.is_zero() {
                        continue;
                    }
                    let label = Some(Decoration::new(i, a, b));
                    sum = &sum + &(&left * &right).b_plus_labeled(label);
                }
            }
        }
        sum
    };
    y_cache().write().expect("cache lock").insert(key, value.clone());
    value
}

/// Ordered splittings of `w` into `k` nonempty factors.
fn compositions(w: &[u8], k: usize) -> Vec<Vec<&[u8]>> {
    if k == 1 {
        return vec![vec![w]];
    }
    let mut out = Vec::new();
    for split in 1..w.len() {
        let (head, tail) = w.split_at(split);
        if tail.len() < k - 1 {
            break;
        }
        for mut rest in compositions(tail, k - 1) {
            rest.insert(0, head);
            out.push(rest);
        }
    }
    out
}

/// Right-hand side `Σ_k Σ_{α₁…α_k} Σ_{w₁…w_k=w} Y^{α₁}_{w₁}…Y^{α_k}_{w_k} ⊗ Y^i_{α₁…α_k}`.
pub fn multi_coproduct_rhs(i: u8, w: &Word, d: u8) -> Result<TensorElement> {
    check_variable(i, d)?;
    Word::new(w.0.clone(), d)?;
    let mut out = TensorElement::zero(Mode::Planar);
    for k in 1..=w.len() {
        for alphas in all_words(k, d) {
            let right = y_unchecked(i, &alphas.0, d);
            if right.is_zero() {
                continue;
            }
            for parts in compositions(&w.0, k) {
                let mut left = AlgebraElement::one(Mode::Planar);
                for (part, &alpha) in parts.iter().zip(&alphas.0) {
                    left = &left * &y_unchecked(alpha, part, d);
                    if left.is_zero() {
                        break;
                    }
                }
                if !left.is_zero() {
                    out = &out + &TensorElement::pure(&left, &right);
                }
            }
        }
    }
    Ok(out)
}

/// Compares `Δ(Y^i_w)` with the composition law.
pub fn verify_multi_coproduct(i: u8, w: &Word, d: u8) -> Result<bool> {
    let y = y_element(i, w, d)?;
    let lhs = coproduct(&y, w.len() as u32);
    Ok(lhs == multi_coproduct_rhs(i, w, d)?)
}

/// Fertility at most two; a single child is decorated by one of the parent's
/// letters; two children are decorated by the first and second letter.
pub fn is_admissible(t: &Tree) -> bool {
    let Some(dec) = t.label() else { return false };
    let children = t.children();
    let shape_ok = match children {
        [] => true,
        [c] => c.label().is_some_and(|cd| cd.i == dec.u1 || cd.i == dec.u2),
        [c1, c2] => {
            c1.label().is_some_and(|cd| cd.i == dec.u1) && c2.label().is_some_and(|cd| cd.i == dec.u2)
        }
        _ => false,
    };
    shape_ok && children.iter().all(is_admissible)
}

/// Every word the inductive rules can produce; both rules apply when a
/// single child matches both letters.
pub fn words_of(t: &Tree) -> Result<BTreeSet<Word>> {
    if !is_admissible(t) {
        return Err(Error::NotAdmissible);
    }
    Ok(words_unchecked(t))
}

fn words_unchecked(t: &Tree) -> BTreeSet<Word> {
    let dec = t.label().expect("admissible trees are decorated");
    let mut out = BTreeSet::new();
    match t.children() {
        [] => {
            out.insert(Word(vec![dec.u1, dec.u2]));
        }
        [c] => {
            let ci = c.label().expect("decorated").i;
            for w in words_unchecked(c) {
                if ci == dec.u1 {
                    out.insert(w.concat(&Word(vec![dec.u2])));
                }
                if ci == dec.u2 {
                    out.insert(Word(vec![dec.u1]).concat(&w));
                }
            }
        }
        [c1, c2] => {
            let right = words_unchecked(c2);
            for w1 in words_unchecked(c1) {
                for w2 in &right {
                    out.insert(w1.concat(w2));
                }
            }
        }
        _ => unreachable!("admissible trees have fertility at most two"),
    }
    out
}

/// Admissible trees of weight `n` whose root variable is `i`.
pub fn admissible_trees(i: u8, n: u32, d: u8) -> Vec<Tree> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for a in 1..=d {
        for b in 1..=d {
            let label = Some(Decoration::new(i, a, b));
            if n == 1 {
                out.push(Tree::leaf(label));
                continue;
            }
            let mut single: BTreeSet<Tree> = BTreeSet::new();
            for c in [a, b] {
                for child in admissible_trees(c, n - 1, d) {
                    single.insert(Tree::node(label, vec![child]));
                }
            }
            out.extend(single);
            for n1 in 1..n - 1 {
                let rights = admissible_trees(b, n - 1 - n1, d);
                for left in admissible_trees(a, n1, d) {
                    for right in &rights {
                        out.push(Tree::node(label, vec![left.clone(), right.clone()]));
                    }
                }
            }
        }
    }
    out
}

/// Sum of the admissible trees `t` with root variable `i` and `w ∈ w(t)`.
pub fn generic_reconstruct(i: u8, w: &Word, d: u8) -> Result<AlgebraElement> {
    check_variable(i, d)?;
    Word::new(w.0.clone(), d)?;
    if !w.is_generic() {
        return Err(Error::NotGeneric(w.0.clone()));
    }
    let mut out = AlgebraElement::zero(Mode::Planar);
    if w.len() == 1 {
        if w.0[0] == i {
            out = AlgebraElement::one(Mode::Planar);
        }
        return Ok(out);
    }
    for t in admissible_trees(i, w.len() as u32 - 1, d) {
        if is_admissible(&t) && words_unchecked(&t).contains(w) {
            out = &out + &AlgebraElement::from_tree(t, Mode::Planar);
        }
    }
    Ok(out)
}

/// Two-vertex tree with root `i,(u₁,u₂)` over a leaf `j,(v₁,v₂)`.
pub fn two_vertex(root: (u8, u8, u8), leaf: (u8, u8, u8)) -> Tree {
    let child = Tree::leaf(Some(Decoration::new(leaf.0, leaf.1, leaf.2)));
    Tree::node(Some(Decoration::new(root.0, root.1, root.2)), vec![child])
}

/// `Σ_α t(i,(α,a); α,(a,a)) + Σ_α t(i,(a,α); α,(a,a))`, the generic `Y^i_{abc}`
/// formula with all three letters identified to `a`.
pub fn specialized_aaa(i: u8, a: u8, d: u8) -> AlgebraElement {
    let mut out = AlgebraElement::zero(Mode::Planar);
    for alpha in 1..=d {
        let t1 = two_vertex((i, alpha, a), (alpha, a, a));
        let t2 = two_vertex((i, a, alpha), (alpha, a, a));
        out = &out + &AlgebraElement::from_tree(t1, Mode::Planar);
        out = &out + &AlgebraElement::from_tree(t2, Mode::Planar);
    }
    out
}

/// With one variable, `Y_n = Y^1_{1^{n+1}}` with decorations forgotten equals
/// `a_n` for `P = (1 + h)²`, for every `n ≤ N`.
pub fn d1_reduction(n: u32) -> Result<bool> {
    if n < 1 {
        return Err(Error::InvalidParameter { name: "N", reason: "must be at least 1".into() });
    }
    let p = TruncatedSeries::polynomial(vec![int(1), int(2), int(1)]);
    let sol = solve(&p, n, Mode::Planar)?;
    for k in 1..=n {
        let w = Word(vec![1; k as usize + 1]);
        let y = y_unchecked(1, &w.0, 1).map_trees(Tree::strip_labels);
        if &y != sol.a(k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The family parameters solved by `(1 + h)²`: `(α, β) = (2, -1/2)`.
pub fn d1_family_parameters() -> (Rational, Rational) {
    (int(2), frac(-1, 2))
}

/// Whether `solve_family(2, -1/2)` is the polynomial `1 + 2h + h²` through order `n`.
pub fn d1_family_matches(n: usize) -> bool {
    let (alpha, beta) = d1_family_parameters();
    let target = TruncatedSeries::polynomial(vec![Rational::one(), int(2), Rational::one()]);
    let family = solve_family(&alpha, &beta, n);
    family.agrees_to(&target, n) && (3..=n).all(|k| family.coeff(k).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, d: u8) -> Word {
        Word::parse(s, d).unwrap()
    }

    fn leaf(i: u8, a: u8, b: u8) -> Tree {
        Tree::leaf(Some(Decoration::new(i, a, b)))
    }

    #[test]
    fn words_validate() {
        assert!(Word::parse("", 2).is_err());
        assert_eq!(Word::parse("13", 2).unwrap_err(), Error::LetterOutOfRange { letter: 3, d: 2 });
        assert!(w("12", 2).is_generic());
        assert!(!w("121", 2).is_generic());
        assert_eq!(all_words(3, 2).len(), 8);
    }

    #[test]
    fn low_y_elements() {
        assert_eq!(y_element(1, &w("1", 2), 2).unwrap(), AlgebraElement::one(Mode::Planar));
        assert!(y_element(2, &w("1", 2), 2).unwrap().is_zero());
        let y = y_element(2, &w("12", 2), 2).unwrap();
        assert_eq!(y, AlgebraElement::from_tree(leaf(2, 1, 2), Mode::Planar));
        let y3 = y_element(1, &w("123", 3), 3).unwrap();
        assert_eq!(y3.homogeneous_weight(), Some(2));
        assert_eq!(y3.len(), 6);
    }

    #[test]
    fn coproduct_law_small() {
        for word in ["12", "121", "2211"] {
            for i in 1..=2 {
                assert!(verify_multi_coproduct(i, &w(word, 2), 2).unwrap(), "{i} {word}");
            }
        }
        assert!(verify_multi_coproduct(1, &w("1111", 1), 1).unwrap());
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(&leaf(1, 2, 3)));
        assert!(is_admissible(&two_vertex((1, 2, 3), (2, 4, 4))));
        assert!(!is_admissible(&two_vertex((1, 2, 3), (4, 4, 4))));
        assert!(!is_admissible(&Tree::dot()));
        let three = Tree::node(Some(Decoration::new(1, 1, 1)), vec![leaf(1, 1, 1), leaf(1, 1, 1), leaf(1, 1, 1)]);
        assert!(!is_admissible(&three));
    }

    #[test]
    fn words_of_examples() {
        let set = |v: &[&str]| v.iter().map(|s| w(s, 6)).collect::<BTreeSet<_>>();
        assert_eq!(words_of(&leaf(1, 2, 3)).unwrap(), set(&["23"]));
        assert_eq!(words_of(&two_vertex((1, 1, 1), (1, 3, 4))).unwrap(), set(&["341", "134"]));
        let fork = Tree::node(Some(Decoration::new(1, 1, 2)), vec![leaf(1, 3, 4), leaf(2, 5, 6)]);
        assert_eq!(words_of(&fork).unwrap(), set(&["3456"]));
        assert_eq!(words_of(&Tree::dot()).unwrap_err(), Error::NotAdmissible);
    }

    #[test]
    fn generic_matches_recursion() {
        for word in ["12", "123", "1234", "4213"] {
            let word = w(word, 4);
            for i in 1..=4 {
                assert_eq!(generic_reconstruct(i, &word, 4).unwrap(), y_element(i, &word, 4).unwrap());
            }
        }
        assert_eq!(generic_reconstruct(1, &w("11", 2), 2).unwrap_err(), Error::NotGeneric(vec![1, 1]));
    }

    #[test]
    fn aaa_specialization() {
        for d in 1..=3 {
            for i in 1..=d {
                for a in 1..=d {
                    let y = y_element(i, &Word(vec![a; 3]), d).unwrap();
                    assert_eq!(y, specialized_aaa(i, a, d));
                    assert_eq!(y.coefficient_of_tree(&two_vertex((i, a, a), (a, a, a))), int(2));
                }
            }
        }
    }

    #[test]
    fn one_variable() {
        assert!(d1_reduction(5).unwrap());
        assert!(d1_family_matches(8));
    }
}
