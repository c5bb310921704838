//! The free (non)commutative algebra on rooted trees and its coproduct.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::TruncatedSeries;
use crate::trees::{Forest, Label, Mode, Tree};

/// A finite linear combination of forests. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    mode: Mode,
    terms: BTreeMap<Forest, Rational>,
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl AlgebraElement {
    pub fn zero(mode: Mode) -> Self {
        AlgebraElement { mode, terms: BTreeMap::new() }
    }

    pub fn one(mode: Mode) -> Self {
        Self::from_forest(Forest::unit(), mode)
    }

    pub fn from_forest(f: Forest, mode: Mode) -> Self {
        let mut x = Self::zero(mode);
        x.add_term(f, Rational::one());
        x
    }

    pub fn from_tree(t: Tree, mode: Mode) -> Self {
        Self::from_forest(Forest::single(t), mode)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Forest, Rational)>, mode: Mode) -> Self {
        let mut x = Self::zero(mode);
        for (f, c) in terms {
            x.add_term(f, c);
        }
        x
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Adds `coeff · f`, canonicalizing `f` for the element's mode.
    pub fn add_term(&mut self, f: Forest, coeff: Rational) {
        let f = f.canonicalize(self.mode);
        accumulate(&mut self.terms, f, coeff);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Forest, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, f: &Forest) -> Rational {
        self.terms.get(&f.canonicalize(self.mode)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficient_of_tree(&self, t: &Tree) -> Rational {
        self.coefficient(&Forest::single(t.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.mode);
        }
        AlgebraElement {
            mode: self.mode,
            terms: self.terms.iter().map(|(f, x)| (f.clone(), x * c)).collect(),
        }
    }

    /// Least weight carrying a nonzero coefficient; `None` for zero.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().map(Forest::weight).min()
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(Forest::weight).max()
    }

    /// The common weight of all terms, if the element is homogeneous and nonzero.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let v = self.valuation()?;
        (self.max_weight() == Some(v)).then_some(v)
    }

    pub fn graded_component(&self, n: u32) -> Self {
        self.filter(|f| f.weight() == n)
    }

    pub fn truncate(&self, n: u32) -> Self {
        self.filter(|f| f.weight() <= n)
    }

    fn filter(&self, keep: impl Fn(&Forest) -> bool) -> Self {
        AlgebraElement {
            mode: self.mode,
            terms: self
                .terms
                .iter()
                .filter(|(f, _)| keep(f))
                .map(|(f, c)| (f.clone(), c.clone()))
                .collect(),
        }
    }

    /// True if every term is a single tree.
    pub fn is_tree_combination(&self) -> bool {
        self.terms.keys().all(|f| f.len() == 1)
    }

    /// Mode-checked product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch("product of planar and commutative elements"));
        }
        Ok(self.product_truncated(other, u32::MAX))
    }

    /// Product keeping only forests of weight at most `cap`.
    pub fn product_truncated(&self, other: &Self, cap: u32) -> Self {
        assert_eq!(self.mode, other.mode, "mode mismatch in product");
        let mut out = Self::zero(self.mode);
        for (f, a) in &self.terms {
            let wf = f.weight();
            for (g, b) in &other.terms {
                if wf + g.weight() > cap {
                    continue;
                }
                accumulate(&mut out.terms, f.concat(g, self.mode), a * b);
            }
        }
        out
    }

    pub fn pow_truncated(&self, k: u32, cap: u32) -> Self {
        (0..k).fold(Self::one(self.mode).truncate(cap), |acc, _| acc.product_truncated(self, cap))
    }

    /// Linear extension of grafting on a root labelled `label`.
    pub fn b_plus_labeled(&self, label: Label) -> Self {
        let mut out = Self::zero(self.mode);
        for (f, c) in &self.terms {
            out.add_term(Forest::single(f.b_plus_labeled(label)), c.clone());
        }
        out
    }

    pub fn b_plus(&self) -> Self {
        self.b_plus_labeled(None)
    }

    /// Linear extension of root deletion; fails if a term is not a single tree.
    pub fn b_minus(&self) -> Result<Self> {
        let mut out = Self::zero(self.mode);
        for (f, c) in &self.terms {
            out.add_term(f.b_minus()?, c.clone());
        }
        Ok(out)
    }

    /// Forgets the planar structure.
    pub fn abelianize(&self) -> Self {
        let mut out = Self::zero(Mode::Commutative);
        for (f, c) in &self.terms {
            out.add_term(f.clone(), c.clone());
        }
        out
    }

    /// Applies `f` to every tree of every forest (e.g. to strip decorations).
    pub fn map_trees(&self, f: impl Fn(&Tree) -> Tree) -> Self {
        let mut out = Self::zero(self.mode);
        for (forest, c) in &self.terms {
            let trees = forest.trees().iter().map(&f).collect();
            out.add_term(Forest::new(trees, self.mode), c.clone());
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (forest, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{forest}")?;
        }
        Ok(())
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.mode, rhs.mode, "mode mismatch in sum");
        let mut out = self.clone();
        for (f, c) in &rhs.terms {
            accumulate(&mut out.terms, f.clone(), c.clone());
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;

    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.product_truncated(rhs, u32::MAX)
    }
}

/// A finite linear combination of pairs of forests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    mode: Mode,
    terms: BTreeMap<(Forest, Forest), Rational>,
}

impl TensorElement {
    pub fn zero(mode: Mode) -> Self {
        TensorElement { mode, terms: BTreeMap::new() }
    }

    pub fn one(mode: Mode) -> Self {
        let mut t = Self::zero(mode);
        t.add_term(Forest::unit(), Forest::unit(), Rational::one());
        t
    }

    /// `a ⊗ b`.
    pub fn pure(a: &AlgebraElement, b: &AlgebraElement) -> Self {
        assert_eq!(a.mode, b.mode, "mode mismatch in tensor");
        let mut t = Self::zero(a.mode);
        for (f, x) in &a.terms {
            for (g, y) in &b.terms {
                accumulate(&mut t.terms, (f.clone(), g.clone()), x * y);
            }
        }
        t
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn add_term(&mut self, left: Forest, right: Forest, coeff: Rational) {
        let key = (left.canonicalize(self.mode), right.canonicalize(self.mode));
        accumulate(&mut self.terms, key, coeff);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Forest, Forest), &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, left: &Forest, right: &Forest) -> Rational {
        let key = (left.canonicalize(self.mode), right.canonicalize(self.mode));
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.mode);
        for (k, x) in &self.terms {
            accumulate(&mut out.terms, k.clone(), x * c);
        }
        out
    }

    /// Keeps terms of total weight at most `n`.
    pub fn truncate(&self, n: u32) -> Self {
        self.filter(|l, r| l.weight() + r.weight() <= n)
    }

    /// The `(i, j)` bihomogeneous component.
    pub fn bicomponent(&self, i: u32, j: u32) -> Self {
        self.filter(|l, r| l.weight() == i && r.weight() == j)
    }

    fn filter(&self, keep: impl Fn(&Forest, &Forest) -> bool) -> Self {
        TensorElement {
            mode: self.mode,
            terms: self
                .terms
                .iter()
                .filter(|((l, r), _)| keep(l, r))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`, keeping total weight at most `cap`.
    pub fn product_truncated(&self, other: &Self, cap: u32) -> Self {
        assert_eq!(self.mode, other.mode, "mode mismatch in tensor product");
        let mut out = Self::zero(self.mode);
        for ((a, b), x) in &self.terms {
            let w = a.weight() + b.weight();
            for ((c, d), y) in &other.terms {
                if w + c.weight() + d.weight() > cap {
                    continue;
                }
                accumulate(
                    &mut out.terms,
                    (a.concat(c, self.mode), b.concat(d, self.mode)),
                    x * y,
                );
            }
        }
        out
    }

    /// `(Id ⊗ f)` for a linear map given on forests.
    pub fn map_right(&self, f: impl Fn(&Forest) -> AlgebraElement) -> Self {
        let mut out = Self::zero(self.mode);
        for ((l, r), c) in &self.terms {
            for (g, y) in f(r).terms() {
                out.add_term(l.clone(), g.clone(), c * y);
            }
        }
        out
    }

    /// `(f ⊗ Id)` for a linear map given on forests.
    pub fn map_left(&self, f: impl Fn(&Forest) -> AlgebraElement) -> Self {
        let mut out = Self::zero(self.mode);
        for ((l, r), c) in &self.terms {
            for (g, y) in f(l).terms() {
                out.add_term(g.clone(), r.clone(), c * y);
            }
        }
        out
    }

    /// `(φ ⊗ Id)` for a linear form `φ`.
    pub fn contract_left(&self, phi: impl Fn(&Forest) -> Rational) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.mode);
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), c * phi(l));
        }
        out
    }

    /// `(Id ⊗ φ)` for a linear form `φ`.
    pub fn contract_right(&self, phi: impl Fn(&Forest) -> Rational) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.mode);
        for ((l, r), c) in &self.terms {
            out.add_term(l.clone(), c * phi(r));
        }
        out
    }

    pub fn abelianize(&self) -> Self {
        let mut out = Self::zero(Mode::Commutative);
        for ((l, r), c) in &self.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((l, r), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{l}⊗{r}")?;
        }
        Ok(())
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;

    fn add(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.mode, rhs.mode, "mode mismatch in tensor sum");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            accumulate(&mut out.terms, k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;

    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self + &rhs.scale(&-Rational::one())
    }
}

type CoproductCache = RwLock<HashMap<(Mode, Tree), TensorElement>>;

fn cache() -> &'static CoproductCache {
    static CACHE: OnceLock<CoproductCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coproduct of a single tree via `Δ(B⁺(F)) = B⁺(F) ⊗ 1 + (Id ⊗ B⁺)Δ(F)`.
/// The tree must already be canonical for `mode`.
pub fn coproduct_tree(t: &Tree, mode: Mode) -> TensorElement {
    let key = (mode, t.clone());
    if let Some(hit) = cache().read().expect("coproduct cache poisoned").get(&key) {
        return hit.clone();
    }
    let inner = coproduct_forest(&t.b_minus(), mode);
    let mut out = TensorElement::zero(mode);
    out.add_term(Forest::single(t.clone()), Forest::unit(), Rational::one());
    for ((l, r), c) in &inner.terms {
        out.add_term(l.clone(), Forest::single(r.b_plus_labeled(t.label())), c.clone());
    }
    cache().write().expect("coproduct cache poisoned").insert(key, out.clone());
    out
}

/// Coproduct of a forest, multiplicatively.
pub fn coproduct_forest(f: &Forest, mode: Mode) -> TensorElement {
    f.trees().iter().fold(TensorElement::one(mode), |acc, t| {
        acc.product_truncated(&coproduct_tree(t, mode), u32::MAX)
    })
}

/// `Δ(x)` restricted to total weight at most `cap`.
pub fn coproduct(x: &AlgebraElement, cap: u32) -> TensorElement {
    let mut out = TensorElement::zero(x.mode);
    for (f, c) in &x.terms {
        if f.weight() > cap {
            continue;
        }
        for (k, y) in &coproduct_forest(f, x.mode).terms {
            accumulate(&mut out.terms, k.clone(), c * y);
        }
    }
    out
}

/// Coproduct of a tree by explicit enumeration of admissible cuts.
pub fn coproduct_by_cuts(t: &Tree, mode: Mode) -> TensorElement {
    // Preorder flattening: parent index and depth-first order per vertex.
    struct Vertex<'a> {
        tree: &'a Tree,
        parent: Option<usize>,
    }
    fn flatten<'a>(t: &'a Tree, parent: Option<usize>, out: &mut Vec<Vertex<'a>>) {
        let me = out.len();
        out.push(Vertex { tree: t, parent });
        for c in t.children() {
            flatten(c, Some(me), out);
        }
    }
    fn rebuild(t: &Tree, index: &mut usize, cut: &[bool]) -> Tree {
        let mut children = Vec::new();
        for c in t.children() {
            *index += 1;
            if cut[*index] {
                *index += c.weight() as usize - 1;
            } else {
                children.push(rebuild(c, index, cut));
            }
        }
        Tree::node(t.label(), children)
    }

    let mut vertices = Vec::new();
    flatten(t, None, &mut vertices);
    let n = vertices.len();
    let mut out = TensorElement::zero(mode);
    out.add_term(Forest::single(t.clone()), Forest::unit(), Rational::one());
    out.add_term(Forest::unit(), Forest::single(t.clone()), Rational::one());
    // Bit v-1 set means the edge above vertex v is cut.
    for mask in 1u64..(1u64 << (n - 1)) {
        let cut: Vec<bool> = (0..n).map(|v| v > 0 && mask & (1 << (v - 1)) != 0).collect();
        let admissible = (1..n).filter(|&v| cut[v]).all(|v| {
            let mut p = vertices[v].parent;
            while let Some(u) = p {
                if cut[u] {
                    return false;
                }
                p = vertices[u].parent;
            }
            true
        });
        if !admissible {
            continue;
        }
        let pruned: Vec<Tree> =
            (1..n).filter(|&v| cut[v]).map(|v| vertices[v].tree.clone()).collect();
        let mut index = 0;
        let trunk = rebuild(t, &mut index, &cut);
        out.add_term(Forest::new(pruned, mode), Forest::single(trunk), Rational::one());
    }
    out
}

/// Coefficient of the empty forest.
pub fn counit(x: &AlgebraElement) -> Rational {
    x.coefficient(&Forest::unit())
}

/// Coefficient of the single-vertex forest.
pub fn z_functional(x: &AlgebraElement) -> Rational {
    x.coefficient(&Forest::single(Tree::dot()))
}

/// `Σ p_k x^k` restricted to weight at most `cap`.
pub fn substitute_series(p: &TruncatedSeries, x: &AlgebraElement, cap: u32) -> Result<AlgebraElement> {
    let mode = x.mode;
    let x = x.truncate(cap);
    let max_k = match x.valuation() {
        None => 0,
        Some(0) => {
            if !p.is_exact() {
                return Err(Error::ZeroValuation);
            }
            p.coeffs().len().saturating_sub(1) as u32
        }
        Some(v) => cap / v,
    };
    let max_k = if p.is_exact() { max_k.min(p.coeffs().len().saturating_sub(1) as u32) } else { max_k };
    if !p.is_exact() && (p.order() as u32) < max_k {
        return Err(Error::SeriesTooShort { have: p.order(), need: max_k as usize });
    }
    let mut out = AlgebraElement::zero(mode);
    let mut power = AlgebraElement::one(mode).truncate(cap);
    for k in 0..=max_k {
        if k > 0 {
            power = power.product_truncated(&x, cap);
        }
        let c = p.coeff(k as usize);
        if !c.is_zero() {
            out = &out + &power.scale(&c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::trees::enumerate;

    fn t(s: &str) -> Tree {
        Tree::parse(s).unwrap()
    }

    fn f(s: &str) -> Forest {
        Forest::parse(s).unwrap()
    }

    fn tensor(mode: Mode, terms: &[(&str, &str, i64)]) -> TensorElement {
        let mut out = TensorElement::zero(mode);
        for (l, r, c) in terms {
            let l = if *l == "1" { Forest::unit() } else { f(l) };
            let r = if *r == "1" { Forest::unit() } else { f(r) };
            out.add_term(l, r, int(*c));
        }
        out
    }

    #[test]
    fn products() {
        let dot = AlgebraElement::from_tree(Tree::dot(), Mode::Planar);
        assert_eq!(&dot * &dot, AlgebraElement::from_forest(f("[][]"), Mode::Planar));
        let two_dot = dot.scale(&int(2));
        let three_l2 = AlgebraElement::from_tree(t("[[]]"), Mode::Planar).scale(&int(3));
        assert_eq!(&two_dot * &three_l2, AlgebraElement::from_forest(f("[][[]]"), Mode::Planar).scale(&int(6)));
        let a = AlgebraElement::from_tree(t("[[]]"), Mode::Commutative);
        let b = AlgebraElement::from_tree(Tree::dot(), Mode::Commutative);
        assert_eq!(&a * &b, &b * &a);
        let p = AlgebraElement::one(Mode::Planar);
        assert_eq!(p.product(&a), Err(Error::ModeMismatch("product of planar and commutative elements")));
    }

    #[test]
    fn primitive_dot() {
        let d = coproduct_tree(&Tree::dot(), Mode::Commutative);
        assert_eq!(d, tensor(Mode::Commutative, &[("[]", "1", 1), ("1", "[]", 1)]));
    }

    #[test]
    fn cuts_small_examples() {
        let l2 = coproduct_by_cuts(&t("[[]]"), Mode::Commutative);
        assert_eq!(l2, tensor(Mode::Commutative, &[("[[]]", "1", 1), ("1", "[[]]", 1), ("[]", "[]", 1)]));
        let cherry = coproduct_by_cuts(&t("[[][]]"), Mode::Commutative);
        let expected = tensor(
            Mode::Commutative,
            &[("[[][]]", "1", 1), ("1", "[[][]]", 1), ("[]", "[[]]", 2), ("[][]", "[]", 1)],
        );
        assert_eq!(cherry, expected);
    }

    #[test]
    fn recursion_matches_cuts_through_weight_six() {
        for mode in [Mode::Planar, Mode::Commutative] {
            for n in 1..=6 {
                for tree in enumerate(n, mode) {
                    assert_eq!(coproduct_tree(&tree, mode), coproduct_by_cuts(&tree, mode), "{tree}");
                }
            }
        }
    }

    #[test]
    fn counit_and_z() {
        let mut x = AlgebraElement::one(Mode::Commutative).scale(&int(3));
        x.add_term(f("[[]]"), int(2));
        assert_eq!(counit(&x), int(3));
        assert_eq!(counit(&AlgebraElement::one(Mode::Planar)), int(1));
        assert_eq!(counit(&AlgebraElement::from_tree(Tree::dot(), Mode::Planar)), int(0));
        assert_eq!(z_functional(&AlgebraElement::from_tree(Tree::dot(), Mode::Planar)), int(1));
        assert_eq!(z_functional(&AlgebraElement::from_forest(f("[][]"), Mode::Planar)), int(0));
    }

    #[test]
    fn abelianize_merges_siblings() {
        let mut x = AlgebraElement::zero(Mode::Planar);
        x.add_term(f("[[[]][]]"), int(1));
        x.add_term(f("[[][[]]]"), int(1));
        let ab = x.abelianize();
        assert_eq!(ab.len(), 1);
        assert_eq!(ab.coefficient(&f("[[[]][]]")), int(2));
        assert_eq!(AlgebraElement::one(Mode::Planar).abelianize(), AlgebraElement::one(Mode::Commutative));
    }

    #[test]
    fn substitution_examples() {
        let dot = AlgebraElement::from_tree(Tree::dot(), Mode::Planar);
        let p = TruncatedSeries::polynomial(vec![int(1), int(1)]);
        let got = substitute_series(&p, &dot, 5).unwrap();
        assert_eq!(got, &AlgebraElement::one(Mode::Planar) + &dot);

        let geom = TruncatedSeries::new(vec![int(1); 3]);
        let got = substitute_series(&geom, &dot, 2).unwrap();
        let mut expected = AlgebraElement::one(Mode::Planar);
        expected.add_term(f("[]"), int(1));
        expected.add_term(f("[][]"), int(1));
        assert_eq!(got, expected);

        let unit_plus = &AlgebraElement::one(Mode::Planar) + &dot;
        assert_eq!(substitute_series(&geom, &unit_plus, 2), Err(Error::ZeroValuation));
        assert!(substitute_series(&p, &unit_plus, 2).is_ok());
        assert!(matches!(substitute_series(&geom, &dot, 4), Err(Error::SeriesTooShort { .. })));
    }

    #[test]
    fn b_minus_needs_trees() {
        let x = AlgebraElement::from_forest(f("[][]"), Mode::Planar);
        assert_eq!(x.b_minus(), Err(Error::NotATree));
        let y = AlgebraElement::from_tree(t("[[][]]"), Mode::Planar);
        assert_eq!(y.b_minus().unwrap(), AlgebraElement::from_forest(f("[][]"), Mode::Planar));
    }
}
