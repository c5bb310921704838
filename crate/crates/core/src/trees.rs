//! Rooted trees and forests, planar or commutative.
//!
//! A [`Tree`] always stores its children in a sequence. In commutative mode
//! that sequence is kept sorted (heaviest first) at every vertex, so equality of
//! canonical trees is structural equality. Planar trees keep the embedding.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Planar,
    Commutative,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Planar => "planar",
            Mode::Commutative => "commutative",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "planar" => Ok(Mode::Planar),
            "commutative" => Ok(Mode::Commutative),
            _ => Err(format!("unknown mode {s:?} (expected planar|commutative)")),
        }
    }
}

/// Vertex decoration `i,(u1,u2)` used by the multivariable construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decoration {
    pub i: u8,
    pub u1: u8,
    pub u2: u8,
}

impl Decoration {
    pub fn new(i: u8, u1: u8, u2: u8) -> Self {
        Decoration { i, u1, u2 }
    }
}

/// `None` is the unit decoration of undecorated trees.
pub type Label = Option<Decoration>;

/// A rooted tree. Field order matters: the derived `Ord` compares weight,
/// then label, then the children lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    weight: u32,
    label: Label,
    children: Vec<Tree>,
}

impl Tree {
    /// The single vertex.
    pub fn dot() -> Tree {
        Tree::leaf(None)
    }

    pub fn leaf(label: Label) -> Tree {
        Tree { weight: 1, label, children: Vec::new() }
    }

    /// Grafts `children` in the given order on a new root. No sorting is done.
    pub fn node(label: Label, children: Vec<Tree>) -> Tree {
        let weight = 1 + children.iter().map(|c| c.weight).sum::<u32>();
        Tree { weight, label, children }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn label(&self) -> Label {
        self.label
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn fertility(&self) -> usize {
        self.children.len()
    }

    /// Deletes the root.
    pub fn b_minus(&self) -> Forest {
        Forest(self.children.clone())
    }

    pub fn is_ladder(&self) -> bool {
        match self.children.as_slice() {
            [] => true,
            [c] => c.is_ladder(),
            _ => false,
        }
    }

    pub fn canonicalize(&self, mode: Mode) -> Tree {
        match mode {
            Mode::Planar => self.clone(),
            Mode::Commutative => {
                let mut children: Vec<Tree> =
                    self.children.iter().map(|c| c.canonicalize(mode)).collect();
                sort_desc(&mut children);
                Tree { weight: self.weight, label: self.label, children }
            }
        }
    }

    pub fn is_canonical(&self, mode: Mode) -> bool {
        match mode {
            Mode::Planar => true,
            Mode::Commutative => {
                self.children.windows(2).all(|w| w[0] >= w[1])
                    && self.children.iter().all(|c| c.is_canonical(mode))
            }
        }
    }

    /// Replaces every decoration by the unit label.
    pub fn strip_labels(&self) -> Tree {
        Tree {
            weight: self.weight,
            label: None,
            children: self.children.iter().map(Tree::strip_labels).collect(),
        }
    }

    /// Product over vertices of `(fertility)!`.
    pub fn factorial(&self) -> BigInt {
        self.children
            .iter()
            .fold(factorial(self.children.len() as u32), |acc, c| acc * c.factorial())
    }

    /// Product over vertices of `[fertility]_β!`.
    pub fn beta_factorial(&self, beta: &Rational) -> Rational {
        self.children
            .iter()
            .fold(beta_int_factorial(self.children.len() as u32, beta), |acc, c| {
                acc * c.beta_factorial(beta)
            })
    }

    /// Parses the bracket notation of [`fmt::Display`], e.g. `[[[]][]]`.
    pub fn parse(s: &str) -> Result<Tree> {
        let forest = Forest::parse(s)?;
        match forest.0.as_slice() {
            [t] => Ok(t.clone()),
            _ => Err(Error::Decode {
                path: "$".into(),
                reason: format!("{s:?} is not a single tree"),
            }),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(d) = self.label {
            write!(f, "({},{},{})", d.i, d.u1, d.u2)?;
        }
        f.write_str("[")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

fn sort_desc(trees: &mut [Tree]) {
    trees.sort_by(|a, b| b.cmp(a));
}

/// `[i]_β = 1 + β(i-1)`.
pub fn beta_int(i: u32, beta: &Rational) -> Rational {
    Rational::one() + beta * Rational::from_integer(BigInt::from(i as i64 - 1))
}

/// `[i]_β! = [1]_β ... [i]_β`, with `[0]_β! = 1`.
pub fn beta_int_factorial(i: u32, beta: &Rational) -> Rational {
    (1..=i).fold(Rational::one(), |acc, k| acc * beta_int(k, beta))
}

/// A forest: a word of trees (planar) or a sorted monomial (commutative).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest(Vec<Tree>);

impl Forest {
    /// The empty forest, i.e. the unit.
    pub fn unit() -> Forest {
        Forest(Vec::new())
    }

    /// Builds a forest and brings it to canonical form for `mode`.
    pub fn new(trees: Vec<Tree>, mode: Mode) -> Forest {
        let mut f = Forest(trees);
        f.normalize(mode);
        f
    }

    pub fn single(t: Tree) -> Forest {
        Forest(vec![t])
    }

    pub fn trees(&self) -> &[Tree] {
        &self.0
    }

    pub fn into_trees(self) -> Vec<Tree> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(Tree::weight).sum()
    }

    /// Concatenation; sorted again in commutative mode.
    pub fn concat(&self, other: &Forest, mode: Mode) -> Forest {
        let mut trees = Vec::with_capacity(self.0.len() + other.0.len());
        trees.extend_from_slice(&self.0);
        trees.extend_from_slice(&other.0);
        let mut f = Forest(trees);
        if mode == Mode::Commutative {
            sort_desc(&mut f.0);
        }
        f
    }

    fn normalize(&mut self, mode: Mode) {
        if mode == Mode::Commutative {
            for t in self.0.iter_mut() {
                *t = t.canonicalize(mode);
            }
            sort_desc(&mut self.0);
        }
    }

    pub fn canonicalize(&self, mode: Mode) -> Forest {
        let mut f = self.clone();
        f.normalize(mode);
        f
    }

    /// Grafts the forest on a new root carrying `label`.
    pub fn b_plus_labeled(&self, label: Label) -> Tree {
        Tree::node(label, self.0.clone())
    }

    pub fn b_plus(&self) -> Tree {
        self.b_plus_labeled(None)
    }

    /// Inverse of `b_plus`; only defined on single trees.
    pub fn b_minus(&self) -> Result<Forest> {
        match self.0.as_slice() {
            [t] => Ok(t.b_minus()),
            _ => Err(Error::NotATree),
        }
    }

    pub fn factorial(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, t| acc * t.factorial())
    }

    pub fn beta_factorial(&self, beta: &Rational) -> Rational {
        self.0.iter().fold(Rational::one(), |acc, t| acc * t.beta_factorial(beta))
    }

    /// Concatenated bracket notation; the empty forest is the empty string.
    pub fn parse(s: &str) -> Result<Forest> {
        let bytes: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let mut trees = Vec::new();
        while pos < bytes.len() {
            trees.push(parse_tree(&bytes, &mut pos)?);
        }
        Ok(Forest(trees))
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for t in &self.0 {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

fn parse_tree(s: &[char], pos: &mut usize) -> Result<Tree> {
    let err = |pos: usize, reason: &str| Error::Decode {
        path: format!("char {pos}"),
        reason: reason.to_string(),
    };
    let mut label = None;
    if s.get(*pos) == Some(&'(') {
        let close = s[*pos..]
            .iter()
            .position(|&c| c == ')')
            .ok_or_else(|| err(*pos, "unclosed decoration"))?;
        let body: String = s[*pos + 1..*pos + close].iter().collect();
        let parts: Vec<u8> = body
            .split(',')
            .map(|p| p.parse::<u8>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err(*pos, "bad decoration"))?;
        if parts.len() != 3 {
            return Err(err(*pos, "decoration needs three entries"));
        }
        label = Some(Decoration::new(parts[0], parts[1], parts[2]));
        *pos += close + 1;
    }
    if s.get(*pos) != Some(&'[') {
        return Err(err(*pos, "expected '['"));
    }
    *pos += 1;
    let mut children = Vec::new();
    loop {
        match s.get(*pos) {
            Some(']') => {
                *pos += 1;
                return Ok(Tree::node(label, children));
            }
            Some(_) => children.push(parse_tree(s, pos)?),
            None => return Err(err(*pos, "unexpected end")),
        }
    }
}

/// The weight-`n` tree in which every vertex has at most one child.
pub fn ladder(n: u32) -> Tree {
    assert!(n >= 1, "ladder weight must be positive");
    (1..n).fold(Tree::dot(), |t, _| Tree::node(None, vec![t]))
}

/// All distinct (canonical, in commutative mode) undecorated trees of weight
/// `n`, sorted ascending.
pub fn enumerate(n: u32, mode: Mode) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    let mut by_weight: Vec<Vec<Tree>> = vec![Vec::new(), vec![Tree::dot()]];
    for w in 2..=n {
        let mut out = Vec::new();
        for forest in forests_from(&by_weight, w - 1, mode, None) {
            out.push(Tree::node(None, forest));
        }
        out.sort();
        by_weight.push(out);
    }
    by_weight.swap_remove(n as usize)
}

/// Forests of weight `m` built from `trees[k]` (trees of weight `k`). In
/// commutative mode trees are emitted in non-increasing order, bounded by `max`.
fn forests_from(
    trees: &[Vec<Tree>],
    m: u32,
    mode: Mode,
    max: Option<&Tree>,
) -> Vec<Vec<Tree>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first_weight in 1..=m {
        for t in &trees[first_weight as usize] {
            if mode == Mode::Commutative && max.is_some_and(|mx| t > mx) {
                continue;
            }
            let bound = if mode == Mode::Commutative { Some(t) } else { None };
            for mut rest in forests_from(trees, m - first_weight, mode, bound) {
                rest.insert(0, t.clone());
                out.push(rest);
            }
        }
    }
    out
}

/// All forests of weight `n`, canonical for `mode`, sorted ascending.
pub fn enumerate_forests(n: u32, mode: Mode) -> Vec<Forest> {
    let mut trees = vec![Vec::new()];
    for w in 1..=n {
        trees.push(enumerate(w, mode));
    }
    let set: BTreeSet<Forest> = forests_from(&trees, n, mode, None)
        .into_iter()
        .map(Forest)
        .collect();
    set.into_iter().collect()
}
