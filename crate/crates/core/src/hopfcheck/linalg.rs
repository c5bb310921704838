//! Exact row reduction over ℚ on sparse vectors indexed by forests.
//!
//! Rows are kept in reduced echelon form: every row has its pivot (the
//! largest forest in its support) normalized to 1, and no other row carries
//! that pivot. For a fixed pivot rule this basis is unique, so two spans are
//! equal exactly when their bases are.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::AlgebraElement;
use crate::rational::Rational;
use crate::trees::{Forest, Mode};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Row {
    vector: AlgebraElement,
    /// Expression of `vector` in the inserted vectors.
    combo: BTreeMap<usize, Rational>,
}

#[derive(Clone, Debug)]
pub struct EchelonBasis {
    mode: Mode,
    rows: BTreeMap<Forest, Row>,
    inserted: usize,
}

fn add_scaled(target: &mut BTreeMap<usize, Rational>, src: &BTreeMap<usize, Rational>, c: &Rational) {
    for (k, v) in src {
        let entry = target.entry(*k).or_insert_with(Rational::zero);
        *entry += v * c;
        if entry.is_zero() {
            target.remove(k);
        }
    }
}

impl EchelonBasis {
    pub fn new(mode: Mode) -> Self {
        EchelonBasis { mode, rows: BTreeMap::new(), inserted: 0 }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Basis vectors in pivot order.
    pub fn vectors(&self) -> impl Iterator<Item = &AlgebraElement> {
        self.rows.values().map(|r| &r.vector)
    }

    fn reduce_tracked(&self, x: &AlgebraElement) -> (AlgebraElement, BTreeMap<usize, Rational>) {
        let mut rem = x.clone();
        let mut combo = BTreeMap::new();
        for (pivot, row) in &self.rows {
            let c = rem.coefficient(pivot);
            if c.is_zero() {
                continue;
            }
            rem = &rem - &row.vector.scale(&c);
            add_scaled(&mut combo, &row.combo, &c);
        }
        (rem, combo)
    }

    /// Remainder of `x` modulo the span; zero iff `x` is in the span.
    pub fn reduce(&self, x: &AlgebraElement) -> AlgebraElement {
        self.reduce_tracked(x).0
    }

    /// Projection onto the span along the non-pivot coordinates.
    pub fn project(&self, x: &AlgebraElement) -> AlgebraElement {
        x - &self.reduce(x)
    }

    pub fn contains(&self, x: &AlgebraElement) -> bool {
        self.reduce(x).is_zero()
    }

    /// Inserts `x` as vector number `self.inserted`; returns whether the
    /// dimension grew.
    pub fn insert(&mut self, x: &AlgebraElement) -> bool {
        assert_eq!(x.mode(), self.mode, "mode mismatch in echelon basis");
        let index = self.inserted;
        self.inserted += 1;
        let (rem, combo) = self.reduce_tracked(x);
        if rem.is_zero() {
            return false;
        }
        let (pivot, lead) = rem.terms().last().map(|(f, c)| (f.clone(), c.clone())).expect("nonzero");
        let inv = Rational::one() / lead;
        let vector = rem.scale(&inv);
        let mut row_combo = BTreeMap::new();
        row_combo.insert(index, Rational::one());
        add_scaled(&mut row_combo, &combo, &-Rational::one());
        let row_combo: BTreeMap<usize, Rational> = row_combo.into_iter().map(|(k, v)| (k, v * &inv)).collect();
        for row in self.rows.values_mut() {
            let c = row.vector.coefficient(&pivot);
            if c.is_zero() {
                continue;
            }
            row.vector = &row.vector - &vector.scale(&c);
            add_scaled(&mut row.combo, &row_combo, &-c);
        }
        self.rows.insert(pivot, Row { vector, combo: row_combo });
        true
    }

    /// Coefficients of `x` on the inserted vectors, when `x` is in the span.
    /// Unique when the inserted vectors were independent.
    pub fn coordinates(&self, x: &AlgebraElement) -> Option<BTreeMap<usize, Rational>> {
        let (rem, combo) = self.reduce_tracked(x);
        rem.is_zero().then_some(combo)
    }

    /// Same span, compared through the reduced bases.
    pub fn same_span(&self, other: &Self) -> bool {
        self.rows.len() == other.rows.len()
            && self.rows.iter().zip(other.rows.iter()).all(|((p, r), (q, s))| p == q && r.vector == s.vector)
    }
}
