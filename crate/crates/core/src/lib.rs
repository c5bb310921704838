//! Exact arithmetic for Connes–Kreimer Hopf algebras of rooted trees and the
//! combinatorial Dyson–Schwinger equation `X = B⁺(P(X))`.

pub mod algebra;
pub mod dse;
pub mod error;
pub mod fdbmulti;
pub mod hopfcheck;
pub mod json;
pub mod rational;
pub mod selftest;
pub mod series;
pub mod trees;

pub use algebra::{coproduct, coproduct_by_cuts, coproduct_tree, AlgebraElement, TensorElement};
pub use error::{Error, Result};
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use trees::{Decoration, Forest, Mode, Tree};
