//! A standalone model of the Faà di Bruno Hopf algebra: the free commutative
//! algebra on `Y₁, Y₂, …` with `Δ(𝐘) = Σ_{n≥0} 𝐘^{n+1} ⊗ Y_n`, where
//! `𝐘 = 1 + Y₁ + Y₂ + …` and `Y₀ = 1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Monomials as sorted index multisets.
type Poly = BTreeMap<Vec<u32>, BigInt>;

fn weight(m: &[u32]) -> u32 {
    m.iter().sum()
}

fn mul(a: &Poly, b: &Poly, cap: u32) -> Poly {
    let mut out = Poly::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            if weight(m1) + weight(m2) > cap {
                continue;
            }
            let mut m: Vec<u32> = m1.iter().chain(m2).copied().collect();
            m.sort_unstable();
            *out.entry(m).or_insert_with(BigInt::zero) += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `Δ(Y_m)` as a list of `(left, n)` with right factor `Y_n`.
pub fn coproduct_generator(m: u32) -> Vec<(Poly, u32)> {
    let mut bold = Poly::new();
    bold.insert(Vec::new(), BigInt::one());
    for k in 1..=m {
        bold.insert(vec![k], BigInt::one());
    }
    let mut power = bold.clone();
    let mut out = Vec::new();
    for n in 0..=m {
        // power = 𝐘^{n+1}
        let piece: Poly = power.iter().filter(|(mono, _)| weight(mono) == m - n).map(|(k, v)| (k.clone(), v.clone())).collect();
        if !piece.is_empty() {
            out.push((piece, n));
        }
        power = mul(&power, &bold, m);
    }
    out
}

/// `(Z_i ⊗ Z_j)(Δ Y_{i+j})`, with `Z_k` reading the coefficient of `Y_k`.
fn pairing(i: u32, j: u32) -> BigInt {
    coproduct_generator(i + j)
        .into_iter()
        .filter(|(_, n)| *n == j)
        .map(|(left, _)| left.get(&vec![i]).cloned().unwrap_or_else(BigInt::zero))
        .sum()
}

/// Structure constant of `[Z_i, Z_j]` on `Z_{i+j}`, read off the coproduct.
pub fn fdb_bracket(i: u32, j: u32) -> BigInt {
    assert!(i >= 1 && j >= 1, "indices start at 1");
    pairing(i, j) - pairing(j, i)
}
