//! Betti numbers of the relative Lie algebra cohomology of GL(n), i.e. of
//! the compact dual SU(n)/SO(n): an exterior algebra on one generator in
//! each degree 2l-1 for odd l with 1 < l ≤ n. Degree 1 is excluded because
//! the circle factor of U(n)/O(n) is split off by the thickened maximal
//! compact.
//!
//! Two independent routes compute the same ranks: polynomial multiplication
//! ([`poincare_polynomial`], the production path) and explicit subset
//! enumeration ([`oracle_betti`], kept for cross-checking).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Degrees of the exterior-algebra generators for rank n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDegrees {
    n: u64,
    degrees: BTreeSet<u64>,
}

impl GeneratorDegrees {
    pub fn rank(&self) -> u64 {
        self.n
    }

    /// The sorted generator degrees {2l-1 : 1 < l ≤ n, l odd}.
    pub fn degrees(&self) -> &BTreeSet<u64> {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn contains(&self, k: u64) -> bool {
        self.degrees.contains(&k)
    }

    /// Top nonvanishing degree: the sum of all generator degrees.
    pub fn top_degree(&self) -> u64 {
        self.degrees.iter().sum()
    }
}

/// Integer Betti numbers b_k as a sparse polynomial in one variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincarePolynomial {
    coeffs: BTreeMap<u64, u64>,
}

impl PoincarePolynomial {
    /// The constant polynomial 1 (empty exterior algebra).
    pub fn one() -> Self {
        PoincarePolynomial {
            coeffs: BTreeMap::from([(0, 1)]),
        }
    }

    /// Poincaré polynomial of an exterior algebra with one generator per
    /// listed degree: the product of (1 + t^s).
    pub fn exterior<I: IntoIterator<Item = u64>>(degrees: I) -> Self {
        let mut poly = Self::one();
        for s in degrees {
            poly = poly.mul_one_plus_power(s);
        }
        poly
    }

    /// Multiply by (1 + t^s).
    pub fn mul_one_plus_power(&self, s: u64) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (&k, &c) in &self.coeffs {
            let entry = coeffs.entry(k + s).or_insert(0);
            *entry = entry.checked_add(c).expect("Betti number overflows u64");
        }
        PoincarePolynomial { coeffs }
    }

    /// Coefficient of t^k (zero outside the support).
    pub fn coefficient(&self, k: u64) -> u64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    /// Nonzero coefficients in ascending degree order.
    pub fn coefficients(&self) -> &BTreeMap<u64, u64> {
        &self.coeffs
    }

    /// Largest degree with a nonzero coefficient.
    pub fn top_degree(&self) -> u64 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    /// Sum of all coefficients (the value at t = 1).
    pub fn total_rank(&self) -> u64 {
        self.coeffs
            .values()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .expect("total rank overflows u64")
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&k, &c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, c) => write!(f, "{c}t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// JSON map {"k": b_k}; BTreeMap keys emit in ascending numeric order.
impl Serialize for PoincarePolynomial {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_map(self.coeffs.iter().map(|(k, c)| (k.to_string(), c)))
    }
}

/// Generator degrees {2l-1 : 1 < l ≤ n, l odd}; empty exactly for n = 2.
pub fn generator_degrees(n: u64) -> Result<GeneratorDegrees, Error> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    let degrees = (3..=n).step_by(2).map(|l| 2 * l - 1).collect();
    Ok(GeneratorDegrees { n, degrees })
}

/// Poincaré polynomial of the rank-n exterior algebra, by coefficient
/// convolution.
pub fn poincare_polynomial(n: u64) -> Result<PoincarePolynomial, Error> {
    let gens = generator_degrees(n)?;
    Ok(PoincarePolynomial::exterior(gens.degrees().iter().copied()))
}

/// Betti number b_k for rank n.
pub fn betti(n: u64, k: u64) -> Result<u64, Error> {
    Ok(poincare_polynomial(n)?.coefficient(k))
}

/// Independent check: count the subsets of the generator-degree set whose
/// element sum is k, by enumerating all 2^m subsets directly.
pub fn oracle_betti(n: u64, k: u64) -> Result<u64, Error> {
    let degrees: Vec<u64> = generator_degrees(n)?.degrees().iter().copied().collect();
    let m = degrees.len();
    assert!(m < 32, "subset enumeration is only for small ranks");
    let mut count = 0;
    for mask in 0u32..(1u32 << m) {
        let sum: u64 = degrees
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &s)| s)
            .sum();
        if sum == k {
            count += 1;
        }
    }
    Ok(count)
}
