//! Rational characters of the diagonal torus of GL(n).
//!
//! A weight is stored exactly in the standard basis e_1, ..., e_n; the
//! fundamental-basis coordinates (simple-root pairings a_i and the
//! determinant coefficient d) are a derived view. Integrality, dominance,
//! the central exponent, and the parity gate on the coefficient sheaf are
//! all decided with exact arithmetic.

use num::bigint::BigInt;
use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rational::{is_even_integer, is_integer, rat_int, Rat};

/// A rational character of the diagonal torus of GL(n), in standard
/// coordinates: the i-th entry is the coefficient of e_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    n: u64,
    b: Vec<Rat>,
}

/// A weight expressed against the fundamental weights and the determinant
/// character: a_i = b_i - b_{i+1} pair against the simple roots, nd = Σ b_i
/// is the central exponent, and d = nd/n is the determinant coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalView {
    pub a: Vec<Rat>,
    pub d: Rat,
    pub nd: Rat,
}

impl Weight {
    /// Build a weight from its standard coordinates.
    pub fn from_standard(n: u64, b: Vec<Rat>) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        if b.len() as u64 != n {
            return Err(Error::CoordinateCount {
                expected: n as usize,
                got: b.len(),
            });
        }
        Ok(Weight { n, b })
    }

    /// Build a weight from fundamental coordinates: n-1 simple-root
    /// pairings and the determinant coefficient d.
    ///
    /// Inverts the basis change via n·b_n = n·d - Σ i·a_i and
    /// b_i = b_{i+1} + a_i.
    pub fn from_fundamental(n: u64, a: Vec<Rat>, d: Rat) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        if a.len() as u64 != n - 1 {
            return Err(Error::CoordinateCount {
                expected: (n - 1) as usize,
                got: a.len(),
            });
        }
        let weighted: Rat = a
            .iter()
            .enumerate()
            .map(|(idx, ai)| rat_int(idx as i64 + 1) * ai)
            .sum();
        let b_last = d - weighted / rat_int(n as i64);
        let mut b = vec![b_last];
        for ai in a.iter().rev() {
            let prev = b.last().unwrap() + ai;
            b.push(prev);
        }
        b.reverse();
        Ok(Weight { n, b })
    }

    /// The zero weight of rank n.
    pub fn zero(n: u64) -> Result<Self, Error> {
        Self::from_standard(n, vec![Rat::zero(); n as usize])
    }

    pub fn rank(&self) -> u64 {
        self.n
    }

    /// Standard coordinates.
    pub fn standard(&self) -> &[Rat] {
        &self.b
    }

    /// Derived fundamental-basis coordinates.
    pub fn fundamental_view(&self) -> FundamentalView {
        let a = self
            .b
            .windows(2)
            .map(|w| &w[0] - &w[1])
            .collect::<Vec<_>>();
        let nd: Rat = self.b.iter().sum();
        let d = &nd / rat_int(self.n as i64);
        FundamentalView { a, d, nd }
    }

    /// True iff every standard coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.b.iter().all(is_integer)
    }

    /// True iff all simple-root pairings are nonnegative, equivalently
    /// the standard coordinates are weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.b.windows(2).all(|w| w[0] >= w[1])
    }

    /// The central exponent nd = Σ b_i: the center acts by z ↦ z^{nd}.
    pub fn central_exponent(&self) -> Rat {
        self.b.iter().sum()
    }

    /// Parity gate for the coefficient sheaf: -I_n acts by (-1)^{nd}, so
    /// the sheaf survives iff nd is even. Requires an integral weight.
    pub fn sheaf_is_nonzero(&self) -> Result<bool, Error> {
        if !self.is_integral() {
            return Err(Error::NonIntegralWeight);
        }
        Ok(is_even_integer(&self.central_exponent()))
    }

    /// True iff the weight is a rational multiple of the determinant
    /// character (all a_i = 0), the one-dimensional coefficient case.
    pub fn is_constant_coefficient(&self) -> bool {
        self.b.windows(2).all(|w| w[0] == w[1])
    }
}

impl FundamentalView {
    /// Integrality in fundamental coordinates: all a_i and nd integral,
    /// and nd ≡ Σ i·a_i (mod n). The congruence comes from the identity
    /// nd = n·b_n + Σ i·a_i, so it holds exactly when b_n is an integer.
    pub fn satisfies_integrality_congruence(&self, n: u64) -> bool {
        if !self.a.iter().all(is_integer) || !is_integer(&self.nd) {
            return false;
        }
        let weighted: Rat = self
            .a
            .iter()
            .enumerate()
            .map(|(idx, ai)| rat_int(idx as i64 + 1) * ai)
            .sum();
        let diff = &self.nd - weighted;
        (diff.numer() % BigInt::from(n)).is_zero()
    }

    /// Variant congruence nd ≡ Σ i·(a_i - 1) (mod n). Differs from the
    /// one above by Σ i = n(n-1)/2, which vanishes mod n only for odd n;
    /// kept for diagnostics only — it rejects the determinant character
    /// itself at n = 2.
    pub fn satisfies_shifted_congruence(&self, n: u64) -> bool {
        if !self.a.iter().all(is_integer) || !is_integer(&self.nd) {
            return false;
        }
        let weighted: Rat = self
            .a
            .iter()
            .enumerate()
            .map(|(idx, ai)| rat_int(idx as i64 + 1) * (ai - rat_int(1)))
            .sum();
        let diff = &self.nd - weighted;
        (diff.numer() % BigInt::from(n)).is_zero()
    }
}

// JSON form: {"n": 3, "b": ["2", "1", "0"]} with lowest-terms strings.
#[derive(Serialize, Deserialize)]
struct WeightRepr {
    n: u64,
    #[serde(with = "crate::rational::rat_string_vec")]
    b: Vec<Rat>,
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        WeightRepr {
            n: self.n,
            b: self.b.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = WeightRepr::deserialize(de)?;
        Weight::from_standard(repr.n, repr.b).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn weight(n: u64, b: &[i64]) -> Weight {
        Weight::from_standard(n, b.iter().map(|&x| rat_int(x)).collect()).unwrap()
    }

    #[test]
    fn constructor_validates() {
        assert_eq!(
            Weight::from_standard(1, vec![rat_int(0)]),
            Err(Error::RankTooSmall(1))
        );
        assert_eq!(
            Weight::from_standard(3, vec![rat_int(0); 2]),
            Err(Error::CoordinateCount {
                expected: 3,
                got: 2
            })
        );
        let w = weight(2, &[1, 0]);
        assert_eq!(w.standard(), &[rat_int(1), rat_int(0)]);
    }

    #[test]
    fn fundamental_view_small_cases() {
        let v = weight(2, &[1, 0]).fundamental_view();
        assert_eq!(v.a, vec![rat_int(1)]);
        assert_eq!(v.d, rat(1, 2));
        assert_eq!(v.nd, rat_int(1));

        // the determinant character at n = 3
        let v = weight(3, &[1, 1, 1]).fundamental_view();
        assert_eq!(v.a, vec![rat_int(0), rat_int(0)]);
        assert_eq!(v.d, rat_int(1));
        assert_eq!(v.nd, rat_int(3));

        let v = weight(3, &[2, 1, 0]).fundamental_view();
        assert_eq!(v.a, vec![rat_int(1), rat_int(1)]);
        assert_eq!(v.d, rat_int(1));
        assert_eq!(v.nd, rat_int(3));
    }

    #[test]
    fn fundamental_roundtrip() {
        let w = weight(5, &[2, 2, 1, 0, 0]);
        let v = w.fundamental_view();
        let back = Weight::from_fundamental(5, v.a.clone(), v.d.clone()).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn from_fundamental_matches_example() {
        let w = Weight::from_fundamental(2, vec![rat_int(1)], rat(1, 2)).unwrap();
        assert_eq!(w.standard(), &[rat_int(1), rat_int(0)]);
        assert!(w.is_integral());
    }

    #[test]
    fn integrality() {
        assert!(weight(2, &[1, 0]).is_integral());
        let thirds = Weight::from_standard(3, vec![rat(1, 3); 3]).unwrap();
        assert!(!thirds.is_integral());
        // congruence route agrees on the same inputs
        assert!(weight(2, &[1, 0])
            .fundamental_view()
            .satisfies_integrality_congruence(2));
        assert!(!thirds.fundamental_view().satisfies_integrality_congruence(3));
    }

    #[test]
    fn shifted_congruence_rejects_determinant_at_rank_2() {
        let delta = weight(2, &[1, 1]);
        assert!(delta.is_integral());
        let v = delta.fundamental_view();
        assert!(v.satisfies_integrality_congruence(2));
        assert!(!v.satisfies_shifted_congruence(2));
        // for odd n the two congruences agree
        let delta3 = weight(3, &[1, 1, 1]).fundamental_view();
        assert!(delta3.satisfies_integrality_congruence(3));
        assert!(delta3.satisfies_shifted_congruence(3));
    }

    #[test]
    fn dominance() {
        assert!(weight(3, &[2, 1, 0]).is_dominant());
        assert!(!weight(2, &[0, 1]).is_dominant());
        assert!(weight(5, &[1, 1, 1, 1, 1]).is_dominant());
    }

    #[test]
    fn central_exponent_values() {
        assert_eq!(weight(2, &[1, 0]).central_exponent(), rat_int(1));
        assert_eq!(weight(3, &[0, 0, 0]).central_exponent(), rat_int(0));
        assert_eq!(weight(5, &[1, 1, 1, 1, 1]).central_exponent(), rat_int(5));
    }

    #[test]
    fn sheaf_parity() {
        assert_eq!(weight(2, &[1, 0]).sheaf_is_nonzero(), Ok(false));
        assert_eq!(weight(3, &[0, 0, 0]).sheaf_is_nonzero(), Ok(true));
        assert_eq!(weight(2, &[1, 1]).sheaf_is_nonzero(), Ok(true));
        let half = Weight::from_standard(2, vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(half.sheaf_is_nonzero(), Err(Error::NonIntegralWeight));
    }

    #[test]
    fn constant_coefficient_detection() {
        assert!(weight(5, &[1, 1, 1, 1, 1]).is_constant_coefficient());
        assert!(!weight(2, &[1, -1]).is_constant_coefficient());
        assert!(weight(3, &[0, 0, 0]).is_constant_coefficient());
    }

    #[test]
    fn json_shape() {
        let w = weight(3, &[2, 1, 0]);
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"n":3,"b":["2","1","0"]}"#);
        let back: Weight = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
        // halves serialize in lowest terms
        let h = Weight::from_standard(2, vec![rat(1, 2), rat(-3, 6)]).unwrap();
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            r#"{"n":2,"b":["1/2","-1/2"]}"#
        );
    }
}
