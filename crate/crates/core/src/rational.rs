//! Exact rational scalars and their `"p/q"` string form.
//!
//! All arithmetic in this crate is exact; `Rat` is the single scalar type.
//! Rationals serialize as lowest-terms strings, with the denominator
//! omitted when it is 1 (`"3"`, `"-5/4"`).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

use crate::error::Error;

/// Exact rational number.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational p/q. Panics if q = 0.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Lowest-terms string form, `"p"` or `"p/q"`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p"` or `"p/q"` with optional sign.
pub fn rat_from_str(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::BadRational(s.to_string());
    match s.split_once('/') {
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
        Some((num, den)) => {
            let p: BigInt = num.trim().parse().map_err(|_| bad())?;
            let q: BigInt = den.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// True iff `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True iff `r` is an even integer.
pub fn is_even_integer(r: &Rat) -> bool {
    is_integer(r) && r.numer().is_even()
}

/// The integers k with `lo` ≤ k ≤ `hi` under exact rational comparison,
/// clamped to [0, cap]. Comparisons are exact; no rounding is involved.
pub fn integers_in_closed_interval(lo: &Rat, hi: &Rat, cap: u64) -> Vec<u64> {
    (0..=cap)
        .filter(|&k| {
            let k = rat_int(k as i64);
            *lo <= k && k <= *hi
        })
        .collect()
}

/// The integers k with `lo` < k < `hi`, clamped to [0, cap].
pub fn integers_in_open_interval(lo: &Rat, hi: &Rat, cap: u64) -> Vec<u64> {
    (0..=cap)
        .filter(|&k| {
            let k = rat_int(k as i64);
            *lo < k && k < *hi
        })
        .collect()
}

/// Serde adapter: `Rat` as a lowest-terms string.
pub mod rat_string {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&rat_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(de)?;
        rat_from_str(&s).map_err(de::Error::custom)
    }
}

/// Serde adapter for vectors of rationals.
pub mod rat_string_vec {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(v.iter().map(rat_to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rat>, D::Error> {
        let strings = Vec::<String>::deserialize(de)?;
        strings
            .iter()
            .map(|s| rat_from_str(s).map_err(de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_roundtrip() {
        for (s, expect) in [("3", "3"), ("-5/4", "-5/4"), ("6/4", "3/2"), ("0/7", "0")] {
            let r = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&r), expect);
        }
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "x", "1/0", "1/2/3", "2.5"] {
            assert!(rat_from_str(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn interval_membership_is_exact() {
        let lo = rat(3, 4);
        let hi = rat(9, 4);
        assert_eq!(integers_in_closed_interval(&lo, &hi, 10), vec![1, 2]);
        assert_eq!(integers_in_open_interval(&lo, &hi, 10), vec![1, 2]);
        let a = rat_int(6);
        let b = rat_int(9);
        assert_eq!(integers_in_closed_interval(&a, &b, 14), vec![6, 7, 8, 9]);
        assert_eq!(integers_in_open_interval(&a, &b, 14), vec![7, 8]);
    }

    #[test]
    fn parity_checks() {
        assert!(is_even_integer(&rat_int(0)));
        assert!(is_even_integer(&rat_int(-4)));
        assert!(!is_even_integer(&rat_int(3)));
        assert!(!is_even_integer(&rat(1, 2)));
    }
}
