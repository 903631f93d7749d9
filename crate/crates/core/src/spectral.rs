//! Residual-spectrum enumeration and the per-degree classification of the
//! inner-modulo-cuspidal cohomology for prime rank.
//!
//! Levi block shapes are ordered compositions of n; only the equal-part
//! shapes index discrete-spectrum classes, and for prime n the single such
//! shape is the full flag (1, ..., 1). The residual classes at a level
//! modulus N are then the characters μ of (ℤ/Nℤ)^× (one per n-th root of
//! each available central character), each contributing with multiplicity
//! one. The classifier turns this into a verdict for every degree k.

use std::collections::BTreeMap;

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::arith::{divisors, euler_phi, is_prime};
use crate::degree_intervals::dim_symmetric_space;
use crate::dirichlet::{enumerate_characters, DirichletCharacter};
use crate::error::Error;
use crate::lie_cohomology::{generator_degrees, poincare_polynomial};
use crate::rational::{rat_int, rat_to_string, Rat};
use crate::weight_lattice::Weight;

/// Symbolic form of the one nonexplicit piece of the classification: the
/// kernel of the boundary restriction on the image of the residual part.
pub const RESIDUAL_KERNEL_SYMBOL: &str = "ker(r^k | Φ_BG(Res_f(λ)))";

/// An ordered tuple of positive block sizes summing to n, naming the Levi
/// shape GL(n_1) × … × GL(n_r) of a standard parabolic subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicShape {
    parts: Vec<u64>,
}

impl ParabolicShape {
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn rank(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// False exactly for the single-block shape (n), which names the full
    /// group rather than a proper parabolic subgroup.
    pub fn is_proper(&self) -> bool {
        self.parts.len() > 1
    }

    /// True iff all blocks have equal size.
    pub fn has_equal_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }
}

/// All ordered compositions of n in lexicographic order, the improper
/// single-block shape included. There are 2^{n-1} of them, so this is
/// meant for small n.
pub fn standard_parabolic_shapes(n: u64) -> Result<Vec<ParabolicShape>, Error> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    fn extend(remaining: u64, current: &mut Vec<u64>, out: &mut Vec<ParabolicShape>) {
        if remaining == 0 {
            out.push(ParabolicShape {
                parts: current.clone(),
            });
            return;
        }
        for first in 1..=remaining {
            current.push(first);
            extend(remaining - first, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// The proper equal-part shapes: one per divisor m > 1 of n, namely m
/// blocks of size n/m, listed by ascending block size. For prime n this
/// is the full flag shape alone.
pub fn xi0_shapes(n: u64) -> Result<Vec<ParabolicShape>, Error> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    Ok(divisors(n)
        .into_iter()
        .filter(|&m| m > 1)
        .rev()
        .map(|m| ParabolicShape {
            parts: vec![n / m; m as usize],
        })
        .collect())
}

/// One residual class: a finite part μ, the archimedean type exponent
/// d (the center acts by z ↦ z^{d} on the n-th root of the central
/// character), and its multiplicity in the discrete spectrum, which is
/// always one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualDescriptor {
    finite_part: DirichletCharacter,
    type_exponent: Rat,
    multiplicity: u64,
}

impl ResidualDescriptor {
    pub fn finite_part(&self) -> &DirichletCharacter {
        &self.finite_part
    }

    pub fn type_exponent(&self) -> &Rat {
        &self.type_exponent
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }
}

impl Serialize for ResidualDescriptor {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("ResidualDescriptor", 3)?;
        st.serialize_field("finite_part", &self.finite_part)?;
        st.serialize_field("type_exponent", &rat_to_string(&self.type_exponent))?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

/// Residual classes available at level modulus N for a weight in the
/// surviving regime: integral, a power of the determinant, even central
/// exponent. One descriptor per character mod N.
pub fn residual_spectrum(
    weight: &Weight,
    level: u64,
) -> Result<Vec<ResidualDescriptor>, Error> {
    let n = weight.rank();
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    if level == 0 {
        return Err(Error::ZeroModulus);
    }
    if !weight.is_integral() {
        return Err(Error::NonIntegralWeight);
    }
    if !weight.is_constant_coefficient() {
        return Err(Error::NonConstantCoefficient);
    }
    if !weight.sheaf_is_nonzero()? {
        return Err(Error::SheafVanishes);
    }
    let type_exponent = weight.central_exponent() / rat_int(n as i64);
    Ok(enumerate_characters(level)?
        .into_iter()
        .map(|finite_part| ResidualDescriptor {
            finite_part,
            type_exponent: type_exponent.clone(),
            multiplicity: 1,
        })
        .collect())
}

/// Per-degree verdict on the inner-modulo-cuspidal cohomology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The coefficient sheaf itself vanishes (odd central exponent).
    SheafZero,
    /// Nonconstant coefficients force vanishing in every degree.
    NonconstantZero,
    /// Vanishing forced by the degree bookkeeping.
    Zero,
    /// Possibly nonzero: bounded by the residual classes landing in this
    /// degree, recorded symbolically.
    ResidualKernel {
        dim_upper_bound: u64,
        symbolic: String,
    },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::SheafZero => "SheafZero",
            Verdict::NonconstantZero => "NonconstantZero",
            Verdict::Zero => "Zero",
            Verdict::ResidualKernel { .. } => "ResidualKernel",
        }
    }

    /// True for the three flavours of forced vanishing.
    pub fn is_zero(&self) -> bool {
        !matches!(self, Verdict::ResidualKernel { .. })
    }
}

/// The complete classification for one (rank, weight, level) input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    n: u64,
    weight: Weight,
    level: u64,
    dim_sym: u64,
    verdicts: BTreeMap<u64, Verdict>,
}

impl CohomologyReport {
    pub fn rank(&self) -> u64 {
        self.n
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn dim_sym(&self) -> u64 {
        self.dim_sym
    }

    pub fn verdicts(&self) -> &BTreeMap<u64, Verdict> {
        &self.verdicts
    }

    pub fn verdict(&self, k: u64) -> Option<&Verdict> {
        self.verdicts.get(&k)
    }

    /// Markdown rendering: a header stating the level convention, then
    /// one row per degree.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "Classification for GL({}), weight b = ({}), level N = {}\n",
            self.n,
            self.weight
                .standard()
                .iter()
                .map(rat_to_string)
                .collect::<Vec<_>>()
                .join(","),
            self.level,
        ));
        out.push_str(&format!(
            "Level convention: finite parts available at level N are the Dirichlet characters mod N (φ(N) = {}); bounds are dimension upper bounds, not exact dimensions.\n\n",
            euler_phi(self.level),
        ));
        out.push_str("| k | verdict | bound | symbolic |\n");
        out.push_str("| --- | --- | --- | --- |\n");
        for (k, verdict) in &self.verdicts {
            match verdict {
                Verdict::ResidualKernel {
                    dim_upper_bound,
                    symbolic,
                } => {
                    out.push_str(&format!(
                        "| {k} | {} | {dim_upper_bound} | {} |\n",
                        verdict.name(),
                        symbolic.replace('|', "\\|"),
                    ));
                }
                other => {
                    out.push_str(&format!("| {k} | {} |  |  |\n", other.name()));
                }
            }
        }
        out
    }
}

impl Serialize for CohomologyReport {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        struct Entry<'a>(u64, &'a Verdict);
        impl Serialize for Entry<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                let fields = match self.1 {
                    Verdict::ResidualKernel { .. } => 4,
                    _ => 2,
                };
                let mut st = ser.serialize_struct("Entry", fields)?;
                st.serialize_field("k", &self.0)?;
                st.serialize_field("verdict", self.1.name())?;
                if let Verdict::ResidualKernel {
                    dim_upper_bound,
                    symbolic,
                } = self.1
                {
                    st.serialize_field("bound", dim_upper_bound)?;
                    st.serialize_field("symbolic", symbolic)?;
                }
                st.end()
            }
        }

        struct Entries<'a>(&'a BTreeMap<u64, Verdict>);
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                let mut seq = ser.serialize_seq(Some(self.0.len()))?;
                for (&k, v) in self.0 {
                    seq.serialize_element(&Entry(k, v))?;
                }
                seq.end()
            }
        }

        let mut st = ser.serialize_struct("CohomologyReport", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("weight", &self.weight)?;
        st.serialize_field("level", &self.level)?;
        st.serialize_field("dim_sym", &self.dim_sym)?;
        st.serialize_field("verdicts", &Entries(&self.verdicts))?;
        st.end()
    }
}

/// Classify every degree k in [0, dim] for a dominant integral weight of
/// prime rank at level modulus N.
///
/// The parity gate runs first: an odd central exponent kills the sheaf
/// outright. Nonconstant coefficients vanish in every degree; constant
/// coefficients vanish everywhere for n = 2, 3; and for primes n ≥ 5 the
/// only possibly nonzero degrees are the generator degrees, where the
/// dimension is bounded by b_k(n) · φ(N) with multiplicity one per
/// residual class.
pub fn classify(weight: &Weight, level: u64) -> Result<CohomologyReport, Error> {
    let n = weight.rank();
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    if level == 0 {
        return Err(Error::ZeroModulus);
    }
    if !weight.is_integral() {
        return Err(Error::NonIntegralWeight);
    }
    if !weight.is_dominant() {
        return Err(Error::NonDominantWeight);
    }
    let dim_sym = dim_symmetric_space(n)?;
    let sheaf_nonzero = weight.sheaf_is_nonzero()?;

    let verdict_for_degree: Box<dyn Fn(u64) -> Verdict> = if !sheaf_nonzero {
        Box::new(|_| Verdict::SheafZero)
    } else if !weight.is_constant_coefficient() {
        Box::new(|_| Verdict::NonconstantZero)
    } else if n <= 3 {
        Box::new(|_| Verdict::Zero)
    } else {
        let s0 = generator_degrees(n)?;
        let poly = poincare_polynomial(n)?;
        let phi = euler_phi(level);
        Box::new(move |k| {
            if s0.contains(k) {
                Verdict::ResidualKernel {
                    dim_upper_bound: poly.coefficient(k) * phi,
                    symbolic: RESIDUAL_KERNEL_SYMBOL.to_string(),
                }
            } else {
                Verdict::Zero
            }
        })
    };

    let verdicts = (0..=dim_sym).map(|k| (k, verdict_for_degree(k))).collect();
    Ok(CohomologyReport {
        n,
        weight: weight.clone(),
        level,
        dim_sym,
        verdicts,
    })
}

/// Degree-0 and top-degree verdicts agree for the constant sheaf — the
/// index-level shadow of the duality between them.
pub fn duality_pairing_check(n: u64) -> Result<bool, Error> {
    let report = classify(&Weight::zero(n)?, 1)?;
    Ok(report.verdict(0) == report.verdict(report.dim_sym()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn int_weight(n: u64, b: &[i64]) -> Weight {
        Weight::from_standard(n, b.iter().map(|&x| rat_int(x)).collect()).unwrap()
    }

    #[test]
    fn composition_enumeration() {
        let shapes = standard_parabolic_shapes(3).unwrap();
        let parts: Vec<&[u64]> = shapes.iter().map(|s| s.parts()).collect();
        assert_eq!(
            parts,
            vec![&[1, 1, 1][..], &[1, 2], &[2, 1], &[3]]
        );
        let proper: Vec<_> = shapes.iter().filter(|s| s.is_proper()).collect();
        assert_eq!(proper.len(), 3);

        let shapes2 = standard_parabolic_shapes(2).unwrap();
        let proper2: Vec<&[u64]> = shapes2
            .iter()
            .filter(|s| s.is_proper())
            .map(|s| s.parts())
            .collect();
        assert_eq!(proper2, vec![&[1, 1][..]]);

        let proper4 = standard_parabolic_shapes(4)
            .unwrap()
            .into_iter()
            .filter(|s| s.is_proper())
            .count();
        assert_eq!(proper4, 7);
    }

    #[test]
    fn composition_count_is_exponential() {
        for n in 2..=12u64 {
            let shapes = standard_parabolic_shapes(n).unwrap();
            assert_eq!(shapes.len() as u64, 1 << (n - 1));
            assert!(shapes.iter().all(|s| s.rank() == n));
        }
    }

    #[test]
    fn equal_part_shapes() {
        let xi5 = xi0_shapes(5).unwrap();
        assert_eq!(xi5.len(), 1);
        assert_eq!(xi5[0].parts(), &[1, 1, 1, 1, 1]);

        let xi4: Vec<Vec<u64>> = xi0_shapes(4).unwrap().iter().map(|s| s.parts().to_vec()).collect();
        assert_eq!(xi4, vec![vec![1, 1, 1, 1], vec![2, 2]]);

        let xi6: Vec<Vec<u64>> = xi0_shapes(6).unwrap().iter().map(|s| s.parts().to_vec()).collect();
        assert_eq!(
            xi6,
            vec![vec![1; 6], vec![2, 2, 2], vec![3, 3]]
        );
        assert!(xi0_shapes(6).unwrap().iter().all(|s| s.has_equal_parts() && s.is_proper()));
    }

    #[test]
    fn residual_spectrum_counts() {
        let w5 = Weight::zero(5).unwrap();
        let specs = residual_spectrum(&w5, 1).unwrap();
        assert_eq!(specs.len(), 1);
        assert!(specs[0].finite_part().is_principal());
        assert_eq!(specs[0].type_exponent(), &rat_int(0));
        assert_eq!(specs[0].multiplicity(), 1);

        assert_eq!(residual_spectrum(&w5, 7).unwrap().len(), 6);

        // descriptors for a nonzero determinant power carry d = nd/n
        let w = int_weight(5, &[2, 2, 2, 2, 2]);
        let specs = residual_spectrum(&w, 1).unwrap();
        assert_eq!(specs[0].type_exponent(), &rat_int(2));
    }

    #[test]
    fn residual_spectrum_preconditions() {
        let w4 = Weight::zero(4).unwrap();
        assert_eq!(residual_spectrum(&w4, 1), Err(Error::NotPrime(4)));

        let nonconst = int_weight(5, &[1, 1, 1, 1, 0]);
        assert_eq!(
            residual_spectrum(&nonconst, 1),
            Err(Error::NonConstantCoefficient)
        );

        let odd_nd = int_weight(3, &[1, 1, 1]);
        assert_eq!(residual_spectrum(&odd_nd, 1), Err(Error::SheafVanishes));

        let halves = Weight::from_standard(3, vec![rat(1, 2); 3]).unwrap();
        assert_eq!(
            residual_spectrum(&halves, 1),
            Err(Error::NonIntegralWeight)
        );

        assert_eq!(
            residual_spectrum(&Weight::zero(5).unwrap(), 0),
            Err(Error::ZeroModulus)
        );
    }

    #[test]
    fn fibers_over_central_characters_partition_the_level() {
        // every character mod N is an n-th root of exactly one central
        // character, so the fiber sizes add up to φ(N)
        for (n, level) in [(3u64, 7u64), (5, 7), (5, 12), (7, 9)] {
            let chars = enumerate_characters(level).unwrap();
            let total: usize = chars.iter().map(|omega| omega.nth_roots(n).len()).sum();
            assert_eq!(total, chars.len(), "n={n} N={level}");
            let specs = residual_spectrum(&Weight::zero(n).unwrap(), level).unwrap();
            assert_eq!(specs.len(), chars.len());
        }
    }

    #[test]
    fn classify_rank_3_constant_is_all_zero() {
        let report = classify(&Weight::zero(3).unwrap(), 1).unwrap();
        assert_eq!(report.dim_sym(), 5);
        assert_eq!(report.verdicts().len(), 6);
        assert!(report.verdicts().values().all(|v| *v == Verdict::Zero));
    }

    #[test]
    fn classify_rank_5_constant() {
        let report = classify(&Weight::zero(5).unwrap(), 1).unwrap();
        for k in 0..=14u64 {
            let v = report.verdict(k).unwrap();
            if k == 5 || k == 9 {
                assert_eq!(
                    v,
                    &Verdict::ResidualKernel {
                        dim_upper_bound: 1,
                        symbolic: RESIDUAL_KERNEL_SYMBOL.to_string(),
                    }
                );
            } else {
                assert_eq!(v, &Verdict::Zero, "k={k}");
            }
        }
    }

    #[test]
    fn classify_level_scales_bound() {
        let report = classify(&Weight::zero(5).unwrap(), 7).unwrap();
        match report.verdict(5).unwrap() {
            Verdict::ResidualKernel {
                dim_upper_bound, ..
            } => assert_eq!(*dim_upper_bound, 6),
            other => panic!("expected ResidualKernel, got {other:?}"),
        }
    }

    #[test]
    fn classify_parity_gate() {
        let report = classify(&int_weight(2, &[1, 0]), 1).unwrap();
        assert!(report
            .verdicts()
            .values()
            .all(|v| *v == Verdict::SheafZero));
        // parity gate applies before the nonconstant gate
        let report = classify(&int_weight(3, &[2, 1, 0]), 1).unwrap();
        assert!(report
            .verdicts()
            .values()
            .all(|v| *v == Verdict::SheafZero));
    }

    #[test]
    fn classify_nonconstant_even() {
        let report = classify(&int_weight(3, &[3, 1, 0]), 1).unwrap();
        assert!(report
            .verdicts()
            .values()
            .all(|v| *v == Verdict::NonconstantZero));
    }

    #[test]
    fn classify_preconditions() {
        assert_eq!(
            classify(&Weight::zero(4).unwrap(), 1),
            Err(Error::NotPrime(4))
        );
        assert_eq!(
            classify(&int_weight(2, &[0, 1]), 1),
            Err(Error::NonDominantWeight)
        );
        let halves = Weight::from_standard(2, vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(classify(&halves, 1), Err(Error::NonIntegralWeight));
    }

    #[test]
    fn duality_endpoint_verdicts_agree() {
        for n in [2u64, 3, 5, 7, 11, 13] {
            assert!(duality_pairing_check(n).unwrap(), "n={n}");
        }
        assert_eq!(duality_pairing_check(6), Err(Error::NotPrime(6)));
    }

    #[test]
    fn report_json_shape() {
        let report = classify(&Weight::zero(3).unwrap(), 1).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.starts_with(
            r#"{"n":3,"weight":{"n":3,"b":["0","0","0"]},"level":1,"dim_sym":5,"verdicts":[{"k":0,"verdict":"Zero"}"#
        ));
        // deterministic byte-for-byte
        let again = serde_json::to_string(&classify(&Weight::zero(3).unwrap(), 1).unwrap()).unwrap();
        assert_eq!(json, again);

        let report5 = classify(&Weight::zero(5).unwrap(), 7).unwrap();
        let json5 = serde_json::to_string(&report5).unwrap();
        assert!(json5.contains(
            r#"{"k":5,"verdict":"ResidualKernel","bound":6,"symbolic":"ker(r^k | Φ_BG(Res_f(λ)))"}"#
        ));
    }

    #[test]
    fn report_markdown_contains_rows() {
        let report = classify(&Weight::zero(5).unwrap(), 1).unwrap();
        let md = report.to_markdown();
        assert!(md.contains("| k | verdict | bound | symbolic |"));
        assert!(md.contains("| 5 | ResidualKernel | 1 | ker(r^k \\| Φ_BG(Res_f(λ))) |"));
        assert!(md.contains("| 14 | Zero |  |  |"));
        assert!(md.contains("φ(N) = 1"));
    }
}
