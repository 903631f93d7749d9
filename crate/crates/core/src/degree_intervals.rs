//! The degree bookkeeping for rank n: the dimension of the symmetric
//! space, the rational cusp-window endpoints a(n) ≤ b(n), and the split of
//! the full degree range [0, dim] into the distinguished endpoints, the
//! inner window (0, a), the cusp window [a, b], and the tail (b, dim).
//!
//! Interval membership is decided by exact rational comparison; there is
//! no rounding anywhere.

use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::{is_prime, triangular};
use crate::error::Error;
use crate::lie_cohomology::{generator_degrees, GeneratorDegrees};
use crate::rational::{
    integers_in_closed_interval, integers_in_open_interval, is_integer, rat, rat_to_string, Rat,
};

/// The integer-degree partition attached to rank n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    n: u64,
    dim_sym: u64,
    a: Rat,
    b: Rat,
    inner: BTreeSet<u64>,
    cusp: BTreeSet<u64>,
    irr: BTreeSet<u64>,
    s0: GeneratorDegrees,
}

/// dim X = C(n+1, 2) - 1 for GL(n) modulo center.
pub fn dim_symmetric_space(n: u64) -> Result<u64, Error> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    Ok(triangular(n) - 1)
}

/// Exact rational endpoints of the cusp window:
/// a = ½(C(n+1,2) - (n+1)/2) and b = ½(C(n+1,2) + (n+1)/2).
pub fn cusp_bounds(n: u64) -> Result<(Rat, Rat), Error> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    let binom = rat(triangular(n) as i64, 1);
    let half_span = rat(n as i64 + 1, 2);
    let a = (&binom - &half_span) / rat(2, 1);
    let b = (&binom + &half_span) / rat(2, 1);
    Ok((a, b))
}

/// Populate all interval pieces for rank n.
pub fn degree_profile(n: u64) -> Result<DegreeProfile, Error> {
    let dim_sym = dim_symmetric_space(n)?;
    let (a, b) = cusp_bounds(n)?;
    let zero = rat(0, 1);
    let dim_rat = rat(dim_sym as i64, 1);
    let inner = integers_in_open_interval(&zero, &a, dim_sym).into_iter().collect();
    let cusp = integers_in_closed_interval(&a, &b, dim_sym).into_iter().collect();
    let irr = integers_in_open_interval(&b, &dim_rat, dim_sym).into_iter().collect();
    let s0 = generator_degrees(n)?;
    Ok(DegreeProfile {
        n,
        dim_sym,
        a,
        b,
        inner,
        cusp,
        irr,
        s0,
    })
}

impl DegreeProfile {
    pub fn rank(&self) -> u64 {
        self.n
    }

    pub fn dim_sym(&self) -> u64 {
        self.dim_sym
    }

    /// Lower cusp-window endpoint a(n).
    pub fn a(&self) -> &Rat {
        &self.a
    }

    /// Upper cusp-window endpoint b(n).
    pub fn b(&self) -> &Rat {
        &self.b
    }

    /// Integers strictly between 0 and a(n).
    pub fn inner(&self) -> &BTreeSet<u64> {
        &self.inner
    }

    /// Integers k with a(n) ≤ k ≤ b(n).
    pub fn cusp(&self) -> &BTreeSet<u64> {
        &self.cusp
    }

    /// Integers strictly between b(n) and dim.
    pub fn irr(&self) -> &BTreeSet<u64> {
        &self.irr
    }

    pub fn s0(&self) -> &GeneratorDegrees {
        &self.s0
    }

    /// Full degree range [0, dim] as an iterator.
    pub fn all_degrees(&self) -> impl Iterator<Item = u64> {
        0..=self.dim_sym
    }

    /// Checks that {0, dim}, the inner window, the cusp window, and the
    /// tail cover [0, dim], with the three interval pieces pairwise
    /// disjoint and open at 0 and dim.
    ///
    /// The cusp window is allowed to reach an endpoint only where the
    /// rational bounds force it: at n = 2, b = 9/4 exceeds dim = 2, so the
    /// degree dim lies in both the endpoint pair and the cusp window.
    /// Coverage is counted once there; for every n ≥ 3 the four pieces are
    /// honestly disjoint.
    pub fn is_partition(&self) -> bool {
        let endpoints: BTreeSet<u64> = [0, self.dim_sym].into_iter().collect();
        if self.inner.intersection(&self.cusp).next().is_some()
            || self.cusp.intersection(&self.irr).next().is_some()
            || self.inner.intersection(&self.irr).next().is_some()
        {
            return false;
        }
        if self.inner.intersection(&endpoints).next().is_some()
            || self.irr.intersection(&endpoints).next().is_some()
        {
            return false;
        }
        let mut union = endpoints;
        union.extend(&self.inner);
        union.extend(&self.cusp);
        union.extend(&self.irr);
        union == self.all_degrees().collect()
    }
}

impl Serialize for DegreeProfile {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("DegreeProfile", 8)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("dim_sym", &self.dim_sym)?;
        st.serialize_field("a", &rat_to_string(&self.a))?;
        st.serialize_field("b", &rat_to_string(&self.b))?;
        st.serialize_field("i_inner", &self.inner)?;
        st.serialize_field("i_cusp", &self.cusp)?;
        st.serialize_field("i_irr", &self.irr)?;
        st.serialize_field("s0", &self.s0.degrees())?;
        st.end()
    }
}

/// Intersection of the generator degrees with the cusp window. For prime
/// rank this is {2n-1} at n = 5, 7 and empty for n = 2, 3 and all primes
/// from 11 on.
pub fn s0_cusp_overlap(n: u64) -> Result<BTreeSet<u64>, Error> {
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    let profile = degree_profile(n)?;
    Ok(profile
        .s0
        .degrees()
        .intersection(&profile.cusp)
        .copied()
        .collect())
}

/// One row of the summary table for a prime rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: u64,
    pub dim_sym: u64,
    pub a: Rat,
    pub b: Rat,
    pub cusp: BTreeSet<u64>,
    pub s0: BTreeSet<u64>,
}

/// Summary row (rank, dimension, cusp window, generator degrees).
pub fn table_row(n: u64) -> Result<TableRow, Error> {
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    let profile = degree_profile(n)?;
    Ok(TableRow {
        n,
        dim_sym: profile.dim_sym,
        a: profile.a.clone(),
        b: profile.b.clone(),
        cusp: profile.cusp.clone(),
        s0: profile.s0.degrees().clone(),
    })
}

/// Render a degree set as `{5,9,13}`, with `∅` for the empty set.
pub fn format_degree_set(set: &BTreeSet<u64>) -> String {
    if set.is_empty() {
        return "∅".to_string();
    }
    let items: Vec<String> = set.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

impl TableRow {
    /// The cusp-window cell: `[a,b]` when both endpoints are integers,
    /// otherwise `[a,b] = {…}` listing the integer degrees inside.
    pub fn cusp_cell(&self) -> String {
        let interval = format!("[{},{}]", rat_to_string(&self.a), rat_to_string(&self.b));
        if is_integer(&self.a) && is_integer(&self.b) {
            interval
        } else {
            format!("{} = {}", interval, format_degree_set(&self.cusp))
        }
    }

    /// The generator-degree cell, e.g. `{5,9}` or `∅`.
    pub fn s0_cell(&self) -> String {
        format_degree_set(&self.s0)
    }

    /// All four cells in table column order: n, dim, cusp window, degrees.
    pub fn cells(&self) -> [String; 4] {
        [
            self.n.to_string(),
            self.dim_sym.to_string(),
            self.cusp_cell(),
            self.s0_cell(),
        ]
    }
}

impl Serialize for TableRow {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("TableRow", 6)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("dim_sym", &self.dim_sym)?;
        st.serialize_field("a", &rat_to_string(&self.a))?;
        st.serialize_field("b", &rat_to_string(&self.b))?;
        st.serialize_field("i_cusp", &self.cusp)?;
        st.serialize_field("s0", &self.s0)?;
        st.end()
    }
}
