//! Characters of the unit group (ℤ/Nℤ)^× with exact values.
//!
//! The unit group is decomposed into cyclic factors (one per odd prime
//! power, and the usual ⟨-1⟩ × ⟨5⟩ split at powers of two); a character is
//! an exponent vector against the factor generators. Values are rational
//! exponents of a full turn, never floating point: χ(a) = e^{2πi·q} is
//! carried as the reduced fraction q ∈ [0, 1).

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::{crt, euler_phi, factorize, gcd, lcm, mod_inverse, multiplicative_order};
use crate::error::Error;
use crate::rational::{rat, rat_to_string, Rat};

/// One cyclic factor of the unit group: a generator and its order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicFactor {
    pub generator: u64,
    pub order: u64,
}

/// A prime-power block of the modulus and the factor indices it owns.
#[derive(Debug, Clone)]
struct PrimePart {
    prime: u64,
    exponent: u32,
    factor_indices: std::ops::Range<usize>,
}

#[derive(Debug)]
struct GroupInner {
    modulus: u64,
    factors: Vec<CyclicFactor>,
    parts: Vec<PrimePart>,
    // residue -> exponent vector against `factors`
    dlog: HashMap<u64, Vec<u64>>,
}

/// Internal direct-sum decomposition of (ℤ/Nℤ)^×, with a discrete-log
/// table built once at construction. Cheap to clone.
#[derive(Debug, Clone)]
pub struct UnitGroupStructure {
    inner: Arc<GroupInner>,
}

/// Decompose (ℤ/Nℤ)^× into cyclic factors.
///
/// Odd prime powers contribute one factor of order φ(p^k); the factor 2
/// contributes nothing, 4 contributes an order-2 factor, and 2^k for k ≥ 3
/// contributes an order-2 factor (the class of -1) and a factor of order
/// 2^{k-2} (the class of 5).
pub fn unit_group_structure(modulus: u64) -> Result<UnitGroupStructure, Error> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut factors = Vec::new();
    let mut parts = Vec::new();
    for (p, e) in factorize(modulus) {
        let q = p.pow(e);
        let cofactor = modulus / q;
        let start = factors.len();
        if p == 2 {
            if e == 2 {
                factors.push(CyclicFactor {
                    generator: lift(3, q, cofactor),
                    order: 2,
                });
            } else if e >= 3 {
                factors.push(CyclicFactor {
                    generator: lift(q - 1, q, cofactor),
                    order: 2,
                });
                factors.push(CyclicFactor {
                    generator: lift(5, q, cofactor),
                    order: 1 << (e - 2),
                });
            }
        } else {
            let g = primitive_root(q);
            factors.push(CyclicFactor {
                generator: lift(g, q, cofactor),
                order: euler_phi(q),
            });
        }
        parts.push(PrimePart {
            prime: p,
            exponent: e,
            factor_indices: start..factors.len(),
        });
    }

    let dlog = build_dlog_table(modulus, &factors);
    debug_assert_eq!(dlog.len() as u64, euler_phi(modulus));
    Ok(UnitGroupStructure {
        inner: Arc::new(GroupInner {
            modulus,
            factors,
            parts,
            dlog,
        }),
    })
}

/// Smallest generator of the (cyclic) unit group mod an odd prime power.
fn primitive_root(q: u64) -> u64 {
    let target = euler_phi(q);
    (2..q)
        .filter(|&c| gcd(c, q) == 1)
        .find(|&c| multiplicative_order(c, q) == target)
        .expect("odd prime powers have a primitive root")
}

/// Lift a unit mod q to the unit mod q·cofactor that is ≡ 1 mod cofactor.
fn lift(residue: u64, q: u64, cofactor: u64) -> u64 {
    if cofactor == 1 {
        residue % q
    } else {
        crt(residue % q, q, 1, cofactor)
    }
}

fn build_dlog_table(modulus: u64, factors: &[CyclicFactor]) -> HashMap<u64, Vec<u64>> {
    let mut table = HashMap::new();
    let mut exponents = vec![0u64; factors.len()];
    loop {
        let residue = if modulus == 1 {
            0
        } else {
            factors.iter().zip(&exponents).fold(1u64, |acc, (f, &e)| {
                (acc as u128 * crate::arith::mod_pow(f.generator, e, modulus) as u128
                    % modulus as u128) as u64
            })
        };
        table.insert(residue, exponents.clone());
        // mixed-radix increment, last factor fastest
        let mut i = exponents.len();
        loop {
            if i == 0 {
                return table;
            }
            i -= 1;
            exponents[i] += 1;
            if exponents[i] < factors[i].order {
                break;
            }
            exponents[i] = 0;
        }
    }
}

impl UnitGroupStructure {
    pub fn modulus(&self) -> u64 {
        self.inner.modulus
    }

    pub fn factors(&self) -> &[CyclicFactor] {
        &self.inner.factors
    }

    /// φ(N), the product of the factor orders.
    pub fn order(&self) -> u64 {
        self.inner.factors.iter().map(|f| f.order).product()
    }

    /// Exponent vector of a unit against the generators, reduced mod N.
    pub fn discrete_log(&self, a: u64) -> Option<&[u64]> {
        let r = if self.inner.modulus == 1 {
            0
        } else {
            a % self.inner.modulus
        };
        self.inner.dlog.get(&r).map(Vec::as_slice)
    }

    /// The character with the given exponent vector.
    pub fn character(&self, exponents: Vec<u64>) -> Result<DirichletCharacter, Error> {
        if exponents.len() != self.inner.factors.len() {
            return Err(Error::CoordinateCount {
                expected: self.inner.factors.len(),
                got: exponents.len(),
            });
        }
        let exponents = exponents
            .into_iter()
            .zip(&self.inner.factors)
            .map(|(e, f)| e % f.order)
            .collect();
        Ok(DirichletCharacter {
            group: self.clone(),
            exponents,
        })
    }

    pub fn principal_character(&self) -> DirichletCharacter {
        DirichletCharacter {
            group: self.clone(),
            exponents: vec![0; self.inner.factors.len()],
        }
    }

    /// All φ(N) characters; exponent vectors in mixed-radix order with the
    /// principal character first.
    pub fn characters(&self) -> Vec<DirichletCharacter> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut exponents = vec![0u64; self.inner.factors.len()];
        loop {
            out.push(DirichletCharacter {
                group: self.clone(),
                exponents: exponents.clone(),
            });
            let mut i = exponents.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                exponents[i] += 1;
                if exponents[i] < self.inner.factors[i].order {
                    break;
                }
                exponents[i] = 0;
            }
        }
    }
}

/// All φ(N) characters of (ℤ/Nℤ)^×, principal first.
pub fn enumerate_characters(modulus: u64) -> Result<Vec<DirichletCharacter>, Error> {
    Ok(unit_group_structure(modulus)?.characters())
}

/// Value of a character at one argument: zero off the units, otherwise an
/// exact root of unity e^{2πi·q} recorded by its turn fraction q ∈ [0, 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharacterValue {
    Zero,
    RootOfUnity(Rat),
}

impl CharacterValue {
    pub fn is_zero(&self) -> bool {
        matches!(self, CharacterValue::Zero)
    }

    pub fn is_one(&self) -> bool {
        matches!(self, CharacterValue::RootOfUnity(q) if q.is_zero())
    }

    /// The turn fraction q, if the value is a root of unity.
    pub fn turns(&self) -> Option<&Rat> {
        match self {
            CharacterValue::Zero => None,
            CharacterValue::RootOfUnity(q) => Some(q),
        }
    }
}

impl fmt::Display for CharacterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterValue::Zero => write!(f, "0"),
            CharacterValue::RootOfUnity(q) => write!(f, "e({})", rat_to_string(q)),
        }
    }
}

/// A character of (ℤ/Nℤ)^×, stored as exponents against the group's
/// cyclic generators: χ(g_i) = e^{2πi·e_i/m_i}.
#[derive(Clone)]
pub struct DirichletCharacter {
    group: UnitGroupStructure,
    exponents: Vec<u64>,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.group.modulus()
    }

    pub fn group(&self) -> &UnitGroupStructure {
        &self.group
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Order in the dual group: lcm of the per-factor orders.
    pub fn order(&self) -> u64 {
        self.exponents
            .iter()
            .zip(self.group.factors())
            .map(|(&e, f)| f.order / gcd(f.order, e))
            .fold(1, lcm)
    }

    /// k-th power, componentwise on exponents.
    pub fn pow(&self, k: u64) -> DirichletCharacter {
        let exponents = self
            .exponents
            .iter()
            .zip(self.group.factors())
            .map(|(&e, f)| (e as u128 * k as u128 % f.order as u128) as u64)
            .collect();
        DirichletCharacter {
            group: self.group.clone(),
            exponents,
        }
    }

    /// Evaluate at an integer; zero when gcd(a, N) > 1.
    pub fn evaluate(&self, a: u64) -> CharacterValue {
        match self.group.discrete_log(a) {
            None => CharacterValue::Zero,
            Some(log) => {
                let q: Rat = self
                    .exponents
                    .iter()
                    .zip(self.group.factors())
                    .zip(log)
                    .map(|((&e, f), &x)| {
                        rat((e as i128 * x as i128 % f.order as i128) as i64, f.order as i64)
                    })
                    .sum();
                let frac = &q - q.floor();
                CharacterValue::RootOfUnity(frac)
            }
        }
    }

    /// Least modulus dividing N through which the character factors.
    ///
    /// Computed multiplicatively across the prime-power blocks: an odd
    /// block of character order o contributes the least p^j with
    /// o | φ(p^j); at powers of two the ⟨5⟩-part of order o ≥ 2
    /// contributes 4o, and an order-2 ⟨-1⟩-part alone contributes 4.
    pub fn conductor(&self) -> u64 {
        let mut conductor = 1u64;
        for part in &self.group.inner.parts {
            conductor *= self.part_conductor(part);
        }
        conductor
    }

    fn part_conductor(&self, part: &PrimePart) -> u64 {
        let factors = &self.group.factors()[part.factor_indices.clone()];
        let exps = &self.exponents[part.factor_indices.clone()];
        if part.prime == 2 {
            match factors.len() {
                0 => 1,
                1 => {
                    // modulus block 4: single order-2 factor
                    if exps[0] == 0 {
                        1
                    } else {
                        4
                    }
                }
                _ => {
                    let five_order = factors[1].order / gcd(factors[1].order, exps[1]);
                    if five_order == 1 {
                        if exps[0] == 0 {
                            1
                        } else {
                            4
                        }
                    } else {
                        4 * five_order
                    }
                }
            }
        } else {
            let order = factors[0].order / gcd(factors[0].order, exps[0]);
            if order == 1 {
                return 1;
            }
            let p = part.prime;
            let mut q = p;
            for _ in 1..=part.exponent {
                if euler_phi(q) % order == 0 {
                    return q;
                }
                q *= p;
            }
            q / p // unreachable: order divides φ(p^e)
        }
    }

    /// All characters μ with μ^k equal to this character, solved factor by
    /// factor as the linear congruence k·x ≡ e_i (mod m_i).
    ///
    /// The fiber is empty unless gcd(k, m_i) divides e_i for every factor,
    /// and otherwise has exactly Π gcd(k, m_i) elements.
    pub fn nth_roots(&self, k: u64) -> Vec<DirichletCharacter> {
        let mut per_factor: Vec<Vec<u64>> = Vec::with_capacity(self.exponents.len());
        for (&e, f) in self.exponents.iter().zip(self.group.factors()) {
            let m = f.order;
            let kr = k % m;
            let g = gcd(kr, m);
            if e % g != 0 {
                return Vec::new();
            }
            let m_red = m / g;
            let base = if m_red == 1 {
                0
            } else {
                let inv = mod_inverse((kr / g) % m_red, m_red).expect("reduced k is invertible");
                ((e / g) as u128 % m_red as u128 * inv as u128 % m_red as u128) as u64
            };
            per_factor.push((0..g).map(|t| base + t * m_red).collect());
        }
        let mut out = vec![Vec::with_capacity(self.exponents.len())];
        for options in &per_factor {
            let mut next = Vec::with_capacity(out.len() * options.len());
            for prefix in &out {
                for &x in options {
                    let mut v = prefix.clone();
                    v.push(x);
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|exponents| DirichletCharacter {
                group: self.group.clone(),
                exponents,
            })
            .collect()
    }
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.exponents == other.exponents
    }
}

impl Eq for DirichletCharacter {}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirichletCharacter")
            .field("modulus", &self.modulus())
            .field("exponents", &self.exponents)
            .finish()
    }
}

impl Serialize for DirichletCharacter {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("DirichletCharacter", 4)?;
        st.serialize_field("modulus", &self.modulus())?;
        st.serialize_field("exponents", &self.exponents)?;
        st.serialize_field("conductor", &self.conductor())?;
        st.serialize_field("order", &self.order())?;
        st.end()
    }
}
