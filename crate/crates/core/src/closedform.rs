//! Closed-form support weight distributions of Simplex and Solomon-Stiffler
//! codes (one or two punctured subspaces), lifted weight enumerator
//! polynomials, and weight hierarchies.
//!
//! All tables refer to the FULL construction (every vector outside the
//! punctures as a column); the projective tables follow by dividing every
//! support weight by q - 1, since the full code is the (q-1)-fold scalar
//! repetition of the projective one.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qcombin::{gaussian_binomial, pair_subspace_count, q_falling, single_subspace_count};

/// Sparse table (j, i) -> A_i^(j): the number of j-dimensional subcodes with
/// support weight i, with exact integer counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportWeightDistribution {
    pub q: u64,
    pub k: usize,
    pub n: usize,
    table: BTreeMap<usize, BTreeMap<usize, BigUint>>,
}

impl SupportWeightDistribution {
    pub fn new(q: u64, k: usize, n: usize) -> Self {
        SupportWeightDistribution {
            q,
            k,
            n,
            table: BTreeMap::new(),
        }
    }

    /// Accumulate mass at (j, i); zero masses are not stored.
    pub fn add_mass(&mut self, j: usize, i: usize, count: BigUint) {
        if count.is_zero() {
            return;
        }
        *self
            .table
            .entry(j)
            .or_default()
            .entry(i)
            .or_insert_with(BigUint::zero) += count;
    }

    pub fn get(&self, j: usize, i: usize) -> BigUint {
        self.table
            .get(&j)
            .and_then(|row| row.get(&i))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn row(&self, j: usize) -> Option<&BTreeMap<usize, BigUint>> {
        self.table.get(&j)
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &BTreeMap<usize, BigUint>)> {
        self.table.iter().map(|(&j, row)| (j, row))
    }

    /// Sum over i of A_i^(j); equals [k choose j]_q for a full table.
    pub fn column_sum(&self, j: usize) -> BigUint {
        self.table
            .get(&j)
            .map(|row| row.values().sum())
            .unwrap_or_else(BigUint::zero)
    }

    /// min { i : A_i^(j) > 0 }, the j-th generalized Hamming weight.
    pub fn min_support_weight(&self, j: usize) -> Option<usize> {
        self.table
            .get(&j)
            .and_then(|row| row.keys().next().copied())
    }

    /// Divide every support weight (and the length) by `d`; used to derive
    /// the projective table from the full one with d = q - 1.
    pub fn divide_weights(&self, d: u64) -> Result<SupportWeightDistribution> {
        let d = d as usize;
        if self.n % d != 0 {
            return Err(Error::NonDivisibleExponent {
                exp: self.n,
                divisor: d as u64,
            });
        }
        let mut out = SupportWeightDistribution::new(self.q, self.k, self.n / d);
        for (j, row) in self.rows() {
            for (&i, c) in row {
                if i % d != 0 {
                    return Err(Error::NonDivisibleExponent {
                        exp: i,
                        divisor: d as u64,
                    });
                }
                out.add_mass(j, i / d, c.clone());
            }
        }
        Ok(out)
    }
}

/// Sparse univariate polynomial with arbitrary-precision coefficients;
/// exponent = Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightEnumerator {
    coeffs: BTreeMap<usize, BigUint>,
}

impl WeightEnumerator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, exp: usize, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.coeffs.entry(exp).or_insert_with(BigUint::zero) += coeff;
    }

    pub fn coeff(&self, exp: usize) -> BigUint {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Sum of all coefficients: the number of codewords.
    pub fn total(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    /// Minimum nonzero-weight exponent.
    pub fn min_positive_exponent(&self) -> Option<usize> {
        self.coeffs.keys().find(|&&e| e > 0).copied()
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&e, c)| {
                if e == 0 {
                    format!("{c}")
                } else if c.is_one() {
                    format!("z^{e}")
                } else {
                    format!("{c}z^{e}")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// The substitution z^(q-1) -> z: every nonzero exponent is divided by
/// q - 1, turning a full-construction enumerator into the projective one.
pub fn projective_transform(full: &WeightEnumerator, q: u64) -> Result<WeightEnumerator> {
    let d = (q - 1) as usize;
    if d == 1 {
        return Ok(full.clone());
    }
    let mut out = WeightEnumerator::new();
    for (e, c) in full.iter() {
        if e % d != 0 {
            return Err(Error::NonDivisibleExponent {
                exp: e,
                divisor: q - 1,
            });
        }
        out.add_term(e / d, c.clone());
    }
    Ok(out)
}

/// The generalized Hamming weights d_1 < d_2 < ... < d_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightHierarchy {
    pub values: Vec<u64>,
}

impl WeightHierarchy {
    pub fn divide(&self, d: u64) -> Result<WeightHierarchy> {
        let values = self
            .values
            .iter()
            .map(|&v| {
                if v % d != 0 {
                    Err(Error::NonDivisibleExponent {
                        exp: v as usize,
                        divisor: d,
                    })
                } else {
                    Ok(v / d)
                }
            })
            .collect::<Result<_>>()?;
        Ok(WeightHierarchy { values })
    }
}

impl fmt::Display for WeightHierarchy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn pow(q: u64, e: usize) -> u64 {
    q.checked_pow(e as u32).expect("q^e overflows u64")
}

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidQ(q));
    }
    Ok(())
}

/// Support weight distribution of the [ (q^k-1)/(q-1), k ] Simplex code:
/// for each j a single entry at i = (q^k - q^(k-j))/(q-1) with mass
/// [k choose j]_q.
pub fn swd_simplex(q: u64, k: usize) -> Result<SupportWeightDistribution> {
    check_q(q)?;
    let n = ((pow(q, k) - 1) / (q - 1)) as usize;
    let mut swd = SupportWeightDistribution::new(q, k, n);
    for j in 1..=k {
        let i = ((pow(q, k) - pow(q, k - j)) / (q - 1)) as usize;
        swd.add_mass(j, i, gaussian_binomial(k as i64, j as i64, q)?);
    }
    Ok(swd)
}

/// Support weight distribution of the full code with generator
/// [S_k \ S_u], length n = q^k - q^u: for each j, mass N(k,u,k-j,t) at
/// i = n - (q^(k-j) - q^t) over the admissible t.
pub fn swd_p1(q: u64, k: usize, u: usize) -> Result<SupportWeightDistribution> {
    check_q(q)?;
    if u < 1 || u + 1 > k {
        return Err(Error::InvalidDims(format!("u = {u} outside 1..={}", k - 1)));
    }
    let n = (pow(q, k) - pow(q, u)) as usize;
    let mut swd = SupportWeightDistribution::new(q, k, n);
    for j in 1..=k {
        for t in 0..=u {
            let mass = single_subspace_count(k as i64, u as i64, (k - j) as i64, t as i64, q)?;
            if mass.is_zero() {
                continue;
            }
            let i = n - (pow(q, k - j) - pow(q, t)) as usize;
            swd.add_mass(j, i, mass);
        }
    }
    Ok(swd)
}

/// Support weight distribution of the full code with generator
/// [S_k \ (S_{u1} u S_{u2})], length n = q^k - q^(u1) - q^(u2) + 1.
///
/// Iterates ordered pairs (t1, t2); the subspace count vanishes outside the
/// admissible range, and the ordered sum reproduces the unordered
/// N(t1,t2) + N(t2,t1) pairing exactly.
pub fn swd_p2(q: u64, k: usize, u1: usize, u2: usize) -> Result<SupportWeightDistribution> {
    check_q(q)?;
    if u1 < 1 || u2 < 1 || u1 + u2 > k {
        return Err(Error::InvalidDims(format!(
            "need 1 <= u1, u2 and u1 + u2 <= k; got u1={u1} u2={u2} k={k}"
        )));
    }
    let n = (pow(q, k) - pow(q, u1) - pow(q, u2) + 1) as usize;
    let mut swd = SupportWeightDistribution::new(q, k, n);
    for j in 1..=k {
        for t1 in 0..=u1 {
            for t2 in 0..=u2 {
                let mass = pair_subspace_count(
                    k as i64,
                    (k - j) as i64,
                    u1 as i64,
                    u2 as i64,
                    t1 as i64,
                    t2 as i64,
                    q,
                )?;
                if mass.is_zero() {
                    continue;
                }
                // Signed intermediate: q^(k-j) can be smaller than either
                // subtrahend even though the total is >= 0 whenever the
                // count is nonzero (t1 + t2 <= k - j).
                let covered = pow(q, k - j) as i128 - pow(q, t1) as i128 - pow(q, t2) as i128 + 1;
                debug_assert!(covered >= 0);
                let i = n - covered as usize;
                swd.add_mass(j, i, mass);
            }
        }
    }
    Ok(swd)
}

/// The u1 = 1 specialization evaluated through its own three-branch closed
/// form; must equal `swd_p2(q, k, 1, u)` entrywise.
pub fn swd_p2_u1eq1(q: u64, k: usize, u: usize) -> Result<SupportWeightDistribution> {
    check_q(q)?;
    if u < 1 || 1 + u > k {
        return Err(Error::InvalidDims(format!(
            "need 1 <= u and 1 + u <= k; got u={u} k={k}"
        )));
    }
    let n = (pow(q, k) - pow(q, u) - q + 1) as usize;
    let qb = BigUint::from(q);
    let mut swd = SupportWeightDistribution::new(q, k, n);
    let gb = |top: i64, bot: i64| gaussian_binomial(top, bot, q);
    let (ki, ui) = (k as i64, u as i64);
    for j in 1..=k {
        let kj = (k - j) as i64;

        // Pairs {t1, t2} = {0, 1}: n - i = q^(k-j) - q.
        {
            let mut mass = BigUint::zero();
            let b1 = gb(ki - ui - 1, kj - 1)?;
            if !b1.is_zero() {
                let e = (ui * (kj - 1)) as u32;
                mass += qb.pow(e) * (gb(ui, 1)? + BigUint::one()) * b1;
            }
            let b2 = gb(ki - ui - 1, kj - 2)?;
            if !b2.is_zero() {
                let e = ((ui - 1) * (kj - 2)) as u32;
                let num =
                    (qb.pow(u as u32) - BigUint::one()) * (qb.pow(u as u32 - 1) - BigUint::one());
                mass += qb.pow(e) * (num / (&qb - BigUint::one())) * b2;
            }
            if !mass.is_zero() {
                let i = n - (pow(q, k - j) - q) as usize;
                swd.add_mass(j, i, mass);
            }
        }

        // t1 = 0, t2 = t with t != 1: n - i = q^(k-j) - q^t. The stated
        // form q^((u-t)(k-j-t-1)) [u,t] (q^(u-t) [k-u, k-j-t] - [k-u-1,
        // k-j-t-1]) is expanded so both powers stay non-negative whenever
        // their bracket is nonzero.
        for t in 0..=ui {
            if t == 1 {
                continue;
            }
            let bracket_u = gb(ui, t)?;
            if bracket_u.is_zero() {
                continue;
            }
            let mut mass = BigUint::zero();
            let ba = gb(ki - ui, kj - t)?;
            if !ba.is_zero() {
                let e = ((ui - t) * (kj - t)) as u32;
                mass += qb.pow(e) * &bracket_u * ba;
            }
            let bb = gb(ki - ui - 1, kj - t - 1)?;
            if !bb.is_zero() {
                let e = ((ui - t) * (kj - t - 1)) as u32;
                mass -= qb.pow(e) * &bracket_u * bb;
            }
            if !mass.is_zero() {
                let i = n - (pow(q, k - j) - pow(q, t as usize)) as usize;
                swd.add_mass(j, i, mass);
            }
        }

        // t1 = 1, t2 = t with t != 0: n - i = q^(k-j) - q^t - q + 1.
        for t in 1..=ui {
            let b1 = gb(ki - ui - 1, kj - t - 1)?;
            let b2 = gb(ui, t)?;
            if b1.is_zero() || b2.is_zero() {
                continue;
            }
            let e = ((ui - t) * (kj - t - 1)) as u32;
            let mass = qb.pow(e) * b1 * b2;
            let covered = pow(q, k - j) - pow(q, t as usize) - q + 1;
            let i = n - covered as usize;
            swd.add_mass(j, i, mass);
        }
    }
    Ok(swd)
}

/// The l = 1 weight enumerator of the full two-puncture code, straight from
/// its four-weight table; when u1 = u2 the middle weights coincide and the
/// frequencies add.
pub fn wd_l1_p2(q: u64, k: usize, u1: usize, u2: usize) -> Result<WeightEnumerator> {
    check_q(q)?;
    if u1 < 1 || u2 < 1 || u1 + u2 > k {
        return Err(Error::InvalidDims(format!(
            "need 1 <= u1, u2 and u1 + u2 <= k; got u1={u1} u2={u2} k={k}"
        )));
    }
    let mut we = WeightEnumerator::new();
    we.add_term(0, BigUint::one());
    let w_top = (pow(q, k) - pow(q, k - 1)) as usize;
    we.add_term(w_top, BigUint::from(pow(q, k - u1 - u2) - 1));
    let w_mid2 = ((q - 1) * (pow(q, k - 1) - pow(q, u2 - 1))) as usize;
    we.add_term(w_mid2, BigUint::from(pow(q, k - u1) - pow(q, k - u1 - u2)));
    let w_mid1 = ((q - 1) * (pow(q, k - 1) - pow(q, u1 - 1))) as usize;
    we.add_term(w_mid1, BigUint::from(pow(q, k - u2) - pow(q, k - u1 - u2)));
    let w_min = ((q - 1) * (pow(q, k - 1) - pow(q, u1 - 1) - pow(q, u2 - 1))) as usize;
    we.add_term(
        w_min,
        BigUint::from(pow(q, k - u1 - u2)) * (pow(q, u1) - 1) * (pow(q, u2) - 1),
    );
    Ok(we)
}

/// Weight enumerator of the lifted code over GF(q^l):
/// A_l(z) = 1 + sum_{i,j} A_i^(j) (q^l - 1)(q^l - q)...(q^l - q^(j-1)) z^i.
/// Terms with j > l vanish through the falling product.
pub fn lifted_weight_enumerator(
    swd: &SupportWeightDistribution,
    l: usize,
) -> Result<WeightEnumerator> {
    let mut we = WeightEnumerator::new();
    we.add_term(0, BigUint::one());
    for (j, row) in swd.rows() {
        let factor = q_falling(swd.q, l as u64, j as u64)?;
        if factor.is_zero() {
            continue;
        }
        for (&i, c) in row {
            we.add_term(i, c * &factor);
        }
    }
    Ok(we)
}

/// Weight hierarchy of the full one-puncture code.
pub fn hierarchy_p1(q: u64, k: usize, u: usize) -> Result<WeightHierarchy> {
    check_q(q)?;
    if u < 1 || u + 1 > k {
        return Err(Error::InvalidDims(format!("u = {u} outside 1..={}", k - 1)));
    }
    let values = (1..=k)
        .map(|j| {
            if j < u {
                pow(q, k) - pow(q, u) - pow(q, k - j) + pow(q, u - j)
            } else {
                pow(q, k) - pow(q, u) - pow(q, k - j) + 1
            }
        })
        .collect();
    Ok(WeightHierarchy { values })
}

/// Weight hierarchy of the full two-puncture code (four branches depending
/// on the position of j relative to u1 and u2).
pub fn hierarchy_p2(q: u64, k: usize, u1: usize, u2: usize) -> Result<WeightHierarchy> {
    check_q(q)?;
    if u1 < 1 || u2 < 1 || u1 + u2 > k {
        return Err(Error::InvalidDims(format!(
            "need 1 <= u1, u2 and u1 + u2 <= k; got u1={u1} u2={u2} k={k}"
        )));
    }
    let base = pow(q, k) as i128 - pow(q, u1) as i128 - pow(q, u2) as i128;
    let values = (1..=k)
        .map(|j| {
            let tail = match (j < u1, j < u2) {
                (true, true) => pow(q, u1 - j) + pow(q, u2 - j),
                (true, false) => pow(q, u1 - j) + 1,
                (false, true) => pow(q, u2 - j) + 1,
                (false, false) => 2,
            };
            // Signed intermediates: base alone can dip below q^(k-j).
            let v = base - pow(q, k - j) as i128 + tail as i128;
            debug_assert!(v >= 0);
            v as u64
        })
        .collect();
    Ok(WeightHierarchy { values })
}

/// Weight hierarchy of the Simplex code: d_j = (q^k - q^(k-j))/(q - 1).
pub fn hierarchy_simplex(q: u64, k: usize) -> Result<WeightHierarchy> {
    check_q(q)?;
    let values = (1..=k)
        .map(|j| (pow(q, k) - pow(q, k - j)) / (q - 1))
        .collect();
    Ok(WeightHierarchy { values })
}
