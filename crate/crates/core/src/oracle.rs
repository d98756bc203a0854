//! Independent brute-force computation of everything the closed forms
//! predict: support weight distributions by two distinct methods, direct
//! lifted-code weight distributions, minimum distances, and Griesmer-bound
//! checks. No formula from `closedform` is used here.

use num_bigint::BigUint;
use num_traits::One;

use crate::closedform::{SupportWeightDistribution, WeightEnumerator};
use crate::error::{Error, Result};
use crate::field::make_tower;
use crate::matrix::{count_columns_in, enumerate_subspaces, MatrixGF};

/// Work guards for the exhaustive enumerations.
#[derive(Debug, Clone, Copy)]
pub struct EnumLimits {
    pub max_subspaces: u128,
    pub max_codewords: u128,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits {
            max_subspaces: 100_000_000,
            max_codewords: 1 << 28,
        }
    }
}

fn require_full_rank(g: &MatrixGF) -> Result<()> {
    if g.rank() != g.rows() {
        return Err(Error::RankDeficient);
    }
    Ok(())
}

/// For each j, iterate all (k-j)-dimensional subspaces U of GF(q)^k and
/// count the columns of `g` lying in U; a subspace containing n - i columns
/// contributes one j-dimensional subcode of support weight i.
pub fn swd_by_subspace_counting(
    g: &MatrixGF,
    limits: &EnumLimits,
) -> Result<SupportWeightDistribution> {
    require_full_rank(g)?;
    let k = g.rows();
    let n = g.cols();
    let mut swd = SupportWeightDistribution::new(g.field().q(), k, n);
    for j in 1..=k {
        for sub in enumerate_subspaces(g.field(), k, k - j, limits.max_subspaces)? {
            let contained = count_columns_in(&sub, g)?;
            swd.add_mass(j, n - contained, BigUint::one());
        }
    }
    Ok(swd)
}

/// For each j, iterate all j-dimensional subspaces W of the message space;
/// the subcode generated by W covers coordinate c exactly when some basis
/// vector of W has a nonzero inner product with column c.
pub fn swd_by_subcode_enumeration(
    g: &MatrixGF,
    limits: &EnumLimits,
) -> Result<SupportWeightDistribution> {
    require_full_rank(g)?;
    let f = g.field().clone();
    let k = g.rows();
    let n = g.cols();
    let columns: Vec<Vec<u64>> = (0..n).map(|c| g.column(c)).collect();
    let mut swd = SupportWeightDistribution::new(f.q(), k, n);
    for j in 1..=k {
        for sub in enumerate_subspaces(g.field(), k, j, limits.max_subspaces)? {
            let basis = sub.basis();
            let chi = columns
                .iter()
                .filter(|col| {
                    (0..basis.rows()).any(|r| {
                        let mut dot = 0;
                        for (c, &x) in col.iter().enumerate() {
                            dot = f.add(dot, f.mul(basis.get(r, c), x));
                        }
                        dot != 0
                    })
                })
                .count();
            swd.add_mass(j, chi, BigUint::one());
        }
    }
    Ok(swd)
}

/// Exact weight distribution of the lifted code over GF(q^l): embed the
/// generator into the degree-l tower and enumerate all q^(lk) messages.
pub fn direct_lifted_distribution(
    g: &MatrixGF,
    l: usize,
    limits: &EnumLimits,
) -> Result<WeightEnumerator> {
    let k = g.rows();
    let n = g.cols();
    let q = g.field().q();
    let total = (q as u128)
        .checked_pow((l * k) as u32)
        .ok_or(Error::EnumerationLimitExceeded {
            needed: u128::MAX,
            limit: limits.max_codewords,
        })?;
    if total > limits.max_codewords {
        return Err(Error::EnumerationLimitExceeded {
            needed: total,
            limit: limits.max_codewords,
        });
    }
    let tower = make_tower(g.field().clone(), l)?;
    // Base-field encodings are valid tower encodings, so rows embed as-is.
    let rows: Vec<Vec<u64>> = (0..k).map(|r| g.row(r).to_vec()).collect();
    let mut hist = std::collections::BTreeMap::<usize, u64>::new();

    // Depth-first over message digits, extending a partial codeword one row
    // at a time; each level reuses the sums of the previous one.
    fn recurse(
        tower: &crate::field::TowerSpec,
        rows: &[Vec<u64>],
        partial: &[u64],
        hist: &mut std::collections::BTreeMap<usize, u64>,
    ) {
        match rows.split_first() {
            None => {
                let w = partial.iter().filter(|&&x| x != 0).count();
                *hist.entry(w).or_insert(0) += 1;
            }
            Some((row, rest)) => {
                for v in 0..tower.size() {
                    if v == 0 {
                        recurse(tower, rest, partial, hist);
                    } else {
                        let next: Vec<u64> = partial
                            .iter()
                            .zip(row)
                            .map(|(&p, &r)| tower.add(p, tower.mul(v, r)))
                            .collect();
                        recurse(tower, rest, &next, hist);
                    }
                }
            }
        }
    }
    recurse(&tower, &rows, &vec![0; n], &mut hist);

    let mut we = WeightEnumerator::new();
    for (w, c) in hist {
        we.add_term(w, BigUint::from(c));
    }
    Ok(we)
}

/// Minimum nonzero codeword weight by exhaustive enumeration.
pub fn min_distance(g: &MatrixGF, limits: &EnumLimits) -> Result<u64> {
    let we = direct_lifted_distribution(g, 1, limits)?;
    we.min_positive_exponent()
        .map(|d| d as u64)
        .ok_or(Error::RankDeficient)
}

/// n minus the Griesmer sum; zero means the parameters meet the Griesmer
/// bound with equality.
pub fn griesmer_slack(n: u64, k: usize, d: u64, q: u64) -> i64 {
    let mut sum = 0u64;
    let mut denom = 1u64;
    for _ in 0..k {
        sum += d.div_ceil(denom);
        denom *= q;
    }
    n as i64 - sum as i64
}
