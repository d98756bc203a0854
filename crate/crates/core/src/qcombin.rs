//! Exact q-analog combinatorics: Gaussian binomial coefficients, the falling
//! products (q^l - 1)(q^l - q)...(q^l - q^(j-1)), and the subspace counts
//! behind the closed-form support weight distributions.
//!
//! Everything here is arbitrary-precision integer arithmetic; out-of-range
//! indices return 0 rather than erroring, so sums over t-ranges can be
//! written without edge-case branching.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

static GB_CACHE: Mutex<Option<HashMap<(u64, u64, u64), BigUint>>> = Mutex::new(None);

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidQ(q));
    }
    Ok(())
}

/// The Gaussian binomial coefficient [n choose k]_q: the number of
/// k-dimensional subspaces of an n-dimensional space over GF(q).
///
/// Returns 0 for k < 0 or k > n, and 1 for k = 0; computed by the q-Pascal
/// recurrence [n,k] = [n-1,k-1] + q^k [n-1,k] with memoization.
pub fn gaussian_binomial(n: i64, k: i64, q: u64) -> Result<BigUint> {
    check_q(q)?;
    if k < 0 || k > n {
        return Ok(BigUint::zero());
    }
    if k == 0 {
        return Ok(BigUint::one());
    }
    let mut guard = GB_CACHE.lock().unwrap();
    let cache = guard.get_or_insert_with(HashMap::new);
    Ok(gb_memo(n as u64, k as u64, q, cache))
}

fn gb_memo(n: u64, k: u64, q: u64, cache: &mut HashMap<(u64, u64, u64), BigUint>) -> BigUint {
    if k == 0 || k == n {
        return BigUint::one();
    }
    if k > n {
        return BigUint::zero();
    }
    if let Some(v) = cache.get(&(n, k, q)) {
        return v.clone();
    }
    let a = gb_memo(n - 1, k - 1, q, cache);
    let b = gb_memo(n - 1, k, q, cache);
    let v = a + BigUint::from(q).pow(k as u32) * b;
    cache.insert((n, k, q), v.clone());
    v
}

/// Quotient-formula cross-check for [n choose k]_q; the division is exact.
pub fn gaussian_binomial_product(n: i64, k: i64, q: u64) -> Result<BigUint> {
    check_q(q)?;
    if k < 0 || k > n {
        return Ok(BigUint::zero());
    }
    let (n, k) = (n as u32, k as u32);
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow(n) - q.pow(i);
        den *= q.pow(k) - q.pow(i);
    }
    debug_assert!(
        (&num % &den).is_zero(),
        "Gaussian binomial division must be exact"
    );
    Ok(num / den)
}

/// The j-term product (q^l - 1)(q^l - q)...(q^l - q^(j-1)); the number of
/// ordered j-tuples of linearly independent vectors in GF(q^l). Zero when
/// j > l, which is what makes high-j terms of the lifting formula vanish.
pub fn q_falling(q: u64, l: u64, j: u64) -> Result<BigUint> {
    check_q(q)?;
    if j > l {
        return Ok(BigUint::zero());
    }
    let q = BigUint::from(q);
    let mut out = BigUint::one();
    for i in 0..j {
        out *= q.pow(l as u32) - q.pow(i as u32);
    }
    Ok(out)
}

/// Number of j-dimensional subspaces V of GF(q)^k with dim(V n S_u) = t for
/// a fixed u-dimensional subspace S_u:
/// q^((u-t)(j-t)) [k-u choose j-t]_q [u choose t]_q.
pub fn single_subspace_count(k: i64, u: i64, j: i64, t: i64, q: u64) -> Result<BigUint> {
    check_q(q)?;
    let a = gaussian_binomial(k - u, j - t, q)?;
    let b = gaussian_binomial(u, t, q)?;
    if a.is_zero() || b.is_zero() {
        return Ok(BigUint::zero());
    }
    // Brackets nonzero forces t <= min(u, j), so the exponent is >= 0.
    let e = ((u - t) * (j - t)) as u32;
    Ok(BigUint::from(q).pow(e) * a * b)
}

/// Number of (t+t1+t2)-dimensional subspaces V of S_{u1} + S_{u2} (a direct
/// sum) with dim(V n S_{u1}) = t1 and dim(V n S_{u2}) = t2.
pub fn pair_block_count(u1: i64, u2: i64, t1: i64, t2: i64, t: i64, q: u64) -> Result<BigUint> {
    check_q(q)?;
    if t < 0 {
        return Ok(BigUint::zero());
    }
    let b1 = gaussian_binomial(u1, t1, q)?;
    let b2 = gaussian_binomial(u2, t2, q)?;
    if t == 0 {
        return Ok(b1 * b2);
    }
    let c1 = gaussian_binomial(u1 - t1, t, q)?;
    let c2 = gaussian_binomial(u2 - t2, t, q)?;
    Ok(q_falling(q, t as u64, t as u64)? * c1 * c2 * b1 * b2)
}

/// Number of j-dimensional subspaces V of GF(q)^k with dim(V n S_{u1}) = t1
/// and dim(V n S_{u2}) = t2, for fixed subspaces meeting trivially.
pub fn pair_subspace_count(
    k: i64,
    j: i64,
    u1: i64,
    u2: i64,
    t1: i64,
    t2: i64,
    q: u64,
) -> Result<BigUint> {
    check_q(q)?;
    if u1 + u2 > k {
        return Err(Error::InvalidDims(format!(
            "u1 + u2 = {} exceeds k = {k}",
            u1 + u2
        )));
    }
    if t1 < 0 || t2 < 0 || t1 > u1 || t2 > u2 {
        return Ok(BigUint::zero());
    }
    let tmax = (u1 - t1).min(u2 - t2);
    let mut total = BigUint::zero();
    for t in 0..=tmax {
        let s = j - t - t1 - t2;
        let outer = gaussian_binomial(k - u1 - u2, s, q)?;
        if outer.is_zero() {
            continue;
        }
        let inner = pair_block_count(u1, u2, t1, t2, t, q)?;
        if inner.is_zero() {
            continue;
        }
        // Bracket nonzero gives 0 <= s <= k-u1-u2, and t+t1+t2 <= u1+u2,
        // so both exponent factors are >= 0.
        let e = ((u1 + u2 - t - t1 - t2) * s) as u32;
        total += BigUint::from(q).pow(e) * inner * outer;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gb(n: i64, k: i64, q: u64) -> BigUint {
        gaussian_binomial(n, k, q).unwrap()
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gb(5, 0, 2), BigUint::one());
        assert_eq!(gb(3, 1, 2), BigUint::from(7u32));
        assert_eq!(gb(5, 2, 2), gb(5, 3, 2));
        assert_eq!(gb(2, 3, 3), BigUint::zero());
        assert!(gaussian_binomial(3, 1, 1).is_err());
    }

    #[test]
    fn recurrence_matches_product_formula() {
        for q in [2, 3, 4, 5] {
            for n in 0..=10i64 {
                for k in -1..=n + 1 {
                    assert_eq!(
                        gb(n, k, q),
                        gaussian_binomial_product(n, k, q).unwrap(),
                        "n={n} k={k} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn q_falling_examples() {
        assert_eq!(q_falling(3, 2, 1).unwrap(), BigUint::from(8u32));
        assert_eq!(q_falling(3, 2, 3).unwrap(), BigUint::zero());
        // (8-1)(8-2) = 42: ordered pairs of independent vectors in GF(8)^2.
        assert_eq!(q_falling(2, 3, 2).unwrap(), BigUint::from(42u32));
        assert_eq!(q_falling(5, 4, 0).unwrap(), BigUint::one());
    }

    #[test]
    fn single_subspace_count_examples() {
        assert_eq!(
            single_subspace_count(3, 2, 2, 1, 3).unwrap(),
            BigUint::from(12u32)
        );
        assert_eq!(
            single_subspace_count(3, 2, 1, 0, 3).unwrap(),
            BigUint::from(9u32)
        );
        // t > min(u, j) vanishes.
        assert_eq!(
            single_subspace_count(5, 2, 1, 2, 2).unwrap(),
            BigUint::zero()
        );
    }

    #[test]
    fn pair_block_count_examples() {
        assert_eq!(pair_block_count(2, 3, 0, 0, 0, 2).unwrap(), BigUint::one());
        // 1-dim subspaces of GF(2)^5 meeting <e1,e2> and <e3,e4,e5>
        // trivially: 31 - 3 - 7 = 21.
        assert_eq!(
            pair_block_count(2, 3, 0, 0, 1, 2).unwrap(),
            BigUint::from(21u32)
        );
        assert_eq!(pair_block_count(2, 3, 2, 0, 1, 2).unwrap(), BigUint::zero());
    }

    #[test]
    fn pair_subspace_count_examples() {
        assert_eq!(
            pair_subspace_count(6, 5, 2, 3, 2, 3, 2).unwrap(),
            BigUint::one()
        );
        // t1 = u1, t2 = u2, j = k: only the full space.
        assert_eq!(
            pair_subspace_count(5, 5, 2, 3, 2, 3, 3).unwrap(),
            BigUint::one()
        );
        assert!(pair_subspace_count(4, 2, 2, 3, 1, 1, 2).is_err());
    }

    #[test]
    fn partition_identity() {
        // Partition identity: sum over t of N(k,u,j,t) = [k choose j]_q.
        for q in [2u64, 3, 4, 5] {
            for k in 1..=8i64 {
                for u in 1..k {
                    for j in 0..=k {
                        let mut total = BigUint::zero();
                        for t in 0..=u {
                            total += single_subspace_count(k, u, j, t, q).unwrap();
                        }
                        assert_eq!(total, gb(k, j, q), "q={q} k={k} u={u} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn pascal_like_identity_u1() {
        for q in [2u64, 3, 4, 5] {
            for k in 1..=8i64 {
                for j in 0..=k {
                    let lhs =
                        BigUint::from(q).pow(j as u32) * gb(k - 1, j, q) + gb(k - 1, j - 1, q);
                    assert_eq!(lhs, gb(k, j, q), "q={q} k={k} j={j}");
                }
            }
        }
    }

    #[test]
    fn pair_partition_identity() {
        for q in [2u64, 3] {
            for k in 2..=6i64 {
                for u1 in 1..k {
                    for u2 in 1..=(k - u1).min(k - 1) {
                        for j in 0..=k {
                            let mut total = BigUint::zero();
                            for t1 in 0..=u1 {
                                for t2 in 0..=u2 {
                                    total += pair_subspace_count(k, j, u1, u2, t1, t2, q).unwrap();
                                }
                            }
                            assert_eq!(total, gb(k, j, q), "q={q} k={k} u1={u1} u2={u2} j={j}");
                        }
                    }
                }
            }
        }
    }
}
