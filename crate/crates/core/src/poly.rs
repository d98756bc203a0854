//! Internal polynomial helpers used to build extension fields.
//!
//! Polynomials are coefficient vectors over some base field, constant term
//! first. The base field is abstracted behind [`Arith`] so the same routines
//! serve both GF(p) (when building GF(p^m)) and GF(q) (when building a
//! degree-l tower for lifting).

use crate::error::{Error, Result};

/// Minimal field interface over integer-encoded elements in [0, size).
pub(crate) trait Arith {
    fn size(&self) -> u64;
    fn add(&self, a: u64, b: u64) -> u64;
    fn sub(&self, a: u64, b: u64) -> u64;
    fn mul(&self, a: u64, b: u64) -> u64;
    fn inv(&self, a: u64) -> Result<u64>;
}

/// GF(p) for prime p.
pub(crate) struct PrimeField(pub u64);

impl Arith for PrimeField {
    fn size(&self) -> u64 {
        self.0
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }
    fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat; p is small.
        let mut acc = 1u64;
        let mut base = a % self.0;
        let mut e = self.0 - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            e >>= 1;
        }
        Ok(acc)
    }
}

pub(crate) fn trim(mut p: Vec<u64>) -> Vec<u64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub(crate) fn deg(p: &[u64]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

pub(crate) fn poly_add<B: Arith>(b: &B, x: &[u64], y: &[u64]) -> Vec<u64> {
    let n = x.len().max(y.len());
    let mut out = vec![0; n];
    for (i, o) in out.iter_mut().enumerate() {
        let xa = x.get(i).copied().unwrap_or(0);
        let ya = y.get(i).copied().unwrap_or(0);
        *o = b.add(xa, ya);
    }
    trim(out)
}

pub(crate) fn poly_mul<B: Arith>(b: &B, x: &[u64], y: &[u64]) -> Vec<u64> {
    if x.is_empty() || y.is_empty() {
        return vec![];
    }
    let mut out = vec![0; x.len() + y.len() - 1];
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate() {
            out[i + j] = b.add(out[i + j], b.mul(xi, yj));
        }
    }
    trim(out)
}

/// Remainder of x modulo a monic polynomial `m`.
pub(crate) fn poly_rem<B: Arith>(b: &B, x: &[u64], m: &[u64]) -> Vec<u64> {
    let md = deg(m).expect("modulus must be nonzero");
    debug_assert_eq!(m[md], 1, "modulus must be monic");
    let mut r = trim(x.to_vec());
    while let Some(rd) = deg(&r) {
        if rd < md {
            break;
        }
        let c = r[rd];
        let shift = rd - md;
        for (i, &mi) in m.iter().enumerate().take(md + 1) {
            r[i + shift] = b.sub(r[i + shift], b.mul(c, mi));
        }
        r = trim(r);
    }
    r
}

pub(crate) fn poly_mulmod<B: Arith>(b: &B, x: &[u64], y: &[u64], m: &[u64]) -> Vec<u64> {
    poly_rem(b, &poly_mul(b, x, y), m)
}

pub(crate) fn poly_powmod<B: Arith>(b: &B, x: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1];
    let mut base = poly_rem(b, x, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(b, &acc, &base, m);
        }
        base = poly_mulmod(b, &base, &base, m);
        e >>= 1;
    }
    acc
}

fn poly_gcd<B: Arith>(b: &B, x: &[u64], y: &[u64]) -> Vec<u64> {
    let mut a = trim(x.to_vec());
    let mut c = trim(y.to_vec());
    while !c.is_empty() {
        // Make c monic so poly_rem applies.
        let cd = deg(&c).unwrap();
        let lead_inv = b.inv(c[cd]).unwrap();
        let monic: Vec<u64> = c.iter().map(|&ci| b.mul(ci, lead_inv)).collect();
        let r = poly_rem(b, &a, &monic);
        a = monic;
        c = r;
    }
    a
}

/// Irreducibility over the base field, for monic `m` of degree d >= 1.
///
/// Uses the Rabin test: x^(Q^d) == x mod m, and gcd(x^(Q^(d/r)) - x, m) = 1
/// for every prime r dividing d.
pub(crate) fn is_irreducible<B: Arith>(b: &B, m: &[u64]) -> bool {
    let d = match deg(m) {
        Some(d) if d >= 1 && m[d] == 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    let x = vec![0, 1];
    // frob[i] = x^(Q^i) mod m, built by repeated Q-th powering.
    let mut y = x.clone();
    let mut frob = vec![x.clone()];
    for _ in 0..d {
        y = poly_powmod(b, &y, b.size(), m);
        frob.push(y.clone());
    }
    if frob[d] != x {
        return false;
    }
    let mut rem = d;
    let mut primes = vec![];
    let mut f = 2;
    while f * f <= rem {
        if rem % f == 0 {
            primes.push(f);
            while rem % f == 0 {
                rem /= f;
            }
        }
        f += 1;
    }
    if rem > 1 {
        primes.push(rem);
    }
    for r in primes {
        let diff = poly_add(b, &frob[d / r], &negate(b, &x));
        let g = poly_gcd(b, &diff, m);
        if deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

fn negate<B: Arith>(b: &B, x: &[u64]) -> Vec<u64> {
    x.iter().map(|&c| b.sub(0, c)).collect()
}

/// Lexicographically first monic irreducible polynomial of degree d over the
/// base field; coefficients compared constant-term first.
pub(crate) fn first_irreducible<B: Arith>(b: &B, d: usize) -> Vec<u64> {
    let q = b.size();
    assert!(d >= 1);
    if d == 1 {
        // x itself.
        return vec![0, 1];
    }
    let mut coeffs = vec![0u64; d];
    loop {
        let mut m = coeffs.clone();
        m.push(1);
        if is_irreducible(b, &m) {
            return m;
        }
        // Advance (c0, c1, ..., c_{d-1}) in lexicographic tuple order.
        let mut i = d;
        loop {
            assert!(i > 0, "no irreducible polynomial found");
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < q {
                break;
            }
            coeffs[i] = 0;
        }
    }
}
