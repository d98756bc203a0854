//! Exact arithmetic in GF(p^m), and in degree-l towers GF(q^l) over a base
//! field, used when lifting a code to an extension field.
//!
//! Elements are encoded as integers in [0, q): the base-p digits of the
//! encoding are the coefficients of the residue polynomial, constant term
//! least significant. For a tower over GF(q) the digits are base-q and each
//! digit is itself a base-field encoding, so embedding a base element is the
//! identity on encodings.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{self, Arith, PrimeField};

/// Log/antilog tables are only built up to this field size.
const TABLE_LIMIT: u64 = 1 << 16;

/// A concrete finite field GF(p^m) with a fixed irreducible modulus.
#[derive(Debug)]
pub struct FieldSpec {
    p: u64,
    m: usize,
    q: u64,
    /// Monic irreducible of degree m over GF(p), constant term first.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

#[derive(Debug)]
struct Tables {
    exp: Vec<u64>,
    log: Vec<u64>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Construct GF(p^m). When `modulus` is omitted the lexicographically first
/// monic irreducible of degree m over GF(p) is selected, so the same (p, m)
/// always yields the same field.
pub fn make_field(p: u64, m: usize, modulus: Option<Vec<u64>>) -> Result<Arc<FieldSpec>> {
    if !is_prime(p) {
        return Err(Error::NonPrimeP(p));
    }
    if m < 1 {
        return Err(Error::DegreeMismatch);
    }
    let base = PrimeField(p);
    let modulus = match modulus {
        Some(md) => {
            let md = poly::trim(md);
            if poly::deg(&md) != Some(m) || md[m] != 1 || md.iter().any(|&c| c >= p) {
                return Err(Error::DegreeMismatch);
            }
            if !poly::is_irreducible(&base, &md) {
                return Err(Error::ReducibleModulus);
            }
            md
        }
        None => poly::first_irreducible(&base, m),
    };
    let q = p.checked_pow(m as u32).expect("q overflow");
    let mut spec = FieldSpec {
        p,
        m,
        q,
        modulus,
        tables: None,
    };
    if q <= TABLE_LIMIT {
        let tables = build_tables(spec.q, spec.primitive_raw(), |a, b| spec.raw_mul(a, b));
        spec.tables = Some(tables);
    }
    Ok(Arc::new(spec))
}

fn build_tables(q: u64, generator: u64, mul: impl Fn(u64, u64) -> u64) -> Tables {
    let mut exp = vec![0u64; (q - 1) as usize];
    let mut log = vec![0u64; q as usize];
    let mut cur = 1u64;
    for (i, e) in exp.iter_mut().enumerate() {
        *e = cur;
        log[cur as usize] = i as u64;
        cur = mul(cur, generator);
    }
    debug_assert_eq!(cur, 1);
    Tables { exp, log }
}

impl FieldSpec {
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn digits(&self, x: u64) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.m);
        let mut x = x;
        for _ in 0..self.m {
            v.push(x % self.p);
            x /= self.p;
        }
        v
    }

    fn undigits(&self, d: &[u64]) -> u64 {
        let mut x = 0;
        for &c in d.iter().rev() {
            x = x * self.p + c;
        }
        x
    }

    fn raw_mul(&self, a: u64, b: u64) -> u64 {
        if self.m == 1 {
            return a * b % self.p;
        }
        let base = PrimeField(self.p);
        let prod = poly::poly_mulmod(&base, &self.digits(a), &self.digits(b), &self.modulus);
        let mut d = prod;
        d.resize(self.m, 0);
        self.undigits(&d)
    }

    fn raw_pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(acc, base);
            }
            base = self.raw_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn order_is_full(&self, a: u64) -> bool {
        prime_factors(self.q - 1)
            .iter()
            .all(|&r| self.raw_pow(a, (self.q - 1) / r) != 1)
    }

    fn primitive_raw(&self) -> u64 {
        (1..self.q)
            .find(|&a| self.order_is_full(a))
            .expect("every finite field has a primitive element")
    }

    /// Smallest element (by encoding) of multiplicative order q-1.
    pub fn primitive_element(&self) -> u64 {
        if self.q == 2 {
            return 1;
        }
        match &self.tables {
            // exp[1] is the generator the tables were built from, which is
            // the smallest primitive element by construction.
            Some(t) => t.exp[1],
            None => self.primitive_raw(),
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.m == 1 {
            (a + b) % self.p
        } else {
            let mut out = 0;
            let mut pw = 1;
            let (mut a, mut b) = (a, b);
            for _ in 0..self.m {
                out += (a % self.p + b % self.p) % self.p * pw;
                a /= self.p;
                b /= self.p;
                pw *= self.p;
            }
            out
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.m == 1 {
            (self.p - a) % self.p
        } else {
            let mut out = 0;
            let mut pw = 1;
            let mut a = a;
            for _ in 0..self.m {
                out += (self.p - a % self.p) % self.p * pw;
                a /= self.p;
                pw *= self.p;
            }
            out
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let s = (t.log[a as usize] + t.log[b as usize]) % (self.q - 1);
                t.exp[s as usize]
            }
            None => self.raw_mul(a, b),
        }
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => {
                let l = t.log[a as usize];
                t.exp[((self.q - 1 - l) % (self.q - 1)) as usize]
            }
            None => self.raw_pow(a, self.q - 2),
        })
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        let mut acc = 1;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.q - 1;
        for r in prime_factors(self.q - 1) {
            while ord % r == 0 && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        Ok(ord)
    }
}

impl Arith for FieldSpec {
    fn size(&self) -> u64 {
        self.q
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        FieldSpec::add(self, a, b)
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        FieldSpec::sub(self, a, b)
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        FieldSpec::mul(self, a, b)
    }
    fn inv(&self, a: u64) -> Result<u64> {
        FieldSpec::inv(self, a)
    }
}

/// An element of a field, carrying a handle to its [`FieldSpec`].
#[derive(Debug, Clone)]
pub struct FieldElement {
    pub value: u64,
    pub field: Arc<FieldSpec>,
}

impl FieldElement {
    pub fn new(value: u64, field: Arc<FieldSpec>) -> Result<Self> {
        if value >= field.q() {
            return Err(Error::Parse(format!(
                "element {value} out of range for field of size {}",
                field.q()
            )));
        }
        Ok(FieldElement { value, field })
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(FieldElement {
            value: self.field.add(self.value, other.value),
            field: self.field.clone(),
        })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(FieldElement {
            value: self.field.sub(self.value, other.value),
            field: self.field.clone(),
        })
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(FieldElement {
            value: self.field.mul(self.value, other.value),
            field: self.field.clone(),
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(FieldElement {
            value: self.field.div(self.value, other.value)?,
            field: self.field.clone(),
        })
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

/// A degree-l extension GF(q^l) built as a tower over a base [`FieldSpec`].
///
/// Element encodings are integers in [0, q^l) whose base-q digits are the
/// coefficient vector over the base field, constant term least significant.
#[derive(Debug)]
pub struct TowerSpec {
    base: Arc<FieldSpec>,
    degree: usize,
    /// Monic irreducible of degree l over GF(q), coefficients are base-field
    /// encodings, constant term first.
    modulus: Vec<u64>,
    qext: u64,
    tables: Option<Tables>,
}

/// Build the tower GF(q^l) over `base`, with the lexicographically first
/// monic irreducible modulus of degree l over GF(q).
pub fn make_tower(base: Arc<FieldSpec>, degree: usize) -> Result<Arc<TowerSpec>> {
    if degree < 1 {
        return Err(Error::DegreeMismatch);
    }
    let modulus = poly::first_irreducible(base.as_ref(), degree);
    let qext = base
        .q()
        .checked_pow(degree as u32)
        .ok_or(Error::DegreeMismatch)?;
    let mut spec = TowerSpec {
        base,
        degree,
        modulus,
        qext,
        tables: None,
    };
    if qext <= TABLE_LIMIT {
        let tables = build_tables(qext, spec.primitive_raw(), |a, b| spec.raw_mul(a, b));
        spec.tables = Some(tables);
    }
    Ok(Arc::new(spec))
}

impl TowerSpec {
    pub fn base(&self) -> &Arc<FieldSpec> {
        &self.base
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    /// Field size q^l.
    pub fn size(&self) -> u64 {
        self.qext
    }

    /// A base element viewed as a constant polynomial; the encoding is
    /// unchanged.
    pub fn embed(&self, x: u64) -> u64 {
        debug_assert!(x < self.base.q());
        x
    }

    fn digits(&self, x: u64) -> Vec<u64> {
        let q = self.base.q();
        let mut v = Vec::with_capacity(self.degree);
        let mut x = x;
        for _ in 0..self.degree {
            v.push(x % q);
            x /= q;
        }
        v
    }

    fn undigits(&self, d: &[u64]) -> u64 {
        let q = self.base.q();
        let mut x = 0;
        for &c in d.iter().rev() {
            x = x * q + c;
        }
        x
    }

    fn raw_mul(&self, a: u64, b: u64) -> u64 {
        if self.degree == 1 {
            return self.base.mul(a, b);
        }
        let prod = poly::poly_mulmod(
            self.base.as_ref(),
            &self.digits(a),
            &self.digits(b),
            &self.modulus,
        );
        let mut d = prod;
        d.resize(self.degree, 0);
        self.undigits(&d)
    }

    fn raw_pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(acc, base);
            }
            base = self.raw_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn primitive_raw(&self) -> u64 {
        let n = self.qext - 1;
        let factors = prime_factors(n);
        (1..self.qext)
            .find(|&a| factors.iter().all(|&r| self.raw_pow(a, n / r) != 1))
            .expect("every finite field has a primitive element")
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let q = self.base.q();
        let mut out = 0;
        let mut pw = 1;
        let (mut a, mut b) = (a, b);
        for _ in 0..self.degree {
            out += self.base.add(a % q, b % q) * pw;
            a /= q;
            b /= q;
            pw *= q;
        }
        out
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let s = (t.log[a as usize] + t.log[b as usize]) % (self.qext - 1);
                t.exp[s as usize]
            }
            None => self.raw_mul(a, b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_field_examples() {
        let f2 = make_field(2, 1, None).unwrap();
        assert_eq!(f2.q(), 2);
        assert_eq!(f2.modulus(), &[0, 1]);

        // GF(9): lexicographically first monic irreducible quadratic over
        // GF(3) is x^2 + 1 (oracle: root search in poly::tests).
        let f9 = make_field(3, 2, None).unwrap();
        assert_eq!(f9.q(), 9);
        assert_eq!(f9.modulus(), &[1, 0, 1]);

        assert!(matches!(make_field(4, 1, None), Err(Error::NonPrimeP(4))));
        assert!(matches!(
            make_field(2, 2, Some(vec![1, 0, 1])),
            Err(Error::ReducibleModulus)
        ));
        assert!(matches!(
            make_field(2, 2, Some(vec![1, 1])),
            Err(Error::DegreeMismatch)
        ));
    }

    #[test]
    fn arith_examples() {
        let f3 = make_field(3, 1, None).unwrap();
        assert_eq!(f3.add(2, 2), 1);

        // GF(4) with modulus x^2+x+1: x * x = x + 1, i.e. 2 * 2 = 3.
        let f4 = make_field(2, 2, Some(vec![1, 1, 1])).unwrap();
        assert_eq!(f4.mul(2, 2), 3);

        let f2 = make_field(2, 1, None).unwrap();
        assert_eq!(f2.div(1, 1).unwrap(), 1);
        assert!(matches!(f2.div(1, 0), Err(Error::DivisionByZero)));
    }

    #[test]
    fn field_element_mismatch() {
        let f2 = make_field(2, 1, None).unwrap();
        let f3 = make_field(3, 1, None).unwrap();
        let a = FieldElement::new(1, f2).unwrap();
        let b = FieldElement::new(1, f3).unwrap();
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch)));
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(make_field(2, 1, None).unwrap().primitive_element(), 1);
        let f3 = make_field(3, 1, None).unwrap();
        assert_eq!(f3.primitive_element(), 2);
        assert_eq!(f3.element_order(2).unwrap(), 2);
        let f5 = make_field(5, 1, None).unwrap();
        assert_eq!(f5.primitive_element(), 2);
        assert_eq!(f5.element_order(2).unwrap(), 4);
    }

    fn exhaustive_axioms(f: &FieldSpec) {
        let q = f.q();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, m) in [
            (2, 1),
            (3, 1),
            (2, 2),
            (5, 1),
            (2, 3),
            (3, 2),
            (7, 1),
            (2, 4),
            (2, 5),
            (2, 6),
        ] {
            exhaustive_axioms(&make_field(p, m, None).unwrap());
        }
    }

    #[test]
    fn deterministic_rebuild() {
        for (p, m) in [(2, 3), (3, 2), (5, 2)] {
            let a = make_field(p, m, None).unwrap();
            let b = make_field(p, m, None).unwrap();
            assert_eq!(a.modulus(), b.modulus());
            for x in 0..a.q() {
                for y in 0..a.q() {
                    assert_eq!(a.mul(x, y), b.mul(x, y));
                }
            }
        }
    }

    #[test]
    fn tower_examples() {
        let f3 = make_field(3, 1, None).unwrap();
        let t1 = make_tower(f3.clone(), 1).unwrap();
        assert_eq!(t1.embed(2), 2);
        assert_eq!(t1.size(), 3);

        let f2 = make_field(2, 1, None).unwrap();
        let t3 = make_tower(f2, 3).unwrap();
        assert_eq!(t3.size(), 8);
        assert_eq!(t3.mul(t3.embed(1), t3.embed(1)), t3.embed(1));

        let t2 = make_tower(f3, 2).unwrap();
        assert_eq!(t2.size(), 9);
    }

    #[test]
    fn embed_is_a_ring_homomorphism() {
        // Exhaustive for base q <= 16, l <= 3.
        for (p, m) in [
            (2, 1),
            (3, 1),
            (2, 2),
            (5, 1),
            (7, 1),
            (2, 3),
            (3, 2),
            (13, 1),
            (2, 4),
        ] {
            let base = make_field(p, m, None).unwrap();
            for l in 1..=3usize {
                if base.q().pow(l as u32) > 1 << 16 {
                    continue;
                }
                let t = make_tower(base.clone(), l).unwrap();
                assert_eq!(t.embed(0), 0);
                assert_eq!(t.embed(1), 1);
                let mut seen = std::collections::HashSet::new();
                for a in 0..base.q() {
                    assert!(seen.insert(t.embed(a)), "embed must be injective");
                    for b in 0..base.q() {
                        assert_eq!(t.embed(base.add(a, b)), t.add(t.embed(a), t.embed(b)));
                        assert_eq!(t.embed(base.mul(a, b)), t.mul(t.embed(a), t.embed(b)));
                    }
                }
            }
        }
    }

    #[test]
    fn tower_field_axioms_small() {
        let f3 = make_field(3, 1, None).unwrap();
        let t = make_tower(f3, 2).unwrap();
        let n = t.size();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(t.add(a, b), t.add(b, a));
                assert_eq!(t.mul(a, b), t.mul(b, a));
                for c in 0..n {
                    assert_eq!(t.mul(a, t.mul(b, c)), t.mul(t.mul(a, b), c));
                    assert_eq!(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c)));
                }
            }
        }
    }
}
