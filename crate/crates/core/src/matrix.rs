//! Dense linear algebra over a [`FieldSpec`]: reduced row echelon form,
//! rank, span membership, and canonical exhaustive enumeration of
//! d-dimensional subspaces of GF(q)^k.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{make_field, FieldSpec};
use crate::qcombin::gaussian_binomial;

/// Span sets are materialized only while q^dim stays below this.
const SPAN_SET_LIMIT: u64 = 1 << 20;

/// A dense row-major matrix over a finite field; entries are element
/// encodings in [0, q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGF {
    field: Arc<FieldSpec>,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl MatrixGF {
    pub fn zero(field: Arc<FieldSpec>, rows: usize, cols: usize) -> Self {
        MatrixGF {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Arc<FieldSpec>, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: Arc<FieldSpec>, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Parse("ragged rows".into()));
            }
            for &e in r {
                if e >= field.q() {
                    return Err(Error::Parse(format!("entry {e} out of range")));
                }
                entries.push(e);
            }
        }
        Ok(MatrixGF {
            field,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Build a k x n matrix from its columns.
    pub fn from_columns(field: Arc<FieldSpec>, k: usize, columns: &[Vec<u64>]) -> Result<Self> {
        let mut m = Self::zero(field, k, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != k {
                return Err(Error::Parse("column length mismatch".into()));
            }
            for (r, &e) in col.iter().enumerate() {
                m.set(r, c, e);
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// Stack the rows of `other` below `self`.
    pub fn stacked(&self, other: &MatrixGF) -> Result<MatrixGF> {
        if self.cols != other.cols || self.field != other.field {
            return Err(Error::DimensionMismatch);
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(MatrixGF {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// The unique reduced row echelon form with zero rows dropped, and the
    /// rank.
    pub fn rref(&self) -> (MatrixGF, usize) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..m.cols {
                    let (a, b) = (m.get(pivot_row, c), m.get(src, c));
                    m.set(pivot_row, c, b);
                    m.set(src, c, a);
                }
            }
            let inv = f.inv(m.get(pivot_row, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                m.set(pivot_row, c, f.mul(m.get(pivot_row, c), inv));
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(pivot_row, c)));
                    m.set(r, c, v);
                }
            }
            pivot_row += 1;
        }
        let rank = pivot_row;
        m.entries.truncate(rank * m.cols);
        m.rows = rank;
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Text format: first line `p^m k n`, then k lines of n space-separated
    /// element encodings. Round-trips bit-exactly.
    pub fn to_text(&self) -> String {
        let f = &self.field;
        let mut out = String::new();
        let q = if f.m() == 1 {
            format!("{}", f.p())
        } else {
            format!("{}^{}", f.p(), f.m())
        };
        let _ = writeln!(out, "{q} {} {}", self.rows, self.cols);
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<MatrixGF> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix".into()))?;
        let mut parts = header.split_whitespace();
        let field_tok = parts
            .next()
            .ok_or_else(|| Error::Parse("missing field".into()))?;
        let (p, m) = parse_field_token(field_tok)?;
        let rows: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse("bad row count".into()))?;
        let cols: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse("bad column count".into()))?;
        let field = make_field(p, m, None)?;
        let mut data = Vec::with_capacity(rows);
        for _ in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing row".into()))?;
            let row: Vec<u64> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad entry {t}")))
                })
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(Error::Parse("row length mismatch".into()));
            }
            data.push(row);
        }
        MatrixGF::from_rows(field, &data)
    }
}

/// Parse a field denotation like `3`, `3^1`, or `2^3` into (p, m).
pub fn parse_field_token(tok: &str) -> Result<(u64, usize)> {
    let (p, m) = match tok.split_once('^') {
        Some((p, m)) => (
            p.parse()
                .map_err(|_| Error::Parse(format!("bad prime {p}")))?,
            m.parse()
                .map_err(|_| Error::Parse(format!("bad degree {m}")))?,
        ),
        None => (
            tok.parse()
                .map_err(|_| Error::Parse(format!("bad field {tok}")))?,
            1,
        ),
    };
    Ok((p, m))
}

/// Encode a vector over GF(q) as an integer key (base-q digits, first
/// coordinate most significant).
pub fn encode_vector(field: &FieldSpec, v: &[u64]) -> u128 {
    let q = field.q() as u128;
    v.iter().fold(0u128, |acc, &c| acc * q + c as u128)
}

/// A subspace of GF(q)^k in canonical form: the basis matrix is in RREF with
/// zero rows dropped, so equal subspaces have identical bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: MatrixGF,
    ambient_dim: usize,
}

impl Subspace {
    /// Canonicalize a spanning set into a subspace.
    pub fn from_generators(m: &MatrixGF) -> Subspace {
        let (basis, _) = m.rref();
        Subspace {
            ambient_dim: m.cols(),
            basis,
        }
    }

    pub fn zero(field: Arc<FieldSpec>, ambient_dim: usize) -> Subspace {
        Subspace {
            basis: MatrixGF::zero(field, 0, ambient_dim),
            ambient_dim,
        }
    }

    pub fn basis(&self) -> &MatrixGF {
        &self.basis
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn field(&self) -> &Arc<FieldSpec> {
        self.basis.field()
    }

    /// All vectors of the subspace, as encodings.
    pub fn span_encodings(&self) -> HashSet<u128> {
        let f = self.basis.field().clone();
        let q = f.q();
        let d = self.dim();
        let mut set = HashSet::with_capacity(q.pow(d as u32) as usize);
        let mut coeffs = vec![0u64; d];
        loop {
            let mut v = vec![0u64; self.ambient_dim];
            for (i, &c) in coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (j, vj) in v.iter_mut().enumerate() {
                    *vj = f.add(*vj, f.mul(c, self.basis.get(i, j)));
                }
            }
            set.insert(encode_vector(&f, &v));
            let mut i = d;
            loop {
                if i == 0 {
                    return set;
                }
                i -= 1;
                coeffs[i] += 1;
                if coeffs[i] < q {
                    break;
                }
                coeffs[i] = 0;
            }
        }
    }

    /// Membership by rank test.
    pub fn contains(&self, v: &[u64]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch);
        }
        if self.dim() == 0 {
            return Ok(v.iter().all(|&c| c == 0));
        }
        let row = MatrixGF::from_rows(self.basis.field().clone(), &[v.to_vec()])?;
        Ok(self.basis.stacked(&row)?.rank() == self.dim())
    }
}

/// dim(a n b), computed as dim(a) + dim(b) - rank of the stacked bases.
pub fn intersection_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch);
    }
    let rank = a.basis().stacked(b.basis())?.rank();
    Ok(a.dim() + b.dim() - rank)
}

/// Number of columns of `g` (with multiplicity) lying in `sub`.
pub fn count_columns_in(sub: &Subspace, g: &MatrixGF) -> Result<usize> {
    if sub.ambient_dim() != g.rows() {
        return Err(Error::DimensionMismatch);
    }
    let q = g.field().q();
    let spanable = (sub.dim() as u32) < 64
        && q.checked_pow(sub.dim() as u32)
            .map_or(false, |s| s <= SPAN_SET_LIMIT);
    if spanable {
        let span = sub.span_encodings();
        let f = g.field();
        Ok((0..g.cols())
            .filter(|&c| span.contains(&encode_vector(f, &g.column(c))))
            .count())
    } else {
        let mut count = 0;
        for c in 0..g.cols() {
            if sub.contains(&g.column(c))? {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// Streams every d-dimensional subspace of GF(q)^k exactly once, in a
/// deterministic order: pivot-column signatures lexicographically, then free
/// entries as a base-q odometer.
pub struct SubspaceIter {
    field: Arc<FieldSpec>,
    k: usize,
    d: usize,
    pivots: Vec<usize>,
    free_positions: Vec<(usize, usize)>,
    free_values: Vec<u64>,
    done: bool,
}

/// Enumerate the d-dimensional subspaces of GF(q)^k. The total count equals
/// [k choose d]_q and is checked against `limit` up front.
pub fn enumerate_subspaces(
    field: &Arc<FieldSpec>,
    k: usize,
    d: usize,
    limit: u128,
) -> Result<SubspaceIter> {
    if d > k {
        return Err(Error::InvalidDims(format!("d = {d} exceeds k = {k}")));
    }
    let count = gaussian_binomial(k as i64, d as i64, field.q())?;
    let count: u128 = count
        .try_into()
        .map_err(|_| Error::EnumerationLimitExceeded {
            needed: u128::MAX,
            limit,
        })?;
    if count > limit {
        return Err(Error::EnumerationLimitExceeded {
            needed: count,
            limit,
        });
    }
    let pivots: Vec<usize> = (0..d).collect();
    let mut it = SubspaceIter {
        field: field.clone(),
        k,
        d,
        pivots,
        free_positions: vec![],
        free_values: vec![],
        done: false,
    };
    it.reset_free();
    Ok(it)
}

impl SubspaceIter {
    fn reset_free(&mut self) {
        self.free_positions.clear();
        for (i, &p) in self.pivots.iter().enumerate() {
            for j in p + 1..self.k {
                if !self.pivots.contains(&j) {
                    self.free_positions.push((i, j));
                }
            }
        }
        self.free_values = vec![0; self.free_positions.len()];
    }

    fn build(&self) -> Subspace {
        let mut basis = MatrixGF::zero(self.field.clone(), self.d, self.k);
        for (i, &p) in self.pivots.iter().enumerate() {
            basis.set(i, p, 1);
        }
        for (&(r, c), &v) in self.free_positions.iter().zip(&self.free_values) {
            basis.set(r, c, v);
        }
        Subspace {
            basis,
            ambient_dim: self.k,
        }
    }

    fn advance(&mut self) {
        let q = self.field.q();
        // Odometer over free entries, last position fastest.
        let mut i = self.free_values.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            self.free_values[i] += 1;
            if self.free_values[i] < q {
                return;
            }
            self.free_values[i] = 0;
        }
        // Next pivot signature in lexicographic order.
        if self.d == 0 {
            self.done = true;
            return;
        }
        let mut i = self.d;
        loop {
            if i == 0 {
                self.done = true;
                return;
            }
            i -= 1;
            if self.pivots[i] < self.k - (self.d - i) {
                self.pivots[i] += 1;
                for j in i + 1..self.d {
                    self.pivots[j] = self.pivots[i] + (j - i);
                }
                self.reset_free();
                return;
            }
        }
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let out = self.build();
        self.advance();
        Some(out)
    }
}
