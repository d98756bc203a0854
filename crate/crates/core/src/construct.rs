//! Deterministic construction of generator matrices: Simplex codes, full
//! Solomon-Stiffler codes (all vectors outside the punctured subspaces), and
//! their projective codes (one column per projective point).

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::{encode_vector, intersection_dim, MatrixGF, Subspace};

/// Column ordering of a constructed generator matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColumnOrder {
    /// Global lexicographic order of column encodings.
    #[default]
    Lex,
    /// For the full construction: projective columns followed by their
    /// scalar multiples, one block per power of the primitive element.
    Block,
}

/// A Solomon-Stiffler code instance: GF(q), dimension k, the punctured
/// subspaces S_{u_i}, and whether the projective or the full column set is
/// taken.
#[derive(Debug, Clone)]
pub struct SolomonStifflerSpec {
    pub field: Arc<FieldSpec>,
    pub k: usize,
    pub punctures: Vec<Subspace>,
    pub projective: bool,
}

impl SolomonStifflerSpec {
    /// Validate the subspace hypotheses: 1 <= u_i <= k-1, sum u_i <= k,
    /// pairwise trivial intersections. With `strict`, additionally require
    /// the u_i to be pairwise distinct.
    pub fn new(
        field: Arc<FieldSpec>,
        k: usize,
        punctures: Vec<Subspace>,
        projective: bool,
        strict: bool,
    ) -> Result<Self> {
        let mut total = 0;
        for s in &punctures {
            if s.ambient_dim() != k {
                return Err(Error::SpecInvariantViolation(format!(
                    "puncture ambient dimension {} does not match k = {k}",
                    s.ambient_dim()
                )));
            }
            if s.field() != &field {
                return Err(Error::FieldMismatch);
            }
            let u = s.dim();
            if u < 1 || u > k.saturating_sub(1) {
                return Err(Error::SpecInvariantViolation(format!(
                    "puncture dimension {u} outside 1..={}",
                    k.saturating_sub(1)
                )));
            }
            total += u;
        }
        if total > k {
            return Err(Error::SpecInvariantViolation(format!(
                "puncture dimensions sum to {total} > k = {k}"
            )));
        }
        for i in 0..punctures.len() {
            for j in i + 1..punctures.len() {
                if intersection_dim(&punctures[i], &punctures[j])? != 0 {
                    return Err(Error::SpecInvariantViolation(format!(
                        "punctures {i} and {j} intersect nontrivially"
                    )));
                }
                if strict && punctures[i].dim() == punctures[j].dim() {
                    return Err(Error::SpecInvariantViolation(format!(
                        "punctures {i} and {j} have equal dimension (strict mode)"
                    )));
                }
            }
        }
        Ok(SolomonStifflerSpec {
            field,
            k,
            punctures,
            projective,
        })
    }
}

/// A constructed code: generator matrix plus the parameters the construction
/// guarantees.
#[derive(Debug, Clone)]
pub struct CodeInstance {
    pub generator: MatrixGF,
    pub n: usize,
    pub k: usize,
    /// Minimum distance the construction promises; verified by the oracle.
    pub expected_min_distance: u64,
}

fn decode_vector(field: &FieldSpec, enc: u64, k: usize) -> Vec<u64> {
    let q = field.q();
    let mut v = vec![0u64; k];
    let mut e = enc;
    for i in (0..k).rev() {
        v[i] = e % q;
        e /= q;
    }
    v
}

/// One normalized representative per 1-dimensional subspace of GF(q)^k:
/// first nonzero coordinate equal to 1, ordered lexicographically by
/// encoding. Exactly (q^k - 1)/(q - 1) vectors.
pub fn projective_points(field: &Arc<FieldSpec>, k: usize) -> Vec<Vec<u64>> {
    let q = field.q();
    let mut out = vec![];
    for enc in 1..q.pow(k as u32) {
        let v = decode_vector(field, enc, k);
        if v.iter().find(|&&c| c != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

/// The [ (q^k-1)/(q-1), k, q^(k-1) ] Simplex code.
pub fn simplex_generator(field: &Arc<FieldSpec>, k: usize) -> Result<CodeInstance> {
    let cols = projective_points(field, k);
    let n = cols.len();
    let generator = MatrixGF::from_columns(field.clone(), k, &cols)?;
    Ok(CodeInstance {
        generator,
        n,
        k,
        expected_min_distance: field.q().pow(k as u32 - 1),
    })
}

/// Consecutive coordinate subspaces of the given dimensions: S_{u_1} spanned
/// by the first u_1 unit vectors, S_{u_2} by the next u_2, and so on.
pub fn default_punctures(
    field: &Arc<FieldSpec>,
    k: usize,
    dims: &[usize],
) -> Result<Vec<Subspace>> {
    if dims.iter().sum::<usize>() > k {
        return Err(Error::InvalidDims(format!(
            "puncture dimensions {dims:?} sum past k = {k}"
        )));
    }
    let mut out = vec![];
    let mut offset = 0;
    for &u in dims {
        let mut basis = MatrixGF::zero(field.clone(), u, k);
        for i in 0..u {
            basis.set(i, offset + i, 1);
        }
        out.push(Subspace::from_generators(&basis));
        offset += u;
    }
    Ok(out)
}

/// Generator matrix of a Solomon-Stiffler instance.
///
/// Projective: one column per projective point outside every puncture.
/// Full: every vector of GF(q)^k lying in no puncture (the zero vector is in
/// every subspace, so it is excluded automatically).
pub fn ss_generator(spec: &SolomonStifflerSpec) -> Result<CodeInstance> {
    ss_generator_ordered(spec, ColumnOrder::Lex)
}

pub fn ss_generator_ordered(
    spec: &SolomonStifflerSpec,
    order: ColumnOrder,
) -> Result<CodeInstance> {
    let field = &spec.field;
    let q = field.q();
    let k = spec.k;
    let spans: Vec<HashSet<u128>> = spec.punctures.iter().map(|s| s.span_encodings()).collect();
    let excluded = |v: &[u64]| spans.iter().any(|s| s.contains(&encode_vector(field, v)));

    let proj_cols: Vec<Vec<u64>> = projective_points(field, k)
        .into_iter()
        .filter(|v| !excluded(v))
        .collect();

    let cols: Vec<Vec<u64>> = if spec.projective {
        proj_cols
    } else {
        match order {
            ColumnOrder::Lex => {
                let mut cols = vec![];
                for enc in 1..q.pow(k as u32) {
                    let v = decode_vector(field, enc, k);
                    if !excluded(&v) {
                        cols.push(v);
                    }
                }
                cols
            }
            ColumnOrder::Block => {
                let alpha = field.primitive_element();
                let mut cols = vec![];
                let mut scalar = 1u64;
                for _ in 0..q - 1 {
                    for v in &proj_cols {
                        cols.push(v.iter().map(|&c| field.mul(scalar, c)).collect());
                    }
                    scalar = field.mul(scalar, alpha);
                }
                cols
            }
        }
    };

    let n = cols.len();
    let generator = MatrixGF::from_columns(field.clone(), k, &cols)?;
    if generator.rank() != k {
        return Err(Error::RankDeficient);
    }
    let punctured: u64 = spec
        .punctures
        .iter()
        .map(|s| q.pow(s.dim() as u32 - 1))
        .sum();
    let d_proj = q.pow(k as u32 - 1) - punctured;
    Ok(CodeInstance {
        generator,
        n,
        k,
        expected_min_distance: if spec.projective {
            d_proj
        } else {
            (q - 1) * d_proj
        },
    })
}
