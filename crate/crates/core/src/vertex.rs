//! Vertex test for `Ω_n^d`.
//!
//! A polystochastic matrix is a vertex exactly when the line/support
//! incidence matrix has full column rank, i.e. no nonzero matrix supported
//! inside `supp(A)` has all line sums zero. When such a matrix `B` exists,
//! `A ± εB` are two distinct polystochastic matrices averaging to `A`.

use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::bounds::support_cardinality_bound;
use crate::error::{Error, Result};
use crate::io::{matrix_from_value, serialize_matrix};
use crate::linalg::{first_null_vector_exact, rank_01};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::tensor::{line_ids, MultiMatrix};

/// Rows follow [`line_ids`] order, columns follow the lexicographic support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub bits: Vec<Vec<bool>>,
    /// Storage offsets of the support cells, one per column.
    pub support: Vec<usize>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.bits.len()
    }

    pub fn cols(&self) -> usize {
        self.support.len()
    }

    fn to_rational(&self) -> Vec<Vec<Rational>> {
        self.bits
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&b| if b { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect()
    }
}

pub fn incidence_matrix(a: &MultiMatrix) -> Result<IncidenceMatrix> {
    let support = a.support_offsets();
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let shape = a.shape();
    let mut bits = vec![vec![false; support.len()]; shape.line_count()];
    for (col, &cell) in support.iter().enumerate() {
        for row in shape.lines_through(cell) {
            bits[row][col] = true;
        }
    }
    Ok(IncidenceMatrix { bits, support })
}

pub fn is_vertex(a: &MultiMatrix) -> Result<bool> {
    if !a.is_polystochastic() {
        return Err(Error::NotPolystochastic);
    }
    let inc = incidence_matrix(a)?;
    Ok(rank_01(&inc.bits) == inc.cols())
}

/// Witness that `A = λ·d1 + (1 − λ)·d2` with `d1 ≠ d2` in `Ω_n^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonVertexCertificate {
    pub kernel: MultiMatrix,
    pub d1: MultiMatrix,
    pub d2: MultiMatrix,
    pub lambda: Rational,
}

pub fn non_vertex_certificate(a: &MultiMatrix) -> Result<Option<NonVertexCertificate>> {
    if !a.is_polystochastic() {
        return Err(Error::NotPolystochastic);
    }
    let inc = incidence_matrix(a)?;
    let Some(null) = first_null_vector_exact(&inc.to_rational()) else {
        return Ok(None);
    };
    let mut kernel = vec![Rational::zero(); a.entries().len()];
    for (&cell, b) in inc.support.iter().zip(&null) {
        kernel[cell] = b.clone();
    }
    let kernel = MultiMatrix::new(a.n(), a.d(), kernel)?;
    let eps = inc
        .support
        .iter()
        .zip(&null)
        .filter(|(_, b)| !b.is_zero())
        .map(|(&cell, b)| &a.entries()[cell] / b.abs())
        .min()
        .expect("null vector is nonzero");
    let d1 = a.zip_with(&kernel, |x, b| x + &eps * b);
    let d2 = a.zip_with(&kernel, |x, b| x - &eps * b);
    Ok(Some(NonVertexCertificate {
        kernel,
        d1,
        d2,
        lambda: Rational::new(1.into(), 2.into()),
    }))
}

/// `N(A) ≤ n^d − (n−1)^d`.
pub fn check_support_bound(a: &MultiMatrix) -> bool {
    num_bigint::BigUint::from(a.support_size()) <= support_cardinality_bound(a.n(), a.d())
}

impl NonVertexCertificate {
    /// Checks every certificate condition against `a` in exact arithmetic.
    pub fn verify(&self, a: &MultiMatrix) -> bool {
        let shape = a.shape();
        if [&self.kernel, &self.d1, &self.d2]
            .iter()
            .any(|m| m.shape() != shape)
        {
            return false;
        }
        let kernel_ok = self.kernel.support_size() > 0
            && self
                .kernel
                .entries()
                .iter()
                .zip(a.entries())
                .all(|(b, x)| b.is_zero() || !x.is_zero())
            && line_ids(a.n(), a.d())
                .iter()
                .all(|l| self.kernel.line_sum(l).is_ok_and(|s| s.is_zero()));
        let one = Rational::one();
        let lambda_ok = self.lambda.is_positive() && self.lambda < one;
        let combo = self
            .d1
            .zip_with(&self.d2, |x, y| &self.lambda * x + (&one - &self.lambda) * y);
        kernel_ok
            && lambda_ok
            && self.d1.is_polystochastic()
            && self.d2.is_polystochastic()
            && self.d1 != self.d2
            && &combo == a
    }

    pub fn to_json(&self) -> String {
        format!(
            "{{\"kernel\":{},\"d1\":{},\"d2\":{},\"lambda\":\"{}\"}}",
            serialize_matrix(&self.kernel),
            serialize_matrix(&self.d1),
            serialize_matrix(&self.d2),
            format_rational(&self.lambda)
        )
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let value: Value = serde_json::from_slice(bytes).map_err(|e| {
            Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
        })?;
        let field = |key: &str| {
            value
                .get(key)
                .ok_or_else(|| Error::parse("$", format!("missing field {key:?}")))
        };
        let lambda = field("lambda")?
            .as_str()
            .ok_or_else(|| Error::parse("$.lambda", "expected a string token"))?;
        Ok(NonVertexCertificate {
            kernel: matrix_from_value(field("kernel")?, "$.kernel")?,
            d1: matrix_from_value(field("d1")?, "$.d1")?,
            d2: matrix_from_value(field("d2")?, "$.d2")?,
            lambda: parse_rational(lambda).map_err(|m| Error::parse("$.lambda", m))?,
        })
    }
}
