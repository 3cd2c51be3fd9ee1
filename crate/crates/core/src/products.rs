//! Kronecker and dot products of multidimensional matrices.
//!
//! Kronecker: `c_γ = a_α · b_β` with `γ_i = α_i · n₂ + β_i` (order `n₁n₂`).
//! Dot: `c_{αβ} = Σ_i a_{αi} · b_{iβ}`, contracting the last axis of `A`
//! with the first axis of `B` (dimension `d₁ + d₂ − 2`).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::symmetry::are_equivalent;
use crate::tensor::{MultiMatrix, Shape};

pub fn kronecker(a: &MultiMatrix, b: &MultiMatrix) -> Result<MultiMatrix> {
    if a.d() != b.d() {
        return Err(Error::Input(format!(
            "kronecker product needs equal dimensions, got {} and {}",
            a.d(),
            b.d()
        )));
    }
    let (n1, n2) = (a.n(), b.n());
    Ok(MultiMatrix::from_fn(n1 * n2, a.d(), |gamma| {
        let alpha: Vec<usize> = gamma.iter().map(|&g| g / n2).collect();
        let beta: Vec<usize> = gamma.iter().map(|&g| g % n2).collect();
        a.get(&alpha) * b.get(&beta)
    }))
}

pub fn dot(a: &MultiMatrix, b: &MultiMatrix) -> Result<MultiMatrix> {
    if a.n() != b.n() {
        return Err(Error::Input(format!(
            "dot product needs equal orders, got {} and {}",
            a.n(),
            b.n()
        )));
    }
    if a.d() < 2 || b.d() < 2 {
        return Err(Error::Input("dot product needs dimensions of at least 2".into()));
    }
    let n = a.n();
    let outer_a = Shape::new(n, a.d() - 1).cells();
    let outer_b = Shape::new(n, b.d() - 1).cells();
    let mut out = vec![Rational::zero(); outer_a * outer_b];
    for alpha in 0..outer_a {
        for i in 0..n {
            let x = &a.entries()[alpha * n + i];
            if x.is_zero() {
                continue;
            }
            let row = &b.entries()[i * outer_b..(i + 1) * outer_b];
            for (slot, y) in out[alpha * outer_b..(alpha + 1) * outer_b].iter_mut().zip(row) {
                if !y.is_zero() {
                    *slot += x * y;
                }
            }
        }
    }
    MultiMatrix::new(n, a.d() + b.d() - 2, out)
}

/// The `d₂`-dimensional planes of `A · B` obtained by fixing the leading
/// `d₁ − 2` axes at every coordinate tuple.
pub fn dot_planes(a: &MultiMatrix, b: &MultiMatrix) -> Result<Vec<MultiMatrix>> {
    let c = dot(a, b)?;
    let lead = a.d() - 2;
    let fixed_shape = Shape::new(a.n(), lead);
    (0..fixed_shape.cells())
        .map(|k| {
            let pairs: Vec<(usize, usize)> = fixed_shape.coords(k).into_iter().enumerate().collect();
            c.plane_from_pairs(&pairs)
        })
        .collect()
}

/// True when every plane from [`dot_planes`] is equivalent to `B`;
/// `A` must be a multidimensional permutation.
pub fn dot_plane_equivalence_check(a: &MultiMatrix, b: &MultiMatrix) -> Result<bool> {
    if !a.is_permutation() {
        return Err(Error::NotPermutation);
    }
    for plane in dot_planes(a, b)? {
        if !are_equivalent(&plane, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}
