//! Exact linear algebra over the rationals.
//!
//! Every routine first runs on machine integers with checked arithmetic and
//! reruns on big integers if anything overflows, so results are always exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::rational::Rational;

/// Integral domain operations needed by fraction-free elimination.
pub(crate) trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `(a·b − c·e) / div`, where the division is known to be exact.
    fn cross_div(a: &Self, b: &Self, c: &Self, e: &Self, div: &Self) -> Option<Self>;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, e: &Self, div: &Self) -> Option<Self> {
        let num = a.checked_mul(b)?.checked_sub(c.checked_mul(e)?)?;
        debug_assert_eq!(num % div, 0);
        Some(num / div)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, e: &Self, div: &Self) -> Option<Self> {
        Some((a * b - c * e) / div)
    }
}

/// Bareiss elimination to row echelon form; the first nonzero entry at or
/// below the current row is the pivot. Returns `None` on overflow.
fn bareiss_rank<R: Ring>(mut m: Vec<Vec<R>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = R::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            for j in col + 1..cols {
                row[j] = R::cross_div(&pivot_row[col], &row[j], &row[col], &pivot_row[j], &prev)?;
            }
            row[col] = R::zero();
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    Some(rank)
}

/// Clears denominators row by row.
fn integer_rows(m: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| {
            let lcm = row.iter().fold(<BigInt as One>::one(), |acc, v| acc.lcm(v.denom()));
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect()
}

fn rank_of_integers(m: Vec<Vec<BigInt>>) -> usize {
    let small: Option<Vec<Vec<i128>>> = m
        .iter()
        .map(|row| row.iter().map(ToPrimitive::to_i128).collect())
        .collect();
    if let Some(rank) = small.and_then(bareiss_rank) {
        return rank;
    }
    bareiss_rank(m).expect("big integer elimination cannot overflow")
}

/// Rank over the rationals.
pub fn rank_exact(m: &[Vec<Rational>]) -> usize {
    rank_of_integers(integer_rows(m))
}

/// Rank of a 0/1 matrix given as booleans.
pub fn rank_01(m: &[Vec<bool>]) -> usize {
    let small: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&b| i128::from(b)).collect())
        .collect();
    match bareiss_rank(small) {
        Some(r) => r,
        None => bareiss_rank(
            m.iter()
                .map(|row| row.iter().map(|&b| BigInt::from(u8::from(b))).collect())
                .collect::<Vec<Vec<BigInt>>>(),
        )
        .expect("big integer elimination cannot overflow"),
    }
}

/// Field operations for Gauss–Jordan elimination and the simplex tableau.
pub(crate) trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Option<Self>;
    fn to_rational(&self) -> Rational;
}

pub(crate) type Small = Ratio<i64>;

impl Field for Small {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        Some(Ratio::new_raw(r.numer().to_i64()?, r.denom().to_i64()?))
    }
    fn to_rational(&self) -> Rational {
        BigRational::new_raw(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        Some(r.clone())
    }
    fn to_rational(&self) -> Rational {
        self.clone()
    }
}

pub(crate) fn convert<F: Field>(m: &[Vec<Rational>]) -> Option<Vec<Vec<F>>> {
    m.iter()
        .map(|row| row.iter().map(F::from_rational).collect())
        .collect()
}

/// In-place reduced row echelon form. Returns the pivot columns, or `None`
/// on overflow.
pub(crate) fn rref<F: Field>(m: &mut [Vec<F>]) -> Option<Vec<usize>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one().div(&m[r][c])?;
        for v in m[r][c..].iter_mut() {
            *v = v.mul(&inv)?;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for j in c..cols {
                if !prow[j].is_zero() {
                    row[j] = row[j].sub(&factor.mul(&prow[j])?)?;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Some(pivots)
}

fn first_null_vector<F: Field>(m: &[Vec<Rational>]) -> Option<Option<Vec<Rational>>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut work = convert::<F>(m)?;
    let pivots = rref(&mut work)?;
    let Some(free) = (0..cols).find(|c| !pivots.contains(c)) else {
        return Some(None);
    };
    let mut v = vec![<Rational as Zero>::zero(); cols];
    v[free] = <Rational as One>::one();
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = -work[row][free].to_rational();
    }
    Some(Some(v))
}

/// The null-space basis vector belonging to the first free column of the
/// reduced echelon form, or `None` when the columns are independent.
pub fn first_null_vector_exact(m: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    first_null_vector::<Small>(m)
        .or_else(|| first_null_vector::<BigRational>(m))
        .expect("big rational elimination cannot overflow")
}
