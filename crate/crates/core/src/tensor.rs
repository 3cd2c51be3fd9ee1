//! Dense `d`-dimensional matrices of order `n` with exact rational entries.
//!
//! Storage is row-major with the last axis fastest, so the cell with
//! coordinates `(i_0, …, i_{d-1})` lives at offset `Σ i_k · n^{d-1-k}`.
//! All coordinates are 0-based.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{is_nonnegative, Rational};

/// Order and dimension of a matrix, with the index arithmetic that goes with them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub n: usize,
    pub d: usize,
}

impl Shape {
    pub fn new(n: usize, d: usize) -> Self {
        Shape { n, d }
    }

    /// `n^d`, or `None` if it does not fit in `usize`.
    pub fn checked_cells(&self) -> Option<usize> {
        (0..self.d).try_fold(1usize, |acc, _| acc.checked_mul(self.n))
    }

    pub fn cells(&self) -> usize {
        self.checked_cells().expect("matrix size overflows usize")
    }

    /// Number of lines, `d · n^{d-1}`.
    pub fn line_count(&self) -> usize {
        if self.d == 0 {
            0
        } else {
            self.d * Shape::new(self.n, self.d - 1).cells()
        }
    }

    pub fn stride(&self, axis: usize) -> usize {
        Shape::new(self.n, self.d - 1 - axis).cells()
    }

    pub fn offset(&self, coords: &[usize]) -> usize {
        coords.iter().fold(0, |acc, &c| acc * self.n + c)
    }

    pub fn coords(&self, mut offset: usize) -> Vec<usize> {
        let mut out = vec![0; self.d];
        for slot in out.iter_mut().rev() {
            *slot = offset % self.n;
            offset /= self.n;
        }
        out
    }

    /// Offsets of the `n` cells on a line, in increasing coordinate along the line's axis.
    pub fn line_cells(&self, line: &Line) -> Vec<usize> {
        let mut coords = Vec::with_capacity(self.d);
        coords.extend_from_slice(&line.fixed[..line.axis]);
        coords.push(0);
        coords.extend_from_slice(&line.fixed[line.axis..]);
        let base = self.offset(&coords);
        let stride = self.stride(line.axis);
        (0..self.n).map(|t| base + t * stride).collect()
    }

    /// Offsets of the `d` lines through a cell, as positions in [`line_ids`] order.
    pub fn lines_through(&self, offset: usize) -> Vec<usize> {
        let coords = self.coords(offset);
        let per_axis = Shape::new(self.n, self.d - 1);
        (0..self.d)
            .map(|axis| {
                let fixed: Vec<usize> = coords
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != axis)
                    .map(|(_, &c)| c)
                    .collect();
                axis * per_axis.cells() + per_axis.offset(&fixed)
            })
            .collect()
    }

    fn check_line(&self, line: &Line) -> Result<()> {
        if line.axis >= self.d
            || line.fixed.len() + 1 != self.d
            || line.fixed.iter().any(|&c| c >= self.n)
        {
            return Err(Error::Input(format!(
                "line {line:?} does not fit a matrix of order {} and dimension {}",
                self.n, self.d
            )));
        }
        Ok(())
    }
}

/// A cell address.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index(pub Vec<usize>);

impl Index {
    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

/// One axis plus the coordinates of every other axis, in ascending axis order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line {
    pub axis: usize,
    pub fixed: Vec<usize>,
}

/// Every line of a matrix of the given shape: axis-major, then the fixed
/// coordinates in lexicographic order.
pub fn line_ids(n: usize, d: usize) -> Vec<Line> {
    if d == 0 {
        return Vec::new();
    }
    let sub = Shape::new(n, d - 1);
    (0..d)
        .flat_map(|axis| {
            (0..sub.cells()).map(move |k| Line {
                axis,
                fixed: sub.coords(k),
            })
        })
        .collect()
}

/// The nonzero cells of a matrix, lexicographically ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Support {
    pub cells: Vec<Index>,
}

impl Support {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiMatrix {
    shape: Shape,
    entries: Vec<Rational>,
}

impl MultiMatrix {
    pub fn new(n: usize, d: usize, entries: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("order must be at least 1".into()));
        }
        let shape = Shape::new(n, d);
        let expected = shape
            .checked_cells()
            .ok_or_else(|| Error::Shape(format!("{n}^{d} cells overflow")))?;
        if entries.len() != expected {
            return Err(Error::Shape(format!(
                "order {n}, dimension {d} needs {expected} entries, got {}",
                entries.len()
            )));
        }
        Ok(MultiMatrix { shape, entries })
    }

    pub fn zeros(n: usize, d: usize) -> Self {
        let shape = Shape::new(n, d);
        MultiMatrix {
            entries: vec![Rational::zero(); shape.cells()],
            shape,
        }
    }

    /// Builds a matrix by evaluating `f` on every index, in storage order.
    pub fn from_fn(n: usize, d: usize, mut f: impl FnMut(&[usize]) -> Rational) -> Self {
        let shape = Shape::new(n, d);
        let entries = (0..shape.cells()).map(|k| f(&shape.coords(k))).collect();
        MultiMatrix { shape, entries }
    }

    /// The 2-dimensional permutation matrix with ones at `(i, perm[i])`.
    pub fn permutation_matrix(perm: &[usize]) -> Self {
        MultiMatrix::from_fn(perm.len(), 2, |c| {
            if perm[c[0]] == c[1] {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// The cyclic multidimensional permutation: 1 where the coordinates sum to 0 mod `n`.
    pub fn cyclic_permutation(n: usize, d: usize) -> Self {
        MultiMatrix::from_fn(n, d, |c| {
            if c.iter().sum::<usize>() % n == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n
    }

    pub fn d(&self) -> usize {
        self.shape.d
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn get(&self, coords: &[usize]) -> &Rational {
        &self.entries[self.shape.offset(coords)]
    }

    pub fn line_sum(&self, line: &Line) -> Result<Rational> {
        self.shape.check_line(line)?;
        Ok(self
            .shape
            .line_cells(line)
            .into_iter()
            .fold(Rational::zero(), |acc, k| acc + &self.entries[k]))
    }

    pub fn total(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |acc, v| acc + v)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(is_nonnegative)
    }

    pub fn is_polystochastic(&self) -> bool {
        self.is_nonnegative()
            && line_ids(self.n(), self.d()).iter().all(|line| {
                self.shape
                    .line_cells(line)
                    .into_iter()
                    .fold(Rational::zero(), |acc, k| acc + &self.entries[k])
                    .is_one()
            })
    }

    /// True for polystochastic (0,1)-matrices.
    pub fn is_permutation(&self) -> bool {
        self.entries.iter().all(|v| v.is_zero() || v.is_one()) && self.is_polystochastic()
    }

    /// Storage offsets of the nonzero entries, increasing.
    pub fn support_offsets(&self) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&k| !self.entries[k].is_zero())
            .collect()
    }

    pub fn support(&self) -> Support {
        Support {
            cells: self
                .support_offsets()
                .into_iter()
                .map(|k| Index(self.shape.coords(k)))
                .collect(),
        }
    }

    pub fn support_size(&self) -> usize {
        self.entries.iter().filter(|v| !v.is_zero()).count()
    }

    /// The submatrix obtained by fixing the given axes. The free axes keep
    /// their relative order.
    pub fn plane(&self, fixed: &BTreeMap<usize, usize>) -> Result<MultiMatrix> {
        for (&axis, &coord) in fixed {
            if axis >= self.d() {
                return Err(Error::Input(format!(
                    "axis {axis} out of range for dimension {}",
                    self.d()
                )));
            }
            if coord >= self.n() {
                return Err(Error::Input(format!(
                    "coordinate {coord} out of range for order {}",
                    self.n()
                )));
            }
        }
        let free: Vec<usize> = (0..self.d()).filter(|a| !fixed.contains_key(a)).collect();
        let mut full = vec![0; self.d()];
        for (&axis, &coord) in fixed {
            full[axis] = coord;
        }
        Ok(MultiMatrix::from_fn(self.n(), free.len(), |c| {
            for (&axis, &v) in free.iter().zip(c) {
                full[axis] = v;
            }
            self.entries[self.shape.offset(&full)].clone()
        }))
    }

    /// Same as [`MultiMatrix::plane`] but takes `(axis, coordinate)` pairs
    /// and rejects repeated axes.
    pub fn plane_from_pairs(&self, pairs: &[(usize, usize)]) -> Result<MultiMatrix> {
        let mut fixed = BTreeMap::new();
        for &(axis, coord) in pairs {
            if fixed.insert(axis, coord).is_some() {
                return Err(Error::Input(format!("axis {axis} fixed twice")));
            }
        }
        self.plane(&fixed)
    }

    pub(crate) fn zip_with(
        &self,
        other: &MultiMatrix,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> MultiMatrix {
        assert_eq!(self.shape, other.shape);
        MultiMatrix {
            shape: self.shape,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for MultiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::io::serialize_matrix(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::rational::{int, ratio};

    fn identity2() -> MultiMatrix {
        MultiMatrix::new(2, 2, vec![int(1), int(0), int(0), int(1)]).unwrap()
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            MultiMatrix::new(2, 2, vec![int(1), int(0), int(0)]),
            Err(Error::Shape(_))
        ));
        assert!(MultiMatrix::new(0, 2, vec![]).is_err());
    }

    #[test]
    fn line_counts() {
        assert_eq!(line_ids(3, 3).len(), 27);
        assert_eq!(line_ids(3, 4).len(), 108);
        let l22 = line_ids(2, 2);
        assert_eq!(l22.len(), 4);
        assert_eq!(l22[0], Line { axis: 0, fixed: vec![0] });
        assert_eq!(l22[3], Line { axis: 1, fixed: vec![1] });
    }

    #[test]
    fn lines_partition_cells_per_axis() {
        let shape = Shape::new(3, 3);
        for axis in 0..3 {
            let mut seen: Vec<usize> = line_ids(3, 3)
                .iter()
                .filter(|l| l.axis == axis)
                .flat_map(|l| shape.line_cells(l))
                .collect();
            seen.sort();
            assert_eq!(seen, (0..27).collect::<Vec<_>>());
        }
    }

    #[test]
    fn lines_through_matches_line_cells() {
        let shape = Shape::new(3, 4);
        let lines = line_ids(3, 4);
        for cell in 0..81 {
            for li in shape.lines_through(cell) {
                assert!(shape.line_cells(&lines[li]).contains(&cell));
            }
        }
    }

    #[test]
    fn line_sum_examples() {
        let v = catalog("V3_3").unwrap();
        for line in line_ids(3, 3) {
            assert_eq!(v.line_sum(&line).unwrap(), int(1));
        }
        let z = MultiMatrix::zeros(2, 2);
        for line in line_ids(2, 2) {
            assert_eq!(z.line_sum(&line).unwrap(), int(0));
        }
        let third = MultiMatrix::from_fn(3, 2, |_| ratio(1, 3));
        for line in line_ids(3, 2) {
            assert_eq!(third.line_sum(&line).unwrap(), int(1));
        }
        let bad = Line { axis: 2, fixed: vec![0] };
        assert!(matches!(z.line_sum(&bad), Err(Error::Input(_))));
    }

    #[test]
    fn polystochastic_examples() {
        assert!(catalog("A3").unwrap().is_polystochastic());
        assert!(identity2().is_polystochastic());
        // line sums still 1 but one entry is negative
        let neg = MultiMatrix::new(2, 2, vec![int(2), int(-1), int(-1), int(2)]).unwrap();
        assert!(!neg.is_polystochastic());
    }

    #[test]
    fn support_examples() {
        assert_eq!(catalog("V3_3").unwrap().support().len(), 17);
        assert_eq!(catalog("A4").unwrap().support().len(), 61);
        assert!(MultiMatrix::zeros(3, 3).support().is_empty());
        let s = identity2().support();
        assert_eq!(s.cells, vec![Index(vec![0, 0]), Index(vec![1, 1])]);
    }

    #[test]
    fn plane_examples() {
        let v = catalog("V3_3").unwrap();
        let h = v.plane_from_pairs(&[(0, 0)]).unwrap();
        let expected = [
            int(1), int(0), int(0),
            int(0), ratio(1, 2), ratio(1, 2),
            int(0), ratio(1, 2), ratio(1, 2),
        ];
        assert_eq!(h.entries(), &expected);
        assert_eq!(v.plane(&BTreeMap::new()).unwrap(), v);
        let point = v.plane_from_pairs(&[(0, 1), (1, 1), (2, 0)]).unwrap();
        assert_eq!(point.d(), 0);
        assert_eq!(point.entries(), &[ratio(1, 2)]);
        assert!(v.plane_from_pairs(&[(0, 1), (0, 2)]).is_err());
        assert!(v.plane_from_pairs(&[(3, 0)]).is_err());
        assert!(v.plane_from_pairs(&[(0, 3)]).is_err());
    }

    #[test]
    fn hyperplanes_of_polystochastic_are_polystochastic() {
        let a = catalog("A4").unwrap();
        for axis in 0..4 {
            for c in 0..3 {
                assert!(a.plane_from_pairs(&[(axis, c)]).unwrap().is_polystochastic());
            }
        }
    }
}
