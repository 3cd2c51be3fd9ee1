//! Named vertices of `Ω_3^3` and `Ω_3^4`.
//!
//! Grids are block displays. For `d = 3` the row is axis 0, the column
//! block axis 1 and the column within the block axis 2, so reading row by
//! row is storage order. For `d = 4` block `(i, j)` is the plane with axis 0
//! fixed at `i` and axis 1 at `j`; inside it the row is axis 2 and the
//! column axis 3. `|` and `-` are visual separators only.

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};
use crate::tensor::MultiMatrix;

pub const CATALOG_NAMES: [&str; 8] = [
    "V3_3",
    "M3_3",
    "M3_4",
    "A1",
    "A2",
    "A3",
    "A4",
    "M33_dot_V33",
];

/// The six pairwise non-equivalent vertices of `Ω_3^4`, in display order.
pub const OMEGA_3_4_REPRESENTATIVES: [&str; 6] = ["M3_4", "A1", "M33_dot_V33", "A2", "A3", "A4"];

const V3_3: &str = "
      1   0   0 |   0 1/2 1/2 |   0 1/2 1/2
      0 1/2 1/2 | 1/2 1/2   0 | 1/2   0 1/2
      0 1/2 1/2 | 1/2   0 1/2 | 1/2 1/2   0
";

const M3_4: &str = "
      1   0   0 |   0   1   0 |   0   0   1
      0   1   0 |   0   0   1 |   1   0   0
      0   0   1 |   1   0   0 |   0   1   0
    ---------------------------------------
      0   1   0 |   0   0   1 |   1   0   0
      0   0   1 |   1   0   0 |   0   1   0
      1   0   0 |   0   1   0 |   0   0   1
    ---------------------------------------
      0   0   1 |   1   0   0 |   0   1   0
      1   0   0 |   0   1   0 |   0   0   1
      0   1   0 |   0   0   1 |   1   0   0
";

const A1: &str = "
      1   0   0 |   0   1   0 |   0   0   1
      0 1/2 1/2 | 1/2   0 1/2 | 1/2 1/2   0
      0 1/2 1/2 | 1/2   0 1/2 | 1/2 1/2   0
    ---------------------------------------
      0 1/2 1/2 | 1/2   0 1/2 | 1/2 1/2   0
      1   0   0 |   0 1/2 1/2 |   0 1/2 1/2
      0 1/2 1/2 | 1/2 1/2   0 | 1/2   0 1/2
    ---------------------------------------
      0 1/2 1/2 | 1/2   0 1/2 | 1/2 1/2   0
      0 1/2 1/2 | 1/2 1/2   0 | 1/2   0 1/2
      1   0   0 |   0 1/2 1/2 |   0 1/2 1/2
";

const M33_DOT_V33: &str = "
      1   0   0 |   0 1/2 1/2 |   0 1/2 1/2
      0 1/2 1/2 | 1/2   0 1/2 | 1/2 1/2   0
      0 1/2 1/2 | 1/2 1/2   0 | 1/2   0 1/2
    ---------------------------------------
      0 1/2 1/2 |   1   0   0 |   0 1/2 1/2
    1/2 1/2   0 |   0 1/2 1/2 | 1/2   0 1/2
    1/2   0 1/2 |   0 1/2 1/2 | 1/2 1/2   0
    ---------------------------------------
      0 1/2 1/2 |   0 1/2 1/2 |   1   0   0
    1/2   0 1/2 | 1/2 1/2   0 |   0 1/2 1/2
    1/2 1/2   0 | 1/2   0 1/2 |   0 1/2 1/2
";

const A2: &str = "
      1   0   0 |   0 1/2 1/2 |   0 1/2 1/2
      0 1/2 1/2 | 1/2   0 1/2 | 1/2 1/2   0
      0 1/2 1/2 | 1/2 1/2   0 | 1/2   0 1/2
    ---------------------------------------
      0 1/2 1/2 | 1/2   0 1/2 | 1/2 1/2   0
    1/2   0 1/2 |   0   1   0 | 1/2   0 1/2
    1/2 1/2   0 | 1/2   0 1/2 |   0 1/2 1/2
    ---------------------------------------
      0 1/2 1/2 | 1/2 1/2   0 | 1/2   0 1/2
    1/2 1/2   0 | 1/2   0 1/2 |   0 1/2 1/2
    1/2   0 1/2 |   0 1/2 1/2 | 1/2 1/2   0
";

// Row 9, column 4 is 2/3: every line through that cell needs it to sum to 1.
const A3: &str = "
      1   0   0 |   0 1/3 2/3 |   0 2/3 1/3
      0 2/3 1/3 | 2/3 1/3   0 | 1/3   0 2/3
      0 1/3 2/3 | 1/3 1/3 1/3 | 2/3 1/3   0
    ---------------------------------------
      0 2/3 1/3 | 2/3 1/3   0 | 1/3   0 2/3
    1/3 1/3 1/3 | 1/3   0 2/3 | 1/3 2/3   0
    2/3   0 1/3 |   0 2/3 1/3 | 1/3 1/3 1/3
    ---------------------------------------
      0 1/3 2/3 | 1/3 1/3 1/3 | 2/3 1/3   0
    2/3   0 1/3 |   0 2/3 1/3 | 1/3 1/3 1/3
    1/3 2/3   0 | 2/3   0 1/3 |   0 1/3 2/3
";

const A4: &str = "
    1/3 1/3 1/3 | 1/3   0 2/3 | 1/3 2/3   0
    1/3 1/3 1/3 | 2/3 1/3   0 |   0 1/3 2/3
    1/3 1/3 1/3 |   0 2/3 1/3 | 2/3   0 1/3
    ---------------------------------------
    2/3   0 1/3 | 1/3 2/3   0 |   0 1/3 2/3
      0 1/3 2/3 | 1/3 1/3 1/3 | 2/3 1/3   0
    1/3 2/3   0 | 1/3   0 2/3 | 1/3 1/3 1/3
    ---------------------------------------
      0 2/3 1/3 | 1/3 1/3 1/3 | 2/3   0 1/3
    2/3 1/3   0 |   0 1/3 2/3 | 1/3 1/3 1/3
    1/3   0 2/3 | 2/3 1/3   0 |   0 2/3 1/3
";

fn from_grid(d: usize, grid: &str) -> MultiMatrix {
    let tokens: Vec<Rational> = grid
        .split_whitespace()
        .filter(|tok| !tok.starts_with('|') && !tok.starts_with('-'))
        .map(|tok| parse_rational(tok).expect("catalog token"))
        .collect();
    let width = 9;
    MultiMatrix::from_fn(3, d, |a| {
        let (row, col) = match d {
            3 => (a[0], 3 * a[1] + a[2]),
            _ => (3 * a[0] + a[2], 3 * a[1] + a[3]),
        };
        tokens[row * width + col].clone()
    })
}

pub fn catalog(name: &str) -> Result<MultiMatrix> {
    Ok(match name {
        "V3_3" => from_grid(3, V3_3),
        "M3_3" => MultiMatrix::cyclic_permutation(3, 3),
        "M3_4" => from_grid(4, M3_4),
        "A1" => from_grid(4, A1),
        "A2" => from_grid(4, A2),
        "A3" => from_grid(4, A3),
        "A4" => from_grid(4, A4),
        "M33_dot_V33" => from_grid(4, M33_DOT_V33),
        _ => return Err(Error::UnknownCatalog(name.to_string())),
    })
}
