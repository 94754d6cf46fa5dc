//! Weight matrices transcribed verbatim from the printed literature, used as
//! ground truth for the generated exceptional matrices.

use super::matrix::{ColumnLabel, DiagonalBasis, WeightMatrix, WeylAction};
use crate::error::{Error, Result};
use crate::rootsys::{cartan_matrix, Family};

/// Names accepted by [`paper_fixture`].
pub const FIXTURE_NAMES: [&str; 4] = ["A_F4", "B_F4", "Table5_1", "Table6_1"];

// Minimal F4 module, one column per +- pair of nonzero weights.
#[rustfmt::skip]
const A_F4: [[i64; 12]; 4] = [
    [0, 0, 0, 1, 1, -1, 1, -1, -1, 0, 0, 0],
    [0, 0, 1, -1, 0, 0, 0, 1, 1, -1, -1, 0],
    [0, 1, -1, 1, -1, 1, 0, -1, 0, 1, 2, -1],
    [1, -1, 0, 0, 1, 0, -1, 1, -1, 1, -1, 2],
];

// F4 adjoint module on the positive root vectors.
#[rustfmt::skip]
const B_F4: [[i64; 24]; 4] = [
    [2, -1, 0, 0, 1, -1, 0, 1, -1, -1, 1, -1, 1, 0, 1, -1, 0, 1, 0, 0, 0, 0, -1, 1],
    [-1, 2, -1, 0, 1, 1, -1, 0, 1, 0, -1, 0, 0, 1, -1, 0, 1, -1, 1, 0, 0, -1, 1, 0],
    [0, -2, 2, -1, -2, 0, 1, 0, -1, 2, 2, 1, -1, 0, 1, 0, -1, 0, -2, 1, 0, 2, 0, 0],
    [0, 0, -1, 2, 0, -1, 1, -1, 1, -2, -2, 0, 1, -2, 0, 2, 0, 2, 2, -1, 1, 0, 0, 0],
];

// E6 minimal module: column i is (a_{1,i}, ..., a_{6,i}).
#[rustfmt::skip]
const TABLE5_1: [[i64; 27]; 6] = [
    [1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 1, 1, -1, 1, -1, 1, -1, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, -1, -1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 1, 1, -1, -1, 0, 0, 0],
    [0, 1, -1, 0, 0, 0, 0, 0, 1, 0, -1, 1, 1, 0, -1, -1, 0, 0, 0, 0, 1, -1, 1, -1, 0, 0, 0],
    [0, 0, 1, -1, 0, 0, 1, 0, -1, 1, 0, -1, 0, 0, 0, 1, 0, -1, 1, 0, -1, 0, 0, 1, -1, 0, 0],
    [0, 0, 0, 1, -1, 1, -1, 0, 0, 0, 0, 1, -1, 0, 1, -1, 1, 0, -1, 0, 0, 0, 0, 0, 1, -1, 0],
    [0, 0, 0, 0, 1, 0, 1, -1, 1, -1, 1, -1, 0, 1, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1],
];

// E7 minimal module, one column per +- pair.
#[rustfmt::skip]
const TABLE6_1: [[i64; 28]; 7] = [
    [0, 0, 0, 0, 0, 1, 0, -1, 1, 1, -1, 1, -1, 1, 0, -1, 1, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, -1, 1, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 1, 0, -1, 1, 1],
    [0, 0, 0, 0, 1, -1, 1, 0, -1, 0, 0, 0, 1, 0, -1, 1, 0, -1, 1, 0, -1, 1, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 1, -1, 0, 0, 0, 1, -1, 1, 0, -1, 0, 0, 0, 0, 1, 0, -1, 1, 0, 0, -1, 1, 0, 0, -1],
    [0, 0, 1, -1, 0, 0, 0, 0, 0, 1, 0, -1, 1, 0, 1, -1, 0, -1, 0, 0, 0, 0, 0, 1, 0, 1, -1, 1],
    [0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 1, 0, 1, -1, 1, -1, 0, 1, -1, 0, -1, 0, 0],
    [1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 1, 0, 1, -1, 0, 1, -1, 1, 1, -1],
];

fn build<const C: usize>(name: &str, rows: &[[i64; C]], family: Family) -> Result<WeightMatrix> {
    let cartan = cartan_matrix(family, family.fixed_rank().expect("exceptional"))?;
    let columns = (0..C)
        .map(|c| {
            (
                ColumnLabel::Printed(c + 1),
                rows.iter().map(|row| row[c]).collect(),
            )
        })
        .collect();
    WeightMatrix::from_columns(
        name,
        rows.len(),
        columns,
        DiagonalBasis::CartanH,
        WeylAction::Cartan(cartan),
    )
}

/// A printed weight matrix by name: `A_F4`, `B_F4`, `Table5_1` or `Table6_1`.
pub fn paper_fixture(name: &str) -> Result<WeightMatrix> {
    match name {
        "A_F4" => build(name, &A_F4, Family::F4),
        "B_F4" => build(name, &B_F4, Family::F4),
        "Table5_1" => build(name, &TABLE5_1, Family::E6),
        "Table6_1" => build(name, &TABLE6_1, Family::E7),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_first_columns() {
        let a = paper_fixture("A_F4").unwrap();
        assert_eq!((a.rows(), a.cols()), (4, 12));
        assert_eq!(&a.row(0)[..6], &[0, 0, 0, 1, 1, -1]);
        let t5 = paper_fixture("Table5_1").unwrap();
        assert_eq!((t5.rows(), t5.cols()), (6, 27));
        assert_eq!(t5.column(0), vec![1, 0, 0, 0, 0, 0]);
        let t6 = paper_fixture("Table6_1").unwrap();
        assert_eq!((t6.rows(), t6.cols()), (7, 28));
        assert_eq!(t6.column(0), vec![0, 0, 0, 0, 0, 0, 1]);
        let b = paper_fixture("B_F4").unwrap();
        assert_eq!((b.rows(), b.cols()), (4, 24));
    }

    #[test]
    fn unknown_name() {
        assert_eq!(
            paper_fixture("A_E8").unwrap_err(),
            Error::UnknownFixture("A_E8".into())
        );
    }
}
