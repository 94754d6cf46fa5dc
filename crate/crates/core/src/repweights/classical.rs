//! Weight matrices for sl(n) and o(2m) modules.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use super::matrix::{ColumnLabel, DiagonalBasis, WeightMatrix, WeylAction};
use crate::error::{Error, Result};
use crate::rootsys::{cartan_matrix, Family};

fn ind(cond: bool) -> i64 {
    cond as i64
}

fn one_based(s: &[usize]) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

fn type_a_action(n: usize, basis: DiagonalBasis) -> Result<WeylAction> {
    Ok(match basis {
        DiagonalBasis::CartanH => WeylAction::Cartan(cartan_matrix(Family::A, n - 1)?),
        DiagonalBasis::MatrixUnitE => WeylAction::Permutation { n },
    })
}

/// Λ^r of the natural sl(n) module. Columns are r-subsets in lex order.
/// E_ii rows give [i ∈ S]; h_i = E_ii − E_{i+1,i+1} rows give the differences.
pub fn ext_weight_matrix_a(n: usize, r: usize, basis: DiagonalBasis) -> Result<WeightMatrix> {
    if n < 2 || r == 0 || r >= n {
        return Err(Error::InvalidParameter(format!(
            "exterior power r={r} needs 1 <= r <= n-1 with n={n} >= 2"
        )));
    }
    let columns = (0..n)
        .combinations(r)
        .map(|s| {
            let e: Vec<i64> = (0..n).map(|i| ind(s.contains(&i))).collect();
            let col = match basis {
                DiagonalBasis::MatrixUnitE => e,
                DiagonalBasis::CartanH => (0..n - 1).map(|i| e[i] - e[i + 1]).collect(),
            };
            (ColumnLabel::Subset(one_based(&s)), col)
        })
        .collect();
    let rows = match basis {
        DiagonalBasis::MatrixUnitE => n,
        DiagonalBasis::CartanH => n - 1,
    };
    WeightMatrix::from_columns(
        format!("ext{r}(sl{n}) {basis}"),
        rows,
        columns,
        basis,
        type_a_action(n, basis)?,
    )
}

/// Adjoint module of sl(n) restricted to the positive roots ε_i − ε_j.
/// E_ii rows give the matrix L, h_i rows give K.
pub fn adjoint_weight_matrix_a(n: usize, basis: DiagonalBasis) -> Result<WeightMatrix> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "adjoint sl(n) needs n >= 3, got {n}"
        )));
    }
    let columns = (0..n)
        .tuple_combinations()
        .map(|(i, j)| {
            let l: Vec<i64> = (0..n).map(|r| ind(r == i) - ind(r == j)).collect();
            let col = match basis {
                DiagonalBasis::MatrixUnitE => l,
                DiagonalBasis::CartanH => (0..n - 1).map(|r| l[r] - l[r + 1]).collect(),
            };
            (ColumnLabel::RootPair(i + 1, j + 1), col)
        })
        .collect();
    let (rows, tag) = match basis {
        DiagonalBasis::MatrixUnitE => (n, "L"),
        DiagonalBasis::CartanH => (n - 1, "K"),
    };
    WeightMatrix::from_columns(
        format!("adjoint {tag}(sl{n})"),
        rows,
        columns,
        basis,
        type_a_action(n, basis)?,
    )
}

fn check_m(m: usize, min: usize, what: &str) -> Result<()> {
    if m < min {
        Err(Error::InvalidParameter(format!(
            "{what} needs m >= {min}, got {m}"
        )))
    } else {
        Ok(())
    }
}

fn d_matrix(name: String, m: usize, columns: Vec<(ColumnLabel, Vec<i64>)>) -> Result<WeightMatrix> {
    WeightMatrix::from_columns(
        name,
        m,
        columns,
        DiagonalBasis::MatrixUnitE,
        WeylAction::EvenSignedPermutation { m },
    )
}

/// Λ² of the natural o(2m) module, one column per ± pair:
/// for each i<j, δ_i+δ_j then δ_i−δ_j.
pub fn d_lambda2_matrix(m: usize) -> Result<WeightMatrix> {
    check_m(m, 3, "C2")?;
    let mut columns = Vec::with_capacity(m * (m - 1));
    for (i, j) in (0..m).tuple_combinations() {
        columns.push((
            ColumnLabel::PlusPair(i + 1, j + 1),
            (0..m).map(|r| ind(r == i) + ind(r == j)).collect(),
        ));
        columns.push((
            ColumnLabel::MinusPair(i + 1, j + 1),
            (0..m).map(|r| ind(r == i) - ind(r == j)).collect(),
        ));
    }
    d_matrix(format!("C2(o{})", 2 * m), m, columns)
}

/// Λ³ of the natural o(2m) module, one column per ± pair: δ_i+δ_j+δ_l
/// for i<j<l, then δ_i+δ_j−δ_l for i<j and every l (l = i or j gives the
/// ±δ weights).
pub fn d_lambda3_matrix(m: usize) -> Result<WeightMatrix> {
    check_m(m, 3, "C3")?;
    let mut columns = Vec::new();
    for (i, j, l) in (0..m).tuple_combinations() {
        columns.push((
            ColumnLabel::Triple(i + 1, j + 1, l + 1),
            (0..m)
                .map(|r| ind(r == i) + ind(r == j) + ind(r == l))
                .collect(),
        ));
    }
    for (i, j) in (0..m).tuple_combinations() {
        for l in 0..m {
            columns.push((
                ColumnLabel::PairMinus(i + 1, j + 1, l + 1),
                (0..m)
                    .map(|r| ind(r == i) + ind(r == j) - ind(r == l))
                    .collect(),
            ));
        }
    }
    d_matrix(format!("C3(o{})", 2 * m), m, columns)
}

/// Half-spin module of o(2m) over F3. Column S (|S| ≡ m mod 2) is the
/// weight with +½ on S and −½ elsewhere; since ½ ≡ −1 mod 3 the entries
/// are −1 on S and +1 off S. `half` keeps one column per ± pair (the
/// subsets containing 1), which needs m even.
pub fn d_spin_matrix(m: usize, half: bool) -> Result<WeightMatrix> {
    check_m(m, 3, "spin")?;
    if half && m % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "halved spin matrix needs even m, got {m}"
        )));
    }
    let mut columns = Vec::new();
    for size in (0..=m).filter(|s| (m - s).is_multiple_of(2)) {
        for s in (0..m).combinations(size) {
            if half && !s.contains(&0) {
                continue;
            }
            let col = (0..m)
                .map(|r| if s.contains(&r) { -1 } else { 1 })
                .collect();
            columns.push((ColumnLabel::Subset(one_based(&s)), col));
        }
    }
    let name = format!("spin{}(o{})", if half { "_half" } else { "" }, 2 * m);
    Ok(d_matrix(name, m, columns)?.with_mod3_only())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpinMode {
    /// Weight code of adjoint ⊕ spin (halved only when that module is self-dual).
    WeightCode,
    /// Plain concatenation [C2 | spin].
    DirectSum,
}

impl fmt::Display for SpinMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpinMode::WeightCode => "weight_code",
            SpinMode::DirectSum => "direct_sum",
        })
    }
}

impl FromStr for SpinMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "weight_code" => Ok(SpinMode::WeightCode),
            "direct_sum" => Ok(SpinMode::DirectSum),
            other => Err(Error::InvalidParameter(format!(
                "mode {other:?} (expected weight_code or direct_sum)"
            ))),
        }
    }
}

/// Adjoint ⊕ half-spin of o(2m) over F3.
///
/// `WeightCode`: for even m the combined module is self-dual, giving
/// [C2 | spin_half]; for odd m it is not, so both signs of the adjoint
/// weights appear: [C2 | −C2 | spin]. `DirectSum`: [C2 | spin].
pub fn d_adjoint_spin_matrix(m: usize, mode: SpinMode) -> Result<WeightMatrix> {
    check_m(m, 4, "adjoint plus spin")?;
    let c2 = d_lambda2_matrix(m)?;
    let name = format!("adjoint+spin(o{}) {mode}", 2 * m);
    match mode {
        SpinMode::WeightCode if m.is_multiple_of(2) => c2.hstack(&d_spin_matrix(m, true)?, name),
        SpinMode::WeightCode => c2
            .hstack(&c2.negated(), "")?
            .hstack(&d_spin_matrix(m, false)?, name),
        SpinMode::DirectSum => c2.hstack(&d_spin_matrix(m, false)?, name),
    }
}

/// E_rr eigenvalues on Λ⁴ of the natural sl(8) module, first seven rows.
pub fn ext4_sl8_matrix() -> Result<WeightMatrix> {
    Ok(ext_weight_matrix_a(8, 4, DiagonalBasis::MatrixUnitE)?
        .leading_rows(7, WeylAction::Permutation { n: 7 })?
        .renamed("ext4(sl8) rows 1-7"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcodes::{combination_weight, Prime};

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn ext_rows() {
        let e = ext_weight_matrix_a(4, 2, DiagonalBasis::MatrixUnitE).unwrap();
        assert_eq!(e.row(0), &[1, 1, 1, 0, 0, 0]);
        let h = ext_weight_matrix_a(4, 2, DiagonalBasis::CartanH).unwrap();
        assert_eq!(h.row(0), &[0, 1, 1, -1, -1, 0]);
        assert_eq!(h.rows(), 3);
        assert!(ext_weight_matrix_a(4, 4, DiagonalBasis::CartanH).is_err());
        assert!(ext_weight_matrix_a(4, 0, DiagonalBasis::CartanH).is_err());
    }

    #[test]
    fn cartan_rows_are_differences_of_unit_rows() {
        for n in 3..=9 {
            for r in 1..n {
                let e = ext_weight_matrix_a(n, r, DiagonalBasis::MatrixUnitE).unwrap();
                let h = ext_weight_matrix_a(n, r, DiagonalBasis::CartanH).unwrap();
                assert_eq!(e.cols(), binom(n, r));
                for i in 0..n - 1 {
                    let diff: Vec<i64> = e
                        .row(i)
                        .iter()
                        .zip(e.row(i + 1))
                        .map(|(a, b)| a - b)
                        .collect();
                    assert_eq!(h.row(i), diff.as_slice());
                }
            }
        }
    }

    #[test]
    fn odd_rows_of_ext2_cancel_mod_2() {
        for m in 2..=6 {
            let h = ext_weight_matrix_a(2 * m, 2, DiagonalBasis::CartanH).unwrap();
            let coeffs: Vec<i64> = (0..2 * m - 1).map(|i| ind(i % 2 == 0)).collect();
            assert_eq!(
                combination_weight(&h.to_fp(Prime::Two).unwrap(), &coeffs).unwrap(),
                0
            );
        }
    }

    #[test]
    fn adjoint_l_and_k() {
        let l = adjoint_weight_matrix_a(3, DiagonalBasis::MatrixUnitE).unwrap();
        for c in 0..l.cols() {
            assert_eq!(l.column(c).iter().sum::<i64>(), 0);
        }
        let k = adjoint_weight_matrix_a(4, DiagonalBasis::CartanH).unwrap();
        assert_eq!(k.column(0), vec![2, -1, 0]);
        assert_eq!(k.column_labels()[0], ColumnLabel::RootPair(1, 2));
    }

    #[test]
    fn d_column_counts() {
        for m in 3..=9 {
            assert_eq!(d_lambda2_matrix(m).unwrap().cols(), m * (m - 1));
            assert_eq!(
                d_lambda3_matrix(m).unwrap().cols(),
                binom(m, 3) + m * binom(m, 2)
            );
            assert_eq!(d_spin_matrix(m, false).unwrap().cols(), 1 << (m - 1));
            if m % 2 == 0 {
                assert_eq!(d_spin_matrix(m, true).unwrap().cols(), 1 << (m - 2));
            }
        }
        assert!(d_spin_matrix(5, true).is_err());
    }

    #[test]
    fn d_row_self_products() {
        for m in 3..=10i64 {
            let c2 = d_lambda2_matrix(m as usize).unwrap();
            let c3 = d_lambda3_matrix(m as usize).unwrap();
            for r in 0..m as usize {
                let sq = |row: &[i64]| row.iter().map(|x| x * x).sum::<i64>();
                assert_eq!(sq(c2.row(r)), 2 * (m - 1));
                assert_eq!(sq(c3.row(r)), (m - 1) * (2 * m - 3));
            }
        }
    }

    #[test]
    fn spin_row_weights() {
        let s = d_spin_matrix(5, false)
            .unwrap()
            .to_fp(Prime::Three)
            .unwrap();
        assert_eq!(combination_weight(&s, &[1, 0, 0, 0, 0]).unwrap(), 16);
        assert_eq!(combination_weight(&s, &[1, 1, 0, 0, 0]).unwrap(), 8);
        assert!(d_spin_matrix(5, false).unwrap().to_fp(Prime::Two).is_err());
    }

    #[test]
    fn halved_spin_drops_exact_negations() {
        let full = d_spin_matrix(6, false).unwrap();
        let half = d_spin_matrix(6, true).unwrap();
        let kept: Vec<Vec<i64>> = half.columns();
        for col in full.columns() {
            let neg: Vec<i64> = col.iter().map(|x| -x).collect();
            assert!(kept.contains(&col) ^ kept.contains(&neg));
        }
    }

    #[test]
    fn adjoint_spin_lengths() {
        let len = |m, mode| d_adjoint_spin_matrix(m, mode).unwrap().cols();
        assert_eq!(len(8, SpinMode::WeightCode), 120);
        assert_eq!(len(9, SpinMode::WeightCode), 400);
        assert_eq!(len(5, SpinMode::DirectSum), 36);
        assert_eq!(len(6, SpinMode::DirectSum), 62);
        assert_eq!(len(11, SpinMode::DirectSum), 1134);
    }

    #[test]
    fn ext4_shape() {
        let b = ext4_sl8_matrix().unwrap();
        assert_eq!((b.rows(), b.cols()), (7, 70));
        let fp = b.to_fp(Prime::Three).unwrap();
        assert_eq!(
            combination_weight(&fp, &[1, -1, 0, 0, 0, 0, 0]).unwrap(),
            40
        );
        assert_eq!(combination_weight(&fp, &[1, 1, 1, 1, 1, 1, 0]).unwrap(), 30);
        assert_eq!(combination_weight(&fp, &[0; 7]).unwrap(), 0);
    }
}
