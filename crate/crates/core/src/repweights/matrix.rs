use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fieldcodes::{row_space_code, FpMatrix, LinearCode, Prime};
use crate::rootsys::{reflect_coroot_coeffs, CartanMatrix};

/// Which diagonal generators index the rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagonalBasis {
    /// Simple coroots h_i.
    CartanH,
    /// Matrix units E_ii (for o(2m): E_ii − E_{m+i,m+i}).
    #[serde(rename = "matrix_unit_E")]
    MatrixUnitE,
}

impl fmt::Display for DiagonalBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagonalBasis::CartanH => "cartan_h",
            DiagonalBasis::MatrixUnitE => "matrix_unit_E",
        })
    }
}

impl FromStr for DiagonalBasis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "cartan_h" | "h" => Ok(DiagonalBasis::CartanH),
            "matrix_unit_E" | "matrix_unit_e" | "E" => Ok(DiagonalBasis::MatrixUnitE),
            other => Err(Error::InvalidParameter(format!(
                "basis {other:?} (expected cartan_h or matrix_unit_E)"
            ))),
        }
    }
}

/// Where a column comes from. Indices inside labels are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ColumnLabel {
    /// Index set S (wedge basis vector, or the minus-sign set of a spin weight).
    Subset(Vec<usize>),
    /// Root ε_i − ε_j of sl(n).
    RootPair(usize, usize),
    /// δ_i + δ_j.
    PlusPair(usize, usize),
    /// δ_i − δ_j.
    MinusPair(usize, usize),
    /// δ_i + δ_j + δ_l.
    Triple(usize, usize, usize),
    /// δ_i + δ_j − δ_l.
    PairMinus(usize, usize, usize),
    /// Simple-root coefficients of a root.
    Root(Vec<i64>),
    /// Orbit weight in h-coordinates.
    Weight(Vec<i64>),
    /// Negation of another column.
    Negated(Box<ColumnLabel>),
    /// Column number in a printed fixture.
    Printed(usize),
}

/// How a simple reflection acts on row-coefficient vectors. Each variant
/// maps the column set to itself up to sign, so combination weights are
/// invariant under it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeylAction {
    /// Coroot reflection for h_i rows.
    Cartan(CartanMatrix),
    /// Adjacent transpositions of E_ii rows (symmetric group on `n` letters).
    Permutation { n: usize },
    /// Type D Weyl group on ε rows: transpositions plus the paired sign flip.
    EvenSignedPermutation { m: usize },
}

impl WeylAction {
    pub fn generators(&self) -> usize {
        match self {
            WeylAction::Cartan(c) => c.rank(),
            WeylAction::Permutation { n } => n.saturating_sub(1),
            WeylAction::EvenSignedPermutation { m } => *m,
        }
    }

    pub fn apply(&self, gen: usize, l: &[i64]) -> Result<Vec<i64>> {
        let bad = |rank| Error::InvalidNode { node: gen, rank };
        match self {
            WeylAction::Cartan(c) => reflect_coroot_coeffs(c, gen, l),
            WeylAction::Permutation { n } => {
                check_len(*n, l)?;
                if gen + 1 >= *n {
                    return Err(bad(n.saturating_sub(1)));
                }
                let mut out = l.to_vec();
                out.swap(gen, gen + 1);
                Ok(out)
            }
            WeylAction::EvenSignedPermutation { m } => {
                let m = *m;
                check_len(m, l)?;
                if gen >= m {
                    return Err(bad(m));
                }
                let mut out = l.to_vec();
                if gen + 1 < m {
                    out.swap(gen, gen + 1);
                } else {
                    out[m - 2] = -l[m - 1];
                    out[m - 1] = -l[m - 2];
                }
                Ok(out)
            }
        }
    }
}

fn check_len(n: usize, l: &[i64]) -> Result<()> {
    if l.len() == n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: n,
            found: l.len(),
        })
    }
}

/// Integer eigenvalue matrix: rows are diagonal generators, columns are
/// weight vectors with nonzero weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightMatrix {
    name: String,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
    column_labels: Vec<ColumnLabel>,
    diagonal_basis: DiagonalBasis,
    /// Entries are only meaningful after reduction mod 3.
    mod3_only: bool,
    #[serde(skip)]
    weyl: WeylAction,
}

impl WeightMatrix {
    /// Builds a matrix from its columns.
    pub fn from_columns(
        name: impl Into<String>,
        rows: usize,
        columns: Vec<(ColumnLabel, Vec<i64>)>,
        diagonal_basis: DiagonalBasis,
        weyl: WeylAction,
    ) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::NoColumns);
        }
        let cols = columns.len();
        let mut entries = vec![Vec::with_capacity(cols); rows];
        let mut column_labels = Vec::with_capacity(cols);
        for (label, col) in columns {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (row, x) in entries.iter_mut().zip(col) {
                row.push(x);
            }
            column_labels.push(label);
        }
        Ok(WeightMatrix {
            name: name.into(),
            rows,
            cols,
            entries,
            column_labels,
            diagonal_basis,
            mod3_only: false,
            weyl,
        })
    }

    pub(crate) fn with_mod3_only(mut self) -> Self {
        self.mod3_only = true;
        self
    }

    pub(crate) fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r][c]
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.entries[r]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        self.entries.iter().map(|row| row[c]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<i64>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn column_labels(&self) -> &[ColumnLabel] {
        &self.column_labels
    }

    pub fn diagonal_basis(&self) -> DiagonalBasis {
        self.diagonal_basis
    }

    pub fn mod3_only(&self) -> bool {
        self.mod3_only
    }

    pub fn weyl_action(&self) -> &WeylAction {
        &self.weyl
    }

    /// Reduction mod p. Spin-type matrices only exist over F3.
    pub fn to_fp(&self, p: Prime) -> Result<FpMatrix> {
        if self.mod3_only && p != Prime::Three {
            return Err(Error::InvalidParameter(format!(
                "{} is defined only over F3",
                self.name
            )));
        }
        FpMatrix::from_integer_rows(p, self.cols, &self.entries)
    }

    pub fn code(&self, p: Prime) -> Result<LinearCode> {
        Ok(row_space_code(&self.to_fp(p)?))
    }

    /// [self | other], keeping self's row basis and Weyl action.
    pub fn hstack(&self, other: &WeightMatrix, name: impl Into<String>) -> Result<WeightMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let mut out = self.clone();
        out.name = name.into();
        for (row, extra) in out.entries.iter_mut().zip(&other.entries) {
            row.extend_from_slice(extra);
        }
        out.cols += other.cols;
        out.column_labels
            .extend(other.column_labels.iter().cloned());
        out.mod3_only |= other.mod3_only;
        Ok(out)
    }

    /// Every column negated, labels wrapped in `Negated`.
    pub fn negated(&self) -> WeightMatrix {
        let mut out = self.clone();
        for row in &mut out.entries {
            for x in row.iter_mut() {
                *x = -*x;
            }
        }
        out.column_labels = self
            .column_labels
            .iter()
            .map(|l| ColumnLabel::Negated(Box::new(l.clone())))
            .collect();
        out
    }

    /// Keeps only the first `count` rows.
    pub fn leading_rows(&self, count: usize, weyl: WeylAction) -> Result<WeightMatrix> {
        if count > self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: count,
            });
        }
        let mut out = self.clone();
        out.entries.truncate(count);
        out.rows = count;
        out.weyl = weyl;
        Ok(out)
    }

    /// Negates the listed columns (flipping a ± representative).
    pub fn with_columns_negated(&self, which: &[usize]) -> WeightMatrix {
        let mut out = self.clone();
        for &c in which {
            for row in &mut out.entries {
                row[c] = -row[c];
            }
            out.column_labels[c] = match &self.column_labels[c] {
                ColumnLabel::Negated(inner) => (**inner).clone(),
                other => ColumnLabel::Negated(Box::new(other.clone())),
            };
        }
        out
    }

    /// Shared matrix text format after reduction mod p.
    pub fn to_text(&self, p: Prime) -> Result<String> {
        Ok(self.to_fp(p)?.to_text())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("weight matrices serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{cartan_matrix, Family};

    #[test]
    fn signed_permutation_generators() {
        let w = WeylAction::EvenSignedPermutation { m: 4 };
        assert_eq!(w.generators(), 4);
        assert_eq!(w.apply(0, &[1, 2, 3, 4]).unwrap(), vec![2, 1, 3, 4]);
        assert_eq!(w.apply(3, &[1, 2, 3, 4]).unwrap(), vec![1, 2, -4, -3]);
        assert!(w.apply(4, &[1, 2, 3, 4]).is_err());
    }

    #[test]
    fn every_action_is_an_involution() {
        let actions = [
            WeylAction::Cartan(cartan_matrix(Family::F4, 4).unwrap()),
            WeylAction::Permutation { n: 4 },
            WeylAction::EvenSignedPermutation { m: 4 },
        ];
        let l = [3, -1, 4, 1];
        for a in &actions {
            for g in 0..a.generators() {
                let once = a.apply(g, &l).unwrap();
                assert_eq!(a.apply(g, &once).unwrap(), l);
            }
        }
    }

    #[test]
    fn mod3_only_refuses_binary() {
        let m = WeightMatrix::from_columns(
            "x",
            1,
            vec![(ColumnLabel::Printed(1), vec![-1])],
            DiagonalBasis::MatrixUnitE,
            WeylAction::Permutation { n: 1 },
        )
        .unwrap()
        .with_mod3_only();
        assert!(m.to_fp(Prime::Two).is_err());
        assert_eq!(m.to_fp(Prime::Three).unwrap().get(0, 0), 2);
    }

    #[test]
    fn json_has_labels() {
        let m = WeightMatrix::from_columns(
            "x",
            2,
            vec![
                (ColumnLabel::Subset(vec![1]), vec![1, 0]),
                (ColumnLabel::RootPair(1, 2), vec![1, -1]),
            ],
            DiagonalBasis::MatrixUnitE,
            WeylAction::Permutation { n: 2 },
        )
        .unwrap();
        let j = m.to_json();
        assert_eq!(j["column_labels"][0]["kind"], "subset");
        assert_eq!(j["diagonal_basis"], "matrix_unit_E");
        assert_eq!(j["entries"][1][1], -1);
    }
}
