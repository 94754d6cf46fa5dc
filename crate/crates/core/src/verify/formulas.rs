//! Closed-form weights of the standard row combinations, and a sweep that
//! checks them against direct evaluation over F3.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fieldcodes::{combination_weight, Prime};
use crate::repweights::{
    adjoint_weight_matrix_a, d_lambda2_matrix, d_lambda3_matrix, ext_weight_matrix_a,
    DiagonalBasis, WeightMatrix,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FormulaId {
    /// Λ² of sl(n), E_ii rows.
    #[serde(rename = "A2_st")]
    A2St,
    /// Λ³ of sl(n), E_ii rows.
    #[serde(rename = "A3_st")]
    A3St,
    /// Positive-root part of the sl(n) adjoint module, E_ii rows.
    #[serde(rename = "A_adjoint_st")]
    AAdjointSt,
    /// C₂ of o(2m).
    #[serde(rename = "D2_t")]
    D2T,
    /// C₃ of o(2m).
    #[serde(rename = "D3_t")]
    D3T,
}

impl FormulaId {
    pub const ALL: [FormulaId; 5] = [
        FormulaId::A2St,
        FormulaId::A3St,
        FormulaId::AAdjointSt,
        FormulaId::D2T,
        FormulaId::D3T,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormulaId::A2St => "A2_st",
            FormulaId::A3St => "A3_st",
            FormulaId::AAdjointSt => "A_adjoint_st",
            FormulaId::D2T => "D2_t",
            FormulaId::D3T => "D3_t",
        }
    }

    /// t-only forms take s = 0.
    pub fn t_only(self) -> bool {
        matches!(self, FormulaId::D2T | FormulaId::D3T)
    }

    /// Smallest n (or m) the underlying matrix is defined for.
    pub fn min_size(self) -> usize {
        match self {
            FormulaId::A2St | FormulaId::AAdjointSt | FormulaId::D2T | FormulaId::D3T => 3,
            FormulaId::A3St => 4,
        }
    }

    /// The matrix the form counts nonzero entries of.
    pub fn matrix(self, size: usize) -> Result<WeightMatrix> {
        let e = DiagonalBasis::MatrixUnitE;
        match self {
            FormulaId::A2St => ext_weight_matrix_a(size, 2, e),
            FormulaId::A3St => ext_weight_matrix_a(size, 3, e),
            FormulaId::AAdjointSt => adjoint_weight_matrix_a(size, e),
            FormulaId::D2T => d_lambda2_matrix(size),
            FormulaId::D3T => d_lambda3_matrix(size),
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormulaId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|f| f.as_str() == s.trim())
            .ok_or_else(|| Error::UnknownFormula(s.to_string()))
    }
}

/// `size` is n for the sl(n) forms and m for the o(2m) forms. The
/// combination takes +1 on the first s rows and −1 on the next t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaParams {
    pub size: usize,
    pub s: usize,
    pub t: usize,
}

impl FormulaParams {
    pub fn new(size: usize, s: usize, t: usize) -> Self {
        FormulaParams { size, s, t }
    }

    /// Row coefficients (+1)^s (−1)^t 0^(rows−s−t).
    pub fn coefficients(&self, rows: usize) -> Vec<i64> {
        (0..rows)
            .map(|i| {
                if i < self.s {
                    1
                } else if i < self.s + self.t {
                    -1
                } else {
                    0
                }
            })
            .collect()
    }
}

fn c2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Exact value of the named closed form.
pub fn closed_form_weight(id: FormulaId, params: &FormulaParams) -> Result<u64> {
    let FormulaParams { size, s, t } = *params;
    if id.t_only() && s != 0 {
        return Err(Error::InvalidParameter(format!(
            "{id} takes t only, got s = {s}"
        )));
    }
    if s + t > size {
        return Err(Error::InvalidParameter(format!(
            "{id}: s + t = {} exceeds {size}",
            s + t
        )));
    }
    let (n, s, t) = (size as u64, s as u64, t as u64);
    let r = n - s - t;
    Ok(match id {
        FormulaId::A2St => (s + t) * r + c2(s) + c2(t),
        FormulaId::A3St => (s + t) * c2(r) + (n - s) * c2(s) + (n - t) * c2(t),
        FormulaId::AAdjointSt => (s + t) * r + s * t,
        FormulaId::D2T => c2(t) + 2 * t * (n - t),
        FormulaId::D3T => (2 * n - t) * c2(t) + 2 * t * c2(n - t) + t * (n - t) * (n - t),
    })
}

/// The same quantity by direct evaluation of the row combination mod 3.
pub fn enumerated_weight(id: FormulaId, params: &FormulaParams) -> Result<u64> {
    let m = id.matrix(params.size)?.to_fp(Prime::Three)?;
    let w = combination_weight(&m, &params.coefficients(m.rows()))?;
    Ok(w as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaMismatch {
    pub formula: FormulaId,
    pub params: FormulaParams,
    pub closed_form: u64,
    pub enumerated: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaSweep {
    pub checked: usize,
    pub mismatches: Vec<FormulaMismatch>,
}

/// Compares every form on its full parameter range for sizes up to `max_size`.
pub fn formula_sweep(max_size: usize) -> Result<FormulaSweep> {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for id in FormulaId::ALL {
        for size in id.min_size()..=max_size {
            let s_range = if id.t_only() { 0..=0 } else { 0..=size };
            for s in s_range {
                for t in 0..=size - s {
                    let params = FormulaParams::new(size, s, t);
                    let closed = closed_form_weight(id, &params)?;
                    let enumerated = enumerated_weight(id, &params)?;
                    checked += 1;
                    if closed != enumerated {
                        mismatches.push(FormulaMismatch {
                            formula: id,
                            params,
                            closed_form: closed,
                            enumerated,
                        });
                    }
                }
            }
        }
    }
    Ok(FormulaSweep {
        checked,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let w = |id, n, s, t| closed_form_weight(id, &FormulaParams::new(n, s, t)).unwrap();
        assert_eq!(w(FormulaId::A2St, 5, 1, 0), 4);
        assert_eq!(w(FormulaId::D2T, 5, 0, 1), 8);
        assert_eq!(w(FormulaId::AAdjointSt, 7, 0, 0), 0);
        // Doubled adjoint form at n = 8 is the Table 6.3 entry for (1,1).
        assert_eq!(2 * w(FormulaId::AAdjointSt, 8, 1, 1), 26);
    }

    #[test]
    fn range_errors() {
        assert!(closed_form_weight(FormulaId::A2St, &FormulaParams::new(5, 3, 3)).is_err());
        assert!(closed_form_weight(FormulaId::D3T, &FormulaParams::new(5, 1, 0)).is_err());
        assert!("A4_st".parse::<FormulaId>().is_err());
        assert_eq!("D3_t".parse::<FormulaId>().unwrap(), FormulaId::D3T);
    }

    #[test]
    fn small_sweep_agrees() {
        let sweep = formula_sweep(7).unwrap();
        assert!(sweep.mismatches.is_empty(), "{:?}", sweep.mismatches);
        assert!(sweep.checked > 100);
    }
}
