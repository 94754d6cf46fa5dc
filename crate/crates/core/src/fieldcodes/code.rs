use serde::{Deserialize, Serialize};

use super::matrix::{FpMatrix, Prime};
use super::packed::PackedRows;
use crate::error::{Error, Result};

/// Environment variable that overrides the default worker count.
pub const WORKERS_ENV: &str = "LIECODES_WORKERS";

/// Worker count used when none is given: `LIECODES_WORKERS` if set and
/// positive, else the machine's available parallelism.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// A linear code stored by its canonical reduced row-echelon basis, so two
/// codes are equal exactly when their bases are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LinearCode {
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    #[inline]
    pub fn p(&self) -> Prime {
        self.basis.p()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.basis.cols()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// The whole space F_p^n.
    pub fn full_space(p: Prime, n: usize) -> Result<Self> {
        Ok(row_space_code(&FpMatrix::identity(p, n)?))
    }

    pub fn zero_code(p: Prime, n: usize) -> Result<Self> {
        Ok(row_space_code(&FpMatrix::zeros(p, 0, n)?))
    }

    /// Membership test by reducing `word` against the basis.
    pub fn contains(&self, word: &[u8]) -> bool {
        if word.len() != self.n() {
            return false;
        }
        let p = self.p();
        let mut w = word.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            let f = w[c];
            if f == 0 {
                continue;
            }
            let nf = p.neg(f);
            for (x, &b) in w.iter_mut().zip(self.basis.row(r)) {
                *x = p.add(*x, p.mul(nf, b));
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// True when `self` is a subspace of `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.p() == other.p()
            && self.n() == other.n()
            && self.basis.row_iter().all(|r| other.contains(r))
    }
}

/// The code spanned by the rows of `m`, in canonical form.
pub fn row_space_code(m: &FpMatrix) -> LinearCode {
    let r = m.rref();
    LinearCode {
        basis: r.reduced,
        pivots: r.pivot_columns,
    }
}

/// Counts of codewords per Hamming weight, A_0..A_n.
pub fn weight_distribution(c: &LinearCode, workers: Option<usize>) -> Vec<u64> {
    let workers = workers.unwrap_or_else(default_workers);
    PackedRows::new(&c.basis).histogram(workers)
}

/// Smallest nonzero codeword weight, by exhaustive enumeration.
pub fn min_distance(c: &LinearCode, workers: Option<usize>) -> Result<usize> {
    if c.k() == 0 {
        return Err(Error::EmptyCode);
    }
    let hist = weight_distribution(c, workers);
    Ok(first_nonzero_weight(&hist).expect("nonzero code has a nonzero codeword"))
}

fn first_nonzero_weight(hist: &[u64]) -> Option<usize> {
    hist.iter()
        .enumerate()
        .skip(1)
        .find(|(_, &a)| a > 0)
        .map(|(w, _)| w)
}

/// The orthogonal complement under the standard inner product.
pub fn dual_code(c: &LinearCode) -> LinearCode {
    let p = c.p();
    let n = c.n();
    let free: Vec<usize> = (0..n).filter(|j| !c.pivots.contains(j)).collect();
    // One check row per free column f: e_f - sum_r basis[r][f] e_{pivot r}.
    let mut data = vec![0u8; free.len() * n];
    for (i, &f) in free.iter().enumerate() {
        data[i * n + f] = 1;
        for (r, &pc) in c.pivots.iter().enumerate() {
            data[i * n + pc] = p.neg(c.basis.get(r, f));
        }
    }
    let h = FpMatrix::new(p, free.len(), n, data).expect("well-formed check matrix");
    row_space_code(&h)
}

/// Summary of a code's parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub p: u8,
    pub n: usize,
    pub k: usize,
    /// Absent for the zero code.
    pub d: Option<usize>,
    pub weight_distribution: Vec<u64>,
    pub self_orthogonal: bool,
    pub self_dual: bool,
    /// Binary codes only.
    pub even: Option<bool>,
    /// Binary codes only.
    pub doubly_even: Option<bool>,
}

impl CodeReport {
    /// "[n,k,d]" with "?" for an undefined distance.
    pub fn params(&self) -> String {
        match self.d {
            Some(d) => format!("[{},{},{}]", self.n, self.k, d),
            None => format!("[{},{},?]", self.n, self.k),
        }
    }
}

/// G·Gᵀ ≡ 0 for the basis G.
pub fn is_self_orthogonal(c: &LinearCode) -> bool {
    c.basis.gram().iter().all(|&x| x == 0)
}

pub fn analyze(c: &LinearCode) -> CodeReport {
    analyze_with(c, None)
}

pub fn analyze_with(c: &LinearCode, workers: Option<usize>) -> CodeReport {
    let hist = weight_distribution(c, workers);
    let d = first_nonzero_weight(&hist);
    let self_orthogonal = is_self_orthogonal(c);
    let (even, doubly_even) = if c.p() == Prime::Two {
        let nz = |m: usize| hist.iter().enumerate().all(|(w, &a)| a == 0 || w % m == 0);
        (Some(nz(2)), Some(nz(4)))
    } else {
        (None, None)
    };
    CodeReport {
        p: c.p().modulus(),
        n: c.n(),
        k: c.k(),
        d,
        weight_distribution: hist,
        self_orthogonal,
        self_dual: self_orthogonal && c.n() == 2 * c.k(),
        even,
        doubly_even,
    }
}

/// Hamming weight of (coeffs · m) mod p.
pub fn combination_weight(m: &FpMatrix, coeffs: &[i64]) -> Result<usize> {
    Ok(m.combine_rows(coeffs)?.iter().filter(|&&x| x != 0).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(p: Prime, rows: &[&[i64]]) -> FpMatrix {
        let v: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        FpMatrix::from_integer_rows(p, rows[0].len(), &v).unwrap()
    }

    #[test]
    fn zero_code_report() {
        let z = LinearCode::zero_code(Prime::Three, 5).unwrap();
        assert_eq!(min_distance(&z, Some(1)), Err(Error::EmptyCode));
        let r = analyze(&z);
        assert_eq!(r.d, None);
        assert!(r.self_orthogonal);
        assert_eq!(r.weight_distribution, vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(r.even, None);
    }

    #[test]
    fn identity_has_distance_one() {
        for p in [Prime::Two, Prime::Three] {
            let c = LinearCode::full_space(p, 7).unwrap();
            assert_eq!(min_distance(&c, Some(2)).unwrap(), 1);
            assert_eq!(dual_code(&c), LinearCode::zero_code(p, 7).unwrap());
        }
    }

    #[test]
    fn hamming_7_4() {
        let g = mat(
            Prime::Two,
            &[
                &[1, 0, 0, 0, 1, 1, 0],
                &[0, 1, 0, 0, 1, 0, 1],
                &[0, 0, 1, 0, 0, 1, 1],
                &[0, 0, 0, 1, 1, 1, 1],
            ],
        );
        let c = row_space_code(&g);
        let r = analyze_with(&c, Some(1));
        assert_eq!((r.n, r.k, r.d), (7, 4, Some(3)));
        assert_eq!(r.weight_distribution, vec![1, 0, 0, 7, 7, 0, 0, 1]);
        // dual is the doubly-even simplex code
        let s = analyze(&dual_code(&c));
        assert_eq!((s.k, s.d, s.doubly_even), (3, Some(4), Some(true)));
        assert!(s.self_orthogonal);
    }

    #[test]
    fn ternary_golay_is_self_dual() {
        // extended ternary Golay code [12,6,6]
        let g = mat(
            Prime::Three,
            &[
                &[1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1],
                &[0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2, 1],
                &[0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2],
                &[0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 2],
                &[0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0, 1],
                &[0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0],
            ],
        );
        let c = row_space_code(&g);
        let r = analyze(&c);
        assert_eq!(r.params(), "[12,6,6]");
        assert!(r.self_dual);
        assert_eq!(dual_code(&c), c);
        assert_eq!(r.weight_distribution[6], 264);
    }

    #[test]
    fn dual_dimension_and_involution() {
        let g = mat(Prime::Three, &[&[1, 2, 0, 1, 1], &[0, 1, 1, 2, 0]]);
        let c = row_space_code(&g);
        let d = dual_code(&c);
        assert_eq!(d.k(), 3);
        assert_eq!(dual_code(&d), c);
        for row in d.basis().row_iter() {
            for crow in c.basis().row_iter() {
                let dot: u32 = row.iter().zip(crow).map(|(&a, &b)| (a * b) as u32).sum();
                assert_eq!(dot % 3, 0);
            }
        }
    }

    #[test]
    fn combination_weight_checks_length() {
        let g = mat(Prime::Three, &[&[1, 2, 0], &[0, 1, 1]]);
        assert_eq!(combination_weight(&g, &[0, 0]).unwrap(), 0);
        assert_eq!(combination_weight(&g, &[1, 1]).unwrap(), 2);
        assert_eq!(combination_weight(&g, &[-1, 4]).unwrap(), 3);
        assert!(matches!(
            combination_weight(&g, &[1]),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let g = mat(Prime::Two, &[&[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 0]]);
        let c = row_space_code(&g);
        assert_eq!(c.k(), 2);
        assert_eq!(row_space_code(c.basis()), c);
    }
}
