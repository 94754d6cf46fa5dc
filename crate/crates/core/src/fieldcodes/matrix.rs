use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime fields the codes live over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Prime {
    Two,
    Three,
}

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        match p {
            2 => Ok(Prime::Two),
            3 => Ok(Prime::Three),
            other => Err(Error::UnsupportedModulus(other)),
        }
    }

    #[inline]
    pub fn modulus(self) -> u8 {
        match self {
            Prime::Two => 2,
            Prime::Three => 3,
        }
    }

    /// Reduces an integer into `0..p`.
    #[inline]
    pub fn reduce(self, x: i64) -> u8 {
        x.rem_euclid(self.modulus() as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        (a + b) % self.modulus()
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        (self.modulus() - a) % self.modulus()
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        (a * b) % self.modulus()
    }

    /// Multiplicative inverse of a nonzero symbol. In F2 and F3 every unit is its own inverse.
    #[inline]
    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(a != 0 && a < self.modulus());
        a
    }
}

impl From<Prime> for u8 {
    fn from(p: Prime) -> u8 {
        p.modulus()
    }
}

impl TryFrom<u8> for Prime {
    type Error = Error;
    fn try_from(p: u8) -> Result<Self> {
        Prime::new(p as u64)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.modulus())
    }
}

impl FromStr for Prime {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let p: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid modulus {s:?}")))?;
        Prime::new(p)
    }
}

/// A dense matrix over F2 or F3, one byte per symbol, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FpMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Output of [`FpMatrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: FpMatrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

impl FpMatrix {
    /// Builds a matrix from symbols already in `0..p`.
    pub fn new(p: Prime, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if cols == 0 {
            return Err(Error::NoColumns);
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(pos) = data.iter().position(|&x| x >= p.modulus()) {
            return Err(Error::SymbolOutOfRange {
                p: p.modulus(),
                row: pos / cols,
                col: pos % cols,
                value: data[pos] as i64,
            });
        }
        Ok(FpMatrix {
            p,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Result<Self> {
        FpMatrix::new(p, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(p: Prime, n: usize) -> Result<Self> {
        let mut m = FpMatrix::zeros(p, n, n)?;
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        Ok(m)
    }

    /// Reduces integer rows mod p. All rows must share one length.
    pub fn from_integer_rows(p: Prime, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row.iter().map(|&x| p.reduce(x)));
        }
        FpMatrix::new(p, rows.len(), cols, data)
    }

    #[inline]
    pub fn p(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u8]> {
        self.data.chunks_exact(self.cols)
    }

    pub fn transpose(&self) -> Result<FpMatrix> {
        if self.rows == 0 {
            return Err(Error::NoColumns);
        }
        let mut data = vec![0; self.data.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[c * self.rows + r] = self.get(r, c);
            }
        }
        FpMatrix::new(self.p, self.cols, self.rows, data)
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.p != other.p || self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        FpMatrix::new(self.p, self.rows, cols, data)
    }

    /// Returns the matrix whose column `j` is column `perm[j]` of `self`.
    pub fn select_columns(&self, perm: &[usize]) -> Result<FpMatrix> {
        if perm.is_empty() {
            return Err(Error::NoColumns);
        }
        if let Some(&bad) = perm.iter().find(|&&c| c >= self.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: bad,
            });
        }
        let mut data = Vec::with_capacity(self.rows * perm.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(perm.iter().map(|&c| row[c]));
        }
        FpMatrix::new(self.p, self.rows, perm.len(), data)
    }

    /// Multiplies the listed columns by -1.
    pub fn negate_columns(&self, which: &[usize]) -> FpMatrix {
        let mut out = self.clone();
        for r in 0..self.rows {
            for &c in which {
                let i = r * self.cols + c;
                out.data[i] = self.p.neg(out.data[i]);
            }
        }
        out
    }

    /// `coeffs · self` reduced mod p.
    pub fn combine_rows(&self, coeffs: &[i64]) -> Result<Vec<u8>> {
        if coeffs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: coeffs.len(),
            });
        }
        let mut acc = vec![0u8; self.cols];
        for (row, &c) in self.row_iter().zip(coeffs) {
            let c = self.p.reduce(c);
            if c == 0 {
                continue;
            }
            for (a, &x) in acc.iter_mut().zip(row) {
                *a = self.p.add(*a, self.p.mul(c, x));
            }
        }
        Ok(acc)
    }

    /// The Gram matrix `self · selfᵀ` as a flat `rows × rows` table.
    pub fn gram(&self) -> Vec<u8> {
        let k = self.rows;
        let mut g = vec![0u8; k * k];
        for i in 0..k {
            for j in i..k {
                let dot = self
                    .row(i)
                    .iter()
                    .zip(self.row(j))
                    .map(|(&a, &b)| (a * b) as u32)
                    .sum::<u32>();
                let v = (dot % self.p.modulus() as u32) as u8;
                g[i * k + j] = v;
                g[j * k + i] = v;
            }
        }
        g
    }

    /// Gauss-Jordan elimination. Pivot columns come out strictly ascending and
    /// every pivot is 1; zero rows are dropped from `reduced`.
    pub fn rref(&self) -> Rref {
        let p = self.p;
        let cols = self.cols;
        let mut m = self.data.clone();
        let mut rank = 0;
        let mut pivots = Vec::new();
        for c in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(piv) = (rank..self.rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            if piv != rank {
                for j in 0..cols {
                    m.swap(piv * cols + j, rank * cols + j);
                }
            }
            let inv = p.inv(m[rank * cols + c]);
            if inv != 1 {
                for j in 0..cols {
                    m[rank * cols + j] = p.mul(m[rank * cols + j], inv);
                }
            }
            for r in 0..self.rows {
                let f = m[r * cols + c];
                if r == rank || f == 0 {
                    continue;
                }
                let nf = p.neg(f);
                for j in c..cols {
                    let pv = m[rank * cols + j];
                    if pv != 0 {
                        m[r * cols + j] = p.add(m[r * cols + j], p.mul(nf, pv));
                    }
                }
            }
            pivots.push(c);
            rank += 1;
        }
        m.truncate(rank * cols);
        Rref {
            reduced: FpMatrix {
                p,
                rows: rank,
                cols,
                data: m,
            },
            rank,
            pivot_columns: pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Serializes in the shared text format: header `p rows cols`, then one
    /// line of space-separated digits per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.p, self.rows, self.cols);
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<FpMatrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        if nums.len() != 3 {
            return Err(Error::Parse(format!("bad header {header:?}")));
        }
        let p: Prime = nums[0].parse()?;
        let parse_count = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad count {s:?}")))
        };
        let rows = parse_count(nums[1])?;
        let cols = parse_count(nums[2])?;
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {r}")))?;
            let before = data.len();
            for (c, tok) in line.split_whitespace().enumerate() {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad symbol {tok:?}")))?;
                if !(0..p.modulus() as i64).contains(&v) {
                    return Err(Error::SymbolOutOfRange {
                        p: p.modulus(),
                        row: r,
                        col: c,
                        value: v,
                    });
                }
                data.push(v as u8);
            }
            if data.len() - before != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: data.len() - before,
                });
            }
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing rows after matrix".into()));
        }
        FpMatrix::new(p, rows, cols, data)
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for FpMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FpMatrix::parse_text(s)
    }
}
