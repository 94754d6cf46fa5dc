//! Bit-sliced codeword arithmetic and exhaustive weight enumeration.
//!
//! Binary symbols take one bit each. Ternary symbols are split across two
//! planes: `plus` has bit j set when symbol j is 1, `minus` when it is 2.
//! The enumerator walks coefficient space in a p-ary Gray order so that each
//! step costs exactly one packed row addition.

use super::matrix::{FpMatrix, Prime};

/// Adds two packed ternary vectors word by word (no carries between lanes).
#[inline(always)]
pub fn f3_add(ap: u64, am: u64, bp: u64, bm: u64) -> (u64, u64) {
    let rp = am ^ ((ap ^ (am | bp)) & !bm);
    let rm = ap ^ ((ap | (am ^ bm)) & !bp);
    (rp, rm)
}

#[derive(Debug, Clone)]
pub(crate) struct PackedRows {
    p: Prime,
    n: usize,
    words: usize,
    // p=2: one plane per row; p=3: plus plane then minus plane per row.
    planes: Vec<u64>,
    k: usize,
}

impl PackedRows {
    pub fn new(m: &FpMatrix) -> Self {
        let n = m.cols();
        let words = n.div_ceil(64);
        let per_row = if m.p() == Prime::Two {
            words
        } else {
            2 * words
        };
        let mut planes = vec![0u64; per_row * m.rows()];
        for (r, row) in m.row_iter().enumerate() {
            let base = r * per_row;
            for (j, &x) in row.iter().enumerate() {
                let bit = 1u64 << (j % 64);
                match x {
                    0 => {}
                    1 => planes[base + j / 64] |= bit,
                    _ => planes[base + words + j / 64] |= bit,
                }
            }
        }
        PackedRows {
            p: m.p(),
            n,
            words,
            planes,
            k: m.rows(),
        }
    }

    fn per_row(&self) -> usize {
        if self.p == Prime::Two {
            self.words
        } else {
            2 * self.words
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        let w = self.per_row();
        &self.planes[r * w..(r + 1) * w]
    }

    /// acc += c * row r, with c in 1..p.
    #[inline]
    fn add_row(&self, acc: &mut [u64], r: usize, c: u8) {
        let row = self.row(r);
        let w = self.words;
        match self.p {
            Prime::Two => {
                for (a, b) in acc.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
            Prime::Three => {
                let (rp, rm) = row.split_at(w);
                // multiplying by 2 = -1 swaps the planes
                let (bp, bm) = if c == 1 { (rp, rm) } else { (rm, rp) };
                let (ap, am) = acc.split_at_mut(w);
                for i in 0..w {
                    let (x, y) = f3_add(ap[i], am[i], bp[i], bm[i]);
                    ap[i] = x;
                    am[i] = y;
                }
            }
        }
    }

    #[inline]
    fn weight(&self, acc: &[u64]) -> usize {
        match self.p {
            Prime::Two => acc.iter().map(|w| w.count_ones() as usize).sum(),
            Prime::Three => {
                let (ap, am) = acc.split_at(self.words);
                ap.iter()
                    .zip(am)
                    .map(|(a, b)| (a | b).count_ones() as usize)
                    .sum()
            }
        }
    }

    /// Weight histogram over every codeword whose high `k - low` coefficients
    /// spell `prefix` (base p, most significant last) and whose low
    /// coefficients range freely.
    fn chunk_histogram(&self, low: usize, prefix: u64, hist: &mut [u64]) {
        let q = self.p.modulus() as u64;
        let mut acc = vec![0u64; self.per_row()];
        let mut rest = prefix;
        for r in low..self.k {
            let c = (rest % q) as u8;
            rest /= q;
            if c != 0 {
                self.add_row(&mut acc, r, c);
            }
        }
        hist[self.weight(&acc)] += 1;
        match self.p {
            Prime::Two => {
                let total = 1u64 << low;
                for i in 1..total {
                    self.add_row(&mut acc, i.trailing_zeros() as usize, 1);
                    hist[self.weight(&acc)] += 1;
                }
            }
            Prime::Three => {
                // Modular ternary Gray code: going from i to i+1 the only
                // Gray digit that moves is the one at the position of the
                // lowest digit of i that is not 2, and it moves by +1.
                let mut digits = vec![0u8; low + 1];
                let total = 3u64.pow(low as u32);
                for _ in 1..total {
                    let mut v = 0;
                    while digits[v] == 2 {
                        digits[v] = 0;
                        v += 1;
                    }
                    digits[v] += 1;
                    self.add_row(&mut acc, v, 1);
                    hist[self.weight(&acc)] += 1;
                }
            }
        }
    }

    /// Full weight distribution A_0..A_n. Deterministic for any worker count.
    pub fn histogram(&self, workers: usize) -> Vec<u64> {
        let q = self.p.modulus() as u64;
        let workers = workers.max(1);
        // Split on the high coefficients so there are a few chunks per worker.
        let mut high = 0;
        if workers > 1 {
            while high < self.k && q.pow(high as u32) < 8 * workers as u64 {
                high += 1;
            }
        }
        let low = self.k - high;
        let chunks = q.pow(high as u32);
        let mut hist = vec![0u64; self.n + 1];
        if workers == 1 || chunks == 1 {
            for prefix in 0..chunks {
                self.chunk_histogram(low, prefix, &mut hist);
            }
            return hist;
        }
        let partials: Vec<Vec<u64>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers as u64)
                .map(|w| {
                    s.spawn(move || {
                        let mut h = vec![0u64; self.n + 1];
                        let mut prefix = w;
                        while prefix < chunks {
                            self.chunk_histogram(low, prefix, &mut h);
                            prefix += workers as u64;
                        }
                        h
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        });
        for part in partials {
            for (a, b) in hist.iter_mut().zip(part) {
                *a += b;
            }
        }
        hist
    }
}
