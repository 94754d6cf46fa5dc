//! Cartan matrices, positive roots and Weyl orbits, all computed from the
//! Cartan matrix alone.
//!
//! Convention: `C[i][j] = α_i(h_j)`. Node indices are 0-based, so node `i`
//! is the simple root α_{i+1}.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E6,
    E7,
    E8,
    F4,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::A,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
    ];

    /// Rank of the exceptional families; `None` for A and D.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::A | Family::D => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                Error::UnsupportedFamily(format!("{s:?} (expected one of A, D, E6, E7, E8, F4)"))
            })
    }
}

/// Simple-root coefficients of a root, β = Σ c_j α_j.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootCoeffs(pub Vec<i64>);

impl RootCoeffs {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootCoeffs(v)
    }
}

/// Eigenvalues (μ(h_1), …, μ(h_n)) of the Cartan generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    /// Fundamental weight λ_{i+1}.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        WeightVec(v)
    }

    pub fn neg(&self) -> Self {
        WeightVec(self.0.iter().map(|x| -x).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CartanMatrix {
    family: Family,
    rank: usize,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::InvalidNode {
                node: i,
                rank: self.rank,
            })
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank,
                found: len,
            })
        }
    }
}

/// Standard Cartan matrix with the usual Dynkin labels:
/// A and D are chains (D_m forks at node m−2), E_n is the chain
/// 1-3-4-5-… with node 2 hanging off node 4, F4 has the double bond
/// between nodes 2 and 3 with α_2 long.
pub fn cartan_matrix(family: Family, rank: usize) -> Result<CartanMatrix> {
    let bad = || Error::UnsupportedFamily(format!("{family} with rank {rank}"));
    let ok = match family {
        Family::A => rank >= 1,
        Family::D => rank >= 3,
        _ => family.fixed_rank() == Some(rank),
    };
    if !ok {
        return Err(bad());
    }
    let mut c = vec![vec![0i64; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    // 1-based bond helper
    let mut bond = |i: usize, j: usize| {
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    };
    match family {
        Family::A => {
            for i in 1..rank {
                bond(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..rank - 1 {
                bond(i, i + 1);
            }
            bond(rank - 2, rank);
        }
        Family::E6 | Family::E7 | Family::E8 => {
            bond(1, 3);
            bond(3, 4);
            bond(2, 4);
            for i in 4..rank {
                bond(i, i + 1);
            }
        }
        Family::F4 => {
            bond(1, 2);
            bond(2, 3);
            bond(3, 4);
            c[1][2] = -2;
        }
    }
    Ok(CartanMatrix {
        family,
        rank,
        entries: c,
    })
}

/// ⟨β, α_i∨⟩ for every i, i.e. the row vector β·C.
pub fn pairing_vector(c: &CartanMatrix, beta: &RootCoeffs) -> Result<WeightVec> {
    c.check_len(beta.0.len())?;
    let n = c.rank;
    Ok(WeightVec(
        (0..n)
            .map(|i| (0..n).map(|j| beta.0[j] * c.get(j, i)).sum())
            .collect(),
    ))
}

/// All positive roots, sorted by (height, coefficients).
///
/// Grows roots height by height: if β − pα_i, …, β are roots and β − (p+1)α_i
/// is not, the α_i-string through β continues upward while
/// p − ⟨β, α_i∨⟩ > 0.
pub fn positive_roots(c: &CartanMatrix) -> Vec<RootCoeffs> {
    let n = c.rank;
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier: Vec<Vec<i64>> = (0..n).map(|i| RootCoeffs::simple(n, i).0).collect();
    known.extend(frontier.iter().cloned());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            let pair = pairing_vector(c, &RootCoeffs(beta.clone())).expect("rank matches");
            for i in 0..n {
                let mut down = beta.clone();
                let mut p = 0;
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pair.0[i] > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut roots: Vec<RootCoeffs> = known.into_iter().map(RootCoeffs).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0)));
    roots
}

/// Simple reflection of a weight: μ'_j = μ_j − μ_i·C[i][j].
pub fn reflect_weight(c: &CartanMatrix, i: usize, mu: &WeightVec) -> Result<WeightVec> {
    c.check_node(i)?;
    c.check_len(mu.0.len())?;
    let mi = mu.0[i];
    Ok(WeightVec(
        mu.0.iter()
            .enumerate()
            .map(|(j, &x)| x - mi * c.get(i, j))
            .collect(),
    ))
}

/// Weyl orbit of a dominant weight, sorted lexicographically.
pub fn weyl_orbit(c: &CartanMatrix, dominant: &WeightVec) -> Result<Vec<WeightVec>> {
    c.check_len(dominant.0.len())?;
    if dominant.0.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(dominant.0.clone()));
    }
    let mut seen: BTreeSet<WeightVec> = BTreeSet::new();
    seen.insert(dominant.clone());
    let mut stack = vec![dominant.clone()];
    while let Some(mu) = stack.pop() {
        for i in 0..c.rank {
            if mu.0[i] == 0 {
                continue;
            }
            let nu = reflect_weight(c, i, &mu)?;
            if seen.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Coefficients of s_i(Σ l_k h_k) in the h-basis.
pub fn reflect_coroot_coeffs(c: &CartanMatrix, i: usize, l: &[i64]) -> Result<Vec<i64>> {
    c.check_node(i)?;
    c.check_len(l.len())?;
    let s: i64 = l.iter().enumerate().map(|(k, &x)| x * c.get(i, k)).sum();
    let mut out = l.to_vec();
    out[i] -= s;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_basics() {
        let c = cartan_matrix(Family::A, 2).unwrap();
        assert_eq!(c.rows(), &[vec![2, -1], vec![-1, 2]]);
        let roots = positive_roots(&c);
        assert_eq!(
            roots,
            vec![
                RootCoeffs(vec![0, 1]),
                RootCoeffs(vec![1, 0]),
                RootCoeffs(vec![1, 1])
            ]
        );
        assert_eq!(
            pairing_vector(&c, &RootCoeffs(vec![1, 0])).unwrap().0,
            vec![2, -1]
        );
        assert_eq!(
            pairing_vector(&c, &RootCoeffs(vec![1, 1])).unwrap().0,
            vec![1, 1]
        );
        assert_eq!(reflect_coroot_coeffs(&c, 0, &[1, 0]).unwrap(), vec![-1, 0]);
    }

    #[test]
    fn f4_double_bond() {
        let c = cartan_matrix(Family::F4, 4).unwrap();
        assert_eq!(c.get(1, 2), -2);
        assert_eq!(c.get(2, 1), -1);
        let highest = RootCoeffs(vec![2, 3, 4, 2]);
        assert_eq!(pairing_vector(&c, &highest).unwrap().0, vec![1, 0, 0, 0]);
        assert_eq!(positive_roots(&c).last().unwrap(), &highest);
    }

    #[test]
    fn e6_node_two_hangs_off_four() {
        let c = cartan_matrix(Family::E6, 6).unwrap();
        assert_eq!(c.get(1, 3), -1);
        assert_eq!(c.get(1, 2), 0);
        assert_eq!(c.get(0, 2), -1);
    }

    #[test]
    fn root_counts() {
        for r in 1..=8 {
            let c = cartan_matrix(Family::A, r).unwrap();
            assert_eq!(positive_roots(&c).len(), r * (r + 1) / 2);
        }
        for m in 3..=8 {
            let c = cartan_matrix(Family::D, m).unwrap();
            assert_eq!(positive_roots(&c).len(), m * (m - 1));
        }
        for (f, r, count) in [
            (Family::E6, 6, 36),
            (Family::E7, 7, 63),
            (Family::E8, 8, 120),
            (Family::F4, 4, 24),
        ] {
            assert_eq!(positive_roots(&cartan_matrix(f, r).unwrap()).len(), count);
        }
    }

    #[test]
    fn bad_family_rank() {
        assert!(cartan_matrix(Family::E6, 7).is_err());
        assert!(cartan_matrix(Family::D, 2).is_err());
        assert!(cartan_matrix(Family::A, 0).is_err());
        assert!("G2".parse::<Family>().is_err());
        assert_eq!("e7".parse::<Family>().unwrap(), Family::E7);
    }

    #[test]
    fn orbit_sizes() {
        let a1 = cartan_matrix(Family::A, 1).unwrap();
        assert_eq!(
            weyl_orbit(&a1, &WeightVec(vec![1])).unwrap(),
            vec![WeightVec(vec![-1]), WeightVec(vec![1])]
        );
        for (f, r, node, size) in [
            (Family::E6, 6, 0, 27),
            (Family::E7, 7, 6, 56),
            (Family::F4, 4, 3, 24),
            (Family::D, 8, 7, 128),
            (Family::D, 5, 4, 16),
        ] {
            let c = cartan_matrix(f, r).unwrap();
            let o = weyl_orbit(&c, &WeightVec::fundamental(r, node)).unwrap();
            assert_eq!(o.len(), size, "{f}");
        }
    }

    #[test]
    fn orbit_rejects_non_dominant() {
        let c = cartan_matrix(Family::A, 2).unwrap();
        assert!(matches!(
            weyl_orbit(&c, &WeightVec(vec![1, -1])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn invalid_node() {
        let c = cartan_matrix(Family::A, 2).unwrap();
        assert!(matches!(
            reflect_coroot_coeffs(&c, 2, &[0, 0]),
            Err(Error::InvalidNode { node: 2, rank: 2 })
        ));
        assert!(reflect_coroot_coeffs(&c, 0, &[0]).is_err());
    }

    #[test]
    fn f4_roots_match_published_list() {
        let listed: [[i64; 4]; 24] = [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, 1, 0, 0],
            [0, 1, 1, 0],
            [0, 0, 1, 1],
            [1, 1, 1, 0],
            [0, 1, 1, 1],
            [0, 1, 2, 0],
            [1, 1, 2, 0],
            [0, 1, 2, 1],
            [1, 1, 1, 1],
            [1, 2, 2, 0],
            [1, 1, 2, 1],
            [0, 1, 2, 2],
            [1, 2, 2, 1],
            [1, 1, 2, 2],
            [1, 2, 2, 2],
            [1, 2, 3, 1],
            [1, 2, 3, 2],
            [1, 2, 4, 2],
            [1, 3, 4, 2],
            [2, 3, 4, 2],
        ];
        let c = cartan_matrix(Family::F4, 4).unwrap();
        let got: BTreeSet<Vec<i64>> = positive_roots(&c).into_iter().map(|r| r.0).collect();
        let want: BTreeSet<Vec<i64>> = listed.iter().map(|r| r.to_vec()).collect();
        assert_eq!(got, want);
    }
}
