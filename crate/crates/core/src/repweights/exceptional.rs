//! Minimal and adjoint modules of F4, E6, E7 and E8, generated from the
//! Cartan matrix.

use super::matrix::{ColumnLabel, DiagonalBasis, WeightMatrix, WeylAction};
use crate::error::{Error, Result};
use crate::rootsys::{
    cartan_matrix, pairing_vector, positive_roots, weyl_orbit, Family, WeightVec,
};

/// First nonzero coordinate positive: the kept member of a ± pair.
pub fn is_positive_representative(w: &[i64]) -> bool {
    w.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// Minimal module as a Weyl orbit: F4 from λ4 and E7 from λ7 (both
/// negation-closed, so halved), E6 from λ1 (kept whole).
pub fn exceptional_minimal_matrix(family: Family) -> Result<WeightMatrix> {
    let (node, halve) = match family {
        Family::F4 => (3, true),
        Family::E6 => (0, false),
        Family::E7 => (6, true),
        other => {
            return Err(Error::UnsupportedFamily(format!(
                "{other} has no minimal module here (expected F4, E6 or E7)"
            )))
        }
    };
    let rank = family.fixed_rank().expect("exceptional");
    let c = cartan_matrix(family, rank)?;
    let orbit = weyl_orbit(&c, &WeightVec::fundamental(rank, node))?;
    let columns = orbit
        .into_iter()
        .filter(|w| !halve || is_positive_representative(&w.0))
        .map(|w| (ColumnLabel::Weight(w.0.clone()), w.0))
        .collect();
    WeightMatrix::from_columns(
        format!("{family} minimal"),
        rank,
        columns,
        DiagonalBasis::CartanH,
        WeylAction::Cartan(c),
    )
}

/// Adjoint module on the positive root vectors: one column per positive
/// root, holding its pairings with the simple coroots.
pub fn exceptional_adjoint_matrix(family: Family) -> Result<WeightMatrix> {
    if family == Family::A || family == Family::D {
        return Err(Error::UnsupportedFamily(format!(
            "{family} (expected F4, E6, E7 or E8)"
        )));
    }
    let rank = family.fixed_rank().expect("exceptional");
    let c = cartan_matrix(family, rank)?;
    let columns = positive_roots(&c)
        .into_iter()
        .map(|beta| {
            let w = pairing_vector(&c, &beta).expect("rank matches");
            (ColumnLabel::Root(beta.0), w.0)
        })
        .collect();
    WeightMatrix::from_columns(
        format!("{family} adjoint"),
        rank,
        columns,
        DiagonalBasis::CartanH,
        WeylAction::Cartan(c),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcodes::{combination_weight, Prime};
    use crate::repweights::paper_fixture;

    fn sorted_up_to_sign(cols: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = cols
            .into_iter()
            .map(|c| {
                if is_positive_representative(&c) {
                    c
                } else {
                    c.iter().map(|x| -x).collect()
                }
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn column_counts() {
        let n = |f| exceptional_adjoint_matrix(f).unwrap().cols();
        assert_eq!(
            [n(Family::F4), n(Family::E6), n(Family::E7), n(Family::E8)],
            [24, 36, 63, 120]
        );
        let m = |f| exceptional_minimal_matrix(f).unwrap().cols();
        assert_eq!([m(Family::F4), m(Family::E6), m(Family::E7)], [12, 27, 28]);
        assert!(exceptional_minimal_matrix(Family::E8).is_err());
    }

    #[test]
    fn generated_matches_fixtures() {
        for (family, fixture, signed) in [
            (Family::F4, "A_F4", true),
            (Family::E6, "Table5_1", false),
            (Family::E7, "Table6_1", true),
        ] {
            let g = exceptional_minimal_matrix(family).unwrap().columns();
            let f = paper_fixture(fixture).unwrap().columns();
            if signed {
                assert_eq!(sorted_up_to_sign(g), sorted_up_to_sign(f), "{fixture}");
            } else {
                let (mut g, mut f) = (g, f);
                g.sort();
                f.sort();
                assert_eq!(g, f, "{fixture}");
            }
        }
        let mut g = exceptional_adjoint_matrix(Family::F4).unwrap().columns();
        let mut f = paper_fixture("B_F4").unwrap().columns();
        g.sort();
        f.sort();
        assert_eq!(g, f);
    }

    #[test]
    fn e6_adjoint_row_relation() {
        let b = exceptional_adjoint_matrix(Family::E6).unwrap();
        let fp = b.to_fp(Prime::Three).unwrap();
        assert_eq!(combination_weight(&fp, &[1, 0, -1, 0, 1, -1]).unwrap(), 0);
        assert_eq!(fp.rank(), 5);
    }

    #[test]
    fn f4_row_weights() {
        let a = exceptional_minimal_matrix(Family::F4)
            .unwrap()
            .to_fp(Prime::Three)
            .unwrap();
        assert_eq!(combination_weight(&a, &[1, 0, 0, 0]).unwrap(), 6);
        assert_eq!(combination_weight(&a, &[0, 0, 1, 0]).unwrap(), 9);
        assert_eq!(combination_weight(&a, &[1, 0, 1, 0]).unwrap(), 9);
    }
}
