//! Structural checks: Weyl invariance of combination weights, branch-rule
//! cross-checks between constructions, and fixture equivalence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::registry::registry;
use crate::error::Result;
use crate::fieldcodes::{analyze, combination_weight, CodeReport, Prime};
use crate::repweights::{
    d_adjoint_spin_matrix, exceptional_adjoint_matrix, exceptional_minimal_matrix,
    ext_weight_matrix_a, is_positive_representative, paper_fixture, DiagonalBasis, ModuleId,
    ModuleSpec, SpinMode, WeightMatrix,
};
use crate::rootsys::Family;

pub const DEFAULT_SEED: u64 = 0x5eed_11e5;
pub const MAX_WORD: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzViolation {
    pub coefficients: Vec<i64>,
    pub word: Vec<usize>,
    pub before: usize,
    pub after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzOutcome {
    pub name: String,
    pub trials: usize,
    pub violations: Vec<FuzzViolation>,
}

/// Applies random words of simple reflections to random coefficient vectors
/// and checks the combination weight mod p never changes.
pub fn weyl_fuzz(m: &WeightMatrix, p: Prime, trials: usize, seed: u64) -> Result<FuzzOutcome> {
    let fp = m.to_fp(p)?;
    let action = m.weyl_action();
    let gens = action.generators();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for _ in 0..trials {
        let coefficients: Vec<i64> = (0..m.rows()).map(|_| rng.gen_range(-4..=4)).collect();
        let len = rng.gen_range(0..=MAX_WORD);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..gens)).collect();
        let mut l = coefficients.clone();
        for &g in &word {
            l = action.apply(g, &l)?;
        }
        let before = combination_weight(&fp, &coefficients)?;
        let after = combination_weight(&fp, &l)?;
        if before != after {
            violations.push(FuzzViolation {
                coefficients,
                word,
                before,
                after,
            });
        }
    }
    Ok(FuzzOutcome {
        name: format!("{} over F{p}", m.name()),
        trials,
        violations,
    })
}

/// Every distinct module in the registry (optional ones only if asked),
/// plus the printed fixtures.
pub fn fuzz_targets(include_optional: bool) -> Vec<ModuleSpec> {
    let mut specs: Vec<ModuleSpec> = Vec::new();
    for case in registry() {
        if (include_optional || !case.optional) && !specs.contains(&case.spec) {
            specs.push(case.spec);
        }
    }
    specs
}

/// Runs [`weyl_fuzz`] over every registered module and every fixture.
pub fn weyl_fuzz_all(trials: usize, seed: u64) -> Result<Vec<FuzzOutcome>> {
    let mut out = Vec::new();
    for (i, spec) in fuzz_targets(false).iter().enumerate() {
        let mut o = weyl_fuzz(&spec.build()?, spec.p, trials, seed.wrapping_add(i as u64))?;
        o.name = spec.to_string();
        out.push(o);
    }
    for name in crate::repweights::FIXTURE_NAMES {
        let mut o = weyl_fuzz(&paper_fixture(name)?, Prime::Three, trials, seed)?;
        o.name = format!("fixture {name}");
        out.push(o);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeComparison {
    pub name: String,
    pub left: String,
    pub right: String,
    pub left_report: CodeReport,
    pub right_report: CodeReport,
    /// Same (n,k,d), flags and weight distribution.
    pub agree: bool,
}

fn compare_codes(
    name: &str,
    left: (&str, CodeReport),
    right: (&str, CodeReport),
) -> CodeComparison {
    CodeComparison {
        name: name.to_string(),
        left: left.0.to_string(),
        right: right.0.to_string(),
        agree: left.1 == right.1,
        left_report: left.1,
        right_report: right.1,
    }
}

fn report(m: &WeightMatrix) -> Result<CodeReport> {
    Ok(analyze(&m.code(Prime::Three)?))
}

/// Branch-rule cross-checks: E6 adjoint vs o(10) adjoint ⊕ spin, E8 adjoint
/// vs o(16) adjoint ⊕ half-spin, E7 minimal vs Λ² of sl(8).
pub fn branch_checks() -> Result<Vec<CodeComparison>> {
    Ok(vec![
        compare_codes(
            "E6 adjoint ~ D5 direct_sum",
            (
                "E6 adjoint",
                report(&exceptional_adjoint_matrix(Family::E6)?)?,
            ),
            (
                "o(10) adjoint_plus_spin direct_sum",
                report(&d_adjoint_spin_matrix(5, SpinMode::DirectSum)?)?,
            ),
        ),
        compare_codes(
            "E8 adjoint ~ D8 weight_code",
            (
                "E8 adjoint",
                report(&exceptional_adjoint_matrix(Family::E8)?)?,
            ),
            (
                "o(16) adjoint_plus_spin weight_code",
                report(&d_adjoint_spin_matrix(8, SpinMode::WeightCode)?)?,
            ),
        ),
        compare_codes(
            "E7 minimal ~ A7 ext2",
            (
                "E7 minimal",
                report(&exceptional_minimal_matrix(Family::E7)?)?,
            ),
            (
                "sl(8) ext2 cartan_h",
                report(&ext_weight_matrix_a(8, 2, DiagonalBasis::CartanH)?)?,
            ),
        ),
    ])
}

fn signed_sorted(cols: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
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

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureCheck {
    pub fixture: String,
    pub generated: String,
    /// Column multisets agree after normalising each column's sign.
    pub columns_match: bool,
    pub weight_distribution_match: bool,
}

impl FixtureCheck {
    pub fn ok(&self) -> bool {
        self.columns_match && self.weight_distribution_match
    }
}

/// Generated exceptional matrices against the printed fixtures.
pub fn fixture_checks() -> Result<Vec<FixtureCheck>> {
    let pairs = [
        (
            "A_F4",
            ModuleSpec::exceptional(Family::F4, ModuleId::Minimal),
        ),
        (
            "B_F4",
            ModuleSpec::exceptional(Family::F4, ModuleId::Adjoint),
        ),
        (
            "Table5_1",
            ModuleSpec::exceptional(Family::E6, ModuleId::Minimal),
        ),
        (
            "Table6_1",
            ModuleSpec::exceptional(Family::E7, ModuleId::Minimal),
        ),
    ];
    let mut out = Vec::new();
    for (name, spec) in pairs {
        let fixture = paper_fixture(name)?;
        let generated = spec.build()?;
        let columns_match = fixture.rows() == generated.rows()
            && signed_sorted(fixture.columns()) == signed_sorted(generated.columns());
        let weight_distribution_match =
            report(&fixture)?.weight_distribution == report(&generated)?.weight_distribution;
        out.push(FixtureCheck {
            fixture: name.to_string(),
            generated: spec.to_string(),
            columns_match,
            weight_distribution_match,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fuzz_small_modules() {
        for spec in [
            ModuleSpec::new(Family::A, 6, ModuleId::Ext3, Prime::Two),
            ModuleSpec::new(Family::A, 6, ModuleId::AdjointL, Prime::Three),
            ModuleSpec::new(Family::D, 6, ModuleId::AdjointPlusSpin, Prime::Three),
            ModuleSpec::exceptional(Family::E6, ModuleId::Minimal),
        ] {
            let o = weyl_fuzz(&spec.build().unwrap(), spec.p, 200, 1).unwrap();
            assert!(o.violations.is_empty(), "{spec}: {:?}", o.violations[0]);
        }
    }

    #[test]
    fn fuzz_is_seeded() {
        let m = ModuleSpec::exceptional(Family::F4, ModuleId::Adjoint)
            .build()
            .unwrap();
        let a = weyl_fuzz(&m, Prime::Three, 50, 9).unwrap();
        let b = weyl_fuzz(&m, Prime::Three, 50, 9).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn fixtures_agree() {
        for c in fixture_checks().unwrap() {
            assert!(c.ok(), "{c:?}");
        }
    }
}
