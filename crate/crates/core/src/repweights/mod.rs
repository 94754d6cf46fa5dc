//! Integer weight matrices of the modules whose codes are studied, plus
//! printed fixtures to check them against.

mod classical;
mod exceptional;
mod fixtures;
mod matrix;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use classical::{
    adjoint_weight_matrix_a, d_adjoint_spin_matrix, d_lambda2_matrix, d_lambda3_matrix,
    d_spin_matrix, ext4_sl8_matrix, ext_weight_matrix_a, SpinMode,
};
pub use exceptional::{
    exceptional_adjoint_matrix, exceptional_minimal_matrix, is_positive_representative,
};
pub use fixtures::{paper_fixture, FIXTURE_NAMES};
pub use matrix::{ColumnLabel, DiagonalBasis, WeightMatrix, WeylAction};

use crate::error::{Error, Result};
use crate::fieldcodes::{LinearCode, Prime};
use crate::rootsys::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleId {
    Ext2,
    Ext3,
    Ext4,
    #[serde(rename = "adjoint_K")]
    AdjointK,
    #[serde(rename = "adjoint_L")]
    AdjointL,
    Spin,
    SpinHalf,
    AdjointPlusSpin,
    Minimal,
    Adjoint,
}

impl ModuleId {
    pub const ALL: [ModuleId; 10] = [
        ModuleId::Ext2,
        ModuleId::Ext3,
        ModuleId::Ext4,
        ModuleId::AdjointK,
        ModuleId::AdjointL,
        ModuleId::Spin,
        ModuleId::SpinHalf,
        ModuleId::AdjointPlusSpin,
        ModuleId::Minimal,
        ModuleId::Adjoint,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ModuleId::Ext2 => "ext2",
            ModuleId::Ext3 => "ext3",
            ModuleId::Ext4 => "ext4",
            ModuleId::AdjointK => "adjoint_K",
            ModuleId::AdjointL => "adjoint_L",
            ModuleId::Spin => "spin",
            ModuleId::SpinHalf => "spin_half",
            ModuleId::AdjointPlusSpin => "adjoint_plus_spin",
            ModuleId::Minimal => "minimal",
            ModuleId::Adjoint => "adjoint",
        }
    }
}

impl fmt::Display for ModuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModuleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        ModuleId::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let valid: Vec<&str> = ModuleId::ALL.iter().map(|m| m.as_str()).collect();
                Error::InvalidParameter(format!(
                    "module {s:?} (expected one of {})",
                    valid.join(", ")
                ))
            })
    }
}

/// A module together with the field its code is taken over.
///
/// `rank` is n for sl(n), m for o(2m), and the Lie rank for the exceptional
/// families.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ModuleSpec {
    pub family: Family,
    pub rank: usize,
    pub module: ModuleId,
    pub p: Prime,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<SpinMode>,
    /// Overrides the default row basis for sl(n) modules.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<DiagonalBasis>,
}

impl ModuleSpec {
    pub fn new(family: Family, rank: usize, module: ModuleId, p: Prime) -> Self {
        ModuleSpec {
            family,
            rank,
            module,
            p,
            mode: None,
            basis: None,
        }
    }

    /// Exceptional family at its fixed rank, over F3.
    pub fn exceptional(family: Family, module: ModuleId) -> Self {
        ModuleSpec::new(
            family,
            family.fixed_rank().unwrap_or(0),
            module,
            Prime::Three,
        )
    }

    pub fn with_mode(mut self, mode: SpinMode) -> Self {
        self.mode = Some(mode);
        self
    }

    pub fn with_basis(mut self, basis: DiagonalBasis) -> Self {
        self.basis = Some(basis);
        self
    }

    fn illegal(&self, why: &str) -> Error {
        Error::InvalidParameter(format!("{self}: {why}"))
    }

    /// Checks that the combination is one the constructions define.
    pub fn validate(&self) -> Result<()> {
        use ModuleId::*;
        let ternary_only = || {
            if self.p == Prime::Three {
                Ok(())
            } else {
                Err(self.illegal("only defined over F3"))
            }
        };
        if self.mode.is_some() && self.module != AdjointPlusSpin {
            return Err(self.illegal("--mode applies only to adjoint_plus_spin"));
        }
        if self.basis.is_some() && self.family != Family::A {
            return Err(self.illegal("a basis override applies only to family A"));
        }
        match self.family {
            Family::A => {
                let n = self.rank;
                match self.module {
                    Ext2 | Ext3 => {
                        let r = if self.module == Ext2 { 2 } else { 3 };
                        if n <= r {
                            return Err(self.illegal(&format!("needs n > {r}")));
                        }
                        Ok(())
                    }
                    Ext4 => {
                        if n != 8 {
                            return Err(self.illegal("ext4 is defined for n = 8 only"));
                        }
                        ternary_only()
                    }
                    Adjoint | AdjointK | AdjointL => {
                        if n < 3 {
                            return Err(self.illegal("needs n >= 3"));
                        }
                        if self.basis.is_some() && self.module != Adjoint {
                            return Err(self.illegal("adjoint_K/adjoint_L already fix the basis"));
                        }
                        ternary_only()
                    }
                    _ => Err(self.illegal("not a module of sl(n)")),
                }
            }
            Family::D => {
                let m = self.rank;
                match self.module {
                    Ext2 | Ext3 | Adjoint | Spin if m >= 3 => ternary_only(),
                    SpinHalf if m >= 3 && m.is_multiple_of(2) => ternary_only(),
                    SpinHalf if m >= 3 => Err(self.illegal("spin_half needs even m")),
                    AdjointPlusSpin if m >= 4 => ternary_only(),
                    Ext2 | Ext3 | Adjoint | Spin | SpinHalf | AdjointPlusSpin => {
                        Err(self.illegal("rank too small"))
                    }
                    _ => Err(self.illegal("not a module of o(2m)")),
                }
            }
            f => {
                if Some(self.rank) != f.fixed_rank() {
                    return Err(self.illegal("wrong rank for exceptional family"));
                }
                match (f, self.module) {
                    (Family::E8, Adjoint) => ternary_only(),
                    (Family::E8, _) => Err(self.illegal("E8 has only the adjoint module")),
                    (_, Adjoint | Minimal) => ternary_only(),
                    _ => Err(self.illegal("expected minimal or adjoint")),
                }
            }
        }
    }

    /// The integer weight matrix of this module.
    pub fn build(&self) -> Result<WeightMatrix> {
        use ModuleId::*;
        self.validate()?;
        let basis = self.basis.unwrap_or(DiagonalBasis::CartanH);
        match self.family {
            Family::A => match self.module {
                Ext2 => ext_weight_matrix_a(self.rank, 2, basis),
                Ext3 => ext_weight_matrix_a(self.rank, 3, basis),
                Ext4 => match self.basis {
                    None => ext4_sl8_matrix(),
                    Some(b) => ext_weight_matrix_a(8, 4, b),
                },
                Adjoint => adjoint_weight_matrix_a(self.rank, basis),
                AdjointK => adjoint_weight_matrix_a(self.rank, DiagonalBasis::CartanH),
                AdjointL => adjoint_weight_matrix_a(self.rank, DiagonalBasis::MatrixUnitE),
                _ => unreachable!("validated"),
            },
            Family::D => match self.module {
                Ext2 | Adjoint => d_lambda2_matrix(self.rank),
                Ext3 => d_lambda3_matrix(self.rank),
                Spin => d_spin_matrix(self.rank, false),
                SpinHalf => d_spin_matrix(self.rank, true),
                AdjointPlusSpin => {
                    d_adjoint_spin_matrix(self.rank, self.mode.unwrap_or(SpinMode::WeightCode))
                }
                _ => unreachable!("validated"),
            },
            f => match self.module {
                Minimal => exceptional_minimal_matrix(f),
                Adjoint => exceptional_adjoint_matrix(f),
                _ => unreachable!("validated"),
            },
        }
    }

    /// The linear code spanned by the reduced weight matrix.
    pub fn code(&self) -> Result<LinearCode> {
        self.build()?.code(self.p)
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "sl({})", self.rank)?,
            Family::D => write!(f, "o({})", 2 * self.rank)?,
            fam => write!(f, "{fam}")?,
        }
        write!(f, " {}", self.module)?;
        if let Some(mode) = self.mode {
            write!(f, " {mode}")?;
        }
        if let Some(b) = self.basis {
            write!(f, " {b}")?;
        }
        write!(f, " over F{}", self.p)
    }
}
