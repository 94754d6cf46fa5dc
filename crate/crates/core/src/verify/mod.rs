//! Registered claims, closed forms, table reproduction and structural
//! cross-checks, all run against the exact constructions.

mod checks;
mod formulas;
mod registry;
mod run;
mod tables;

pub use checks::{
    branch_checks, fixture_checks, fuzz_targets, weyl_fuzz, weyl_fuzz_all, CodeComparison,
    FixtureCheck, FuzzOutcome, FuzzViolation, DEFAULT_SEED, MAX_WORD,
};
pub use formulas::{
    closed_form_weight, enumerated_weight, formula_sweep, FormulaId, FormulaMismatch,
    FormulaParams, FormulaSweep,
};
pub use registry::{registry, Annotation, Expected, TheoremCase};
pub use run::{
    compare, matches_filter, run_case, run_suite, CaseResult, Discrepancy, FieldPass, Limits,
    Status, SuiteReport, Totals,
};
pub use tables::{reproduce_table, TableReport, TableRow, TABLE_IDS};
