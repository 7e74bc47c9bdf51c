//! Representations of groups and of their Plesken Lie algebras.

mod envelope;
mod irreducibility;
mod module;
mod representation;

pub use envelope::{commutant, envelope, envelope_basis};
pub use irreducibility::{
    irreducibility, schur_check, Classification, IrreducibilityConfig, IrreducibilityReport, RealStatus,
    SchurVerdict,
};
pub use module::{
    check_reducibility_inheritance, Escape, module_axioms_check, submodule_check, ModuleActionTable, ModuleCounterexample,
    ModuleReport, SubmoduleReport,
};
pub use representation::{induce_plesken_rep, rep_from_generators, rep_from_images, GroupRepresentation, LieRepresentation};
