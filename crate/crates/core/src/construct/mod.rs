//! Construction of icosahedrally symmetric curl eigenfields from a
//! trigonometric ansatz, and the catalog of named fields.

pub mod ansatz;
pub mod catalog;
pub mod forms;
pub mod reference;
pub mod stages;

pub use ansatz::{ansatz_basis, build_ansatz, cyclic_field, AnsatzParams, PARAM_NAMES};
pub use catalog::{catalog, family_member, taylor_head, CatalogEntry, FieldCatalog, FieldData, ENTRY_NAMES};
pub use forms::{axis_form, ell, j_vector, linear_forms, Axis, NamedForm};
pub use stages::{
    b_relation, constants_only_space, constraint_stage, expected_b_relation, icosahedral_solution_space,
    run_pipeline, tau_kernel, tau_symmetric_a, AnsatzSpace, HomogeneousSpace, Stage,
};
