//! Relation families as symbolic identities, the maps between
//! presentations, and batch verification through the Hall oracle.

mod disk;
mod gluing;
mod pbw;
mod quiver;
mod relset;
mod skein;

pub use disk::{
    convolution_rhs, cyclic_family, inverse_check, local_skein_relations, minimal_disk_relations, phi_map, psi_map,
    InverseCheck,
};
pub use gluing::{
    alpha_beta_pairs, alpha_image, beta_image, compose, family_for, gluing_relations, naive_presentation,
    same_presentation, ComposedDisk, NaivePresentation, Side,
};
pub use pbw::{pbw_normal_form, pbw_relations, pbw_word, RewriteOrder};
pub use quiver::{cartan, quiver_relations, s_relations, self_extension_constant};
pub use relset::{label_name, verify_relation_set, OracleMap, RelationOutcome, RelationSet, VerifyReport};
pub use skein::{boundary_skein_relations, interleaved_skein_relations};
