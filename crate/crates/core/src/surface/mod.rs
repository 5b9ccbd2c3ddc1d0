//! Marked disks with foliation data, gluing, graded chords and the skein
//! relations between them, and surface configs.

mod chord;
mod config;
mod foliation;
mod gluing;

pub use chord::{
    boundary_skein, crossing, reverse_index, shifted_index, skein_commutator, Crossing, GradedChord,
    STANDARD_FORM_INDICES,
};
pub use config::{DiskSpec, Slot, Surface, SurfaceConfig};
pub use foliation::{FoliationData, MarkedDisk};
pub use gluing::{cut, glue, Gluing, GluingSpec};
