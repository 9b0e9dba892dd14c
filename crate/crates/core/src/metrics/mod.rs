//! Bottleneck and interleaving distances, the brute-force interleaving
//! search and mapping cones.

pub mod cone;
pub mod interleave;
pub mod matching;

pub use cone::{cone_of_morphism, torsion_bound_check, MorphismPlan};
pub use interleave::brute_interleave;
pub use matching::{bottleneck, bottleneck_with_witness, delta_matched, interleaving_distance, Matching};
