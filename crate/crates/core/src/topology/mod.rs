//! Finite topological spaces and their spaces of components.
//!
//! Finite spaces are where components and quasi-components provably agree, so the
//! reflection `π0` can be computed exactly and compared with the clopen map `E`.

mod boolean;
mod pi0;
mod space;

pub use boolean::{ba_coproduct, clopen_algebra, pierce_coproduct_check, FiniteBoolean, PierceCoproductCheck};
pub use pi0::{
    components, e_map, gamma_compare, pi0, pi0_map, product_space, quasi_components,
    quotient_space, EMap, GammaComparison, Partition, Pi0Map, Pi0Result,
};
pub use space::{full_mask, image, is_homeomorphism, mask_points, preimage, ContinuousMap, FinSpace, MAX_POINTS};
