//! Partial cumulants and factorization errors of families indexed by subsets, with the Jack,
//! hook and affine instances and the operator identities behind the Jack cumulant bound.

mod factorization;
mod family;
mod identities;
pub mod random;

pub use factorization::{
    describe, factorization_agreement, family_factorization, hook_family, jack_cumulant,
    jack_family, small_cumulant_family, small_cumulant_value, verify_affine_lemma,
    verify_hook_factorization, verify_strong_factorization, FactorizationReport, HookVariant,
    T_FORM_MAX_R,
};
pub use family::{moments_from_cumulants, submasks, IndexedFamily, MAX_FAMILY_SIZE};
pub use identities::{ie_stat, verify_a1_a2, A1_A2_MAX_SIZE};
