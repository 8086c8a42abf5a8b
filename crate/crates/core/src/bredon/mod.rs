//! Bredon H₀ with representation-ring coefficients, the maps e₁ and e₂, the
//! rational isomorphism γ_Q and the verification suite.

mod gamma;
mod presentation;
pub mod snf;
mod verify;

pub use gamma::{cyclic_objects, d_factor, gamma_q, GammaQ};
pub use presentation::{
    apply_big, check_equivariant, e1, e2, e2_matrix, pushforward_matrix, pushforward_to_point, pushforward_to_point_matrix, small,
    to_rational, trivial_index, BredonH0, FinAbPresentation, H0Class,
};
pub use snf::{smith_normal_form, Snf};
pub use verify::{
    check_alpha, check_ch_invertible, check_e2_injective, check_gamma_square, check_lefschetz, check_lemma_identity,
    check_pushforward_square, torsion_summary, verify_suite, Analysis, CheckResult, VerifyReport,
};
