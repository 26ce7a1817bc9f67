pub mod capelli;
pub mod engine;
pub mod huks;
pub mod lemmas;
pub mod pfaffian;
pub mod turnbull;

pub use capelli::{
    check_capelli_general, check_classical_capelli, check_okounkov, check_williamson,
};
pub use engine::{
    check_action_oracle, check_assoc_fuzz, check_cross_oracles, check_idempotence,
    check_symmetry_compat, check_xh_commute,
};
pub use huks::check_huks;
pub use lemmas::{
    check_axq_sxq, check_claim_lemma, check_huks_expansion, check_huks_phi_psi, check_odd_anti,
    check_odd_expansion,
};
pub use pfaffian::{
    check_pf_alternating, check_pf_congruence, check_pf_corollary, check_pf_definitions,
    check_pf_fg_action, check_pf_laplace, check_pf_minor_sum3, check_pf_minor_sum6,
    check_pf_permutation,
};
pub use turnbull::check_turnbull;
