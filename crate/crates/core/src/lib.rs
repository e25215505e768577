//! Diamond counting and extremal structure in small tournaments.
//!
//! A diamond is a 4-vertex sub-tournament containing exactly one 3-cycle
//! (a vertex dominating or dominated by a 3-cycle). This crate provides:
//!
//! * bitset-backed tournaments up to order 64 with text I/O ([`tournament`]);
//! * diamond and 3-cycle counters, both a brute-force 4-subset oracle and
//!   closed-form counters over the entries of `S²` ([`counting`]);
//! * exact integer characteristic polynomials of Seidel matrices, matching
//!   against the named spectral forms, and the skew-conference / skew-EW
//!   matrix predicates ([`spectral`]);
//! * switching, diagonal similarity, equivalence tests and class
//!   fingerprints ([`switching`]);
//! * Paley tournaments and the bundled extremal instances
//!   ([`constructions`]);
//! * per-residue maximum bounds, equality certificates, a checkpointed
//!   exhaustive search, and the deleted-vertex / conference-plus-apex
//!   harnesses ([`extremal`]).
//!
//! Everything is exact integer arithmetic; divisions required by the
//! counting formulas are asserted exact, never rounded.

pub mod constructions;
pub mod counting;
pub mod error;
pub mod extremal;
pub mod spectral;
pub mod switching;
pub mod tournament;

pub use constructions::{
    add_dominating_vertex, builtin, delete_vertex, is_doubly_regular, paley, transitive,
    PrimeModulus, BUILTIN_NAMES,
};
pub use counting::{
    count_3cycles_degree, count_3cycles_spectral, count_diamonds_oracle, count_diamonds_spectral,
    diamond_delta_decomposition, seidel_det4, CountMethod, CountReport,
};
pub use error::{Error, Result};
pub use extremal::{
    bound, certify_extremal, conjecture_probe, lemma_conference_plus_apex_check,
    lemma_deleted_max_check, search_max, ApexCheck, Bound, Certificate, CertificateKind,
    ConjectureReport, DeletedMaxCheck, SearchOptions, SearchOutcome,
};
pub use spectral::{
    beta_alpha_identity_check, is_skew_conference, is_skew_ew, is_skew_ew_seidel,
    match_spectral_form, minor_sum_identity_check, BetaAlphaCheck, CharPoly, EwPartition,
    MinorSumCheck, SpectralForm,
};
pub use switching::{
    are_switching_equivalent, are_switching_equivalent_up_to_iso, diagonal_similar, fingerprint,
    normalize_dominant, switch, Fingerprint, SignDiagonal, SwitchSet,
};
pub use tournament::{
    m_from_gamma, DegreeProfile, GramSquare, SeidelMatrix, Tournament, MAX_ORDER,
};
