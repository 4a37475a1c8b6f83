//! Exact algebra over prime fields for checking an explicit α_p-quotient
//! construction in characteristic 5.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`] and [`poly`]: `F_p` arithmetic and sparse multivariate
//!   polynomials with text parsing, grading and affine charts.
//! * [`derivation`]: derivations, their iterates, chart forms, graded
//!   kernels and fixed loci.
//! * [`groebner`]: Buchberger's algorithm, ideal and radical membership,
//!   elimination and Jacobian smoothness certificates.
//! * [`numerics`]: integer bookkeeping for surface and torsor invariants.
//! * [`suite`]: the fixed list of checks C1–C14 and its report.

pub mod derivation;
pub mod error;
pub mod field;
pub mod groebner;
mod linalg;
pub mod numerics;
pub mod poly;
pub mod suite;

pub use derivation::Derivation;
pub use error::{Error, Result};
pub use field::FieldElement;
pub use groebner::{Budget, GroebnerBasis, IdealBasis, SmoothnessCertificate, Verdict};
pub use numerics::{InvariantRecord, SurfaceKind, TorsorKind};
pub use poly::{Chart, Monomial, MonomialOrder, Polynomial, Ring, RingRef};
pub use suite::{report, run_all, run_only, CheckId, CheckResult, CheckStatus, ReportFormat, Suite};
