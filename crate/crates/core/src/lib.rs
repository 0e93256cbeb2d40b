//! Symbolic powers of matroid ideals and their liaison theory, computed
//! exactly.
//!
//! The crate is organized bottom-up:
//!
//! * [`matroid`]: matroids by bases, duality, deletion.
//! * [`monomial`]: canonical monomial ideals, primary decompositions by
//!   monomial primes, symbolic and slightly mixed symbolic powers.
//! * [`homology`]: simplicial complexes, reduced homology through integer
//!   Smith normal form, and Reisner's Cohen–Macaulay criterion.
//! * [`poly`]: sparse polynomials over the rationals and Buchberger's
//!   algorithm, with elimination, intersections and colons.
//! * [`lifting`]: non-homogeneous radical lifts of monomial ideals relative
//!   to a homogeneous ideal, plus their instance-level verification.
//! * [`chain`]: the basic-double-link recursion producing glicci-chain
//!   certificates.
//! * [`cli`]: the `matroid-liaison` command-line program.

pub mod chain;
pub mod cli;
pub mod homology;
pub mod lifting;
pub mod matroid;
pub mod monomial;
pub mod poly;
pub mod snf;

pub use homology::{cm_check_ideal, CmRoute, FieldSpec, HomologyProfile, ReisnerCertificate, SimplicialComplex};
pub use matroid::{Matroid, MatroidError};
pub use monomial::{Monomial, MonomialIdeal, PrimaryDecomposition, PrimeSupport, Side};
