//! Exact-arithmetic invariant theory of binary forms.
//!
//! covforge constructs and cross-checks the classical covariants that
//! detect perfect powers of binary forms: transvectants, Hessians and
//! Wronskians, the Hilbert covariants built from fractional-power series,
//! and the Göttingen covariants built from Wronskian determinants. On top
//! of these it computes graded pieces of the associated ideals, decides
//! perfect-power membership of rational forms, and lifts covariants to
//! n-ary concomitants via the Clebsch transfer.
//!
//! All arithmetic is exact over the rationals; every equality the crate
//! reports is an identity of polynomials, not a numerical approximation.
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `covforge` binary for the command-line surface.

pub mod error;
pub mod rat;
pub mod vars;
pub mod poly;
pub mod parse;
pub mod matrix;
pub mod univar;
pub mod binary;
pub mod cayley;
pub mod covariant;
pub mod identity;
pub mod series;
pub mod hilbert;
pub mod goettingen;
pub mod power;
pub mod ideals;
pub mod transfer;
pub mod formats;
pub mod sampling;
pub mod cli;

pub use error::{Error, Result};
pub use rat::Rat;
pub use vars::{Context, Shape, VarFamily};
pub use poly::{Mono, MultiPoly};
pub use matrix::RatMatrix;
pub use binary::BinaryForm;
pub use covariant::Covariant;
