//! zetaforge-core: special-function evaluators (digamma, log-gamma,
//! Hurwitz zeta and its derivative at non-positive integer s, Barnes G,
//! triple gamma, Clausen, polylogarithm, Stieltjes constants), exact
//! combinatorics (Bernoulli/Euler polynomials, Stirling-1, harmonic
//! numbers), Euler sums, adaptive quadrature, and a declarative registry
//! of the identities the library certifies.

pub mod error;
pub mod exactmath;
pub mod hassekernel;
pub mod specialfn;
pub mod eulersums;
pub mod quadrature;
pub mod identityreg;

pub use error::{Error, Result};
pub use eulersums::{EulerSumKey, TailEstimate};
pub use exactmath::{BigInteger, Rational};
pub use hassekernel::{DifferenceTable, NeumaierSum, PrecisionPolicy, SeriesResult};
pub use identityreg::{
    register_builtin, run_diagnostics, Catalogue, Cost, Coverage, Eval, Group, IdentityOutcome,
    IdentityRecord, Pair, PolicySnapshot, Status, SuiteReport, COVERAGE,
};
pub use quadrature::QuadResult;
pub use specialfn::{ConstantsCache, HurwitzPoint};
