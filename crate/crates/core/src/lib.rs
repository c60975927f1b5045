//! Exact evaluation and verification of doubly-bounded q-series identities
//! built from the Burge transform.

pub mod burge;
pub mod cfmachine;
pub mod error;
pub mod fermionic;
pub mod qcombinat;
pub mod qcore;
pub mod verify;

pub use cfmachine::{BarPair, CFData, CartanData, CoprimePair, HVariant, QuadVariant, Rep};
pub use error::{Error, Result};
pub use fermionic::{BoundMode, Family, FermionicSpec, FermionicValue};
pub use qcombinat::RationalParam;
pub use qcore::{LaurentPoly, TruncatedSeries};
pub use verify::{Budget, IdentityCase, Params, PositivityReport, Status, Suite, VerifyReport};
