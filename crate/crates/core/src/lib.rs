//! Verification engine for finite minimal non-CA-groups.
//!
//! A group is CA when the centralizer of every non-central element is
//! abelian. The crate builds the relevant finite groups explicitly (matrix
//! groups over finite fields, permutation groups, Suzuki point
//! stabilizers), decides the CA property by exhaustive centralizer scans,
//! and cross-checks an arithmetic criterion on `q` for PSL(2,q) against
//! two independent computations: a scan over Dickson's subgroup classes and
//! a full subgroup-lattice oracle.

pub mod arith;
pub mod ca;
pub mod dickson;
pub mod error;
pub mod field;
pub mod group;
pub mod linear;
pub mod suzuki;

pub use ca::{CAReport, ClassCheck, Limits, MinimalityVerdict, Method, SchmidtCase, SchmidtLabel};
pub use dickson::{CoverReport, MaximalClassSpec};
pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElem};
pub use group::{Code, Fingerprint, FrobeniusDecomposition, GroupHandle, StructureProbe};
pub use linear::{Mat2, ProjMat2};
pub use suzuki::SuzukiReport;

/// Version string recorded in reports and cache keys.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
