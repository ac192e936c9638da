//! Topological generation of simple classical groups by conjugacy classes.
//!
//! The crate decides whether a tuple of classes `C₁, …, C_r` contains a
//! tuple generating a dense subgroup, and provides the class invariants
//! this needs: eigenspace data, class dimensions, unipotent closure order
//! and induced Jordan block counts. [`finfield`] checks these numbers
//! against explicit matrices over small finite fields.

pub mod algebra_core;
pub mod closure;
pub mod error;
pub mod finfield;
pub mod invariants;
pub mod maxclass;
pub mod oracle;
pub mod stabilizers;

pub use algebra_core::{
    Block, ClassDescriptor, ClassKind, EigenPattern, Family, GroupSpec, InvolutionType, LabelMult, OrderTag,
    UnipotentData, Variant,
};
pub use error::{Error, Result};
pub use invariants::{ClassDim, EigenProfile, GrassDim, SubspaceType};
pub use oracle::{decide, Reason, Verdict, Witnesses};
