//! Weak spherical systems and their dual groups, computed exactly at the level of
//! based root data.
//!
//! The pipeline: a [`wss::WeakSphericalSystem`] over an ambient
//! [`rootdata::BasedRootDatum`] is validated against the axioms, then
//! [`dualize::full_report`] computes the associated roots, the associated group,
//! the dual group datum, the adapted folding, the Weyl lift, and the Levi and
//! centralizer data. [`classify`] re-derives the rank one and rank two tables by
//! enumeration, and [`lgroup`] gives the character constraints for outer actions.

pub mod cartan;
pub mod classify;
pub mod dualize;
pub mod error;
pub mod folding;
pub mod input;
pub mod lgroup;
pub mod liealg;
pub mod linalg;
pub mod par;
pub mod rootdata;
pub mod wss;

pub use cartan::{CartanType, Series, SimpleType};
pub use error::{ClassifyError, DualizeError, FoldingError, LgroupError, RootDataError, WssError};
pub use rootdata::{BasedRootDatum, LatticeFlavor, LatticeVector, Space};
pub use wss::WeakSphericalSystem;
