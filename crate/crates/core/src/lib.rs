//! Exact conjugacy-class computations for the groups
//! G(p) = (C_p × C_p × 2^{1+2(p−1)}_+) ⋊ D_{2p}, and bipartite divisor graphs of
//! integer sets.
//!
//! * [`group`]: normal-form element arithmetic and the perfect index.
//! * [`family`]: GF(2) action matrices and mechanical checks of the presentation and
//!   the dihedral action.
//! * [`classes`]: conjugacy classes, centre, centralisers and the coset strata.
//! * [`bdg`]: bipartite divisor graphs, shape detection and small table groups.

pub mod arith;
pub mod bdg;
mod bitmap;
pub mod classes;
mod error;
pub mod family;
mod gate;
pub mod gf2;
pub mod group;

pub use bitmap::AtomicBitmap;
pub use error::{Error, Result};
pub use gate::{Gate, DEFAULT_MAX_P, INDEXABLE_MAX_P, MAX_P_ENV};
pub use gf2::Gf2Matrix;
pub use group::{make_group, FamilyGroup, GroupElement, GroupParams};
