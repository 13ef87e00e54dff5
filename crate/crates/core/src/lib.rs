//! Finite symmetric monoidal categories presented by explicit tables,
//! lax symmetric monoidal functors and their lax limits, dualizability
//! criteria checked against an exhaustive search oracle, stratifications
//! over finite posets, and a combinatorial model of the 1-dimensional
//! bordism category.
//!
//! Everything is decidable by construction: categories are finite tables,
//! morphism equality is identity of interned ids, and every law is checked
//! by exhaustive scan. The crate exposes two independent routes to
//! dualizability — structural criteria and brute-force search — so each
//! can be tested against the other.

pub mod bordism;
pub mod corpus;
pub mod duality;
pub mod error;
pub mod fincat;
pub mod json;
pub mod laxlim;
pub mod monoidal;
pub mod strat;
pub mod stratbord;

pub use error::{Error, Limits, Result};
