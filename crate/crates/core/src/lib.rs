//! Exact computations for finite-type KLR (quiver Hecke) algebras.
//!
//! The crate covers root data and convex orders, Kostant partitions, the
//! quantum shuffle algebra, characters of dual PBW and dual canonical bases,
//! a straightening engine for KLR algebras with contravariant forms on proper
//! standard modules, and explicit projective resolutions of root modules.

pub mod error;
pub mod golden;
pub mod acceptance;
pub mod canonical;
pub mod cli;
pub mod convex_order;
pub mod klr;
pub mod kostant;
pub mod laurent;
pub mod pbw;
pub mod resolution;
pub mod root_data;
pub mod series;
pub mod shuffle;

pub use error::{Error, Result};
