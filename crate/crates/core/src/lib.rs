//! Exact rationality classification of finite groups.
//!
//! The crate realizes finite groups from compact specifications, computes their
//! conjugacy-class and character-table data with exact arithmetic, and decides
//! where each group sits in the rationality lattice: rational, cut (inverse
//! semi-rational), uniformly semi-rational, quadratic semi-rational,
//! semi-rational and quadratic rational. Alongside the verdicts it computes the
//! free rank of the central units of the integral group ring, the central
//! height, element and character fields, and the Gruenberg-Kegel prime graph.
//!
//! The main entry points are [`group::realize`] for building a group,
//! [`classify::classify`] for a full report, and the [`surveys`] module for the
//! metacyclic and alternating classification tables. The `cutgroups` binary
//! exposes all of it on the command line.

pub mod arith;
pub mod chars;
pub mod classify;
pub mod cli;
pub mod galois;
pub mod group;
pub mod report;
pub mod surveys;
pub mod sympart;
