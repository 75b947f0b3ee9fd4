//! Centralizer structure of finite groups.
//!
//! Groups are Cayley tables ([`FiniteGroup`]) built from tables, permutations,
//! presentations or named families. On top of that sit the equal-centralizer
//! partition, the non-centralizer graph, regularity predicates, a suite of
//! executable checks, and curated catalogs of small 2-groups.

pub mod analysis;
pub mod arith;
pub mod catalog;
pub mod error;
pub mod families;
pub mod graph;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod presentation;
pub mod theorems;

pub use analysis::{beta_partition, is_induced_regular, is_reduced_regular, is_regular, BetaPartition, RegularityReport};
pub use catalog::{Catalog, CatalogEntry, Fingerprint};
pub use error::{Error, Result};
pub use graph::{build_graph, NonCentralizerGraph};
pub use group::{Element, FiniteGroup, PGroup, Subgroup};
pub use iso::is_isomorphic;
pub use presentation::{enumerate, parse, Presentation};
pub use theorems::CheckResult;
