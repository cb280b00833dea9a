//! Finite skew braces: construction, distinguished substructures, central
//! and star series, ideal commutators, central extensions, set-theoretic
//! solutions of the Yang–Baxter equation and small-order enumeration.
//!
//! Elements of a carrier of order `n` are `0..n`, with `0` the identity of
//! both group structures. Subsets are [`ElementSet`] bitsets, so orders are
//! limited to [`MAX_ORDER`].

pub mod analysis;
pub mod brace;
pub mod catalog;
pub mod commutator;
pub mod constructions;
pub mod corpus;
pub mod doc;
pub mod elements;
pub mod enumeration;
pub mod error;
pub mod group;
pub mod isomorphism;
pub mod named;
pub mod series;
pub mod substructures;
pub mod terms;
pub mod ybe;

pub use analysis::{analyze, AnalysisReport};
pub use brace::{make_brace, opposite_brace, trivial_brace, verify_identities, SkewBrace};
pub use commutator::{congruence_generated, is_abelian_brace, is_central_ideal, smith_commutator, Partition};
pub use constructions::{bilinear_brace, extract_cocycles, heisenberg_brace, rebuild_from_cocycles, Cocycles};
pub use doc::{load_brace, BraceDoc};
pub use elements::{ElementSet, MAX_ORDER};
pub use enumeration::{automorphisms, classify_up_to_iso, enumerate_braces_on, BraceFamily};
pub use error::{Error, Result};
pub use group::{make_group, FiniteGroup};
pub use isomorphism::braces_isomorphic;
pub use series::{nilpotency_report, SeriesKind};
pub use substructures::{all_ideals, distinguished_sets, ideal_closure};
pub use terms::Term;
pub use ybe::{canonical_solution, check_ybe, Solution};
