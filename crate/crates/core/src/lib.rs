//! Finite universal algebra for De Morgan bisemilattices.
//!
//! The crate is organised bottom-up:
//!
//! * [`terms`]: terms and identities of type ⟨2,2,1⟩, the parser, polarity
//!   analysis and the syntactic identity classes.
//! * [`finalg`]: finite algebras given by operation tables, evaluation,
//!   identity checking, products, subalgebras, congruences and isomorphism.
//! * [`catalog`]: the named small algebras (the eleven subdirectly
//!   irreducible De Morgan bisemilattices and a few auxiliary ones).
//! * [`sums`]: involutive semilattice direct systems, (De Morgan-)Płonka
//!   sums and bilateralisation.
//! * [`decomp`]: the band reduct, Green's preorders and the inverse
//!   decomposition of a De Morgan bisemilattice into a direct system.
//! * [`varieties`]: generator-set descriptors, HSP certificates, the
//!   23-node subvariety lattice and the aggregated verification report.
//!
//! Data-parallel inner loops go through [`par::Strategy`]; with the
//! `parallel` feature disabled every strategy runs sequentially.

pub mod catalog;
pub mod decomp;
pub mod finalg;
pub mod par;
pub mod sums;
pub mod terms;
pub mod varieties;

pub use finalg::FiniteAlgebra;
pub use terms::{Identity, Term};
