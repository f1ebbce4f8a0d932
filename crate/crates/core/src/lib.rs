//! Robinson-Schensted correspondence for the groups `G_r = Z_{p^r} x| Z*_{p^r}`
//! and their subgroups `SG_r`, built on standard p-Young tableaux of hook shape.

pub mod arith;
pub mod cyclotomic;
pub mod diagrams;
pub mod error;
pub mod group;
pub mod rs;
pub mod schur;
pub mod idempotents;
pub mod tableaux;
pub mod verify;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicField, CyclotomicNumber, Rational};
pub use diagrams::{Block, Family, HookPartition, Level};
pub use error::{Error, Result};
pub use group::{AlgebraElement, GroupElement, GroupParams};
pub use tableaux::{PYoungTableau, TableauIndex};
pub use rs::{Correspondence, PairCoords, TableauPair};
pub use schur::{CauchyReport, CauchySetup, Multiplicity, PContent, TruncatedPolynomial};
pub use verify::{Report, Suite};
