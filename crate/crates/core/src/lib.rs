//! Finite ordered Γ-groupoids, fuzzy subsets with exact rational grades,
//! level cuts, direct squares, and exhaustive checking of the level-cut and
//! cartesian-product results about fuzzy ideals.
//!
//! ```
//! use oggkit::{fixtures, theorems::{verify_product_claim, ClaimId}, verdict::Status};
//!
//! let s1 = fixtures::s1();
//! let mu1 = fixtures::mu1();
//! let report = verify_product_claim(ClaimId::L13, &s1, &mu1, &mu1).unwrap();
//! assert_eq!(report.status(), Status::Fail);
//! ```

pub mod crisp;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod fuzzy;
pub mod product;
pub mod structure;
pub mod theorems;
pub mod verdict;

pub use error::{Error, Result};
pub use fuzzy::{FuzzySubset, Membership, Rational};
pub use structure::{validate_structure, CrispSubset, OrderedGammaGroupoid, PartialOrder, RawStructure};
pub use verdict::{Status, Verdict, Witness};
