//! Exact root systems, Weyl and Levi-Weyl orbits, and the equivalence between
//! quasi-constant fundamental weights, special/co-special simple roots, and
//! Levi-dominance of simple roots.
//!
//! All arithmetic is over arbitrary-precision rationals.
//!
//! ```
//! use rootkit::{classify, weyl, RootSystem};
//!
//! let g2 = RootSystem::build("G2".parse().unwrap());
//! let (highest, _) = classify::highest_roots(&g2);
//! assert_eq!(classify::multiplicities(&g2, &highest).unwrap().root, vec![3, 2]);
//!
//! let report = classify::verify_theorem(&g2);
//! assert!(report.all_equivalent);
//! assert!(report.rows.iter().all(|r| !r.dom_eq_levi_dom));
//! # let _ = weyl::SimpleSubset::full(2);
//! ```
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod classify;
pub mod error;
pub mod report;
pub mod roots;
pub mod suite;
pub mod weyl;
pub mod witness;

pub use error::{Error, Result};
pub use roots::{CartanType, Family, LengthClass, RatVector, Rational, RootIndex, RootSystem};
pub use weyl::{SimpleSubset, WeylWord};
