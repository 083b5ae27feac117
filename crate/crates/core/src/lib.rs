//! Computing with finite strict n-categories presented by polygraphs.
//!
//! The crate provides:
//!
//! - [`globset`]: finite globular sets with their truncation, inclusion and
//!   co-inclusion functors;
//! - [`strictcat`]: finite strict n-categories with exhaustive axiom checking
//!   and the corresponding boundary-changing functors;
//! - [`precat`]: finite precategories, the exchange condition, and the
//!   mutually inverse translations to and from strict categories;
//! - [`polygraph`]: generator systems whose boundaries are cells of the free
//!   category on the lower dimensions, with dimensionwise colimits;
//! - [`freecat`]: a term engine for cells of free categories, including a
//!   decision procedure for cell equality in dimension <= 2;
//! - [`eat`]: essentially algebraic theories and finite-model verification.

pub mod corpus;
pub mod eat;
pub mod freecat;
pub mod globset;
pub mod polygraph;
pub mod precat;
pub mod strictcat;

mod error;

pub use error::{Error, Result};
