//! Resultants over commutative idempotent semirings.
//!
//! A commutative idempotent semiring has commutative, associative
//! addition and multiplication, identities for both, annihilating zero,
//! distributivity, and idempotent addition; subtraction does not exist.
//! For monic polynomials given by their roots, the resultant can be
//! computed two ways: as the product of `alpha_i + beta_j` over all root
//! pairs, or as the permanent of the Sylvester coefficient matrix. The
//! two always agree, and this crate implements both routes over a family
//! of concrete carriers, plus the boolean-matrix term representations
//! that convert between the two expansions constructively.
//!
//! Modules:
//! - [`instance`] / [`value`]: carrier handles and their elements.
//! - [`instances`]: the concrete carriers (tropical numbers, finite power
//!   sets, the cofinite topology, convex polygons, truncated sequences,
//!   principal ideals, and the free term-set semiring).
//! - [`axioms`]: the semiring law battery with per-law reporting.
//! - [`poly`]: polynomials from roots and coefficient convolution.
//! - [`resultant`]: both resultant routes, the Sylvester matrix, the
//!   subtraction-free permanent, and the randomized verification sweep.
//! - [`rep`]: res/syl term representations, the conversion algorithms
//!   with swap traces, and exhaustive enumeration oracles.

pub mod axioms;
pub mod error;
pub mod instance;
pub mod instances;
pub mod poly;
pub mod rational;
pub mod rep;
pub mod resultant;
pub mod term;
pub mod value;

pub use error::{CisError, Result};
pub use instance::Instance;
pub use term::TermExponent;
pub use value::Value;
