//! Exact computational tools around the *varga-prakṛti* equation `N·a² + k = b²`.
//!
//! The crate is split by subject:
//!
//! * [`parikarman`]: elementary two-quantity identities (sum/difference
//!   transition, the asymmetric operation, Āryabhaṭa's product identities)
//!   and integer square roots.
//! * [`karani`]: canonical quadratic-surd arithmetic.
//! * [`vargaprakrti`]: solution verification, composition (*bhāvanā*),
//!   interpolator scaling, the square-multiplier case, growth sequences and
//!   irrationality certificates.
//! * [`prosody`]: syllable weighing and validation of the *āryā* metre family.
//! * [`report`]: the ordered tree used to render every result as text or JSON.
//!
//! All arithmetic is exact over arbitrary-precision integers and rationals.

pub mod error;
pub mod karani;
pub mod parikarman;
pub mod prosody;
pub mod rational;
pub mod report;
pub mod vargaprakrti;

pub use error::{Error, ParseError, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
