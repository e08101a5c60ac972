//! Finite correspondences: a small, exact engine for profunctor calculus over
//! finite categories.
//!
//! The crate models finite categories as total composition tables and builds
//! the correspondence calculus on top: profunctors with explicit element
//! actions, coend composition, companions and conjoints with their
//! adjunctions, collages and their factorization property, lax diagrams over
//! finite linear orders with their total-category encoding, promonads, string
//! quotients with saturation certificates, and theories with arities and
//! their completion.
//!
//! Everything is immutable, deterministic (ordered maps everywhere, canonical
//! sorting in constructors), and exhaustively checkable at the scales the
//! library targets. Isomorphism is never assumed: operations that promise an
//! equivalence return constructed witnesses that the test suite verifies
//! elementwise.
//!
//! Start with the runnable examples in `examples/` — each one walks through a
//! major capability end to end.

pub mod fincat;
pub mod ids;
pub mod monad;
pub mod prof;
pub mod simplex;

pub use fincat::FinCategory;
pub use ids::{ElemId, MorId, ObjId};
