//! Opaque string identifiers for objects, morphisms, and profunctor elements.
//!
//! Equality of identifiers is the only notion of identity inside a single
//! structure; isomorphism is always established by explicit search and returns
//! a constructed witness. Identifiers order lexicographically, which is what
//! makes every canonical form in this crate deterministic.

use std::fmt;

macro_rules! id_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(String);

        impl $name {
            pub fn new(s: impl Into<String>) -> Self {
                $name(s.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                $name(s.to_string())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                $name(s)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $name {
            fmt_debug_as_display!();
        }
    };
}

macro_rules! fmt_debug_as_display {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", self.0)
        }
    };
}

id_type!(
    /// Identifier of an object in a finite category.
    ObjId
);
id_type!(
    /// Identifier of a morphism in a finite category.
    MorId
);
id_type!(
    /// Identifier of an element of a profunctor.
    ElemId
);
