//! A type-checking kernel for Martin-Löf type theory with a universe,
//! singleton types, dependent pairs, natural numbers, finite enumerations
//! and proof-irrelevant propositions.
//!
//! Definitional equality is decided by normalization by evaluation: terms
//! are evaluated into a semantic domain and read back as η-long normal
//! forms, which are then compared syntactically.
//!
//! ```
//! use singtt::checker::Checker;
//! use singtt::syntax::{Ctx, Term};
//!
//! let g = Ctx::from_outermost([Term::sing(Term::Zero, Term::Nat)]);
//! let checker = Checker::default();
//! assert!(checker.check_term(&g, &Term::Nat, &Term::Q).is_ok());
//! assert_eq!(checker.nbe_term(&g, &Term::Nat, &Term::Q), Ok(Term::Zero));
//! ```

pub mod checker;
pub mod driver;
pub mod nbe;
pub mod semantics;
pub mod surface;
pub mod syntax;

pub use checker::{erase_tag, Checker, Diagnostic, DiagnosticKind, Mode};
pub use semantics::{Machine, NbeError, Options, SemFun, Value};
pub use syntax::{Ctx, Subst, Term};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/syntax.md")]
    mod syntax {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/checking.md")]
    mod checking {}
    #[doc = include_str!("../../../book/src/language.md")]
    mod language {}
    #[doc = include_str!("../../../book/src/vectors.md")]
    mod vectors {}
}
