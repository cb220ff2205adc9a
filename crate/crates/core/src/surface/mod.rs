//! Named surface syntax: parsing, elaboration to core terms, printing.
//!
//! ```text
//! decl  ::= assume x : A | define x : A = t | check t : A
//!         | normalize t : A | infer k
//! term  ::= \x y. t | (x : A) -> B | Sig (x : A). B | app -> term | app
//! app   ::= head atom*
//! head  ::= suc atom | fst atom | snd atom | box atom | Prf atom
//!         | natrec [x.B] atom atom atom
//!         | case{n} [x.B] (t0 | ... | tn-1) atom
//!         | where [B] ([y] = t) atom
//!         | atom
//! atom  ::= x | U | Nat | zero | n | Enum n | c{n,i} | * | {t : A}
//!         | (t) | (t, u)
//! ```

pub mod elaborate;
pub mod lexer;
pub mod parser;
pub mod print;

pub use elaborate::{elaborate, ElabError, ElabErrorKind, ElabOptions};
pub use parser::{parse, parse_term};
pub use print::{print_term, print_term_named};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{}:{}: {message}", span.line, span.col)]
pub struct ParseError {
    pub span: Span,
    pub message: String,
}

impl ParseError {
    pub fn new(span: Span, message: impl Into<String>) -> ParseError {
        ParseError {
            span,
            message: message.into(),
        }
    }
}

/// A surface term with its source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct STerm {
    pub span: Span,
    pub node: Node,
}

/// Binder names; `None` is an anonymous binder that cannot be referenced.
pub type Binder = Option<String>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Var(String),
    Universe,
    Fun(Binder, Box<STerm>, Box<STerm>),
    Sing(Box<STerm>, Box<STerm>),
    Lam(Binder, Box<STerm>),
    App(Box<STerm>, Box<STerm>),
    Sigma(Binder, Box<STerm>, Box<STerm>),
    Pair(Box<STerm>, Box<STerm>),
    Fst(Box<STerm>),
    Snd(Box<STerm>),
    Nat,
    Zero,
    Suc(Box<STerm>),
    Numeral(usize),
    Natrec(Binder, Box<STerm>, Box<STerm>, Box<STerm>, Box<STerm>),
    Enum(usize),
    Const(usize, usize),
    Case(usize, Binder, Box<STerm>, Vec<STerm>, Box<STerm>),
    Prf(Box<STerm>),
    Box(Box<STerm>),
    Star,
    /// `where [B] ([y] = t) b`
    Where(Box<STerm>, Binder, Box<STerm>, Box<STerm>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeclKind {
    Assume {
        name: String,
        ty: STerm,
    },
    Define {
        name: String,
        ty: STerm,
        body: STerm,
    },
    Check {
        term: STerm,
        ty: STerm,
    },
    Normalize {
        term: STerm,
        ty: STerm,
    },
    Infer {
        term: STerm,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decl {
    pub span: Span,
    pub kind: DeclKind,
}

impl Decl {
    pub fn verb(&self) -> &'static str {
        match self.kind {
            DeclKind::Assume { .. } => "assume",
            DeclKind::Define { .. } => "define",
            DeclKind::Check { .. } => "check",
            DeclKind::Normalize { .. } => "normalize",
            DeclKind::Infer { .. } => "infer",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeclFile {
    pub decls: Vec<Decl>,
}
