//! Core syntax: de Bruijn terms with explicit substitutions.
//!
//! The same `Term` type is used for types and terms. Variables are not a
//! separate constructor: the innermost variable is [`Term::Q`] and the
//! `i`-th one is `Q` under `i` weakenings, see [`mk_var`].

use std::fmt;
use std::sync::Arc;

/// A core term (or type).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    U,
    /// Dependent function type; the codomain is under one binder.
    Fun(Arc<Term>, Arc<Term>),
    /// Singleton type `{body : tag}`.
    Sing(Arc<Term>, Arc<Term>),
    Lam(Arc<Term>),
    App(Arc<Term>, Arc<Term>),
    /// The innermost variable.
    Q,
    Sub(Arc<Term>, Arc<Subst>),
    /// Dependent pair type; the second component is under one binder.
    Sigma(Arc<Term>, Arc<Term>),
    Pair(Arc<Term>, Arc<Term>),
    Fst(Arc<Term>),
    Snd(Arc<Term>),
    Nat,
    Zero,
    Suc(Arc<Term>),
    /// `Natrec(motive, base, step, scrutinee)`, motive under one binder.
    Natrec(Arc<Term>, Arc<Term>, Arc<Term>, Arc<Term>),
    Enum(usize),
    /// `Const(n, i)` is the `i`-th inhabitant of `Enum(n)`.
    Const(usize, usize),
    /// `Case(n, motive, branches, scrutinee)`, motive under one binder.
    Case(usize, Arc<Term>, Vec<Term>, Arc<Term>),
    Prf(Arc<Term>),
    Box(Arc<Term>),
    Star,
    /// `Where(result type, body, proof)`; the body is under one binder.
    Where(Arc<Term>, Arc<Term>, Arc<Term>),
}

/// Explicit substitutions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Subst {
    Empty,
    Id,
    Ext(Arc<Subst>, Arc<Term>),
    /// Weakening by one binder.
    P,
    /// `Comp(outer, inner)` applies `inner` first.
    Comp(Arc<Subst>, Arc<Subst>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("constant index {index} out of range for Enum {size}")]
    ConstOutOfRange { size: usize, index: usize },
    #[error("case over Enum {size} given {given} branches")]
    BranchCount { size: usize, given: usize },
}

impl Term {
    pub fn fun(dom: Term, cod: Term) -> Term {
        Term::Fun(Arc::new(dom), Arc::new(cod))
    }

    pub fn sing(body: Term, tag: Term) -> Term {
        Term::Sing(Arc::new(body), Arc::new(tag))
    }

    pub fn lam(body: Term) -> Term {
        Term::Lam(Arc::new(body))
    }

    pub fn app(f: Term, a: Term) -> Term {
        Term::App(Arc::new(f), Arc::new(a))
    }

    /// Left-nested application `f a0 a1 ...`.
    pub fn apps(f: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(f, Term::app)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(t: Term, s: Subst) -> Term {
        Term::Sub(Arc::new(t), Arc::new(s))
    }

    pub fn sigma(dom: Term, cod: Term) -> Term {
        Term::Sigma(Arc::new(dom), Arc::new(cod))
    }

    pub fn pair(a: Term, b: Term) -> Term {
        Term::Pair(Arc::new(a), Arc::new(b))
    }

    pub fn fst(t: Term) -> Term {
        Term::Fst(Arc::new(t))
    }

    pub fn snd(t: Term) -> Term {
        Term::Snd(Arc::new(t))
    }

    pub fn suc(t: Term) -> Term {
        Term::Suc(Arc::new(t))
    }

    /// The numeral `suc^n zero`.
    pub fn numeral(n: usize) -> Term {
        (0..n).fold(Term::Zero, |t, _| Term::suc(t))
    }

    pub fn natrec(motive: Term, base: Term, step: Term, scrut: Term) -> Term {
        Term::Natrec(
            Arc::new(motive),
            Arc::new(base),
            Arc::new(step),
            Arc::new(scrut),
        )
    }

    pub fn constant(n: usize, i: usize) -> Result<Term, SyntaxError> {
        if i < n {
            Ok(Term::Const(n, i))
        } else {
            Err(SyntaxError::ConstOutOfRange { size: n, index: i })
        }
    }

    pub fn case(
        n: usize,
        motive: Term,
        branches: Vec<Term>,
        scrut: Term,
    ) -> Result<Term, SyntaxError> {
        if branches.len() != n {
            return Err(SyntaxError::BranchCount {
                size: n,
                given: branches.len(),
            });
        }
        Ok(Term::Case(n, Arc::new(motive), branches, Arc::new(scrut)))
    }

    pub fn prf(t: Term) -> Term {
        Term::Prf(Arc::new(t))
    }

    pub fn boxed(t: Term) -> Term {
        Term::Box(Arc::new(t))
    }

    pub fn where_(ty: Term, body: Term, proof: Term) -> Term {
        Term::Where(Arc::new(ty), Arc::new(body), Arc::new(proof))
    }
}

impl Subst {
    pub fn ext(rest: Subst, last: Term) -> Subst {
        Subst::Ext(Arc::new(rest), Arc::new(last))
    }

    pub fn comp(outer: Subst, inner: Subst) -> Subst {
        Subst::Comp(Arc::new(outer), Arc::new(inner))
    }

    /// The single substitution `(id, t)`.
    pub fn single(t: Term) -> Subst {
        Subst::ext(Subst::Id, t)
    }
}

/// `p^(k+1)`, associated as `Comp(P, subs_chain(k-1))`.
pub fn subs_chain(k: usize) -> Subst {
    (0..k).fold(Subst::P, |rest, _| Subst::comp(Subst::P, rest))
}

/// The de Bruijn index `i` as a term.
pub fn mk_var(i: usize) -> Term {
    match i {
        0 => Term::Q,
        _ => Term::sub(Term::Q, subs_chain(i - 1)),
    }
}

/// Weakens `t` by `i` binders.
pub fn lift(i: usize, t: Term) -> Term {
    match i {
        0 => t,
        _ => Term::sub(t, subs_chain(i - 1)),
    }
}

/// Length of a pure weakening chain `P` / `Comp(P, chain)`.
fn weakening_len(s: &Subst) -> Option<usize> {
    match s {
        Subst::P => Some(1),
        Subst::Comp(outer, inner) if **outer == Subst::P => weakening_len(inner).map(|n| n + 1),
        _ => None,
    }
}

/// Recognizes the shape produced by [`mk_var`] and returns its index.
pub fn as_var(t: &Term) -> Option<usize> {
    match t {
        Term::Q => Some(0),
        Term::Sub(q, s) if **q == Term::Q => weakening_len(s),
        _ => None,
    }
}

pub fn is_neutral(t: &Term) -> bool {
    if as_var(t).is_some() {
        return true;
    }
    match t {
        Term::App(k, v) => is_neutral(k) && is_normal(v),
        Term::Fst(k) | Term::Snd(k) => is_neutral(k),
        Term::Natrec(motive, base, step, k) => {
            is_normal(motive) && is_normal(base) && is_normal(step) && is_neutral(k)
        }
        Term::Case(n, motive, branches, k) => {
            branches.len() == *n
                && is_normal(motive)
                && branches.iter().all(is_normal)
                && is_neutral(k)
        }
        Term::Where(ty, body, k) => is_normal(ty) && is_normal(body) && is_neutral(k),
        Term::Star => true,
        _ => false,
    }
}

pub fn is_normal(t: &Term) -> bool {
    match t {
        Term::U | Term::Nat | Term::Zero | Term::Enum(_) => true,
        Term::Const(n, i) => i < n,
        Term::Fun(a, b) | Term::Sing(a, b) | Term::Sigma(a, b) | Term::Pair(a, b) => {
            is_normal(a) && is_normal(b)
        }
        Term::Lam(b) | Term::Suc(b) | Term::Prf(b) | Term::Box(b) => is_normal(b),
        _ => is_neutral(t),
    }
}

pub fn contains_star(t: &Term) -> bool {
    match t {
        Term::Star => true,
        Term::U | Term::Q | Term::Nat | Term::Zero | Term::Enum(_) | Term::Const(..) => false,
        Term::Fun(a, b)
        | Term::Sing(a, b)
        | Term::App(a, b)
        | Term::Sigma(a, b)
        | Term::Pair(a, b) => contains_star(a) || contains_star(b),
        Term::Lam(a) | Term::Fst(a) | Term::Snd(a) | Term::Suc(a) | Term::Prf(a) | Term::Box(a) => {
            contains_star(a)
        }
        Term::Sub(t, s) => contains_star(t) || subst_contains_star(s),
        Term::Natrec(a, b, c, d) => [a, b, c, d].iter().any(|x| contains_star(x)),
        Term::Case(_, m, bs, k) => {
            contains_star(m) || bs.iter().any(contains_star) || contains_star(k)
        }
        Term::Where(a, b, c) => contains_star(a) || contains_star(b) || contains_star(c),
    }
}

fn subst_contains_star(s: &Subst) -> bool {
    match s {
        Subst::Empty | Subst::Id | Subst::P => false,
        Subst::Ext(s, t) => subst_contains_star(s) || contains_star(t),
        Subst::Comp(a, b) => subst_contains_star(a) || subst_contains_star(b),
    }
}

/// Whether index `i` occurs in a term without explicit substitutions
/// other than variable weakenings. Terms carrying other substitutions are
/// treated conservatively (reported as mentioning the index).
pub fn mentions_index(t: &Term, i: usize) -> bool {
    if let Some(j) = as_var(t) {
        return j == i;
    }
    match t {
        Term::U | Term::Nat | Term::Zero | Term::Enum(_) | Term::Const(..) | Term::Star => false,
        Term::Q => i == 0,
        Term::Sub(inner, s) => match weakening_len(s) {
            Some(k) => i >= k && mentions_index(inner, i - k),
            None => true,
        },
        Term::Fun(a, b) | Term::Sigma(a, b) => mentions_index(a, i) || mentions_index(b, i + 1),
        Term::Sing(a, b) | Term::App(a, b) | Term::Pair(a, b) => {
            mentions_index(a, i) || mentions_index(b, i)
        }
        Term::Lam(b) => mentions_index(b, i + 1),
        Term::Fst(a) | Term::Snd(a) | Term::Suc(a) | Term::Prf(a) | Term::Box(a) => {
            mentions_index(a, i)
        }
        Term::Natrec(m, z, s, k) => {
            mentions_index(m, i + 1)
                || mentions_index(z, i)
                || mentions_index(s, i)
                || mentions_index(k, i)
        }
        Term::Case(_, m, bs, k) => {
            mentions_index(m, i + 1)
                || bs.iter().any(|b| mentions_index(b, i))
                || mentions_index(k, i)
        }
        Term::Where(w, b, k) => {
            mentions_index(w, i) || mentions_index(b, i + 1) || mentions_index(k, i)
        }
    }
}

/// A typing context. Position 0 is the most recently bound entry.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ctx {
    // stored outermost-first so that extension is a push
    entries: Vec<Term>,
}

impl Ctx {
    pub fn new() -> Ctx {
        Ctx::default()
    }

    /// Builds a context from types listed outermost first.
    pub fn from_outermost(types: impl IntoIterator<Item = Term>) -> Ctx {
        Ctx {
            entries: types.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The type of de Bruijn index `i`, scoped over the entries after it.
    pub fn get(&self, i: usize) -> Option<&Term> {
        self.entries
            .len()
            .checked_sub(i + 1)
            .map(|k| &self.entries[k])
    }

    pub fn extend(&self, ty: Term) -> Ctx {
        let mut entries = self.entries.clone();
        entries.push(ty);
        Ctx { entries }
    }

    pub fn push(&mut self, ty: Term) {
        self.entries.push(ty);
    }

    /// Drops the `n` innermost entries.
    pub fn drop_innermost(&self, n: usize) -> Option<Ctx> {
        let keep = self.entries.len().checked_sub(n)?;
        Some(Ctx {
            entries: self.entries[..keep].to_vec(),
        })
    }

    /// Entries outermost first.
    pub fn outermost_first(&self) -> &[Term] {
        &self.entries
    }
}

/// S-expression rendering, one head symbol per constructor.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::U => write!(f, "U"),
            Term::Fun(a, b) => write!(f, "(Fun {a} {b})"),
            Term::Sing(a, b) => write!(f, "(Sing {a} {b})"),
            Term::Lam(b) => write!(f, "(Lam {b})"),
            Term::App(a, b) => write!(f, "(App {a} {b})"),
            Term::Q => write!(f, "Q"),
            Term::Sub(t, s) => write!(f, "(Sub {t} {s})"),
            Term::Sigma(a, b) => write!(f, "(Sigma {a} {b})"),
            Term::Pair(a, b) => write!(f, "(Pair {a} {b})"),
            Term::Fst(a) => write!(f, "(Fst {a})"),
            Term::Snd(a) => write!(f, "(Snd {a})"),
            Term::Nat => write!(f, "Nat"),
            Term::Zero => write!(f, "Zero"),
            Term::Suc(a) => write!(f, "(Suc {a})"),
            Term::Natrec(m, z, s, k) => write!(f, "(Natrec {m} {z} {s} {k})"),
            Term::Enum(n) => write!(f, "(Enum {n})"),
            Term::Const(n, i) => write!(f, "(Const {n} {i})"),
            Term::Case(n, m, bs, k) => {
                write!(f, "(Case {n} {m} (")?;
                for (j, b) in bs.iter().enumerate() {
                    if j > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{b}")?;
                }
                write!(f, ") {k})")
            }
            Term::Prf(a) => write!(f, "(Prf {a})"),
            Term::Box(a) => write!(f, "(Box {a})"),
            Term::Star => write!(f, "Star"),
            Term::Where(w, b, k) => write!(f, "(Where {w} {b} {k})"),
        }
    }
}

impl fmt::Display for Subst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subst::Empty => write!(f, "Empty"),
            Subst::Id => write!(f, "Id"),
            Subst::Ext(s, t) => write!(f, "(Ext {s} {t})"),
            Subst::P => write!(f, "P"),
            Subst::Comp(a, b) => write!(f, "(Comp {a} {b})"),
        }
    }
}
