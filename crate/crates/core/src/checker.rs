//! Bidirectional checking of normal forms and inference for neutrals.

use std::fmt;

use crate::semantics::{Machine, NbeError, Options};
use crate::surface::print::{print_term, print_term_scoped};
use crate::syntax::{contains_star, is_neutral, is_normal, lift, subs_chain, Ctx, Subst, Term};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Mode {
    /// Admit `*` in checked terms.
    pub allow_star: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagnosticKind {
    TypeMismatch {
        expected: Box<Term>,
        got: Box<Term>,
        expected_erased: Box<Term>,
    },
    NotInferable,
    NotAType,
    UnboundIndex(usize),
    StarInUserSyntax,
    ExpectedFunction {
        found: Term,
    },
    ExpectedSigma {
        found: Term,
    },
    ExpectedNat {
        found: Term,
    },
    ExpectedEnum {
        n: usize,
        found: Term,
    },
    ExpectedPrf {
        found: Term,
    },
    IrrelevanceViolation,
    BranchCountMismatch {
        expected: usize,
        got: usize,
    },
    NotNormalInput,
    Evaluation(NbeError),
}

/// A rejected judgement: what went wrong, in which term, under how many
/// binders.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{}", self.render())]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub context_depth: usize,
    pub subject: Box<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("context entry {position}: {diagnostic}")]
pub struct CtxDiagnostic {
    pub position: usize,
    pub diagnostic: Diagnostic,
}

impl DiagnosticKind {
    pub fn name(&self) -> &'static str {
        match self {
            DiagnosticKind::TypeMismatch { .. } => "TypeMismatch",
            DiagnosticKind::NotInferable => "NotInferable",
            DiagnosticKind::NotAType => "NotAType",
            DiagnosticKind::UnboundIndex(_) => "UnboundIndex",
            DiagnosticKind::StarInUserSyntax => "StarInUserSyntax",
            DiagnosticKind::ExpectedFunction { .. } => "ExpectedFunction",
            DiagnosticKind::ExpectedSigma { .. } => "ExpectedSigma",
            DiagnosticKind::ExpectedNat { .. } => "ExpectedNat",
            DiagnosticKind::ExpectedEnum { .. } => "ExpectedEnum",
            DiagnosticKind::ExpectedPrf { .. } => "ExpectedPrf",
            DiagnosticKind::IrrelevanceViolation => "IrrelevanceViolation",
            DiagnosticKind::BranchCountMismatch { .. } => "BranchCountMismatch",
            DiagnosticKind::NotNormalInput => "NotNormalInput",
            DiagnosticKind::Evaluation(_) => "Evaluation",
        }
    }
}

impl Diagnostic {
    fn render(&self) -> String {
        self.render_with(&|t| print_term(t, self.context_depth))
    }

    /// Renders the diagnostic naming the outermost variables `names`.
    pub fn render_named(&self, names: &[String]) -> String {
        self.render_with(&|t| print_term_scoped(t, names, self.context_depth))
    }

    fn render_with(&self, p: &dyn Fn(&Term) -> String) -> String {
        let detail = match &self.kind {
            DiagnosticKind::TypeMismatch {
                expected,
                got,
                expected_erased,
            } => {
                if expected_erased == expected {
                    format!("expected `{}`, got `{}`", p(expected), p(got))
                } else {
                    format!(
                        "expected `{}` (underlying `{}`), got `{}`",
                        p(expected),
                        p(expected_erased),
                        p(got)
                    )
                }
            }
            DiagnosticKind::NotInferable => "cannot infer a type".into(),
            DiagnosticKind::NotAType => "not a type".into(),
            DiagnosticKind::UnboundIndex(i) => format!("index {i} is not bound"),
            DiagnosticKind::StarInUserSyntax => "`*` is not allowed in user input".into(),
            DiagnosticKind::ExpectedFunction { found } => {
                format!("expected a function type, found `{}`", p(found))
            }
            DiagnosticKind::ExpectedSigma { found } => {
                format!("expected a pair type, found `{}`", p(found))
            }
            DiagnosticKind::ExpectedNat { found } => {
                format!("expected `Nat`, found `{}`", p(found))
            }
            DiagnosticKind::ExpectedEnum { n, found } => {
                format!("expected `Enum {n}`, found `{}`", p(found))
            }
            DiagnosticKind::ExpectedPrf { found } => {
                format!("expected a proposition `Prf _`, found `{}`", p(found))
            }
            DiagnosticKind::IrrelevanceViolation => {
                "the body of `where` depends on its proof".into()
            }
            DiagnosticKind::BranchCountMismatch { expected, got } => {
                format!("expected {expected} branches, got {got}")
            }
            DiagnosticKind::NotNormalInput => "input is not in normal form".into(),
            DiagnosticKind::Evaluation(e) => e.to_string(),
        };
        format!("{}: {} in `{}`", self.kind.name(), detail, p(&self.subject))
    }
}

pub type CheckResult<T> = Result<T, Diagnostic>;

/// Strips nested singleton layers.
pub fn erase_tag(v: &Term) -> Term {
    match v {
        Term::Sing(_, tag) => erase_tag(tag),
        other => other.clone(),
    }
}

/// Type checker. Holds the star policy and the evaluation machine.
#[derive(Debug, Default)]
pub struct Checker {
    pub mode: Mode,
    pub machine: Machine,
}

fn sg(t: Term) -> Subst {
    Subst::single(t)
}

impl Checker {
    pub fn new(mode: Mode, options: Options) -> Checker {
        Checker {
            mode,
            machine: Machine::new(options),
        }
    }

    fn diag(&self, g: &Ctx, subject: &Term, kind: DiagnosticKind) -> Diagnostic {
        Diagnostic {
            kind,
            context_depth: g.len(),
            subject: Box::new(subject.clone()),
        }
    }

    pub fn nbe_type(&self, g: &Ctx, a: &Term) -> CheckResult<Term> {
        self.machine
            .nbe_type(g, a)
            .map_err(|e| self.diag(g, a, DiagnosticKind::Evaluation(e)))
    }

    pub fn nbe_term(&self, g: &Ctx, a: &Term, t: &Term) -> CheckResult<Term> {
        self.machine
            .nbe_term(g, a, t)
            .map_err(|e| self.diag(g, t, DiagnosticKind::Evaluation(e)))
    }

    pub fn eq_type(&self, g: &Ctx, a: &Term, b: &Term) -> CheckResult<bool> {
        Ok(self.nbe_type(g, a)? == self.nbe_type(g, b)?)
    }

    pub fn eq_term(&self, g: &Ctx, a: &Term, t: &Term, u: &Term) -> CheckResult<bool> {
        Ok(self.nbe_term(g, a, t)? == self.nbe_term(g, a, u)?)
    }

    fn gate(&self, g: &Ctx, t: &Term) -> CheckResult<()> {
        if !self.mode.allow_star && contains_star(t) {
            return Err(self.diag(g, t, DiagnosticKind::StarInUserSyntax));
        }
        if !is_normal(t) {
            return Err(self.diag(g, t, DiagnosticKind::NotNormalInput));
        }
        Ok(())
    }

    /// Well-formedness of a normal type.
    pub fn check_type(&self, g: &Ctx, v: &Term) -> CheckResult<()> {
        self.gate(g, v)?;
        self.chk_type(g, v)
    }

    /// Checks the normal term `v` against the normal type `ty`.
    pub fn check_term(&self, g: &Ctx, ty: &Term, v: &Term) -> CheckResult<()> {
        self.gate(g, v)?;
        self.chk_term(g, ty, v)
    }

    /// Infers the principal type of a neutral term, in long normal form.
    pub fn infer_type(&self, g: &Ctx, k: &Term) -> CheckResult<Term> {
        self.gate(g, k)?;
        self.inf_type(g, k)
    }

    /// Drops one context entry per weakening in `s`.
    pub fn infer_ctx(&self, g: &Ctx, s: &Subst) -> CheckResult<Ctx> {
        let subject = Term::sub(Term::Q, s.clone());
        let not = || self.diag(g, &subject, DiagnosticKind::NotInferable);
        let mut drops = 0;
        let mut cur = s;
        loop {
            match cur {
                Subst::P => {
                    drops += 1;
                    break;
                }
                Subst::Comp(outer, inner) if **outer == Subst::P => {
                    drops += 1;
                    cur = inner;
                }
                _ => return Err(not()),
            }
        }
        g.drop_innermost(drops).ok_or_else(not)
    }

    /// Checks types left to right, each in the context of its predecessors.
    pub fn check_ctx(&self, types: &[Term]) -> Result<Ctx, CtxDiagnostic> {
        let mut g = Ctx::new();
        for (position, ty) in types.iter().enumerate() {
            self.check_type(&g, ty)
                .map_err(|diagnostic| CtxDiagnostic {
                    position,
                    diagnostic,
                })?;
            g.push(ty.clone());
        }
        Ok(g)
    }

    fn chk_type(&self, g: &Ctx, v: &Term) -> CheckResult<()> {
        match v {
            Term::U | Term::Nat | Term::Enum(_) => Ok(()),
            Term::Fun(a, b) | Term::Sigma(a, b) => {
                self.chk_type(g, a)?;
                self.chk_type(&g.extend((**a).clone()), b)
            }
            Term::Sing(a, x) => {
                self.chk_type(g, x)?;
                let x = self.nbe_type(g, x)?;
                self.chk_term(g, &x, a)
            }
            Term::Prf(a) => self.chk_type(g, a),
            k if is_neutral(k) => self.chk_term(g, &Term::U, k),
            _ => Err(self.diag(g, v, DiagnosticKind::NotAType)),
        }
    }

    fn mismatch(&self, g: &Ctx, v: &Term, expected: &Term, got: Term) -> Diagnostic {
        self.diag(
            g,
            v,
            DiagnosticKind::TypeMismatch {
                expected: Box::new(expected.clone()),
                got: Box::new(got),
                expected_erased: Box::new(erase_tag(expected)),
            },
        )
    }

    fn chk_term(&self, g: &Ctx, ty: &Term, v: &Term) -> CheckResult<()> {
        if let Term::Sing(a, x) = ty {
            self.chk_term(g, x, v)?;
            let want = self.nbe_term(g, x, a)?;
            let have = self.nbe_term(g, x, v)?;
            if want != have {
                let got = Term::sing(have, (**x).clone());
                return Err(self.mismatch(g, v, ty, got));
            }
            return Ok(());
        }
        match (ty, v) {
            (Term::U, Term::Fun(a, b) | Term::Sigma(a, b)) => {
                self.chk_term(g, &Term::U, a)?;
                self.chk_term(&g.extend((**a).clone()), &Term::U, b)
            }
            (Term::U, Term::Sing(a, x)) => {
                self.chk_term(g, &Term::U, x)?;
                let x = self.nbe_type(g, x)?;
                self.chk_term(g, &x, a)
            }
            (Term::U, Term::Nat | Term::Enum(_)) => Ok(()),
            (Term::U, Term::Prf(a)) => self.chk_term(g, &Term::U, a),
            (_, Term::U | Term::Fun(..) | Term::Sigma(..) | Term::Sing(..))
            | (_, Term::Nat | Term::Enum(_) | Term::Prf(_)) => {
                Err(self.mismatch(g, v, ty, Term::U))
            }
            (Term::Fun(a, b), Term::Lam(body)) => self.chk_term(&g.extend((**a).clone()), b, body),
            (_, Term::Lam(_)) => {
                Err(self.diag(g, v, DiagnosticKind::ExpectedFunction { found: ty.clone() }))
            }
            (Term::Sigma(a, b), Term::Pair(x, y)) => {
                self.chk_term(g, a, x)?;
                let by = self.nbe_type(g, &Term::sub((**b).clone(), sg((**x).clone())))?;
                self.chk_term(g, &by, y)
            }
            (_, Term::Pair(..)) => {
                Err(self.diag(g, v, DiagnosticKind::ExpectedSigma { found: ty.clone() }))
            }
            (Term::Nat, Term::Zero) => Ok(()),
            (Term::Nat, Term::Suc(n)) => self.chk_term(g, &Term::Nat, n),
            (_, Term::Zero | Term::Suc(_)) => Err(self.mismatch(g, v, ty, Term::Nat)),
            (Term::Enum(n), Term::Const(m, i)) if m == n && i < n => Ok(()),
            (_, Term::Const(m, _)) => Err(self.mismatch(g, v, ty, Term::Enum(*m))),
            (Term::Prf(a), Term::Box(x)) => self.chk_term(g, a, x),
            (_, Term::Box(_)) => {
                Err(self.diag(g, v, DiagnosticKind::ExpectedPrf { found: ty.clone() }))
            }
            (_, Term::Star) if !self.mode.allow_star => {
                Err(self.diag(g, v, DiagnosticKind::StarInUserSyntax))
            }
            (Term::Prf(_) | Term::Enum(0), Term::Star) => Ok(()),
            (_, Term::Star) if self.absurd(g)? => Ok(()),
            (_, k) if is_neutral(k) => {
                let got = self.inf_type(g, k)?;
                let erased = erase_tag(&got);
                if self.eq_type(g, &erased, ty)? {
                    Ok(())
                } else {
                    Err(self.mismatch(g, v, ty, got))
                }
            }
            _ => Err(self.diag(g, v, DiagnosticKind::NotNormalInput)),
        }
    }

    /// Whether some hypothesis is evidently empty, so that `*` inhabits every type.
    fn absurd(&self, g: &Ctx) -> CheckResult<bool> {
        for i in 0..g.len() {
            let ty = self.inferred(g, &crate::syntax::mk_var(i))?;
            if matches!(&ty, Term::Enum(0)) || matches!(&ty, Term::Prf(a) if **a == Term::Enum(0)) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn inferred(&self, g: &Ctx, k: &Term) -> CheckResult<Term> {
        self.inf_type(g, k).map(|t| erase_tag(&t))
    }

    fn inf_type(&self, g: &Ctx, k: &Term) -> CheckResult<Term> {
        match k {
            Term::Q => match g.get(0) {
                Some(a) => self.nbe_type(g, &lift(1, a.clone())),
                None => Err(self.diag(g, k, DiagnosticKind::UnboundIndex(0))),
            },
            Term::Sub(q, s) if **q == Term::Q => {
                let inner = self.infer_ctx(g, s).map_err(|mut d| {
                    if let Some(i) = crate::syntax::as_var(k) {
                        d.kind = DiagnosticKind::UnboundIndex(i);
                    }
                    d
                })?;
                let a = self.inf_type(&inner, &Term::Q)?;
                self.nbe_type(g, &Term::sub(a, (**s).clone()))
            }
            Term::App(f, a) => match self.inferred(g, f)? {
                Term::Fun(dom, cod) => {
                    self.chk_term(g, &dom, a)?;
                    self.nbe_type(g, &Term::sub((*cod).clone(), sg((**a).clone())))
                }
                found => Err(self.diag(g, k, DiagnosticKind::ExpectedFunction { found })),
            },
            Term::Fst(p) => match self.inferred(g, p)? {
                Term::Sigma(a, _) => Ok((*a).clone()),
                found => Err(self.diag(g, k, DiagnosticKind::ExpectedSigma { found })),
            },
            Term::Snd(p) => match self.inferred(g, p)? {
                Term::Sigma(_, b) => {
                    self.nbe_type(g, &Term::sub((*b).clone(), sg(Term::fst((**p).clone()))))
                }
                found => Err(self.diag(g, k, DiagnosticKind::ExpectedSigma { found })),
            },
            Term::Natrec(motive, z, s, n) => {
                match self.inferred(g, n)? {
                    Term::Nat => {}
                    found => return Err(self.diag(g, k, DiagnosticKind::ExpectedNat { found })),
                }
                let m = (**motive).clone();
                self.chk_type(&g.extend(Term::Nat), &m)?;
                let zt = self.nbe_type(g, &Term::sub(m.clone(), sg(Term::Zero)))?;
                self.chk_term(g, &zt, z)?;
                let next = Term::sub(
                    m.clone(),
                    Subst::ext(subs_chain(1), Term::suc(crate::syntax::mk_var(1))),
                );
                let st = self.nbe_type(g, &Term::fun(Term::Nat, Term::fun(m.clone(), next)))?;
                self.chk_term(g, &st, s)?;
                self.nbe_type(g, &Term::sub(m, sg((**n).clone())))
            }
            Term::Case(n, motive, branches, scrut) => {
                if branches.len() != *n {
                    return Err(self.diag(
                        g,
                        k,
                        DiagnosticKind::BranchCountMismatch {
                            expected: *n,
                            got: branches.len(),
                        },
                    ));
                }
                match self.inferred(g, scrut)? {
                    Term::Enum(m) if m == *n => {}
                    found => {
                        return Err(self.diag(g, k, DiagnosticKind::ExpectedEnum { n: *n, found }))
                    }
                }
                let m = (**motive).clone();
                self.chk_type(&g.extend(Term::Enum(*n)), &m)?;
                for (i, b) in branches.iter().enumerate() {
                    let bt = self.nbe_type(g, &Term::sub(m.clone(), sg(Term::Const(*n, i))))?;
                    self.chk_term(g, &bt, b)?;
                }
                self.nbe_type(g, &Term::sub(m, sg((**scrut).clone())))
            }
            Term::Where(w, body, proof) => {
                self.chk_type(g, w)?;
                let prop = match self.inferred(g, proof)? {
                    Term::Prf(a) => (*a).clone(),
                    found => return Err(self.diag(g, k, DiagnosticKind::ExpectedPrf { found })),
                };
                let w = (**w).clone();
                let g1 = g.extend(prop.clone());
                let bt = self.nbe_type(&g1, &Term::sub(w.clone(), Subst::P))?;
                self.chk_term(&g1, &bt, body)?;
                let g2 = g1.extend(Term::sub(prop, Subst::P));
                let w2 = Term::sub(w.clone(), subs_chain(1));
                let fresh = Term::sub((**body).clone(), Subst::ext(subs_chain(1), Term::Q));
                let old = Term::sub((**body).clone(), Subst::P);
                if self.nbe_term(&g2, &w2, &fresh)? != self.nbe_term(&g2, &w2, &old)? {
                    return Err(self.diag(g, k, DiagnosticKind::IrrelevanceViolation));
                }
                self.nbe_type(g, &w)
            }
            _ => Err(self.diag(g, k, DiagnosticKind::NotInferable)),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.allow_star {
            write!(f, "allow-star")
        } else {
            write!(f, "default")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::mk_var;

    fn chk() -> Checker {
        Checker::default()
    }

    fn nat_sing() -> Term {
        Term::sing(Term::Zero, Term::Nat)
    }

    #[test]
    fn erasure() {
        assert_eq!(erase_tag(&Term::sing(Term::Zero, nat_sing())), Term::Nat);
        assert_eq!(erase_tag(&Term::Nat), Term::Nat);
        let f = Term::fun(Term::Nat, Term::Nat);
        assert_eq!(erase_tag(&f), f);
    }

    #[test]
    fn equality() {
        let c = chk();
        let g = Ctx::from_outermost([Term::fun(Term::Nat, Term::Nat)]);
        let ty = Term::fun(Term::Nat, Term::sub(Term::Nat, Subst::P));
        let eta = Term::lam(Term::app(mk_var(1), Term::Q));
        assert_eq!(c.eq_term(&g, &ty, &Term::Q, &eta), Ok(true));
        assert_eq!(
            c.eq_term(&Ctx::new(), &Term::Nat, &Term::Zero, &Term::numeral(1)),
            Ok(false)
        );
        let prf = Term::prf(Term::Nat);
        let g = Ctx::from_outermost([prf.clone(), Term::sub(prf.clone(), Subst::P)]);
        assert_eq!(c.eq_term(&g, &prf, &Term::Q, &mk_var(1)), Ok(true));
    }

    #[test]
    fn type_checking() {
        let c = chk();
        assert!(c.check_type(&Ctx::new(), &nat_sing()).is_ok());
        assert!(c
            .check_type(
                &Ctx::new(),
                &Term::sing(Term::Zero, Term::fun(Term::Nat, Term::Nat))
            )
            .is_err());
        assert!(c
            .check_type(&Ctx::from_outermost([Term::U]), &Term::Q)
            .is_ok());
        assert_eq!(
            c.check_type(&Ctx::new(), &Term::Zero).unwrap_err().kind,
            DiagnosticKind::NotAType
        );
    }

    #[test]
    fn term_checking() {
        let c = chk();
        let g = Ctx::from_outermost([nat_sing()]);
        assert!(c.check_term(&g, &nat_sing(), &Term::Q).is_ok());
        assert!(c.check_term(&g, &Term::Nat, &Term::Q).is_ok());
        assert!(c
            .check_term(
                &Ctx::new(),
                &Term::fun(Term::Nat, Term::Nat),
                &Term::lam(Term::Q)
            )
            .is_ok());
        assert_eq!(
            c.check_term(&Ctx::new(), &Term::prf(Term::Enum(0)), &Term::Star)
                .unwrap_err()
                .kind,
            DiagnosticKind::StarInUserSyntax
        );
        assert_eq!(
            c.check_term(&Ctx::new(), &Term::Enum(3), &Term::Const(3, 5))
                .unwrap_err()
                .kind,
            DiagnosticKind::NotNormalInput
        );
        assert!(matches!(
            c.check_term(&Ctx::new(), &Term::Enum(3), &Term::Const(2, 1))
                .unwrap_err()
                .kind,
            DiagnosticKind::TypeMismatch { .. }
        ));
        assert!(c
            .check_term(&g, &Term::sing(Term::numeral(1), Term::Nat), &Term::Q)
            .is_err());
    }

    #[test]
    fn star_mode() {
        let c = Checker::new(Mode { allow_star: true }, Options::default());
        assert!(c
            .check_term(&Ctx::new(), &Term::prf(Term::Enum(0)), &Term::Star)
            .is_ok());
        assert!(c
            .check_term(&Ctx::new(), &Term::Enum(0), &Term::Star)
            .is_ok());
        assert!(c.check_term(&Ctx::new(), &Term::Nat, &Term::Star).is_err());
        let absurd = Ctx::from_outermost([Term::Nat, Term::prf(Term::Enum(0))]);
        assert!(c.check_term(&absurd, &Term::Nat, &Term::Star).is_ok());
        let consistent = Ctx::from_outermost([Term::prf(Term::Enum(1))]);
        assert!(c.check_term(&consistent, &Term::Nat, &Term::Star).is_err());
    }

    #[test]
    fn inference() {
        let c = chk();
        let g = Ctx::from_outermost([Term::Nat]);
        assert_eq!(c.infer_type(&g, &Term::Q), Ok(Term::Nat));
        let sig = Term::sigma(Term::Nat, Term::Nat);
        let g2 = Ctx::from_outermost([sig]);
        assert_eq!(c.infer_type(&g2, &Term::fst(Term::Q)), Ok(Term::Nat));
        assert_eq!(c.infer_type(&g2, &Term::snd(Term::Q)), Ok(Term::Nat));
        let rec = Term::natrec(
            Term::Nat,
            Term::Zero,
            Term::lam(Term::lam(Term::suc(Term::Q))),
            Term::Q,
        );
        assert_eq!(c.infer_type(&g, &rec), Ok(Term::Nat));
        assert_eq!(
            c.infer_type(&g, &mk_var(3)).unwrap_err().kind,
            DiagnosticKind::UnboundIndex(3)
        );
        assert_eq!(
            c.infer_type(&g, &Term::Zero).unwrap_err().kind,
            DiagnosticKind::NotInferable
        );
    }

    #[test]
    fn context_inference() {
        let c = chk();
        let g = Ctx::from_outermost([Term::U, Term::Nat]);
        assert_eq!(
            c.infer_ctx(&g, &Subst::P),
            Ok(Ctx::from_outermost([Term::U]))
        );
        let abc = Ctx::from_outermost([Term::U, Term::Nat, Term::Enum(2)]);
        assert_eq!(
            c.infer_ctx(&abc, &Subst::comp(Subst::P, Subst::P)),
            Ok(Ctx::from_outermost([Term::U]))
        );
        assert!(c
            .infer_ctx(
                &Ctx::from_outermost([Term::Nat]),
                &Subst::single(Term::Zero)
            )
            .is_err());
    }

    #[test]
    fn context_checking() {
        let c = chk();
        assert_eq!(
            c.check_ctx(&[Term::Nat]),
            Ok(Ctx::from_outermost([Term::Nat]))
        );
        assert!(c.check_ctx(&[Term::U, Term::Q]).is_ok());
        let bad = c
            .check_ctx(&[
                Term::Nat,
                Term::sing(Term::Zero, Term::fun(Term::Nat, Term::Nat)),
            ])
            .unwrap_err();
        assert_eq!(bad.position, 1);
    }

    #[test]
    fn where_irrelevance() {
        let c = chk();
        // p : Prf (Enum 2)
        let g = Ctx::from_outermost([Term::prf(Term::Enum(2))]);
        let constant = Term::where_(Term::Nat, Term::Zero, Term::Q);
        assert_eq!(c.infer_type(&g, &constant), Ok(Term::Nat));
        let relevant = Term::where_(
            Term::Enum(2),
            Term::case(
                2,
                Term::Enum(2),
                vec![Term::Const(2, 1), Term::Const(2, 0)],
                Term::Q,
            )
            .unwrap(),
            Term::Q,
        );
        // the proof variable has type Enum 2 inside the body
        let g = Ctx::from_outermost([Term::prf(Term::Enum(2))]);
        assert_eq!(
            c.infer_type(&g, &relevant).unwrap_err().kind,
            DiagnosticKind::IrrelevanceViolation
        );
    }
}
