use super::{Binder, Node, STerm, Span};
use crate::syntax::{mk_var, Term};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ElabOptions {
    pub allow_star: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElabErrorKind {
    UnboundName(String),
    StarInUserSyntax,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{}:{}: {}", span.line, span.col, match kind {
    ElabErrorKind::UnboundName(x) => format!("unbound name `{x}`"),
    ElabErrorKind::StarInUserSyntax => "StarInUserSyntax: `*` is not allowed in user input".to_string(),
})]
pub struct ElabError {
    pub span: Span,
    pub kind: ElabErrorKind,
}

struct Scope<'a> {
    // innermost last
    names: Vec<Option<&'a str>>,
    opts: ElabOptions,
}

impl<'a> Scope<'a> {
    fn lookup(&self, x: &str) -> Option<usize> {
        self.names.iter().rev().position(|n| *n == Some(x))
    }

    fn under<T>(&mut self, b: &'a Binder, f: impl FnOnce(&mut Self) -> T) -> T {
        self.names.push(b.as_deref());
        let r = f(self);
        self.names.pop();
        r
    }

    fn go(&mut self, s: &'a STerm) -> Result<Term, ElabError> {
        let err = |kind| ElabError { span: s.span, kind };
        Ok(match &s.node {
            Node::Var(x) => match self.lookup(x) {
                Some(i) => mk_var(i),
                None => return Err(err(ElabErrorKind::UnboundName(x.clone()))),
            },
            Node::Universe => Term::U,
            Node::Fun(x, a, b) => {
                let a = self.go(a)?;
                Term::fun(a, self.under(x, |sc| sc.go(b))?)
            }
            Node::Sing(a, t) => Term::sing(self.go(a)?, self.go(t)?),
            Node::Lam(x, b) => Term::lam(self.under(x, |sc| sc.go(b))?),
            Node::App(f, a) => Term::app(self.go(f)?, self.go(a)?),
            Node::Sigma(x, a, b) => {
                let a = self.go(a)?;
                Term::sigma(a, self.under(x, |sc| sc.go(b))?)
            }
            Node::Pair(a, b) => Term::pair(self.go(a)?, self.go(b)?),
            Node::Fst(a) => Term::fst(self.go(a)?),
            Node::Snd(a) => Term::snd(self.go(a)?),
            Node::Nat => Term::Nat,
            Node::Zero => Term::Zero,
            Node::Suc(a) => Term::suc(self.go(a)?),
            Node::Numeral(n) => Term::numeral(*n),
            Node::Natrec(x, m, z, st, k) => {
                let m = self.under(x, |sc| sc.go(m))?;
                Term::natrec(m, self.go(z)?, self.go(st)?, self.go(k)?)
            }
            Node::Enum(n) => Term::Enum(*n),
            Node::Const(n, i) => Term::Const(*n, *i),
            Node::Case(n, x, m, bs, k) => {
                let m = self.under(x, |sc| sc.go(m))?;
                let bs = bs
                    .iter()
                    .map(|b| self.go(b))
                    .collect::<Result<Vec<_>, _>>()?;
                let k = self.go(k)?;
                Term::Case(*n, m.into(), bs, k.into())
            }
            Node::Prf(a) => Term::prf(self.go(a)?),
            Node::Box(a) => Term::boxed(self.go(a)?),
            Node::Star => {
                if !self.opts.allow_star {
                    return Err(err(ElabErrorKind::StarInUserSyntax));
                }
                Term::Star
            }
            Node::Where(w, y, p, b) => {
                let w = self.go(w)?;
                let p = self.go(p)?;
                Term::where_(w, self.under(y, |sc| sc.go(b))?, p)
            }
        })
    }
}

/// Resolves names to de Bruijn indices. `scope` lists the names in scope,
/// innermost first.
pub fn elaborate(s: &STerm, scope: &[String], opts: ElabOptions) -> Result<Term, ElabError> {
    let mut sc = Scope {
        names: scope.iter().rev().map(|x| Some(x.as_str())).collect(),
        opts,
    };
    sc.go(s)
}
