//! Read-back, reflection, reification and normalization.
//!
//! Free functions use a default [`Machine`]; use the methods directly to
//! control the depth limit or evaluation mode.

use std::sync::Arc;

use crate::semantics::{Machine, NbeError, NbeResult, SemFun, Value};
use crate::syntax::{mk_var, Ctx, Term};

impl Machine {
    /// Reads `d` back as a term with `j` variables in scope.
    pub fn readback(&self, j: usize, d: &Value) -> NbeResult<Term> {
        let _g = self.enter()?;
        let rb = |d: &Arc<Value>| self.readback(j, d).map(Arc::new);
        let under = |f: &Arc<SemFun>| -> NbeResult<Arc<Term>> {
            let body = self.apply_fun(f, Value::VarV(j))?;
            self.readback(j + 1, &body).map(Arc::new)
        };
        Ok(match d {
            Value::UV => Term::U,
            Value::FunV(x, f) => Term::Fun(rb(x)?, under(f)?),
            Value::SingV(a, x) => Term::Sing(rb(a)?, rb(x)?),
            Value::LamV(f) => Term::Lam(under(f)?),
            Value::VarV(i) => {
                if *i < j {
                    mk_var(j - (i + 1))
                } else {
                    self.note_clamp();
                    mk_var(0)
                }
            }
            Value::NeApp(k, a) => Term::App(rb(k)?, rb(a)?),
            Value::SumV(x, f) => Term::Sigma(rb(x)?, under(f)?),
            Value::PairV(a, b) => Term::Pair(rb(a)?, rb(b)?),
            Value::NeFst(k) => Term::Fst(rb(k)?),
            Value::NeSnd(k) => Term::Snd(rb(k)?),
            Value::NatV => Term::Nat,
            Value::ZeroV => Term::Zero,
            Value::SucV(a) => Term::Suc(rb(a)?),
            Value::NeNatrec(m, z, s, k) => Term::Natrec(under(m)?, rb(z)?, rb(s)?, rb(k)?),
            Value::PrfV(x) => Term::Prf(rb(x)?),
            Value::StarV => Term::Star,
            Value::EnumV(n) => Term::Enum(*n),
            Value::ConstV(n, i) => Term::Const(*n, *i),
            Value::NeCase(n, m, bs, k) => Term::Case(
                *n,
                under(m)?,
                bs.iter()
                    .map(|b| self.readback(j, b))
                    .collect::<NbeResult<Vec<_>>>()?,
                rb(k)?,
            ),
            Value::Top => return Err(NbeError::InternalValueError("Top".into())),
        })
    }

    /// Reflection `↑^X k`.
    pub fn up(&self, x: &Value, k: Value) -> NbeResult<Value> {
        let _g = self.enter()?;
        Ok(match x {
            Value::FunV(a, f) => Value::lam(SemFun::Reflect {
                dom: (**a).clone(),
                cod: f.clone(),
                neutral: k,
            }),
            Value::SingV(d, _) => (**d).clone(),
            Value::SumV(a, f) => {
                let k = Arc::new(k);
                let first = self.up(a, Value::NeFst(k.clone()))?;
                let ty = self.apply_fun(f, first.clone())?;
                let second = self.up(&ty, Value::NeSnd(k))?;
                Value::pair(first, second)
            }
            Value::PrfV(inner) if self.options.proof_relevant => self.up(inner, k)?,
            Value::PrfV(_) => Value::StarV,
            Value::EnumV(0) => Value::StarV,
            Value::EnumV(1) => Value::ConstV(1, 0),
            _ => k,
        })
    }

    /// Reification `↓^X d`.
    pub fn down(&self, x: &Value, d: &Value) -> NbeResult<Value> {
        let _g = self.enter()?;
        Ok(match x {
            Value::FunV(a, f) => Value::lam(SemFun::Reify {
                dom: (**a).clone(),
                cod: f.clone(),
                fun: d.clone(),
            }),
            Value::SingV(a, inner) => self.down(inner, a)?,
            Value::UV => self.down_t(d)?,
            Value::SumV(a, f) => {
                let first = self.fst_v(d);
                let ty = self.apply_fun(f, first.clone())?;
                let second = self.down(&ty, &self.snd_v(d))?;
                Value::pair(self.down(a, &first)?, second)
            }
            Value::PrfV(_) => Value::StarV,
            Value::EnumV(0) => Value::StarV,
            Value::EnumV(1) => Value::ConstV(1, 0),
            _ => d.clone(),
        })
    }

    /// Type reification `⇓X`.
    pub fn down_t(&self, x: &Value) -> NbeResult<Value> {
        let _g = self.enter()?;
        Ok(match x {
            Value::FunV(a, f) => Value::FunV(
                Arc::new(self.down_t(a)?),
                Arc::new(SemFun::ReifyType {
                    dom: (**a).clone(),
                    cod: f.clone(),
                }),
            ),
            Value::SingV(d, inner) => Value::SingV(
                Arc::new(self.down(inner, d)?),
                Arc::new(self.down_t(inner)?),
            ),
            Value::SumV(a, f) => Value::SumV(
                Arc::new(self.down_t(a)?),
                Arc::new(SemFun::ReifyType {
                    dom: (**a).clone(),
                    cod: f.clone(),
                }),
            ),
            Value::PrfV(inner) => Value::PrfV(Arc::new(self.down_t(inner)?)),
            _ => x.clone(),
        })
    }

    /// The environment binding each context entry to a fresh reflected level.
    pub fn canonical_env(&self, g: &Ctx) -> NbeResult<Value> {
        let mut env = Value::Top;
        for (level, ty) in g.outermost_first().iter().enumerate() {
            let x = self.eval_term(ty, &env)?;
            let v = self.up(&x, Value::VarV(level))?;
            env = env.extend(v);
        }
        Ok(env)
    }

    pub fn nbe_type(&self, g: &Ctx, a: &Term) -> NbeResult<Term> {
        let env = self.canonical_env(g)?;
        let x = self.eval_term(a, &env)?;
        self.readback(g.len(), &self.down_t(&x)?)
    }

    pub fn nbe_term(&self, g: &Ctx, a: &Term, t: &Term) -> NbeResult<Term> {
        let env = self.canonical_env(g)?;
        let x = self.eval_term(a, &env)?;
        let d = self.eval_term(t, &env)?;
        self.readback(g.len(), &self.down(&x, &d)?)
    }
}

pub fn readback(j: usize, d: &Value) -> NbeResult<Term> {
    Machine::default().readback(j, d)
}

pub fn up(x: &Value, k: Value) -> NbeResult<Value> {
    Machine::default().up(x, k)
}

pub fn down(x: &Value, d: &Value) -> NbeResult<Value> {
    Machine::default().down(x, d)
}

pub fn down_t(x: &Value) -> NbeResult<Value> {
    Machine::default().down_t(x)
}

pub fn canonical_env(g: &Ctx) -> NbeResult<Value> {
    Machine::default().canonical_env(g)
}

pub fn nbe_type(g: &Ctx, a: &Term) -> NbeResult<Term> {
    Machine::default().nbe_type(g, a)
}

pub fn nbe_term(g: &Ctx, a: &Term, t: &Term) -> NbeResult<Term> {
    Machine::default().nbe_term(g, a, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{is_normal, Subst};

    fn nat_to_nat() -> Term {
        Term::fun(Term::Nat, Term::sub(Term::Nat, Subst::P))
    }

    #[test]
    fn readback_examples() {
        assert_eq!(readback(1, &Value::VarV(0)), Ok(Term::Q));
        assert_eq!(readback(0, &Value::UV), Ok(Term::U));
        let id = Value::lam(SemFun::closure(Value::Top, Term::Q));
        assert_eq!(readback(0, &id), Ok(Term::lam(Term::Q)));
        assert!(readback(0, &Value::Top).is_err());
    }

    #[test]
    fn readback_clamp_is_noted() {
        let m = Machine::default();
        assert_eq!(m.readback(0, &Value::VarV(3)), Ok(Term::Q));
        assert_eq!(m.clamp_count(), 1);
    }

    #[test]
    fn reflection() {
        let sing = Value::SingV(Arc::new(Value::ZeroV), Arc::new(Value::NatV));
        assert_eq!(up(&sing, Value::VarV(0)), Ok(Value::ZeroV));
        assert_eq!(up(&Value::EnumV(0), Value::VarV(3)), Ok(Value::StarV));
        assert_eq!(up(&Value::UV, Value::VarV(0)), Ok(Value::VarV(0)));
        assert_eq!(
            up(&Value::EnumV(1), Value::VarV(0)),
            Ok(Value::ConstV(1, 0))
        );
    }

    #[test]
    fn reification() {
        let sing = Value::SingV(Arc::new(Value::ZeroV), Arc::new(Value::NatV));
        assert_eq!(down(&sing, &Value::VarV(0)), Ok(Value::ZeroV));
        assert_eq!(
            down(&Value::PrfV(Arc::new(Value::NatV)), &Value::VarV(0)),
            Ok(Value::StarV)
        );
        assert_eq!(
            down(&Value::EnumV(1), &Value::VarV(0)),
            Ok(Value::ConstV(1, 0))
        );
    }

    #[test]
    fn type_reification() {
        assert_eq!(down_t(&Value::UV), Ok(Value::UV));
        let sing = Value::SingV(Arc::new(Value::ZeroV), Arc::new(Value::NatV));
        assert_eq!(down_t(&sing), Ok(sing.clone()));
        let prf = Value::PrfV(Arc::new(Value::NatV));
        assert_eq!(down_t(&prf), Ok(prf.clone()));
    }

    #[test]
    fn canonical_environments() {
        assert_eq!(canonical_env(&Ctx::new()), Ok(Value::Top));
        assert_eq!(
            canonical_env(&Ctx::from_outermost([Term::Nat])),
            Ok(Value::pair(Value::Top, Value::VarV(0)))
        );
        let env = canonical_env(&Ctx::from_outermost([nat_to_nat()])).unwrap();
        let Value::PairV(_, f) = env else {
            panic!("expected a pair")
        };
        assert_eq!(
            readback(1, &f),
            Ok(Term::lam(Term::app(Term::sub(Term::Q, Subst::P), Term::Q)))
        );
    }

    #[test]
    fn normalization_examples() {
        let empty = Ctx::new();
        assert_eq!(nbe_type(&empty, &Term::U), Ok(Term::U));
        assert_eq!(
            nbe_type(
                &empty,
                &Term::sing(Term::app(Term::lam(Term::Q), Term::Zero), Term::Nat)
            ),
            Ok(Term::sing(Term::Zero, Term::Nat))
        );
        assert_eq!(
            nbe_type(&empty, &nat_to_nat()),
            Ok(Term::fun(Term::Nat, Term::Nat))
        );
        let g = Ctx::from_outermost([Term::sing(Term::Zero, Term::Nat)]);
        assert_eq!(nbe_term(&g, &Term::Nat, &Term::Q), Ok(Term::Zero));
        assert_eq!(
            nbe_term(&empty, &nat_to_nat(), &Term::lam(Term::Q)),
            Ok(Term::lam(Term::Q))
        );
        let g = Ctx::from_outermost([nat_to_nat()]);
        let eta = nbe_term(&g, &nat_to_nat(), &Term::Q).unwrap();
        assert_eq!(
            eta,
            Term::lam(Term::app(Term::sub(Term::Q, Subst::P), Term::Q))
        );
        assert!(is_normal(&eta));
    }

    #[test]
    fn neutral_natrec_reads_back_under_binder() {
        let g = Ctx::from_outermost([Term::Nat]);
        let t = Term::natrec(
            Term::Nat,
            Term::Zero,
            Term::lam(Term::lam(Term::suc(Term::Q))),
            Term::Q,
        );
        let n = nbe_term(&g, &Term::Nat, &t).unwrap();
        assert!(is_normal(&n));
        assert_eq!(
            n,
            Term::natrec(
                Term::Nat,
                Term::Zero,
                Term::lam(Term::lam(Term::suc(Term::Q))),
                Term::Q
            )
        );
    }
}
