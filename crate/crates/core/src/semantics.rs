//! The semantic domain, its eliminators, and evaluation.

use std::cell::Cell;
use std::sync::Arc;

use crate::syntax::{Subst, Term};

/// Elements of the semantic domain. Environments are `Top`/`PairV` spines.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Top,
    UV,
    VarV(usize),
    LamV(Arc<SemFun>),
    FunV(Arc<Value>, Arc<SemFun>),
    SingV(Arc<Value>, Arc<Value>),
    NeApp(Arc<Value>, Arc<Value>),
    SumV(Arc<Value>, Arc<SemFun>),
    PairV(Arc<Value>, Arc<Value>),
    NeFst(Arc<Value>),
    NeSnd(Arc<Value>),
    NatV,
    ZeroV,
    SucV(Arc<Value>),
    NeNatrec(Arc<SemFun>, Arc<Value>, Arc<Value>, Arc<Value>),
    PrfV(Arc<Value>),
    StarV,
    EnumV(usize),
    ConstV(usize, usize),
    NeCase(usize, Arc<SemFun>, Vec<Value>, Arc<Value>),
}

/// Semantic functions, defunctionalized. Only [`Machine::apply_fun`]
/// gives them meaning.
#[derive(Clone, Debug, PartialEq)]
pub enum SemFun {
    /// `e ↦ ⟦body⟧(env, e)`
    Closure { env: Value, body: Term },
    /// `d ↦ ↑^{cod d} (neutral (↓^dom d))`
    Reflect {
        dom: Value,
        cod: Arc<SemFun>,
        neutral: Value,
    },
    /// `e ↦ ↓^{cod (↑^dom e)} (fun · ↑^dom e)`
    Reify {
        dom: Value,
        cod: Arc<SemFun>,
        fun: Value,
    },
    /// `d ↦ ⇓(cod (↑^dom d))`
    ReifyType { dom: Value, cod: Arc<SemFun> },
    /// `d ↦ ⇓(F d)`
    Motive(Arc<SemFun>),
    /// `n ↦ F n → F (suc n)`
    StepType(Arc<SemFun>),
    /// `_ ↦ v`
    Const(Value),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NbeError {
    #[error("application of a non-function value ({0})")]
    NotAFunctionValue(String),
    #[error("natural-number recursion on a non-natural value ({0})")]
    NotANatural(String),
    #[error("case analysis on a non-enumeration value ({0})")]
    NotAnEnumValue(String),
    #[error("case over Enum {expected} given {got} branches")]
    BranchCountMismatch { expected: usize, got: usize },
    #[error("environment does not match the scope of the term ({0})")]
    EnvironmentShapeError(String),
    #[error("unexpected value during read-back ({0})")]
    InternalValueError(String),
    #[error("recursion depth limit {0} exceeded")]
    DepthExceeded(usize),
}

pub type NbeResult<T> = Result<T, NbeError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Interpret `box a` as `a` and let `where` use its proof.
    pub proof_relevant: bool,
    pub depth_limit: usize,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            proof_relevant: false,
            depth_limit: 100_000,
        }
    }
}

/// Evaluation context: options plus a recursion-depth counter.
#[derive(Debug, Default)]
pub struct Machine {
    pub options: Options,
    depth: Cell<usize>,
    clamps: Cell<usize>,
}

pub(crate) struct DepthGuard<'a>(&'a Cell<usize>);

impl Drop for DepthGuard<'_> {
    fn drop(&mut self) {
        self.0.set(self.0.get() - 1);
    }
}

fn head(v: &Value) -> String {
    let s = format!("{v:?}");
    match s.find(['(', ' ', '{']) {
        Some(k) => s[..k].to_string(),
        None => s,
    }
}

impl Value {
    pub fn pair(a: Value, b: Value) -> Value {
        Value::PairV(Arc::new(a), Arc::new(b))
    }

    pub fn suc(v: Value) -> Value {
        Value::SucV(Arc::new(v))
    }

    pub fn numeral(n: usize) -> Value {
        (0..n).fold(Value::ZeroV, |v, _| Value::suc(v))
    }

    pub fn lam(f: SemFun) -> Value {
        Value::LamV(Arc::new(f))
    }

    /// Environment extension `(env, d)`.
    pub fn extend(&self, d: Value) -> Value {
        Value::pair(self.clone(), d)
    }

    pub fn is_neutral(&self) -> bool {
        matches!(
            self,
            Value::VarV(_)
                | Value::NeApp(..)
                | Value::NeFst(_)
                | Value::NeSnd(_)
                | Value::NeNatrec(..)
                | Value::NeCase(..)
                | Value::StarV
        )
    }
}

impl SemFun {
    pub fn closure(env: Value, body: Term) -> SemFun {
        SemFun::Closure { env, body }
    }
}

fn env_fst(env: &Value) -> NbeResult<Value> {
    match env {
        Value::PairV(a, _) => Ok((**a).clone()),
        other => Err(NbeError::EnvironmentShapeError(head(other))),
    }
}

fn env_snd(env: &Value) -> NbeResult<Value> {
    match env {
        Value::PairV(_, b) => Ok((**b).clone()),
        other => Err(NbeError::EnvironmentShapeError(head(other))),
    }
}

impl Machine {
    pub fn new(options: Options) -> Machine {
        Machine {
            options,
            ..Machine::default()
        }
    }

    pub(crate) fn note_clamp(&self) {
        self.clamps.set(self.clamps.get() + 1);
    }

    /// Number of out-of-scope levels read back as the innermost index.
    pub fn clamp_count(&self) -> usize {
        self.clamps.get()
    }

    pub(crate) fn enter(&self) -> NbeResult<DepthGuard<'_>> {
        let d = self.depth.get() + 1;
        if d > self.options.depth_limit {
            return Err(NbeError::DepthExceeded(self.options.depth_limit));
        }
        self.depth.set(d);
        Ok(DepthGuard(&self.depth))
    }

    pub fn apply_fun(&self, f: &SemFun, d: Value) -> NbeResult<Value> {
        let _g = self.enter()?;
        match f {
            SemFun::Closure { env, body } => self.eval_term(body, &env.extend(d)),
            SemFun::Reflect { dom, cod, neutral } => {
                let arg = self.down(dom, &d)?;
                let ty = self.apply_fun(cod, d)?;
                self.up(&ty, Value::NeApp(Arc::new(neutral.clone()), Arc::new(arg)))
            }
            SemFun::Reify { dom, cod, fun } => {
                let x = self.up(dom, d)?;
                let ty = self.apply_fun(cod, x.clone())?;
                let r = self.apply_v(fun, x)?;
                self.down(&ty, &r)
            }
            SemFun::ReifyType { dom, cod } => {
                let x = self.up(dom, d)?;
                let ty = self.apply_fun(cod, x)?;
                self.down_t(&ty)
            }
            SemFun::Motive(fam) => {
                let ty = self.apply_fun(fam, d)?;
                self.down_t(&ty)
            }
            SemFun::StepType(fam) => {
                let here = self.apply_fun(fam, d.clone())?;
                let next = self.apply_fun(fam, Value::suc(d))?;
                Ok(Value::FunV(Arc::new(here), Arc::new(SemFun::Const(next))))
            }
            SemFun::Const(v) => Ok(v.clone()),
        }
    }

    pub fn apply_v(&self, f: &Value, d: Value) -> NbeResult<Value> {
        match f {
            Value::LamV(g) => self.apply_fun(g, d),
            Value::StarV => Ok(Value::StarV),
            other => Err(NbeError::NotAFunctionValue(head(other))),
        }
    }

    pub fn fst_v(&self, d: &Value) -> Value {
        match d {
            Value::PairV(a, _) => (**a).clone(),
            Value::StarV => Value::StarV,
            k => Value::NeFst(Arc::new(k.clone())),
        }
    }

    pub fn snd_v(&self, d: &Value) -> Value {
        match d {
            Value::PairV(_, b) => (**b).clone(),
            Value::StarV => Value::StarV,
            k => Value::NeSnd(Arc::new(k.clone())),
        }
    }

    pub fn natrec_v(
        &self,
        motive: &Arc<SemFun>,
        z: &Value,
        s: &Value,
        d: &Value,
    ) -> NbeResult<Value> {
        let _g = self.enter()?;
        match d {
            Value::ZeroV => Ok(z.clone()),
            Value::SucV(e) => {
                let rec = self.natrec_v(motive, z, s, e)?;
                let partial = self.apply_v(s, (**e).clone())?;
                self.apply_v(&partial, rec)
            }
            Value::StarV => Ok(Value::StarV),
            k if k.is_neutral() => {
                let base_ty = self.apply_fun(motive, Value::ZeroV)?;
                let base = self.down(&base_ty, z)?;
                let step_ty = Value::FunV(
                    Arc::new(Value::NatV),
                    Arc::new(SemFun::StepType(motive.clone())),
                );
                let step = self.down(&step_ty, s)?;
                let ty = self.apply_fun(motive, k.clone())?;
                self.up(
                    &ty,
                    Value::NeNatrec(
                        Arc::new(SemFun::Motive(motive.clone())),
                        Arc::new(base),
                        Arc::new(step),
                        Arc::new(k.clone()),
                    ),
                )
            }
            other => Err(NbeError::NotANatural(head(other))),
        }
    }

    pub fn case_v(
        &self,
        n: usize,
        motive: &Arc<SemFun>,
        branches: &[Value],
        d: &Value,
    ) -> NbeResult<Value> {
        let _g = self.enter()?;
        if branches.len() != n {
            return Err(NbeError::BranchCountMismatch {
                expected: n,
                got: branches.len(),
            });
        }
        match d {
            Value::StarV => return Ok(Value::StarV),
            Value::ConstV(m, i) if *m == n && *i < n => return Ok(branches[*i].clone()),
            _ => {}
        }
        let identity = branches
            .iter()
            .enumerate()
            .all(|(i, b)| *b == Value::ConstV(n, i));
        if identity {
            return Ok(d.clone());
        }
        if !d.is_neutral() {
            return Err(NbeError::NotAnEnumValue(head(d)));
        }
        let mut reified = Vec::with_capacity(n);
        for (i, b) in branches.iter().enumerate() {
            let ty = self.apply_fun(motive, Value::ConstV(n, i))?;
            reified.push(self.down(&ty, b)?);
        }
        let ty = self.apply_fun(motive, d.clone())?;
        self.up(
            &ty,
            Value::NeCase(
                n,
                Arc::new(SemFun::Motive(motive.clone())),
                reified,
                Arc::new(d.clone()),
            ),
        )
    }

    fn under(&self, env: &Value, body: &Arc<Term>) -> Arc<SemFun> {
        Arc::new(SemFun::closure(env.clone(), (**body).clone()))
    }

    pub fn eval_term(&self, t: &Term, env: &Value) -> NbeResult<Value> {
        let _g = self.enter()?;
        let ev = |t: &Arc<Term>| self.eval_term(t, env).map(Arc::new);
        Ok(match t {
            Term::U => Value::UV,
            Term::Fun(a, b) => Value::FunV(ev(a)?, self.under(env, b)),
            Term::Sing(a, b) => Value::SingV(ev(a)?, ev(b)?),
            Term::Lam(b) => Value::LamV(self.under(env, b)),
            Term::App(f, a) => {
                let f = self.eval_term(f, env)?;
                let a = self.eval_term(a, env)?;
                self.apply_v(&f, a)?
            }
            Term::Q => env_snd(env)?,
            Term::Sub(t, s) => {
                let env = self.eval_subst(s, env)?;
                self.eval_term(t, &env)?
            }
            Term::Sigma(a, b) => Value::SumV(ev(a)?, self.under(env, b)),
            Term::Pair(a, b) => Value::PairV(ev(a)?, ev(b)?),
            Term::Fst(p) => self.fst_v(&self.eval_term(p, env)?),
            Term::Snd(p) => self.snd_v(&self.eval_term(p, env)?),
            Term::Nat => Value::NatV,
            Term::Zero => Value::ZeroV,
            Term::Suc(a) => Value::SucV(ev(a)?),
            Term::Natrec(m, z, s, k) => {
                let motive = self.under(env, m);
                let z = self.eval_term(z, env)?;
                let s = self.eval_term(s, env)?;
                let k = self.eval_term(k, env)?;
                self.natrec_v(&motive, &z, &s, &k)?
            }
            Term::Enum(n) => Value::EnumV(*n),
            Term::Const(n, i) => Value::ConstV(*n, *i),
            Term::Case(n, m, bs, k) => {
                let motive = self.under(env, m);
                let bs = bs
                    .iter()
                    .map(|b| self.eval_term(b, env))
                    .collect::<NbeResult<Vec<_>>>()?;
                let k = self.eval_term(k, env)?;
                self.case_v(*n, &motive, &bs, &k)?
            }
            Term::Prf(a) => Value::PrfV(ev(a)?),
            Term::Box(a) => {
                if self.options.proof_relevant {
                    self.eval_term(a, env)?
                } else {
                    Value::StarV
                }
            }
            Term::Star => Value::StarV,
            Term::Where(_, b, k) => {
                let proof = if self.options.proof_relevant {
                    self.eval_term(k, env)?
                } else {
                    Value::StarV
                };
                self.eval_term(b, &env.extend(proof))?
            }
        })
    }

    pub fn eval_subst(&self, s: &Subst, env: &Value) -> NbeResult<Value> {
        let _g = self.enter()?;
        match s {
            Subst::Empty => Ok(Value::Top),
            Subst::Id => Ok(env.clone()),
            Subst::Ext(rest, t) => {
                let rest = self.eval_subst(rest, env)?;
                let t = self.eval_term(t, env)?;
                Ok(Value::pair(rest, t))
            }
            Subst::P => env_fst(env),
            Subst::Comp(outer, inner) => {
                let mid = self.eval_subst(inner, env)?;
                self.eval_subst(outer, &mid)
            }
        }
    }
}
