use super::lexer::is_reserved;
use crate::syntax::{as_var, mentions_index, Subst, Term};

const TERM: u8 = 0;
const APP: u8 = 1;
const ATOM: u8 = 2;

struct Printer {
    // outermost first
    names: Vec<String>,
}

fn closed_numeral(t: &Term) -> Option<usize> {
    match t {
        Term::Zero => Some(0),
        Term::Suc(n) => closed_numeral(n).map(|k| k + 1),
        _ => None,
    }
}

fn weakening(s: &Subst) -> Option<usize> {
    match s {
        Subst::P => Some(1),
        Subst::Comp(outer, inner) if **outer == Subst::P => weakening(inner).map(|k| k + 1),
        _ => None,
    }
}

fn paren(s: String, have: u8, need: u8) -> String {
    if have < need {
        format!("({s})")
    } else {
        s
    }
}

impl Printer {
    fn fresh(&self) -> String {
        format!("x{}", self.names.len())
    }

    fn bind<T>(&mut self, f: impl FnOnce(&mut Printer, &str) -> T) -> T {
        let x = self.fresh();
        self.names.push(x.clone());
        let r = f(self, &x);
        self.names.pop();
        r
    }

    fn with_depth<T>(&mut self, depth: usize, f: impl FnOnce(&mut Printer) -> T) -> T {
        let saved = self.names.clone();
        self.names.truncate(depth);
        while self.names.len() < depth {
            let x = self.fresh();
            self.names.push(x);
        }
        let r = f(self);
        self.names = saved;
        r
    }

    fn subst_depth(&self, s: &Subst, d: usize) -> usize {
        match s {
            Subst::Empty => 0,
            Subst::Id => d,
            Subst::Ext(rest, _) => self.subst_depth(rest, d) + 1,
            Subst::P => d.saturating_sub(1),
            Subst::Comp(outer, inner) => self.subst_depth(outer, self.subst_depth(inner, d)),
        }
    }

    fn subst(&mut self, s: &Subst) -> String {
        match s {
            Subst::Empty => "<>".into(),
            Subst::Id => "id".into(),
            Subst::P => "p".into(),
            Subst::Ext(rest, t) => format!("{}, {}", self.subst(rest), self.go(t, TERM)),
            Subst::Comp(outer, inner) => {
                let d = self.subst_depth(inner, self.names.len());
                let inner_s = self.subst(inner);
                let outer_s = self.with_depth(d, |p| p.subst(outer));
                format!("({outer_s}) o ({inner_s})")
            }
        }
    }

    fn go(&mut self, t: &Term, need: u8) -> String {
        if let Some(i) = as_var(t) {
            let d = self.names.len();
            return match d.checked_sub(i + 1) {
                Some(level) => self.names[level].clone(),
                None => format!("?{i}"),
            };
        }
        if let Some(n) = closed_numeral(t) {
            return if n == 0 { "zero".into() } else { n.to_string() };
        }
        let (s, have) = match t {
            Term::U => ("U".into(), ATOM),
            Term::Nat => ("Nat".into(), ATOM),
            Term::Star => ("*".into(), ATOM),
            Term::Enum(n) => (format!("Enum {n}"), ATOM),
            Term::Const(n, i) => (format!("c{{{n},{i}}}"), ATOM),
            Term::Sing(a, x) => (
                format!("{{{} : {}}}", self.go(a, TERM), self.go(x, TERM)),
                ATOM,
            ),
            Term::Pair(a, b) => (
                format!("({}, {})", self.go(a, TERM), self.go(b, TERM)),
                ATOM,
            ),
            Term::Fun(a, b) => {
                let dom = if mentions_index(b, 0) {
                    let x = self.fresh();
                    format!("({x} : {}) -> ", self.go(a, TERM))
                } else {
                    format!("{} -> ", self.go(a, APP))
                };
                let cod = self.bind(|p, _| p.go(b, TERM));
                (dom + &cod, TERM)
            }
            Term::Sigma(a, b) => {
                let x = self.fresh();
                let dom = self.go(a, TERM);
                let cod = self.bind(|p, _| p.go(b, TERM));
                (format!("Sig ({x} : {dom}). {cod}"), TERM)
            }
            Term::Lam(_) => {
                let mut binders = Vec::new();
                let mut body = t;
                let start = self.names.len();
                while let Term::Lam(b) = body {
                    let x = self.fresh();
                    binders.push(x.clone());
                    self.names.push(x);
                    body = b;
                }
                let b = self.go(body, TERM);
                self.names.truncate(start);
                (format!("\\{}. {b}", binders.join(" ")), TERM)
            }
            Term::App(f, a) => (format!("{} {}", self.go(f, APP), self.go(a, ATOM)), APP),
            Term::Fst(a) => (format!("fst {}", self.go(a, ATOM)), APP),
            Term::Snd(a) => (format!("snd {}", self.go(a, ATOM)), APP),
            Term::Suc(a) => (format!("suc {}", self.go(a, ATOM)), APP),
            Term::Prf(a) => (format!("Prf {}", self.go(a, ATOM)), APP),
            Term::Box(a) => (format!("box {}", self.go(a, ATOM)), APP),
            Term::Natrec(m, z, s, k) => {
                let motive = self.bind(|p, x| format!("[{x}. {}]", p.go(m, TERM)));
                (
                    format!(
                        "natrec {motive} {} {} {}",
                        self.go(z, ATOM),
                        self.go(s, ATOM),
                        self.go(k, ATOM)
                    ),
                    APP,
                )
            }
            Term::Case(n, m, bs, k) => {
                let motive = self.bind(|p, x| format!("[{x}. {}]", p.go(m, TERM)));
                let bs: Vec<String> = bs.iter().map(|b| self.go(b, TERM)).collect();
                (
                    format!(
                        "case{{{n}}} {motive} ({}) {}",
                        bs.join(" | "),
                        self.go(k, ATOM)
                    ),
                    APP,
                )
            }
            Term::Where(w, b, k) => {
                let w = self.go(w, TERM);
                let k = self.go(k, TERM);
                let (y, body) = self.bind(|p, y| (y.to_string(), p.go(b, ATOM)));
                (format!("where [{w}] ([{y}] = {k}) {body}"), APP)
            }
            Term::Sub(inner, s) => match weakening(s) {
                Some(k) => {
                    let d = self.names.len().saturating_sub(k);
                    return self.with_depth(d, |p| p.go(inner, need));
                }
                None => {
                    let d = self.subst_depth(s, self.names.len());
                    let sub = self.subst(s);
                    let body = self.with_depth(d, |p| p.go(inner, TERM));
                    (format!("({body})[{sub}]"), ATOM)
                }
            },
            Term::Q | Term::Zero => unreachable!("handled above"),
        };
        paren(s, have, need)
    }
}

/// Prints `t` with `depth` variables in scope, naming the variable at
/// level `l` as `x{l}`.
pub fn print_term(t: &Term, depth: usize) -> String {
    let mut p = Printer {
        names: (0..depth).map(|l| format!("x{l}")).collect(),
    };
    p.go(t, TERM)
}

fn generated_like(x: &str) -> bool {
    x.strip_prefix('x')
        .is_some_and(|rest| !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()))
}

/// Prints `t` using `names` (outermost first) for the variables in scope.
/// Falls back to [`print_term`] when the names would be ambiguous.
pub fn print_term_named(t: &Term, names: &[String]) -> String {
    print_term_scoped(t, names, names.len())
}

/// Like [`print_term_named`], for a term under `depth - names.len()`
/// further binders.
pub fn print_term_scoped(t: &Term, names: &[String], depth: usize) -> String {
    let mut seen = std::collections::HashSet::new();
    let usable = names.len() <= depth
        && names
            .iter()
            .all(|x| !generated_like(x) && !is_reserved(x) && x != "_" && seen.insert(x.as_str()));
    if !usable {
        return print_term(t, depth);
    }
    let mut p = Printer {
        names: names.to_vec(),
    };
    while p.names.len() < depth {
        let x = p.fresh();
        p.names.push(x);
    }
    p.go(t, TERM)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::mk_var;

    #[test]
    fn examples() {
        assert_eq!(print_term(&Term::lam(Term::Q), 0), "\\x0. x0");
        assert_eq!(
            print_term(&Term::fun(Term::Nat, Term::sub(Term::Nat, Subst::P)), 0),
            "Nat -> Nat"
        );
        assert_eq!(
            print_term(&Term::sing(Term::Zero, Term::Nat), 0),
            "{zero : Nat}"
        );
    }

    #[test]
    fn dependent_forms() {
        let t = Term::fun(Term::Nat, Term::sing(Term::Q, Term::Nat));
        assert_eq!(print_term(&t, 0), "(x0 : Nat) -> {x0 : Nat}");
        let s = Term::sigma(Term::Nat, Term::Nat);
        assert_eq!(print_term(&s, 1), "Sig (x1 : Nat). Nat");
    }

    #[test]
    fn application_parenthesization() {
        let t = Term::app(mk_var(1), Term::app(Term::Q, Term::suc(Term::Q)));
        assert_eq!(print_term(&t, 2), "x0 (x1 (suc x1))");
        assert_eq!(print_term(&Term::numeral(3), 0), "3");
        assert_eq!(
            print_term(&Term::fst(Term::app(Term::Q, Term::Zero)), 1),
            "fst (x0 zero)"
        );
    }

    #[test]
    fn eliminators() {
        let rec = Term::natrec(
            Term::Nat,
            Term::Zero,
            Term::lam(Term::lam(Term::suc(Term::Q))),
            Term::Q,
        );
        assert_eq!(
            print_term(&rec, 1),
            "natrec [x1. Nat] zero (\\x1 x2. suc x2) x0"
        );
        let case = Term::case(2, Term::Nat, vec![Term::Zero, Term::numeral(1)], Term::Q).unwrap();
        assert_eq!(print_term(&case, 1), "case{2} [x1. Nat] (zero | 1) x0");
        let w = Term::where_(Term::Nat, Term::Zero, Term::Q);
        assert_eq!(print_term(&w, 1), "where [Nat] ([x1] = x0) zero");
    }

    #[test]
    fn named_printing() {
        let names = vec!["A".to_string(), "a".to_string()];
        assert_eq!(print_term_named(&mk_var(1), &names), "A");
        assert_eq!(print_term_named(&Term::lam(mk_var(1)), &names), "\\x2. a");
        let clash = vec!["x1".to_string(), "a".to_string()];
        assert_eq!(print_term_named(&mk_var(1), &clash), "x0");
        let dup = vec!["a".to_string(), "a".to_string()];
        assert_eq!(print_term_named(&mk_var(1), &dup), "x0");
    }
}
