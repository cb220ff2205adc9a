use proptest::prelude::*;
use singtt::surface::{elaborate, parse_term, print_term, ElabOptions};
use singtt::syntax::{is_normal, mk_var};
use singtt::{Checker, Ctx, Machine, Subst, Term, Value};

/// Closed arithmetic over `Nat`, paired with its value.
fn arith() -> impl Strategy<Value = (Term, u64)> {
    let leaf = (0u64..4).prop_map(|n| (Term::numeral(n as usize), n));
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|(t, n)| (Term::suc(t), n + 1)),
            (inner.clone(), inner.clone()).prop_map(|((a, m), (b, n))| (add(a, b), m + n)),
            (inner.clone(), inner.clone())
                .prop_map(|((a, m), (b, _))| (Term::fst(Term::pair(a, b)), m)),
            inner
                .clone()
                .prop_map(|(a, m)| (Term::app(Term::lam(Term::suc(Term::Q)), a), m + 1)),
            inner.prop_map(|(a, m)| (Term::sub(Term::suc(Term::Q), Subst::single(a)), m + 1)),
        ]
    })
}

fn add(a: Term, b: Term) -> Term {
    let motive = Term::sub(Term::Nat, Subst::P);
    let step = Term::lam(Term::lam(Term::suc(Term::Q)));
    Term::natrec(motive, a, step, b)
}

/// Closed normal types.
fn normal_type() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Nat),
        Just(Term::U),
        (0usize..4).prop_map(Term::Enum),
        (0usize..5).prop_map(|n| Term::sing(Term::numeral(n), Term::Nat)),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::fun(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::sigma(a, b)),
            inner.clone().prop_map(Term::prf),
            inner
                .prop_map(|a| Term::fun(Term::Nat, Term::fun(a, Term::sing(mk_var(1), Term::Nat)))),
        ]
    })
}

proptest! {
    #[test]
    fn arithmetic_normalizes_to_its_value((t, n) in arith()) {
        let c = Checker::default();
        let nf = c.nbe_term(&Ctx::new(), &Term::Nat, &t).unwrap();
        prop_assert_eq!(nf, Term::numeral(n as usize));
    }

    #[test]
    fn nbe_term_is_idempotent((t, _) in arith()) {
        let c = Checker::default();
        let g = Ctx::from_outermost([Term::Nat]);
        let open = add(Term::Q, Term::sub(t, Subst::P));
        let nf = c.nbe_term(&g, &Term::Nat, &open).unwrap();
        prop_assert!(is_normal(&nf));
        prop_assert_eq!(c.nbe_term(&g, &Term::Nat, &nf).unwrap(), nf);
    }

    #[test]
    fn normal_types_are_fixed_points(a in normal_type()) {
        let c = Checker::default();
        prop_assert!(c.check_type(&Ctx::new(), &a).is_ok());
        prop_assert_eq!(c.nbe_type(&Ctx::new(), &a).unwrap(), a);
    }

    #[test]
    fn printed_types_parse_back(a in normal_type()) {
        let text = print_term(&a, 0);
        let parsed = parse_term(&text).unwrap();
        prop_assert_eq!(elaborate(&parsed, &[], ElabOptions::default()).unwrap(), a);
    }

    #[test]
    fn proofs_are_equal(a in normal_type(), m in 0usize..6, n in 0usize..6) {
        let c = Checker::default();
        let g = Ctx::from_outermost([Term::prf(a.clone()), Term::prf(Term::sub(a.clone(), Subst::P))]);
        let ty = Term::prf(Term::sub(a, singtt::syntax::subs_chain(1)));
        prop_assert!(c.eq_term(&g, &ty, &mk_var(1), &Term::Q).unwrap());
        let nat = Term::prf(Term::Nat);
        let boxes = (Term::boxed(Term::numeral(m)), Term::boxed(Term::numeral(n)));
        prop_assert!(c.eq_term(&Ctx::new(), &nat, &boxes.0, &boxes.1).unwrap());
    }

    #[test]
    fn readback_converts_levels(j in 1usize..64, i in 0usize..64) {
        prop_assume!(i < j);
        let m = Machine::default();
        prop_assert_eq!(m.readback(j, &Value::VarV(i)).unwrap(), mk_var(j - i - 1));
        prop_assert_eq!(m.clamp_count(), 0);
    }

    #[test]
    fn case_selects_its_branch(n in 1usize..8, pick in 0usize..8) {
        let i = pick % n;
        let c = Checker::default();
        let branches: Vec<Term> = (0..n).map(Term::numeral).collect();
        let t = Term::case(n, Term::Nat, branches, Term::Const(n, i)).unwrap();
        prop_assert_eq!(c.nbe_term(&Ctx::new(), &Term::Nat, &t).unwrap(), Term::numeral(i));
    }

    #[test]
    fn distinct_constants_differ(n in 2usize..8, i in 0usize..8, k in 0usize..8) {
        let (i, k) = (i % n, k % n);
        let c = Checker::default();
        let eq = c.eq_term(&Ctx::new(), &Term::Enum(n), &Term::Const(n, i), &Term::Const(n, k)).unwrap();
        prop_assert_eq!(eq, i == k);
    }
}
