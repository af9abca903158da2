use std::collections::HashMap;

use proptest::prelude::*;

use super::*;

fn p(s: &str) -> Poly {
    Poly::parse(s).unwrap()
}

#[test]
fn add_examples() {
    assert!((&Poly::x(1) + &-Poly::x(1)).is_zero());
    let s = &(&Poly::x(1) - &Poly::y(1)) + &(&Poly::x(2) - &Poly::y(2));
    assert_eq!(s, p("x1 + x2 - y[1] - y[2]"));
    assert_eq!(&Poly::zero() + &s, s);
}

#[test]
fn mul_examples() {
    let a = &Poly::x(1) - &Poly::y(1);
    assert_eq!(&a * &Poly::one(), a);
    let b = &Poly::x(1) - &Poly::y(2);
    assert_eq!(&a * &b, p("x1^2 - (y[1] + y[2])*x1 + y[1]*y[2]"));
    assert!((&a * &Poly::zero()).is_zero());
}

#[test]
fn shift_examples() {
    assert_eq!(Poly::y(1).shift_y(1), Poly::y(0));
    assert_eq!(Poly::x(1).shift_y(5), Poly::x(1));
    assert_eq!(Poly::y(3).shift_y(-2), Poly::y(5));
}

#[test]
fn specialize_examples() {
    let two_u = Poly::u().scale(&rat(2));
    assert_eq!(Poly::y(2).specialize_y(&YSpec::Standard { d: 0 }).unwrap(), two_u);
    assert!(Poly::y(2).specialize_y(&YSpec::Zero).unwrap().is_zero());
    assert_eq!(
        Poly::y(2).specialize_y(&YSpec::Torus { shift: -3 }).unwrap(),
        Poly::u_seq(-1)
    );
    let aff = YSpec::Affine { a: rat(1), b: rat(3) };
    assert_eq!(p("y[2]*x1").specialize_y(&aff).unwrap(), p("5*x1"));
}

#[test]
fn circle_window_and_tail() {
    let seq = IntSeqWindow { lo: -1, values: vec![7, 8, 9], tail: None };
    let spec = YSpec::Circle { seq: seq.clone(), d: 1 };
    // y_0 -> n_1 u = 9u
    assert_eq!(Poly::y(0).specialize_y(&spec).unwrap(), Poly::u().scale(&rat(9)));
    assert_eq!(
        Poly::y(5).specialize_y(&spec),
        Err(Error::UnresolvedIndex(6))
    );
    let tailed = YSpec::Circle {
        seq: IntSeqWindow { tail: Some((2, 1)), ..seq },
        d: 1,
    };
    assert_eq!(Poly::y(5).specialize_y(&tailed).unwrap(), Poly::u().scale(&rat(13)));
}

#[test]
fn substitute_examples() {
    let mut a = HashMap::new();
    a.insert(Var::X(1), &Poly::x(1) + &Poly::y(-1));
    a.insert(Var::X(2), &Poly::x(2) + &Poly::y(-2));
    assert_eq!(p("x1 + x2").substitute(&a), p("x1 + x2 + y[-1] + y[-2]"));
    let zero = HashMap::from([(Var::X(1), Poly::zero())]);
    assert!(p("x1^2").substitute(&zero).is_zero());
    let seven = HashMap::from([(Var::X(1), Poly::int(7))]);
    assert_eq!(Poly::y(1).substitute(&seven), Poly::y(1));
    // simultaneous, not sequential
    let swap = HashMap::from([(Var::X(1), Poly::x(2)), (Var::X(2), Poly::x(1))]);
    assert_eq!(p("x1^2*x2").substitute(&swap), p("x1*x2^2"));
}

#[test]
fn canonical_string_examples() {
    assert_eq!(Poly::zero().canonical_string(), "0");
    assert_eq!((&Poly::x(2) + &Poly::x(1)).canonical_string(), "x1 + x2");
    let half = BigRational::new(1.into(), 2.into());
    assert_eq!(Poly::y(-1).scale(&half).canonical_string(), "1/2*y[-1]");
    assert_eq!(p("x1 + x2 - y[1] - y[2]").canonical_string(), "-y[1] - y[2] + x1 + x2");
    assert_eq!(p("-3 + u^2*x1 - 2/3*u[4]").canonical_string(), "u^2*x1 - 2/3*u[4] - 3");
    assert_eq!(p("u*y[-2]^2*x3").latex_string(), "u y_{-2}^{2} x_{3}");
}

#[test]
fn json_terms() {
    let q = p("2*y[-1]*x1^2 - 1/2");
    let js = serde_json::to_string(&q.to_json_terms()).unwrap();
    assert_eq!(
        js,
        r#"[{"coeff":"2","monomial":[["y",-1,1],["x",1,2]]},{"coeff":"-1/2","monomial":[]}]"#
    );
    let u = serde_json::to_string(&Poly::u().to_json_terms()).unwrap();
    assert_eq!(u, r#"[{"coeff":"1","monomial":[["u",null,1]]}]"#);
}

#[test]
fn exact_division() {
    let a = p("x1 - x2");
    let b = p("x1^2 + y[3]*x1 - 7*u");
    assert_eq!((&a * &b).div_exact(&a).unwrap(), b);
    assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    let err = p("x1^2 + 1").div_exact(&a).unwrap_err();
    assert!(matches!(err, Error::Inconsistency(_)));
}

#[test]
fn yspec_grammar() {
    for s in [
        "symbolic",
        "zero",
        "affine:a=1,b=-1/2",
        "standard:d=-3",
        "torus:shift=2",
        "circle:d=0;tail=1,0",
        "circle:d=2,window=-1:4,5,6",
        "circle:d=1,window=0:3,1;tail=2,-1",
    ] {
        let spec = YSpec::parse(s).unwrap();
        assert_eq!(spec.to_string(), s);
        let js = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<YSpec>(&js).unwrap(), spec);
    }
    for bad in ["", "standard", "standard:d=x", "circle:d=0", "affine:a=1", "weird"] {
        assert!(YSpec::parse(bad).is_err(), "{bad}");
    }
}

#[test]
fn torus_presets_follow_shift_operator() {
    // y = τ^{-d} u means y_j = u_{j+d}
    let d = 2;
    let y = Poly::y(1).specialize_y(&YSpec::infinite_torus(d)).unwrap();
    assert_eq!(y, Poly::u_seq(3));
    // y = τ^{l+1} u means y_j = u_{j-l-1}
    let y = Poly::y(1).specialize_y(&YSpec::finite_rank_torus(2)).unwrap();
    assert_eq!(y, Poly::u_seq(-2));
}

fn arb_var() -> impl Strategy<Value = Var> {
    prop_oneof![
        Just(Var::U),
        (-2i64..=2).prop_map(Var::USeq),
        (-3i64..=3).prop_map(Var::Y),
        (1u32..=3).prop_map(Var::X),
    ]
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (-4i64..=4, 1i64..=3, prop::collection::vec((arb_var(), 1u32..=2), 0..3)),
        0..5,
    )
    .prop_map(|ts| {
        Poly::from_terms(ts.into_iter().map(|(n, d, vs)| {
            (Monomial::from_pairs(vs), BigRational::new(n.into(), d.into()))
        }))
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn shift_is_a_homomorphism(a in arb_poly(), b in arb_poly(), k in -3i64..=3, m in -3i64..=3) {
        prop_assert_eq!(a.shift_y(0), a.clone());
        prop_assert_eq!((&a * &b).shift_y(k), &a.shift_y(k) * &b.shift_y(k));
        prop_assert_eq!(a.shift_y(k).shift_y(m), a.shift_y(k + m));
    }

    #[test]
    fn torus_compatibility(a in arb_poly(), k in -3i64..=3, m in -3i64..=3) {
        let lhs = a.shift_y(k).specialize_y(&YSpec::Torus { shift: m }).unwrap();
        let rhs = a.specialize_y(&YSpec::Torus { shift: m - k }).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_string_round_trips(a in arb_poly(), b in arb_poly()) {
        let s = a.canonical_string();
        prop_assert_eq!(Poly::parse(&s).unwrap(), a.clone());
        prop_assert_eq!(s == b.canonical_string(), a == b);
    }

    #[test]
    fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }
}
