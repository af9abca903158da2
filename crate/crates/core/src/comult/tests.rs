use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::partitions::Partition;
use crate::polyring::rat;
use crate::schur;

fn poly(s: &str) -> Poly {
    Poly::parse(s).unwrap()
}

#[test]
fn power_sum_examples() {
    assert_eq!(shifted_power_sum(1, 3, &YSpec::Symbolic).unwrap(), poly("x1 + x2 + x3"));
    assert_eq!(shifted_power_sum(2, 1, &YSpec::Symbolic).unwrap(), poly("x1^2 + 2*x1*y[-1]"));
    assert_eq!(shifted_power_sum(2, 2, &YSpec::Zero).unwrap(), poly("x1^2 + x2^2"));
    assert!(shifted_power_sum(0, 2, &YSpec::Zero).is_err());
}

#[test]
fn power_sum_vanishes_at_origin() {
    for k in 1..=4 {
        let p = shifted_power_sum(k, 3, &YSpec::Symbolic).unwrap();
        assert!(p.terms().all(|(m, _)| m.x_degree() > 0));
    }
}

#[test]
fn single_box_is_first_power_sum() {
    for n in 1..=6 {
        let s = schur::shifted_double_schur(&Partition::parse("1").unwrap(), n, &YSpec::Symbolic).unwrap();
        assert_eq!(s, shifted_power_sum(1, n, &YSpec::Symbolic).unwrap(), "n={n}");
    }
}

#[test]
fn pullback_examples() {
    let (e, o) = rho_pullback_power_sum(1, 2).unwrap();
    assert_eq!(e, poly("x2 - u[-2]"));
    assert_eq!(o, poly("x1 - u[-1]"));
    let (e, o) = rho_pullback_power_sum(1, 4).unwrap();
    assert_eq!(e, poly("x2 - u[-2] + x4 - u[-4]"));
    assert_eq!(o, poly("x1 - u[-1] + x3 - u[-3]"));
    for k in 1..=3 {
        let (e, o) = rho_pullback_power_sum(k, 5).unwrap();
        let full: Poly = (1..=5).fold(Poly::zero(), |acc, i| {
            &acc + &(&Poly::x(i).pow(k as u32) - &Poly::u_seq(-(i as i64)).pow(k as u32))
        });
        assert_eq!(&e + &o, full);
    }
}

#[test]
fn relabel_examples() {
    let t = relabel_even_odd(&poly("x2"), &Poly::zero()).unwrap();
    assert_eq!(t, TensorElement::from_pair(&poly("x1"), &Poly::one()));
    let t = relabel_even_odd(&Poly::zero(), &poly("x1")).unwrap();
    assert_eq!(t, TensorElement::from_pair(&Poly::one(), &poly("x1")));
    let t = relabel_even_odd(&poly("x2 - u[-2]"), &poly("x1 - u[-1]")).unwrap();
    let p1 = poly("x1 - u[-1]");
    let expected = &TensorElement::from_pair(&p1, &Poly::one()) + &TensorElement::from_pair(&Poly::one(), &p1);
    assert_eq!(t, expected);
    assert!(matches!(
        relabel_even_odd(&poly("x3"), &Poly::zero()),
        Err(Error::ParityViolation(_))
    ));
    assert!(matches!(
        relabel_even_odd(&Poly::zero(), &poly("u[2]")),
        Err(Error::ParityViolation(_))
    ));
}

#[test]
fn primitivity_examples() {
    assert!(verify_primitivity(1, 4).unwrap().pass);
    assert!(verify_primitivity(2, 6).unwrap().pass);
    let r = verify_primitivity(3, 2).unwrap();
    assert!(r.pass);
    assert_eq!((r.left_rank, r.right_rank), (1, 1));
    assert!(r.truncation_note().contains("right factor at 1 variable"));
}

#[test]
fn primitivity_detects_wrong_relabeling() {
    // relabeling odd x-indices onto x_k instead of x_{k+1} breaks the identity
    let (even, odd) = rho_pullback_power_sum(1, 4).unwrap();
    let bad = odd
        .map_vars(|v| match v {
            Var::X(i) => Ok(Some(Poly::x(i / 2 + 2))),
            Var::USeq(j) => Ok(Some(Poly::u_seq(j.div_euclid(2)))),
            _ => Ok(None),
        })
        .unwrap();
    let lhs = &TensorElement::from_pair(&psi_even(&even).unwrap(), &Poly::one())
        + &TensorElement::from_pair(&Poly::one(), &bad);
    let good = relabel_even_odd(&even, &odd).unwrap();
    assert_ne!(lhs, good);
}

#[test]
fn coproduct_examples() {
    let d = coproduct_power_polynomial(&PowerPoly::parse("p1").unwrap());
    assert_eq!(d.to_string(), "p1 ⊗ 1 + 1 ⊗ p1");
    let d = coproduct_power_polynomial(&PowerPoly::parse("p1^2").unwrap());
    assert_eq!(d.to_string(), "p1^2 ⊗ 1 + 2*(p1 ⊗ p1) + 1 ⊗ p1^2");
    let d = coproduct_power_polynomial(&PowerPoly::parse("1").unwrap());
    assert_eq!(d, TensorElement::one());
    assert!(PowerPoly::parse("q1").is_err());
    assert!(PowerPoly::parse("p0").is_err());
}

fn power_poly() -> impl Strategy<Value = PowerPoly> {
    let term = (-3i64..=3, prop::collection::vec(0u32..=2, 0..=3));
    prop::collection::vec(term, 0..4).prop_map(|ts| {
        let mut p = PowerPoly::zero();
        for (c, e) in ts {
            let mut m = PowerMonomial::unit();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    m = m.times(&PowerMonomial::generator(i + 1));
                }
            }
            p.add_term(m, rat(c));
        }
        p
    })
}

proptest! {
    #[test]
    fn coproduct_is_multiplicative(f in power_poly(), g in power_poly()) {
        let lhs = coproduct_power_polynomial(&(&f * &g));
        let rhs = &coproduct_power_polynomial(&f) * &coproduct_power_polynomial(&g);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_additive(f in power_poly(), g in power_poly()) {
        let lhs = coproduct_power_polynomial(&(&f + &g));
        let rhs = &coproduct_power_polynomial(&f) + &coproduct_power_polynomial(&g);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_recovers_input(f in power_poly()) {
        let d = coproduct_power_polynomial(&f);
        prop_assert_eq!(apply_counit(&d, Side::Left), f.clone());
        prop_assert_eq!(apply_counit(&d, Side::Right), f);
    }

    #[test]
    fn power_poly_display_parses_back(f in power_poly()) {
        prop_assert_eq!(PowerPoly::parse(&f.to_string()).unwrap(), f);
    }
}

#[test]
fn tensor_scale_and_sub() {
    let a = TensorElement::from_pair(&poly("x1 + 1"), &poly("x2"));
    let twice = a.scale(&BigRational::from_integer(2.into()));
    assert_eq!(&twice - &a, a);
    assert!((&a - &a).is_zero());
}
