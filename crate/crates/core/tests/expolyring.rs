mod common;

use common::{field_for, lv, monomial, poly};
use expoweyl_core::expolyring::{ExpoMonomial, Ring, Variant};
use expoweyl_core::lattice::LatticeBasis;
use expoweyl_core::weylalg::QMode;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn constant_ring() -> Ring {
    let f = field_for(QMode::Classical, 2);
    let basis = LatticeBasis::new(vec![f.one(), f.symbol("√2").unwrap()]).unwrap();
    Ring::new(basis, lv(&[2, 0]), Variant::Constant).unwrap()
}

fn dynamic_ring() -> Ring {
    let f = field_for(QMode::Classical, 1);
    let basis = LatticeBasis::new(vec![f.one()]).unwrap();
    Ring::new(basis, lv(&[1]), Variant::Dynamic { t_symbol: "t".into() }).unwrap()
}

#[test]
fn derivation_on_generators() {
    let r = constant_ring();
    let f = r.field();
    let s2 = f.symbol("√2").unwrap();
    // δ(x^{(0,1)}) = √2 x^{(0,1) - (1,0)}
    let x = r.x_pow(&lv(&[0, 1])).unwrap();
    assert_eq!(x.delta().unwrap(), r.term(ExpoMonomial { y_pow: 0, e_part: lv(&[0, 0]), x_part: lv(&[-1, 1]) }, s2.clone()));
    // δ(e^{(1,1)x}) = (1 + √2) e^{(1,1)x}
    let e = r.exp(&lv(&[1, 1])).unwrap();
    assert_eq!(e.delta().unwrap(), e.scale(&(&f.one() + &s2)));
    // δ(y) = 2 τ x^{(1,0)} y with p = (2,0)
    let tau = f.symbol("tau").unwrap();
    let expected = r.term(ExpoMonomial { y_pow: 1, e_part: lv(&[0, 0]), x_part: lv(&[1, 0]) }, &f.int(2) * &tau);
    assert_eq!(r.y_pow(1).delta().unwrap(), expected);
}

#[test]
fn dynamic_variant_derivative_of_y() {
    let r = dynamic_ring();
    let f = r.field();
    let t = f.symbol("t").unwrap();
    assert_eq!(r.e_len(), 2);
    // δ(y) = (1 + t x) e^{tx} y for p = 1
    let m = |x: i64| ExpoMonomial { y_pow: 1, e_part: lv(&[0, 1]), x_part: lv(&[x]) };
    let expected = &r.monomial(m(0)) + &r.term(m(1), t);
    assert_eq!(r.y_pow(1).delta().unwrap(), expected);
}

#[test]
fn units_are_monomials() {
    let r = constant_ring();
    let f = r.field();
    assert!(r.exp(&lv(&[3, -1])).unwrap().is_unit());
    assert!(r.y_pow(-2).scale(&f.int(5)).is_unit());
    assert!(!(&r.one() + &r.y_pow(1)).is_unit());
    assert!(!r.zero().is_unit());
    let y = r.y_pow(1);
    assert!((&y * &r.y_pow(-1)).is_one());
}

#[test]
fn mismatched_rings_are_rejected() {
    let a = constant_ring();
    let b = dynamic_ring();
    assert!(a.one().try_add(&b.one()).is_err());
    assert!(a.one().try_mul(&b.one()).is_err());
    assert!(a.x_pow(&lv(&[1])).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn leibniz_rule(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for r in [constant_ring(), dynamic_ring()] {
            let f = poly(&mut rng, &r, 3, 2, true);
            let g = poly(&mut rng, &r, 3, 2, true);
            let lhs = (&f * &g).delta().unwrap();
            let rhs = &(&f.delta().unwrap() * &g) + &(&f * &g.delta().unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn commutative_ring_axioms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = constant_ring();
        let a = poly(&mut rng, &r, 3, 2, true);
        let b = poly(&mut rng, &r, 3, 2, true);
        let c = poly(&mut rng, &r, 2, 2, true);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn monomials_are_invertible(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = dynamic_ring();
        let m = monomial(&mut rng, &r, 3, true);
        prop_assert!(m.checked_mul(&m.inverse()).unwrap().is_one());
        prop_assert_eq!(ExpoMonomial::from_exponents(&m.to_exponents(), r.e_len()), m.clone());
        prop_assert!((&r.monomial(m.clone()) * &r.monomial(m.inverse())).is_one());
    }
}
