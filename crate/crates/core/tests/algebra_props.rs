//! Property tests for the scalar algebra: ring axioms, conjugations,
//! idempotent identities, inversion against the null cone, roots, moduli,
//! and the projection homomorphism.

use bicomplex::{Bicomplex, Complex, Component, Conjugation, Error, NumberClass};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Bicomplex> {
    let c = -10.0..10.0f64;
    (c.clone(), c.clone(), c.clone(), c)
        .prop_map(|(a, b, x, y)| Bicomplex::new(Complex::new(a, b), Complex::new(x, y)))
}

/// Scalars with one idempotent component forced to zero (plus the zero
/// scalar itself occasionally).
fn null_cone_scalar() -> impl Strategy<Value = Bicomplex> {
    let c = -10.0..10.0f64;
    ((c.clone(), c), any::<bool>()).prop_map(|((a, b), first)| {
        let z = Complex::new(a, b);
        if first {
            Bicomplex::new(z, Complex::ZERO)
        } else {
            Bicomplex::new(Complex::ZERO, z)
        }
    })
}

fn approx(a: Bicomplex, b: Bicomplex, tol: f64) -> bool {
    (a - b).modulus() <= tol * (1.0 + a.modulus() + b.modulus())
}

proptest! {
    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert!(approx((a + b) + c, a + (b + c), 1e-12));
        prop_assert!(approx((a * b) * c, a * (b * c), 1e-12));
        prop_assert!(approx(a + b, b + a, 1e-12));
        prop_assert!(approx(a * b, b * a, 1e-12));
        prop_assert!(approx(a * (b + c), a * b + a * c, 1e-12));
        prop_assert!(approx(a + Bicomplex::ZERO, a, 0.0));
        prop_assert!(approx(a * Bicomplex::ONE, a, 0.0));
        prop_assert!(approx(a + (-a), Bicomplex::ZERO, 0.0));
    }

    #[test]
    fn conjugations_are_involutions_and_compose(w in scalar()) {
        for kind in [Conjugation::Dag1, Conjugation::Dag2, Conjugation::Dag3] {
            prop_assert_eq!(w.conj(kind).conj(kind), w);
        }
        // †₂ ∘ †₃ = †₁, exactly
        prop_assert_eq!(w.conj(Conjugation::Dag3).conj(Conjugation::Dag2), w.conj(Conjugation::Dag1));
    }

    #[test]
    fn dag3_product_lands_in_d_plus(w in scalar()) {
        let p = w * w.dag3();
        prop_assert!(p.in_d_plus(p.default_tol()));
        let class = p.classify(p.default_tol());
        prop_assert!(matches!(
            class,
            NumberClass::HyperbolicPositive | NumberClass::Zero | NumberClass::NullCone
        ));
    }

    #[test]
    fn inverse_succeeds_exactly_off_the_null_cone(w in scalar()) {
        let tol = w.default_tol();
        match w.try_inverse() {
            Ok(inv) => {
                prop_assert!(!w.in_null_cone(tol) && !w.is_zero());
                prop_assert!(approx(w * inv, Bicomplex::ONE, 1e-10));
            }
            Err(Error::ZeroDivision) => prop_assert!(w.is_zero()),
            Err(Error::NullCone { .. }) => prop_assert!(w.in_null_cone(tol)),
            Err(e) => prop_assert!(false, "unexpected error {e:?}"),
        }
    }

    #[test]
    fn constructed_null_cone_members_never_invert(w in null_cone_scalar()) {
        prop_assert!(w.try_inverse().is_err());
        if !w.is_zero() {
            prop_assert!(w.in_null_cone(w.default_tol()));
        }
    }

    #[test]
    fn null_cone_at_zero_tolerance_is_the_zero_divisor_set(
        w in prop_oneof![scalar(), null_cone_scalar()]
    ) {
        // z1² + z2² = ẑ1·ẑ2, so membership at tol = 0 is exactly a vanishing
        // component product
        let (z1, z2) = w.to_standard();
        let quadric_zero = (w.c1 * w.c2).is_zero();
        prop_assert_eq!(w.in_null_cone(0.0), !w.is_zero() && quadric_zero);
        if quadric_zero && !w.is_zero() {
            let q = z1 * z1 + z2 * z2;
            prop_assert!(q.abs() <= 1e-12 * (1.0 + w.modulus() * w.modulus()));
        }
    }

    #[test]
    fn nth_roots_power_back(w in scalar(), n in 1u32..=4) {
        for b1 in 0..n {
            for b2 in 0..n {
                let r = w.nth_root(n, b1, b2);
                let mut p = Bicomplex::ONE;
                for _ in 0..n {
                    p *= r;
                }
                prop_assert!(approx(p, w, 1e-9), "n={n} b=({b1},{b2})");
            }
        }
    }

    #[test]
    fn modulus_agrees_between_forms(w in scalar()) {
        let (z1, z2) = w.to_standard();
        let standard = (z1.norm_sqr() + z2.norm_sqr()).sqrt();
        prop_assert!((w.modulus() - standard).abs() <= 1e-12 * (1.0 + standard));
    }

    #[test]
    fn projection_is_a_ring_homomorphism(s in scalar(), t in scalar()) {
        for k in [Component::One, Component::Two] {
            prop_assert_eq!((s * t).project(k), s.project(k) * t.project(k));
            prop_assert_eq!((s + t).project(k), s.project(k) + t.project(k));
        }
    }

    #[test]
    fn idempotent_split_is_faithful(w in scalar()) {
        let rebuilt = Bicomplex::from_complex(w.c1) * Bicomplex::E1
            + Bicomplex::from_complex(w.c2) * Bicomplex::E2;
        prop_assert_eq!(rebuilt, w);
        // standard round trip within rounding
        let (z1, z2) = w.to_standard();
        prop_assert!(approx(Bicomplex::from_standard(z1, z2), w, 1e-15));
    }
}

#[test]
fn idempotent_identities_exact() {
    assert_eq!(Bicomplex::E1 * Bicomplex::E1, Bicomplex::E1);
    assert_eq!(Bicomplex::E2 * Bicomplex::E2, Bicomplex::E2);
    assert_eq!(Bicomplex::E1 + Bicomplex::E2, Bicomplex::ONE);
    assert_eq!(Bicomplex::E1 * Bicomplex::E2, Bicomplex::ZERO);
    assert_eq!(Bicomplex::E1.dag3(), Bicomplex::E1);
    assert_eq!(Bicomplex::E2.dag3(), Bicomplex::E2);
}
