//! The coefficient field Q(q) and the ring Z[q, q^-1] inside it.

mod intpoly;
mod laurent;
pub mod modp;
mod rational;

pub use intpoly::IntPoly;
pub use laurent::Laurent;
pub use rational::QRational;

/// `q^k` as an element of Q(q).
pub fn q_pow(k: i64) -> QRational {
    QRational::q_pow(k)
}

#[cfg(test)]
mod props {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-4i64..=4, 0..6).prop_map(|cs| IntPoly::from_i64s(&cs))
    }

    fn qrat() -> impl Strategy<Value = QRational> {
        (small_poly(), small_poly()).prop_filter_map("zero denominator", |(n, d)| {
            if d.is_zero() {
                None
            } else {
                Some(QRational::new(n, d))
            }
        })
    }

    fn laurent() -> impl Strategy<Value = Laurent> {
        (-3i32..=3, prop::collection::vec(-5i128..=5, 0..5))
            .prop_map(|(low, cs)| Laurent::from_coeffs(low, cs))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(a in qrat(), b in qrat(), c in qrat()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn canonical_form_is_stable(a in qrat()) {
            let again = QRational::new(a.numer().clone(), a.denom().clone());
            prop_assert_eq!(&again, &a);
            prop_assert!(a.denom().leading().unwrap() > &BigInt::from(0));
            prop_assert_eq!(QRational::from_json(&a.to_json()).unwrap(), a);
        }

        #[test]
        fn heuristic_gcd_matches_prs(a in small_poly(), b in small_poly(), c in small_poly()) {
            let x = &a * &c;
            let y = &b * &c;
            let fast = IntPoly::gcd(&x, &y);
            let slow = IntPoly::gcd_reference(&x, &y);
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in qrat(), b in qrat(), x in 2i64..9) {
            let x = BigRational::from_integer(x.into());
            if let (Ok(va), Ok(vb)) = (a.eval_at(&x), b.eval_at(&x)) {
                prop_assert_eq!((&a * &b).eval_at(&x).unwrap(), &va * &vb);
                prop_assert_eq!((&a + &b).eval_at(&x).unwrap(), va + vb);
            }
        }

        #[test]
        fn laurent_embeds_in_field(a in laurent(), b in laurent()) {
            prop_assert_eq!((&a * &b).to_qrational(), a.to_qrational() * b.to_qrational());
            prop_assert_eq!((&a + &b).to_qrational(), a.to_qrational() + b.to_qrational());
            prop_assert_eq!(a.bar().bar(), a);
        }

        #[test]
        fn powers_of_q(j in -20i64..20, k in -20i64..20) {
            prop_assert!((q_pow(k) * q_pow(-k)).is_one());
            prop_assert_eq!(q_pow(j) * q_pow(k), q_pow(j + k));
        }
    }
}
