use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

use uhsl2::algebra::Irrep;
use uhsl2::halfint::HalfInt;
use uhsl2::report::Report;
use uhsl2::scalar::json::{decode_hpoly, decode_matrix, encode_hpoly, encode_matrix, MatrixJson, TermJson};
use uhsl2::scalar::{parse_hpoly, HPoly, PolyMatrix, RadScalar};
use uhsl2::tensor_ops::{adjoint, OpSpaceContext};

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn scalar() -> impl Strategy<Value = RadScalar> {
    prop::collection::vec((rational(), 1u64..=30), 0..4).prop_map(|terms| {
        terms.into_iter().fold(RadScalar::zero(), |acc, (q, n)| &acc + &RadScalar::rad_normalize(q, &BigUint::from(n)))
    })
}

fn poly() -> impl Strategy<Value = HPoly> {
    prop::collection::vec(scalar(), 0..4).prop_map(HPoly::from_coeffs)
}

fn small_poly() -> impl Strategy<Value = HPoly> {
    prop::collection::vec((-3i64..=3, prop::sample::select(vec![1u64, 2, 3, 6])), 0..3).prop_map(|c| {
        HPoly::from_coeffs(
            c.into_iter().map(|(v, n)| RadScalar::sqrt_int(n).scale(&BigRational::from_integer(v.into()))).collect(),
        )
    })
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(small_poly(), rows * cols)
        .prop_map(move |v| PolyMatrix::from_rows(v.chunks(cols).map(|c| c.to_vec()).collect()).unwrap())
}

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(64)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn normalize_is_idempotent(q in rational(), n in 0u64..500) {
        let once = RadScalar::rad_normalize(q, &BigUint::from(n));
        let twice = once.terms().iter().fold(RadScalar::zero(), |acc, (m, c)| {
            &acc + &RadScalar::rad_normalize(c.clone(), &BigUint::from(*m))
        });
        prop_assert_eq!(&twice, &once);
        for (m, c) in once.terms() {
            prop_assert_eq!(uhsl2::scalar::squarefree_split(&BigUint::from(*m)), (BigUint::from(1u8), *m));
            prop_assert!(*c != BigRational::from_integer(0.into()));
        }
    }

    #[test]
    fn scalar_ring_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn poly_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn eval_is_a_ring_homomorphism(p in poly(), q in poly(), v in rational()) {
        prop_assert_eq!((&p * &q).eval(&v), &p.eval(&v) * &q.eval(&v));
        prop_assert_eq!((&p + &q).eval(&v), &p.eval(&v) + &q.eval(&v));
        prop_assert_eq!(p.at_zero(), p.coeff(0));
    }

    #[test]
    fn kronecker_mixed_product(
        a in matrix(2, 2), c in matrix(2, 1),
        b in matrix(1, 2), d in matrix(2, 2),
    ) {
        let lhs = &a.kron(&b) * &c.kron(&d);
        let rhs = (&a * &c).kron(&(&b * &d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_form_round_trips(p in poly()) {
        prop_assert_eq!(parse_hpoly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn json_round_trips(p in poly(), m in matrix(2, 3)) {
        let s = serde_json::to_string(&encode_hpoly(&p)).unwrap();
        let terms: Vec<TermJson> = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(decode_hpoly(&terms).unwrap(), p);
        let s = serde_json::to_string(&encode_matrix(&m)).unwrap();
        let back: MatrixJson = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(decode_matrix(&back).unwrap(), m);
    }

    #[test]
    fn halfint_matches_rationals(a in -20i64..20, b in -20i64..20) {
        let (x, y) = (HalfInt::from_twice(a), HalfInt::from_twice(b));
        prop_assert_eq!((x + y).twice(), a + b);
        prop_assert_eq!((x - y).twice(), a - b);
        prop_assert_eq!(x < y, a < b);
        prop_assert_eq!(x.to_string().parse::<HalfInt>().unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn adjoint_action_is_a_representation(t in matrix(3, 2)) {
        let source = Arc::new(Irrep::new(HalfInt::HALF).unwrap().rep);
        let target = Arc::new(Irrep::new(HalfInt::ONE).unwrap().rep);
        let ctx = OpSpaceContext::new(source, target);
        let report = adjoint::verify_adjoint_is_representation(&ctx, &[("t".to_string(), t)]).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }
}

#[test]
fn weight_range_has_2j_plus_1_values() {
    for t in 0..12 {
        let j = HalfInt::from_twice(t);
        let w: Vec<_> = j.weights().collect();
        assert_eq!(w.len() as i64, t + 1);
        assert!(w.iter().all(|m| (m.twice() - t) % 2 == 0));
    }
}

#[test]
fn report_json_round_trips() {
    let report = uhsl2::coupling::verify_decomposition(HalfInt::ONE, HalfInt::HALF).unwrap();
    let s = serde_json::to_string(&report).unwrap();
    let back: Report = serde_json::from_str(&s).unwrap();
    assert_eq!(back, report);
}
