//! Randomized invariants over the three-step family and the group chart.

use crate::families::{kodaira_data, metric_at_point, threestep_data};
use crate::geometry::{flatness_report, geodesic_closed_form, residual_coefficients};
use crate::lie::{DoubleGroup, GroupElement, LieAlgebra};
use crate::linalg::is_zero_vector;
use crate::rational::frac;
use crate::Rational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn point(len: usize) -> impl Strategy<Value = GroupElement> {
    prop::collection::vec(rational(), len).prop_map(|v| GroupElement::from_coords(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn threestep_is_valid_and_flat_iff_b_equals_c(a in rational(), b in rational(), c in rational()) {
        let data = threestep_data(&a, &b, &c).unwrap();
        prop_assert!(data.report().hypotheses_hold());
        prop_assert!(LieAlgebra::from_data(&data).jacobi_check().pass);
        let f = flatness_report(&data).unwrap();
        prop_assert_eq!(f.flat, b == c);
        prop_assert_eq!(f.step, if b == c { 2 } else { 3 });
    }

    #[test]
    fn group_law_is_associative_with_inverses(
        (a, b, c) in (rational(), rational(), rational()),
        p in point(8), q in point(8), r in point(8),
    ) {
        let data = threestep_data(&a, &b, &c).unwrap();
        let g = DoubleGroup::new(&data);
        prop_assert_eq!(g.multiply(&g.multiply(&p, &q), &r), g.multiply(&p, &g.multiply(&q, &r)));
        prop_assert_eq!(g.multiply(&p, &g.inverse(&p)), g.identity());
        prop_assert_eq!(g.multiply(&g.inverse(&p), &p), g.identity());
    }

    #[test]
    fn coordinate_metric_is_left_invariant(
        (a, b, c) in (rational(), rational(), rational()),
        p in point(8), q in point(8),
    ) {
        let data = threestep_data(&a, &b, &c).unwrap();
        let g = DoubleGroup::new(&data);
        let gq = metric_at_point(&data, &q).unwrap();
        prop_assert!(gq.is_symmetric());
        prop_assert_eq!(gq.signature(), (4, 4, 0));
        let jac = g.left_translation_jacobian(&p, &q);
        let gpq = metric_at_point(&data, &g.multiply(&p, &q)).unwrap();
        prop_assert_eq!(jac.transpose().mul(&gpq).mul(&jac), gq);
    }

    #[test]
    fn closed_form_geodesics_have_zero_residual(
        (a, b, c) in (rational(), rational(), rational()),
        a0 in prop::collection::vec(rational(), 4),
        b0 in prop::collection::vec(rational(), 4),
    ) {
        let data = threestep_data(&a, &b, &c).unwrap();
        let curve = geodesic_closed_form(&data, &a0, &b0).unwrap();
        for coeff in residual_coefficients(&data, &curve) {
            prop_assert!(is_zero_vector(&coeff));
        }
    }

    #[test]
    fn kodaira_group_inverse(p in point(16)) {
        let data = kodaira_data(2).unwrap();
        let g = DoubleGroup::new(&data);
        prop_assert_eq!(g.inverse(&g.inverse(&p)), p);
    }
}
