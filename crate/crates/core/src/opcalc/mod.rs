//! Exact linear operators on the polynomial space, stored by their action
//! on the monomial basis.

mod banded;
mod operators;
mod report;

pub use banded::BandedOp;
pub use operators::{
    dunkl_bracket, intertwiner_sigma, l0_diagonal, l0_subdiagonal, make_dunkl, make_intertwiner, make_l0, make_s0,
    make_theta,
};
pub use report::{op_equal, OpIdentityReport};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::Poly;
    use crate::scalar::{int, rat, Rational};

    type Op = BandedOp<Rational>;
    type P = Poly<Rational>;

    #[test]
    fn apply_examples() {
        let n = 8;
        assert_eq!(Op::reflection(n).apply(&P::from_ints(&[-1, 1])).unwrap(), P::from_ints(&[-1, -1]));
        assert_eq!(Op::derivative(n).apply(&P::monomial(3, int(1))).unwrap(), P::monomial(2, int(3)));
        assert_eq!(Op::mult_x(n).apply(&P::one()).unwrap(), P::x());
    }

    #[test]
    fn apply_beyond_safe_degree_fails() {
        let d = Op::derivative(3);
        assert!(d.apply(&P::monomial(3, int(1))).is_ok());
        assert!(matches!(
            d.apply(&P::monomial(4, int(1))),
            Err(crate::Error::Truncation { degree: 4, safe_degree: 3 })
        ));
    }

    #[test]
    fn heisenberg_and_involution() {
        let n = 12;
        let (d, x) = (Op::derivative(n), Op::mult_x(n));
        let rep = op_equal(&d.commutator(&x), &Op::identity(n));
        assert!(rep.holds);
        // x raises by one, so D∘x is only exact up to n-1
        assert_eq!(rep.safe_degree, n - 1);

        let r = Op::reflection(n);
        assert!(op_equal(&r.compose(&r), &Op::identity(n)).holds);
    }

    #[test]
    fn y_and_z_anticommute() {
        let n = 10;
        let y = Op::mult_x(n);
        let z = Op::multiply_by(&P::from_ints(&[-1, 1]), n).compose(&Op::reflection(n));
        assert!(y.anticommutator(&z).is_zero());
    }

    #[test]
    fn intertwining_property() {
        for mu in [rat(1, 2), int(1), rat(5, 2)] {
            let n = 30;
            let v = make_intertwiner(&mu, n).unwrap();
            let lhs = make_dunkl(&mu, n).compose(&v);
            let rhs = v.compose(&Op::derivative(n));
            let rep = op_equal(&lhs, &rhs);
            assert!(rep.holds, "mu = {mu}");
            assert_eq!(rep.safe_degree, n);
        }
    }

    #[test]
    fn l0_preserves_degree() {
        let l0 = make_l0(&rat(1, 2), &rat(3, 2), 25);
        for n in 0..=25 {
            let d = l0.column(n).unwrap().degree();
            assert!(d <= crate::numcore::Degree::Finite(n));
        }
    }

    #[test]
    fn l0_s0_relations_at_alpha_zero() {
        for a in [rat(3, 2), rat(5, 2)] {
            let n = 24;
            let beta = int(2) * &a + int(1);
            let l0 = make_l0(&int(0), &beta, n);
            let s0 = make_s0(&a, n);
            assert!(l0.commutator(&s0).is_zero());
            let four = int(4);
            let lhs = l0.compose(&l0).sub(&l0.scale(&(&four * (int(1) + &a))));
            assert!(op_equal(&lhs, &s0.scale(&-four)).holds);
        }
    }

    #[test]
    fn failing_identity_reports_first_monomial() {
        let n = 6;
        let rep = op_equal(&Op::derivative(n), &make_dunkl(&rat(1, 2), n));
        assert!(!rep.holds);
        assert_eq!(rep.first_failure, Some(1));
    }

    #[test]
    fn scalar_identity_detection() {
        let op = Op::identity(5).scale(&rat(-3, 2));
        assert_eq!(op.as_scalar_identity(), Some(rat(-3, 2)));
        assert_eq!(Op::reflection(5).as_scalar_identity(), None);
        assert_eq!(Op::zero(5).as_scalar_identity(), Some(int(0)));
    }

    #[test]
    fn dump_format() {
        let d = Op::derivative(2);
        assert_eq!(d.dump_json(), r#"{"0":[],"1":[[0,"1"]],"2":[[1,"2"]]}"#);
        let th = make_theta(&rat(1, 2), &int(1), 1);
        assert_eq!(th.dump_json(), r#"{"0":[[0,"-3/2"],[1,"3/2"]],"1":[[0,"-3/2"],[1,"-1/2"],[2,"2"]]}"#);
    }
}
