use num_traits::One;
use ubdkit::ellcurve::function_with_divisor;
use ubdkit::exactnum::rational::int;
use ubdkit::x011::{curve, differential, expand_on_curve, expand_xy, WIDTH};
use ubdkit::LaurentSeries;

#[test]
fn relations_hold_to_truncation() {
    let t = 300;
    let xy = expand_xy(t).unwrap();
    let (x, y) = (&xy.x, &xy.y);
    let lhs = &(y * y) + y;
    let rhs = &(&(&(x * x) * x) - &(x * x)) - &(&x.scale(&int(10)) + &LaurentSeries::one(WIDTH, t).scale(&int(20)));
    let gap = &lhs - &rhs;
    assert!(gap.coeffs().iter().all(num_traits::Zero::is_zero));
    // D x = kappa (2y + 1) S with the same kappa at every order.
    let s = differential().expand(WIDTH, t).unwrap();
    let two_y_plus_one = &y.scale(&int(2)) + &LaurentSeries::one(WIDTH, t);
    let ode = &x.derivation_wdw() - &(&two_y_plus_one * &s).scale(&xy.kappa);
    assert!(ode.coeffs().iter().all(num_traits::Zero::is_zero));
    assert_eq!(xy.kappa, -int(1));
}

#[test]
fn f_p_expansion_is_an_integral_unit_times_w_to_the_minus_five() {
    let e = curve();
    let f = function_with_divisor(&e, 5, &e.point(int(5), int(5)).unwrap()).unwrap().normalized_at_infinity();
    let s = expand_on_curve(&f, 200).unwrap();
    assert_eq!(s.lead(), -5);
    assert!(s.coeffs().iter().all(|c| c.is_integer()));
    let prod = &s * &s.invert().unwrap();
    assert_eq!(prod.lead(), 0);
    assert!(prod.coeffs()[0].is_one());
    assert!(prod.coeffs()[1..].iter().all(num_traits::Zero::is_zero));
}
