//! Seeded algebraic laws for the exact coefficient types.

use qtree::algebra::{factor_cyclotomic, rat, QPoly, QRat, Rational, XPoly};
use qtree::pawn::{bernoulli_carlitz, hahn_delta, hahn_inverse, one_plus_qx};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn poly(rng: &mut ChaCha8Rng, max_deg: usize) -> QPoly {
    let d = rng.gen_range(0..=max_deg);
    QPoly::from_coeffs(
        (0..=d)
            .map(|_| Rational::new(rng.gen_range(-4..=4).into(), rng.gen_range(1..=3).into()))
            .collect(),
    )
}

fn nonzero_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> QPoly {
    loop {
        let p = poly(rng, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

fn qrat(rng: &mut ChaCha8Rng) -> QRat {
    QRat::new(poly(rng, 3), nonzero_poly(rng, 3)).unwrap()
}

fn xpoly(rng: &mut ChaCha8Rng, max_deg: usize) -> XPoly {
    let d = rng.gen_range(0..=max_deg);
    XPoly::from_coeffs((0..=d).map(|_| qrat(rng)).collect())
}

#[test]
fn qrat_field_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let (a, b, c) = (qrat(&mut rng), qrat(&mut rng), qrat(&mut rng));
        assert_eq!(a.add_ref(&b), b.add_ref(&a));
        assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        assert_eq!(
            a.mul_ref(&b.add_ref(&c)),
            a.mul_ref(&b).add_ref(&a.mul_ref(&c))
        );
        assert!(a.sub_ref(&a).is_zero());
        if !a.is_zero() {
            assert!(a.mul_ref(&a.inv().unwrap()).is_one());
            assert_eq!(b.mul_ref(&a).div_ref(&a).unwrap(), b);
        }
    }
    assert!(QRat::zero().inv().is_err());
}

#[test]
fn reduced_form_is_canonical() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let a = qrat(&mut rng);
        let g = nonzero_poly(&mut rng, 2);
        let blown = QRat::new(a.numerator().mul_ref(&g), a.denominator().mul_ref(&g)).unwrap();
        assert_eq!(blown, a);
        assert_eq!(blown.numerator(), a.numerator());
        if let Some(lead) = a.denominator().leading() {
            assert_eq!(*lead, rat(1));
        }
    }
}

#[test]
fn reciprocal_q_is_an_involution_and_a_ring_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let (a, b) = (qrat(&mut rng), qrat(&mut rng));
        assert_eq!(a.reciprocal_q().reciprocal_q(), a);
        assert_eq!(
            a.mul_ref(&b).reciprocal_q(),
            a.reciprocal_q().mul_ref(&b.reciprocal_q())
        );
        assert_eq!(
            a.add_ref(&b).reciprocal_q(),
            a.reciprocal_q().add_ref(&b.reciprocal_q())
        );
    }
    assert_eq!(QRat::q().reciprocal_q(), QRat::q_pow(-1));
}

#[test]
fn cyclotomic_factorization_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let mut p = QPoly::constant(Rational::new(rng.gen_range(1..=5).into(), rng.gen_range(1..=5).into()));
        for _ in 0..rng.gen_range(0..4) {
            let n = rng.gen_range(1..=12);
            p = p.mul_ref(&QPoly::q_pow_minus_one(n));
        }
        if rng.gen_bool(0.3) {
            p = p.mul_ref(&QPoly::from_ints(&[2, 0, 1]));
        }
        let f = factor_cyclotomic(&p).unwrap();
        assert_eq!(f.expand(), p);
    }
}

#[test]
fn division_by_one_plus_qx() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..100 {
        let f = xpoly(&mut rng, 4);
        let g = f.mul_ref(&one_plus_qx());
        assert_eq!(g.exact_div_one_plus_qx().unwrap(), f);
        let h = g.add_ref(&XPoly::one());
        assert!(h.exact_div_one_plus_qx().is_err());
    }
}

#[test]
fn hahn_inverse_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let at = QRat::q_pow(-1).neg_ref();
    for _ in 0..60 {
        let g = xpoly(&mut rng, 6);
        let f = hahn_inverse(&g);
        assert_eq!(hahn_delta(&f), g);
        assert!(f.eval(&at).is_zero());
        // Δ kills constants, so it cannot be injective without the normalization
        assert_eq!(hahn_delta(&f.add_ref(&XPoly::one())), g);
    }
}

#[test]
fn carlitz_reflection() {
    for k in 2..=10usize {
        let b = bernoulli_carlitz(k);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let expected = b.mul_ref(&QRat::q_pow(k as i64 - 1)).scale(&rat(sign));
        assert_eq!(b.reciprocal_q(), expected, "k = {k}");
    }
}
