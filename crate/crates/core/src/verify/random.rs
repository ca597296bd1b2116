use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{QPoly, QRat};
use crate::series::TreeSeries;

/// A reproducible series whose coefficients are polynomials in `q` of degree
/// at most 2 with integer coefficients in `[-3, 3]`; about one coefficient in
/// five is zero.
pub fn random_series(order: usize, seed: u64) -> TreeSeries<QRat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = TreeSeries::zero(order);
    for t in crate::trees::trees_up_to(order) {
        if rng.gen_range(0..5) == 0 {
            continue;
        }
        let coeffs: Vec<i64> = (0..3).map(|_| rng.gen_range(-3..=3)).collect();
        let c = QRat::from_poly(QPoly::from_ints(&coeffs));
        s.set(t, c).expect("tree within order");
    }
    s
}
