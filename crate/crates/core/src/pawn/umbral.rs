use std::sync::Mutex;

use crate::algebra::{rational::binomial, QPoly, QRat, Rational, XPoly};

/// Carlitz's `q`-Bernoulli number `β_k`, from
/// `(q^{n+1} - 1) β_n = [n = 1] - q Σ_{k<n} C(n,k) q^k β_k`, `β_0 = 1`.
pub fn bernoulli_carlitz(k: usize) -> QRat {
    static MEMO: Mutex<Vec<QRat>> = Mutex::new(Vec::new());
    let mut memo = MEMO.lock().expect("Carlitz memo poisoned");
    while memo.len() <= k {
        let n = memo.len();
        let beta = if n == 0 {
            QRat::one()
        } else {
            let mut acc = if n == 1 { QRat::one() } else { QRat::zero() };
            for (j, bj) in memo.iter().enumerate() {
                let w = QRat::q_pow(j as i64 + 1).scale(&Rational::from(binomial(n, j)));
                acc = acc.sub_ref(&w.mul_ref(bj));
            }
            let den = QRat::from_poly(QPoly::q_pow_minus_one(n + 1));
            acc.div_ref(&den).expect("q^{n+1} - 1 is nonzero")
        };
        memo.push(beta);
    }
    memo[k].clone()
}

/// The `q`-umbra `Ψ`: the linear form `x^n ↦ β_n`.
pub fn psi_umbral(p: &XPoly) -> QRat {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(QRat::zero(), |acc, (n, c)| acc.add_ref(&c.mul_ref(&bernoulli_carlitz(n))))
}

/// `Δ f = (f(1 + q x) - f(x)) / (1 + (q - 1) x)`.
pub fn hahn_delta(f: &XPoly) -> XPoly {
    f.shift_one_plus_qx()
        .sub_ref(f)
        .exact_div_linear(&QRat::one(), &QRat::q().sub_ref(&QRat::one()))
        .expect("the difference vanishes at the fixed point x = 1/(1-q)")
}

/// The unique `f` divisible by `1 + q x` with `Δ f = g`.
pub fn hahn_inverse(g: &XPoly) -> XPoly {
    let Some(d) = g.degree() else {
        return XPoly::zero();
    };
    // Δ(x^j) has degree j - 1 with leading coefficient [j]_q
    let images: Vec<XPoly> = (0..=d + 1)
        .map(|j| hahn_delta(&XPoly::x().pow(j as u32)))
        .collect();
    let mut residual = g.clone();
    let mut coeffs = vec![QRat::zero(); d + 2];
    for j in (1..=d + 1).rev() {
        let a = residual
            .coeff(j - 1)
            .div_ref(&QRat::q_integer(j as i64))
            .expect("[j]_q is nonzero");
        residual = residual.sub_ref(&images[j].scale(&a));
        coeffs[j] = a;
    }
    debug_assert!(residual.is_zero());
    let mut f = XPoly::from_coeffs(coeffs);
    let root = QRat::q_pow(-1).neg_ref();
    f = f.sub_ref(&XPoly::constant(f.eval(&root)));
    f
}
