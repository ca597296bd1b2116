use crate::algebra::{rat, Coefficient, QPoly, QRat, XPoly};
use crate::series::{solve_by_degree, solve_tree, Lower, TreeSeries};
use crate::trees::{prune_leaf_subsets, Tree};

use super::{one_plus_qx, twist};

/// `1 / (q^n - 1)`.
fn inv_q_pow_minus_one(n: usize) -> QRat {
    QRat::from_poly(QPoly::q_pow_minus_one(n))
        .inv()
        .expect("q^n - 1 is nonzero for n >= 1")
}

/// The per-tree form of the pawn equation, over any ring that contains the
/// value of `x`:
///
/// `(q^n - 1) ♟_T = Σ_{S ≠ ∅} (-1)^{|S|} ♟_{T∖S} + q^n (1 + (q-1)x) Π_i ♟_{T_i}`
///
/// where `S` runs over nonempty leaf sets and `T = B₊(T_1, ..., T_k)`.
pub struct PawnStep<R> {
    vertex: R,
    twist: R,
    q_pow: Vec<R>,
    inv: Vec<R>,
}

impl<R: Coefficient> PawnStep<R> {
    /// `vertex` is `1 + q x` and `twist` is `1 + (q - 1) x` in the target ring;
    /// `embed` maps constants of `Q(q)` into it.
    pub fn new(order: usize, vertex: R, twist: R, embed: impl Fn(&QRat) -> R) -> Self {
        let q_pow = (0..=order).map(|n| embed(&QRat::q_pow(n as i64))).collect();
        let inv = (0..=order)
            .map(|n| if n == 0 { R::zero() } else { embed(&inv_q_pow_minus_one(n)) })
            .collect();
        PawnStep { vertex, twist, q_pow, inv }
    }

    pub fn step(&self, t: Tree, lower: Lower<'_, R>) -> R {
        if t.is_vertex() {
            return self.vertex.clone();
        }
        let n = t.size();
        let mut acc = R::zero();
        for e in prune_leaf_subsets(t, true) {
            let term = R::from_i64(e.count as i64).times(&lower(e.tree));
            acc = if e.removed % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
        }
        let prod = t
            .child_groups()
            .iter()
            .fold(R::one(), |p, (c, m)| p.times(&lower(*c).pow(*m as u32)));
        let grafted = self.q_pow[n].times(&self.twist).times(&prod);
        acc.plus(&grafted).times(&self.inv[n])
    }
}

pub fn solve_pawn_with<R: Coefficient>(order: usize, step: &PawnStep<R>) -> TreeSeries<R> {
    solve_by_degree(order, |t, lower| step.step(t, lower))
}

/// `♟` truncated at `order`, with coefficients in `Q(q)[x]`.
pub fn solve_pawn(order: usize) -> TreeSeries<XPoly> {
    let step = PawnStep::new(order, one_plus_qx(), twist(), |c| XPoly::constant(c.clone()));
    solve_pawn_with(order, &step)
}

/// A single coefficient `♟_T`.
pub fn pawn_coefficient(t: Tree) -> XPoly {
    let step = PawnStep::new(t.size(), one_plus_qx(), twist(), |c| XPoly::constant(c.clone()));
    solve_tree(t, &|u, lower: Lower<'_, XPoly>| step.step(u, lower))
}

/// `♟` with `x = [n]_q` substituted before solving.
pub fn solve_pawn_at_qint(order: usize, n: i64) -> TreeSeries<QRat> {
    let x = QRat::q_integer(n);
    let vertex = QRat::one().add_ref(&QRat::q().mul_ref(&x));
    let tw = QRat::one().add_ref(&QRat::q().sub_ref(&QRat::one()).mul_ref(&x));
    let step = PawnStep::new(order, vertex, tw, QRat::clone);
    solve_pawn_with(order, &step)
}

/// `E`: coefficient 1 on every tree.
pub fn series_e(order: usize) -> TreeSeries<QRat> {
    TreeSeries::from_fn(order, |_| QRat::one())
}

/// `(q^n - 1) Ω_T = [T = B₊(T')] Ω_{T'} - Σ_{S ≠ ∅} q^{n-|S|} Ω_{T∖S}`, `Ω_● = 1`.
pub fn omega_step(t: Tree, lower: Lower<'_, QRat>) -> QRat {
    if t.is_vertex() {
        return QRat::one();
    }
    let n = t.size();
    let mut acc = t.single_child().map_or_else(QRat::zero, lower);
    for e in prune_leaf_subsets(t, true) {
        let w = QRat::q_pow((n - e.removed) as i64).scale(&rat(e.count as i64));
        acc = acc.sub_ref(&w.mul_ref(&lower(e.tree)));
    }
    acc.mul_ref(&inv_q_pow_minus_one(n))
}

/// `(q^n - 1) Ω̄_T = Σ_{S ≠ ∅} (-1)^{|S|} Ω̄_{T∖S} + [T = B₊(T')] q^{n-1} Ω̄_{T'}`, `Ω̄_● = 1`.
pub fn omega_bar_step(t: Tree, lower: Lower<'_, QRat>) -> QRat {
    if t.is_vertex() {
        return QRat::one();
    }
    let n = t.size();
    let mut acc = match t.single_child() {
        Some(c) => QRat::q_pow(n as i64 - 1).mul_ref(&lower(c)),
        None => QRat::zero(),
    };
    for e in prune_leaf_subsets(t, true) {
        let term = lower(e.tree).scale(&rat(e.count as i64));
        acc = if e.removed % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
    }
    acc.mul_ref(&inv_q_pow_minus_one(n))
}

pub fn solve_omega(order: usize) -> TreeSeries<QRat> {
    solve_by_degree(order, omega_step)
}

pub fn solve_omega_bar(order: usize) -> TreeSeries<QRat> {
    solve_by_degree(order, omega_bar_step)
}

/// `Ω_T` alone, touching only the trees it depends on.
pub fn omega_coefficient(t: Tree) -> QRat {
    solve_tree(t, &omega_step)
}

pub fn omega_bar_coefficient(t: Tree) -> QRat {
    solve_tree(t, &omega_bar_step)
}

/// `Ω̄_q = Σ_{-1/q} Ω_{1/q}`.
pub fn omega_bar_via_omega(order: usize) -> TreeSeries<QRat> {
    let alpha = QRat::q_pow(-1).neg_ref();
    solve_omega(order)
        .map(|_, c| c.reciprocal_q())
        .suspension(&alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{frac, Rational};
    use crate::trees::canonicalize;

    fn qp(c: &[i64]) -> QRat {
        QRat::from_poly(QPoly::from_ints(c))
    }

    fn x_lin(a: &[i64], b: &[i64]) -> XPoly {
        XPoly::linear(qp(a), qp(b))
    }

    fn over(p: XPoly, den: &[i64]) -> XPoly {
        p.scale(&qp(den).inv().unwrap())
    }

    #[test]
    fn first_pawn_terms() {
        let s = solve_pawn(3);
        let v = x_lin(&[1], &[0, 1]);
        assert_eq!(s.coeff(Tree::vertex()), v);
        let l2 = over(v.mul_ref(&x_lin(&[1, 1], &[0, 0, 1])), &[1, 1]);
        assert_eq!(s.coeff(Tree::linear(2)), l2);
        let c2 = over(
            v.mul_ref(&x_lin(&[1, 1], &[0, 0, 1]))
                .mul_ref(&x_lin(&[1, 1, 1], &[0, 0, 1, 1])),
            &[1, 2, 2, 1],
        );
        assert_eq!(s.coeff(Tree::corolla(2)), c2);
    }

    #[test]
    fn single_tree_solver_matches_full_solve() {
        let s = solve_pawn(5);
        let t = canonicalize("(()(()()))").unwrap();
        assert_eq!(pawn_coefficient(t), s.coeff(t));
        let om = solve_omega(6);
        for (t, c) in om.iter() {
            assert_eq!(&omega_coefficient(t), c);
        }
    }

    #[test]
    fn omega_linear_and_corollas_at_one() {
        let om = solve_omega(6);
        for n in 1..=6 {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let expected = QRat::q_integer(n as i64).inv().unwrap().scale(&rat(sign));
            assert_eq!(om.coeff(Tree::linear(n)), expected);
        }
        let at_one: Vec<Rational> = (0..5)
            .map(|k| om.coeff(Tree::corolla(k)).eval(&rat(1)).unwrap())
            .collect();
        assert_eq!(at_one, vec![rat(1), frac(-1, 2), frac(1, 6), rat(0), frac(-1, 30)]);
    }

    #[test]
    fn omega_bar_paths_agree() {
        assert_eq!(solve_omega_bar(6), omega_bar_via_omega(6));
        let ob = solve_omega_bar(5);
        let fig = canonicalize("(()(()()))").unwrap();
        let den = QPoly::from_ints(&[1, 1])
            .mul_ref(&QPoly::from_ints(&[1, 1, 1]))
            .mul_ref(&QPoly::from_ints(&[1, 0, 1]))
            .mul_ref(&QPoly::from_ints(&[1, 1, 1, 1, 1]));
        let expected = QRat::new(QPoly::from_ints(&[1, 1, 0, -1]), den).unwrap();
        assert_eq!(ob.coeff(fig), expected);
    }

    #[test]
    fn presubstitution_commutes_with_solving() {
        let s = solve_pawn(5);
        for n in -3..=3 {
            let x = QRat::q_integer(n);
            assert_eq!(solve_pawn_at_qint(5, n), s.map(|_, c| c.eval(&x)), "n = {n}");
        }
    }
}
