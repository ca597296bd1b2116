use std::collections::HashMap;

use crate::algebra::{rat, QPoly, QRat, XPoly};
use crate::series::TreeSeries;
use crate::trees::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringMode {
    /// colors weakly decrease from the root
    Weak,
    /// colors strictly decrease from the root
    Strict,
}

/// `Σ_c q^{σ(c)}` over decreasing colorings of `t` by `{0, ..., n}`, where
/// `σ(c)` is the sum of the colors. Zero for `n < 0`.
///
/// Weak: `F^{(n)}_{B₊(T_1..T_k)} = Σ_{j=0}^{n} q^j Π_i F^{(j)}_{T_i}`.
/// Strict: the same with `G^{(j-1)}` inside the product.
pub fn coloring_poly(t: Tree, n: i64, mode: ColoringMode) -> QPoly {
    let mut memo = HashMap::new();
    coloring_memo(t, n, mode, &mut memo)
}

fn coloring_memo(
    t: Tree,
    n: i64,
    mode: ColoringMode,
    memo: &mut HashMap<(Tree, i64), QPoly>,
) -> QPoly {
    if n < 0 {
        return QPoly::zero();
    }
    if let Some(p) = memo.get(&(t, n)) {
        return p.clone();
    }
    let mut acc = QPoly::zero();
    for j in 0..=n {
        let below = match mode {
            ColoringMode::Weak => j,
            ColoringMode::Strict => j - 1,
        };
        let mut prod = QPoly::monomial(rat(1), j as usize);
        for &(c, m) in t.child_groups() {
            if prod.is_zero() {
                break;
            }
            prod = prod.mul_ref(&coloring_memo(c, below, mode, memo).pow(m as u32));
        }
        acc = acc.add_ref(&prod);
    }
    memo.insert((t, n), acc.clone());
    acc
}

pub fn series_coloring(n: i64, mode: ColoringMode, order: usize) -> TreeSeries<QRat> {
    TreeSeries::from_fn(order, |t| QRat::from_poly(coloring_poly(t, n, mode)))
}

/// `F^{(n)} = Σ_T F^{(n)}_T T / aut(T)`.
pub fn series_f(n: i64, order: usize) -> TreeSeries<QRat> {
    series_coloring(n, ColoringMode::Weak, order)
}

/// `G^{(n)} = Σ_T G^{(n)}_T T / aut(T)`.
pub fn series_g(n: i64, order: usize) -> TreeSeries<QRat> {
    series_coloring(n, ColoringMode::Strict, order)
}

/// Substitutes `x = [n]_q` in every coefficient.
pub fn eval_pawn_at_qint(a: &TreeSeries<XPoly>, n: i64) -> TreeSeries<QRat> {
    let x = QRat::q_integer(n);
    a.map(|_, c| c.eval(&x))
}

/// `F̄_{B₊(T_1..T_k)} = 1 - Π F̄_{T_i}`: the value of `F^{(1)}_T` at `q = -1`.
pub fn fbar_type(t: Tree) -> u8 {
    1 - t.children().iter().map(|&c| fbar_type(c)).product::<u8>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::canonicalize;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn six_vertex_tree_polynomials() {
        let t = canonicalize("(()(()()))").unwrap();
        assert_eq!(coloring_poly(t, 1, ColoringMode::Weak), p(&[1, 1, 2, 3, 3, 1]));
        assert_eq!(
            coloring_poly(t, 3, ColoringMode::Strict),
            p(&[0, 0, 0, 1, 2, 2, 4, 4, 3, 1])
        );
        assert_eq!(fbar_type(t), 1);
    }

    #[test]
    fn small_cases() {
        for n in 0..4 {
            let expected = p(&vec![1; n as usize + 1]);
            assert_eq!(coloring_poly(Tree::vertex(), n, ColoringMode::Weak), expected);
        }
        assert_eq!(coloring_poly(Tree::linear(2), 1, ColoringMode::Strict), p(&[0, 1]));
        assert!(coloring_poly(Tree::linear(4), 2, ColoringMode::Strict).is_zero());
        assert_eq!(fbar_type(Tree::vertex()), 0);
        assert_eq!(fbar_type(Tree::linear(2)), 1);
        for t in crate::trees::trees_up_to(7) {
            let at_minus_one = coloring_poly(t, 1, ColoringMode::Weak).eval(&rat(-1));
            assert_eq!(at_minus_one, rat(fbar_type(t) as i64), "{t}");
        }
    }
}
