//! Brute-force references. Nothing here uses the series machinery or the
//! recursions it is meant to cross-check.

use crate::algebra::{QPoly, QRat, XPoly};
use crate::error::VerifyError;
use crate::pawn::ColoringMode;
use crate::trees::{CoverInfo, LabeledTree, Tree};

/// Size limits for the exhaustive oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct OracleBounds {
    pub coloring_max_size: usize,
    pub coloring_max_n: i64,
    pub interpolation_max_size: usize,
    pub cover_max_size: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            coloring_max_size: 9,
            coloring_max_n: 4,
            interpolation_max_size: 7,
            cover_max_size: 20,
        }
    }
}

/// `Σ q^{σ(c)}` over all maps `c: vertices → {0..n}` that decrease (weakly or
/// strictly) from each parent to its children.
pub fn oracle_colorings(
    t: Tree,
    n: i64,
    mode: ColoringMode,
    bounds: &OracleBounds,
) -> Result<QPoly, VerifyError> {
    if t.size() > bounds.coloring_max_size {
        return Err(VerifyError::BoundExceeded {
            size: t.size(),
            bound: bounds.coloring_max_size,
        });
    }
    if n < 0 {
        return Ok(QPoly::zero());
    }
    Ok(count_colorings(t, n as usize, mode))
}

fn count_colorings(t: Tree, n: usize, mode: ColoringMode) -> QPoly {
    let lt = LabeledTree::new(t);
    let edges = lt.edges();
    let size = lt.len();
    let mut counts = vec![0i64; size * n + 1];
    let mut colors = vec![0usize; size];
    loop {
        let ok = edges.iter().all(|&(p, c)| match mode {
            ColoringMode::Weak => colors[c] <= colors[p],
            ColoringMode::Strict => colors[c] < colors[p],
        });
        if ok {
            counts[colors.iter().sum::<usize>()] += 1;
        }
        // odometer step
        let mut i = 0;
        while i < size && colors[i] == n {
            colors[i] = 0;
            i += 1;
        }
        if i == size {
            break;
        }
        colors[i] += 1;
    }
    QPoly::from_ints(&counts)
}

/// Lagrange interpolation of the weak coloring polynomials through the nodes
/// `x = [m]_q`, `m = 0..=#T`.
pub fn oracle_interpolate_pawn(t: Tree, bounds: &OracleBounds) -> Result<XPoly, VerifyError> {
    if t.size() > bounds.interpolation_max_size {
        return Err(VerifyError::BoundExceeded {
            size: t.size(),
            bound: bounds.interpolation_max_size,
        });
    }
    let nodes: Vec<QRat> = (0..=t.size() as i64).map(QRat::q_integer).collect();
    let values: Vec<QRat> = (0..=t.size())
        .map(|m| QRat::from_poly(count_colorings(t, m, ColoringMode::Weak)))
        .collect();
    let mut out = XPoly::zero();
    for (m, (xm, ym)) in nodes.iter().zip(&values).enumerate() {
        let mut basis = XPoly::constant(ym.clone());
        for (l, xl) in nodes.iter().enumerate() {
            if l == m {
                continue;
            }
            let scale = xm.sub_ref(xl).inv()?;
            basis = basis.mul_ref(&XPoly::linear(xl.neg_ref(), QRat::one()).scale(&scale));
        }
        out = out.add_ref(&basis);
    }
    Ok(out)
}

/// Minimum vertex covers by trying every vertex subset.
pub fn oracle_min_vertex_cover(t: Tree, bounds: &OracleBounds) -> Result<CoverInfo, VerifyError> {
    if t.size() > bounds.cover_max_size {
        return Err(VerifyError::BoundExceeded {
            size: t.size(),
            bound: bounds.cover_max_size,
        });
    }
    let lt = LabeledTree::new(t);
    let edges = lt.edges();
    let mut best = usize::MAX;
    let mut with_root = false;
    let mut without_root = false;
    for mask in 0u64..(1u64 << lt.len()) {
        if !edges.iter().all(|&(p, c)| mask >> p & 1 == 1 || mask >> c & 1 == 1) {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size < best {
            best = size;
            with_root = false;
            without_root = false;
        }
        if size == best {
            if mask & 1 == 1 {
                with_root = true;
            } else {
                without_root = true;
            }
        }
    }
    debug_assert!(with_root || without_root);
    Ok(CoverInfo {
        size: best,
        root_in_some: with_root,
        root_in_none: !with_root,
    })
}

/// `Σ_{j=1}^{m+1} q^{j-1} [j]_q^k` truncated after `q^m`.
pub fn zeta_sum(k: u32, m: usize) -> Vec<crate::algebra::Rational> {
    let mut acc = QPoly::zero();
    for j in 1..=m + 1 {
        let term = QPoly::from_ints(&vec![1; j]).pow(k).shift(j - 1);
        acc = acc.add_ref(&term);
    }
    (0..=m).map(|i| acc.coeff(i)).collect()
}
