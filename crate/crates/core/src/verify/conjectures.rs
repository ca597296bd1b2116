use std::collections::BTreeMap;

use serde_json::json;

use super::{CheckReport, Sweep};
use crate::algebra::{cyclotomic, newton_polygon, BivarIntPoly, QRat};
use crate::pawn::{omega_coefficient, pawn_corolla, pawn_coefficient, PawnCoefficient};
use crate::par;
use crate::trees::{trees_up_to, tree_stats, Tree};

/// For `n = 1..=max_n`, the reduced denominator of `♟_{Crl_n}` should be
/// `Φ_2 Φ_3 ⋯ Φ_{n+1}`, each factor once.
pub fn check_corolla_denominator(max_n: usize) -> CheckReport {
    let mut sw = Sweep::new("corolla-denominator", json!({ "max_n": max_n }));
    for n in 1..=max_n {
        let c = PawnCoefficient::new(pawn_corolla(n));
        let expected: BTreeMap<usize, u32> = (2..=n + 1).map(|d| (d, 1)).collect();
        let ok = c
            .as_ref()
            .is_ok_and(|c| c.factors.factors == expected && c.factors.remainder.is_one());
        sw.expect(ok, || match &c {
            Ok(c) => json!({
                "n": n,
                "cyclotomic_factors": c.factors.factors.iter().map(|(d, m)| [*d as u64, *m as u64]).collect::<Vec<_>>(),
                "remainder": c.factors.remainder.to_string(),
            }),
            Err(e) => json!({ "n": n, "error": e.to_string() }),
        });
    }
    sw.finish()
}

/// Expected left boundary of the Newton polygon of `♟_T`'s numerator, as edge
/// vectors `(Δ q-degree, Δ x-degree)` from the bottom up: `(i h_i, h_i)` where
/// `h_i` is the number of vertices at height `i`.
pub fn newton_expectation(t: Tree) -> Vec<(i64, i64)> {
    tree_stats(t)
        .height_histogram
        .into_iter()
        .map(|(i, h)| ((i * h) as i64, h as i64))
        .collect()
}

fn edges(chain: &[(i64, i64)]) -> Vec<(i64, i64)> {
    chain.windows(2).map(|w| (w[1].0 - w[0].0, w[1].1 - w[0].1)).collect()
}

fn newton_case(t: Tree) -> Result<(), serde_json::Value> {
    let (num, _) = BivarIntPoly::numerator_of(&pawn_coefficient(t));
    let hull = newton_polygon(&num).map_err(|e| json!({ "tree": t, "error": e.to_string() }))?;
    let size = t.size() as i64;
    let left = edges(&hull.left_chain());
    let right = edges(&hull.right_chain());
    let ok = hull.min_y() == 0
        && hull.max_y() == size
        && left == newton_expectation(t)
        && right == vec![(size, size)];
    if ok {
        Ok(())
    } else {
        Err(json!({
            "tree": t,
            "hull": hull.vertices,
            "left_edges": left,
            "expected_left_edges": newton_expectation(t),
            "right_edges": right,
        }))
    }
}

/// Shape of the Newton polygon of `♟_T`'s numerator (`q`-degree horizontal,
/// `x`-degree vertical): bottom at `x^0`, top at `x^{#T}`, one slope-1 edge on
/// the right, and left edges of slope `1/i` with rise `h_i`, in order.
/// Anchor points are read off the hull.
pub fn check_newton(t: Tree) -> CheckReport {
    let mut sw = Sweep::new("newton", json!({ "tree": t }));
    let r = newton_case(t);
    sw.expect(r.is_ok(), || r.err().unwrap_or_default());
    sw.finish()
}

pub fn check_newton_sweep(max_size: usize) -> CheckReport {
    let mut sw = Sweep::new("newton", json!({ "max_size": max_size }));
    let trees = trees_up_to(max_size);
    for r in par::map_collect(&trees, |&t| newton_case(t)) {
        sw.expect(r.is_ok(), || r.err().unwrap_or_default());
    }
    sw.finish()
}

/// For `T_λ = B₊(Lnr_{λ_1}, …)` and odd `k`, `Φ_{1 + max λ}` should divide
/// the numerator of `Ω_{B₊(T_λ^k)}`. Inconclusive when the tree exceeds
/// `order_cap` vertices.
pub fn check_partition_conjecture(lambda: &[usize], k: usize, order_cap: usize) -> CheckReport {
    let mut sw = Sweep::new(
        "partition",
        json!({ "lambda": lambda, "k": k, "order_cap": order_cap }),
    );
    let base = Tree::partition(lambda);
    let size = 1 + k * base.size();
    if size > order_cap {
        sw.inconclusive(format!("tree has {size} vertices, above the cap of {order_cap}"));
        return sw.finish();
    }
    if k < 3 || k.is_multiple_of(2) {
        sw.note("the divisibility is only expected for odd k >= 3");
    }
    let t = Tree::graft(vec![base; k]);
    let omega: QRat = omega_coefficient(t);
    let phi = cyclotomic(1 + lambda.iter().copied().max().unwrap_or(0));
    sw.expect(phi.divides(omega.numerator()), || {
        json!({ "tree": t, "omega": omega.to_string(), "divisor": phi.to_string() })
    });
    sw.finish()
}
