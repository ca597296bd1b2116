use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use super::labeled::LabeledTree;
use super::Tree;
use crate::algebra::{QPoly, QRat};

/// One class of leaf-pruned trees: `count` subsets of `removed` leaves
/// whose removal leaves `tree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PruneEntry {
    pub tree: Tree,
    pub removed: usize,
    pub count: u64,
}

/// One class of root-containing subtrees: `count` vertex subsets keep a copy
/// of `kept` and leave the complement components `components` (sorted).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Decomposition {
    pub kept: Tree,
    pub components: Vec<Tree>,
    pub count: u64,
}

fn binomial_u64(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn multinomial(parts: &[usize]) -> u64 {
    let mut total = 0;
    let mut acc = 1u64;
    for &a in parts {
        total += a;
        acc = acc
            .checked_mul(binomial_u64(total, a))
            .expect("multiplicity overflows u64");
    }
    acc
}

/// All ways to write `m` as an ordered sum of `r` nonnegative parts.
fn distributions(r: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(r: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == r {
            cur.push(m);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in 0..=m {
            cur.push(a);
            go(r, m - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(r, m, &mut Vec::new(), &mut out);
    out
}

/// Chooses a multiset of `m` outcomes for `m` identical siblings.
/// Each outcome is `(payload, weight)`; the result pairs a list of chosen
/// payloads (with repetition) with its total weight.
fn multiset_choices<P: Clone>(outcomes: &[(P, u64)], m: usize) -> Vec<(Vec<P>, u64)> {
    distributions(outcomes.len(), m)
        .into_iter()
        .map(|a| {
            let mut chosen = Vec::with_capacity(m);
            let mut w = multinomial(&a);
            for (k, &ak) in a.iter().enumerate() {
                for _ in 0..ak {
                    chosen.push(outcomes[k].0.clone());
                }
                w = w
                    .checked_mul(outcomes[k].1.checked_pow(ak as u32).expect("overflow"))
                    .expect("multiplicity overflows u64");
            }
            (chosen, w)
        })
        .filter(|(_, w)| *w > 0)
        .collect()
}

fn prune_memo() -> &'static DashMap<Tree, Arc<Vec<PruneEntry>>> {
    static MEMO: OnceLock<DashMap<Tree, Arc<Vec<PruneEntry>>>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// Leaf subsets `S` of `t` with `t ∖ S` nonempty, grouped by the class of
/// `t ∖ S` and `|S|`. With `proper_only` the empty subset is left out.
pub fn prune_leaf_subsets(t: Tree, proper_only: bool) -> Vec<PruneEntry> {
    let all = prune_all(t);
    all.iter()
        .filter(|e| !proper_only || e.removed > 0)
        .copied()
        .collect()
}

fn prune_all(t: Tree) -> Arc<Vec<PruneEntry>> {
    if let Some(v) = prune_memo().get(&t) {
        return v.clone();
    }
    // partial results: (children so far, removed, count)
    let mut partial: BTreeMap<(Vec<Tree>, usize), u64> = BTreeMap::from([((Vec::new(), 0), 1)]);
    for &(c, m) in t.child_groups() {
        // (children contributed, removed) for one sibling of class c
        let outcomes: Vec<((Option<Tree>, usize), u64)> = if c.is_vertex() {
            vec![((Some(c), 0), 1), ((None, 1), 1)]
        } else {
            prune_all(c)
                .iter()
                .map(|e| ((Some(e.tree), e.removed), e.count))
                .collect()
        };
        let choices = multiset_choices(&outcomes, m);
        let mut next = BTreeMap::new();
        for ((kids, removed), w) in &partial {
            for (chosen, cw) in &choices {
                let mut kids = kids.clone();
                let mut removed = *removed;
                for (tree, r) in chosen {
                    kids.extend(tree.iter().copied());
                    removed += r;
                }
                kids.sort();
                *next.entry((kids, removed)).or_insert(0u64) += w * cw;
            }
        }
        partial = next;
    }
    let mut merged: BTreeMap<(Tree, usize), u64> = BTreeMap::new();
    for ((kids, removed), w) in partial {
        *merged.entry((Tree::graft(kids), removed)).or_insert(0) += w;
    }
    let v: Vec<PruneEntry> = merged
        .into_iter()
        .map(|((tree, removed), count)| PruneEntry { tree, removed, count })
        .collect();
    let v = Arc::new(v);
    prune_memo().insert(t, v.clone());
    v
}

fn decomposition_memo() -> &'static DashMap<Tree, Arc<Vec<Decomposition>>> {
    static MEMO: OnceLock<DashMap<Tree, Arc<Vec<Decomposition>>>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// Root-containing subtrees of `t`, grouped by the class of the kept part and
/// the multiset of classes of the removed components.
pub fn root_subtree_decompositions(t: Tree) -> Arc<Vec<Decomposition>> {
    if let Some(v) = decomposition_memo().get(&t) {
        return v.clone();
    }
    type Key = (Vec<Tree>, Vec<Tree>);
    type Outcome = ((Option<Tree>, Vec<Tree>), u64);
    let mut partial: BTreeMap<Key, u64> = BTreeMap::from([((Vec::new(), Vec::new()), 1)]);
    for &(c, m) in t.child_groups() {
        // (kept child or None, components) for one sibling of class c
        let mut outcomes: Vec<Outcome> = vec![((None, vec![c]), 1)];
        outcomes.extend(
            root_subtree_decompositions(c)
                .iter()
                .map(|d| ((Some(d.kept), d.components.clone()), d.count)),
        );
        let choices = multiset_choices(&outcomes, m);
        let mut next = BTreeMap::new();
        for ((kids, comps), w) in &partial {
            for (chosen, cw) in &choices {
                let mut kids = kids.clone();
                let mut comps = comps.clone();
                for (kept, cs) in chosen {
                    kids.extend(kept.iter().copied());
                    comps.extend(cs.iter().copied());
                }
                kids.sort();
                comps.sort();
                *next.entry((kids, comps)).or_insert(0u64) += w * cw;
            }
        }
        partial = next;
    }
    let mut merged: BTreeMap<(Tree, Vec<Tree>), u64> = BTreeMap::new();
    for ((kids, comps), w) in partial {
        *merged.entry((Tree::graft(kids), comps)).or_insert(0) += w;
    }
    let v: Vec<Decomposition> = merged
        .into_iter()
        .map(|((kept, components), count)| Decomposition { kept, components, count })
        .collect();
    let v = Arc::new(v);
    decomposition_memo().insert(t, v.clone());
    v
}

/// [`prune_leaf_subsets`] by running over every leaf subset of the labeled
/// representative.
pub fn prune_leaf_subsets_exhaustive(t: Tree, proper_only: bool) -> Vec<PruneEntry> {
    let lt = LabeledTree::new(t);
    let leaves: Vec<usize> = lt.leaves().into_iter().filter(|&v| v != 0).collect();
    let mut acc: BTreeMap<(Tree, usize), u64> = BTreeMap::new();
    for mask in 0u64..(1u64 << leaves.len()) {
        if proper_only && mask == 0 {
            continue;
        }
        let mut keep = vec![true; lt.len()];
        for (i, &v) in leaves.iter().enumerate() {
            if mask >> i & 1 == 1 {
                keep[v] = false;
            }
        }
        *acc.entry((lt.induced(0, &keep), mask.count_ones() as usize)).or_insert(0) += 1;
    }
    acc.into_iter()
        .map(|((tree, removed), count)| PruneEntry { tree, removed, count })
        .collect()
}

/// [`root_subtree_decompositions`] by running over every vertex subset of the
/// labeled representative that contains the root and is closed under parents.
pub fn root_subtree_decompositions_exhaustive(t: Tree) -> Vec<Decomposition> {
    let lt = LabeledTree::new(t);
    let n = lt.len();
    let mut acc: BTreeMap<(Tree, Vec<Tree>), u64> = BTreeMap::new();
    for mask in 0u64..(1u64 << (n - 1)) {
        let keep: Vec<bool> = (0..n).map(|v| v == 0 || mask >> (v - 1) & 1 == 1).collect();
        if (1..n).any(|v| keep[v] && !keep[lt.parent(v).expect("non-root")]) {
            continue;
        }
        let mut comps: Vec<Tree> = (1..n)
            .filter(|&v| !keep[v] && keep[lt.parent(v).expect("non-root")])
            .map(|v| lt.subtree(v))
            .collect();
        comps.sort();
        *acc.entry((lt.induced(0, &keep), comps)).or_insert(0) += 1;
    }
    acc.into_iter()
        .map(|((kept, components), count)| Decomposition { kept, components, count })
        .collect()
}

/// `q^{-Σ_v #T_v} Π_v [#T_v]_q` over the subtrees `T_v` rooted at each vertex.
pub fn q_factorial(t: Tree) -> QRat {
    fn walk(t: Tree, exp: &mut usize, prod: &mut QPoly) {
        *exp += t.size();
        *prod = prod.mul_ref(&QPoly::from_ints(&vec![1; t.size()]));
        for &c in t.children() {
            walk(c, exp, prod);
        }
    }
    let mut exp = 0;
    let mut prod = QPoly::one();
    walk(t, &mut exp, &mut prod);
    QRat::from_poly(prod).mul_ref(&QRat::q_pow(-(exp as i64)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverInfo {
    /// size of a minimum vertex cover
    pub size: usize,
    pub root_in_some: bool,
    pub root_in_none: bool,
}

/// Minimum vertex covers by the usual tree DP.
pub fn min_vertex_covers_root(t: Tree) -> CoverInfo {
    // (best cover containing the root, best cover avoiding it)
    fn dp(t: Tree) -> (usize, usize) {
        let mut with = 1;
        let mut without = 0;
        for &c in t.children() {
            let (cw, co) = dp(c);
            with += cw.min(co);
            without += cw;
        }
        (with, without)
    }
    let (with, without) = dp(t);
    let size = with.min(without);
    CoverInfo {
        size,
        root_in_some: with == size,
        root_in_none: with != size,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{canonicalize, trees_up_to};

    fn as_map(v: &[PruneEntry]) -> BTreeMap<(String, usize), u64> {
        v.iter()
            .map(|e| ((e.tree.encoding().to_string(), e.removed), e.count))
            .collect()
    }

    #[test]
    fn prune_examples() {
        let m = as_map(&prune_leaf_subsets(Tree::corolla(2), false));
        let expected = BTreeMap::from([
            (("(()())".to_string(), 0), 1),
            (("(())".to_string(), 1), 2),
            (("()".to_string(), 2), 1),
        ]);
        assert_eq!(m, expected);
        assert_eq!(as_map(&prune_leaf_subsets(Tree::vertex(), false)).len(), 1);
        assert!(prune_leaf_subsets(Tree::vertex(), true).is_empty());
        let l3 = as_map(&prune_leaf_subsets(Tree::linear(3), false));
        assert_eq!(l3.len(), 2);
        assert_eq!(l3[&("(())".to_string(), 1)], 1);
    }

    #[test]
    fn grouped_prune_matches_subsets() {
        for t in trees_up_to(8) {
            for proper in [false, true] {
                assert_eq!(
                    prune_leaf_subsets(t, proper),
                    prune_leaf_subsets_exhaustive(t, proper),
                    "{t}"
                );
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let v = root_subtree_decompositions(Tree::vertex());
        assert_eq!(*v, vec![Decomposition { kept: Tree::vertex(), components: vec![], count: 1 }]);
        let c2 = root_subtree_decompositions(Tree::corolla(2));
        let total: u64 = c2.iter().map(|d| d.count).sum();
        assert_eq!(total, 4);
        let lnr2 = c2.iter().find(|d| d.kept == Tree::linear(2)).unwrap();
        assert_eq!((lnr2.components.clone(), lnr2.count), (vec![Tree::vertex()], 2));
    }

    #[test]
    fn grouped_decompositions_match_subsets() {
        for t in trees_up_to(8) {
            assert_eq!(*root_subtree_decompositions(t), root_subtree_decompositions_exhaustive(t), "{t}");
        }
    }

    #[test]
    fn q_factorial_examples() {
        let fig = canonicalize("(()(()()))").unwrap();
        let expected = QRat::from_poly(QPoly::from_ints(&[1, 1, 1]).mul_ref(&QPoly::from_ints(&[1, 1, 1, 1, 1])))
            .mul_ref(&QRat::q_pow(-11));
        assert_eq!(q_factorial(fig), expected);
        assert_eq!(q_factorial(Tree::vertex()), QRat::q_pow(-1));
        assert_eq!(q_factorial(Tree::linear(2)), QRat::q_integer(2).mul_ref(&QRat::q_pow(-3)));
    }

    #[test]
    fn cover_examples() {
        let v = min_vertex_covers_root(Tree::vertex());
        assert_eq!((v.size, v.root_in_some), (0, false));
        let l2 = min_vertex_covers_root(Tree::linear(2));
        assert_eq!((l2.size, l2.root_in_some), (1, true));
        let fig = min_vertex_covers_root(canonicalize("(()(()()))").unwrap());
        assert!(fig.root_in_some && !fig.root_in_none);
    }
}
