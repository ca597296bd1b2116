//! Tree enumeration, canonical forms and symmetry factors against brute force.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use qtree::trees::{
    canonicalize, enumerate_trees, prune_leaf_subsets, prune_leaf_subsets_exhaustive,
    root_subtree_decompositions, root_subtree_decompositions_exhaustive, trees_up_to, LabeledTree,
    Tree,
};

/// Every parent array with `parent[v] < v`, which reaches every rooted tree.
fn parent_arrays(n: usize) -> Vec<Vec<Option<usize>>> {
    let mut out = vec![vec![None]];
    for v in 1..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..v).map(move |u| {
                    let mut q = p.clone();
                    q.push(Some(u));
                    q
                })
            })
            .collect();
    }
    out
}

/// Canonical string built without the interning table.
fn encode(lt: &LabeledTree, v: usize) -> String {
    let mut kids: Vec<String> = lt.children(v).iter().map(|&c| encode(lt, c)).collect();
    kids.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    format!("({})", kids.concat())
}

#[test]
fn enumeration_matches_parent_array_brute_force() {
    for n in 1..=7 {
        let brute: BTreeSet<String> = parent_arrays(n)
            .into_iter()
            .map(|p| encode(&LabeledTree::from_parents(p).unwrap(), 0))
            .collect();
        let listed: BTreeSet<String> = enumerate_trees(n).iter().map(|t| t.encoding().to_string()).collect();
        assert_eq!(brute, listed, "n = {n}");
        assert_eq!(enumerate_trees(n).len(), listed.len(), "duplicates at n = {n}");
    }
    assert_eq!(enumerate_trees(9).len(), 286);
}

#[test]
fn canonicalize_is_idempotent_and_order_blind() {
    for t in trees_up_to(7) {
        assert_eq!(canonicalize(t.encoding()).unwrap(), t);
        assert_eq!(canonicalize(&t.to_string()).unwrap(), t);
        let lt = LabeledTree::new(t);
        // reverse every child list
        let mut rev = String::new();
        fn walk(lt: &LabeledTree, v: usize, s: &mut String) {
            s.push('(');
            for &c in lt.children(v).iter().rev() {
                walk(lt, c, s);
            }
            s.push(')');
        }
        walk(&lt, 0, &mut rev);
        assert_eq!(canonicalize(&rev).unwrap(), t);
    }
    for bad in ["", "(", "())", "()()", "(x)", ")("] {
        assert!(canonicalize(bad).is_err(), "{bad:?}");
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn automorphism_counts_match_brute_force() {
    for n in 1..=7 {
        let perms = permutations(n);
        for &t in enumerate_trees(n).iter() {
            let lt = LabeledTree::new(t);
            let count = perms
                .iter()
                .filter(|p| p[0] == 0 && (1..n).all(|v| lt.parent(p[v]) == lt.parent(v).map(|u| p[u])))
                .count();
            assert_eq!(*t.aut(), BigUint::from(count), "{t}");
        }
    }
}

#[test]
fn aut_of_repeated_branches() {
    for base in trees_up_to(4) {
        for k in 1..=4u32 {
            let t = Tree::graft(vec![base; k as usize]);
            let fact: BigUint = (1..=k).map(BigUint::from).product();
            assert_eq!(*t.aut(), fact * base.aut().pow(k), "{base} x {k}");
        }
    }
}

#[test]
fn grouped_combinatorics_match_exhaustive() {
    let mut shapes = trees_up_to(9);
    shapes.extend((2..=12).map(Tree::corolla));
    shapes.push(Tree::partition(&[2, 2, 1, 1]));
    shapes.push(Tree::graft(vec![Tree::corolla(2), Tree::corolla(2), Tree::vertex(), Tree::vertex()]));
    for t in shapes {
        for proper in [false, true] {
            let mut g = prune_leaf_subsets(t, proper);
            g.sort();
            let mut e = prune_leaf_subsets_exhaustive(t, proper);
            e.sort();
            assert_eq!(g, e, "prune {t} proper={proper}");
        }
        let mut g = root_subtree_decompositions(t).to_vec();
        g.sort();
        let mut e = root_subtree_decompositions_exhaustive(t);
        e.sort();
        assert_eq!(g, e, "decompose {t}");
    }
}
