use std::sync::{Arc, Mutex};

use super::Tree;

fn memo() -> &'static Mutex<Vec<Arc<Vec<Tree>>>> {
    static MEMO: Mutex<Vec<Arc<Vec<Tree>>>> = Mutex::new(Vec::new());
    &MEMO
}

/// All isomorphism classes of rooted trees with `n` vertices, sorted.
/// Empty for `n = 0`.
pub fn enumerate_trees(n: usize) -> Arc<Vec<Tree>> {
    if n == 0 {
        return Arc::new(Vec::new());
    }
    let mut memo = memo().lock().expect("enumeration memo poisoned");
    while memo.len() < n {
        let size = memo.len() + 1;
        let level = if size == 1 {
            vec![Tree::vertex()]
        } else {
            // smaller trees in canonical order; forests are nondecreasing runs
            let pool: Vec<Tree> = memo.iter().flat_map(|v| v.iter().copied()).collect();
            let mut out = Vec::new();
            let mut forest = Vec::new();
            forests(&pool, 0, size - 1, &mut forest, &mut out);
            out.sort();
            out
        };
        memo.push(Arc::new(level));
    }
    memo[n - 1].clone()
}

fn forests(pool: &[Tree], start: usize, remaining: usize, forest: &mut Vec<Tree>, out: &mut Vec<Tree>) {
    if remaining == 0 {
        out.push(Tree::graft(forest.clone()));
        return;
    }
    for (i, &t) in pool.iter().enumerate().skip(start) {
        if t.size() > remaining {
            break;
        }
        forest.push(t);
        forests(pool, i, remaining - t.size(), forest, out);
        forest.pop();
    }
}

/// Every tree with at most `n` vertices, by size then encoding.
pub fn trees_up_to(n: usize) -> Vec<Tree> {
    (1..=n).flat_map(|k| enumerate_trees(k).iter().copied().collect::<Vec<_>>()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]);
    }

    #[test]
    fn sorted_and_distinct() {
        for n in 1..=8 {
            let v = enumerate_trees(n);
            assert!(v.windows(2).all(|w| w[0] < w[1]));
            assert!(v.iter().all(|t| t.size() == n));
        }
        let three: Vec<_> = enumerate_trees(3).iter().map(|t| t.encoding()).collect();
        assert_eq!(three, ["((()))", "(()())"]);
    }
}
