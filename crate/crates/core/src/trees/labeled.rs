use std::collections::BTreeMap;

use super::Tree;

/// The canonical representative of a tree with vertices numbered in preorder
/// (root is 0, children visited in canonical order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl LabeledTree {
    pub fn new(t: Tree) -> Self {
        let mut lt = LabeledTree {
            parent: Vec::with_capacity(t.size()),
            children: Vec::with_capacity(t.size()),
        };
        lt.push(t, None);
        lt
    }

    fn push(&mut self, t: Tree, parent: Option<usize>) -> usize {
        let v = self.parent.len();
        self.parent.push(parent);
        self.children.push(Vec::new());
        for &c in t.children() {
            let w = self.push(c, Some(v));
            self.children[v].push(w);
        }
        v
    }

    /// Builds from a parent array where `parent[0]` is `None` and every other
    /// entry points to a smaller index.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Option<Self> {
        let n = parent.len();
        if n == 0 || parent[0].is_some() {
            return None;
        }
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate().skip(1) {
            match p {
                Some(p) if *p < v => children[*p].push(v),
                _ => return None,
            }
        }
        Some(LabeledTree { parent, children })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    /// Leaves in preorder; a lone root counts as a leaf.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.is_leaf(v)).collect()
    }

    /// Edges as `(parent, child)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..self.len())
            .map(|v| (self.parent[v].expect("non-root vertex"), v))
            .collect()
    }

    /// Depth counted in vertices: the root has height 1.
    pub fn vertex_height(&self, v: usize) -> usize {
        let mut h = 1;
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            h += 1;
            cur = p;
        }
        h
    }

    /// Canonical class of the subtree hanging from `v`.
    pub fn subtree(&self, v: usize) -> Tree {
        Tree::graft(self.children[v].iter().map(|&c| self.subtree(c)).collect())
    }

    /// Canonical class of the part of the subtree at `v` that lies in `keep`.
    /// `v` itself must be kept.
    pub fn induced(&self, v: usize, keep: &[bool]) -> Tree {
        Tree::graft(
            self.children[v]
                .iter()
                .filter(|&&c| keep[c])
                .map(|&c| self.induced(c, keep))
                .collect(),
        )
    }

    pub fn subtree_size(&self, v: usize) -> usize {
        1 + self.children[v]
            .iter()
            .map(|&c| self.subtree_size(c))
            .sum::<usize>()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStats {
    pub height: usize,
    pub leaf_count: usize,
    /// preorder positions in the canonical representative
    pub leaf_positions: Vec<usize>,
    /// vertex height (root = 1) to number of vertices at that height
    pub height_histogram: BTreeMap<usize, usize>,
    /// sizes of the subtrees rooted at each vertex, ascending
    pub subtree_sizes: Vec<usize>,
}

pub fn tree_stats(t: Tree) -> TreeStats {
    let lt = LabeledTree::new(t);
    let leaf_positions = lt.leaves();
    let mut height_histogram = BTreeMap::new();
    for v in 0..lt.len() {
        *height_histogram.entry(lt.vertex_height(v)).or_insert(0) += 1;
    }
    let mut subtree_sizes: Vec<usize> = (0..lt.len()).map(|v| lt.subtree_size(v)).collect();
    subtree_sizes.sort_unstable();
    TreeStats {
        height: t.height(),
        leaf_count: leaf_positions.len(),
        leaf_positions,
        height_histogram,
        subtree_sizes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::canonicalize;

    #[test]
    fn stats_examples() {
        let fig = canonicalize("(()(()()))").unwrap();
        let s = tree_stats(fig);
        assert_eq!(s.height, 3);
        assert_eq!(s.leaf_count, 3);
        assert_eq!(s.leaf_positions, vec![1, 3, 4]);
        assert_eq!(s.height_histogram, BTreeMap::from([(1, 1), (2, 2), (3, 2)]));
        assert_eq!(s.subtree_sizes, vec![1, 1, 1, 3, 5]);

        let l4 = tree_stats(Tree::linear(4));
        assert_eq!((l4.height, l4.leaf_count), (4, 1));
        let c3 = tree_stats(Tree::corolla(3));
        assert_eq!((c3.height, c3.leaf_count), (2, 3));
    }

    #[test]
    fn representative_round_trips() {
        for t in crate::trees::trees_up_to(7) {
            let lt = LabeledTree::new(t);
            assert_eq!(lt.subtree(0), t);
            assert_eq!(lt.induced(0, &vec![true; lt.len()]), t);
            let rebuilt = LabeledTree::from_parents((0..lt.len()).map(|v| lt.parent(v)).collect()).unwrap();
            assert_eq!(rebuilt, lt);
        }
    }
}
