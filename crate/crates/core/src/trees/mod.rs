//! Unlabeled rooted trees, interned and canonically ordered.
//!
//! A [`Tree`] is a cheap handle into a process-wide insert-only table. Two
//! handles are equal iff the trees are isomorphic.

mod combinatorics;
mod enumerate;
mod labeled;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use dashmap::mapref::entry::Entry;
use dashmap::DashMap;
use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::TreeError;

pub use combinatorics::{
    min_vertex_covers_root, prune_leaf_subsets, q_factorial, root_subtree_decompositions,
    prune_leaf_subsets_exhaustive, root_subtree_decompositions_exhaustive, CoverInfo,
    Decomposition, PruneEntry,
};
pub use enumerate::{enumerate_trees, trees_up_to};
pub use labeled::{tree_stats, LabeledTree, TreeStats};

struct Node {
    id: u32,
    children: Box<[Tree]>,
    /// runs of identical children with their multiplicities
    groups: Box<[(Tree, usize)]>,
    size: usize,
    height: usize,
    encoding: Box<str>,
    aut: BigUint,
}

/// Canonical unlabeled rooted tree.
#[derive(Clone, Copy)]
pub struct Tree(&'static Node);

struct Table {
    index: DashMap<Box<[Tree]>, Tree>,
    by_id: RwLock<Vec<Tree>>,
}

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| Table {
        index: DashMap::new(),
        by_id: RwLock::new(Vec::new()),
    })
}

fn factorial_big(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn build_node(id: u32, children: Box<[Tree]>) -> Node {
    let mut groups: Vec<(Tree, usize)> = Vec::new();
    for &c in children.iter() {
        match groups.last_mut() {
            Some((t, m)) if *t == c => *m += 1,
            _ => groups.push((c, 1)),
        }
    }
    let size = 1 + children.iter().map(|c| c.size()).sum::<usize>();
    let height = 1 + children.iter().map(|c| c.height()).max().unwrap_or(0);
    let mut encoding = String::with_capacity(2 * size);
    encoding.push('(');
    for c in children.iter() {
        encoding.push_str(c.encoding());
    }
    encoding.push(')');
    let mut aut = BigUint::one();
    for (t, m) in &groups {
        aut *= factorial_big(*m) * t.aut().pow(*m as u32);
    }
    Node {
        id,
        children,
        groups: groups.into_boxed_slice(),
        size,
        height,
        encoding: encoding.into_boxed_str(),
        aut,
    }
}

impl Tree {
    /// `B₊` applied to a multiset of subtrees, in any order.
    pub fn graft(mut children: Vec<Tree>) -> Tree {
        children.sort();
        let t = table();
        if let Some(found) = t.index.get(children.as_slice()) {
            return *found;
        }
        match t.index.entry(children.into_boxed_slice()) {
            Entry::Occupied(e) => *e.get(),
            Entry::Vacant(e) => {
                let mut by_id = t.by_id.write().expect("tree table poisoned");
                let id = u32::try_from(by_id.len()).expect("tree table overflow");
                let node: &'static Node = Box::leak(Box::new(build_node(id, e.key().clone())));
                let tree = Tree(node);
                by_id.push(tree);
                e.insert(tree);
                tree
            }
        }
    }

    /// The single vertex `●`.
    pub fn vertex() -> Tree {
        static V: OnceLock<Tree> = OnceLock::new();
        *V.get_or_init(|| Tree::graft(Vec::new()))
    }

    /// `Lnr_n`, the chain on `n ≥ 1` vertices.
    pub fn linear(n: usize) -> Tree {
        assert!(n >= 1, "a chain needs at least one vertex");
        (1..n).fold(Tree::vertex(), |t, _| Tree::graft(vec![t]))
    }

    /// `Crl_n`, a root with `n` leaves.
    pub fn corolla(n: usize) -> Tree {
        Tree::graft(vec![Tree::vertex(); n])
    }

    /// `B₊(Lnr_{λ_1}, ..., Lnr_{λ_m})`; the empty partition gives `●`.
    pub fn partition(lambda: &[usize]) -> Tree {
        Tree::graft(lambda.iter().map(|&l| Tree::linear(l)).collect())
    }

    pub fn from_id(id: u32) -> Option<Tree> {
        let by_id = table().by_id.read().expect("tree table poisoned");
        by_id.get(id as usize).copied()
    }

    /// Dense id, stable for the life of the process.
    pub fn id(self) -> u32 {
        self.0.id
    }

    pub fn children(self) -> &'static [Tree] {
        &self.0.children
    }

    /// Distinct children with multiplicities, in canonical order.
    pub fn child_groups(self) -> &'static [(Tree, usize)] {
        &self.0.groups
    }

    /// Number of vertices `#T`.
    pub fn size(self) -> usize {
        self.0.size
    }

    /// Number of vertices on a longest root-to-leaf chain.
    pub fn height(self) -> usize {
        self.0.height
    }

    pub fn encoding(self) -> &'static str {
        &self.0.encoding
    }

    /// Order of the automorphism group.
    pub fn aut(self) -> &'static BigUint {
        &self.0.aut
    }

    pub fn is_vertex(self) -> bool {
        self.0.children.is_empty()
    }

    /// For `T = B₊(T')` returns `T'`.
    pub fn single_child(self) -> Option<Tree> {
        match *self.children() {
            [c] => Some(c),
            _ => None,
        }
    }

    pub fn leaf_count(self) -> usize {
        if self.is_vertex() {
            1
        } else {
            self.children().iter().map(|c| c.leaf_count()).sum()
        }
    }
}

/// Parses a parenthesis encoding (whitespace ignored) into its canonical tree.
pub fn canonicalize(input: &str) -> Result<Tree, TreeError> {
    let malformed = |reason: &str| TreeError::Malformed {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let mut stack: Vec<Vec<Tree>> = Vec::new();
    let mut root: Option<Tree> = None;
    for ch in input.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '(' => {
                if root.is_some() {
                    return Err(malformed("more than one root"));
                }
                stack.push(Vec::new());
            }
            ')' => {
                let children = stack.pop().ok_or_else(|| malformed("unbalanced ')'"))?;
                let t = Tree::graft(children);
                match stack.last_mut() {
                    Some(parent) => parent.push(t),
                    None => root = Some(t),
                }
            }
            other => return Err(malformed(&format!("unexpected character {other:?}"))),
        }
    }
    if !stack.is_empty() {
        return Err(malformed("unclosed '('"));
    }
    root.ok_or_else(|| malformed("empty input"))
}

impl FromStr for Tree {
    type Err = TreeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        canonicalize(s)
    }
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for Tree {}

impl Hash for Tree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state);
    }
}

/// Shortlex on encodings, i.e. by size then by encoding.
impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        self.size()
            .cmp(&other.size())
            .then_with(|| self.encoding().cmp(other.encoding()))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.encoding())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({})", self.encoding())
    }
}

impl Serialize for Tree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.encoding())
    }
}

impl<'de> Deserialize<'de> for Tree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        canonicalize(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encodings() {
        assert_eq!(Tree::vertex().encoding(), "()");
        assert_eq!(Tree::corolla(2).encoding(), "(()())");
        assert_eq!(Tree::linear(3).encoding(), "((()))");
        let a = Tree::graft(vec![Tree::corolla(2), Tree::vertex()]);
        let b = Tree::graft(vec![Tree::vertex(), Tree::corolla(2)]);
        assert_eq!(a, b);
        assert_eq!(a.encoding(), "(()(()()))");
        assert_eq!(canonicalize("( (()()) () )").unwrap(), a);
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "(", ")", "(()", "())", "()()", "(x)"] {
            assert!(canonicalize(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn cached_fields() {
        let t = canonicalize("(()(()()))").unwrap();
        assert_eq!(t.size(), 5);
        assert_eq!(t.height(), 3);
        assert_eq!(t.leaf_count(), 3);
        assert_eq!(*t.aut(), BigUint::from(2u32));
        assert_eq!(*Tree::corolla(5).aut(), BigUint::from(120u32));
        assert_eq!(*Tree::linear(6).aut(), BigUint::one());
        assert_eq!(Tree::from_id(t.id()), Some(t));
        assert_eq!(Tree::partition(&[]), Tree::vertex());
        assert_eq!(Tree::partition(&[1]), Tree::linear(2));
        assert_eq!(Tree::partition(&[2, 1]).size(), 4);
    }

    #[test]
    fn ordering_is_shortlex() {
        let mut v = [Tree::corolla(2), Tree::linear(2), Tree::linear(3), Tree::vertex()];
        v.sort();
        let enc: Vec<_> = v.iter().map(|t| t.encoding()).collect();
        assert_eq!(enc, ["()", "(())", "((()))", "(()())"]);
    }
}
