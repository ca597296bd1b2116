//! Truncated tree-indexed series `Σ_T A_T · T / aut(T)`, stored as the map
//! `T ↦ A_T` for trees with at most `order` vertices.

use std::cell::RefCell;
use std::collections::HashMap;

use serde_json::{json, Value};

use crate::algebra::Coefficient;
use crate::error::SeriesError;
use crate::par;
use crate::trees::{
    canonicalize, enumerate_trees, prune_leaf_subsets, root_subtree_decompositions, trees_up_to,
    Tree,
};

#[derive(Debug, Clone, PartialEq)]
pub struct TreeSeries<R: Coefficient> {
    order: usize,
    coeffs: HashMap<Tree, R>,
}

impl<R: Coefficient> TreeSeries<R> {
    pub fn zero(order: usize) -> Self {
        TreeSeries {
            order,
            coeffs: HashMap::new(),
        }
    }

    /// Evaluates `f` on every tree with at most `order` vertices.
    pub fn from_fn<F>(order: usize, f: F) -> Self
    where
        F: Fn(Tree) -> R + Sync + Send,
    {
        let trees = trees_up_to(order);
        let values = par::map_collect(&trees, |&t| f(t));
        let mut s = Self::zero(order);
        for (t, v) in trees.into_iter().zip(values) {
            s.put(t, v);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of nonzero coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, t: Tree) -> Option<&R> {
        self.coeffs.get(&t)
    }

    /// `A_T`, zero when absent.
    pub fn coeff(&self, t: Tree) -> R {
        self.coeffs.get(&t).cloned().unwrap_or_else(R::zero)
    }

    pub fn set(&mut self, t: Tree, value: R) -> Result<(), SeriesError> {
        if t.size() > self.order {
            return Err(SeriesError::BeyondOrder {
                size: t.size(),
                order: self.order,
            });
        }
        self.put(t, value);
        Ok(())
    }

    fn put(&mut self, t: Tree, value: R) {
        debug_assert!(t.size() <= self.order);
        if value.is_zero() {
            self.coeffs.remove(&t);
        } else {
            self.coeffs.insert(t, value);
        }
    }

    /// Nonzero entries sorted by size, then encoding.
    pub fn entries(&self) -> Vec<(Tree, &R)> {
        let mut v: Vec<(Tree, &R)> = self.coeffs.iter().map(|(t, c)| (*t, c)).collect();
        v.sort_by_key(|e| e.0);
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = (Tree, &R)> {
        self.coeffs.iter().map(|(t, c)| (*t, c))
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(Tree, &R) -> S) -> TreeSeries<S> {
        let mut out = TreeSeries::zero(self.order);
        for (t, c) in self.iter() {
            out.put(t, f(t, c));
        }
        out
    }

    pub fn try_map<S: Coefficient, E>(
        &self,
        f: impl Fn(Tree, &R) -> Result<S, E>,
    ) -> Result<TreeSeries<S>, E> {
        let mut out = TreeSeries::zero(self.order);
        for (t, c) in self.entries() {
            out.put(t, f(t, c)?);
        }
        Ok(out)
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (t, c) in other.iter() {
            let v = out.coeff(t).plus(c);
            out.put(t, v);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map(|_, c| c.negate())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|_, a| c.times(a))
    }

    /// Drops every tree with more than `order` vertices.
    pub fn truncate(&self, order: usize) -> Self {
        let mut out = Self::zero(order.min(self.order));
        for (t, c) in self.iter() {
            if t.size() <= order {
                out.put(t, c.clone());
            }
        }
        out
    }

    /// The degree-`n` part `A_n`.
    pub fn homogeneous(&self, n: usize) -> Self {
        let mut out = Self::zero(self.order);
        for (t, c) in self.iter().filter(|(t, _)| t.size() == n) {
            out.put(t, c.clone());
        }
        out
    }

    /// `Σ_α`: multiplies the degree-`n` part by `α^{n-1}`.
    pub fn suspension(&self, alpha: &R) -> Self {
        let powers: Vec<R> = (0..self.order.max(1)).map(|k| alpha.pow(k as u32)).collect();
        self.map(|t, c| powers[t.size() - 1].times(c))
    }

    /// `c · ●`.
    pub fn unit_vertex(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.put(Tree::vertex(), c);
        }
        s
    }

    /// `Crls`: coefficient 1 on every corolla.
    pub fn crls(order: usize) -> Self {
        let mut s = Self::zero(order);
        for k in 0..order {
            s.put(Tree::corolla(k), R::one());
        }
        s
    }

    /// `● ↶ A`: `(● ↶ A)_{B₊(T')} = A_{T'}`, zero when the root does not have
    /// exactly one child.
    pub fn graft_root_single(&self) -> Self {
        let mut out = Self::zero(self.order);
        for (t, c) in self.iter() {
            if t.size() < self.order {
                out.put(Tree::graft(vec![t]), c.clone());
            }
        }
        out
    }

    /// If every nonzero coefficient sits on `●`, that coefficient.
    fn as_vertex_multiple(&self) -> Option<R> {
        match self.coeffs.len() {
            0 => Some(R::zero()),
            1 => self.coeffs.get(&Tree::vertex()).cloned(),
            _ => None,
        }
    }

    /// `Crls ⋄ (A, B)`: the sum over root-containing subtrees `T_0` of `T` of
    /// `A_{T_0}` times the product of `B` over the removed components.
    pub fn diamond_crls(a: &Self, b: &Self) -> Result<Self, SeriesError> {
        a.check_order(b)?;
        let order = a.order;
        if let Some(c) = a.as_vertex_multiple() {
            return Ok(Self::from_fn(order, |t| {
                t.child_groups()
                    .iter()
                    .fold(c.clone(), |acc, (child, m)| acc.times(&b.coeff(*child).pow(*m as u32)))
            }));
        }
        if let Some(c) = b.as_vertex_multiple() {
            let powers: Vec<R> = (0..order.max(1)).map(|k| c.pow(k as u32)).collect();
            return Ok(Self::from_fn(order, |t| {
                prune_leaf_subsets(t, false)
                    .iter()
                    .fold(R::zero(), |acc, e| match a.get(e.tree) {
                        None => acc,
                        Some(at) => acc.plus(
                            &R::from_i64(e.count as i64)
                                .times(&powers[e.removed])
                                .times(at),
                        ),
                    })
            }));
        }
        Ok(Self::from_fn(order, |t| {
            root_subtree_decompositions(t)
                .iter()
                .fold(R::zero(), |acc, d| {
                    let Some(ak) = a.get(d.kept) else {
                        return acc;
                    };
                    let mut term = R::from_i64(d.count as i64).times(ak);
                    for c in &d.components {
                        if term.is_zero() {
                            break;
                        }
                        term = term.times(&b.coeff(*c));
                    }
                    acc.plus(&term)
                })
        }))
    }

    /// `x # y = x + Crls ⋄ (y, x)`.
    pub fn sharp(x: &Self, y: &Self) -> Result<Self, SeriesError> {
        x.add(&Self::diamond_crls(y, x)?)
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .into_iter()
            .map(|(t, c)| json!([t.encoding(), c.to_json()]))
            .collect();
        json!({ "order": self.order, "ring": R::RING, "entries": entries })
    }

    pub fn from_json(v: &Value) -> Result<Self, SeriesError> {
        let fmt = |d: &str| SeriesError::Format(d.to_string());
        let ring = v.get("ring").and_then(Value::as_str).ok_or_else(|| fmt("missing ring"))?;
        if ring != R::RING {
            return Err(SeriesError::RingMismatch {
                expected: R::RING.to_string(),
                found: ring.to_string(),
            });
        }
        let order = v.get("order").and_then(Value::as_u64).ok_or_else(|| fmt("missing order"))? as usize;
        let entries = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| fmt("missing entries"))?;
        let mut s = Self::zero(order);
        for e in entries {
            let pair = e
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| fmt("entry must be [encoding, coefficient]"))?;
            let t = canonicalize(pair[0].as_str().ok_or_else(|| fmt("encoding must be a string"))?)?;
            if s.coeffs.contains_key(&t) {
                return Err(fmt(&format!("duplicate entry for {t}")));
            }
            s.set(t, R::from_json(&pair[1])?)?;
        }
        Ok(s)
    }
}

/// Reads the coefficient of a strictly smaller tree.
pub type Lower<'a, R> = &'a dyn Fn(Tree) -> R;

/// Solves a triangular per-tree recursion degree by degree; trees of one
/// size are computed in parallel and may only read smaller trees.
pub fn solve_by_degree<R, F>(order: usize, step: F) -> TreeSeries<R>
where
    R: Coefficient,
    F: Fn(Tree, Lower<'_, R>) -> R + Sync + Send,
{
    let mut s = TreeSeries::zero(order);
    for n in 1..=order {
        let trees = enumerate_trees(n);
        let sealed = &s;
        let values = par::map_collect(&trees, |&t| step(t, &|u| sealed.coeff(u)));
        for (t, v) in trees.iter().zip(values) {
            s.put(*t, v);
        }
    }
    s
}

/// Solves the same kind of recursion for a single tree, visiting only the
/// trees it actually depends on.
pub fn solve_tree<R, F>(t: Tree, step: &F) -> R
where
    R: Coefficient,
    F: Fn(Tree, Lower<'_, R>) -> R,
{
    fn go<R: Coefficient, F: Fn(Tree, Lower<'_, R>) -> R>(
        t: Tree,
        step: &F,
        memo: &RefCell<HashMap<Tree, R>>,
    ) -> R {
        if let Some(v) = memo.borrow().get(&t) {
            return v.clone();
        }
        let v = step(t, &|u| go(u, step, memo));
        memo.borrow_mut().insert(t, v.clone());
        v
    }
    go(t, step, &RefCell::new(HashMap::new()))
}
