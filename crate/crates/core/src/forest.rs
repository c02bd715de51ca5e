//! Ordered trees and forests, exhaustive generators and the parenthesis encoding.
//!
//! Encoding grammar (bit-exact):
//!
//! ```text
//! forest := tree (";" tree)* | ""
//! tree   := "o" | "(" tree+ ")"
//! ```
//!
//! A leaf is `o`; an internal vertex is its children wrapped in parentheses.
//! Generation order is canonical: compositions of the internal-vertex count are
//! enumerated lexicographically and subtrees vary left-to-right.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::counting::VecProfile;
use crate::error::{Error, Result};

/// An ordered rooted tree. A vertex without children is a leaf.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tree {
    pub children: Vec<Tree>,
}

impl Tree {
    pub fn leaf() -> Self {
        Tree { children: Vec::new() }
    }

    pub fn node(children: Vec<Tree>) -> Self {
        Tree { children }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn internal_count(&self) -> usize {
        if self.is_leaf() {
            0
        } else {
            1 + self.children.iter().map(Tree::internal_count).sum::<usize>()
        }
    }

    pub fn leaf_count(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(Tree::leaf_count).sum()
        }
    }

    /// Depth of the deepest vertex; a lone leaf has depth 0.
    pub fn height(&self) -> usize {
        self.children.iter().map(|c| c.height() + 1).max().unwrap_or(0)
    }

    pub fn get(&self, path: &[usize]) -> Option<&Tree> {
        path.iter().try_fold(self, |t, &i| t.children.get(i))
    }

    pub fn get_mut(&mut self, path: &[usize]) -> Option<&mut Tree> {
        path.iter().try_fold(self, |t, &i| t.children.get_mut(i))
    }

    fn count_outdegrees(&self, tally: &mut Vec<usize>) {
        let d = self.children.len();
        if tally.len() <= d {
            tally.resize(d + 1, 0);
        }
        tally[d] += 1;
        for c in &self.children {
            c.count_outdegrees(tally);
        }
    }

    fn encode_into(&self, out: &mut String) {
        if self.is_leaf() {
            out.push('o');
        } else {
            out.push('(');
            for c in &self.children {
                c.encode_into(out);
            }
            out.push(')');
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.encode_into(&mut s);
        f.write_str(&s)
    }
}

/// An ordered sequence of trees. The empty forest has no components.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Forest {
    pub trees: Vec<Tree>,
}

impl Forest {
    pub fn new(trees: Vec<Tree>) -> Self {
        Forest { trees }
    }

    /// `gamma` lone leaves.
    pub fn all_leaves(gamma: usize) -> Self {
        Forest { trees: vec![Tree::leaf(); gamma] }
    }

    pub fn components(&self) -> usize {
        self.trees.len()
    }

    pub fn internal_count(&self) -> usize {
        self.trees.iter().map(Tree::internal_count).sum()
    }

    pub fn leaf_count(&self) -> usize {
        count_leaves(self)
    }

    /// Depth of the deepest vertex, all roots sitting at depth 0. `None` when empty.
    pub fn max_depth(&self) -> Option<usize> {
        self.trees.iter().map(Tree::height).max()
    }

    pub fn get(&self, addr: &VertexAddr) -> Option<&Tree> {
        self.trees.get(addr.component)?.get(&addr.path)
    }

    pub fn get_mut(&mut self, addr: &VertexAddr) -> Option<&mut Tree> {
        self.trees.get_mut(addr.component)?.get_mut(&addr.path)
    }

    /// `tally[d]` = number of vertices with outdegree `d`.
    pub fn outdegree_tally(&self) -> Vec<usize> {
        let mut tally = Vec::new();
        for t in &self.trees {
            t.count_outdegrees(&mut tally);
        }
        tally
    }

    /// Vertices grouped by depth. Within a level, vertices appear left to
    /// right across the whole forest: component by component, and in each
    /// component in left-to-right order.
    pub fn levels(&self) -> Vec<Vec<VertexAddr>> {
        let mut levels: Vec<Vec<VertexAddr>> = Vec::new();
        let mut frontier: Vec<(VertexAddr, &Tree)> = self
            .trees
            .iter()
            .enumerate()
            .map(|(i, t)| (VertexAddr::root(i), t))
            .collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (addr, t) in &frontier {
                for (i, c) in t.children.iter().enumerate() {
                    next.push((addr.child(i), c));
                }
            }
            levels.push(frontier.into_iter().map(|(a, _)| a).collect());
            frontier = next;
        }
        levels
    }

    /// Addresses of all leaves in preorder.
    pub fn leaves(&self) -> Vec<VertexAddr> {
        fn walk(t: &Tree, addr: VertexAddr, out: &mut Vec<VertexAddr>) {
            if t.is_leaf() {
                out.push(addr);
            } else {
                for (i, c) in t.children.iter().enumerate() {
                    walk(c, addr.child(i), out);
                }
            }
        }
        let mut out = Vec::new();
        for (i, t) in self.trees.iter().enumerate() {
            walk(t, VertexAddr::root(i), &mut out);
        }
        out
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode(self))
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode(self))
    }
}

/// Position of a vertex: component index plus child indices from its root.
///
/// The derived order, restricted to one depth, is the left-to-right level order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexAddr {
    pub component: usize,
    pub path: Vec<usize>,
}

impl VertexAddr {
    pub fn root(component: usize) -> Self {
        VertexAddr { component, path: Vec::new() }
    }

    pub fn child(&self, index: usize) -> Self {
        let mut path = self.path.clone();
        path.push(index);
        VertexAddr { component: self.component, path }
    }

    pub fn depth(&self) -> usize {
        self.path.len()
    }
}

/// `component:i.j.k`, or `component:` for a root.
impl fmt::Display for VertexAddr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.component)?;
        for (k, i) in self.path.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Number of childless vertices.
pub fn count_leaves(f: &Forest) -> usize {
    f.trees.iter().map(Tree::leaf_count).sum()
}

/// Weak compositions of `total` into `parts` parts, lexicographic.
pub(crate) fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Every `choice[i]` drawn from `options[i]`, last index varying fastest.
fn cartesian<T: Clone>(options: &[&[T]]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for prefix in &out {
            for o in opts.iter() {
                let mut v = prefix.clone();
                v.push(o.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// All β-ary trees with exactly `n` internal vertices, canonical order.
pub fn generate_kary(beta: usize, n: usize) -> Result<Vec<Tree>> {
    Ok(kary_table(beta, n)?.swap_remove(n))
}

// table[m] = all β-ary trees with m internal vertices.
fn kary_table(beta: usize, n: usize) -> Result<Vec<Vec<Tree>>> {
    if beta == 0 {
        return Err(Error::ZeroArity);
    }
    let mut table: Vec<Vec<Tree>> = vec![vec![Tree::leaf()]];
    for m in 1..=n {
        let mut trees = Vec::new();
        for comp in compositions(m - 1, beta) {
            let opts: Vec<&[Tree]> = comp.iter().map(|&k| table[k].as_slice()).collect();
            trees.extend(cartesian(&opts).into_iter().map(Tree::node));
        }
        table.push(trees);
    }
    Ok(table)
}

/// All ordered forests of `gamma` β-ary trees with `n` internal vertices in total.
pub fn generate_forests(beta: usize, n: usize, gamma: usize) -> Result<Vec<Forest>> {
    let table = kary_table(beta, n)?;
    let mut out = Vec::new();
    for comp in compositions(n, gamma) {
        let opts: Vec<&[Tree]> = comp.iter().map(|&k| table[k].as_slice()).collect();
        out.extend(cartesian(&opts).into_iter().map(Forest::new));
    }
    Ok(out)
}

/// Vector compositions: ways to split `total` into `parts` vectors, lexicographic.
fn vector_compositions(total: &[usize], parts: usize) -> Vec<Vec<Vec<usize>>> {
    // Split each coordinate independently, then combine.
    let per_coord: Vec<Vec<Vec<usize>>> = total.iter().map(|&t| compositions(t, parts)).collect();
    let opts: Vec<&[Vec<usize>]> = per_coord.iter().map(Vec::as_slice).collect();
    cartesian(&opts)
        .into_iter()
        .map(|choice| {
            (0..parts)
                .map(|part| choice.iter().map(|coord| coord[part]).collect())
                .collect()
        })
        .collect()
}

struct MixedGen<'a> {
    outdegrees: &'a [usize],
    memo: alloc::collections::BTreeMap<Vec<usize>, Vec<Tree>>,
}

impl MixedGen<'_> {
    fn trees(&mut self, counts: &[usize]) -> Vec<Tree> {
        if let Some(hit) = self.memo.get(counts) {
            return hit.clone();
        }
        let mut out = Vec::new();
        if counts.iter().all(|&c| c == 0) {
            out.push(Tree::leaf());
        } else {
            for j in 0..counts.len() {
                if counts[j] == 0 {
                    continue;
                }
                let mut rest = counts.to_vec();
                rest[j] -= 1;
                for split in vector_compositions(&rest, self.outdegrees[j]) {
                    let subtrees: Vec<Vec<Tree>> = split.iter().map(|c| self.trees(c)).collect();
                    let opts: Vec<&[Tree]> = subtrees.iter().map(Vec::as_slice).collect();
                    out.extend(cartesian(&opts).into_iter().map(Tree::node));
                }
            }
        }
        self.memo.insert(counts.to_vec(), out.clone());
        out
    }
}

/// All ordered forests with `gamma` components in which exactly `n_j` internal
/// vertices have outdegree `p_j` and every other vertex is a leaf.
pub fn generate_mixed_forests(profile: &VecProfile, gamma: usize) -> Result<Vec<Forest>> {
    let mut gen = MixedGen { outdegrees: profile.outdegrees(), memo: Default::default() };
    let mut out = Vec::new();
    if gamma == 0 {
        if profile.is_zero() {
            out.push(Forest::default());
        }
        return Ok(out);
    }
    for split in vector_compositions(profile.counts(), gamma) {
        let per: Vec<Vec<Tree>> = split.iter().map(|c| gen.trees(c)).collect();
        let opts: Vec<&[Tree]> = per.iter().map(Vec::as_slice).collect();
        out.extend(cartesian(&opts).into_iter().map(Forest::new));
    }
    Ok(out)
}

pub fn encode(f: &Forest) -> String {
    let mut out = String::new();
    for (i, t) in f.trees.iter().enumerate() {
        if i > 0 {
            out.push(';');
        }
        t.encode_into(&mut out);
    }
    out
}

pub fn decode(s: &str) -> Result<Forest> {
    let mut p = Parser { bytes: s.as_bytes(), pos: 0 };
    let forest = p.forest()?;
    if p.pos != p.bytes.len() {
        return Err(p.error("trailing input"));
    }
    Ok(forest)
}

pub(crate) struct Parser<'a> {
    pub(crate) bytes: &'a [u8],
    pub(crate) pos: usize,
}

impl Parser<'_> {
    pub(crate) fn error(&self, msg: &'static str) -> Error {
        Error::Syntax { pos: self.pos, msg }
    }

    pub(crate) fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    pub(crate) fn forest(&mut self) -> Result<Forest> {
        let mut trees = Vec::new();
        if self.peek().is_none() {
            return Ok(Forest::default());
        }
        trees.push(self.tree(&mut |_, _| Ok(()))?);
        while self.peek() == Some(b';') {
            self.pos += 1;
            trees.push(self.tree(&mut |_, _| Ok(()))?);
        }
        Ok(Forest::new(trees))
    }

    /// Parses one tree. `on_leaf` sees every leaf's path and may consume a suffix.
    pub(crate) fn tree(
        &mut self,
        on_leaf: &mut dyn FnMut(&mut Self, &[usize]) -> Result<()>,
    ) -> Result<Tree> {
        let mut path = Vec::new();
        self.tree_at(&mut path, on_leaf)
    }

    fn tree_at(
        &mut self,
        path: &mut Vec<usize>,
        on_leaf: &mut dyn FnMut(&mut Self, &[usize]) -> Result<()>,
    ) -> Result<Tree> {
        match self.peek() {
            Some(b'o') => {
                self.pos += 1;
                on_leaf(self, path)?;
                Ok(Tree::leaf())
            }
            Some(b'(') => {
                self.pos += 1;
                let mut children = Vec::new();
                while self.peek() != Some(b')') {
                    if self.peek().is_none() {
                        return Err(self.error("unclosed '('"));
                    }
                    path.push(children.len());
                    let child = self.tree_at(path, on_leaf)?;
                    path.pop();
                    children.push(child);
                }
                if children.is_empty() {
                    return Err(self.error("internal vertex without children"));
                }
                self.pos += 1;
                Ok(Tree::node(children))
            }
            Some(_) => Err(self.error("expected 'o' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Cheap upper bound check before materializing `estimate` structures.
pub fn ensure_within(estimate: u128, limit: u64) -> Result<()> {
    if estimate > u128::from(limit) {
        Err(Error::TooManyStructures { estimate, limit })
    } else {
        Ok(())
    }
}
