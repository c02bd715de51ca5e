//! Colored planted forests and the sign-reversing involution on them.
//!
//! A [`ColoredForest`] is a forest with `γ` components, some number of planted
//! roots sitting above the first component, and a coloring of a subset of
//! leaves and planted roots with colors `1..=t`. Planted roots have no depth
//! and are never candidates or incumbents; they only carry colors.
//!
//! Levels are forest-global: all component roots are at depth 0, and "to the
//! left" at depth `d` means earlier in the component-major, left-to-right
//! order of depth-`d` vertices. With `D` the maximum depth:
//!
//! - **first class**: some colored leaf at depth `D` or `D-1` has no vertex with
//!   children to its left on its level. The candidate is such a leaf at the
//!   greatest depth, leftmost among those.
//! - **second class**: otherwise, if no leaf at depth `D` is colored and some
//!   internal vertex at depth `D-1` has no colored leaf to its left, the
//!   leftmost one is the incumbent.
//! - **exceptional**: neither; this happens exactly when no forest leaf is
//!   colored and there are no internal vertices.
//!
//! The map attaches `p_j` fresh leaves to a candidate of color `j` and uncolors
//! it, or deletes the children of an incumbent of outdegree `p_j` and colors it
//! `j`. It changes the colored count by one, so it reverses the weight
//! `(-1)^(colored leaves + colored planted roots)`.
//!
//! Text encoding, extending the forest grammar:
//!
//! ```text
//! colored := planted? forest
//! planted := "P[" count ":" mark ("," mark)* "]|"
//! mark    := "-" | "*" | digits
//! leaf    := "o" | "o*" | "o*" digits
//! ```
//!
//! `-` is an uncolored planted root. With a single color, colored objects are
//! written `*`; with several colors, `*j` (leaves) and `j` (planted roots).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_traits::ToPrimitive;

use crate::counting::{catalan_gen, catalan_vector, VecProfile};
use crate::error::{Error, Result};
use crate::exact::{binom, multinomial, Rat};
use crate::forest::{self, generate_forests, generate_mixed_forests, Forest, Parser, Tree, VertexAddr};

/// A color in `1..=t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Color(pub u8);

impl Color {
    fn index(self) -> usize {
        usize::from(self.0) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredForest {
    pub forest: Forest,
    /// Number of colors `t`; 1 in the scalar scheme.
    pub palette: u8,
    pub leaf_colors: BTreeMap<VertexAddr, Color>,
    /// One entry per planted root.
    pub root_colors: Vec<Option<Color>>,
}

impl ColoredForest {
    pub fn uncolored(forest: Forest, planted: usize, palette: u8) -> Self {
        ColoredForest { forest, palette, leaf_colors: BTreeMap::new(), root_colors: vec![None; planted] }
    }

    pub fn planted(&self) -> usize {
        self.root_colors.len()
    }

    pub fn internal_count(&self) -> usize {
        self.forest.internal_count()
    }

    pub fn colored_leaves(&self) -> usize {
        self.leaf_colors.len()
    }

    pub fn colored_roots(&self) -> usize {
        self.root_colors.iter().flatten().count()
    }

    /// Colored leaves plus colored planted roots.
    pub fn colored_count(&self) -> usize {
        self.colored_leaves() + self.colored_roots()
    }

    /// `(-1)^colored_count`.
    pub fn weight(&self) -> i64 {
        if self.colored_count().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of colored objects per color.
    pub fn color_tally(&self) -> Vec<usize> {
        let mut tally = vec![0; usize::from(self.palette)];
        for c in self.leaf_colors.values().chain(self.root_colors.iter().flatten()) {
            tally[c.index()] += 1;
        }
        tally
    }

    /// Checks that only existing leaves are colored and colors are in range.
    pub fn validate(&self) -> Result<()> {
        for (addr, c) in &self.leaf_colors {
            match self.forest.get(addr) {
                Some(t) if t.is_leaf() => {}
                _ => return Err(Error::Syntax { pos: 0, msg: "colored vertex is not a leaf" }),
            }
            self.check_color(*c)?;
        }
        for c in self.root_colors.iter().flatten() {
            self.check_color(*c)?;
        }
        Ok(())
    }

    fn check_color(&self, c: Color) -> Result<()> {
        if c.0 == 0 || c.0 > self.palette {
            Err(Error::ColorOutOfRange(c.0))
        } else {
            Ok(())
        }
    }

    fn is_colored_leaf(&self, addr: &VertexAddr) -> bool {
        self.leaf_colors.contains_key(addr)
    }

    fn has_children(&self, addr: &VertexAddr) -> bool {
        self.forest.get(addr).is_some_and(|t| !t.is_leaf())
    }
}

impl fmt::Display for ColoredForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_colored(self))
    }
}

impl fmt::Debug for ColoredForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_colored(self))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Classification {
    First { candidate: VertexAddr },
    Second { incumbent: VertexAddr },
    Exceptional,
}

impl Classification {
    /// 1, 2, or 0 for exceptional.
    pub fn class_index(&self) -> u8 {
        match self {
            Classification::First { .. } => 1,
            Classification::Second { .. } => 2,
            Classification::Exceptional => 0,
        }
    }
}

pub fn classify(c: &ColoredForest) -> Classification {
    let levels = c.forest.levels();
    let Some(bottom) = levels.len().checked_sub(1) else {
        return Classification::Exceptional;
    };

    // Deepest level first, then the one above.
    for depth in [Some(bottom), bottom.checked_sub(1)].into_iter().flatten() {
        let mut blocked = false;
        for v in &levels[depth] {
            if !blocked && c.is_colored_leaf(v) {
                return Classification::First { candidate: v.clone() };
            }
            blocked |= c.has_children(v);
        }
    }

    // Every colored leaf on the bottom level is a candidate, so none is colored here.
    if let Some(above) = bottom.checked_sub(1) {
        let mut blocked = false;
        for v in &levels[above] {
            if !blocked && c.has_children(v) {
                return Classification::Second { incumbent: v.clone() };
            }
            blocked |= c.is_colored_leaf(v);
        }
    }
    Classification::Exceptional
}

/// Applies the involution with outdegrees `p` (color `j` ↔ outdegree `p[j-1]`).
/// The scalar scheme passes `p = [β]`.
pub fn involute(c: &ColoredForest, p: &[usize]) -> Result<ColoredForest> {
    let mut out = c.clone();
    match classify(c) {
        Classification::First { candidate } => {
            let color = out.leaf_colors.remove(&candidate).expect("candidate is colored");
            let arity = *p.get(color.index()).ok_or(Error::ColorOutOfRange(color.0))?;
            let vertex = out.forest.get_mut(&candidate).expect("candidate exists");
            vertex.children = vec![Tree::leaf(); arity];
        }
        Classification::Second { incumbent } => {
            let vertex = out.forest.get_mut(&incumbent).expect("incumbent exists");
            let outdegree = vertex.children.len();
            let class = p
                .iter()
                .position(|&d| d == outdegree)
                .ok_or(Error::OutdegreeNotInProfile { addr: incumbent.clone(), outdegree })?;
            debug_assert!(vertex.children.iter().all(Tree::is_leaf));
            vertex.children.clear();
            let color = u8::try_from(class + 1).map_err(|_| Error::ColorOutOfRange(u8::MAX))?;
            out.leaf_colors.insert(incumbent, Color(color));
        }
        Classification::Exceptional => return Err(Error::Exceptional),
    }
    Ok(out)
}

/// Lexicographic k-subsets of `0..n`.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// All ways to give `counts[j]` of `objects` objects color `j+1`, the rest uncolored.
fn colorings(objects: usize, counts: &[usize]) -> Vec<Vec<Option<Color>>> {
    let mut out = vec![vec![None; objects]];
    for (j, &k) in counts.iter().enumerate() {
        let color = Color(u8::try_from(j + 1).expect("palette fits in u8"));
        let mut next = Vec::new();
        for partial in &out {
            let free: Vec<usize> = (0..objects).filter(|&i| partial[i].is_none()).collect();
            for pick in subsets(free.len(), k) {
                let mut v = partial.clone();
                for i in pick {
                    v[free[i]] = Some(color);
                }
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn color_forests(forests: Vec<Forest>, planted: usize, counts: &[usize]) -> Vec<ColoredForest> {
    let palette = u8::try_from(counts.len()).expect("palette fits in u8");
    let mut out = Vec::new();
    for f in forests {
        let leaves = f.leaves();
        for coloring in colorings(leaves.len() + planted, counts) {
            let mut c = ColoredForest::uncolored(f.clone(), planted, palette);
            for (i, color) in coloring.into_iter().enumerate() {
                let Some(color) = color else { continue };
                match leaves.get(i) {
                    Some(addr) => {
                        c.leaf_colors.insert(addr.clone(), color);
                    }
                    None => c.root_colors[i - leaves.len()] = Some(color),
                }
            }
            out.push(c);
        }
    }
    out
}

fn check_planting(gamma: usize, alpha: usize) -> Result<()> {
    if gamma == 0 {
        return Err(Error::NoComponents);
    }
    if alpha < gamma {
        return Err(Error::AlphaBelowGamma { alpha, gamma });
    }
    Ok(())
}

fn to_u128(r: &Rat) -> u128 {
    r.numer().to_u128().unwrap_or(u128::MAX)
}

/// Closed-form size of [`enumerate_colored`]'s output.
pub fn colored_count_estimate(beta: usize, n_internal: usize, n_colored: usize, gamma: usize, alpha: usize) -> u128 {
    let objects = Rat::from((beta.saturating_sub(1)) * n_internal + alpha);
    let count = binom(&objects, n_colored) * catalan_gen(n_internal, &Rat::from(beta), &Rat::from(gamma));
    to_u128(&count)
}

/// All `(α-γ)`-planted β-ary forests with `gamma` components, `n_internal`
/// internal vertices and exactly `n_colored` colored leaves and planted roots.
pub fn enumerate_colored(
    beta: usize,
    n_internal: usize,
    n_colored: usize,
    gamma: usize,
    alpha: usize,
) -> Result<Vec<ColoredForest>> {
    check_planting(gamma, alpha)?;
    let forests = generate_forests(beta, n_internal, gamma)?;
    Ok(color_forests(forests, alpha - gamma, &[n_colored]))
}

/// The vector scheme: internal counts from `internal` (outdegrees `p`), and
/// `colored[j]` objects of color `j+1`.
pub fn enumerate_colored_vector(
    internal: &VecProfile,
    colored: &[usize],
    gamma: usize,
    alpha: usize,
) -> Result<Vec<ColoredForest>> {
    check_planting(gamma, alpha)?;
    if colored.len() != internal.classes() {
        return Err(Error::InvalidProfile("one colored count per outdegree class"));
    }
    let forests = generate_mixed_forests(internal, gamma)?;
    Ok(color_forests(forests, alpha - gamma, colored))
}

pub fn colored_vector_estimate(internal: &VecProfile, colored: &[usize], gamma: usize, alpha: usize) -> u128 {
    let objects = Rat::from(internal.dot_p_minus_one() + alpha);
    to_u128(&(multinomial(&objects, colored) * catalan_vector(internal, gamma)))
}

/// Structures contributing to the alternating sum at index `n`: for each
/// `i`, `n-i` internal vertices and `i` colored objects.
pub fn scalar_structures(beta: usize, n: usize, gamma: usize, alpha: usize, limit: u64) -> Result<Vec<ColoredForest>> {
    check_planting(gamma, alpha)?;
    let estimate = (0..=n).map(|i| colored_count_estimate(beta, n - i, i, gamma, alpha)).fold(0u128, u128::saturating_add);
    forest::ensure_within(estimate, limit)?;
    let mut all = Vec::new();
    for i in 0..=n {
        all.extend(enumerate_colored(beta, n - i, i, gamma, alpha)?);
    }
    Ok(all)
}

/// The vector analogue: for every `i⃗ ≤ n⃗`, internal counts `n⃗-i⃗` and `i_j` objects of color `j`.
pub fn vector_structures(profile: &VecProfile, gamma: usize, alpha: usize, limit: u64) -> Result<Vec<ColoredForest>> {
    check_planting(gamma, alpha)?;
    let splits = sub_vectors(profile.counts());
    let mut estimate = 0u128;
    for i in &splits {
        let rest = profile.with_counts(profile.counts().iter().zip(i).map(|(n, i)| n - i).collect())?;
        estimate = estimate.saturating_add(colored_vector_estimate(&rest, i, gamma, alpha));
    }
    forest::ensure_within(estimate, limit)?;
    let mut all = Vec::new();
    for i in &splits {
        let rest = profile.with_counts(profile.counts().iter().zip(i).map(|(n, i)| n - i).collect())?;
        all.extend(enumerate_colored_vector(&rest, i, gamma, alpha)?);
    }
    Ok(all)
}

/// All vectors `0⃗ ≤ i⃗ ≤ n⃗`, lexicographic.
pub(crate) fn sub_vectors(n: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &bound in n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..=bound).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

fn weighted_total(structures: &[ColoredForest]) -> Rat {
    Rat::int(structures.iter().map(ColoredForest::weight).sum())
}

/// The alternating sum `Σ_i (-1)^i |enumerate_colored(β, n-i, i, γ, α)|`,
/// evaluated by enumerating and weighting every structure.
pub fn signed_sum(beta: usize, n: usize, gamma: usize, alpha: usize) -> Result<Rat> {
    signed_sum_with_limit(beta, n, gamma, alpha, crate::DEFAULT_MAX_STRUCTS)
}

pub fn signed_sum_with_limit(beta: usize, n: usize, gamma: usize, alpha: usize, limit: u64) -> Result<Rat> {
    Ok(weighted_total(&scalar_structures(beta, n, gamma, alpha, limit)?))
}

pub fn signed_sum_vector(profile: &VecProfile, gamma: usize, alpha: usize) -> Result<Rat> {
    signed_sum_vector_with_limit(profile, gamma, alpha, crate::DEFAULT_MAX_STRUCTS)
}

pub fn signed_sum_vector_with_limit(profile: &VecProfile, gamma: usize, alpha: usize, limit: u64) -> Result<Rat> {
    Ok(weighted_total(&vector_structures(profile, gamma, alpha, limit)?))
}

/// Why a proposed signed matching is not one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MatchingFailure<S> {
    /// The partner map is undefined or errs on this structure.
    Unmatched(S),
    /// The partner lies outside the set.
    NotClosed(S),
    FixedPoint(S),
    NotInvolution(S),
    WeightNotReversed(S),
    ClassNotSwapped(S),
}

/// Checks that `partner` is a fixed-point-free involution on `structures`
/// that swaps `class` and negates `weight`. Such a matching forces the total
/// weight of `structures` to be 0.
pub fn check_signed_matching<S, W, P, C, K>(
    structures: &[S],
    weight: W,
    partner: P,
    class: C,
) -> core::result::Result<(), MatchingFailure<S>>
where
    S: Ord + Clone,
    W: Fn(&S) -> i64,
    P: Fn(&S) -> Option<S>,
    C: Fn(&S) -> K,
    K: PartialEq,
{
    let members: BTreeSet<&S> = structures.iter().collect();
    for s in structures {
        let fail = |f: fn(S) -> MatchingFailure<S>| Err(f(s.clone()));
        let Some(p) = partner(s) else { return fail(MatchingFailure::Unmatched) };
        if !members.contains(&p) {
            return fail(MatchingFailure::NotClosed);
        }
        if &p == s {
            return fail(MatchingFailure::FixedPoint);
        }
        if partner(&p).as_ref() != Some(s) {
            return fail(MatchingFailure::NotInvolution);
        }
        if weight(&p) != -weight(s) {
            return fail(MatchingFailure::WeightNotReversed);
        }
        if class(&p) == class(s) {
            return fail(MatchingFailure::ClassNotSwapped);
        }
    }
    Ok(())
}

/// Outcome of splitting a structure set into matched pairs and exceptional leftovers.
#[derive(Clone, Debug)]
pub struct Census {
    /// `(first-class, second-class)` pairs.
    pub pairs: Vec<(ColoredForest, ColoredForest)>,
    pub exceptional: Vec<ColoredForest>,
    /// Total weight of the exceptional structures.
    pub exceptional_weight: Rat,
    /// Total weight of every structure, computed directly.
    pub signed_sum: Rat,
}

/// Certifies the involution on `structures` and tallies what it leaves unmatched.
pub fn census(
    structures: &[ColoredForest],
    p: &[usize],
) -> core::result::Result<Census, MatchingFailure<ColoredForest>> {
    let (exceptional, matched): (Vec<_>, Vec<_>) =
        structures.iter().cloned().partition(|c| classify(c) == Classification::Exceptional);
    check_signed_matching(&matched, ColoredForest::weight, |c| involute(c, p).ok(), |c| classify(c).class_index())?;
    let pairs = matched
        .iter()
        .filter(|c| classify(c).class_index() == 1)
        .map(|c| (c.clone(), involute(c, p).expect("checked above")))
        .collect();
    Ok(Census {
        pairs,
        exceptional_weight: weighted_total(&exceptional),
        exceptional,
        signed_sum: weighted_total(structures),
    })
}

fn write_mark(out: &mut String, color: Color, palette: u8) {
    if palette == 1 {
        out.push('*');
    } else {
        let _ = write!(out, "{}", color.0);
    }
}

pub fn encode_colored(c: &ColoredForest) -> String {
    let mut out = String::new();
    if c.planted() > 0 {
        let _ = write!(out, "P[{}:", c.planted());
        for (i, color) in c.root_colors.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            match color {
                None => out.push('-'),
                Some(color) => write_mark(&mut out, *color, c.palette),
            }
        }
        out.push_str("]|");
    }
    for (k, t) in c.forest.trees.iter().enumerate() {
        if k > 0 {
            out.push(';');
        }
        encode_tree(t, &mut VertexAddr::root(k), c, &mut out);
    }
    out
}

fn encode_tree(t: &Tree, addr: &mut VertexAddr, c: &ColoredForest, out: &mut String) {
    if t.is_leaf() {
        out.push('o');
        if let Some(color) = c.leaf_colors.get(addr) {
            out.push('*');
            if c.palette > 1 {
                let _ = write!(out, "{}", color.0);
            }
        }
        return;
    }
    out.push('(');
    for (i, child) in t.children.iter().enumerate() {
        addr.path.push(i);
        encode_tree(child, addr, c, out);
        addr.path.pop();
    }
    out.push(')');
}

impl Parser<'_> {
    fn number(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        core::str::from_utf8(&self.bytes[start..self.pos]).ok()?.parse().ok()
    }

    fn color(&mut self, palette: u8) -> Result<Color> {
        if palette == 1 && !self.peek().is_some_and(|b| b.is_ascii_digit()) {
            return Ok(Color(1));
        }
        let at = self.pos;
        let value = self.number().ok_or_else(|| self.error("expected a color number"))?;
        match u8::try_from(value) {
            Ok(v) if v >= 1 && v <= palette => Ok(Color(v)),
            _ => Err(Error::Syntax { pos: at, msg: "color outside the palette" }),
        }
    }

    fn expect(&mut self, byte: u8, msg: &'static str) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(msg))
        }
    }
}

/// Inverse of [`encode_colored`] for a known palette size.
pub fn decode_colored(s: &str, palette: u8) -> Result<ColoredForest> {
    if palette == 0 {
        return Err(Error::ColorOutOfRange(0));
    }
    let mut p = Parser { bytes: s.as_bytes(), pos: 0 };
    let mut root_colors = Vec::new();
    if p.peek() == Some(b'P') {
        p.pos += 1;
        p.expect(b'[', "expected '['")?;
        let count = p.number().ok_or_else(|| p.error("expected planted-root count"))?;
        p.expect(b':', "expected ':'")?;
        loop {
            if p.peek() == Some(b'-') {
                p.pos += 1;
                root_colors.push(None);
            } else {
                p.expect(b'*', "expected '-' or a color").or_else(|e| {
                    if palette > 1 && p.peek().is_some_and(|b| b.is_ascii_digit()) {
                        Ok(())
                    } else {
                        Err(e)
                    }
                })?;
                root_colors.push(Some(p.color(palette)?));
            }
            if p.peek() == Some(b',') {
                p.pos += 1;
            } else {
                break;
            }
        }
        p.expect(b']', "expected ']'")?;
        if root_colors.len() != count {
            return Err(p.error("planted-root count does not match the marks"));
        }
        p.expect(b'|', "expected '|'")?;
    }

    let mut leaf_colors = BTreeMap::new();
    let mut trees = Vec::new();
    if p.peek().is_some() {
        loop {
            let component = trees.len();
            let tree = p.tree(&mut |p, path| {
                if p.peek() == Some(b'*') {
                    p.pos += 1;
                    let color = p.color(palette)?;
                    leaf_colors.insert(VertexAddr { component, path: path.to_vec() }, color);
                }
                Ok(())
            })?;
            trees.push(tree);
            if p.peek() == Some(b';') {
                p.pos += 1;
            } else {
                break;
            }
        }
    }
    if p.pos != s.len() {
        return Err(p.error("trailing input"));
    }
    Ok(ColoredForest { forest: Forest::new(trees), palette, leaf_colors, root_colors })
}

#[cfg(test)]
mod tests;
