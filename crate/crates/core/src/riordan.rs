//! Truncated formal power series over [`Rat`] and Riordan arrays.
//!
//! A [`Series`] of order `N` knows the coefficients of `x^0..=x^N`. Every
//! operation returns the largest order its inputs determine: sums and products
//! take the minimum order, the derivative loses one, and so on. Equality
//! compares coefficients up to the common order.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::counting::catalan_gen;
use crate::error::{Error, Result};
use crate::exact::{binom, Rat};

#[derive(Clone)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Series of order `coeffs.len() - 1`. Panics on an empty vector.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| Rat::int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rat::one(), order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rat::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// `[x^k]`.
    pub fn coeff(&self, k: usize) -> Result<&Rat> {
        self.coeffs.get(k).ok_or(Error::OrderExceeded { index: k, order: self.order() })
    }

    pub fn constant_term(&self) -> &Rat {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    /// `x · self`; one more coefficient is known.
    pub fn mul_x(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// `self / x`. Needs a zero constant term and order at least 1.
    pub fn div_x(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if self.order() == 0 {
            return Err(Error::OrderExceeded { index: 1, order: 0 });
        }
        Ok(Series::new(self.coeffs[1..].to_vec()))
    }

    /// Formal derivative; the order drops by one. Panics on an order-0 series,
    /// whose derivative determines no coefficient at all.
    pub fn derivative(&self) -> Series {
        assert!(self.order() >= 1, "derivative of an order-0 series is undetermined");
        Series::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * Rat::from(k)).collect())
    }

    /// `self / b` for a unit `b` (nonzero constant term).
    pub fn div_unit(&self, b: &Series) -> Result<Series> {
        let b0 = b.constant_term();
        if b0.is_zero() {
            return Err(Error::NotUnit);
        }
        let order = self.order().min(b.order());
        let inv_b0 = b0.recip()?;
        let mut q: Vec<Rat> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 0..n {
                acc -= &(&q[k] * &b.coeffs[n - k]);
            }
            q.push(acc * &inv_b0);
        }
        Ok(Series::new(q))
    }

    pub fn recip(&self) -> Result<Series> {
        Series::one(self.order()).div_unit(self)
    }

    pub fn pow(&self, exp: usize) -> Series {
        let mut result = Series::one(self.order());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self(inner(x))` by Horner's rule. `inner` must have zero constant term.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Series::constant(self.coeffs[order].clone(), order);
        for c in self.coeffs[..order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `(1 - x)^a` for rational `a`: `[x^n] = (-1)^n binom(a, n)`.
    pub fn binpow(a: &Rat, order: usize) -> Series {
        Series::new((0..=order).map(|n| Rat::sign_pow(n) * binom(a, n)).collect())
    }
}

/// Coefficient-wise equality up to the smaller order.
impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series(order {}: {:?})", self.order(), self.coeffs)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Series::new(out)
    }
}

pub fn series_add(a: &Series, b: &Series) -> Series {
    a + b
}

pub fn series_mul(a: &Series, b: &Series) -> Series {
    a * b
}

pub fn series_neg(a: &Series) -> Series {
    -a
}

/// The lower-triangular array whose column `k` has generating function `g · f^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct RiordanArray {
    g: Series,
    f: Series,
}

impl RiordanArray {
    /// Requires `g(0) != 0`, `f(0) = 0` and `[x^1] f != 0`.
    pub fn new(g: Series, f: Series) -> Result<Self> {
        let f1_nonzero = f.coeff(1).is_ok_and(|c| !c.is_zero());
        if g.constant_term().is_zero() || !f.constant_term().is_zero() || !f1_nonzero {
            return Err(Error::InvalidRiordan);
        }
        Ok(RiordanArray { g, f })
    }

    /// `[(1-x)^α, x(1-x)^(β-1)]`, the array behind the alternating Catalan sums.
    pub fn alternating_family(alpha: &Rat, beta: &Rat, order: usize) -> Self {
        let g = Series::binpow(alpha, order);
        let f = Series::binpow(&(beta - Rat::one()), order.saturating_sub(1)).mul_x();
        RiordanArray::new(g, f).expect("family satisfies the array conditions")
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    /// Generating function `g · f^k` of column `k`.
    pub fn column(&self, k: usize) -> Series {
        &self.g * &self.f.pow(k)
    }

    /// The `(n, k)` entry `[x^n] g f^k`.
    pub fn entry(&self, n: usize, k: usize) -> Result<Rat> {
        if n > self.order() {
            return Err(Error::OrderExceeded { index: n, order: self.order() });
        }
        if k > n {
            return Ok(Rat::zero());
        }
        Ok(self.column(k).coeffs[n].clone())
    }

    /// Rows `0..=order` as vectors of length `n + 1`.
    pub fn rows(&self, order: usize) -> Result<Vec<Vec<Rat>>> {
        if order > self.order() {
            return Err(Error::OrderExceeded { index: order, order: self.order() });
        }
        let mut rows: Vec<Vec<Rat>> = (0..=order).map(|n| Vec::with_capacity(n + 1)).collect();
        let f = self.f.truncate(order);
        let mut col = self.g.truncate(order);
        for k in 0..=order {
            for (n, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(col.coeffs[n].clone());
            }
            col = &col * &f;
        }
        Ok(rows)
    }

    /// `Σ_k entry(n, k) · a_k` for `n = 0..=order`.
    pub fn apply(&self, a: &Series) -> Result<Vec<Rat>> {
        let order = self.order().min(a.order());
        Ok(self
            .rows(order)?
            .iter()
            .map(|row| row.iter().zip(&a.coeffs).map(|(t, ak)| t * ak).sum())
            .collect())
    }
}

pub fn riordan_entry(r: &RiordanArray, n: usize, k: usize) -> Result<Rat> {
    r.entry(n, k)
}

/// Both sides of the Riordan array theorem, evaluated independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RiordanVerdict {
    /// `Σ_k [g,f]_{n,k} a_k = l_n` for every `n` up to the common order.
    pub row_sums: bool,
    /// `g · A(f) = L` up to the common order.
    pub functional: bool,
}

impl RiordanVerdict {
    pub fn holds(&self) -> bool {
        self.row_sums && self.functional
    }

    /// The theorem says the two conditions are equivalent.
    pub fn consistent(&self) -> bool {
        self.row_sums == self.functional
    }
}

pub fn riordan_theorem_verdict(r: &RiordanArray, a: &Series, l: &Series) -> Result<RiordanVerdict> {
    let order = r.order().min(a.order()).min(l.order());
    let sums = r.apply(&a.truncate(order))?;
    let row_sums = sums.iter().zip(&l.coeffs).all(|(s, ln)| s == ln);
    let composed = &r.g.truncate(order) * &a.truncate(order).compose(&r.f.truncate(order))?;
    let functional = composed == l.truncate(order);
    Ok(RiordanVerdict { row_sums, functional })
}

pub fn riordan_theorem_check(r: &RiordanArray, a: &Series, l: &Series) -> Result<bool> {
    riordan_theorem_verdict(r, a, l).map(|v| v.holds())
}

/// The Lagrange-inversion form: `n [x^n] A = [x^(n-1)] (x/f)^n (L/g)'` for
/// `1 <= n <= order`, together with `a_0 = L(0)/g(0)`.
pub fn modified_riordan_check(r: &RiordanArray, a: &Series, l: &Series) -> Result<bool> {
    let order = r.order().min(a.order()).min(l.order());
    let a0 = l.constant_term().checked_div(r.g.constant_term())?;
    if a.constant_term() != &a0 {
        return Ok(false);
    }
    if order == 0 {
        return Ok(true);
    }
    let x_over_f = r.f.truncate(order).div_x()?.recip()?;
    let dlg = l.truncate(order).div_unit(&r.g)?.derivative();
    let mut power = Series::one(order - 1);
    for n in 1..=order {
        power = &power * &x_over_f;
        let rhs = (&power * &dlg).coeffs[n - 1].clone();
        if Rat::from(n) * &a.coeffs[n] != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Σ_n C_{β,γ}(n) x^n` to the given order.
pub fn catalan_gf(beta: &Rat, gamma: &Rat, order: usize) -> Series {
    Series::new((0..=order).map(|n| catalan_gen(n, beta, gamma)).collect())
}

/// `C_{β,γ}(x (1-x)^(β-1)) = (1-x)^(-γ)` to the given order.
pub fn functional_equation_check(beta: &Rat, gamma: &Rat, order: usize) -> bool {
    let f = Series::binpow(&(beta - Rat::one()), order.saturating_sub(1)).mul_x();
    let lhs = catalan_gf(beta, gamma, order).compose(&f).expect("f has no constant term");
    lhs == Series::binpow(&-gamma, order)
}

/// `C_{β,a1+a2}(x) = C_{β,a1}(x) · C_{β,a2}(x)` coefficient-wise up to `n_max`.
pub fn convolution_check(beta: &Rat, a1: &Rat, a2: &Rat, n_max: usize) -> bool {
    let lhs = catalan_gf(beta, &(a1 + a2), n_max);
    let rhs = &catalan_gf(beta, a1, n_max) * &catalan_gf(beta, a2, n_max);
    lhs == rhs
}
