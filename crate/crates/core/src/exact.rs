//! Exact rationals and generalized binomial coefficients.
//!
//! [`Rat`] is always stored reduced with a positive denominator, so the derived
//! equality is structural. [`binom`] accepts any rational upper argument:
//! `binom(x, k) = x(x-1)...(x-k+1) / k!` with `binom(x, 0) = 1`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn int(value: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(value)))
    }

    /// `num / den`, reduced. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "Rat::ratio with zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The value as an `i64` when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    /// The value as a `usize` when it is a non-negative integer in range.
    pub fn to_usize(&self) -> Option<usize> {
        if self.is_integer() {
            self.numer().to_usize()
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rat> {
        Rat::one().checked_div(self)
    }

    /// `(-1)^k`.
    pub fn sign_pow(k: usize) -> Rat {
        if k.is_multiple_of(2) {
            Rat::one()
        } else {
            Rat::int(-1)
        }
    }

    pub fn pow(&self, exp: u32) -> Rat {
        Rat(num_traits::pow(self.0.clone(), exp as usize))
    }
}

impl From<i64> for Rat {
    fn from(value: i64) -> Self {
        Rat::int(value)
    }
}

impl From<i32> for Rat {
    fn from(value: i32) -> Self {
        Rat::int(i64::from(value))
    }
}

impl From<usize> for Rat {
    fn from(value: usize) -> Self {
        Rat(BigRational::from_integer(BigInt::from(value)))
    }
}

impl From<BigInt> for Rat {
    fn from(value: BigInt) -> Self {
        Rat(BigRational::from_integer(value))
    }
}

/// Renders as `num/den`, or `num` when the denominator is 1.
impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {0:?}: expected an integer or p/q")]
pub struct ParseRatError(pub alloc::string::String);

/// Parses `p`, `-p`, `p/q` or `-p/q` with decimal integers and `q != 0`.
impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let err = || ParseRatError(s.to_string());
        let t = s.trim();
        let digits_ok = |part: &str| {
            let part = part.strip_prefix(['-', '+']).unwrap_or(part);
            !part.is_empty() && part.bytes().all(|b| b.is_ascii_digit())
        };
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n, d),
            None => (t, "1"),
        };
        if !digits_ok(num) || !digits_ok(den) {
            return Err(err());
        }
        let num: BigInt = num.parse().map_err(|_| err())?;
        let den: BigInt = den.parse().map_err(|_| err())?;
        Rat::from_bigints(num, den).map_err(|_| err())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, like the integer types; use `checked_div` otherwise.
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |acc, x| acc * x)
    }
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Generalized binomial coefficient `x(x-1)...(x-k+1) / k!`.
///
/// With `x = p/q` the numerator is accumulated as the integer product
/// `p(p-q)(p-2q)...` and divided by `q^k k!` once at the end.
pub fn binom(x: &Rat, k: usize) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    let (p, q) = (x.numer(), x.denom());
    let mut num = BigInt::one();
    let mut term = p.clone();
    for _ in 0..k {
        num *= &term;
        if num.is_zero() {
            return Rat::zero();
        }
        term -= q;
    }
    let den = num_traits::pow(q.clone(), k) * factorial(k);
    Rat(BigRational::new(num, den))
}

/// Generalized multinomial coefficient as the product
/// `binom(x, m1) binom(x-m1, m2) ... binom(x-m1-...-m_{t-2}, m_{t-1})`.
///
/// `parts` lists `m1..m_{t-1}`; the last part `x - Σ m_i` is implicit.
pub fn multinomial(x: &Rat, parts: &[usize]) -> Rat {
    let mut top = x.clone();
    let mut acc = Rat::one();
    for &m in parts {
        acc = acc * binom(&top, m);
        if acc.is_zero() {
            return acc;
        }
        top -= &Rat::from(m);
    }
    acc
}

/// Kronecker delta `δ_{0n}`.
pub fn kronecker(n: usize) -> Rat {
    if n == 0 {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// Parses a whitespace- or comma-separated list of rationals.
pub fn parse_rat_list(s: &str) -> core::result::Result<Vec<Rat>, ParseRatError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    // Independent oracle: falling factorial evaluated term by term in Rat.
    fn falling_oracle(x: &Rat, k: usize) -> Rat {
        let mut acc = Rat::one();
        for i in 0..k {
            acc = acc * (x - Rat::from(i)) / Rat::from(i + 1);
        }
        acc
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(&Rat::int(5), 2), Rat::int(10));
        assert_eq!(binom(&r("-7/2"), 0), Rat::one());
        assert_eq!(binom(&Rat::int(-3), 2), Rat::int(6));
        assert_eq!(binom(&r("1/2"), 3), r("1/16"));
    }

    #[test]
    fn binom_matches_factorial_formula() {
        for x in 0..=30usize {
            for k in 0..=x {
                let expect = factorial(x) / (factorial(k) * factorial(x - k));
                assert_eq!(binom(&Rat::from(x), k), Rat::from(expect), "{x} {k}");
            }
            assert_eq!(binom(&Rat::from(x), x + 1), Rat::zero());
        }
    }

    fn grid() -> Vec<Rat> {
        let mut g = Vec::new();
        for num in -9..=9 {
            for den in [1, 2, 3, 7] {
                g.push(Rat::ratio(num, den));
            }
        }
        g
    }

    #[test]
    fn binom_matches_falling_oracle() {
        for x in grid() {
            for k in 0..=8 {
                assert_eq!(binom(&x, k), falling_oracle(&x, k));
            }
        }
    }

    #[test]
    fn pascal_recurrence() {
        for x in grid() {
            let x1 = &x - Rat::one();
            for k in 1..=20 {
                assert_eq!(binom(&x, k), binom(&x1, k) + binom(&x1, k - 1), "x={x} k={k}");
            }
        }
    }

    #[test]
    fn upper_negation() {
        for x in grid() {
            for k in 0..=20 {
                let rhs = Rat::sign_pow(k) * binom(&(&x + Rat::from(k) - Rat::one()), k);
                assert_eq!(binom(&-&x, k), rhs, "x={x} k={k}");
            }
        }
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(&Rat::int(6), &[1, 1]), Rat::int(30));
        assert_eq!(multinomial(&r("5/3"), &[]), Rat::one());
        // binom(-1, 2) binom(-3, 1) = 1 * -3
        assert_eq!(multinomial(&Rat::int(-1), &[2, 1]), Rat::int(-3));
    }

    #[test]
    fn multinomial_single_part_is_binom() {
        for x in grid() {
            for m in 0..=10 {
                assert_eq!(multinomial(&x, &[m]), binom(&x, m));
            }
        }
    }

    #[test]
    fn kronecker_values() {
        assert_eq!(kronecker(0), Rat::one());
        assert_eq!(kronecker(1), Rat::zero());
        assert_eq!(kronecker(12), Rat::zero());
    }

    #[test]
    fn rat_is_canonical() {
        let a = Rat::ratio(6, -4);
        assert_eq!(a, r("-3/2"));
        assert_eq!(a.denom(), &BigInt::from(2));
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(Rat::ratio(8, 4).to_string(), "2");
        assert_eq!(r("+4/6").to_string(), "2/3");
    }

    #[test]
    fn rat_parse_rejects_garbage() {
        for bad in ["", "x", "1/0", "1/", "/2", "1.5", "1/2/3", "--1"] {
            assert!(bad.parse::<Rat>().is_err(), "{bad}");
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Rat::one().checked_div(&Rat::zero()), Err(Error::DivisionByZero));
        assert_eq!(Rat::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn rat_list_parsing() {
        assert_eq!(parse_rat_list("1, -1/2 3").unwrap(), vec![Rat::one(), r("-1/2"), Rat::int(3)]);
    }
}
