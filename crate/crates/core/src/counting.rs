//! Closed-form counts of ordered forests.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{binom, multinomial, Rat};

/// Internal-vertex counts per outdegree class: `n[j]` vertices of outdegree `p[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VecProfile {
    n: Vec<usize>,
    p: Vec<usize>,
}

impl VecProfile {
    /// Requires `n.len() == p.len() >= 1`, every `p[j] >= 1` and `p` strictly increasing.
    pub fn new(n: Vec<usize>, p: Vec<usize>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::InvalidProfile("at least one outdegree class is required"));
        }
        if n.len() != p.len() {
            return Err(Error::InvalidProfile("n and p must have the same length"));
        }
        if p[0] == 0 {
            return Err(Error::InvalidProfile("outdegrees must be at least 1"));
        }
        if p.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidProfile("outdegrees must be strictly increasing"));
        }
        Ok(VecProfile { n, p })
    }

    pub fn counts(&self) -> &[usize] {
        &self.n
    }

    pub fn outdegrees(&self) -> &[usize] {
        &self.p
    }

    pub fn classes(&self) -> usize {
        self.p.len()
    }

    /// Same outdegrees, different counts.
    pub fn with_counts(&self, n: Vec<usize>) -> Result<Self> {
        VecProfile::new(n, self.p.clone())
    }

    /// `n⃗ · p⃗`, the number of non-root vertices.
    pub fn dot_p(&self) -> usize {
        self.n.iter().zip(&self.p).map(|(n, p)| n * p).sum()
    }

    /// `n⃗ · (p⃗ - 1⃗)`.
    pub fn dot_p_minus_one(&self) -> usize {
        self.n.iter().zip(&self.p).map(|(n, p)| n * (p - 1)).sum()
    }

    pub fn total(&self) -> usize {
        self.n.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.n.iter().all(|&k| k == 0)
    }

    /// Class index of an outdegree, if present.
    pub fn class_of(&self, outdegree: usize) -> Option<usize> {
        self.p.binary_search(&outdegree).ok()
    }
}

/// `C_{β,γ}(n)`, the number of ordered forests of `γ` β-ary trees with `n`
/// internal vertices, extended polynomially to rational `β, γ`.
///
/// Evaluated as `(γ/n) · binom(βn+γ-1, n-1)` for `n >= 1`, which has no pole
/// at `βn+γ = 0`; `C_{β,γ}(0) = 1`.
pub fn catalan_gen(n: usize, beta: &Rat, gamma: &Rat) -> Rat {
    if n == 0 {
        return Rat::one();
    }
    let top = beta * Rat::from(n) + gamma - Rat::one();
    gamma * binom(&top, n - 1) / Rat::from(n)
}

/// `Q(n⃗; p⃗; γ) = γ/(n⃗·p⃗+γ) · multinomial(n⃗·p⃗+γ; n_1, ..., n_t)`, the number of
/// ordered forests with `γ` components and `n_j` internal vertices of outdegree `p_j`.
pub fn catalan_vector(profile: &VecProfile, gamma: usize) -> Rat {
    if profile.is_zero() {
        return Rat::one();
    }
    if gamma == 0 {
        return Rat::zero();
    }
    let top = Rat::from(profile.dot_p() + gamma);
    Rat::from(gamma) * multinomial(&top, profile.counts()) / top
}

pub fn catalan_sequence(beta: &Rat, gamma: &Rat, n_max: usize) -> Vec<Rat> {
    (0..=n_max).map(|n| catalan_gen(n, beta, gamma)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{generate_forests, generate_mixed_forests};
    use alloc::vec;

    fn ints(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::int(x)).collect()
    }

    #[test]
    fn catalan_gen_examples() {
        let two = Rat::int(2);
        let one = Rat::one();
        assert_eq!(catalan_sequence(&two, &one, 5), ints(&[1, 1, 2, 5, 14, 42]));
        assert_eq!(catalan_gen(0, &Rat::ratio(-5, 3), &Rat::ratio(7, 2)), Rat::one());
        assert_eq!(catalan_gen(0, &two, &Rat::zero()), Rat::one());
        assert_eq!(catalan_gen(2, &Rat::int(3), &one), Rat::int(3));
    }

    #[test]
    fn catalan_sequence_examples() {
        assert_eq!(catalan_sequence(&Rat::int(2), &Rat::one(), 3), ints(&[1, 1, 2, 5]));
        assert_eq!(catalan_sequence(&Rat::one(), &Rat::one(), 4), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(catalan_sequence(&Rat::int(2), &Rat::int(2), 1), ints(&[1, 2]));
    }

    #[test]
    fn quotient_form_agrees_where_defined() {
        for beta in -3..=4 {
            for gamma in -3..=4 {
                for n in 1..=8usize {
                    let (b, g) = (Rat::int(beta), Rat::int(gamma));
                    let denom = &b * Rat::from(n) + &g;
                    if denom.is_zero() {
                        continue;
                    }
                    let quotient = &g / &denom * binom(&denom, n);
                    assert_eq!(catalan_gen(n, &b, &g), quotient, "β={beta} γ={gamma} n={n}");
                }
            }
        }
    }

    #[test]
    fn integral_on_natural_parameters() {
        for beta in 1..=4 {
            for gamma in 0..=4 {
                for n in 0..=10 {
                    let c = catalan_gen(n, &Rat::int(beta), &Rat::int(gamma));
                    assert!(c.is_integer() && !c.is_negative(), "{beta} {gamma} {n}: {c}");
                }
            }
        }
    }

    #[test]
    fn catalan_gen_matches_enumeration() {
        for beta in 1..=3usize {
            for gamma in 1..=3usize {
                let n_max = if beta == 3 { 4 } else { 6 };
                for n in 0..=n_max {
                    let count = generate_forests(beta, n, gamma).unwrap().len();
                    assert_eq!(
                        catalan_gen(n, &Rat::from(beta), &Rat::from(gamma)),
                        Rat::from(count),
                        "β={beta} γ={gamma} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn catalan_vector_examples() {
        let p = VecProfile::new(vec![1, 1], vec![2, 3]).unwrap();
        assert_eq!(catalan_vector(&p, 1), Rat::int(5));
        let zero = VecProfile::new(vec![0, 0], vec![2, 3]).unwrap();
        assert_eq!(catalan_vector(&zero, 4), Rat::one());
        assert_eq!(catalan_vector(&zero, 0), Rat::one());
        assert_eq!(catalan_vector(&p, 0), Rat::zero());
        for k in 0..=6 {
            let single = VecProfile::new(vec![k], vec![2]).unwrap();
            assert_eq!(catalan_vector(&single, 1), catalan_gen(k, &Rat::int(2), &Rat::one()));
        }
    }

    #[test]
    fn catalan_vector_matches_enumeration() {
        for p in [vec![2], vec![3], vec![2, 3]] {
            for gamma in 0..=2 {
                for n in counts_up_to(p.len(), 4) {
                    let profile = VecProfile::new(n, p.clone()).unwrap();
                    let count = generate_mixed_forests(&profile, gamma).unwrap().len();
                    assert_eq!(catalan_vector(&profile, gamma), Rat::from(count), "{profile:?} γ={gamma}");
                }
            }
        }
    }

    fn counts_up_to(t: usize, total: usize) -> Vec<Vec<usize>> {
        if t == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 0..=total {
            for mut rest in counts_up_to(t - 1, total - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn profile_validation() {
        assert!(VecProfile::new(vec![], vec![]).is_err());
        assert!(VecProfile::new(vec![1], vec![2, 3]).is_err());
        assert!(VecProfile::new(vec![1], vec![0]).is_err());
        assert!(VecProfile::new(vec![1, 1], vec![3, 3]).is_err());
        assert!(VecProfile::new(vec![1, 1], vec![3, 2]).is_err());
        let p = VecProfile::new(vec![2, 1], vec![2, 3]).unwrap();
        assert_eq!((p.dot_p(), p.dot_p_minus_one(), p.total()), (7, 4, 3));
        assert_eq!(p.class_of(3), Some(1));
        assert_eq!(p.class_of(4), None);
    }
}
