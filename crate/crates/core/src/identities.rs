//! Exact verification of the alternating Catalan-sum identities and their
//! generating-function and inverse-relation companions.
//!
//! Every identity here is polynomial in its continuous parameters at fixed
//! `n`, so exact evaluation on a rational grid with more points per variable
//! than the degree certifies it for all complex parameters at those `n`.
//! Points where a formula divides by zero are skipped and listed in the report.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::counting::{catalan_gen, catalan_vector, VecProfile};
use crate::error::{Error, Result};
use crate::exact::{binom, kronecker, multinomial, Rat};
use crate::involution::{census, scalar_structures, signed_sum_vector_with_limit, sub_vectors};
use crate::riordan::{
    catalan_gf, convolution_check, functional_equation_check, modified_riordan_check, riordan_theorem_verdict,
    RiordanArray, Series,
};

/// Signature of a `C_{β,γ}(n)` implementation, so the harness can be pointed at a faulty one.
pub type CatalanFn = fn(usize, &Rat, &Rat) -> Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// `Σ (-1)^(n-i) binom(i+1, n-i) C_i = δ_{0n}`.
    CatalanAlternating,
    /// `Σ (-1)^(n-i) binom((β-1)i+α, n-i) C_{β,γ}(i) = (-1)^n binom(α-γ, n)`.
    AlternatingSum,
    /// The same sum with `i` replaced by `n - i`; guards the summation order.
    ReindexedSum,
    /// The vector generalization over outdegree profiles.
    VectorAlternatingSum,
    RiordanTheorem,
    ModifiedRiordanTheorem,
    /// `C_{β,γ}(x(1-x)^(β-1)) = (1-x)^(-γ)`.
    FunctionalEquation,
    /// `C_{β,a1+a2}(x) = C_{β,a1}(x) C_{β,a2}(x)`.
    Convolution,
    GouldRoundtrip,
    /// `C_{β,γ}(n)` recovered from the alternating sum by Gould inversion.
    GouldInversion,
    ClosedFormChain,
    InvolutionCertificate,
    VectorInvolution,
    /// Direct sum, involution census and Riordan row sums agree.
    CrossMethod,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::CatalanAlternating => "catalan_alternating",
            IdentityId::AlternatingSum => "alternating_sum",
            IdentityId::ReindexedSum => "reindexed_sum",
            IdentityId::VectorAlternatingSum => "vector_alternating_sum",
            IdentityId::RiordanTheorem => "riordan_theorem",
            IdentityId::ModifiedRiordanTheorem => "modified_riordan_theorem",
            IdentityId::FunctionalEquation => "functional_equation",
            IdentityId::Convolution => "convolution",
            IdentityId::GouldRoundtrip => "gould_roundtrip",
            IdentityId::GouldInversion => "gould_inversion",
            IdentityId::ClosedFormChain => "closed_form_chain",
            IdentityId::InvolutionCertificate => "involution_certificate",
            IdentityId::VectorInvolution => "vector_involution",
            IdentityId::CrossMethod => "cross_method",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Named parameter values of one grid point.
pub type Params = Vec<(String, Rat)>;

fn params(pairs: &[(&str, &Rat)]) -> Params {
    pairs.iter().map(|(k, v)| (String::from(*k), (*v).clone())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub params: Params,
    pub lhs: Rat,
    pub rhs: Rat,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(Counterexample),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub grid: String,
    /// Number of individual equalities evaluated.
    pub checked: usize,
    /// Grid points left out because a formula is undefined there.
    pub skipped: Vec<Params>,
    pub status: Status,
}

impl IdentityReport {
    fn new(id: IdentityId, grid: String) -> Self {
        IdentityReport { id, grid, checked: 0, skipped: Vec::new(), status: Status::Pass }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Records one comparison; the first mismatch becomes the counterexample.
    fn compare(&mut self, params: impl FnOnce() -> Params, lhs: Rat, rhs: Rat, detail: &str) {
        self.checked += 1;
        if lhs != rhs && self.passed() {
            self.status = Status::Fail(Counterexample { params: params(), lhs, rhs, detail: String::from(detail) });
        }
    }

    fn skip(&mut self, params: Params) {
        self.skipped.push(params);
    }

    /// Folds another report for the same identity into this one.
    fn absorb(&mut self, other: IdentityReport) {
        self.checked += other.checked;
        self.skipped.extend(other.skipped);
        if self.passed() {
            self.status = other.status;
        }
    }
}

// ---------------------------------------------------------------------------
// Alternating sums

/// `Σ_{i=0}^n (-1)^(n-i) binom((β-1)i+α, n-i) C(i)`.
pub fn alternating_lhs(alpha: &Rat, beta: &Rat, gamma: &Rat, n: usize, catalan: CatalanFn) -> Rat {
    let slope = beta - Rat::one();
    (0..=n)
        .map(|i| {
            let top = &slope * Rat::from(i) + alpha;
            Rat::sign_pow(n - i) * binom(&top, n - i) * catalan(i, beta, gamma)
        })
        .sum()
}

/// The same sum indexed by the number of colored objects: `Σ_i (-1)^i binom((β-1)(n-i)+α, i) C(n-i)`.
pub fn reindexed_lhs(alpha: &Rat, beta: &Rat, gamma: &Rat, n: usize, catalan: CatalanFn) -> Rat {
    let slope = beta - Rat::one();
    (0..=n)
        .map(|i| {
            let top = &slope * Rat::from(n - i) + alpha;
            Rat::sign_pow(i) * binom(&top, i) * catalan(n - i, beta, gamma)
        })
        .sum()
}

/// `(-1)^n binom(α-γ, n)`.
pub fn alternating_rhs(alpha: &Rat, gamma: &Rat, n: usize) -> Rat {
    Rat::sign_pow(n) * binom(&(alpha - gamma), n)
}

fn grid_label(pairs: &[(&str, &Rat)], bound: &str) -> String {
    let mut s = String::new();
    for (k, v) in pairs {
        s.push_str(&format!("{k}={v}, "));
    }
    s.push_str(bound);
    s
}

/// Checks the alternating-sum identity at one `(α, β, γ)` for `0 <= n <= n_max`,
/// also confirming that both summation orders agree.
pub fn verify_alternating_sum(alpha: &Rat, beta: &Rat, gamma: &Rat, n_max: usize) -> IdentityReport {
    verify_alternating_sum_with(alpha, beta, gamma, n_max, catalan_gen)
}

pub fn verify_alternating_sum_with(
    alpha: &Rat,
    beta: &Rat,
    gamma: &Rat,
    n_max: usize,
    catalan: CatalanFn,
) -> IdentityReport {
    let (sum, reindexed) = alternating_reports(alpha, beta, gamma, n_max, catalan);
    let mut report = sum;
    report.absorb(reindexed);
    report
}

fn alternating_reports(
    alpha: &Rat,
    beta: &Rat,
    gamma: &Rat,
    n_max: usize,
    catalan: CatalanFn,
) -> (IdentityReport, IdentityReport) {
    let label = grid_label(&[("alpha", alpha), ("beta", beta), ("gamma", gamma)], &format!("n<={n_max}"));
    let mut sum = IdentityReport::new(IdentityId::AlternatingSum, label.clone());
    let mut reidx = IdentityReport::new(IdentityId::ReindexedSum, label);
    for n in 0..=n_max {
        let at = || params(&[("alpha", alpha), ("beta", beta), ("gamma", gamma), ("n", &Rat::from(n))]);
        let lhs = alternating_lhs(alpha, beta, gamma, n, catalan);
        let rhs = alternating_rhs(alpha, gamma, n);
        let other = reindexed_lhs(alpha, beta, gamma, n, catalan);
        sum.compare(at, lhs.clone(), rhs, "alternating sum");
        reidx.compare(at, other, lhs, "summation orders disagree");
    }
    (sum, reidx)
}

/// The classical case `α = γ = 1`, `β = 2`, against `δ_{0n}`.
pub fn verify_catalan_alternating(n_max: usize, catalan: CatalanFn) -> IdentityReport {
    let (one, two) = (Rat::one(), Rat::int(2));
    let mut report = IdentityReport::new(IdentityId::CatalanAlternating, format!("n<={n_max}"));
    for n in 0..=n_max {
        let lhs = alternating_lhs(&one, &two, &one, n, catalan);
        report.compare(|| params(&[("n", &Rat::from(n))]), lhs, kronecker(n), "delta");
    }
    report
}

/// All vectors with entries summing to at most `total`, in graded lexicographic order.
pub fn bounded_vectors(t: usize, total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in 0..=total {
        out.extend(crate::forest::compositions(s, t));
    }
    out
}

/// Left side of the vector identity at `n⃗`:
/// `Σ_{i⃗ ≤ n⃗} (-1)^|i⃗| multinomial((p⃗-1)·(n⃗-i⃗)+α; i⃗) Q(n⃗-i⃗; p⃗; γ)`.
pub fn vector_lhs(profile: &VecProfile, gamma: usize, alpha: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for i in sub_vectors(profile.counts()) {
        let rest: Vec<usize> = profile.counts().iter().zip(&i).map(|(n, i)| n - i).collect();
        let rest = profile.with_counts(rest).expect("same outdegrees");
        let top = Rat::from(rest.dot_p_minus_one()) + alpha;
        let size: usize = i.iter().sum();
        acc += Rat::sign_pow(size) * multinomial(&top, &i) * catalan_vector(&rest, gamma);
    }
    acc
}

/// `(-1)^|n⃗| multinomial(α-γ; n⃗)`.
pub fn vector_rhs(profile: &VecProfile, gamma: usize, alpha: &Rat) -> Rat {
    Rat::sign_pow(profile.total()) * multinomial(&(alpha - Rat::from(gamma)), profile.counts())
}

/// Checks the vector identity for every `n⃗` with `Σ n_j <= n_max_total`.
pub fn verify_vector_alternating_sum(
    outdegrees: &[usize],
    gamma: usize,
    alpha: &Rat,
    n_max_total: usize,
) -> Result<IdentityReport> {
    VecProfile::new(vec![0; outdegrees.len()], outdegrees.to_vec())?;
    let label = format!("p={outdegrees:?}, gamma={gamma}, alpha={alpha}, |n|<={n_max_total}");
    let mut report = IdentityReport::new(IdentityId::VectorAlternatingSum, label);
    for n in bounded_vectors(outdegrees.len(), n_max_total) {
        let profile = VecProfile::new(n, outdegrees.to_vec())?;
        let at = || {
            let mut ps = params(&[("gamma", &Rat::from(gamma)), ("alpha", alpha)]);
            for (j, nj) in profile.counts().iter().enumerate() {
                ps.push((format!("n{}", j + 1), Rat::from(*nj)));
            }
            ps
        };
        report.compare(at, vector_lhs(&profile, gamma, alpha), vector_rhs(&profile, gamma, alpha), "vector sum");
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Gould inverse pair

/// Parameters `(a, m, z)` of the inverse pair
/// `b_n = Σ_k binom(m+ak, n-k) z^(n-k) a_k` and
/// `a_n = Σ_k (-ak-m)/(-an-m) binom(-an-m, n-k) z^(n-k) b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GouldPair {
    pub a: i64,
    pub m: Rat,
    pub z: Rat,
}

impl GouldPair {
    pub fn new(a: i64, m: Rat, z: Rat) -> Self {
        GouldPair { a, m, z }
    }

    /// `-an - m`.
    fn pivot(&self, n: usize) -> Rat {
        -(Rat::int(self.a) * Rat::from(n)) - &self.m
    }

    /// First `n < len` with `-an - m = 0` and `n >= 1`. At `n = 0` only the
    /// `k = n` term exists, whose coefficient is identically 1.
    pub fn singular_index(&self, len: usize) -> Option<usize> {
        (1..len).find(|&n| self.pivot(n).is_zero())
    }

    fn z_powers(&self, len: usize) -> Vec<Rat> {
        let mut pw = Vec::with_capacity(len);
        let mut cur = Rat::one();
        for _ in 0..len {
            pw.push(cur.clone());
            cur *= &self.z;
        }
        pw
    }
}

/// `binom(x, j)` for `j = 0..=j_max`.
fn binom_row(x: &Rat, j_max: usize) -> Vec<Rat> {
    let mut row = Vec::with_capacity(j_max + 1);
    let mut cur = Rat::one();
    for j in 0..=j_max {
        if j > 0 {
            cur = cur * (x - Rat::from(j - 1)) / Rat::from(j);
        }
        row.push(cur.clone());
    }
    row
}

pub fn gould_forward(seq_a: &[Rat], pair: &GouldPair) -> Vec<Rat> {
    let len = seq_a.len();
    let zp = pair.z_powers(len);
    let mut out = vec![Rat::zero(); len];
    for (k, ak) in seq_a.iter().enumerate() {
        if ak.is_zero() {
            continue;
        }
        let top = &pair.m + Rat::int(pair.a) * Rat::from(k);
        for (j, b) in binom_row(&top, len - 1 - k).iter().enumerate() {
            out[k + j] += &(b * &zp[j] * ak);
        }
    }
    out
}

pub fn gould_backward(seq_b: &[Rat], pair: &GouldPair) -> Result<Vec<Rat>> {
    if let Some(n) = pair.singular_index(seq_b.len()) {
        return Err(Error::Singular(format!("-a*n-m = 0 at n={n} for a={}, m={}", pair.a, pair.m)));
    }
    let zp = pair.z_powers(seq_b.len());
    Ok((0..seq_b.len())
        .map(|n| {
            let pivot = pair.pivot(n);
            let row = binom_row(&pivot, n);
            let mut acc = seq_b[n].clone();
            for k in 0..n {
                let ratio = pair.pivot(k) / &pivot;
                acc += ratio * &row[n - k] * &zp[n - k] * &seq_b[k];
            }
            acc
        })
        .collect())
}

/// Deterministic pseudo-random rational sequences for roundtrip tests.
pub fn random_sequences(seed: u64, count: usize, len: usize) -> Vec<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..len)
                .map(|_| Rat::ratio(rng.gen_range(-20..=20), rng.gen_range(1..=6)))
                .collect()
        })
        .collect()
}

/// Both compositions of the pair are the identity on `sequences`.
pub fn verify_gould_roundtrip(pair: &GouldPair, sequences: &[Vec<Rat>]) -> IdentityReport {
    let label = format!("a={}, m={}, z={}, {} sequences", pair.a, pair.m, pair.z, sequences.len());
    let mut report = IdentityReport::new(IdentityId::GouldRoundtrip, label);
    let at = |n: usize| params(&[("a", &Rat::int(pair.a)), ("m", &pair.m), ("z", &pair.z), ("n", &Rat::from(n))]);
    for seq in sequences {
        let Ok(back) = gould_backward(&gould_forward(seq, pair), pair) else {
            report.skip(params(&[("a", &Rat::int(pair.a)), ("m", &pair.m), ("z", &pair.z)]));
            return report;
        };
        let forth = gould_forward(&gould_backward(seq, pair).expect("same length, same pair"), pair);
        for n in 0..seq.len() {
            report.compare(|| at(n), back[n].clone(), seq[n].clone(), "backward after forward");
            report.compare(|| at(n), forth[n].clone(), seq[n].clone(), "forward after backward");
        }
    }
    report
}

/// `Σ_k (-1)^n ((1-β)k-α)/((1-β)n-α) binom((1-β)n-α, n-k) binom(α-γ, k)`,
/// or `None` where `(1-β)n - α = 0`.
pub fn gould_inversion_lhs(alpha: &Rat, beta: &Rat, gamma: &Rat, n: usize) -> Option<Rat> {
    let slope = Rat::one() - beta;
    let pivot = &slope * Rat::from(n) - alpha;
    if pivot.is_zero() {
        return None;
    }
    let sum: Rat = (0..=n)
        .map(|k| {
            let ratio = (&slope * Rat::from(k) - alpha) / &pivot;
            ratio * binom(&pivot, n - k) * binom(&(alpha - gamma), k)
        })
        .sum();
    Some(Rat::sign_pow(n) * sum)
}

/// Checks that the inversion sum recovers `C_{β,γ}(n)` for `1 <= n <= n_max`,
/// skipping `n` with `(1-β)n - α = 0`.
pub fn verify_gould_inversion(alpha: &Rat, beta: &Rat, gamma: &Rat, n_max: usize) -> IdentityReport {
    let label = grid_label(&[("alpha", alpha), ("beta", beta), ("gamma", gamma)], &format!("1<=n<={n_max}"));
    let mut report = IdentityReport::new(IdentityId::GouldInversion, label);
    for n in 1..=n_max {
        let at = || params(&[("alpha", alpha), ("beta", beta), ("gamma", gamma), ("n", &Rat::from(n))]);
        match gould_inversion_lhs(alpha, beta, gamma, n) {
            Some(lhs) => report.compare(at, lhs, catalan_gen(n, beta, gamma), "inversion formula"),
            None => report.skip(at()),
        }
    }
    report
}

/// The four values of the closed-form reduction at `α = 0`, for `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionChain {
    /// `Σ_k (-1)^n (k/n) binom((1-β)n, n-k) binom(-γ, k)`.
    pub weighted: Rat,
    /// `Σ_k (-1)^n binom((1-β)n, n-k) binom(-γ, k)`.
    pub plain_sum: Rat,
    /// `Σ_k (-1)^n ((n-k)/n) binom((1-β)n, n-k) binom(-γ, k)`.
    pub shifted_sum: Rat,
    /// `(-1)^n binom((1-β)n-γ, n)`.
    pub plain_closed: Rat,
    /// `(-1)^n (β-1) binom((1-β)n-1-γ, n-1)`.
    pub shifted_closed: Rat,
    pub catalan: Rat,
}

pub fn reduction_chain(beta: &Rat, gamma: &Rat, n: usize) -> ReductionChain {
    assert!(n >= 1);
    let sign = Rat::sign_pow(n);
    let nr = Rat::from(n);
    let top = (Rat::one() - beta) * &nr;
    let (mut weighted, mut plain_sum, mut shifted_sum) = (Rat::zero(), Rat::zero(), Rat::zero());
    for k in 0..=n {
        let base = &sign * binom(&top, n - k) * binom(&-gamma, k);
        weighted += &base * Rat::from(k) / &nr;
        shifted_sum += &base * Rat::from(n - k) / &nr;
        plain_sum += base;
    }
    ReductionChain {
        weighted,
        plain_sum,
        shifted_sum,
        plain_closed: &sign * binom(&(&top - gamma), n),
        shifted_closed: &sign * (beta - Rat::one()) * binom(&(&top - Rat::one() - gamma), n - 1),
        catalan: catalan_gen(n, beta, gamma),
    }
}

/// Checks every link of the closed-form reduction separately:
/// the split of the weighted sum, the two Vandermonde evaluations, and the
/// recombination into `C_{β,γ}(n)`. Where `β != 1` the weighted sum is also
/// compared with the inversion sum at `α = 0`.
pub fn closed_form_reduction_check(beta: &Rat, gamma: &Rat, n_max: usize) -> IdentityReport {
    let label = grid_label(&[("beta", beta), ("gamma", gamma)], &format!("1<=n<={n_max}"));
    let mut report = IdentityReport::new(IdentityId::ClosedFormChain, label);
    for n in 1..=n_max {
        let at = || params(&[("beta", beta), ("gamma", gamma), ("n", &Rat::from(n))]);
        let c = reduction_chain(beta, gamma, n);
        report.compare(at, c.weighted.clone(), &c.plain_sum - &c.shifted_sum, "split");
        report.compare(at, c.plain_sum.clone(), c.plain_closed.clone(), "first vandermonde");
        report.compare(at, -&c.shifted_sum, c.shifted_closed.clone(), "second vandermonde");
        report.compare(at, &c.plain_closed + &c.shifted_closed, c.catalan.clone(), "recombination");
        if let Some(inv) = gould_inversion_lhs(&Rat::zero(), beta, gamma, n) {
            report.compare(at, c.weighted.clone(), inv, "inversion formula at alpha=0");
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Involution and cross-method checks

/// Certifies the involution on every structure of index `0..=n_max` at
/// `(β, γ, α)` and compares the signed total with `(-1)^n binom(α-γ, n)`.
pub fn verify_involution(beta: usize, gamma: usize, alpha: usize, n_max: usize, limit: u64) -> Result<IdentityReport> {
    let label = format!("beta={beta}, gamma={gamma}, alpha={alpha}, n<={n_max}");
    let mut report = IdentityReport::new(IdentityId::InvolutionCertificate, label);
    for n in 0..=n_max {
        let at = || params(&[("beta", &Rat::from(beta)), ("gamma", &Rat::from(gamma)), ("alpha", &Rat::from(alpha)), ("n", &Rat::from(n))]);
        let structures = scalar_structures(beta, n, gamma, alpha, limit)?;
        let rhs = alternating_rhs(&Rat::from(alpha), &Rat::from(gamma), n);
        match census(&structures, &[beta]) {
            Ok(c) => {
                report.compare(at, c.exceptional_weight, rhs.clone(), "exceptional weight");
                report.compare(at, c.signed_sum, rhs, "signed sum");
            }
            Err(failure) => {
                report.compare(at, Rat::zero(), Rat::one(), &format!("matching failed: {failure:?}"));
            }
        }
    }
    Ok(report)
}

/// Vector scheme: for every `n⃗` with `Σ n_j <= n_max_total`, the enumerated
/// signed total equals the multinomial right side, and the modified
/// involution is a signed matching on the non-exceptional structures.
pub fn verify_vector_involution(
    outdegrees: &[usize],
    gamma: usize,
    alpha: usize,
    n_max_total: usize,
    limit: u64,
) -> Result<IdentityReport> {
    let label = format!("p={outdegrees:?}, gamma={gamma}, alpha={alpha}, |n|<={n_max_total}");
    let mut report = IdentityReport::new(IdentityId::VectorInvolution, label);
    for n in bounded_vectors(outdegrees.len(), n_max_total) {
        let profile = VecProfile::new(n, outdegrees.to_vec())?;
        let at = || {
            let mut ps = params(&[("gamma", &Rat::from(gamma)), ("alpha", &Rat::from(alpha))]);
            for (j, nj) in profile.counts().iter().enumerate() {
                ps.push((format!("n{}", j + 1), Rat::from(*nj)));
            }
            ps
        };
        let structures = crate::involution::vector_structures(&profile, gamma, alpha, limit)?;
        let rhs = vector_rhs(&profile, gamma, &Rat::from(alpha));
        match census(&structures, outdegrees) {
            Ok(c) => {
                report.compare(at, c.exceptional_weight, rhs.clone(), "exceptional weight");
            }
            Err(failure) => {
                report.compare(at, Rat::zero(), Rat::one(), &format!("matching failed: {failure:?}"));
            }
        }
        let total = signed_sum_vector_with_limit(&profile, gamma, alpha, limit)?;
        report.compare(at, total, rhs, "signed sum");
    }
    Ok(report)
}

/// Riordan row sums of `[(1-x)^α, x(1-x)^(β-1)]` applied to the Catalan series.
pub fn riordan_row_sums(alpha: &Rat, beta: &Rat, gamma: &Rat, order: usize) -> Result<Vec<Rat>> {
    RiordanArray::alternating_family(alpha, beta, order).apply(&catalan_gf(beta, gamma, order))
}

/// The alternating sum three ways: direct summation, involution census, Riordan row sums.
pub fn verify_cross_method(beta: usize, gamma: usize, alpha: usize, n_max: usize, limit: u64) -> Result<IdentityReport> {
    let label = format!("beta={beta}, gamma={gamma}, alpha={alpha}, n<={n_max}");
    let mut report = IdentityReport::new(IdentityId::CrossMethod, label);
    let (a, b, g) = (Rat::from(alpha), Rat::from(beta), Rat::from(gamma));
    let rows = riordan_row_sums(&a, &b, &g, n_max)?;
    for (n, row) in rows.into_iter().enumerate() {
        let at = || params(&[("beta", &b), ("gamma", &g), ("alpha", &a), ("n", &Rat::from(n))]);
        let direct = alternating_lhs(&a, &b, &g, n, catalan_gen);
        let structures = scalar_structures(beta, n, gamma, alpha, limit)?;
        let via_census = match census(&structures, &[beta]) {
            Ok(c) => c.exceptional_weight,
            Err(failure) => {
                report.compare(at, Rat::zero(), Rat::one(), &format!("matching failed: {failure:?}"));
                continue;
            }
        };
        report.compare(at, direct.clone(), via_census, "direct vs involution census");
        report.compare(at, direct, row, "direct vs riordan row sum");
    }
    Ok(report)
}

/// Both Riordan-theorem forms on the alternating family at one parameter point.
pub fn verify_riordan(alpha: &Rat, beta: &Rat, gamma: &Rat, order: usize) -> Result<(IdentityReport, IdentityReport)> {
    let label = grid_label(&[("alpha", alpha), ("beta", beta), ("gamma", gamma)], &format!("order={order}"));
    let r = RiordanArray::alternating_family(alpha, beta, order);
    let a = catalan_gf(beta, gamma, order);
    let l = Series::binpow(&(alpha - gamma), order);
    let at = || params(&[("alpha", alpha), ("beta", beta), ("gamma", gamma), ("order", &Rat::from(order))]);
    let bit = |b: bool| if b { Rat::one() } else { Rat::zero() };

    let mut plain = IdentityReport::new(IdentityId::RiordanTheorem, label.clone());
    let v = riordan_theorem_verdict(&r, &a, &l)?;
    plain.compare(at, bit(v.row_sums), Rat::one(), "row sums");
    plain.compare(at, bit(v.functional), Rat::one(), "g A(f) = L");

    let mut modified = IdentityReport::new(IdentityId::ModifiedRiordanTheorem, label);
    modified.compare(at, bit(modified_riordan_check(&r, &a, &l)?), Rat::one(), "lagrange form");
    Ok((plain, modified))
}

/// `C_{β,γ}(x(1-x)^(β-1)) = (1-x)^(-γ)`, reported coefficient-wise.
pub fn verify_functional_equation(beta: &Rat, gamma: &Rat, order: usize) -> IdentityReport {
    let label = grid_label(&[("beta", beta), ("gamma", gamma)], &format!("order={order}"));
    let mut report = IdentityReport::new(IdentityId::FunctionalEquation, label);
    let f = Series::binpow(&(beta - Rat::one()), order.saturating_sub(1)).mul_x();
    let lhs = catalan_gf(beta, gamma, order).compose(&f).expect("f(0) = 0");
    let rhs = Series::binpow(&-gamma, order);
    for n in 0..=order {
        let at = || params(&[("beta", beta), ("gamma", gamma), ("n", &Rat::from(n))]);
        report.compare(at, lhs.coeffs()[n].clone(), rhs.coeffs()[n].clone(), "coefficient");
    }
    debug_assert_eq!(report.passed(), functional_equation_check(beta, gamma, order));
    report
}

/// `C_{β,a1+a2}(n) = Σ_i C_{β,a1}(i) C_{β,a2}(n-i)` for `n <= n_max`.
pub fn verify_convolution(beta: &Rat, a1: &Rat, a2: &Rat, n_max: usize) -> IdentityReport {
    let label = grid_label(&[("beta", beta), ("alpha1", a1), ("alpha2", a2)], &format!("n<={n_max}"));
    let mut report = IdentityReport::new(IdentityId::Convolution, label);
    let lhs = catalan_gf(beta, &(a1 + a2), n_max);
    let rhs = &catalan_gf(beta, a1, n_max) * &catalan_gf(beta, a2, n_max);
    for n in 0..=n_max {
        let at = || params(&[("beta", beta), ("alpha1", a1), ("alpha2", a2), ("n", &Rat::from(n))]);
        report.compare(at, lhs.coeffs()[n].clone(), rhs.coeffs()[n].clone(), "coefficient");
    }
    debug_assert_eq!(report.passed(), convolution_check(beta, a1, a2, n_max));
    report
}

// ---------------------------------------------------------------------------
// Suite

/// Inclusive rational range `from, from+step, ..., <= to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatRange {
    pub from: Rat,
    pub to: Rat,
    pub step: Rat,
}

impl RatRange {
    pub fn new(from: Rat, to: Rat, step: Rat) -> Result<Self> {
        if step.is_zero() || step.is_negative() {
            return Err(Error::InvalidGrid(String::from("range step must be positive")));
        }
        Ok(RatRange { from, to, step })
    }

    pub fn ints(from: i64, to: i64) -> Self {
        RatRange { from: Rat::int(from), to: Rat::int(to), step: Rat::one() }
    }

    pub fn single(value: Rat) -> Self {
        RatRange { from: value.clone(), to: value, step: Rat::one() }
    }

    pub fn values(&self) -> Vec<Rat> {
        let mut out = Vec::new();
        let mut cur = self.from.clone();
        while cur <= self.to {
            out.push(cur.clone());
            cur += &self.step;
        }
        out
    }

    /// The values as naturals; fails if any is negative or fractional.
    pub fn naturals(&self) -> Result<Vec<usize>> {
        self.values()
            .iter()
            .map(|v| v.to_usize().ok_or_else(|| Error::InvalidGrid(format!("{v} is not a natural number"))))
            .collect()
    }

    pub fn integers(&self) -> Result<Vec<i64>> {
        self.values()
            .iter()
            .map(|v| v.to_i64().ok_or_else(|| Error::InvalidGrid(format!("{v} is not an integer"))))
            .collect()
    }
}

impl fmt::Display for RatRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{} step {}", self.from, self.to, self.step)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingGrid {
    pub alpha: RatRange,
    pub beta: RatRange,
    pub gamma: RatRange,
    pub n_max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorGrid {
    pub outdegrees: Vec<Vec<usize>>,
    pub gamma: RatRange,
    pub alpha: RatRange,
    pub n_max_total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesGrid {
    pub beta: RatRange,
    pub gamma: RatRange,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionGrid {
    pub beta: RatRange,
    pub alpha1: RatRange,
    pub alpha2: RatRange,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GouldGrid {
    pub a: RatRange,
    pub m: RatRange,
    pub z: RatRange,
    pub sequences: usize,
    pub length: usize,
    pub seed: u64,
}

/// Naturals for the enumerative checks; `α = γ + alpha_offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionGrid {
    pub beta: RatRange,
    pub gamma: RatRange,
    pub alpha_offset: RatRange,
    pub n_max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorInvolutionGrid {
    pub outdegrees: Vec<Vec<usize>>,
    pub gamma: RatRange,
    pub alpha_offset: RatRange,
    pub n_max_total: usize,
}

/// Deliberate corruption used to check that failures are reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Adds 1 to `C_{β,γ}(n)` for `n >= 2`.
    CatalanOffByOne,
}

fn corrupted_catalan(n: usize, beta: &Rat, gamma: &Rat) -> Rat {
    let c = catalan_gen(n, beta, gamma);
    if n >= 2 {
        c + Rat::one()
    } else {
        c
    }
}

/// Which checks to run and over which grids. Absent sections are skipped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    pub catalan_alternating: Option<usize>,
    pub alternating: Option<AlternatingGrid>,
    pub vector: Option<VectorGrid>,
    pub riordan: Option<AlternatingGrid>,
    pub functional: Option<SeriesGrid>,
    pub convolution: Option<ConvolutionGrid>,
    pub gould_roundtrip: Option<GouldGrid>,
    pub gould_inversion: Option<AlternatingGrid>,
    pub closed_form: Option<SeriesGrid>,
    pub involution: Option<InvolutionGrid>,
    pub vector_involution: Option<VectorInvolutionGrid>,
    pub cross_method: Option<InvolutionGrid>,
    pub fault: Option<Fault>,
    pub max_structs: Option<u64>,
}

impl SuiteConfig {
    /// The full default grid.
    pub fn standard() -> Self {
        SuiteConfig {
            catalan_alternating: Some(12),
            alternating: Some(AlternatingGrid {
                alpha: RatRange::ints(-3, 5),
                beta: RatRange::ints(0, 4),
                gamma: RatRange::ints(-2, 4),
                n_max: 12,
            }),
            vector: Some(VectorGrid {
                outdegrees: vec![vec![1], vec![2], vec![3], vec![2, 3], vec![1, 4]],
                gamma: RatRange::ints(0, 3),
                alpha: RatRange::new(Rat::int(-3), Rat::int(5), Rat::ratio(1, 2)).expect("positive step"),
                n_max_total: 4,
            }),
            riordan: Some(AlternatingGrid {
                alpha: RatRange::ints(0, 3),
                beta: RatRange::ints(1, 3),
                gamma: RatRange::ints(1, 2),
                n_max: 15,
            }),
            functional: Some(SeriesGrid { beta: RatRange::ints(1, 4), gamma: RatRange::ints(0, 3), order: 20 }),
            convolution: Some(ConvolutionGrid {
                beta: RatRange::ints(1, 3),
                alpha1: RatRange::new(Rat::ratio(1, 2), Rat::int(2), Rat::ratio(1, 2)).expect("positive step"),
                alpha2: RatRange::new(Rat::ratio(1, 2), Rat::ratio(3, 2), Rat::one()).expect("positive step"),
                order: 15,
            }),
            gould_roundtrip: Some(GouldGrid {
                a: RatRange::ints(-2, 3),
                m: RatRange::new(Rat::ratio(-3, 2), Rat::int(2), Rat::ratio(1, 2)).expect("positive step"),
                z: RatRange::new(Rat::int(-1), Rat::int(2), Rat::ratio(3, 2)).expect("positive step"),
                sequences: 20,
                length: 10,
                seed: 0x5eed,
            }),
            gould_inversion: Some(AlternatingGrid {
                alpha: RatRange::ints(-2, 3),
                beta: RatRange::ints(0, 4),
                gamma: RatRange::ints(-1, 3),
                n_max: 10,
            }),
            closed_form: Some(SeriesGrid {
                beta: RatRange::new(Rat::int(-1), Rat::int(4), Rat::ratio(1, 2)).expect("positive step"),
                gamma: RatRange::ints(-2, 3),
                order: 10,
            }),
            involution: Some(InvolutionGrid {
                beta: RatRange::ints(2, 3),
                gamma: RatRange::ints(1, 2),
                alpha_offset: RatRange::ints(0, 2),
                n_max: 4,
            }),
            vector_involution: Some(VectorInvolutionGrid {
                outdegrees: vec![vec![2, 3]],
                gamma: RatRange::ints(1, 2),
                alpha_offset: RatRange::ints(0, 3),
                n_max_total: 3,
            }),
            cross_method: Some(InvolutionGrid {
                beta: RatRange::ints(2, 3),
                gamma: RatRange::ints(1, 2),
                alpha_offset: RatRange::ints(0, 2),
                n_max: 4,
            }),
            fault: None,
            max_structs: None,
        }
    }

    /// A single-point smoke grid.
    pub fn smoke() -> Self {
        SuiteConfig {
            alternating: Some(AlternatingGrid {
                alpha: RatRange::single(Rat::int(3)),
                beta: RatRange::single(Rat::int(2)),
                gamma: RatRange::single(Rat::one()),
                n_max: 4,
            }),
            ..SuiteConfig::default()
        }
    }
}

fn section(id: IdentityId, label: String, parts: impl IntoIterator<Item = IdentityReport>) -> IdentityReport {
    let mut report = IdentityReport::new(id, label);
    for p in parts {
        report.absorb(p);
    }
    report
}

fn cube(a: &RatRange, b: &RatRange, c: &RatRange) -> Vec<(Rat, Rat, Rat)> {
    let mut out = Vec::new();
    for x in a.values() {
        for y in b.values() {
            for z in c.values() {
                out.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    out
}

/// Runs every configured section in a fixed order, one aggregated report per
/// identity. A failing report carries the first counterexample found.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<IdentityReport>> {
    let catalan: CatalanFn = match config.fault {
        Some(Fault::CatalanOffByOne) => corrupted_catalan,
        None => catalan_gen,
    };
    let limit = config.max_structs.unwrap_or(crate::DEFAULT_MAX_STRUCTS);
    let mut out = Vec::new();

    if let Some(n_max) = config.catalan_alternating {
        out.push(verify_catalan_alternating(n_max, catalan));
    }

    if let Some(g) = &config.alternating {
        let label = format!("alpha {}, beta {}, gamma {}, n<={}", g.alpha, g.beta, g.gamma, g.n_max);
        let (mut sums, mut reidx) = (Vec::new(), Vec::new());
        for (a, b, c) in cube(&g.alpha, &g.beta, &g.gamma) {
            let (s, r) = alternating_reports(&a, &b, &c, g.n_max, catalan);
            sums.push(s);
            reidx.push(r);
        }
        out.push(section(IdentityId::AlternatingSum, label.clone(), sums));
        out.push(section(IdentityId::ReindexedSum, label, reidx));
    }

    if let Some(g) = &config.vector {
        let label = format!("p in {:?}, gamma {}, alpha {}, |n|<={}", g.outdegrees, g.gamma, g.alpha, g.n_max_total);
        let mut parts = Vec::new();
        for p in &g.outdegrees {
            for gamma in g.gamma.naturals()? {
                for alpha in g.alpha.values() {
                    parts.push(verify_vector_alternating_sum(p, gamma, &alpha, g.n_max_total)?);
                }
            }
        }
        out.push(section(IdentityId::VectorAlternatingSum, label, parts));
    }

    if let Some(g) = &config.riordan {
        let label = format!("alpha {}, beta {}, gamma {}, order {}", g.alpha, g.beta, g.gamma, g.n_max);
        let (mut plain, mut modified) = (Vec::new(), Vec::new());
        for (a, b, c) in cube(&g.alpha, &g.beta, &g.gamma) {
            let (p, m) = verify_riordan(&a, &b, &c, g.n_max)?;
            plain.push(p);
            modified.push(m);
        }
        out.push(section(IdentityId::RiordanTheorem, label.clone(), plain));
        out.push(section(IdentityId::ModifiedRiordanTheorem, label, modified));
    }

    if let Some(g) = &config.functional {
        let label = format!("beta {}, gamma {}, order {}", g.beta, g.gamma, g.order);
        let mut parts = Vec::new();
        for b in g.beta.values() {
            for c in g.gamma.values() {
                parts.push(verify_functional_equation(&b, &c, g.order));
            }
        }
        out.push(section(IdentityId::FunctionalEquation, label, parts));
    }

    if let Some(g) = &config.convolution {
        let label = format!("beta {}, alpha1 {}, alpha2 {}, n<={}", g.beta, g.alpha1, g.alpha2, g.order);
        let parts = cube(&g.beta, &g.alpha1, &g.alpha2)
            .into_iter()
            .map(|(b, a1, a2)| verify_convolution(&b, &a1, &a2, g.order));
        out.push(section(IdentityId::Convolution, label, parts));
    }

    if let Some(g) = &config.gould_roundtrip {
        let label = format!(
            "a {}, m {}, z {}, {} sequences of length {}, seed {}",
            g.a, g.m, g.z, g.sequences, g.length, g.seed
        );
        let sequences = random_sequences(g.seed, g.sequences, g.length);
        let mut parts = Vec::new();
        for a in g.a.integers()? {
            for m in g.m.values() {
                for z in g.z.values() {
                    parts.push(verify_gould_roundtrip(&GouldPair::new(a, m.clone(), z), &sequences));
                }
            }
        }
        out.push(section(IdentityId::GouldRoundtrip, label, parts));
    }

    if let Some(g) = &config.gould_inversion {
        let label = format!("alpha {}, beta {}, gamma {}, 1<=n<={}", g.alpha, g.beta, g.gamma, g.n_max);
        let parts = cube(&g.alpha, &g.beta, &g.gamma)
            .into_iter()
            .map(|(a, b, c)| verify_gould_inversion(&a, &b, &c, g.n_max));
        out.push(section(IdentityId::GouldInversion, label, parts));
    }

    if let Some(g) = &config.closed_form {
        let label = format!("beta {}, gamma {}, 1<=n<={}", g.beta, g.gamma, g.order);
        let mut parts = Vec::new();
        for b in g.beta.values() {
            for c in g.gamma.values() {
                parts.push(closed_form_reduction_check(&b, &c, g.order));
            }
        }
        out.push(section(IdentityId::ClosedFormChain, label, parts));
    }

    if let Some(g) = &config.involution {
        let label = format!("beta {}, gamma {}, alpha-gamma {}, n<={}", g.beta, g.gamma, g.alpha_offset, g.n_max);
        let mut parts = Vec::new();
        for beta in g.beta.naturals()? {
            for gamma in g.gamma.naturals()? {
                for off in g.alpha_offset.naturals()? {
                    parts.push(verify_involution(beta, gamma, gamma + off, g.n_max, limit)?);
                }
            }
        }
        out.push(section(IdentityId::InvolutionCertificate, label, parts));
    }

    if let Some(g) = &config.vector_involution {
        let label =
            format!("p in {:?}, gamma {}, alpha-gamma {}, |n|<={}", g.outdegrees, g.gamma, g.alpha_offset, g.n_max_total);
        let mut parts = Vec::new();
        for p in &g.outdegrees {
            for gamma in g.gamma.naturals()? {
                for off in g.alpha_offset.naturals()? {
                    parts.push(verify_vector_involution(p, gamma, gamma + off, g.n_max_total, limit)?);
                }
            }
        }
        out.push(section(IdentityId::VectorInvolution, label, parts));
    }

    if let Some(g) = &config.cross_method {
        let label = format!("beta {}, gamma {}, alpha-gamma {}, n<={}", g.beta, g.gamma, g.alpha_offset, g.n_max);
        let mut parts = Vec::new();
        for beta in g.beta.naturals()? {
            for gamma in g.gamma.naturals()? {
                for off in g.alpha_offset.naturals()? {
                    parts.push(verify_cross_method(beta, gamma, gamma + off, g.n_max, limit)?);
                }
            }
        }
        out.push(section(IdentityId::CrossMethod, label, parts));
    }

    Ok(out)
}

#[cfg(test)]
mod tests;
