//! Exclusion-certificate prover: establishes `ε(p; D⁽²⁾, (a+b)x − b(δ/2)) ≥ b`
//! at a very general point of the symmetric square of a genus-`h` curve `D`,
//! by exhaustively excluding every candidate curve class that could violate
//! the bound.
//!
//! The argument has three legs, each exact:
//!
//! * a tail threshold `m0`: for multiplicities `m ≥ m0` the inequality chain
//!   `m(m−1) ≤ E² ≤ (L·E)²/L² ≤ (bm−1)²/L²` is contradictory, because the
//!   quadratic `f(m) = (L²−b²)m² − (L²−2b)m − 1` is positive;
//! * a global `m = 1` check: the minimum of `L·E` over the feasible region
//!   of curve classes is at least `b`;
//! * a finite case analysis of the exception classes with
//!   `L·E ≤ b(m0−1) − 1`, each excluded by rigidity (`E² < 0`), by the
//!   zero-class assumption (`E² = 0`), or by the multiplicity cap
//!   `m(m−1) ≤ min(E², ⌊(L·E)²/L²⌋)` leaving no `m` with `b·m > L·E`.
//!
//! A `Proved` result is a machine-checkable certificate that `τ ≤ a/b` one
//! genus up, via the recursion step in [`crate::tau_bounds`].

use crate::lattice::{DivClass, Genus};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProverError {
    #[error("auxiliary genus must be >= 1: the rank-2 lattice is degenerate on the plane")]
    DegenerateGenus,
    #[error("a and b must be positive integers")]
    NonPositivePair,
    #[error(
        "tau_d = {0} cannot upper-bound tau at genus {1}: it is below the universal bound sqrt(g)"
    )]
    TauBelowUniversalBound(BigRational, u64),
    #[error("ratio a/b = {a}/{b} must strictly exceed tau_d = {tau_d} (hypothesis of the recursion step)")]
    RatioNotAboveTau {
        a: BigInt,
        b: BigInt,
        tau_d: BigRational,
    },
    #[error("tail cannot close: need a^2 > (h+1) b^2, i.e. L^2 > b^2, got L^2 = {l_self} vs b^2 = {b_sq}")]
    TailCannotClose { l_self: BigInt, b_sq: BigInt },
    #[error("search needs max_b >= 1")]
    EmptyGrid,
}

/// Input to the prover: the auxiliary genus `h`, a certified rational upper
/// bound `tau_d` for `τ` at genus `h`, and the ratio `a/b` to certify.
///
/// Construction enforces `h ≥ 1`, `a, b > 0`, `√h ≤ tau_d < a/b` and
/// `a² > (h+1)b²` (equivalently `L² > b²`, which the tail needs). The pair
/// `(a, b)` is kept as given, not reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateProblem {
    aux_genus: u64,
    tau_d: BigRational,
    a: BigInt,
    b: BigInt,
}

impl CertificateProblem {
    pub fn new(
        aux_genus: u64,
        tau_d: BigRational,
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
    ) -> Result<Self, ProverError> {
        let a = a.into();
        let b = b.into();
        if aux_genus == 0 {
            return Err(ProverError::DegenerateGenus);
        }
        if !a.is_positive() || !b.is_positive() {
            return Err(ProverError::NonPositivePair);
        }
        let h = BigInt::from(aux_genus);
        if !tau_d.is_positive()
            || tau_d.numer() * tau_d.numer() < &h * tau_d.denom() * tau_d.denom()
        {
            return Err(ProverError::TauBelowUniversalBound(tau_d, aux_genus));
        }
        // a/b > tau_d, cross-multiplied
        if &a * tau_d.denom() <= &b * tau_d.numer() {
            return Err(ProverError::RatioNotAboveTau { a, b, tau_d });
        }
        let l_self = &a * &a - &h * &b * &b;
        let b_sq = &b * &b;
        if l_self <= b_sq {
            return Err(ProverError::TailCannotClose { l_self, b_sq });
        }
        Ok(Self {
            aux_genus,
            tau_d,
            a,
            b,
        })
    }

    pub fn aux_genus(&self) -> u64 {
        self.aux_genus
    }

    pub fn tau_d(&self) -> &BigRational {
        &self.tau_d
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn ratio(&self) -> BigRational {
        BigRational::new(self.a.clone(), self.b.clone())
    }

    /// The class `L = (a+b)x − b(δ/2)`, i.e. `(a, b)` at genus `h`.
    pub fn l_class(&self) -> DivClass {
        DivClass::new(Genus(self.aux_genus), self.a.clone(), self.b.clone())
    }

    /// `L² = a² − h·b²`.
    pub fn l_self(&self) -> BigInt {
        self.l_class().self_intersection()
    }

    fn h(&self) -> BigInt {
        BigInt::from(self.aux_genus)
    }

    /// `L·E = a·n − b·h·γ` for `E = (n, γ)`.
    pub fn l_dot(&self, n: &BigInt, gamma: &BigInt) -> BigInt {
        &self.a * n - &self.b * self.h() * gamma
    }

    /// `E² = n² − h·γ²`.
    pub fn e_self(&self, n: &BigInt, gamma: &BigInt) -> BigInt {
        n * n - self.h() * gamma * gamma
    }

    /// Smallest feasible `n` for a class with `γ > 0`: the least `n` with
    /// `tau_d·n − h·γ ≥ 0`, bumped past the (unique) `n` with `n² = h·γ²`
    /// since zero-self-intersection classes miss a very general point.
    /// Returns the bound and whether the bump fired.
    fn min_feasible_n(&self, gamma: &BigInt) -> (BigInt, bool) {
        debug_assert!(gamma.is_positive());
        let p = self.tau_d.numer();
        let q = self.tau_d.denom();
        let mut n = (self.h() * gamma * q).div_ceil(p);
        if n.is_zero() || n.is_negative() {
            n = BigInt::one();
        }
        let bumped = &n * &n == self.h() * gamma * gamma;
        if bumped {
            n += 1;
        }
        (n, bumped)
    }
}

/// Least `m0 ≥ 2` such that `L²·m(m−1) > (b·m − 1)²` for every `m ≥ m0`,
/// computed from the integer roots of `f(m) = (L²−b²)m² − (L²−2b)m − 1`.
pub fn tail_threshold(problem: &CertificateProblem) -> BigInt {
    let l2 = problem.l_self();
    let b = &problem.b;
    let lead = &l2 - b * b; // positive by the problem invariant
    let mid: BigInt = &l2 - b * 2u32; // non-negative since L² > b² gives L² ≥ (b−1)² + 2b
    let f = |m: &BigInt| -> BigInt { &lead * m * m - &mid * m - 1 };
    let disc: BigInt = &mid * &mid + &lead * 4;
    // floor of the largest real root, then exact adjustment
    let mut c: BigInt = (&mid + disc.sqrt()).div_floor(&(&lead * 2u32));
    if c.is_negative() {
        c = BigInt::zero();
    }
    while f(&(&c + 1)) <= BigInt::zero() {
        c += 1;
    }
    while c.is_positive() && f(&c) > BigInt::zero() {
        c -= 1;
    }
    let m0 = &c + 1;
    if m0 < BigInt::from(2) {
        BigInt::from(2)
    } else {
        m0
    }
}

/// Why a case was excluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExclusionReason {
    /// `E² < 0`: at most one irreducible curve carries the class, so it
    /// misses a very general point.
    RigidNegative,
    /// `E² = 0`: finitely many irreducible curves per `γ` carry the class.
    ZeroSelfIntersection,
    /// `E² > 0` but no multiplicity `m ≤ m_max` reaches `b·m > L·E`.
    MultiplicityGap,
}

impl fmt::Display for ExclusionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExclusionReason::RigidNegative => "rigid-negative-class",
            ExclusionReason::ZeroSelfIntersection => "zero-self-intersection",
            ExclusionReason::MultiplicityGap => "multiplicity-gap",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Excluded(ExclusionReason),
    /// The multiplicities `m` for which the class would beat the bound.
    Violating(Vec<BigInt>),
}

/// One exception class with all the numbers of its case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionCase {
    pub n: BigInt,
    pub gamma: BigInt,
    pub l_dot_e: BigInt,
    pub e_self: BigInt,
    /// Largest multiplicity compatible with `m(m−1) ≤ min(E², ⌊(L·E)²/L²⌋)`;
    /// zero when `E² ≤ 0` and the cap was never computed.
    pub m_max: BigInt,
    pub verdict: Verdict,
}

impl ExceptionCase {
    /// `L·E / m_max`, the worst ratio the case can produce.
    pub fn ratio_floor(&self) -> Option<BigRational> {
        if self.m_max.is_positive() {
            Some(BigRational::new(self.l_dot_e.clone(), self.m_max.clone()))
        } else {
            None
        }
    }
}

/// Result of the global `m = 1` check: the exact minimum of `L·E` over the
/// feasible region and the class attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M1Check {
    pub passed: bool,
    pub min_l_dot_e: BigInt,
    pub at: (BigInt, BigInt),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Proved,
    Failed,
}

/// Full output of a certificate run: the case list, any violating triples,
/// and a byte-deterministic transcript.
#[derive(Debug, Clone)]
pub struct CertificateResult {
    pub outcome: Outcome,
    pub m0: BigInt,
    pub threshold: BigInt,
    pub m1: M1Check,
    pub exceptions: Vec<ExceptionCase>,
    /// `(n, γ, m)` triples that defeat the certificate, when `Failed`.
    pub witnesses: Vec<(BigInt, BigInt, BigInt)>,
    pub zero_class_assumption_used: bool,
    pub rigidity_used: bool,
    pub transcript: String,
}

impl CertificateResult {
    pub fn proved(&self) -> bool {
        self.outcome == Outcome::Proved
    }
}

fn enumerate_with_flags(
    problem: &CertificateProblem,
    m0: &BigInt,
) -> (Vec<(BigInt, BigInt)>, bool) {
    let threshold: BigInt = &problem.b * (m0 - 1) - 1;
    let mut out = Vec::new();
    let mut bumped_any = false;
    if threshold.is_negative() {
        return (out, false);
    }
    let a = &problem.a;
    let b = &problem.b;
    let h = problem.h();
    let bh = b * &h;

    // γ ≤ 0: every unit of |γ| adds b·h ≥ 1 to L·E, so the range is finite
    let mut j = BigInt::zero();
    loop {
        let base = a + &bh * &j; // L·E at n = 1, γ = −j
        if base > threshold {
            break;
        }
        let n_top = (&threshold - &bh * &j).div_floor(a);
        let mut n = BigInt::one();
        while n <= n_top {
            out.push((n.clone(), -j.clone()));
            n += 1;
        }
        j += 1;
    }

    // γ > 0: L·E ≥ h·γ·(a·q − b·p)/p grows linearly in γ because a/b > tau_d
    let p = problem.tau_d.numer();
    let q = problem.tau_d.denom();
    let slope = a * q - b * p; // positive
    let mut gamma = BigInt::one();
    loop {
        if &h * &gamma * &slope > &threshold * p {
            break;
        }
        let (n_min, bumped) = problem.min_feasible_n(&gamma);
        bumped_any |= bumped;
        let n_top = (&threshold + &bh * &gamma).div_floor(a);
        let mut n = n_min;
        while n <= n_top {
            out.push((n.clone(), gamma.clone()));
            n += 1;
        }
        gamma += 1;
    }
    (out, bumped_any)
}

/// All classes in the feasible region with `L·E ≤ b·(m0−1) − 1`: the cases
/// the tail does not cover.
pub fn enumerate_exceptions(problem: &CertificateProblem, m0: &BigInt) -> Vec<(BigInt, BigInt)> {
    enumerate_with_flags(problem, m0).0
}

/// Largest `m ≥ 1` with `m(m−1) ≤ cap`, for `cap ≥ 0`.
fn multiplicity_cap(cap: &BigInt) -> BigInt {
    debug_assert!(!cap.is_negative());
    let mut m: BigInt = (BigInt::one() + (cap * 4u32 + 1u32).sqrt()).div_floor(&BigInt::from(2));
    if m < BigInt::one() {
        m = BigInt::one();
    }
    while (&m + 1) * &m <= *cap {
        m += 1;
    }
    while m > BigInt::one() && &m * (&m - 1) > *cap {
        m -= 1;
    }
    m
}

/// Decide one exception class.
pub fn exclude_class(problem: &CertificateProblem, n: &BigInt, gamma: &BigInt) -> ExceptionCase {
    let l_dot_e = problem.l_dot(n, gamma);
    let e_self = problem.e_self(n, gamma);
    if e_self.is_negative() {
        return ExceptionCase {
            n: n.clone(),
            gamma: gamma.clone(),
            l_dot_e,
            e_self,
            m_max: BigInt::zero(),
            verdict: Verdict::Excluded(ExclusionReason::RigidNegative),
        };
    }
    if e_self.is_zero() {
        return ExceptionCase {
            n: n.clone(),
            gamma: gamma.clone(),
            l_dot_e,
            e_self,
            m_max: BigInt::zero(),
            verdict: Verdict::Excluded(ExclusionReason::ZeroSelfIntersection),
        };
    }
    // E² > 0: multiplicities are capped by the moving-family inequality
    // m(m−1) ≤ E² and the Hodge-index inequality E²·L² ≤ (L·E)².
    let hodge_cap = (&l_dot_e * &l_dot_e).div_floor(&problem.l_self());
    let cap = e_self.clone().min(hodge_cap);
    let m_max = multiplicity_cap(&cap);
    // b·m > L·E first holds at m = ⌊L·E/b⌋ + 1
    let m_violate_from: BigInt = l_dot_e.div_floor(&problem.b) + 1;
    let verdict = if m_violate_from <= m_max {
        let mut ms = Vec::new();
        let mut m = m_violate_from;
        while m <= m_max {
            ms.push(m.clone());
            m += 1;
        }
        Verdict::Violating(ms)
    } else {
        Verdict::Excluded(ExclusionReason::MultiplicityGap)
    };
    ExceptionCase {
        n: n.clone(),
        gamma: gamma.clone(),
        l_dot_e,
        e_self,
        m_max,
        verdict,
    }
}

fn m1_check_with_flags(problem: &CertificateProblem) -> (M1Check, bool) {
    let a = &problem.a;
    let b = &problem.b;
    let h = problem.h();
    // γ ≤ 0 branch: minimized at (1, 0) where L·E = a
    let mut min = a.clone();
    let mut at = (BigInt::one(), BigInt::zero());
    let mut bumped_any = false;
    // γ > 0 branch: value at the feasibility floor, with the linear lower
    // bound h·γ·(a·q − b·p)/p as the stopping rule
    let p = problem.tau_d.numer();
    let q = problem.tau_d.denom();
    let slope = a * q - b * p;
    let mut gamma = BigInt::one();
    loop {
        if &h * &gamma * &slope > &min * p {
            break;
        }
        let (n_min, bumped) = problem.min_feasible_n(&gamma);
        bumped_any |= bumped;
        let value = problem.l_dot(&n_min, &gamma);
        if value < min {
            min = value;
            at = (n_min, gamma.clone());
        }
        gamma += 1;
    }
    (
        M1Check {
            passed: min >= *b,
            min_l_dot_e: min,
            at,
        },
        bumped_any,
    )
}

/// Verify `min L·E ≥ b` over the whole feasible region, in closed form.
pub fn global_m1_check(problem: &CertificateProblem) -> M1Check {
    m1_check_with_flags(problem).0
}

fn render_transcript(problem: &CertificateProblem, r: &CertificateResult) -> String {
    let m0 = &r.m0;
    let m1 = &r.m1;
    let cases = &r.exceptions;
    let witnesses = &r.witnesses;
    let mut t = String::new();
    let l2 = problem.l_self();
    let lead: BigInt = &l2 - &problem.b * &problem.b;
    let neg_mid: BigInt = &problem.b * 2 - &l2;
    writeln!(
        t,
        "TAIL genus_d={} tau_d={} a={} b={} l_self={} f={},{},-1 m0={}",
        problem.aux_genus, problem.tau_d, problem.a, problem.b, l2, lead, neg_mid, m0
    )
    .unwrap();
    if r.zero_class_assumption_used {
        writeln!(
            t,
            "ASSUME zero-self-intersection classes miss a very general point (finitely many per gamma)"
        )
        .unwrap();
    }
    if r.rigidity_used {
        writeln!(
            t,
            "ASSUME negative classes are rigid and miss a very general point"
        )
        .unwrap();
    }
    writeln!(
        t,
        "M1 min_le={} at=({},{}) required={} status={}",
        m1.min_l_dot_e,
        m1.at.0,
        m1.at.1,
        problem.b,
        if m1.passed { "pass" } else { "fail" }
    )
    .unwrap();
    for case in cases {
        write!(
            t,
            "CASE class=({},{}) le={} e_self={}",
            case.n, case.gamma, case.l_dot_e, case.e_self
        )
        .unwrap();
        if case.m_max.is_positive() {
            write!(t, " m_max={}", case.m_max).unwrap();
            if let Some(floor) = case.ratio_floor() {
                write!(t, " ratio_floor={}", floor).unwrap();
            }
        }
        match &case.verdict {
            Verdict::Excluded(reason) => writeln!(t, " verdict=excluded reason={reason}").unwrap(),
            Verdict::Violating(ms) => {
                let list = ms
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                writeln!(t, " verdict=violating m={list}").unwrap()
            }
        }
    }
    match r.outcome {
        Outcome::Proved => writeln!(
            t,
            "VERDICT proved exceptions={} m0={} min_le={}",
            cases.len(),
            m0,
            m1.min_l_dot_e
        )
        .unwrap(),
        Outcome::Failed => {
            let list = witnesses
                .iter()
                .map(|(n, g, m)| format!("({n},{g},{m})"))
                .collect::<Vec<_>>()
                .join(",");
            writeln!(
                t,
                "VERDICT failed exceptions={} m0={} min_le={} witnesses={}",
                cases.len(),
                m0,
                m1.min_l_dot_e,
                if list.is_empty() { "none" } else { &list }
            )
            .unwrap()
        }
    }
    t
}

/// Run the whole certificate: tail threshold, global `m = 1` check, and the
/// finite case analysis. `Proved` iff every leg holds.
pub fn certify(problem: &CertificateProblem) -> CertificateResult {
    let m0 = tail_threshold(problem);
    let (m1, m1_bumped) = m1_check_with_flags(problem);
    let (classes, enum_bumped) = enumerate_with_flags(problem, &m0);
    let threshold = &problem.b * (&m0 - 1) - 1;

    let mut exceptions = Vec::with_capacity(classes.len());
    let mut witnesses = Vec::new();
    let mut zero_used = m1_bumped || enum_bumped;
    let mut rigid_used = false;
    for (n, gamma) in &classes {
        let case = exclude_class(problem, n, gamma);
        match &case.verdict {
            Verdict::Excluded(ExclusionReason::RigidNegative) => rigid_used = true,
            Verdict::Excluded(ExclusionReason::ZeroSelfIntersection) => zero_used = true,
            Verdict::Excluded(ExclusionReason::MultiplicityGap) => {}
            Verdict::Violating(ms) => {
                for m in ms {
                    witnesses.push((n.clone(), gamma.clone(), m.clone()));
                }
            }
        }
        exceptions.push(case);
    }

    let outcome = if m1.passed && witnesses.is_empty() {
        Outcome::Proved
    } else {
        Outcome::Failed
    };
    let mut result = CertificateResult {
        outcome,
        m0,
        threshold,
        m1,
        exceptions,
        witnesses,
        zero_class_assumption_used: zero_used,
        rigidity_used: rigid_used,
        transcript: String::new(),
    };
    result.transcript = render_transcript(problem, &result);
    result
}

/// A certified pair together with its full certificate.
#[derive(Debug, Clone)]
pub struct FoundRatio {
    pub problem: CertificateProblem,
    pub result: CertificateResult,
}

/// Outcome of the grid search over certifiable ratios.
#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found(Box<FoundRatio>),
    NoneFound,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<(&CertificateProblem, &CertificateResult)> {
        match self {
            SearchOutcome::Found(f) => Some((&f.problem, &f.result)),
            SearchOutcome::NoneFound => None,
        }
    }
}

/// Smallest certifiable ratio `a/b` with `b ≤ max_b`: for each `b` the
/// grid `tau_d < a/b`, `a² > (h+1)b²` is scanned in increasing `a` up to
/// the first proof (larger `a` only worsens the ratio for fixed `b`), and
/// pairs that cannot beat the best ratio found so far are skipped. Ties go
/// to smaller `b`, then smaller `a`. No monotonicity of certifiability in
/// `a` is assumed.
pub fn search_best_ratio(
    aux_genus: u64,
    tau_d: &BigRational,
    max_b: u64,
) -> Result<SearchOutcome, ProverError> {
    if max_b == 0 {
        return Err(ProverError::EmptyGrid);
    }
    if aux_genus == 0 {
        return Err(ProverError::DegenerateGenus);
    }
    let h = BigInt::from(aux_genus);
    if !tau_d.is_positive() || tau_d.numer() * tau_d.numer() < &h * tau_d.denom() * tau_d.denom() {
        return Err(ProverError::TauBelowUniversalBound(
            tau_d.clone(),
            aux_genus,
        ));
    }
    let p = tau_d.numer();
    let q = tau_d.denom();
    let mut best: Option<(BigInt, BigInt, CertificateResult)> = None;

    for b_small in 1..=max_b {
        let b = BigInt::from(b_small);
        let a_ratio_min: BigInt = (&b * p).div_floor(q) + 1u32;
        let a_tail_min = ((&h + 1u32) * &b * &b).sqrt() + 1u32;
        let a_min = a_ratio_min.max(a_tail_min);
        // past this point the certificate provably succeeds: the tail closes
        // at m0 = 2 and the region minimum of L·E clears b
        let a_sure = {
            let sqrt_part: BigInt = ((&h + 2u32) * &b * &b).sqrt() + 1u32;
            let slope_part: BigInt = (&b * p * (&h + 1u32) + q * &h - 1u32).div_floor(&(q * &h));
            sqrt_part.max(slope_part)
        };
        let a_cap: BigInt = a_min.clone().max(a_sure) + 2u32;

        let mut a = a_min;
        while a <= a_cap {
            if let Some((best_a, best_b, _)) = &best {
                // ratio a/b is non-decreasing in a: once it cannot beat the
                // best, the rest of this b is hopeless
                if &a * best_b >= best_a * &b {
                    break;
                }
            }
            let problem = CertificateProblem::new(aux_genus, tau_d.clone(), a.clone(), b.clone())
                .expect("grid point satisfies the problem invariants");
            let result = certify(&problem);
            if result.proved() {
                best = Some((a, b.clone(), result));
                break;
            }
            a += 1;
        }
    }

    Ok(match best {
        Some((a, b, result)) => SearchOutcome::Found(Box::new(FoundRatio {
            problem: CertificateProblem::new(aux_genus, tau_d.clone(), a, b)
                .expect("winning pair was constructed from a valid grid point"),
            result,
        })),
        None => SearchOutcome::NoneFound,
    })
}
