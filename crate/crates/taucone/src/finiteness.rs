//! The finite superset of values `τ` can take above a threshold `α > √g`:
//! pick a rational slope `s ∈ (√g, α)`, find the least `k` making `k·F`
//! effective on every genus-`g` symmetric square via Riemann-Roch, and read
//! off the caps `n ≤ N = k·s`, `γ ≤ M = k(s+1)` for any exceptional class,
//! so every candidate value is of the form `g·γ/n` inside a finite grid.

use crate::bound::{Bound, BoundValue};
use crate::lattice::{DivClass, Genus, QClass};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FinitenessError {
    #[error("empty interval: need lo < hi exactly")]
    EmptyInterval,
    #[error(
        "alpha = {alpha} must strictly exceed sqrt({genus}), the universal lower bound for tau"
    )]
    AlphaNotAboveSqrtGenus { genus: Genus, alpha: BigRational },
    #[error("slope s = {s} must lie strictly between sqrt({genus}) and alpha = {alpha}")]
    SlopeOutOfRange {
        genus: Genus,
        s: BigRational,
        alpha: BigRational,
    },
}

/// The rational with smallest denominator (then smallest numerator) strictly
/// inside `(lo, hi)`, by Stern-Brocot descent with exact endpoint
/// comparisons. The first tree node falling inside an open interval is the
/// unique simplest fraction in it.
pub fn simplest_rational_in(lo: &Bound, hi: &Bound) -> Result<BigRational, FinitenessError> {
    if lo.value() >= hi.value() {
        return Err(FinitenessError::EmptyInterval);
    }
    let zero = BoundValue::integer(0);
    if *lo.value() < zero && *hi.value() > zero {
        return Ok(BigRational::zero());
    }
    if *hi.value() <= zero {
        // mirror a non-positive interval into the positive tree
        let neg = |b: &Bound| match b.value() {
            BoundValue::Rational(q) => Bound::rational(-q, ""),
            BoundValue::Sqrt(_) => unreachable!("sqrt values are non-negative"),
        };
        return Ok(-simplest_rational_in(&neg(hi), &neg(lo))?);
    }
    let mut left = (BigInt::zero(), BigInt::one());
    let mut right = (BigInt::one(), BigInt::zero());
    loop {
        let mediant = (&left.0 + &right.0, &left.1 + &right.1);
        let value = BoundValue::rational(BigRational::new(mediant.0.clone(), mediant.1.clone()));
        if value <= *lo.value() {
            left = mediant;
        } else if value >= *hi.value() {
            right = mediant;
        } else {
            return Ok(BigRational::new(mediant.0, mediant.1));
        }
    }
}

/// The Riemann-Roch polynomial `p(k) = χ(O) + (k²·F² − k·F·K)/2` for the
/// class `F = (s+1)x − (δ/2)`, with `χ(O) = (g−1)(g−2)/2` from the standard
/// invariants `q = g`, `p_g = g(g−1)/2` of the symmetric square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerPolynomial {
    pub constant: BigRational,
    pub linear: BigRational,
    pub quadratic: BigRational,
}

impl EulerPolynomial {
    pub fn eval(&self, k: &BigInt) -> BigRational {
        let k = BigRational::from_integer(k.clone());
        &self.constant + &self.linear * &k + &self.quadratic * &k * &k
    }
}

fn check_slope(genus: Genus, s: &BigRational) -> Result<(), FinitenessError> {
    let above_sqrt_g = s.is_positive() && s * s > genus.to_rational();
    if !above_sqrt_g {
        return Err(FinitenessError::SlopeOutOfRange {
            genus,
            s: s.clone(),
            alpha: s.clone(),
        });
    }
    Ok(())
}

pub fn euler_char_polynomial(
    genus: Genus,
    s: &BigRational,
) -> Result<EulerPolynomial, FinitenessError> {
    check_slope(genus, s)?;
    let f = QClass::new(genus, s.clone(), BigRational::one());
    let k_class = QClass::from(&DivClass::canonical(genus));
    let f_self = f.self_intersection(); // s² − g
    let f_dot_k = f.intersect(&k_class).expect("same genus"); // s(2g−3) − g
    let g = genus.to_bigint();
    let chi = BigRational::new((&g - 1) * (&g - 2), BigInt::from(2));
    let two = BigRational::from_integer(BigInt::from(2));
    Ok(EulerPolynomial {
        constant: chi,
        linear: -f_dot_k / &two,
        quadratic: f_self / &two,
    })
}

/// Least `k ≥ 1` with `k·s` an integer, `x·(K − kF) < 0`, and `p(k) > 0`:
/// for such `k` the class `k·F` is effective on every genus-`g` symmetric
/// square. Exists because the leading coefficient `(s²−g)/2` is positive.
pub fn min_k(genus: Genus, s: &BigRational) -> Result<BigInt, FinitenessError> {
    let poly = euler_char_polynomial(genus, s)?;
    let x_dot_k = BigInt::from(2) * genus.to_bigint() - 3; // x·K = 2g−3
    let step = s.denom().clone();
    let mut k = step.clone();
    loop {
        // x·(K − kF) = (2g−3) − k·s < 0
        let ks = BigRational::from_integer(k.clone()) * s;
        debug_assert!(ks.denom().is_one());
        if ks.numer() > &x_dot_k && poly.eval(&k).is_positive() {
            return Ok(k);
        }
        k += &step;
    }
}

/// The finite candidate data for one `(g, α)` instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessReport {
    pub genus: Genus,
    pub alpha: BigRational,
    pub s: BigRational,
    pub k: BigInt,
    /// `N = k·s`, the cap on `n`.
    pub n_max: BigInt,
    /// `M = k·(s+1)`, the cap on `γ`.
    pub gamma_max: BigInt,
    /// Sorted, deduplicated values `g·γ/n ≥ α` with `1 ≤ n ≤ N`, `1 ≤ γ ≤ M`.
    pub candidates: Vec<BigRational>,
}

/// Enumerate the finite superset of possible `τ` values `≥ α` at genus `g`.
/// When `s` is not supplied, the simplest rational in `(√g, α)` is used.
pub fn candidate_taus(
    genus: Genus,
    alpha: &BigRational,
    s: Option<&BigRational>,
) -> Result<FinitenessReport, FinitenessError> {
    let g_rat = genus.to_rational();
    if !alpha.is_positive() || alpha * alpha <= g_rat {
        return Err(FinitenessError::AlphaNotAboveSqrtGenus {
            genus,
            alpha: alpha.clone(),
        });
    }
    let s = match s {
        Some(s) => {
            if !(s.is_positive() && s * s > g_rat && s < alpha) {
                return Err(FinitenessError::SlopeOutOfRange {
                    genus,
                    s: s.clone(),
                    alpha: alpha.clone(),
                });
            }
            s.clone()
        }
        None => simplest_rational_in(
            &Bound::sqrt_of(g_rat.clone(), "universal lower bound"),
            &Bound::rational(alpha.clone(), "threshold"),
        )?,
    };
    let k = min_k(genus, &s)?;
    let n_max = (BigRational::from_integer(k.clone()) * &s).to_integer();
    let gamma_max = &n_max + &k;

    let mut set = BTreeSet::new();
    let g = genus.to_bigint();
    if g.is_positive() {
        let mut n = BigInt::one();
        while n <= n_max {
            // γ with g·γ/n ≥ α starts at ⌈α·n/g⌉
            let gamma_start = (alpha.numer() * &n).div_ceil(&(alpha.denom() * &g));
            let mut gamma = gamma_start.max(BigInt::one());
            while gamma <= gamma_max {
                set.insert(BigRational::new(&g * &gamma, n.clone()));
                gamma += 1;
            }
            n += 1;
        }
    }
    Ok(FinitenessReport {
        genus,
        alpha: alpha.clone(),
        s,
        k,
        n_max,
        gamma_max,
        candidates: set.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn sqrt_bound(n: i64) -> Bound {
        Bound::sqrt_of(rat(n, 1), "test")
    }

    fn rat_bound(n: i64, d: i64) -> Bound {
        Bound::rational(rat(n, d), "test")
    }

    #[test]
    fn simplest_rational_examples() {
        assert_eq!(
            simplest_rational_in(&sqrt_bound(2), &rat_bound(11, 5)).unwrap(),
            rat(2, 1)
        );
        assert_eq!(
            simplest_rational_in(&sqrt_bound(5), &rat_bound(16, 7)).unwrap(),
            rat(9, 4)
        );
        assert!(matches!(
            simplest_rational_in(&rat_bound(3, 1), &rat_bound(3, 1)),
            Err(FinitenessError::EmptyInterval)
        ));
        assert_eq!(
            simplest_rational_in(&rat_bound(0, 1), &rat_bound(1, 2)).unwrap(),
            rat(1, 3)
        );
        assert_eq!(
            simplest_rational_in(&rat_bound(-1, 1), &rat_bound(1, 3)).unwrap(),
            rat(0, 1)
        );
        assert_eq!(
            simplest_rational_in(&rat_bound(-7, 2), &rat_bound(-2, 1)).unwrap(),
            rat(-3, 1)
        );
    }

    #[test]
    fn euler_polynomial_examples() {
        // g = 2, s = 2: F² = 2, F·K = 0, χ = 0, so p(k) = k²
        let p = euler_char_polynomial(Genus(2), &rat(2, 1)).unwrap();
        assert_eq!(p.constant, rat(0, 1));
        assert_eq!(p.linear, rat(0, 1));
        assert_eq!(p.quadratic, rat(1, 1));
        assert_eq!(p.eval(&BigInt::from(3)), rat(9, 1));

        // leading coefficient is always (s²−g)/2
        for (g, sn, sd) in [(2i64, 2i64, 1i64), (4, 5, 2), (5, 7, 3), (9, 10, 3)] {
            let p = euler_char_polynomial(Genus(g as u64), &rat(sn, sd)).unwrap();
            assert_eq!(
                p.quadratic,
                (rat(sn, sd) * rat(sn, sd) - rat(g, 1)) / rat(2, 1)
            );
        }
        assert_eq!(
            euler_char_polynomial(Genus(4), &rat(5, 2))
                .unwrap()
                .quadratic,
            rat(9, 8)
        );
        assert!(euler_char_polynomial(Genus(4), &rat(2, 1)).is_err());
    }

    #[test]
    fn chi_matches_known_surfaces() {
        // χ(O) = (g−1)(g−2)/2: the plane (g=0) gives 1, the elliptic ruled
        // surface (g=1) gives 0, and g=3 (abelian-like invariants) gives 1
        for (g, chi) in [(0u64, 1i64), (1, 0), (2, 0), (3, 1), (4, 3)] {
            let s = rat(g as i64 + 1, 1); // any slope above sqrt(g)
            let p = euler_char_polynomial(Genus(g), &s).unwrap();
            assert_eq!(p.constant, rat(chi, 1), "g={g}");
        }
    }

    #[test]
    fn min_k_examples() {
        assert_eq!(min_k(Genus(2), &rat(2, 1)).unwrap(), BigInt::from(1));
        // golden value: smallest even k with 5 < 5k/2 and p(k) > 0
        assert_eq!(min_k(Genus(4), &rat(5, 2)).unwrap(), BigInt::from(4));
    }

    #[test]
    fn min_k_postconditions_via_naive_scan() {
        for (g, sn, sd) in [
            (2u64, 2i64, 1i64),
            (4, 5, 2),
            (3, 2, 1),
            (5, 7, 3),
            (6, 13, 5),
        ] {
            let genus = Genus(g);
            let s = rat(sn, sd);
            let k = min_k(genus, &s).unwrap();
            let poly = euler_char_polynomial(genus, &s).unwrap();
            let holds = |k: &BigInt| {
                let ks = BigRational::from_integer(k.clone()) * &s;
                ks.is_integer() && ks > rat(2 * g as i64 - 3, 1) && poly.eval(k).is_positive()
            };
            assert!(holds(&k), "g={g} s={s}");
            let mut smaller = BigInt::one();
            while smaller < k {
                assert!(!holds(&smaller), "k={smaller} already works at g={g} s={s}");
                smaller += 1;
            }
        }
    }

    #[test]
    fn candidate_taus_examples() {
        let r = candidate_taus(Genus(2), &rat(11, 5), Some(&rat(2, 1))).unwrap();
        assert_eq!(r.k, BigInt::from(1));
        assert_eq!(r.n_max, BigInt::from(2));
        assert_eq!(r.gamma_max, BigInt::from(3));
        assert_eq!(r.candidates, vec![rat(3, 1), rat(4, 1), rat(6, 1)]);

        // pinned: with the threshold pushed to 7 nothing in the grid survives
        let r = candidate_taus(Genus(2), &rat(7, 1), Some(&rat(2, 1))).unwrap();
        assert!(r.candidates.is_empty());

        // α = 3 = sqrt(9) exactly is not strictly above the bound
        assert!(matches!(
            candidate_taus(Genus(9), &rat(3, 1), None),
            Err(FinitenessError::AlphaNotAboveSqrtGenus { .. })
        ));
    }

    #[test]
    fn default_slope_is_simplest() {
        let r = candidate_taus(Genus(2), &rat(11, 5), None).unwrap();
        assert_eq!(r.s, rat(2, 1));
        let r = candidate_taus(Genus(5), &rat(16, 7), None).unwrap();
        assert_eq!(r.s, rat(9, 4));
    }

    #[test]
    fn candidates_match_naive_double_loop() {
        for (g, an, ad, sn, sd) in [
            (2u64, 11i64, 5i64, 2i64, 1i64),
            (4, 9, 4, 9, 4),
            (3, 2, 1, 9, 5),
        ] {
            let alpha = rat(an, ad);
            let s = rat(sn, sd);
            let s = if &s * &s > rat(g as i64, 1) && s < alpha {
                Some(s)
            } else {
                None
            };
            let r = candidate_taus(Genus(g), &alpha, s.as_ref()).unwrap();
            let mut naive = BTreeSet::new();
            let n_max: i64 = r.n_max.to_string().parse().unwrap();
            let gamma_max: i64 = r.gamma_max.to_string().parse().unwrap();
            for n in 1..=n_max {
                for gamma in 1..=gamma_max {
                    let tau = rat(g as i64 * gamma, n);
                    if tau >= alpha {
                        naive.insert(tau);
                    }
                }
            }
            assert_eq!(r.candidates, naive.into_iter().collect::<Vec<_>>(), "g={g}");
        }
    }

    proptest! {
        #[test]
        fn monotone_in_alpha(g in 1u64..=6, da in 1i64..=8, db in 1i64..=8) {
            // for fixed g and s, raising alpha never enlarges the candidate set
            let floor = (g as f64).sqrt().floor() as i64 + 1;
            let s = rat(floor, 1);
            prop_assume!(&s * &s > rat(g as i64, 1));
            let alpha_lo = &s + rat(da, 9);
            let alpha_hi = &alpha_lo + rat(db, 9);
            let lo = candidate_taus(Genus(g), &alpha_lo, Some(&s)).unwrap();
            let hi = candidate_taus(Genus(g), &alpha_hi, Some(&s)).unwrap();
            let lo_set: BTreeSet<_> = lo.candidates.iter().cloned().collect();
            for c in &hi.candidates {
                prop_assert!(lo_set.contains(c));
            }
            for c in &lo.candidates {
                prop_assert!(c >= &alpha_lo);
            }
        }

        #[test]
        fn simplest_rational_beats_denominator_scan(
            lo_n in 0i64..400, width_n in 1i64..300, lo_d in 1i64..40, w_d in 1i64..40,
        ) {
            let lo = rat(lo_n, lo_d);
            let hi = &lo + rat(width_n, w_d * 100);
            let got = simplest_rational_in(
                &Bound::rational(lo.clone(), ""),
                &Bound::rational(hi.clone(), ""),
            ).unwrap();
            prop_assert!(got > lo && got < hi);
            // nothing with a smaller denominator fits strictly inside
            let q: i64 = got.denom().to_string().parse().unwrap();
            for den in 1..q {
                let p_min = (&lo * rat(den, 1)).floor().numer().clone() + 1;
                let candidate = BigRational::new(p_min, BigInt::from(den));
                prop_assert!(candidate >= hi || candidate <= lo);
            }
        }
    }
}
