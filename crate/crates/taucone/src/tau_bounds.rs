//! Upper bounds on `τ(C)` assembled from certified inference rules: the
//! plane-Seshadri corollary, the genus recursion step, the `√(g+1)` bound
//! derived from known multipoint Seshadri estimates, and the floor-sqrt
//! bound of Kouvidakis, plus a registry of citable plane Seshadri data.

use crate::bound::{Bound, BoundValue};
use crate::cone::{low_genus_tau, tau_lower_bound};
use crate::lattice::Genus;
use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Deserialize;
use std::fmt;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PropagationError {
    #[error("Seshadri datum needs 0 < lower <= 1, got {0}")]
    DatumOutOfRange(BigRational),
    #[error("Seshadri datum needs m >= 1 points")]
    DatumZeroPoints,
    #[error(
        "datum covers m = {datum_m} points but the corollary at genus {genus} needs m = {genus}"
    )]
    PointCountMismatch { datum_m: u64, genus: Genus },
    #[error("the plane corollary needs genus >= 1")]
    GenusZero,
    #[error("the sqrt(g+1) bound is only certified for genus >= 10, got {0}")]
    BelowNagataRange(Genus),
    #[error("recursion step needs a/b = {ratio} to strictly exceed the previous bound {prev}")]
    RatioNotAbovePrevious { ratio: BigRational, prev: String },
    #[error("recursion step needs the Seshadri hypothesis certified by an exclusion certificate")]
    HypothesisNotCertified,
    #[error("recursion step needs a, b > 0")]
    NonPositiveRatio,
    #[error(
        "chain step to genus {target}: ratio {ratio} does not exceed sqrt({aux}), \
         the universal lower bound at the auxiliary genus"
    )]
    ChainStepBlocked {
        target: u64,
        aux: u64,
        ratio: BigRational,
    },
    #[error("registry file: {0}")]
    RegistryFormat(String),
}

/// A certified lower bound for the Seshadri constant of `m` very general
/// points in the plane with respect to a line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeshadriDatum {
    m: u64,
    lower: BigRational,
    source: String,
}

impl SeshadriDatum {
    pub fn new(
        m: u64,
        lower: BigRational,
        source: impl Into<String>,
    ) -> Result<Self, PropagationError> {
        if m == 0 {
            return Err(PropagationError::DatumZeroPoints);
        }
        if !lower.is_positive() || lower > BigRational::one() {
            return Err(PropagationError::DatumOutOfRange(lower));
        }
        Ok(Self {
            m,
            lower,
            source: source.into(),
        })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn lower(&self) -> &BigRational {
        &self.lower
    }

    pub fn source(&self) -> &str {
        &self.source
    }
}

#[derive(Debug, Deserialize)]
struct RegistryRecord {
    m: u64,
    num: i64,
    den: i64,
    source: String,
}

/// Plane Seshadri data available to the bound rules. User entries take
/// precedence over the built-in ones; among entries for the same `m` the
/// largest certified lower bound wins.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    entries: Vec<SeshadriDatum>,
}

impl Registry {
    /// Built-in data: the five-point value `2/5` and the perfect-square
    /// values `1/k` for `m = k²`, `k ≥ 3`. Everything else must be supplied
    /// with a citation.
    pub fn builtin() -> Self {
        Registry {
            entries: vec![SeshadriDatum::new(
                5,
                BigRational::new(BigInt::from(2), BigInt::from(5)),
                "five-point plane value of Strycharz-Szemberg and Tutaj-Gasinska",
            )
            .expect("valid built-in datum")],
        }
    }

    pub fn push(&mut self, datum: SeshadriDatum) {
        self.entries.push(datum);
    }

    pub fn entries(&self) -> &[SeshadriDatum] {
        &self.entries
    }

    /// Merge records from a JSON file: an array of `{m, num, den, source}`.
    pub fn load_file(&mut self, path: &Path) -> Result<(), PropagationError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| PropagationError::RegistryFormat(format!("{}: {e}", path.display())))?;
        let records: Vec<RegistryRecord> = serde_json::from_str(&text)
            .map_err(|e| PropagationError::RegistryFormat(e.to_string()))?;
        for r in records {
            if r.den == 0 {
                return Err(PropagationError::RegistryFormat(format!(
                    "m = {}: zero denominator",
                    r.m
                )));
            }
            let lower = BigRational::new(BigInt::from(r.num), BigInt::from(r.den));
            self.entries.push(SeshadriDatum::new(r.m, lower, r.source)?);
        }
        Ok(())
    }

    /// Best known datum for `m` points: explicit entries first, then the
    /// perfect-square rule `ε_{k²} = 1/k` for `k ≥ 3`.
    pub fn lookup(&self, m: u64) -> Option<SeshadriDatum> {
        let explicit = self
            .entries
            .iter()
            .filter(|d| d.m == m)
            .max_by(|a, b| a.lower.cmp(&b.lower))
            .cloned();
        if explicit.is_some() {
            return explicit;
        }
        let k = m.sqrt();
        if k >= 3 && k * k == m {
            return Some(
                SeshadriDatum::new(
                    m,
                    BigRational::new(BigInt::one(), BigInt::from(k)),
                    "perfect-square case of the Nagata conjecture",
                )
                .expect("valid generated datum"),
            );
        }
        None
    }
}

/// `τ(C) ≤ 1/ε_g(plane)` for a very general genus-`g` curve.
pub fn corollary_bound(genus: Genus, datum: &SeshadriDatum) -> Result<Bound, PropagationError> {
    if genus.value() == 0 {
        return Err(PropagationError::GenusZero);
    }
    if datum.m != genus.value() {
        return Err(PropagationError::PointCountMismatch {
            datum_m: datum.m,
            genus,
        });
    }
    Ok(Bound::rational(
        datum.lower.recip(),
        format!("reciprocal plane Seshadri bound ({})", datum.source),
    ))
}

/// `τ(C) ≤ √(g+1)` for `g ≥ 10`: the exact simplification of
/// `√g / √(1 − 1/(g+1))`.
pub fn nagata_style_bound(genus: Genus) -> Result<Bound, PropagationError> {
    if genus.value() < 10 {
        return Err(PropagationError::BelowNagataRange(genus));
    }
    Ok(Bound::sqrt_of(
        BigRational::from_integer(BigInt::from(genus.value() + 1)),
        "sqrt(g)/sqrt(1 - 1/(g+1)), simplified to sqrt(g+1)",
    ))
}

/// `τ(C) ≤ g/⌊√g⌋` for `g ≥ 1`.
pub fn kouvidakis_bound(genus: Genus) -> Result<Bound, PropagationError> {
    if genus.value() == 0 {
        return Err(PropagationError::GenusZero);
    }
    let g = genus.value();
    Ok(Bound::rational(
        BigRational::new(BigInt::from(g), BigInt::from(g.sqrt())),
        "Kouvidakis bound g/floor(sqrt(g))",
    ))
}

/// One genus-recursion step: if `a/b` strictly exceeds a certified upper
/// bound for `τ` at genus `g−1` and the Seshadri hypothesis on the
/// auxiliary surface has been certified, then `τ ≤ a/b` at genus `g`.
///
/// The hypothesis flag is the caller's responsibility; it is produced by
/// the exclusion prover, not recomputed here.
pub fn propagate_step(
    genus: Genus,
    a: &BigInt,
    b: &BigInt,
    tau_upper_prev: &Bound,
    seshadri_hypothesis_certified: bool,
) -> Result<Bound, PropagationError> {
    if !a.is_positive() || !b.is_positive() {
        return Err(PropagationError::NonPositiveRatio);
    }
    let ratio = BigRational::new(a.clone(), b.clone());
    if BoundValue::rational(ratio.clone()) <= *tau_upper_prev.value() {
        return Err(PropagationError::RatioNotAbovePrevious {
            ratio,
            prev: tau_upper_prev.value().to_string(),
        });
    }
    if !seshadri_hypothesis_certified {
        return Err(PropagationError::HypothesisNotCertified);
    }
    Ok(Bound::rational(
        ratio,
        format!("recursion step into genus {genus}"),
    ))
}

/// Run the genus recursion all the way up from the plane: `g` steps, each
/// checked against the necessary condition that the ratio `1/ε` strictly
/// exceeds `√(aux genus)`. Succeeds with the same value as
/// [`corollary_bound`]; the point is the per-step validation.
pub fn chain_from_plane(genus: Genus, datum: &SeshadriDatum) -> Result<Bound, PropagationError> {
    if genus.value() == 0 {
        return Err(PropagationError::GenusZero);
    }
    if datum.m != genus.value() {
        return Err(PropagationError::PointCountMismatch {
            datum_m: datum.m,
            genus,
        });
    }
    let ratio = datum.lower.recip();
    let ratio_value = BoundValue::rational(ratio.clone());
    for target in 1..=genus.value() {
        let aux = target - 1;
        let aux_floor = BoundValue::sqrt_of(BigRational::from_integer(BigInt::from(aux)));
        if ratio_value <= aux_floor {
            return Err(PropagationError::ChainStepBlocked { target, aux, ratio });
        }
    }
    Ok(Bound::rational(
        ratio,
        format!(
            "plane Seshadri data pushed through {} recursion steps ({})",
            genus.value(),
            datum.source
        ),
    ))
}

/// A ratio `a/b` certified by the exclusion prover as an upper bound for
/// `τ` at some genus, fed into reports as a cached result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedRatio {
    pub a: BigInt,
    pub b: BigInt,
    pub source: String,
}

impl CertifiedRatio {
    pub fn ratio(&self) -> BigRational {
        BigRational::new(self.a.clone(), self.b.clone())
    }
}

/// Which inference rule produced an upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperRule {
    LowGenusTable,
    PlaneCorollary,
    NagataStyle,
    Kouvidakis,
    ExclusionCertificate,
}

impl UpperRule {
    pub fn name(self) -> &'static str {
        match self {
            UpperRule::LowGenusTable => "low-genus-table",
            UpperRule::PlaneCorollary => "plane-corollary",
            UpperRule::NagataStyle => "nagata-style",
            UpperRule::Kouvidakis => "kouvidakis",
            UpperRule::ExclusionCertificate => "exclusion-certificate",
        }
    }
}

impl fmt::Display for UpperRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct TauUpper {
    pub bound: Bound,
    pub rule: UpperRule,
}

/// All bounds known for one genus: the universal lower bound, every
/// applicable upper bound with its rule, and the exact minimum.
#[derive(Debug, Clone)]
pub struct TauReport {
    pub genus: Genus,
    pub lower: Bound,
    pub uppers: Vec<TauUpper>,
    pub best_upper: Bound,
}

/// Assemble every applicable rule for one genus. `certified` carries cached
/// exclusion-prover results to include alongside the closed-form rules.
pub fn tau_report(genus: Genus, registry: &Registry, certified: &[CertifiedRatio]) -> TauReport {
    let mut uppers = Vec::new();
    if let Ok(bound) = low_genus_tau(genus) {
        uppers.push(TauUpper {
            bound,
            rule: UpperRule::LowGenusTable,
        });
    }
    if genus.value() >= 1 {
        if let Some(datum) = registry.lookup(genus.value()) {
            let bound = corollary_bound(genus, &datum).expect("datum matches genus");
            uppers.push(TauUpper {
                bound,
                rule: UpperRule::PlaneCorollary,
            });
        }
    }
    if let Ok(bound) = nagata_style_bound(genus) {
        uppers.push(TauUpper {
            bound,
            rule: UpperRule::NagataStyle,
        });
    }
    if let Ok(bound) = kouvidakis_bound(genus) {
        uppers.push(TauUpper {
            bound,
            rule: UpperRule::Kouvidakis,
        });
    }
    for cert in certified {
        uppers.push(TauUpper {
            bound: Bound::rational(cert.ratio(), cert.source.clone()),
            rule: UpperRule::ExclusionCertificate,
        });
    }
    let best_upper = uppers
        .iter()
        .map(|u| &u.bound)
        .min()
        .expect("at least one rule applies at every genus")
        .clone();
    TauReport {
        genus,
        lower: tau_lower_bound(genus),
        uppers,
        best_upper,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn datum(m: u64, n: i64, d: i64) -> SeshadriDatum {
        SeshadriDatum::new(m, rat(n, d), "test datum").unwrap()
    }

    #[test]
    fn datum_validation() {
        assert!(SeshadriDatum::new(3, rat(1, 2), "ok").is_ok());
        assert!(SeshadriDatum::new(3, rat(0, 1), "zero").is_err());
        assert!(SeshadriDatum::new(3, rat(3, 2), "too big").is_err());
        assert!(SeshadriDatum::new(0, rat(1, 2), "no points").is_err());
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(
            corollary_bound(Genus(5), &datum(5, 2, 5)).unwrap().value(),
            &BoundValue::Rational(rat(5, 2))
        );
        assert_eq!(
            corollary_bound(Genus(9), &datum(9, 1, 3)).unwrap().value(),
            &BoundValue::integer(3)
        );
        // one point: the line through it gives ε_1 = 1, matching τ = 1 at genus 1
        let one = corollary_bound(Genus(1), &datum(1, 1, 1)).unwrap();
        assert_eq!(one.value(), low_genus_tau(Genus(1)).unwrap().value());
        assert!(corollary_bound(Genus(5), &datum(4, 1, 2)).is_err());
    }

    #[test]
    fn nagata_style_examples() {
        assert_eq!(
            nagata_style_bound(Genus(10)).unwrap().value(),
            &BoundValue::sqrt_of(rat(11, 1))
        );
        assert_eq!(
            nagata_style_bound(Genus(15)).unwrap().value(),
            &BoundValue::integer(4)
        );
        assert!(nagata_style_bound(Genus(9)).is_err());
        for g in 10..=200u64 {
            let b = nagata_style_bound(Genus(g)).unwrap();
            assert_eq!(b.value().squared(), rat(g as i64 + 1, 1));
        }
    }

    #[test]
    fn kouvidakis_examples() {
        assert_eq!(
            kouvidakis_bound(Genus(10)).unwrap().value(),
            &BoundValue::Rational(rat(10, 3))
        );
        assert_eq!(
            kouvidakis_bound(Genus(9)).unwrap().value(),
            &BoundValue::integer(3)
        );
        assert_eq!(
            kouvidakis_bound(Genus(5)).unwrap().value(),
            &BoundValue::Rational(rat(5, 2))
        );
        assert!(kouvidakis_bound(Genus(0)).is_err());
    }

    #[test]
    fn propagate_step_examples() {
        let prev = Bound::rational(rat(2, 1), "tau at genus 4");
        let b = propagate_step(Genus(5), &BigInt::from(16), &BigInt::from(7), &prev, true).unwrap();
        assert_eq!(b.value(), &BoundValue::Rational(rat(16, 7)));
        // 14/7 = 2 does not strictly exceed 2
        assert!(matches!(
            propagate_step(Genus(5), &BigInt::from(14), &BigInt::from(7), &prev, true),
            Err(PropagationError::RatioNotAbovePrevious { .. })
        ));
        assert!(matches!(
            propagate_step(Genus(5), &BigInt::from(16), &BigInt::from(7), &prev, false),
            Err(PropagationError::HypothesisNotCertified)
        ));
    }

    #[test]
    fn chain_matches_corollary() {
        let d5 = datum(5, 2, 5);
        let chained = chain_from_plane(Genus(5), &d5).unwrap();
        assert_eq!(
            chained.value(),
            corollary_bound(Genus(5), &d5).unwrap().value()
        );
        assert_eq!(chained.value(), &BoundValue::Rational(rat(5, 2)));

        let d4 = datum(4, 1, 2);
        assert_eq!(
            chain_from_plane(Genus(4), &d4).unwrap().value(),
            low_genus_tau(Genus(4)).unwrap().value()
        );

        // at genus 3 the corollary only gives 2, worse than the true 9/5
        let d3 = datum(3, 1, 2);
        let loose = chain_from_plane(Genus(3), &d3).unwrap();
        assert_eq!(loose.value(), &BoundValue::integer(2));
        assert!(loose > low_genus_tau(Genus(3)).unwrap());
    }

    #[test]
    fn chain_blocks_and_names_the_step() {
        // ratio 1/ε = 2 fails at the step whose auxiliary genus is 4
        let d = datum(5, 1, 2);
        match chain_from_plane(Genus(5), &d) {
            Err(PropagationError::ChainStepBlocked { target, aux, ratio }) => {
                assert_eq!((target, aux), (5, 4));
                assert_eq!(ratio, rat(2, 1));
            }
            other => panic!("expected blocked chain, got {other:?}"),
        }
    }

    #[test]
    fn registry_lookup_rules() {
        let reg = Registry::builtin();
        assert_eq!(reg.lookup(5).unwrap().lower(), &rat(2, 5));
        assert_eq!(reg.lookup(9).unwrap().lower(), &rat(1, 3));
        assert_eq!(reg.lookup(16).unwrap().lower(), &rat(1, 4));
        assert!(reg.lookup(4).is_none()); // k = 2 is below the certified range
        assert!(reg.lookup(7).is_none());

        let mut reg = reg;
        reg.push(datum(7, 1, 3));
        assert_eq!(reg.lookup(7).unwrap().lower(), &rat(1, 3));
        // best entry for the same m wins
        reg.push(datum(7, 3, 8));
        assert_eq!(reg.lookup(7).unwrap().lower(), &rat(3, 8));
    }

    #[test]
    fn report_examples() {
        let reg = Registry::builtin();

        let r5 = tau_report(
            Genus(5),
            &reg,
            &[CertifiedRatio {
                a: BigInt::from(16),
                b: BigInt::from(7),
                source: "cached exclusion certificate".into(),
            }],
        );
        assert_eq!(r5.lower.value(), &BoundValue::sqrt_of(rat(5, 1)));
        assert_eq!(r5.best_upper.value(), &BoundValue::Rational(rat(16, 7)));
        assert!(r5.uppers.iter().any(|u| u.rule == UpperRule::PlaneCorollary
            && u.bound.value() == &BoundValue::Rational(rat(5, 2))));

        let r10 = tau_report(Genus(10), &reg, &[]);
        assert_eq!(r10.best_upper.value(), &BoundValue::sqrt_of(rat(11, 1)));

        let r2 = tau_report(Genus(2), &reg, &[]);
        assert_eq!(r2.lower.value(), &BoundValue::sqrt_of(rat(2, 1)));
        assert_eq!(r2.best_upper.value(), &BoundValue::integer(2));
    }

    #[test]
    fn best_upper_never_undercuts_the_lower_bound() {
        let reg = Registry::builtin();
        for g in 0..=30u64 {
            let r = tau_report(Genus(g), &reg, &[]);
            assert!(r.best_upper >= r.lower, "g={g}");
        }
    }

    #[test]
    fn perfect_square_closure() {
        let reg = Registry::builtin();
        for g in [9u64, 16, 25] {
            let r = tau_report(Genus(g), &reg, &[]);
            assert_eq!(r.lower, r.best_upper, "g={g}");
            assert_eq!(
                r.best_upper.value(),
                &BoundValue::integer(g.sqrt() as i64),
                "g={g}"
            );
        }
    }
}
