//! Nef/effective-cone predicates in the `(x, δ/2)` plane, the universal
//! bounds on the nef-boundary invariant `τ`, and the self-intersection
//! upper bound for Seshadri constants.
//!
//! `τ(C)` is the smallest `s ≥ 0` such that `(s+1)x − (δ/2)` is nef; a nef
//! class has non-negative self-intersection, which forces `τ(C) ≥ √g`.

use crate::bound::Bound;
use crate::lattice::{DivClass, Genus, LatticeError, QClass};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConeError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("class ({0}) does not have negative self-intersection")]
    NotNegative(String),
    #[error("coexistence test needs two distinct classes")]
    ClassesEqual,
    #[error("coexistence test needs gamma > 0 on both classes")]
    GammaNotPositive,
    #[error("Seshadri upper bound needs m >= 1 points")]
    ZeroPoints,
    #[error("Seshadri upper bound needs a nef class, so L^2 >= 0")]
    NegativeDegree,
    #[error("cannot represent an exact {0}-th root; only dimensions 1 and 2 (and exact powers) are supported")]
    UnrepresentableRoot(u32),
    #[error("tau is only tabulated for genus 0..=4; genus {0} must go through the bound rules")]
    GenusNotTabulated(Genus),
}

/// Universal lower bound `τ(C) ≥ √g`, from the non-negative
/// self-intersection of the nef boundary class.
pub fn tau_lower_bound(genus: Genus) -> Bound {
    Bound::sqrt_of(
        genus.to_rational(),
        "nef boundary class has non-negative self-intersection",
    )
}

/// Whether `L` pairs non-negatively against every class in `generators`.
///
/// This is a relative predicate: it certifies nefness only against the
/// supplied list, not against every irreducible curve on the surface.
pub fn nef_against(l: &QClass, generators: &[DivClass]) -> Result<bool, ConeError> {
    for e in generators {
        let pairing = l.intersect(&QClass::from(e))?;
        if pairing.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether two distinct negative classes with `γ > 0` could both be reduced
/// irreducible curves. Distinct irreducible curves meet non-negatively, so a
/// negative pairing rules the pair out.
pub fn negative_pair_coexist(d: &DivClass, e: &DivClass) -> Result<bool, ConeError> {
    if d == e {
        return Err(ConeError::ClassesEqual);
    }
    if !d.gamma().is_positive() || !e.gamma().is_positive() {
        return Err(ConeError::GammaNotPositive);
    }
    if !d.self_intersection().is_negative() {
        return Err(ConeError::NotNegative(d.to_string()));
    }
    if !e.self_intersection().is_negative() {
        return Err(ConeError::NotNegative(e.to_string()));
    }
    Ok(!d.intersect(e)?.is_negative())
}

/// Upper bound `ε ≤ (Lⁿ/m)^(1/n)` for the Seshadri constant of `m` points:
/// on the blowup, `(π*L − cE)ⁿ ≥ 0` for nef pullbacks.
///
/// `dim = 1` and `dim = 2` are represented exactly; higher roots only when
/// `L_self/m` is an exact `dim`-th power.
pub fn seshadri_upper_bound(l_self: &BigRational, m: u64, dim: u32) -> Result<Bound, ConeError> {
    if m == 0 {
        return Err(ConeError::ZeroPoints);
    }
    if l_self.is_negative() {
        return Err(ConeError::NegativeDegree);
    }
    let ratio = l_self / BigRational::from_integer(BigInt::from(m));
    let provenance = format!("degree bound (L^n / m)^(1/n) with n = {dim}");
    match dim {
        0 => Err(ConeError::UnrepresentableRoot(0)),
        1 => Ok(Bound::rational(ratio, provenance)),
        2 => Ok(Bound::sqrt_of(ratio, provenance)),
        d => {
            let num_root = ratio.numer().nth_root(d);
            let den_root = ratio.denom().nth_root(d);
            if num_root.pow(d) == *ratio.numer() && den_root.pow(d) == *ratio.denom() {
                Ok(Bound::rational(
                    BigRational::new(num_root, den_root),
                    provenance,
                ))
            } else {
                Err(ConeError::UnrepresentableRoot(d))
            }
        }
    }
}

/// Exact values of `τ` for a very general curve of genus `0..=4`, each
/// realized by an explicit curve class.
pub fn low_genus_tau(genus: Genus) -> Result<Bound, ConeError> {
    let rational = |n: i64, d: i64, why: &str| {
        Bound::rational(BigRational::new(BigInt::from(n), BigInt::from(d)), why)
    };
    match genus.value() {
        0 => Ok(rational(
            0,
            1,
            "symmetric square of a rational curve is the plane",
        )),
        1 => Ok(rational(
            1,
            1,
            "elliptic case: nef cone is the full circular cone",
        )),
        2 => Ok(rational(
            2,
            1,
            "hyperelliptic pencil gives a curve of class 2x-(delta/2)",
        )),
        3 => Ok(rational(9, 5, "irreducible curve of class 16x-6(delta/2)")),
        4 => Ok(rational(
            2,
            1,
            "trigonal pencils give a curve of class 3x-(delta/2)",
        )),
        _ => Err(ConeError::GenusNotTabulated(genus)),
    }
}
