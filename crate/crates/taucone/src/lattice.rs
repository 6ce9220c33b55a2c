//! Exact arithmetic on the rank-2 divisor lattice of a curve's second
//! symmetric product, spanned by `x` (pairs containing a fixed point) and
//! `δ/2` (half the diagonal).
//!
//! Classes are kept in the `(n, γ)` parameterization: the pair `(n, γ)`
//! stands for `(n+γ)x − γ(δ/2)`. The pairing of `(n, γ)` with `(n', γ')` on
//! a genus-`g` surface is `n·n' − γ·γ'·g`, which is the whole intersection
//! theory this crate needs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::fmt;

/// Genus of the underlying smooth curve. Non-negative by construction.
///
/// At `g = 0` the symmetric square is the projective plane and `x` and `δ/2`
/// coincide, so the rank-2 model is degenerate there; classes at genus 0 are
/// still permitted but the Gram form has determinant 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Genus(pub u64);

impl Genus {
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::from_integer(self.to_bigint())
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("genus mismatch: {left} vs {right}; classes combine only on the same surface")]
    GenusMismatch { left: Genus, right: Genus },
    #[error("class ({n},{gamma}) is not exceptional: tau = g*gamma/n needs n > 0 and gamma > 0")]
    NotExceptional { n: BigInt, gamma: BigInt },
}

/// An integral numerical class `(n+γ)x − γ(δ/2)` on the symmetric square of
/// a genus-`g` curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivClass {
    genus: Genus,
    n: BigInt,
    gamma: BigInt,
}

impl DivClass {
    pub fn new(genus: Genus, n: impl Into<BigInt>, gamma: impl Into<BigInt>) -> Self {
        Self {
            genus,
            n: n.into(),
            gamma: gamma.into(),
        }
    }

    /// Build a class from coefficients on the `(x, δ/2)` basis:
    /// `c_x·x + c_d·(δ/2)` has `(n, γ) = (c_x + c_d, −c_d)`.
    pub fn from_basis(genus: Genus, c_x: impl Into<BigInt>, c_d: impl Into<BigInt>) -> Self {
        let c_x = c_x.into();
        let c_d = c_d.into();
        Self {
            genus,
            n: &c_x + &c_d,
            gamma: -c_d,
        }
    }

    /// Coefficients on the `(x, δ/2)` basis: `(c_x, c_d) = (n + γ, −γ)`.
    pub fn to_basis(&self) -> (BigInt, BigInt) {
        (&self.n + &self.gamma, -&self.gamma)
    }

    /// The ample class `x`, i.e. `(1, 0)`.
    pub fn x(genus: Genus) -> Self {
        Self::new(genus, 1, 0)
    }

    /// Half the diagonal, `δ/2 = (1, −1)`.
    pub fn half_diagonal(genus: Genus) -> Self {
        Self::new(genus, 1, -1)
    }

    /// The diagonal `Δ = (2, −2)`, with `Δ² = 4 − 4g`.
    pub fn diagonal(genus: Genus) -> Self {
        Self::new(genus, 2, -2)
    }

    /// Canonical class `K = (2g−2)x − (δ/2)`, i.e. `(2g−3, 1)`.
    pub fn canonical(genus: Genus) -> Self {
        let g = genus.to_bigint();
        Self::new(genus, 2 * g - 3, BigInt::one())
    }

    /// The nef class `G = (g−1)x + (δ/2)` dual to the diagonal, i.e. `(g, −1)`.
    /// Satisfies `G·Δ = 0`. Requires `g ≥ 1`.
    pub fn diagonal_dual(genus: Genus) -> Self {
        assert!(genus.0 >= 1, "diagonal dual needs genus >= 1");
        Self::new(genus, genus.to_bigint(), BigInt::from(-1))
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn gamma(&self) -> &BigInt {
        &self.gamma
    }

    /// Degree against the ample class `x`, which is just `n`.
    pub fn x_degree(&self) -> &BigInt {
        &self.n
    }

    pub fn intersect(&self, other: &DivClass) -> Result<BigInt, LatticeError> {
        if self.genus != other.genus {
            return Err(LatticeError::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(&self.n * &other.n - &self.gamma * &other.gamma * self.genus.to_bigint())
    }

    pub fn self_intersection(&self) -> BigInt {
        self.intersect(self).expect("same genus")
    }

    /// The boundary slope `τ = g·γ/n` computed by an exceptional class.
    /// Requires `n > 0` and `γ > 0`.
    pub fn tau_from_class(&self) -> Result<BigRational, LatticeError> {
        if !self.n.is_positive() || !self.gamma.is_positive() {
            return Err(LatticeError::NotExceptional {
                n: self.n.clone(),
                gamma: self.gamma.clone(),
            });
        }
        Ok(BigRational::new(
            &self.gamma * self.genus.to_bigint(),
            self.n.clone(),
        ))
    }

    pub fn plus(&self, other: &DivClass) -> Result<DivClass, LatticeError> {
        if self.genus != other.genus {
            return Err(LatticeError::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(DivClass {
            genus: self.genus,
            n: &self.n + &other.n,
            gamma: &self.gamma + &other.gamma,
        })
    }

    pub fn scaled(&self, c: &BigInt) -> DivClass {
        DivClass {
            genus: self.genus,
            n: &self.n * c,
            gamma: &self.gamma * c,
        }
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.gamma)
    }
}

/// A rational-coefficient class in the same plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QClass {
    genus: Genus,
    n: BigRational,
    gamma: BigRational,
}

impl QClass {
    pub fn new(genus: Genus, n: BigRational, gamma: BigRational) -> Self {
        Self { genus, n, gamma }
    }

    pub fn from_basis(genus: Genus, c_x: BigRational, c_d: BigRational) -> Self {
        Self {
            genus,
            n: &c_x + &c_d,
            gamma: -c_d,
        }
    }

    pub fn to_basis(&self) -> (BigRational, BigRational) {
        (&self.n + &self.gamma, -self.gamma.clone())
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn n(&self) -> &BigRational {
        &self.n
    }

    pub fn gamma(&self) -> &BigRational {
        &self.gamma
    }

    pub fn x_degree(&self) -> &BigRational {
        &self.n
    }

    pub fn intersect(&self, other: &QClass) -> Result<BigRational, LatticeError> {
        if self.genus != other.genus {
            return Err(LatticeError::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(&self.n * &other.n - &self.gamma * &other.gamma * self.genus.to_rational())
    }

    pub fn self_intersection(&self) -> BigRational {
        self.intersect(self).expect("same genus")
    }

    pub fn plus(&self, other: &QClass) -> Result<QClass, LatticeError> {
        if self.genus != other.genus {
            return Err(LatticeError::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(QClass {
            genus: self.genus,
            n: &self.n + &other.n,
            gamma: &self.gamma + &other.gamma,
        })
    }

    pub fn scaled(&self, c: &BigRational) -> QClass {
        QClass {
            genus: self.genus,
            n: &self.n * c,
            gamma: &self.gamma * c,
        }
    }
}

impl From<&DivClass> for QClass {
    fn from(d: &DivClass) -> Self {
        QClass {
            genus: d.genus,
            n: BigRational::from_integer(d.n.clone()),
            gamma: BigRational::from_integer(d.gamma.clone()),
        }
    }
}

impl fmt::Display for QClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.gamma)
    }
}

/// Gram matrix of the `(x, δ/2)` basis: `[[1, 1], [1, 1−g]]`.
/// Its determinant is `−g`, so the form is indefinite for `g ≥ 1` and
/// degenerate exactly at `g = 0`.
pub fn gram_matrix(genus: Genus) -> [[BigInt; 2]; 2] {
    let g = genus.to_bigint();
    [
        [BigInt::one(), BigInt::one()],
        [BigInt::one(), BigInt::one() - g],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn big(i: i64) -> BigInt {
        BigInt::from(i)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(big(n), big(d))
    }

    #[test]
    fn pairing_golden_values() {
        let g4 = Genus(4);
        assert_eq!(DivClass::new(g4, 3, 1).self_intersection(), big(5));
        assert_eq!(DivClass::new(g4, 5, 2).self_intersection(), big(9));
        for g in 0..8 {
            assert_eq!(DivClass::x(Genus(g)).self_intersection(), big(1));
        }
        // Δ² = 4 − 4g
        let g3 = Genus(3);
        assert_eq!(DivClass::diagonal(g3).self_intersection(), big(-8));
        // the genus-3 class 16x − 6(δ/2) also has self-intersection −8
        assert_eq!(
            DivClass::from_basis(g3, 16, -6).self_intersection(),
            big(-8)
        );
    }

    #[test]
    fn basis_conversion() {
        let c = DivClass::from_basis(Genus(3), 16, -6);
        assert_eq!((c.n().clone(), c.gamma().clone()), (big(10), big(6)));
        assert_eq!(c.to_basis(), (big(16), big(-6)));
        assert_eq!(DivClass::from_basis(Genus(7), 1, 0), DivClass::x(Genus(7)));
        let hd = DivClass::from_basis(Genus(7), 0, 1);
        assert_eq!(hd, DivClass::half_diagonal(Genus(7)));
        assert_eq!(hd.self_intersection(), big(1 - 7));
    }

    #[test]
    fn canonical_and_dual_classes() {
        assert_eq!(DivClass::canonical(Genus(2)), DivClass::new(Genus(2), 1, 1));
        assert_eq!(DivClass::canonical(Genus(4)), DivClass::new(Genus(4), 5, 1));
        assert_eq!(DivClass::canonical(Genus(5)).x_degree(), &big(7));

        let g4 = Genus(4);
        let dual = DivClass::diagonal_dual(g4);
        assert_eq!(dual, DivClass::new(g4, 4, -1));
        assert_eq!(
            dual.intersect(&DivClass::diagonal(g4)).unwrap(),
            BigInt::zero()
        );
        // G·(n,γ) = g(n+γ)
        for (n, gam) in [(3i64, 1i64), (5, -2), (0, 4)] {
            let c = DivClass::new(g4, n, gam);
            assert_eq!(dual.intersect(&c).unwrap(), big(4 * (n + gam)));
        }
        assert_eq!(
            DivClass::diagonal_dual(Genus(2)),
            DivClass::new(Genus(2), 2, -1)
        );
    }

    #[test]
    fn tau_from_class_values() {
        let c = DivClass::new(Genus(3), 10, 6);
        assert_eq!(c.tau_from_class().unwrap(), rat(9, 5));
        assert_eq!(
            DivClass::new(Genus(4), 2, 1).tau_from_class().unwrap(),
            rat(2, 1)
        );
        assert_eq!(
            DivClass::new(Genus(2), 1, 1).tau_from_class().unwrap(),
            rat(2, 1)
        );
        assert!(DivClass::new(Genus(4), -1, 2).tau_from_class().is_err());
        assert!(DivClass::new(Genus(4), 3, 0).tau_from_class().is_err());
    }

    #[test]
    fn addition_is_componentwise_in_both_coordinate_systems() {
        let g = Genus(5);
        let a = DivClass::new(g, 7, -2);
        let b = DivClass::new(g, -3, 4);
        let sum = a.plus(&b).unwrap();
        assert_eq!(sum, DivClass::new(g, 4, 2));
        let (ax, ad) = a.to_basis();
        let (bx, bd) = b.to_basis();
        assert_eq!(sum.to_basis(), (ax + bx, ad + bd));
    }

    #[test]
    fn genus_mismatch_is_rejected() {
        let a = DivClass::x(Genus(2));
        let b = DivClass::x(Genus(3));
        assert!(matches!(
            a.intersect(&b),
            Err(LatticeError::GenusMismatch { .. })
        ));
        assert!(a.plus(&b).is_err());
    }

    #[test]
    fn gram_matrix_oracle() {
        // pairing agrees with expansion through the basis Gram matrix,
        // 1000 random classes per genus
        let mut rng = ChaCha8Rng::seed_from_u64(0x67a3);
        for g in 0..=10u64 {
            let genus = Genus(g);
            let gram = gram_matrix(genus);
            for _ in 0..1000 {
                let d = DivClass::new(
                    genus,
                    rng.gen_range(-50i64..=50),
                    rng.gen_range(-50i64..=50),
                );
                let e = DivClass::new(
                    genus,
                    rng.gen_range(-50i64..=50),
                    rng.gen_range(-50i64..=50),
                );
                let (dx, dd) = d.to_basis();
                let (ex, ed) = e.to_basis();
                let via_gram = &dx * &gram[0][0] * &ex
                    + &dx * &gram[0][1] * &ed
                    + &dd * &gram[1][0] * &ex
                    + &dd * &gram[1][1] * &ed;
                assert_eq!(d.intersect(&e).unwrap(), via_gram);
            }
        }
    }

    #[test]
    fn gram_determinant_is_minus_genus() {
        for g in 0..=10u64 {
            let m = gram_matrix(Genus(g));
            let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
            assert_eq!(det, -big(g as i64));
        }
    }

    #[test]
    fn qclass_roundtrip_and_pairing() {
        let l = QClass::from_basis(Genus(4), rat(23, 1), rat(-7, 1));
        assert_eq!(l.n(), &rat(16, 1));
        assert_eq!(l.gamma(), &rat(7, 1));
        assert_eq!(l.self_intersection(), rat(60, 1));
        let (cx, cd) = l.to_basis();
        assert_eq!(QClass::from_basis(Genus(4), cx, cd), l);
    }
}
