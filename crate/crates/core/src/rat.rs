//! Exact scalars: arbitrary-precision rationals and dual numbers.
//!
//! `Rat` is the base field. `DualRat` is the ring of dual numbers
//! `Q[eps]/(eps^2)`, used to probe first-order behaviour of exactly computed
//! invariants: a dual number carries a value and a slope, and every operation
//! propagates both exactly. `a + b*eps` is invertible iff `a != 0`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat_int(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

/// `num/den` as a rational (den must be nonzero).
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Dual number `val + slope * eps` with `eps^2 = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct DualRat {
    pub val: Rat,
    pub slope: Rat,
}

impl DualRat {
    pub fn new(val: Rat, slope: Rat) -> Self {
        DualRat { val, slope }
    }

    pub fn constant(val: Rat) -> Self {
        DualRat {
            val,
            slope: <Rat as Zero>::zero(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(rat_int(v))
    }

    /// The generator eps itself.
    pub fn eps() -> Self {
        DualRat {
            val: <Rat as Zero>::zero(),
            slope: <Rat as One>::one(),
        }
    }

    /// `v + s*eps` from machine integers.
    pub fn from_parts(v: i64, s: i64) -> Self {
        DualRat {
            val: rat_int(v),
            slope: rat_int(s),
        }
    }

    /// `(a + b eps)^{-1} = a^{-1} - b a^{-2} eps`, defined iff `a != 0`.
    pub fn inverse(&self) -> Result<DualRat> {
        if Zero::is_zero(&self.val) {
            return Err(Error::NotInvertible(format!("{self}")));
        }
        let inv = self.val.recip();
        Ok(DualRat {
            slope: -(&self.slope * &inv * &inv),
            val: inv,
        })
    }

    pub fn is_zero(&self) -> bool {
        Zero::is_zero(&self.val) && Zero::is_zero(&self.slope)
    }
}

impl fmt::Display for DualRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.slope) {
            return write!(f, "{}", self.val);
        }
        if Zero::is_zero(&self.val) {
            return write!(f, "{}*eps", self.slope);
        }
        if self.slope.is_negative() {
            write!(f, "{} - {}*eps", self.val, -&self.slope)
        } else {
            write!(f, "{} + {}*eps", self.val, self.slope)
        }
    }
}

impl fmt::Debug for DualRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Common interface for the exact coefficient rings the matrix and polynomial
/// algorithms are generic over (`Rat`, `DualRat`, multivariate polynomials).
/// All implementors are commutative Q-algebras, so division by a nonzero
/// integer is always exact.
pub trait Scalar: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division by a nonzero integer.
    fn div_int(&self, k: i64) -> Self;
    /// Embed a rational constant.
    fn from_rat(r: &Rat) -> Self;

    /// Zero of the same ring as `self`. Equivalent to `Self::zero()` except
    /// for rings whose elements carry context (polynomials know their
    /// variable table), where the context is taken from `self`.
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    /// One of the same ring as `self`; see `zero_like`.
    fn one_like(&self) -> Self {
        Self::one()
    }
    /// The rational constant `r` in the same ring as `self`; see `zero_like`.
    fn rat_like(&self, r: &Rat) -> Self {
        Self::from_rat(r)
    }
}

/// Rings with a decidable exact-division question, as needed by fraction-free
/// (Bareiss) elimination. Returns `None` when `self` is not an exact multiple
/// of `rhs` (or the quotient is not unique).
pub trait ExactDiv: Scalar {
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

impl Scalar for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "division by zero integer");
        self / rat_int(k)
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

impl ExactDiv for Rat {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Scalar for DualRat {
    fn zero() -> Self {
        DualRat::constant(<Rat as Zero>::zero())
    }
    fn one() -> Self {
        DualRat::constant(<Rat as One>::one())
    }
    fn is_zero(&self) -> bool {
        DualRat::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        DualRat {
            val: &self.val + &rhs.val,
            slope: &self.slope + &rhs.slope,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        DualRat {
            val: &self.val - &rhs.val,
            slope: &self.slope - &rhs.slope,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        DualRat {
            val: &self.val * &rhs.val,
            slope: &self.val * &rhs.slope + &self.slope * &rhs.val,
        }
    }
    fn neg(&self) -> Self {
        DualRat {
            val: -&self.val,
            slope: -&self.slope,
        }
    }
    fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "division by zero integer");
        let d = rat_int(k);
        DualRat {
            val: &self.val / &d,
            slope: &self.slope / &d,
        }
    }
    fn from_rat(r: &Rat) -> Self {
        DualRat::constant(r.clone())
    }
}

impl ExactDiv for DualRat {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        // Division is well-defined only by units (value part nonzero):
        // dividing a pure-eps element by a pure-eps element has no unique
        // quotient in Q[eps]/(eps^2).
        rhs.inverse().ok().map(|inv| self.mul(&inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dual_eps_squares_to_zero() {
        let e = DualRat::eps();
        assert!(e.mul(&e).is_zero());
    }

    #[test]
    fn dual_product_rule() {
        // (2 + 3 eps)(5 - 7 eps) = 10 + (15 - 14) eps
        let a = DualRat::from_parts(2, 3);
        let b = DualRat::from_parts(5, -7);
        let p = a.mul(&b);
        assert_eq!(p.val, rat_int(10));
        assert_eq!(p.slope, rat_int(1));
    }

    #[test]
    fn dual_inverse_law() {
        let a = DualRat::new(rat(3, 4), rat(-5, 2));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), <DualRat as Scalar>::one());
        assert!(DualRat::eps().inverse().is_err());
        assert!(<DualRat as Scalar>::zero().inverse().is_err());
    }

    #[test]
    fn dual_exact_div_requires_unit_divisor() {
        let e = DualRat::eps();
        let two_eps = DualRat::from_parts(0, 2);
        // eps / (2 eps) has no unique quotient.
        assert!(two_eps.exact_div(&e).is_none());
        let u = DualRat::from_parts(2, 1);
        let q = two_eps.exact_div(&u).unwrap();
        assert_eq!(q.mul(&u), two_eps);
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-20i64..=20, 1i64..=7).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_dual() -> impl Strategy<Value = DualRat> {
        (arb_rat(), arb_rat()).prop_map(|(v, s)| DualRat::new(v, s))
    }

    proptest! {
        #[test]
        fn dual_ring_axioms(a in arb_dual(), b in arb_dual(), c in arb_dual()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.sub(&a), <DualRat as Scalar>::zero());
            prop_assert_eq!(a.mul(&<DualRat as Scalar>::one()), a.clone());
        }

        #[test]
        fn dual_inverse_roundtrip(a in arb_dual()) {
            if let Ok(inv) = a.inverse() {
                prop_assert_eq!(a.mul(&inv), <DualRat as Scalar>::one());
            } else {
                prop_assert!(Zero::is_zero(&a.val));
            }
        }
    }
}
