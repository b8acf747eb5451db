use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// An element of ℚ/ℤ, stored as a reduced fraction `num/den` with
/// `0 <= num < den` and `gcd(num, den) = 1`. Zero is `0/1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Qz {
    num: u64,
    den: u64,
}

impl Qz {
    pub const ZERO: Qz = Qz { num: 0, den: 1 };

    /// Builds `num/den mod 1`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Qz {
        assert!(den != 0, "Qz denominator must be nonzero");
        let den_abs = den.unsigned_abs();
        // bring the numerator into 0..den with matching sign convention
        let mut n = (num % den).unsigned_abs();
        if n != 0 && (num < 0) != (den < 0) {
            n = den_abs - n;
        }
        Self::reduced(n, den_abs)
    }

    fn reduced(num: u64, den: u64) -> Qz {
        let n = num % den;
        if n == 0 {
            return Qz::ZERO;
        }
        let g = n.gcd(&den);
        Qz { num: n / g, den: den / g }
    }

    /// Builds `num/den mod 1` from an arbitrary-precision numerator.
    pub fn from_big(num: &BigInt, den: u64) -> Qz {
        assert!(den != 0, "Qz denominator must be nonzero");
        let d = BigInt::from(den);
        let n = num.mod_floor(&d).to_u64().expect("residue fits u64");
        Self::reduced(n, den)
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Additive order in ℚ/ℤ (the reduced denominator).
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn neg(&self) -> Qz {
        if self.num == 0 {
            Qz::ZERO
        } else {
            Qz { num: self.den - self.num, den: self.den }
        }
    }

    pub fn add(&self, other: &Qz) -> Qz {
        let den = lcm_checked(self.den, other.den);
        let a = self.num as u128 * (den / self.den) as u128;
        let b = other.num as u128 * (den / other.den) as u128;
        let sum = (a + b) % den as u128;
        Self::reduced(sum as u64, den)
    }

    pub fn sub(&self, other: &Qz) -> Qz {
        self.add(&other.neg())
    }

    /// Multiplies by an integer scalar.
    pub fn scale(&self, k: i64) -> Qz {
        if self.num == 0 {
            return Qz::ZERO;
        }
        let kk = k.rem_euclid(self.den as i64) as u128;
        let n = (kk * self.num as u128) % self.den as u128;
        Self::reduced(n as u64, self.den)
    }

    /// Multiplies by an arbitrary-precision integer scalar.
    pub fn scale_big(&self, k: &BigInt) -> Qz {
        if self.num == 0 {
            return Qz::ZERO;
        }
        let d = BigInt::from(self.den);
        let kk = k.mod_floor(&d).to_u64().expect("residue fits u64") as u128;
        let n = (kk * self.num as u128) % self.den as u128;
        Self::reduced(n as u64, self.den)
    }

    /// A solution `y` of `s·y = self` in ℚ/ℤ (namely `num/(den·s)`).
    /// Panics if `s == 0`.
    pub fn div_int(&self, s: u64) -> Qz {
        assert!(s != 0, "division by zero in Q/Z");
        let den = (self.den as u128).checked_mul(s as u128).expect("denominator overflow");
        let den = u64::try_from(den).expect("denominator exceeds u64");
        Self::reduced(self.num, den)
    }
}

fn lcm_checked(a: u64, b: u64) -> u64 {
    let g = a.gcd(&b);
    (a / g).checked_mul(b).expect("denominator overflow in Q/Z arithmetic")
}

impl fmt::Display for Qz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Qz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Default for Qz {
    fn default() -> Self {
        Qz::ZERO
    }
}

/// Sums `coeff · entry` over a sparse row against a ℚ/ℤ vector.
pub fn dot_qz(terms: impl Iterator<Item = (BigInt, Qz)>) -> Qz {
    let mut acc = Qz::ZERO;
    for (c, v) in terms {
        acc = acc.add(&v.scale_big(&c));
    }
    acc
}

/// True when every entry of the vector is zero.
pub fn qz_vec_is_zero(v: &[Qz]) -> bool {
    v.iter().all(Qz::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_range() {
        assert_eq!(Qz::new(3, 6), Qz::new(1, 2));
        assert_eq!(Qz::new(7, 4), Qz::new(3, 4));
        assert_eq!(Qz::new(-1, 4), Qz::new(3, 4));
        assert_eq!(Qz::new(4, 4), Qz::ZERO);
        assert_eq!(Qz::new(0, 9).denom(), 1);
        assert_eq!(Qz::new(1, -2), Qz::new(1, 2));
    }

    #[test]
    fn arithmetic() {
        let a = Qz::new(1, 2);
        let b = Qz::new(1, 3);
        assert_eq!(a.add(&b), Qz::new(5, 6));
        assert_eq!(a.sub(&a), Qz::ZERO);
        assert_eq!(a.neg(), a);
        assert_eq!(b.neg(), Qz::new(2, 3));
        assert_eq!(b.scale(3), Qz::ZERO);
        assert_eq!(b.scale(-1), Qz::new(2, 3));
        assert_eq!(Qz::new(1, 2).div_int(2), Qz::new(1, 4));
        assert_eq!(Qz::new(1, 4).scale(2), Qz::new(1, 2));
    }

    #[test]
    fn orders() {
        assert_eq!(Qz::ZERO.order(), 1);
        assert_eq!(Qz::new(2, 8).order(), 4);
        assert_eq!(Qz::new(5, 10).order(), 2);
    }

    #[test]
    fn big_scalars() {
        let big = BigInt::from(10_000_000_007i64);
        assert_eq!(Qz::new(1, 4).scale_big(&big), Qz::new(3, 4));
        assert_eq!(Qz::from_big(&BigInt::from(-5), 4), Qz::new(3, 4));
    }
}
