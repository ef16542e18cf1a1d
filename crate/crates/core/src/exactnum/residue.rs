use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactnum::primes::is_prime;
use crate::exactnum::Rational;

/// An odd prime power p^e with 1 <= e <= 3, the context every [`Residue`]
/// carries. Everything fits in u64 (p <= 10^6 at desk scale, so p^3 < 2^63)
/// and products fit in u128.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: u64,
    e: u32,
    pe: u64,
}

impl Modulus {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(Error::NotOddPrime { p });
        }
        if !(1..=3).contains(&e) {
            return Err(Error::BadExponent { e });
        }
        let pe = (0..e).try_fold(1u64, |acc, _| acc.checked_mul(p));
        let pe = pe.ok_or(Error::BadExponent { e })?;
        Ok(Modulus { p, e, pe })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// The modulus value p^e itself.
    pub fn value(&self) -> u64 {
        self.pe
    }

    pub fn zero(&self) -> Residue {
        Residue {
            value: 0,
            modulus: *self,
        }
    }

    pub fn one(&self) -> Residue {
        Residue {
            value: 1 % self.pe,
            modulus: *self,
        }
    }

    pub fn residue(&self, x: i64) -> Residue {
        Residue::from_i128(*self, x as i128)
    }

    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.pe as u128) as u64
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.e)
    }
}

/// An element of Z/p^eZ. Arithmetic between residues of different moduli is
/// a programming error and panics rather than coercing.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    pub fn from_i128(modulus: Modulus, x: i128) -> Self {
        let pe = modulus.pe as i128;
        let value = x.rem_euclid(pe) as u64;
        Residue { value, modulus }
    }

    pub fn from_integer(modulus: Modulus, x: &BigInt) -> Self {
        let pe = BigInt::from(modulus.pe);
        let r = x.mod_floor(&pe);
        Residue {
            value: r.to_u64().expect("reduced value fits in u64"),
            modulus,
        }
    }

    /// Canonical reduction of a rational a/b: a * b^{-1} mod p^e.
    /// Fails when p divides the denominator.
    pub fn from_rational(modulus: Modulus, q: &Rational) -> Result<Self> {
        let den = Residue::from_integer(modulus, q.denom());
        let inv = den.inverse().map_err(|_| Error::NotInvertible {
            value: q.denom().to_string(),
            p: modulus.p,
            modulus: modulus.pe,
        })?;
        Ok(Residue::from_integer(modulus, q.numer()) * inv)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse mod p^e, defined exactly when p does not
    /// divide the value.
    pub fn inverse(&self) -> Result<Residue> {
        if self.value % self.modulus.p == 0 {
            return Err(Error::NotInvertible {
                value: self.value.to_string(),
                p: self.modulus.p,
                modulus: self.modulus.pe,
            });
        }
        let inv = invert_u64(self.value, self.modulus.pe).expect("unit mod p^e");
        Ok(Residue {
            value: inv,
            modulus: self.modulus,
        })
    }

    pub fn pow(&self, mut exp: u64) -> Residue {
        let modulus = self.modulus;
        let mut base = self.value;
        let mut acc = 1 % modulus.pe;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = modulus.mul_raw(acc, base);
            }
            base = modulus.mul_raw(base, base);
            exp >>= 1;
        }
        Residue {
            value: acc,
            modulus,
        }
    }

    fn check_same(&self, other: &Residue) -> Modulus {
        assert_eq!(
            self.modulus, other.modulus,
            "residue arithmetic across different moduli ({:?} vs {:?})",
            self.modulus, other.modulus
        );
        self.modulus
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {:?})", self.value, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        let m = self.check_same(&rhs);
        let mut v = self.value + rhs.value;
        if v >= m.pe {
            v -= m.pe;
        }
        Residue {
            value: v,
            modulus: m,
        }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        let m = self.check_same(&rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + m.pe - rhs.value
        };
        Residue {
            value: v,
            modulus: m,
        }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        let m = self.check_same(&rhs);
        Residue {
            value: m.mul_raw(self.value, rhs.value),
            modulus: m,
        }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        let v = if self.value == 0 {
            0
        } else {
            self.modulus.pe - self.value
        };
        Residue {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl AddAssign for Residue {
    fn add_assign(&mut self, rhs: Residue) {
        *self = *self + rhs;
    }
}

impl SubAssign for Residue {
    fn sub_assign(&mut self, rhs: Residue) {
        *self = *self - rhs;
    }
}

impl MulAssign for Residue {
    fn mul_assign(&mut self, rhs: Residue) {
        *self = *self * rhs;
    }
}

/// Extended-Euclid inverse of a mod m, for u64 inputs.
fn invert_u64(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// A nonzero integer written as unit * p^valuation with the unit tracked as a
/// residue mod p^e. Used inside iterative binomial kernels where intermediate
/// factors may pick up or shed powers of p that must not be inverted.
#[derive(Clone, Copy, Debug)]
pub struct PadicUnit {
    unit: Residue,
    valuation: u32,
}

impl PadicUnit {
    pub fn one(modulus: Modulus) -> Self {
        PadicUnit {
            unit: modulus.one(),
            valuation: 0,
        }
    }

    pub fn unit(&self) -> Residue {
        self.unit
    }

    pub fn valuation(&self) -> u32 {
        self.valuation
    }

    /// Multiply the represented integer by a nonzero factor, peeling off its
    /// p-part into the valuation.
    pub fn mul_int(&mut self, f: i64) {
        assert!(f != 0, "PadicUnit factor must be nonzero");
        let (v, rest) = split_p(f, self.unit.modulus().p());
        self.valuation += v;
        self.unit *= Residue::from_i128(self.unit.modulus(), rest as i128);
    }

    /// Divide the represented integer by a nonzero factor that divides it
    /// exactly. Panics if the quotient would fail to be an integer at the
    /// level of p-valuations.
    pub fn div_int(&mut self, f: i64) {
        assert!(f != 0, "PadicUnit divisor must be nonzero");
        let (v, rest) = split_p(f, self.unit.modulus().p());
        assert!(
            self.valuation >= v,
            "PadicUnit division would leave negative p-valuation"
        );
        self.valuation -= v;
        let inv = Residue::from_i128(self.unit.modulus(), rest as i128)
            .inverse()
            .expect("p-free factor is a unit");
        self.unit *= inv;
    }

    /// Collapse to a plain residue mod p^e: unit * p^valuation, which is 0
    /// once the valuation reaches e.
    pub fn to_residue(&self) -> Residue {
        let m = self.unit.modulus();
        if self.valuation >= m.e() {
            return m.zero();
        }
        let mut r = self.unit;
        for _ in 0..self.valuation {
            r *= Residue::from_i128(m, m.p() as i128);
        }
        r
    }
}

/// Split f as p^v * rest with p not dividing rest; returns (v, rest) keeping
/// the sign on rest.
fn split_p(f: i64, p: u64) -> (u32, i64) {
    let mut v = 0;
    let mut rest = f;
    let p = p as i64;
    while rest % p == 0 {
        rest /= p;
        v += 1;
    }
    (v, rest)
}
