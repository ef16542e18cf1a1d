use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Jacobi symbol (a/n) for odd positive n; equals the Legendre symbol when n
/// is an odd prime. Returns 0 when gcd(a, n) > 1.
pub fn jacobi(a: &BigInt, n: &BigInt) -> Result<i8> {
    if !n.is_positive() || n.is_even() {
        return Err(Error::BadJacobiArgument { n: n.to_string() });
    }
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut sign = 1i8;
    while !a.is_zero() {
        while a.is_even() {
            a /= 2;
            let r = (&n % 8u32).to_u8().unwrap();
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u8().unwrap() == 3 && (&n % 4u32).to_u8().unwrap() == 3 {
            sign = -sign;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        Ok(sign)
    } else {
        Ok(0)
    }
}

/// Jacobi symbol for machine integers; all the sweeps use parameters that
/// comfortably fit in i128.
pub fn jacobi_i128(a: i128, n: u64) -> Result<i8> {
    jacobi(&BigInt::from(a), &BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_values() {
        assert_eq!(jacobi_i128(1, 3).unwrap(), 1);
        assert_eq!(jacobi_i128(5, 3).unwrap(), -1);
        assert_eq!(jacobi_i128(-3, 7).unwrap(), 1);
    }

    #[test]
    fn zero_on_shared_factor() {
        assert_eq!(jacobi_i128(6, 3).unwrap(), 0);
        assert_eq!(jacobi_i128(0, 9).unwrap(), 0);
    }

    #[test]
    fn rejects_even_or_nonpositive_n() {
        assert!(jacobi_i128(3, 4).is_err());
        assert!(jacobi(&BigInt::from(3), &BigInt::from(-7)).is_err());
        assert!(jacobi(&BigInt::from(3), &BigInt::from(0)).is_err());
    }

    #[test]
    fn legendre_by_euler_criterion() {
        // Against a^((p-1)/2) mod p for a handful of odd primes.
        for &p in &[3u64, 5, 7, 11, 13, 17, 19, 23, 101] {
            for a in -30i128..30 {
                let expect = euler(a, p);
                assert_eq!(jacobi_i128(a, p).unwrap(), expect, "a={a} p={p}");
            }
        }
    }

    fn euler(a: i128, p: u64) -> i8 {
        let a = a.rem_euclid(p as i128) as u64;
        if a == 0 {
            return 0;
        }
        let mut acc = 1u128;
        let mut base = a as u128;
        let mut exp = (p - 1) / 2;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p as u128;
            }
            base = base * base % p as u128;
            exp >>= 1;
        }
        if acc == 1 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn multiplicative_in_upper_argument() {
        for n in (3u64..60).step_by(2) {
            for a in -12i128..12 {
                for b in -12i128..12 {
                    let ab = jacobi_i128(a * b, n).unwrap();
                    let sep = jacobi_i128(a, n).unwrap() * jacobi_i128(b, n).unwrap();
                    assert_eq!(ab, sep, "a={a} b={b} n={n}");
                }
            }
        }
    }
}
