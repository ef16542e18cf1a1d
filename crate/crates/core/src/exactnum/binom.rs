use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactnum::residue::{Modulus, PadicUnit, Residue};
use crate::exactnum::Rational;

/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
pub fn binom_exact(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Streaming central binomial coefficients C(2k, k) mod p^e for k = 0, 1, ...
/// The step to k+1 multiplies by 2(2k+1)/(k+1); any power of p in 2k+1 is
/// peeled into a PadicUnit valuation before the unit part is inverted, which
/// keeps the kernel exact through k = p-1 where C(2k, k) is divisible by p.
pub struct CentralBinomials {
    acc: PadicUnit,
    k: u64,
}

impl CentralBinomials {
    pub fn new(modulus: Modulus) -> Self {
        CentralBinomials {
            acc: PadicUnit::one(modulus),
            k: 0,
        }
    }

    /// C(2k, k) mod p^e for the current index k.
    pub fn value(&self) -> Residue {
        self.acc.to_residue()
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Advance k -> k+1. Valid while k+1 stays below p (the only range the
    /// sweeps need; beyond that the divisor k+1 could hit a multiple of p).
    pub fn advance(&mut self) {
        let j = self.k + 1;
        assert!(
            j < self.acc.unit().modulus().p(),
            "central binomial stepping needs k < p"
        );
        self.acc.mul_int(2 * (2 * j as i64 - 1));
        self.acc.div_int(j as i64);
        self.k = j;
    }
}

/// C(2k, k) mod p^e for a single index 0 <= k <= p-1.
pub fn central_binom_mod(k: u64, modulus: Modulus) -> Residue {
    assert!(k < modulus.p(), "central_binom_mod requires k < p");
    let mut it = CentralBinomials::new(modulus);
    for _ in 0..k {
        it.advance();
    }
    it.value()
}

/// Exact harmonic number H_n = sum_{k=1}^{n} 1/k, with H_0 = 0.
pub fn harmonic(n: u64) -> Rational {
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc += Rational::new(BigInt::one(), BigInt::from(k));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::residue::Residue;

    #[test]
    fn binom_small_values() {
        assert_eq!(binom_exact(4, 2), BigInt::from(6));
        assert_eq!(binom_exact(2, 3), BigInt::zero());
        assert_eq!(binom_exact(8, 4), BigInt::from(70));
        assert_eq!(binom_exact(5, -1), BigInt::zero());
        assert_eq!(binom_exact(0, 0), BigInt::one());
    }

    #[test]
    fn pascal_rule_holds() {
        for n in 1u64..=100 {
            for k in 0..=n as i64 {
                let lhs = binom_exact(n, k);
                let rhs = binom_exact(n - 1, k - 1) + binom_exact(n - 1, k);
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn central_binom_examples() {
        let m53 = Modulus::new(5, 3).unwrap();
        assert_eq!(central_binom_mod(3, m53).value(), 20);
        assert_eq!(central_binom_mod(0, m53).value(), 1);
        let m52 = Modulus::new(5, 2).unwrap();
        assert_eq!(central_binom_mod(4, m52).value(), 70 % 25);
    }

    #[test]
    fn central_binom_matches_exact_oracle() {
        for p in [5u64, 7, 11, 13, 31, 101, 199] {
            for e in 1..=3 {
                let m = Modulus::new(p, e).unwrap();
                let mut it = CentralBinomials::new(m);
                for k in 0..p {
                    let exact = Residue::from_integer(m, &binom_exact(2 * k, k as i64));
                    assert_eq!(it.value(), exact, "p={p} e={e} k={k}");
                    if k + 1 < p {
                        it.advance();
                    }
                }
            }
        }
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), Rational::zero());
        assert_eq!(harmonic(2), Rational::new(BigInt::from(3), BigInt::from(2)));
        assert_eq!(
            harmonic(4),
            Rational::new(BigInt::from(25), BigInt::from(12))
        );
    }

    #[test]
    fn harmonic_denominator_coprime_to_larger_primes() {
        // Needed so H_k reduces mod p^2 for k < p.
        let primes: Vec<u64> = crate::exactnum::primes::primes_in(5, 500);
        let mut h = Rational::zero();
        for k in 1u64..500 {
            h += Rational::new(BigInt::one(), BigInt::from(k));
            for &p in primes.iter().filter(|&&p| p > k) {
                assert!(
                    !h.denom().is_multiple_of(&BigInt::from(p)),
                    "p={p} k={k} divides denominator of H_k"
                );
            }
        }
    }
}
