//! Base-ring arithmetic for `Z` and `Z/nZ`: factorization, nilpotency,
//! nilradical and radicals of principal ideals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// The base ring: `modulus == 0` encodes `Z`, `n >= 1` encodes `Z/nZ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingDesc {
    modulus: BigInt,
}

impl RingDesc {
    pub fn integers() -> Self {
        RingDesc { modulus: BigInt::zero() }
    }

    pub fn modular(n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        if n.is_negative() {
            return Err(Error::BadCoefficient(n.to_string()));
        }
        Ok(RingDesc { modulus: n })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn is_integers(&self) -> bool {
        self.modulus.is_zero()
    }

    /// Least nonnegative representative of `a`.
    pub fn reduce(&self, a: &BigInt) -> BigInt {
        if self.modulus.is_zero() {
            a.clone()
        } else {
            a.mod_floor(&self.modulus)
        }
    }
}

impl std::fmt::Display for RingDesc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_integers() {
            write!(f, "Z")
        } else {
            write!(f, "Z/{}", self.modulus)
        }
    }
}

/// A principal ideal `(generator)` of a [`RingDesc`], generator canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalIdeal {
    pub ring: RingDesc,
    pub generator: BigInt,
}

impl PrincipalIdeal {
    pub fn new(ring: RingDesc, generator: &BigInt) -> Self {
        let generator = if ring.is_integers() {
            generator.abs()
        } else {
            ring.reduce(generator)
        };
        PrincipalIdeal { ring, generator }
    }

    pub fn contains(&self, x: &BigInt) -> bool {
        let x = self.ring.reduce(x);
        if self.generator.is_zero() {
            if self.ring.is_integers() {
                return x.is_zero();
            }
            // (0) in Z/nZ is the multiples of n
            return x.is_zero();
        }
        if self.ring.is_integers() {
            (x % &self.generator).is_zero()
        } else {
            // multiples of gcd(g, n)
            let g = self.generator.gcd(self.ring.modulus());
            (x % g).is_zero()
        }
    }
}

const FACTOR_CAP: u64 = 1_000_000_000_000;

/// Trial-division factorization of `n >= 1`, primes strictly increasing.
pub fn factorize(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    if n.is_zero() || n.is_negative() {
        return Err(Error::ZeroInput);
    }
    if n > &BigInt::from(FACTOR_CAP) {
        return Err(Error::FactorCapExceeded(n.to_string(), FACTOR_CAP.to_string()));
    }
    let mut n: u64 = n.try_into().expect("under cap");
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut mult = 0;
            while n % p == 0 {
                n /= p;
                mult += 1;
            }
            out.push((BigInt::from(p), mult));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((BigInt::from(n), 1));
    }
    Ok(out)
}

/// `rad(e)`: product of the distinct primes dividing `e`, with `rad(0) = 0`.
pub fn radical_of_principal(e: &BigInt) -> Result<BigInt> {
    if e.is_zero() {
        return Ok(BigInt::zero());
    }
    let facs = factorize(&e.abs())?;
    Ok(facs.into_iter().map(|(p, _)| p).product())
}

/// Smallest `k` with `a^k = 0` in the ring, `None` if `a` is not nilpotent.
/// A nilpotent `a` in `Z/nZ` satisfies `a^k = 0` for some `k <= log2(n) + 1`,
/// so the powering loop is bounded.
pub fn nilpotency_index(ring: &RingDesc, a: &BigInt) -> Option<u32> {
    let a = ring.reduce(a);
    if a.is_zero() {
        return Some(1);
    }
    if ring.is_integers() {
        return None;
    }
    let n = ring.modulus();
    let mut pow = a.clone();
    for k in 1..=n.bits() as u32 + 1 {
        if pow.is_zero() {
            return Some(k);
        }
        pow = (pow * &a).mod_floor(n);
    }
    None
}

/// The nilradical of the ring: `(rad(n))` for `Z/nZ`, `(0)` for `Z`.
pub fn nilradical(ring: &RingDesc) -> Result<PrincipalIdeal> {
    if ring.is_integers() {
        return Ok(PrincipalIdeal::new(ring.clone(), &BigInt::zero()));
    }
    let r = radical_of_principal(ring.modulus())?;
    Ok(PrincipalIdeal::new(ring.clone(), &r))
}

/// Exponent bound: any stabilisation `(0 : a^k)` over torsion of exponent `e`
/// settles by `k = bits(e) + 1`.
pub fn stabilization_bound(e: &BigInt) -> u32 {
    e.bits() as u32 + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(
            factorize(&big(12)).unwrap(),
            vec![(big(2), 2), (big(3), 1)]
        );
        assert_eq!(factorize(&big(1)).unwrap(), vec![]);
        assert_eq!(
            factorize(&big(360)).unwrap(),
            vec![(big(2), 3), (big(3), 2), (big(5), 1)]
        );
        assert!(matches!(factorize(&big(0)), Err(Error::ZeroInput)));
    }

    #[test]
    fn factorize_round_trips() {
        for n in 1..2000i64 {
            let facs = factorize(&big(n)).unwrap();
            let prod: BigInt = facs.iter().map(|(p, m)| p.pow(*m)).product();
            assert_eq!(prod, big(n));
            for w in facs.windows(2) {
                assert!(w[0].0 < w[1].0);
            }
        }
    }

    #[test]
    fn nilpotency_examples() {
        let z8 = RingDesc::modular(8).unwrap();
        assert_eq!(nilpotency_index(&z8, &big(2)), Some(3));
        let z12 = RingDesc::modular(12).unwrap();
        assert_eq!(nilpotency_index(&z12, &big(5)), None);
        let z = RingDesc::integers();
        assert_eq!(nilpotency_index(&z, &big(0)), Some(1));
        assert_eq!(nilpotency_index(&z, &big(2)), None);
    }

    #[test]
    fn nilradical_examples() {
        assert_eq!(
            nilradical(&RingDesc::modular(12).unwrap()).unwrap().generator,
            big(6)
        );
        assert_eq!(nilradical(&RingDesc::integers()).unwrap().generator, big(0));
        assert_eq!(
            nilradical(&RingDesc::modular(8).unwrap()).unwrap().generator,
            big(2)
        );
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical_of_principal(&big(12)).unwrap(), big(6));
        assert_eq!(radical_of_principal(&big(0)).unwrap(), big(0));
        assert_eq!(radical_of_principal(&big(7)).unwrap(), big(7));
    }

    #[test]
    fn nilpotency_matches_radical_membership() {
        // a is nilpotent in Z/n iff rad(n) | a
        for n in 2..200i64 {
            let ring = RingDesc::modular(n).unwrap();
            let rad = radical_of_principal(&big(n)).unwrap();
            for a in 0..n {
                let nil = nilpotency_index(&ring, &big(a)).is_some();
                assert_eq!(nil, (&big(a) % &rad).is_zero(), "n={} a={}", n, a);
            }
        }
    }
}
