//! Degree-bounded polynomials over `Z/nZ` and the two independent
//! membership tests for `aΓ_a(R)[x]` versus `aΓ_a(R[x])`, whose agreement
//! on every tested input is the polynomial identity at desk scale.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::stabilization_bound;
use crate::{Error, Result};

/// Default cap on the coefficient-vector search space `n^(deg+1)`.
pub const SEARCH_CAP: u64 = 1_000_000;
/// Default degree bound for the direct membership search.
pub const DEGREE_CAP: usize = 3;

/// A polynomial over `Z/nZ`: coefficient `i` is the degree-`i` residue,
/// trailing zeros trimmed, empty = zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    modulus: BigInt,
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(modulus: impl Into<BigInt>, coeffs: Vec<BigInt>) -> Result<Self> {
        let modulus = modulus.into();
        if modulus < BigInt::from(2) {
            return Err(Error::BadCoefficient(modulus.to_string()));
        }
        let mut coeffs: Vec<BigInt> = coeffs.iter().map(|c| c.mod_floor(&modulus)).collect();
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Ok(Poly { modulus, coeffs })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, a: &BigInt) -> Poly {
        Poly::new(
            self.modulus.clone(),
            self.coeffs.iter().map(|c| c * a).collect(),
        )
        .expect("modulus unchanged")
    }

    /// Multiply by `x` (degree shift).
    pub fn shift(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { modulus: self.modulus.clone(), coeffs }
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{}*x", c),
                _ => format!("{}*x^{}", c, i),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// The set `aΓ_a(Z/n)` as sorted residues, by direct enumeration.
pub fn agamma_residues(n: &BigInt, a: &BigInt) -> Vec<BigInt> {
    let a = a.mod_floor(n);
    let bound = stabilization_bound(n);
    let ak = a.modpow(&BigInt::from(bound), n);
    let mut out = Vec::new();
    let mut m = BigInt::zero();
    while &m < n {
        if (&ak * &m).mod_floor(n).is_zero() {
            let v = (&a * &m).mod_floor(n);
            if !out.contains(&v) {
                out.push(v);
            }
        }
        m += 1;
    }
    out.sort();
    out
}

/// The set `Γ_a(Z/n)` as sorted residues.
pub fn gamma_residues(n: &BigInt, a: &BigInt) -> Vec<BigInt> {
    let a = a.mod_floor(n);
    let bound = stabilization_bound(n);
    let ak = a.modpow(&BigInt::from(bound), n);
    let mut out = Vec::new();
    let mut m = BigInt::zero();
    while &m < n {
        if (&ak * &m).mod_floor(n).is_zero() {
            out.push(m.clone());
        }
        m += 1;
    }
    out
}

/// `f ∈ aΓ_a(Z/n)[x]`: every coefficient lies in the precomputed set.
pub fn membership_coeffwise(n: &BigInt, a: &BigInt, f: &Poly) -> bool {
    let set = agamma_residues(n, a);
    f.coeffs().iter().all(|c| set.binary_search(c).is_ok())
}

/// `f ∈ aΓ_a((Z/n)[x])`: search for a witness `g` with `f = a*g` and
/// `a^k * g = 0` for some `k` up to the stabilization bound. Any witness of
/// higher degree can be truncated to `deg f` without breaking either
/// condition, so the search over `deg g <= deg f` is exhaustive.
pub fn membership_direct(n: &BigInt, a: &BigInt, f: &Poly, cap: u64) -> Result<bool> {
    let deg = match f.degree() {
        None => return Ok(true), // f = 0 via g = 0
        Some(d) => d,
    };
    let space = n.pow(deg as u32 + 1);
    if space > BigInt::from(cap) {
        return Err(Error::SearchCapExceeded(space.to_string(), cap.to_string()));
    }
    let a = a.mod_floor(n);
    let bound = stabilization_bound(n);
    // candidate residues per coefficient: solutions of a*g_i = f_i (mod n)
    let mut candidates: Vec<Vec<BigInt>> = Vec::with_capacity(deg + 1);
    for i in 0..=deg {
        let fi = f.coeffs().get(i).cloned().unwrap_or_else(BigInt::zero);
        let mut cs = Vec::new();
        let mut g = BigInt::zero();
        while &g < n {
            if (&a * &g).mod_floor(n) == fi {
                cs.push(g.clone());
            }
            g += 1;
        }
        if cs.is_empty() {
            return Ok(false);
        }
        candidates.push(cs);
    }
    // walk the product of candidate lists; test a^k g = 0 at the polynomial level
    let mut idx = vec![0usize; deg + 1];
    loop {
        let g = Poly::new(
            n.clone(),
            idx.iter()
                .enumerate()
                .map(|(i, &j)| candidates[i][j].clone())
                .collect(),
        )?;
        for k in 1..=bound {
            let akg = g.scale(&a.modpow(&BigInt::from(k), n));
            if akg.is_zero() {
                return Ok(true);
            }
        }
        // next index vector
        let mut pos = 0;
        loop {
            if pos > deg {
                return Ok(false);
            }
            idx[pos] += 1;
            if idx[pos] < candidates[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Direct `Γ`-membership: `∃ k` with `a^k * f = 0` at the polynomial level.
pub fn gamma_membership_direct(n: &BigInt, a: &BigInt, f: &Poly) -> bool {
    let a = a.mod_floor(n);
    let bound = stabilization_bound(n);
    (1..=bound).any(|k| f.scale(&a.modpow(&BigInt::from(k), n)).is_zero())
}

/// Coefficientwise `Γ`-membership: every coefficient in `Γ_a(Z/n)`.
pub fn gamma_membership_coeffwise(n: &BigInt, a: &BigInt, f: &Poly) -> bool {
    let set = gamma_residues(n, a);
    f.coeffs().iter().all(|c| set.binary_search(c).is_ok())
}

/// How the polynomial space is swept.
pub enum SweepMode {
    /// Every polynomial of degree `<= d`.
    Exhaustive,
    /// A seeded random sample of the given size.
    Sample { count: usize, seed: u64 },
}

/// Pick exhaustive enumeration below `cap`, sampling above.
pub fn sweep_for(n: &BigInt, degree: usize, cap: u64) -> SweepMode {
    if n.pow(degree as u32 + 1) <= BigInt::from(cap) {
        SweepMode::Exhaustive
    } else {
        SweepMode::Sample { count: 10_000, seed: 0 }
    }
}

fn sweep_polys(n: &BigInt, degree: usize, mode: &SweepMode) -> Vec<Poly> {
    match mode {
        SweepMode::Exhaustive => {
            let n_u: u64 = n.try_into().expect("exhaustive sweep needs small n");
            let total = n_u.pow(degree as u32 + 1);
            (0..total)
                .map(|mut code| {
                    let mut coeffs = Vec::with_capacity(degree + 1);
                    for _ in 0..=degree {
                        coeffs.push(BigInt::from(code % n_u));
                        code /= n_u;
                    }
                    Poly::new(n.clone(), coeffs).unwrap()
                })
                .collect()
        }
        SweepMode::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let n_u: u64 = n.try_into().expect("sampled sweep needs small n");
            (0..*count)
                .map(|_| {
                    let coeffs = (0..=degree)
                        .map(|_| BigInt::from(rng.gen_range(0..n_u)))
                        .collect();
                    Poly::new(n.clone(), coeffs).unwrap()
                })
                .collect()
        }
    }
}

/// Do the two `aΓ_a` membership procedures agree on every swept `f`?
pub fn poly_theorem_check(
    n: &BigInt,
    a: &BigInt,
    degree: usize,
    mode: &SweepMode,
    cap: u64,
) -> Result<bool> {
    for f in sweep_polys(n, degree, mode) {
        let direct = membership_direct(n, a, &f, cap)?;
        let coeffwise = membership_coeffwise(n, a, &f);
        if direct != coeffwise {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Same sweep with `Γ` in place of `aΓ`.
pub fn gamma_poly_check(n: &BigInt, a: &BigInt, degree: usize, mode: &SweepMode) -> Result<bool> {
    for f in sweep_polys(n, degree, mode) {
        if gamma_membership_direct(n, a, &f) != gamma_membership_coeffwise(n, a, &f) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn poly(n: i64, coeffs: &[i64]) -> Poly {
        Poly::new(big(n), coeffs.iter().map(|&c| big(c)).collect()).unwrap()
    }

    #[test]
    fn coeffwise_examples() {
        assert!(membership_coeffwise(&big(4), &big(2), &poly(4, &[2, 2])));
        assert!(!membership_coeffwise(&big(4), &big(2), &poly(4, &[1])));
        assert!(membership_coeffwise(&big(9), &big(3), &poly(9, &[0])));
    }

    #[test]
    fn direct_examples() {
        assert!(membership_direct(&big(4), &big(2), &poly(4, &[2, 2]), SEARCH_CAP).unwrap());
        assert!(!membership_direct(&big(4), &big(2), &poly(4, &[1]), SEARCH_CAP).unwrap());
        // over a field every nonzero f is rejected
        for c in 1..5i64 {
            assert!(!membership_direct(&big(5), &big(2), &poly(5, &[c]), SEARCH_CAP).unwrap());
        }
        assert!(matches!(
            membership_direct(&big(100), &big(10), &poly(100, &[10, 10, 10, 10]), 100),
            Err(Error::SearchCapExceeded(_, _))
        ));
    }

    #[test]
    fn theorem_small_exhaustive() {
        for (n, a_max, d) in [(4i64, 4i64, 2usize), (9, 9, 2), (5, 5, 2)] {
            for a in 0..a_max {
                assert!(poly_theorem_check(
                    &big(n),
                    &big(a),
                    d,
                    &SweepMode::Exhaustive,
                    SEARCH_CAP
                )
                .unwrap());
                assert!(gamma_poly_check(&big(n), &big(a), d, &SweepMode::Exhaustive).unwrap());
            }
        }
    }

    #[test]
    fn degree_shift_invariance() {
        let n = big(8);
        let a = big(2);
        for code in 0..64i64 {
            let f = poly(8, &[code % 8, code / 8]);
            let shifted = f.shift();
            assert_eq!(
                membership_direct(&n, &a, &f, SEARCH_CAP).unwrap(),
                membership_direct(&n, &a, &shifted, SEARCH_CAP).unwrap()
            );
            assert_eq!(
                membership_coeffwise(&n, &a, &f),
                membership_coeffwise(&n, &a, &shifted)
            );
        }
    }

    #[test]
    fn direct_membership_coefficients_are_nilpotent() {
        // membership implies every coefficient of f is nilpotent in Z/n
        let n = big(8);
        for a in 0..8i64 {
            for c0 in 0..8i64 {
                for c1 in 0..8i64 {
                    let f = poly(8, &[c0, c1]);
                    if membership_direct(&n, &big(a), &f, SEARCH_CAP).unwrap() {
                        for c in f.coeffs() {
                            assert!(crate::ring::nilpotency_index(
                                &crate::ring::RingDesc::modular(8).unwrap(),
                                c
                            )
                            .is_some());
                        }
                    }
                }
            }
        }
    }
}
