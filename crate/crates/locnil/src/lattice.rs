//! Exhaustive submodule lattices on finite modules, the prime / semiprime /
//! a-semiprime predicates, the radicals they induce and the inclusion-chain
//! and multiplication-module checks.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::fgmod::{quotient, FgModule, Submodule};
use crate::functor::{agamma, is_a_reduced, is_reduced, sum_theorem_check};
use crate::{Error, Result};

/// Default cap on lattice enumeration; configurable up to [`LATTICE_CAP_MAX`].
pub const LATTICE_CAP: u64 = 256;
pub const LATTICE_CAP_MAX: u64 = 4096;

/// Every submodule of a finite module, deduplicated by canonical form.
pub struct SubmoduleLattice {
    parent: FgModule,
    subs: Vec<Submodule>,
}

impl SubmoduleLattice {
    pub fn parent(&self) -> &FgModule {
        &self.parent
    }

    pub fn submodules(&self) -> &[Submodule] {
        &self.subs
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }
}

/// Fixpoint closure from the zero submodule: adjoin each element of the
/// parent to each known submodule and re-span until nothing new appears.
pub fn enumerate_submodules(m: &FgModule, cap: u64) -> Result<SubmoduleLattice> {
    let card = m.cardinality().ok_or(Error::NotFinite)?;
    if card > BigInt::from(cap) {
        return Err(Error::CapExceeded(card.to_string(), cap.to_string()));
    }
    let elems = m.enumerate_elements(cap)?;
    let mut seen = BTreeSet::new();
    let mut subs: Vec<Submodule> = Vec::new();
    let zero = m.zero_submodule();
    seen.insert(zero.lattice().clone());
    subs.push(zero);
    let mut frontier = vec![0usize];
    while let Some(idx) = frontier.pop() {
        for e in &elems {
            if e.is_zero() || subs[idx].contains(e)? {
                continue;
            }
            let gens = subs[idx]
                .generators()
                .vstack(&crate::matrix::IntMatrix::from_rows(
                    &[e.coords().to_vec()],
                    m.ambient_dim(),
                )?)?;
            let bigger = Submodule::span_rows(m, gens)?;
            if seen.insert(bigger.lattice().clone()) {
                subs.push(bigger);
                frontier.push(subs.len() - 1);
            }
        }
    }
    Ok(SubmoduleLattice { parent: m.clone(), subs })
}

/// `am ∈ N` implies `m ∈ N` or `aM ⊆ N`, quantified over the effective
/// scalars and all elements.
pub fn is_prime_submodule(m: &FgModule, n: &Submodule, cap: u64) -> Result<bool> {
    if n.parent() != m {
        return Err(Error::ParentMismatch);
    }
    if n.is_full() {
        return Err(Error::NotProper);
    }
    let elems = m.enumerate_elements(cap)?;
    for a in m.effective_scalar_range() {
        let a_m = m.full_submodule().scalar_image(&a);
        let am_in_n = a_m.is_subset_of(n)?;
        if am_in_n {
            continue;
        }
        for e in &elems {
            if n.contains(&e.scale(&a))? && !n.contains(e)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `N` is semiprime iff `M/N` is reduced.
pub fn is_semiprime_submodule(m: &FgModule, n: &Submodule) -> Result<bool> {
    if n.parent() != m {
        return Err(Error::ParentMismatch);
    }
    if n.is_full() {
        return Err(Error::NotProper);
    }
    let (q, _) = quotient(m, n)?;
    Ok(is_reduced(&q))
}

/// `N` is a-semiprime iff `M/N` is a-reduced.
pub fn is_a_semiprime_submodule(m: &FgModule, n: &Submodule, a: &BigInt) -> Result<bool> {
    if n.parent() != m {
        return Err(Error::ParentMismatch);
    }
    if n.is_full() {
        return Err(Error::NotProper);
    }
    let (q, _) = quotient(m, n)?;
    Ok(is_a_reduced(&q, a))
}

fn intersect_family(m: &FgModule, family: &[&Submodule]) -> Result<Submodule> {
    // empty-family intersection is the whole module
    let mut acc = m.full_submodule();
    for s in family {
        acc = acc.intersect(s)?;
    }
    Ok(acc)
}

/// Prime radical `β(M)`: intersection of all prime submodules.
pub fn beta(lat: &SubmoduleLattice, cap: u64) -> Result<Submodule> {
    let primes: Vec<&Submodule> = lat
        .subs
        .iter()
        .filter(|n| !n.is_full())
        .filter(|n| is_prime_submodule(&lat.parent, n, cap).unwrap_or(false))
        .collect();
    intersect_family(&lat.parent, &primes)
}

/// Semiprime radical `S(M)`.
pub fn semiprime_radical(lat: &SubmoduleLattice) -> Result<Submodule> {
    let family: Vec<&Submodule> = lat
        .subs
        .iter()
        .filter(|n| !n.is_full())
        .filter(|n| is_semiprime_submodule(&lat.parent, n).unwrap_or(false))
        .collect();
    intersect_family(&lat.parent, &family)
}

/// a-semiprime radical `S_a(M)`.
pub fn a_semiprime_radical(lat: &SubmoduleLattice, a: &BigInt) -> Result<Submodule> {
    let family: Vec<&Submodule> = lat
        .subs
        .iter()
        .filter(|n| !n.is_full())
        .filter(|n| is_a_semiprime_submodule(&lat.parent, n, a).unwrap_or(false))
        .collect();
    intersect_family(&lat.parent, &family)
}

/// Jacobson radical `Rad(M)`: intersection of the maximal submodules, i.e.
/// the proper submodules of prime index in a finite module.
pub fn rad_jacobson(lat: &SubmoduleLattice) -> Result<Submodule> {
    let card = lat.parent.cardinality().ok_or(Error::NotFinite)?;
    let mut family = Vec::new();
    for n in &lat.subs {
        if n.is_full() {
            continue;
        }
        let index = &card / n.cardinality().ok_or(Error::NotFinite)?;
        if is_prime_integer(&index) {
            family.push(n);
        }
    }
    intersect_family(&lat.parent, &family)
}

fn is_prime_integer(n: &BigInt) -> bool {
    match crate::ring::factorize(n) {
        Ok(f) => f.len() == 1 && f[0].1 == 1,
        Err(_) => false,
    }
}

/// `⋂_a aΓ_a(M) ⊆ aΓ_a(M) ⊆ S_a(M) ⊆ S(M) ⊆ β(M) ⊆ Rad(M)`.
pub fn inclusion_chain_check(lat: &SubmoduleLattice, a: &BigInt, cap: u64) -> Result<bool> {
    let m = &lat.parent;
    let mut meet = m.full_submodule();
    for b in m.effective_scalar_range() {
        meet = meet.intersect(&agamma(m, &b))?;
    }
    let chain = [
        meet,
        agamma(m, a),
        a_semiprime_radical(lat, a)?,
        semiprime_radical(lat)?,
        beta(lat, cap)?,
        rad_jacobson(lat)?,
    ];
    for w in chain.windows(2) {
        if !w[0].is_subset_of(&w[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For finite cyclic `M` (a multiplication module):
/// `Σ_{a ∈ √(0:M)} aΓ_a(M) = β(M)`.
pub fn mult_module_check(m: &FgModule, cap: u64) -> Result<bool> {
    if !m.is_finite() || m.invariants().len() > 1 {
        return Err(Error::NotCyclic);
    }
    let lat = enumerate_submodules(m, cap)?;
    let sum = sum_theorem_check(m)?;
    Ok(sum.rhs == beta(&lat, cap)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDesc;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn zmod(invariants: &[i64]) -> FgModule {
        FgModule::from_invariants(
            RingDesc::integers(),
            0,
            &invariants.iter().map(|&d| big(d)).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_submodules(&zmod(&[12]), LATTICE_CAP).unwrap().len(), 6);
        assert_eq!(enumerate_submodules(&zmod(&[2, 2]), LATTICE_CAP).unwrap().len(), 5);
        assert_eq!(
            enumerate_submodules(&FgModule::zero(RingDesc::integers()), LATTICE_CAP)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn lattice_closed_under_sum_and_intersection() {
        let m = zmod(&[2, 4]);
        let lat = enumerate_submodules(&m, LATTICE_CAP).unwrap();
        let keys: BTreeSet<_> = lat.subs.iter().map(|s| s.lattice().clone()).collect();
        for s in &lat.subs {
            for t in &lat.subs {
                assert!(keys.contains(s.sum(t).unwrap().lattice()));
                assert!(keys.contains(s.intersect(t).unwrap().lattice()));
            }
        }
    }

    #[test]
    fn prime_examples() {
        let z8 = zmod(&[8]);
        let two = z8.full_submodule().scalar_image(&big(2));
        let four = z8.full_submodule().scalar_image(&big(4));
        assert!(is_prime_submodule(&z8, &two, LATTICE_CAP).unwrap());
        assert!(!is_prime_submodule(&z8, &four, LATTICE_CAP).unwrap());
        let z5 = zmod(&[5]);
        assert!(is_prime_submodule(&z5, &z5.zero_submodule(), LATTICE_CAP).unwrap());
        assert!(matches!(
            is_prime_submodule(&z8, &z8.full_submodule(), LATTICE_CAP),
            Err(Error::NotProper)
        ));
    }

    #[test]
    fn semiprime_examples() {
        let z4 = zmod(&[4]);
        let two = z4.full_submodule().scalar_image(&big(2));
        assert!(is_semiprime_submodule(&z4, &two).unwrap());
        assert!(is_a_semiprime_submodule(&z4, &z4.zero_submodule(), &big(3)).unwrap());
        assert!(!is_semiprime_submodule(&z4, &z4.zero_submodule()).unwrap());
    }

    #[test]
    fn radicals_of_z12_and_z8() {
        let z12 = zmod(&[12]);
        let lat = enumerate_submodules(&z12, LATTICE_CAP).unwrap();
        let six = z12.full_submodule().scalar_image(&big(6));
        assert_eq!(beta(&lat, LATTICE_CAP).unwrap(), six);

        let z8 = zmod(&[8]);
        let lat = enumerate_submodules(&z8, LATTICE_CAP).unwrap();
        let two = z8.full_submodule().scalar_image(&big(2));
        assert_eq!(beta(&lat, LATTICE_CAP).unwrap(), two);
        assert_eq!(semiprime_radical(&lat).unwrap(), two);
        assert_eq!(a_semiprime_radical(&lat, &big(2)).unwrap(), two);
        assert_eq!(rad_jacobson(&lat).unwrap(), two);

        let z5 = zmod(&[5]);
        let lat = enumerate_submodules(&z5, LATTICE_CAP).unwrap();
        assert!(rad_jacobson(&lat).unwrap().is_zero());
    }

    #[test]
    fn chain_examples() {
        for (inv, a) in [(vec![8i64], 2i64), (vec![4], 3), (vec![7], 7), (vec![2, 4], 2)] {
            let m = zmod(&inv);
            let lat = enumerate_submodules(&m, LATTICE_CAP).unwrap();
            assert!(inclusion_chain_check(&lat, &big(a), LATTICE_CAP).unwrap());
        }
        // strict step: S_3(Z/4) = 0 below S(Z/4) = 2Z/4
        let z4 = zmod(&[4]);
        let lat = enumerate_submodules(&z4, LATTICE_CAP).unwrap();
        assert!(a_semiprime_radical(&lat, &big(3)).unwrap().is_zero());
        assert!(!semiprime_radical(&lat).unwrap().is_zero());
    }

    #[test]
    fn mult_module_examples() {
        assert!(mult_module_check(&zmod(&[12]), LATTICE_CAP).unwrap());
        assert!(mult_module_check(&zmod(&[5]), LATTICE_CAP).unwrap());
        assert!(mult_module_check(&zmod(&[8]), LATTICE_CAP).unwrap());
        assert!(matches!(
            mult_module_check(&zmod(&[2, 2]), LATTICE_CAP),
            Err(Error::NotCyclic)
        ));
    }

    #[test]
    fn prime_implies_semiprime_implies_a_semiprime() {
        let m = zmod(&[2, 4]);
        let lat = enumerate_submodules(&m, LATTICE_CAP).unwrap();
        for n in lat.submodules() {
            if n.is_full() {
                continue;
            }
            if is_prime_submodule(&m, n, LATTICE_CAP).unwrap() {
                assert!(is_semiprime_submodule(&m, n).unwrap());
            }
            if is_semiprime_submodule(&m, n).unwrap() {
                for a in m.effective_scalar_range() {
                    assert!(is_a_semiprime_submodule(&m, n, &a).unwrap());
                }
            }
        }
    }

    #[test]
    fn maximal_submodules_are_prime() {
        let m = zmod(&[2, 4]);
        let lat = enumerate_submodules(&m, LATTICE_CAP).unwrap();
        let card = m.cardinality().unwrap();
        for n in lat.submodules() {
            if n.is_full() {
                continue;
            }
            let index = &card / n.cardinality().unwrap();
            if is_prime_integer(&index) {
                assert!(is_prime_submodule(&m, n, LATTICE_CAP).unwrap());
            }
        }
    }

    #[test]
    fn s_a_contains_agamma() {
        let m = zmod(&[2, 8]);
        let lat = enumerate_submodules(&m, LATTICE_CAP).unwrap();
        for a in m.effective_scalar_range() {
            assert!(agamma(&m, &a)
                .is_subset_of(&a_semiprime_radical(&lat, &a).unwrap())
                .unwrap());
        }
    }
}
