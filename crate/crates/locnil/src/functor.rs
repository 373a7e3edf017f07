//! The torsion functor `Γ_a`, the locally nilradical `aΓ_a`, reducedness
//! predicates, envelopes, stratifications and the theorem-level checks
//! built on them.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::fgmod::{
    annihilator, direct_sum, kernel_of_scalar, quotient, FgModule, Homomorphism, ModElement,
    Submodule, ENUM_CAP,
};
use crate::ring::{nilradical, radical_of_principal, stabilization_bound, RingDesc};
use crate::{Error, Result};

/// `Γ_a(M) = { m | a^k m = 0 for some k }`, computed at the stabilized power.
pub fn gamma(m: &FgModule, a: &BigInt) -> Submodule {
    let k = stabilization_index(m, a);
    kernel_of_scalar(m, a, k).expect("k >= 1")
}

/// Smallest `k` with `(0 : a^k) = (0 : a^{k+1})`; at most `log2(e) + 1`.
pub fn stabilization_index(m: &FgModule, a: &BigInt) -> u32 {
    let bound = stabilization_bound(&m.torsion_exponent());
    let mut prev = kernel_of_scalar(m, a, 1).expect("k = 1");
    for k in 1..=bound {
        let next = kernel_of_scalar(m, a, k + 1).expect("k >= 1");
        if next == prev {
            return k;
        }
        prev = next;
    }
    bound + 1
}

/// `aΓ_a(M)`: the image of `Γ_a(M)` under multiplication by `a`.
pub fn agamma(m: &FgModule, a: &BigInt) -> Submodule {
    gamma(m, a).scalar_image(a)
}

/// `Γ_a` of a submodule, as a submodule of the common parent. The torsion
/// functor is computed inside `N`: elementwise this is `N ∩ Γ_a(M)`.
pub fn gamma_of_submodule(n: &Submodule, a: &BigInt) -> Result<Submodule> {
    n.intersect(&gamma(n.parent(), a))
}

/// `aΓ_a` of a submodule, as a submodule of the common parent. Unlike
/// `Γ_a`, this is in general smaller than `N ∩ aΓ_a(M)`.
pub fn agamma_of_submodule(n: &Submodule, a: &BigInt) -> Result<Submodule> {
    Ok(gamma_of_submodule(n, a)?.scalar_image(a))
}

/// `a^2 m = 0` forces `am = 0`; equivalently `(0:a) = (0:a^2)`.
pub fn is_a_reduced(m: &FgModule, a: &BigInt) -> bool {
    let a = m.reduce_scalar(a);
    m.invariants().iter().all(|d| {
        let g1 = a.gcd(d);
        let g2 = if a.is_zero() {
            BigInt::zero().gcd(d)
        } else {
            a.modpow(&BigInt::from(2), d).gcd(d)
        };
        g1 == g2
    })
}

/// `a`-reduced for every effective scalar. Exhaustive over the effective
/// range, cross-checked against the structural criterion (squarefree
/// torsion exponent); the two must agree.
pub fn is_reduced(m: &FgModule) -> bool {
    let exhaustive = m
        .effective_scalar_range()
        .iter()
        .all(|a| is_a_reduced(m, a));
    let e = m.torsion_exponent();
    let structural = radical_of_principal(&e).map(|r| r == e).unwrap_or(exhaustive);
    assert_eq!(
        exhaustive, structural,
        "reducedness routes disagree on {}",
        m.iso_class()
    );
    exhaustive
}

/// An explicit finite set of elements; envelopes are sets, not submodules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    pub parent: FgModule,
    pub elements: BTreeSet<Vec<BigInt>>,
}

impl ElementSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .elements
            .iter()
            .map(|coords| {
                if coords.len() == 1 {
                    coords[0].to_string()
                } else {
                    format!(
                        "({})",
                        coords
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                }
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// All elements of the torsion part (free coordinates pinned to zero).
pub fn torsion_elements(m: &FgModule, cap: u64) -> Result<Vec<ModElement>> {
    let torsion: BigInt = m.invariants().iter().product::<BigInt>().max(BigInt::one());
    if torsion > BigInt::from(cap) {
        return Err(Error::CapExceeded(torsion.to_string(), cap.to_string()));
    }
    let dim = m.ambient_dim();
    let mut coords_list: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); dim]];
    for (i, d) in m.invariants().iter().enumerate() {
        let d: u64 = d.try_into().expect("under cap");
        let mut next = Vec::with_capacity(coords_list.len() * d as usize);
        for coords in &coords_list {
            for v in 0..d {
                let mut c = coords.clone();
                c[i] = BigInt::from(v);
                next.push(c);
            }
        }
        coords_list = next;
    }
    coords_list.into_iter().map(|c| m.element(c)).collect()
}

/// `E_M(0) = { am | a^k m = 0 }`, by definitional brute force over the
/// effective scalar range and the torsion part.
pub fn envelope(m: &FgModule, cap: u64) -> Result<ElementSet> {
    let elems = torsion_elements(m, cap)?;
    let bound = stabilization_bound(&m.torsion_exponent());
    let mut set = BTreeSet::new();
    set.insert(m.zero_element().coords().to_vec());
    for a in m.effective_scalar_range() {
        if a.is_zero() {
            continue;
        }
        // per-coordinate stride of Γ_a
        let strides: Vec<BigInt> = m
            .invariants()
            .iter()
            .map(|d| {
                let ak = a.modpow(&BigInt::from(bound), d);
                d / ak.gcd(d)
            })
            .collect();
        for e in &elems {
            let in_gamma = e
                .coords()
                .iter()
                .zip(&strides)
                .all(|(c, t)| (c % t).is_zero());
            if in_gamma {
                set.insert(e.scale(&a).coords().to_vec());
            }
        }
    }
    Ok(ElementSet { parent: m.clone(), elements: set })
}

/// The element set of a submodule's torsion part, via membership filtering.
pub fn submodule_element_set(s: &Submodule, cap: u64) -> Result<ElementSet> {
    let mut set = BTreeSet::new();
    for e in torsion_elements(s.parent(), cap)? {
        if s.contains(&e)? {
            set.insert(e.coords().to_vec());
        }
    }
    Ok(ElementSet { parent: s.parent().clone(), elements: set })
}

/// `E_M(0) = ⋃_a aΓ_a(M)` as sets: the definitional envelope against the
/// union of the submodule route.
pub fn envelope_stratification_check(m: &FgModule, cap: u64) -> Result<bool> {
    let env = envelope(m, cap)?;
    let mut union = BTreeSet::new();
    union.insert(m.zero_element().coords().to_vec());
    for a in m.effective_scalar_range() {
        let s = agamma(m, &a);
        union.extend(submodule_element_set(&s, cap)?.elements);
    }
    Ok(env.elements == union)
}

/// `N(Z/n) = ⋃_a aΓ_a(Z/n) = E(0)` over the ring `Z/n` acting on itself.
pub fn nilradical_stratification_check(n: &BigInt) -> Result<bool> {
    if n < &BigInt::one() {
        return Err(Error::ZeroInput);
    }
    let ring = RingDesc::modular(n.clone())?;
    let m = FgModule::from_invariants(ring.clone(), 1, &[])?;
    let n_u64: u64 = n.try_into().map_err(|_| {
        Error::CapExceeded(n.to_string(), ENUM_CAP.to_string())
    })?;
    let env = envelope(&m, n_u64.max(1))?;
    let nil = nilradical(&ring)?;
    let mut expected = BTreeSet::new();
    let mut x = BigInt::zero();
    while &x < n {
        if nil.contains(&x) {
            if m.ambient_dim() == 1 {
                expected.insert(vec![x.clone()]);
            } else {
                expected.insert(vec![]);
            }
        }
        x += 1;
    }
    if m.ambient_dim() == 0 {
        // Z/1 is the zero module; both sides are the singleton {0}
        return Ok(env.elements.len() == 1 && env.elements.contains(&Vec::new()));
    }
    Ok(env.elements == expected)
}

/// The full torsion part as a submodule.
pub fn torsion_submodule(m: &FgModule) -> Submodule {
    let dim = m.ambient_dim();
    let rows: Vec<Vec<BigInt>> = (0..m.invariants().len())
        .map(|i| {
            let mut r = vec![BigInt::zero(); dim];
            r[i] = BigInt::one();
            r
        })
        .collect();
    Submodule::span_rows(m, crate::matrix::IntMatrix::from_rows(&rows, dim).unwrap()).unwrap()
}

/// `t(M) = ⋃_{a != 0} Γ_a(M)` as sets; requires a reduced module over `Z`.
pub fn torsion_stratification_check(m: &FgModule, cap: u64) -> Result<bool> {
    if !m.ring().is_integers() || !is_reduced(m) {
        return Err(Error::NotReduced);
    }
    let t = torsion_submodule(m);
    let t_set = submodule_element_set(&t, cap)?;
    let mut union = BTreeSet::new();
    union.insert(m.zero_element().coords().to_vec());
    for a in m.effective_scalar_range() {
        if a.is_zero() {
            continue;
        }
        union.extend(submodule_element_set(&gamma(m, &a), cap)?.elements);
    }
    Ok(t_set.elements == union)
}

/// Outcome of the sum theorem `√(0:M) M = Σ_{a ∈ √(0:M)} aΓ_a(M)`.
pub struct SumTheoremOutcome {
    pub lhs: Submodule,
    pub rhs: Submodule,
    pub equal: bool,
}

pub fn sum_theorem_check(m: &FgModule) -> Result<SumTheoremOutcome> {
    let ann = annihilator(m).generator;
    // The radical of (ann) in the base ring: over Z/nZ the ideal (ann) pulls
    // back to (gcd(ann, n)) over Z, so its radical is rad(gcd(ann, n)).
    let ideal_gen = if m.ring().is_integers() {
        ann.clone()
    } else {
        ann.gcd(m.ring().modulus())
    };
    let rad = radical_of_principal(&ideal_gen)?;
    let lhs = m.full_submodule().scalar_image(&rad);
    let mut rhs = m.zero_submodule();
    if !ideal_gen.is_zero() {
        // effective multiples of rad: a = rad * t below the range modulus
        let top = if m.ring().is_integers() {
            ideal_gen.clone()
        } else {
            m.ring().modulus().clone()
        };
        let mut a = BigInt::zero();
        loop {
            rhs = rhs.sum(&agamma(m, &a))?;
            a += &rad;
            if a >= top {
                break;
            }
        }
    }
    let equal = lhs == rhs;
    Ok(SumTheoremOutcome { lhs, rhs, equal })
}

/// `aΓ_a(M / aΓ_a(M)) = 0`: the radical property.
pub fn radical_property_check(m: &FgModule, a: &BigInt) -> Result<bool> {
    let (q, _) = quotient(m, &agamma(m, a))?;
    Ok(agamma(&q, a).is_zero())
}

/// `f(aΓ_a(M)) ⊆ aΓ_a(N)`: the preradical property.
pub fn functoriality_check(f: &Homomorphism, a: &BigInt) -> Result<bool> {
    let image = f.image_of(&agamma(f.source(), a))?;
    image.is_subset_of(&agamma(f.target(), a))
}

/// `aΓ_a(M1 ⊕ M2) = aΓ_a(M1) ⊕ aΓ_a(M2)` inside the canonical sum.
pub fn direct_sum_check(m1: &FgModule, m2: &FgModule, a: &BigInt) -> Result<bool> {
    let (sum, inj1, inj2) = direct_sum(m1, m2)?;
    let lhs = agamma(&sum, a);
    let rhs = inj1
        .image_of(&agamma(m1, a))?
        .sum(&inj2.image_of(&agamma(m2, a))?)?;
    Ok(lhs == rhs)
}

/// The three-way equivalence: `a`-reduced ⟺ `aΓ_a(M) = 0` ⟺ the kernel
/// chain stabilizes at once. Each route computed independently.
pub fn prop40_equivalence_check(m: &FgModule, a: &BigInt) -> Result<bool> {
    let via_kernels = kernel_of_scalar(m, a, 1)? == kernel_of_scalar(m, a, 2)?;
    let via_agamma = agamma(m, a).is_zero();
    let via_stab = stabilization_index(m, a) == 1;
    Ok(via_kernels == via_agamma && via_agamma == via_stab && via_kernels == is_a_reduced(m, a))
}

/// `aΓ_a(N) ⊆ N ∩ aΓ_a(M)` and `(aΓ_a(M) + N)/N ⊆ aΓ_a(M/N)`.
pub fn factor_check(m: &FgModule, n: &Submodule, a: &BigInt) -> Result<bool> {
    let inner = agamma_of_submodule(n, a)?;
    let first = inner.is_subset_of(&n.intersect(&agamma(m, a))?)?;
    let (q, proj) = quotient(m, n)?;
    let second = proj.image_of(&agamma(m, a))?.is_subset_of(&agamma(&q, a))?;
    Ok(first && second)
}

/// For the free `Z/nZ`-module of rank `r`: `aΓ_a((Z/n)^r)` is the `r`-fold
/// copy of `aΓ_a(Z/n)` componentwise.
pub fn free_module_componentwise_check(n: &BigInt, r: usize, a: &BigInt) -> Result<bool> {
    let ring = RingDesc::modular(n.clone())?;
    let one = FgModule::from_invariants(ring.clone(), 1, &[])?;
    let power = FgModule::from_invariants(ring.clone(), r, &[])?;
    let comp = agamma(&one, a);
    // generator of the cyclic component, copied into each coordinate
    let g = comp
        .lattice()
        .all_rows()
        .first()
        .cloned()
        .unwrap_or_else(|| vec![n.clone()]);
    let dim = power.ambient_dim();
    let rows: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut row = vec![BigInt::zero(); dim];
            row[i] = g[0].clone();
            row
        })
        .collect();
    let expected = Submodule::span_rows(
        &power,
        crate::matrix::IntMatrix::from_rows(&rows, dim)?,
    )?;
    Ok(agamma(&power, a) == expected)
}

/// For `a`-reduced finite `M`: `|M| = |Γ_a(M)| * |aM|` and the kernel of
/// `m -> am` is exactly `Γ_a(M)`; otherwise the kernel is strictly smaller.
pub fn ses_cardinality_check(m: &FgModule, a: &BigInt) -> Result<bool> {
    let card = m.cardinality().ok_or(Error::NotFinite)?;
    let g = gamma(m, a);
    let ker = kernel_of_scalar(m, a, 1)?;
    let a_m = m.full_submodule().scalar_image(a);
    if is_a_reduced(m, a) {
        let product = g.cardinality().unwrap() * a_m.cardinality().unwrap();
        Ok(product == card && ker == g)
    } else {
        Ok(ker.is_subset_of(&g)? && ker != g)
    }
}

/// A reproduced counterexample: the recomputed facts and whether they match
/// the stored expectation.
pub struct Witness {
    pub name: &'static str,
    pub detail: String,
    pub pass: bool,
}

/// `aΓ_a` is not left exact: `2Γ_2(2Z_8) = 4Z_8 ⊊ 2Z_8 = (2Z_8) ∩ 2Γ_2(Z_8)`.
pub fn hereditary_counterexample() -> Witness {
    let z8 = FgModule::from_invariants(RingDesc::integers(), 0, &[BigInt::from(8)]).unwrap();
    let two = BigInt::from(2);
    let n = z8.full_submodule().scalar_image(&two);
    let inner = agamma_of_submodule(&n, &two).unwrap();
    let outer = n.intersect(&agamma(&z8, &two)).unwrap();
    let four = z8.full_submodule().scalar_image(&BigInt::from(4));
    let two_sub = z8.full_submodule().scalar_image(&two);
    let pass = inner == four
        && outer == two_sub
        && inner.is_subset_of(&outer).unwrap()
        && inner != outer;
    Witness {
        name: "not-left-exact",
        detail: format!(
            "2G_2(2Z/8) = {} strictly inside (2Z/8) n 2G_2(Z/8) = {}",
            inner.as_module().iso_class(),
            outer.as_module().iso_class()
        ),
        pass,
    }
}

/// `aΓ_a` is not idempotent: `2Γ_2(2Γ_2(Z_4)) = 0 != 2Z_4 = 2Γ_2(Z_4)`.
pub fn idempotence_counterexample() -> Witness {
    let z4 = FgModule::from_invariants(RingDesc::integers(), 0, &[BigInt::from(4)]).unwrap();
    let two = BigInt::from(2);
    let first = agamma(&z4, &two);
    let second = agamma_of_submodule(&first, &two).unwrap();
    let expected_first = z4.full_submodule().scalar_image(&two);
    let pass = first == expected_first && !first.is_zero() && second.is_zero();
    Witness {
        name: "not-idempotent",
        detail: format!(
            "2G_2(Z/4) = {} but 2G_2(2G_2(Z/4)) = {}",
            first.as_module().iso_class(),
            second.as_module().iso_class()
        ),
        pass,
    }
}

/// `a`-reduced modules are not closed under extension: `2Z_4` and
/// `Z_4/2Z_4` are 2-reduced but `Z_4` is not.
pub fn extension_counterexample() -> Witness {
    let z4 = FgModule::from_invariants(RingDesc::integers(), 0, &[BigInt::from(4)]).unwrap();
    let two = BigInt::from(2);
    let n = z4.full_submodule().scalar_image(&two);
    let sub = n.as_module();
    let (quot, _) = quotient(&z4, &n).unwrap();
    let pass = is_a_reduced(&sub, &two) && is_a_reduced(&quot, &two) && !is_a_reduced(&z4, &two);
    Witness {
        name: "not-extension-closed",
        detail: format!(
            "2Z/4 = {} and Z/4 / 2Z/4 = {} are 2-reduced, Z/4 is not",
            sub.iso_class(),
            quot.iso_class()
        ),
        pass,
    }
}
