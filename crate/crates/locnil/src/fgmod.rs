//! Finitely generated modules over `Z` and `Z/nZ` in canonical form:
//! Smith-normal-form decomposition, elements, submodules with unique
//! Hermite canonical forms, quotients, direct sums and homomorphisms.
//!
//! A `Z/nZ`-module is stored as a `Z`-module carrying `n*e_i` relations, so
//! one SNF engine serves both rings. Canonical coordinates list the torsion
//! generators first (invariant factors ascending), then the free generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{hermite_normal_form, hnf_contains, left_kernel, smith_normal_form, IntMatrix};
use crate::ring::{PrincipalIdeal, RingDesc};
use crate::{Error, Result};

/// Default cap on element enumeration.
pub const ENUM_CAP: u64 = 65536;

/// Canonical form of a finitely generated module: free rank plus an
/// ascending divisibility chain of invariant factors (each `>= 2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FgModule {
    ring: RingDesc,
    free_rank: usize,
    invariants: Vec<BigInt>,
}

impl FgModule {
    pub fn zero(ring: RingDesc) -> Self {
        FgModule { ring, free_rank: 0, invariants: Vec::new() }
    }

    /// Canonicalize arbitrary torsion coefficients into a divisibility chain.
    pub fn from_invariants(
        ring: RingDesc,
        free_rank: usize,
        torsion_coefficients: &[BigInt],
    ) -> Result<Self> {
        for c in torsion_coefficients {
            if c < &BigInt::from(2) {
                return Err(Error::BadCoefficient(c.to_string()));
            }
        }
        let gens = free_rank + torsion_coefficients.len();
        let mut rows = Vec::new();
        for (i, c) in torsion_coefficients.iter().enumerate() {
            let mut row = vec![BigInt::zero(); gens];
            row[free_rank + i] = c.clone();
            rows.push(row);
        }
        let rels = IntMatrix::from_rows(&rows, gens)?;
        Ok(from_presentation(ring, gens, &rels)?.0)
    }

    pub fn ring(&self) -> &RingDesc {
        &self.ring
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariants(&self) -> &[BigInt] {
        &self.invariants
    }

    /// Ambient coordinate count: torsion coordinates then free coordinates.
    pub fn ambient_dim(&self) -> usize {
        self.invariants.len() + self.free_rank
    }

    pub fn is_zero_module(&self) -> bool {
        self.free_rank == 0 && self.invariants.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// `|M|` for finite modules.
    pub fn cardinality(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        Some(self.invariants.iter().product::<BigInt>().max(BigInt::one()))
    }

    /// Exponent of the torsion part (1 when torsion-free).
    pub fn torsion_exponent(&self) -> BigInt {
        self.invariants.last().cloned().unwrap_or_else(BigInt::one)
    }

    /// Relation lattice rows `d_i * e_i` (torsion coordinates only).
    pub fn relation_rows(&self) -> IntMatrix {
        let m = self.ambient_dim();
        let mut rows = Vec::new();
        for (i, d) in self.invariants.iter().enumerate() {
            let mut row = vec![BigInt::zero(); m];
            row[i] = d.clone();
            rows.push(row);
        }
        IntMatrix::from_rows(&rows, m).unwrap()
    }

    /// Canonical iso-class string: equal strings iff isomorphic modules.
    pub fn iso_class(&self) -> String {
        if self.is_zero_module() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        for d in &self.invariants {
            parts.push(format!("Z/{}", d));
        }
        parts.join(" x ")
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Result<ModElement> {
        if coords.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "element with {} coords in module of ambient dim {}",
                coords.len(),
                self.ambient_dim()
            )));
        }
        Ok(ModElement { parent: self.clone(), coords: self.reduce_coords(coords) })
    }

    pub fn zero_element(&self) -> ModElement {
        ModElement {
            parent: self.clone(),
            coords: vec![BigInt::zero(); self.ambient_dim()],
        }
    }

    pub fn generator(&self, i: usize) -> ModElement {
        let mut coords = vec![BigInt::zero(); self.ambient_dim()];
        coords[i] = BigInt::one();
        ModElement { parent: self.clone(), coords }
    }

    fn reduce_coords(&self, mut coords: Vec<BigInt>) -> Vec<BigInt> {
        for (i, d) in self.invariants.iter().enumerate() {
            coords[i] = coords[i].mod_floor(d);
        }
        coords
    }

    /// Scalars are reduced mod n at the interface for `Z/nZ`.
    pub fn reduce_scalar(&self, a: &BigInt) -> BigInt {
        self.ring.reduce(a)
    }

    /// Every element of a finite module, torsion coordinates in mixed-radix
    /// order. Errors beyond `cap`.
    pub fn enumerate_elements(&self, cap: u64) -> Result<Vec<ModElement>> {
        let card = self.cardinality().ok_or(Error::NotFinite)?;
        if card > BigInt::from(cap) {
            return Err(Error::CapExceeded(card.to_string(), cap.to_string()));
        }
        let mut out = vec![self.zero_element()];
        for (i, d) in self.invariants.iter().enumerate() {
            let d: u64 = d.try_into().expect("under cap");
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for e in &out {
                for v in 0..d {
                    let mut coords = e.coords.clone();
                    coords[i] = BigInt::from(v);
                    next.push(ModElement { parent: self.clone(), coords });
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// All scalars that matter: `{0} ∪ {1..e}` over `Z` with `e` the torsion
    /// exponent, all residues over `Z/nZ`. For nonzero `a`, behaviour only
    /// depends on `a mod e`.
    pub fn effective_scalar_range(&self) -> Vec<BigInt> {
        let top: BigInt = if self.ring.is_integers() {
            self.torsion_exponent()
        } else {
            self.ring.modulus() - 1
        };
        let mut out = vec![BigInt::zero()];
        let mut a = BigInt::one();
        while a <= top {
            out.push(a.clone());
            a += 1;
        }
        out
    }

    /// The whole module as a submodule of itself.
    pub fn full_submodule(&self) -> Submodule {
        let gens = IntMatrix::identity(self.ambient_dim());
        Submodule::span_rows(self, gens).unwrap()
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule::span_rows(self, IntMatrix::zero(0, self.ambient_dim())).unwrap()
    }
}

impl std::fmt::Display for FgModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.iso_class())
    }
}

/// An element in canonical coordinates: torsion coordinates reduced mod
/// their invariant factor, free coordinates unreduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModElement {
    parent: FgModule,
    coords: Vec<BigInt>,
}

impl ModElement {
    pub fn parent(&self) -> &FgModule {
        &self.parent
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &ModElement) -> Result<ModElement> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ModElement {
            parent: self.parent.clone(),
            coords: self.parent.reduce_coords(coords),
        })
    }

    pub fn scale(&self, a: &BigInt) -> ModElement {
        let a = self.parent.reduce_scalar(a);
        let coords = self.coords.iter().map(|c| c * &a).collect();
        ModElement {
            parent: self.parent.clone(),
            coords: self.parent.reduce_coords(coords),
        }
    }
}

/// Cokernel of a relation matrix: the canonical module plus the images of
/// the presentation generators in canonical coordinates.
///
/// For `Z/nZ` the rows `n*e_i` are appended first.
pub fn from_presentation(
    ring: RingDesc,
    gens: usize,
    relations: &IntMatrix,
) -> Result<(FgModule, IntMatrix)> {
    if relations.cols() != gens {
        return Err(Error::DimensionMismatch(format!(
            "relations have {} columns for {} generators",
            relations.cols(),
            gens
        )));
    }
    let mut rels = relations.clone();
    if !ring.is_integers() {
        let mut extra = IntMatrix::zero(gens, gens);
        for i in 0..gens {
            extra.set(i, i, ring.modulus().clone());
        }
        rels = rels.vstack(&extra)?;
    }
    let snf = smith_normal_form(&rels);
    let diag = snf.diagonal();
    // coordinate j of x * V^{-1} has invariant diag[j] (0 past the diagonal)
    let mut torsion_cols = Vec::new();
    let mut free_cols = Vec::new();
    let mut invariants = Vec::new();
    for j in 0..gens {
        let d = diag.get(j).cloned().unwrap_or_else(BigInt::zero);
        if d.is_zero() {
            free_cols.push(j);
        } else if d > BigInt::one() {
            torsion_cols.push(j);
            invariants.push(d);
        }
    }
    let module = FgModule {
        ring,
        free_rank: free_cols.len(),
        invariants: invariants.clone(),
    };
    let kept: Vec<usize> = torsion_cols.iter().chain(free_cols.iter()).copied().collect();
    let mut gen_map = IntMatrix::zero(gens, kept.len());
    for i in 0..gens {
        for (new_j, &old_j) in kept.iter().enumerate() {
            let mut v = snf.v_inv.get(i, old_j).clone();
            if new_j < invariants.len() {
                v = v.mod_floor(&invariants[new_j]);
            }
            gen_map.set(i, new_j, v);
        }
    }
    Ok((module, gen_map))
}

/// A subgroup of an [`FgModule`], stored with its generator matrix and the
/// Hermite canonical form of the lattice it spans together with the parent
/// relation lattice. Equal subgroups have identical canonical forms.
#[derive(Debug, Clone)]
pub struct Submodule {
    parent: FgModule,
    generators: IntMatrix,
    lattice: IntMatrix,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.lattice == other.lattice
    }
}
impl Eq for Submodule {}

impl Submodule {
    pub fn span(parent: &FgModule, elements: &[ModElement]) -> Result<Submodule> {
        for e in elements {
            if e.parent() != parent {
                return Err(Error::ParentMismatch);
            }
        }
        let rows: Vec<Vec<BigInt>> = elements.iter().map(|e| e.coords.clone()).collect();
        Self::span_rows(parent, IntMatrix::from_rows(&rows, parent.ambient_dim())?)
    }

    pub fn span_rows(parent: &FgModule, generators: IntMatrix) -> Result<Submodule> {
        if generators.cols() != parent.ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "submodule generators have {} coords, ambient dim is {}",
                generators.cols(),
                parent.ambient_dim()
            )));
        }
        let stacked = generators.vstack(&parent.relation_rows())?;
        let lattice = hermite_normal_form(&stacked);
        Ok(Submodule { parent: parent.clone(), generators, lattice })
    }

    pub fn parent(&self) -> &FgModule {
        &self.parent
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    /// Canonical lattice basis (Hermite form, includes the relation lattice).
    pub fn lattice(&self) -> &IntMatrix {
        &self.lattice
    }

    pub fn contains(&self, e: &ModElement) -> Result<bool> {
        if e.parent() != &self.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(hnf_contains(&self.lattice, e.coords()))
    }

    pub fn is_zero(&self) -> bool {
        self == &self.parent.zero_submodule()
    }

    pub fn is_full(&self) -> bool {
        self == &self.parent.full_submodule()
    }

    pub fn is_subset_of(&self, other: &Submodule) -> Result<bool> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(self
            .lattice
            .all_rows()
            .iter()
            .all(|r| hnf_contains(&other.lattice, r)))
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        Submodule::span_rows(&self.parent, self.generators.vstack(&other.generators)?)
    }

    /// Lattice intersection via the left kernel of the stacked bases.
    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        let b1 = &self.lattice;
        let b2 = &other.lattice;
        let mut neg_b2 = b2.clone();
        for r in 0..neg_b2.rows() {
            for c in 0..neg_b2.cols() {
                let v = -neg_b2.get(r, c);
                neg_b2.set(r, c, v);
            }
        }
        let stacked = b1.vstack(&neg_b2)?;
        let kernel = left_kernel(&stacked);
        let m = self.parent.ambient_dim();
        let mut rows = Vec::new();
        for z in kernel {
            let mut v = vec![BigInt::zero(); m];
            for (i, coef) in z.iter().take(b1.rows()).enumerate() {
                for c in 0..m {
                    v[c] += coef * b1.get(i, c);
                }
            }
            rows.push(v);
        }
        Submodule::span_rows(&self.parent, IntMatrix::from_rows(&rows, m)?)
    }

    /// Image of the submodule under multiplication by `a`.
    pub fn scalar_image(&self, a: &BigInt) -> Submodule {
        let a = self.parent.reduce_scalar(a);
        let mut gens = self.lattice.clone();
        for r in 0..gens.rows() {
            for c in 0..gens.cols() {
                let v = gens.get(r, c) * &a;
                gens.set(r, c, v);
            }
        }
        Submodule::span_rows(&self.parent, gens).unwrap()
    }

    /// Abstract isomorphism class of the submodule: present `L / Λ` where
    /// `L` is the lattice and `Λ` the parent relation lattice.
    pub fn as_module(&self) -> FgModule {
        let b = &self.lattice;
        let rel = self.parent.relation_rows();
        if b.rows() == 0 {
            return FgModule::zero(self.parent.ring.clone());
        }
        // relations among the rows of B: projections of the left kernel of [B; Λ]
        let stacked = b.vstack(&rel).unwrap();
        let kernel = left_kernel(&stacked);
        let rows: Vec<Vec<BigInt>> = kernel.iter().map(|z| z[..b.rows()].to_vec()).collect();
        let rels = IntMatrix::from_rows(&rows, b.rows()).unwrap();
        from_presentation(self.parent.ring.clone(), b.rows(), &rels)
            .unwrap()
            .0
    }

    /// `|S|` as a subgroup of a finite parent.
    pub fn cardinality(&self) -> Option<BigInt> {
        self.as_module().cardinality()
    }

    /// Elements of the submodule lying in the finite part, by filtering the
    /// parent enumeration.
    pub fn enumerate_elements(&self, cap: u64) -> Result<Vec<ModElement>> {
        let all = self.parent.enumerate_elements(cap)?;
        let mut out = Vec::new();
        for e in all {
            if self.contains(&e)? {
                out.push(e);
            }
        }
        Ok(out)
    }
}

/// `(0 :_M a^k)`, computed per coordinate.
pub fn kernel_of_scalar(m: &FgModule, a: &BigInt, k: u32) -> Result<Submodule> {
    if k == 0 {
        return Err(Error::ZeroExponent);
    }
    let a = m.reduce_scalar(a);
    let dim = m.ambient_dim();
    let mut rows = Vec::new();
    for (i, d) in m.invariants().iter().enumerate() {
        // coordinate subgroup (d / gcd(d, a^k)) * Z/d
        let ak_mod = if a.is_zero() {
            BigInt::zero()
        } else {
            a.modpow(&BigInt::from(k), d)
        };
        let g = ak_mod.gcd(d);
        let gen = d / g;
        let mut row = vec![BigInt::zero(); dim];
        row[i] = gen;
        rows.push(row);
    }
    if a.is_zero() {
        for i in m.invariants().len()..dim {
            let mut row = vec![BigInt::zero(); dim];
            row[i] = BigInt::one();
            rows.push(row);
        }
    }
    Submodule::span_rows(m, IntMatrix::from_rows(&rows, dim)?)
}

/// Quotient `M / N` in canonical form, with the projection map.
pub fn quotient(m: &FgModule, n: &Submodule) -> Result<(FgModule, Homomorphism)> {
    if n.parent() != m {
        return Err(Error::ParentMismatch);
    }
    let (q, gen_map) = from_presentation(m.ring.clone(), m.ambient_dim(), n.lattice())?;
    let proj = Homomorphism::new(m.clone(), q.clone(), gen_map)?;
    Ok((q, proj))
}

/// Direct sum `M1 ⊕ M2` in canonical form, with the two injections.
pub fn direct_sum(m1: &FgModule, m2: &FgModule) -> Result<(FgModule, Homomorphism, Homomorphism)> {
    if m1.ring != m2.ring {
        return Err(Error::RingMismatch);
    }
    let g1 = m1.ambient_dim();
    let g2 = m2.ambient_dim();
    let gens = g1 + g2;
    let r1 = m1.relation_rows();
    let r2 = m2.relation_rows();
    let mut rows = Vec::new();
    for i in 0..r1.rows() {
        let mut row = r1.row(i);
        row.extend(vec![BigInt::zero(); g2]);
        rows.push(row);
    }
    for i in 0..r2.rows() {
        let mut row = vec![BigInt::zero(); g1];
        row.extend(r2.row(i));
        rows.push(row);
    }
    let rels = IntMatrix::from_rows(&rows, gens)?;
    let (sum, gen_map) = from_presentation(m1.ring.clone(), gens, &rels)?;
    let rows1: Vec<Vec<BigInt>> = (0..g1).map(|i| gen_map.row(i)).collect();
    let rows2: Vec<Vec<BigInt>> = (g1..gens).map(|i| gen_map.row(i)).collect();
    let inj1 = Homomorphism::new(
        m1.clone(),
        sum.clone(),
        IntMatrix::from_rows(&rows1, sum.ambient_dim())?,
    )?;
    let inj2 = Homomorphism::new(
        m2.clone(),
        sum.clone(),
        IntMatrix::from_rows(&rows2, sum.ambient_dim())?,
    )?;
    Ok((sum, inj1, inj2))
}

/// `(0 : M)` as a principal ideal of the base ring.
pub fn annihilator(m: &FgModule) -> PrincipalIdeal {
    let gen = if m.is_zero_module() {
        BigInt::one()
    } else if m.free_rank > 0 {
        BigInt::zero()
    } else {
        m.torsion_exponent()
    };
    PrincipalIdeal::new(m.ring.clone(), &gen)
}

/// A module map in canonical coordinates; rows are generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: FgModule,
    target: FgModule,
    matrix: IntMatrix,
}

impl Homomorphism {
    /// Checks well-definedness: `d_i * f(e_i) = 0` in the target for every
    /// torsion generator.
    pub fn new(source: FgModule, target: FgModule, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != source.ambient_dim() || matrix.cols() != target.ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "hom matrix {}x{} between ambient dims {} and {}",
                matrix.rows(),
                matrix.cols(),
                source.ambient_dim(),
                target.ambient_dim()
            )));
        }
        let hom = Homomorphism { source, target, matrix };
        for (i, d) in hom.source.invariants().iter().enumerate() {
            let image = hom.apply_row(i);
            if !image.scale(d).is_zero() {
                return Err(Error::DimensionMismatch(format!(
                    "incompatible hom: {} * image of generator {} is nonzero",
                    d, i
                )));
            }
        }
        Ok(hom)
    }

    pub fn source(&self) -> &FgModule {
        &self.source
    }

    pub fn target(&self) -> &FgModule {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    fn apply_row(&self, i: usize) -> ModElement {
        self.target.element(self.matrix.row(i)).unwrap()
    }

    pub fn apply(&self, e: &ModElement) -> Result<ModElement> {
        if e.parent() != &self.source {
            return Err(Error::ParentMismatch);
        }
        let mut coords = vec![BigInt::zero(); self.target.ambient_dim()];
        for (i, c) in e.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..coords.len() {
                coords[j] += c * self.matrix.get(i, j);
            }
        }
        self.target.element(coords)
    }

    /// Image of a submodule of the source.
    pub fn image_of(&self, s: &Submodule) -> Result<Submodule> {
        if s.parent() != &self.source {
            return Err(Error::ParentMismatch);
        }
        let mut rows = Vec::new();
        for r in s.lattice().all_rows() {
            let e = self.source.element(r)?;
            rows.push(self.apply(&e)?.coords().to_vec());
        }
        Submodule::span_rows(
            &self.target,
            IntMatrix::from_rows(&rows, self.target.ambient_dim())?,
        )
    }
}

/// Uniformly sampled compatibility-respecting map, deterministic per seed.
pub fn random_hom(m: &FgModule, n: &FgModule, seed: u64) -> Result<Homomorphism> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut matrix = IntMatrix::zero(m.ambient_dim(), n.ambient_dim());
    let src_inv = |i: usize| -> Option<&BigInt> { m.invariants().get(i) };
    for i in 0..m.ambient_dim() {
        for j in 0..n.ambient_dim() {
            let entry = match (src_inv(i), n.invariants().get(j)) {
                (Some(d), Some(e)) => {
                    // d * c = 0 mod e: c is a multiple of e / gcd(e, d)
                    let g = d.gcd(e);
                    let step = e / &g;
                    let g64: u64 = (&g).try_into().unwrap_or(u64::MAX);
                    let t = rng.gen_range(0..g64.max(1));
                    step * BigInt::from(t)
                }
                (Some(_), None) => BigInt::zero(),
                (None, Some(e)) => {
                    let e64: u64 = e.try_into().unwrap_or(u64::MAX);
                    BigInt::from(rng.gen_range(0..e64.max(1)))
                }
                (None, None) => BigInt::from(rng.gen_range(-8i64..=8)),
            };
            matrix.set(i, j, entry);
        }
    }
    Homomorphism::new(m.clone(), n.clone(), matrix)
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn presentation_examples() {
        let rels = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]).unwrap();
        let (m, _) = from_presentation(RingDesc::integers(), 2, &rels).unwrap();
        assert_eq!(m.invariants(), &[big(6)]);
        assert_eq!(m.free_rank(), 0);

        let none = IntMatrix::zero(0, 2);
        let (m, _) = from_presentation(RingDesc::integers(), 2, &none).unwrap();
        assert_eq!(m.free_rank(), 2);
        assert!(m.invariants().is_empty());

        let unit = IntMatrix::from_i64(1, 1, &[1]).unwrap();
        let (m, _) = from_presentation(RingDesc::integers(), 1, &unit).unwrap();
        assert!(m.is_zero_module());
    }

    #[test]
    fn from_invariants_canonicalizes() {
        let m = zmod(&[2, 3]);
        assert_eq!(m.invariants(), &[big(6)]);
        let m = zmod(&[4, 6]);
        assert_eq!(m.invariants(), &[big(2), big(12)]);
        let f = FgModule::from_invariants(RingDesc::integers(), 3, &[]).unwrap();
        assert_eq!(f.free_rank(), 3);
        // idempotent
        let again =
            FgModule::from_invariants(RingDesc::integers(), 0, &m.invariants().to_vec()).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn kernel_of_scalar_examples() {
        let z8 = zmod(&[8]);
        let k = kernel_of_scalar(&z8, &big(2), 1).unwrap();
        assert_eq!(k.cardinality().unwrap(), big(2));
        assert!(k.contains(&z8.element(vec![big(4)]).unwrap()).unwrap());

        let k = kernel_of_scalar(&z8, &big(1), 3).unwrap();
        assert!(k.is_zero());
        let k = kernel_of_scalar(&z8, &big(0), 1).unwrap();
        assert!(k.is_full());
        assert!(matches!(kernel_of_scalar(&z8, &big(2), 0), Err(Error::ZeroExponent)));
    }

    #[test]
    fn quotient_examples() {
        let z8 = zmod(&[8]);
        let two = z8.full_submodule().scalar_image(&big(2));
        let (q, proj) = quotient(&z8, &two).unwrap();
        assert_eq!(q.iso_class(), "Z/2");
        // projection of 1 generates the quotient
        let img = proj.apply(&z8.generator(0)).unwrap();
        assert!(!img.is_zero());

        let (q, _) = quotient(&z8, &z8.zero_submodule()).unwrap();
        assert_eq!(q.iso_class(), "Z/8");
        let (q, _) = quotient(&z8, &z8.full_submodule()).unwrap();
        assert!(q.is_zero_module());
    }

    #[test]
    fn quotient_multiplicativity() {
        let m = zmod(&[4, 12]);
        let elems = m.enumerate_elements(ENUM_CAP).unwrap();
        let card = m.cardinality().unwrap();
        for e in elems.iter().step_by(5) {
            let s = Submodule::span(&m, std::slice::from_ref(e)).unwrap();
            let (q, _) = quotient(&m, &s).unwrap();
            assert_eq!(s.cardinality().unwrap() * q.cardinality().unwrap(), card);
        }
    }

    #[test]
    fn direct_sum_examples() {
        let (s, _, _) = direct_sum(&zmod(&[2]), &zmod(&[3])).unwrap();
        assert_eq!(s.invariants(), &[big(6)]);
        let z = FgModule::zero(RingDesc::integers());
        let m = zmod(&[5]);
        let (s, inj1, _) = direct_sum(&m, &z).unwrap();
        assert_eq!(s, m);
        assert!(!inj1.apply(&m.generator(0)).unwrap().is_zero());
        let (s, _, _) = direct_sum(&zmod(&[2]), &zmod(&[2])).unwrap();
        assert_eq!(s.invariants(), &[big(2), big(2)]);
    }

    #[test]
    fn annihilator_examples() {
        assert_eq!(annihilator(&zmod(&[12])).generator, big(12));
        let mixed = FgModule::from_invariants(RingDesc::integers(), 1, &[big(4)]).unwrap();
        assert_eq!(annihilator(&mixed).generator, big(0));
        assert_eq!(annihilator(&zmod(&[2, 12])).generator, big(12));
        assert_eq!(annihilator(&FgModule::zero(RingDesc::integers())).generator, big(1));
    }

    #[test]
    fn submodule_algebra_examples() {
        let z8 = zmod(&[8]);
        let two = z8.full_submodule().scalar_image(&big(2));
        let four = z8.full_submodule().scalar_image(&big(4));
        assert_eq!(two.sum(&four).unwrap(), two);
        assert!(!two.contains(&z8.element(vec![big(3)]).unwrap()).unwrap());

        let z12 = zmod(&[12]);
        let a = z12.full_submodule().scalar_image(&big(2));
        let b = z12.full_submodule().scalar_image(&big(3));
        let c = a.intersect(&b).unwrap();
        let six = z12.full_submodule().scalar_image(&big(6));
        assert_eq!(c, six);
        // brute force cross-check
        let elems = z12.enumerate_elements(ENUM_CAP).unwrap();
        for e in elems {
            let both = a.contains(&e).unwrap() && b.contains(&e).unwrap();
            assert_eq!(both, c.contains(&e).unwrap());
        }
    }

    #[test]
    fn as_module_iso_classes() {
        let z8 = zmod(&[8]);
        let two = z8.full_submodule().scalar_image(&big(2));
        assert_eq!(two.as_module().iso_class(), "Z/4");
        assert_eq!(z8.zero_submodule().as_module().iso_class(), "0");
        let m = FgModule::from_invariants(RingDesc::integers(), 1, &[big(6)]).unwrap();
        assert_eq!(m.full_submodule().as_module().iso_class(), "Z x Z/6");
    }

    #[test]
    fn iso_class_examples() {
        assert_eq!(zmod(&[2, 3]).iso_class(), "Z/6");
        let f = FgModule::from_invariants(RingDesc::integers(), 2, &[]).unwrap();
        assert_eq!(f.iso_class(), "Z^2");
        assert_eq!(FgModule::zero(RingDesc::integers()).iso_class(), "0");
    }

    #[test]
    fn random_hom_compatibility() {
        let m = zmod(&[4]);
        let n = zmod(&[8]);
        for seed in 0..50 {
            let h = random_hom(&m, &n, seed).unwrap();
            // entry must be even: 4c = 0 mod 8
            assert!((h.matrix().get(0, 0) % big(2)).is_zero());
        }
        // reduction mod 4 from Z/8 is a valid hom
        let h = Homomorphism::new(
            n.clone(),
            m.clone(),
            IntMatrix::from_i64(1, 1, &[1]).unwrap(),
        );
        assert!(h.is_ok());
    }

    #[test]
    fn modular_ring_modules() {
        let ring = RingDesc::modular(12).unwrap();
        let m = FgModule::from_invariants(ring.clone(), 1, &[]).unwrap();
        assert_eq!(m.invariants(), &[big(12)]);
        assert_eq!(m.free_rank(), 0);
        let (m2, _) = from_presentation(ring, 1, &IntMatrix::from_i64(1, 1, &[4]).unwrap()).unwrap();
        assert_eq!(m2.invariants(), &[big(4)]);
    }
}
