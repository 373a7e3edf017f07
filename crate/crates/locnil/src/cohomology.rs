//! Principal local cohomology via the length-one Čech complex
//! `0 → M → M_a → 0`, the Ext groups against `Z/aZ` from the free
//! resolution `0 → Z →(·a) Z → Z/a → 0`, and a comparison report per
//! degree. Only degrees 0 and 1 exist: the one-element Čech complex has
//! length one, so `H^i = 0` for `i ≥ 2` identically.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::fgmod::{kernel_of_scalar, quotient, FgModule, Submodule};
use crate::functor::{gamma, is_a_reduced};
use crate::{Error, Result};

/// A cohomology value: a finitely generated part plus a symbolic divisible
/// part `(Z[1/base])/Z)^rank`, which is not finitely generated when
/// `rank > 0` and `|base| >= 2`.
#[derive(Debug, Clone)]
pub struct CohomologyClass {
    pub finite_part: FgModule,
    pub prufer_rank: usize,
    pub prufer_base: BigInt,
}

impl CohomologyClass {
    pub fn finite(m: FgModule) -> Self {
        CohomologyClass { finite_part: m, prufer_rank: 0, prufer_base: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.prufer_rank == 0 && self.finite_part.is_zero_module()
    }

    /// Human-readable iso description, e.g. `Z/4`, `(Z[1/2]/Z)^1`, or
    /// `Z/2 + (Z[1/3]/Z)^2`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if !self.finite_part.is_zero_module() {
            parts.push(self.finite_part.iso_class());
        }
        if self.prufer_rank > 0 {
            parts.push(format!("(Z[1/{}]/Z)^{}", self.prufer_base, self.prufer_rank));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Isomorphism comparison with a finitely generated module: defined
    /// (true) only between two zero sides or two finitely generated sides
    /// with equal iso class. An infinite side never matches a finite one.
    pub fn isomorphic_to_fg(&self, other: &FgModule) -> bool {
        if self.prufer_rank > 0 {
            return false;
        }
        self.finite_part.iso_class() == other.iso_class()
    }
}

/// `H^0_(a)(M) = Γ_a(M)`, recomputed through the torsion functor.
pub fn h0(m: &FgModule, a: &BigInt) -> Result<Submodule> {
    if !m.ring().is_integers() {
        return Err(Error::RingMismatch);
    }
    Ok(gamma(m, a))
}

/// `H^1_(a)(M)`: cokernel of `M → M_a`. The finite part localizes to its
/// quotient by `Γ_a`, onto which the map is surjective, so only the free
/// summand contributes — a divisible group `(Z[1/a]/Z)^free_rank` when
/// `|a| >= 2`, and zero when `a ∈ {0, ±1}` (localization at 0 is the zero
/// ring; at a unit, the map is the identity).
pub fn h1(m: &FgModule, a: &BigInt) -> Result<CohomologyClass> {
    if !m.ring().is_integers() {
        return Err(Error::RingMismatch);
    }
    if a.abs() < BigInt::from(2) {
        return Ok(CohomologyClass::finite(FgModule::zero(m.ring().clone())));
    }
    Ok(CohomologyClass {
        finite_part: FgModule::zero(m.ring().clone()),
        prufer_rank: m.free_rank(),
        prufer_base: a.abs(),
    })
}

/// `Ext^0(Z/a, M) = Hom(Z/a, M) = (0 :_M a)` as an abstract module.
/// At `a = 0` the resolution degenerates: `Hom(Z, M) = M`.
/// At `a = ±1`, `Z/a = 0` and both Ext groups vanish.
pub fn ext0(m: &FgModule, a: &BigInt) -> Result<FgModule> {
    if !m.ring().is_integers() {
        return Err(Error::RingMismatch);
    }
    if a.is_zero() {
        return Ok(m.clone());
    }
    if a.abs().is_one() {
        return Ok(FgModule::zero(m.ring().clone()));
    }
    Ok(kernel_of_scalar(m, a, 1)?.as_module())
}

/// `Ext^1(Z/a, M) = M/aM`; zero at `a = 0` (projective `Z`) and `a = ±1`.
pub fn ext1(m: &FgModule, a: &BigInt) -> Result<FgModule> {
    if !m.ring().is_integers() {
        return Err(Error::RingMismatch);
    }
    if a.is_zero() || a.abs().is_one() {
        return Ok(FgModule::zero(m.ring().clone()));
    }
    let image = m.full_submodule().scalar_image(a);
    Ok(quotient(m, &image)?.0)
}

/// Degree-0 comparison `H^0 ≅ Ext^0` for an `a`-reduced module; the
/// hypothesis is enforced, and under it the check must return true.
pub fn tz_check_h0(m: &FgModule, a: &BigInt) -> Result<bool> {
    if !is_a_reduced(m, a) {
        return Err(Error::NotAReduced(format!("{} at a = {}", m.iso_class(), a)));
    }
    let h = h0(m, a)?.as_module();
    let e = ext0(m, a)?;
    Ok(h.iso_class() == e.iso_class())
}

/// Comparison report for both degrees. Degree 0 carries an agreement flag;
/// degree 1 is reported with the same comparison semantics but no
/// correctness claim is attached to a mismatch there.
#[derive(Debug, Clone, Serialize)]
pub struct TzReport {
    pub module: String,
    pub a: String,
    pub a_reduced: bool,
    pub h0: String,
    pub ext0: String,
    pub degree0_agree: bool,
    pub h1: String,
    pub ext1: String,
    pub degree1_agree: bool,
}

pub fn tz_report(m: &FgModule, a: &BigInt) -> Result<TzReport> {
    let h0_mod = h0(m, a)?.as_module();
    let e0 = ext0(m, a)?;
    let h1_class = h1(m, a)?;
    let e1 = ext1(m, a)?;
    Ok(TzReport {
        module: m.iso_class(),
        a: a.to_string(),
        a_reduced: is_a_reduced(m, a),
        h0: h0_mod.iso_class(),
        ext0: e0.iso_class(),
        degree0_agree: h0_mod.iso_class() == e0.iso_class(),
        h1: h1_class.describe(),
        ext1: e1.iso_class(),
        degree1_agree: h1_class.isomorphic_to_fg(&e1),
    })
}
