//! Deterministic verification fleets. Each suite turns one family of
//! identities into a list of [`CheckRecord`]s; `run_suite` dispatches by
//! name and `all` concatenates every suite. Fixed (count, seed) give a
//! byte-identical record list.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::{tz_check_h0, tz_report};
use crate::fgmod::{direct_sum, random_hom, FgModule, ENUM_CAP};
use crate::functor::{
    agamma, direct_sum_check, envelope_stratification_check, extension_counterexample,
    functoriality_check, hereditary_counterexample, idempotence_counterexample, is_a_reduced,
    is_reduced, nilradical_stratification_check, prop40_equivalence_check, radical_property_check,
    ses_cardinality_check, sum_theorem_check, torsion_stratification_check, torsion_submodule,
};
use crate::lattice::{enumerate_submodules, inclusion_chain_check, mult_module_check};
use crate::matrix::{smith_normal_form, IntMatrix};
use crate::poly::{gamma_poly_check, poly_theorem_check, SweepMode, SEARCH_CAP};
use crate::report::CheckRecord;
use crate::ring::RingDesc;
use crate::{Error, Result};

/// Cardinality ceiling for fleet members' torsion parts, so element
/// enumeration (envelope, torsion stratification) stays at desk scale.
pub const FLEET_TORSION_CAP: u64 = 4096;

/// One random module: free rank <= 2, up to 4 torsion coefficients each
/// <= 64. Coefficients are drawn as divisors of a common base so the
/// torsion exponent stays <= 64 and "every effective scalar" is a short
/// loop; the torsion cardinality is resampled below [`FLEET_TORSION_CAP`].
fn random_module(rng: &mut ChaCha8Rng) -> FgModule {
    loop {
        let n: u64 = rng.gen_range(2..=64);
        let divisors: Vec<u64> = (2..=n).filter(|d| n % d == 0).collect();
        let torsion_len = rng.gen_range(0..=4usize);
        let free_rank = rng.gen_range(0..=2usize);
        if torsion_len == 0 && free_rank == 0 {
            continue;
        }
        let torsion: Vec<BigInt> = (0..torsion_len)
            .map(|_| BigInt::from(divisors[rng.gen_range(0..divisors.len())]))
            .collect();
        let cardinality: BigInt = torsion.iter().product();
        if cardinality > BigInt::from(FLEET_TORSION_CAP) {
            continue;
        }
        return FgModule::from_invariants(RingDesc::integers(), free_rank, &torsion)
            .expect("sampled coefficients are >= 2");
    }
}

/// Deterministic fleet of random modules over `Z`.
pub fn random_fleet(count: usize, seed: u64) -> Vec<FgModule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_module(&mut rng)).collect()
}

fn instance(m: &FgModule) -> String {
    m.iso_class()
}

/// Aggregate a per-scalar predicate over the module's effective range
/// into one record; a failure records the offending scalar.
fn sweep_scalars(
    check: &str,
    m: &FgModule,
    mut pred: impl FnMut(&BigInt) -> Result<bool>,
) -> Result<CheckRecord> {
    for a in m.effective_scalar_range() {
        if !pred(&a)? {
            return Ok(CheckRecord::fail(
                check,
                instance(m),
                format!("fails at a = {}", a),
            ));
        }
    }
    Ok(CheckRecord::pass(check, instance(m)))
}

/// Exact reproductions of the worked identities and the three
/// counterexample witnesses, plus `pΓ_p(Z/p) = 0` for the first primes.
pub fn paper_regressions() -> Result<Vec<CheckRecord>> {
    let z = RingDesc::integers();
    let mut records = Vec::new();
    let two = BigInt::from(2);

    let z8 = FgModule::from_invariants(z.clone(), 0, &[BigInt::from(8)])?;
    let got = agamma(&z8, &two);
    let want = z8.full_submodule().scalar_image(&two);
    records.push(if got == want && got.as_module().iso_class() == "Z/4" {
        CheckRecord::value("agamma-eq-2Z8", "Z/8, a=2", "2·Z/8 ≅ Z/4")
    } else {
        CheckRecord::fail("agamma-eq-2Z8", "Z/8, a=2", got.as_module().iso_class())
    });

    for w in [
        hereditary_counterexample(),
        idempotence_counterexample(),
        extension_counterexample(),
    ] {
        records.push(if w.pass {
            CheckRecord::value(w.name, "counterexample witness", w.detail)
        } else {
            CheckRecord::fail(w.name, "counterexample witness", w.detail)
        });
    }

    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29] {
        let zp = FgModule::from_invariants(z.clone(), 0, &[BigInt::from(p)])?;
        let img = agamma(&zp, &BigInt::from(p));
        records.push(if img.is_zero() {
            CheckRecord::pass("agamma-vanishes-mod-p", format!("Z/{}, a={}", p, p))
        } else {
            CheckRecord::fail(
                "agamma-vanishes-mod-p",
                format!("Z/{}, a={}", p, p),
                img.as_module().iso_class(),
            )
        });
    }
    Ok(records)
}

/// Fleet checks for the functor identities: the radical property, the
/// three-way equivalence for `a`-reducedness, the short-exact-sequence
/// cardinality identity, the direct-sum identity, and functoriality under
/// five random homomorphisms per module.
pub fn functor_properties(count: usize, seed: u64) -> Result<Vec<CheckRecord>> {
    let fleet = random_fleet(count, seed);
    let partners = random_fleet(count, seed.wrapping_add(1));
    let mut records = Vec::new();
    for (i, m) in fleet.iter().enumerate() {
        records.push(sweep_scalars("radical-property", m, |a| {
            radical_property_check(m, a)
        })?);
        records.push(sweep_scalars("a-reduced-equivalence", m, |a| {
            prop40_equivalence_check(m, a)
        })?);
        // the cardinality identity needs a finite module; for members with
        // a free part it is checked on the torsion part, which carries all
        // of Γ_a anyway
        let finite = if m.is_finite() {
            m.clone()
        } else {
            torsion_submodule(m).as_module()
        };
        records.push(sweep_scalars("ses-cardinality", &finite, |a| {
            ses_cardinality_check(&finite, a)
        })?);

        let partner = &partners[i];
        let (sum, _, _) = direct_sum(m, partner)?;
        let mut sum_rec = CheckRecord::pass(
            "direct-sum",
            format!("{} (+) {}", instance(m), instance(partner)),
        );
        for a in sum.effective_scalar_range() {
            if !direct_sum_check(m, partner, &a)? {
                sum_rec = CheckRecord::fail(
                    "direct-sum",
                    format!("{} (+) {}", instance(m), instance(partner)),
                    format!("fails at a = {}", a),
                );
                break;
            }
        }
        records.push(sum_rec);

        let mut fun_rec = CheckRecord::pass(
            "functoriality",
            format!("{} -> {}", instance(m), instance(partner)),
        );
        'outer: for h in 0..5u64 {
            let hom = random_hom(m, partner, seed ^ (i as u64) << 3 ^ h)?;
            for a in m.effective_scalar_range() {
                if !functoriality_check(&hom, &a)? {
                    fun_rec = CheckRecord::fail(
                        "functoriality",
                        format!("{} -> {}", instance(m), instance(partner)),
                        format!("hom {} fails at a = {}", h, a),
                    );
                    break 'outer;
                }
            }
        }
        records.push(fun_rec);
    }
    Ok(records)
}

/// Element-level stratifications: the envelope as the union of the
/// `aΓ_a`, the nilradical description of `⋃_a aΓ_a(Z/n)` for n <= 1000,
/// and the torsion submodule as the union of the `Γ_a` on reduced members.
pub fn stratifications(count: usize, seed: u64) -> Result<Vec<CheckRecord>> {
    let fleet = random_fleet(count, seed);
    let mut records = Vec::new();
    for m in &fleet {
        records.push(if envelope_stratification_check(m, ENUM_CAP)? {
            CheckRecord::pass("envelope-stratification", instance(m))
        } else {
            CheckRecord::fail("envelope-stratification", instance(m), "set mismatch")
        });
        if is_reduced(m) {
            records.push(if torsion_stratification_check(m, ENUM_CAP)? {
                CheckRecord::pass("torsion-stratification", instance(m))
            } else {
                CheckRecord::fail("torsion-stratification", instance(m), "set mismatch")
            });
        }
    }
    let mut nil_rec = CheckRecord::pass("nilradical-stratification", "Z/n for n <= 1000");
    for n in 1..=1000u64 {
        if !nilradical_stratification_check(&BigInt::from(n))? {
            nil_rec = CheckRecord::fail(
                "nilradical-stratification",
                "Z/n for n <= 1000",
                format!("fails at n = {}", n),
            );
            break;
        }
    }
    records.push(nil_rec);
    Ok(records)
}

/// Enumerate the finite test family: every cyclic `Z/n` with n <= bound
/// plus every `Z/d1 (+) Z/d2` with `d1*d2 <= bound`.
pub fn small_finite_family(bound: u64) -> Result<Vec<FgModule>> {
    let z = RingDesc::integers();
    let mut out = Vec::new();
    for n in 2..=bound {
        out.push(FgModule::from_invariants(z.clone(), 0, &[BigInt::from(n)])?);
    }
    for d1 in 2..=bound {
        for d2 in 2..=bound {
            if d1 * d2 <= bound {
                out.push(FgModule::from_invariants(
                    z.clone(),
                    0,
                    &[BigInt::from(d1), BigInt::from(d2)],
                )?);
            }
        }
    }
    Ok(out)
}

/// The sum theorem on the fleet, and the radical inclusion chain plus the
/// multiplication-module equality on the exhaustive finite family.
pub fn radical_chain(count: usize, seed: u64, lattice_cap: u64) -> Result<Vec<CheckRecord>> {
    let mut records = Vec::new();
    for m in random_fleet(count, seed) {
        let outcome = sum_theorem_check(&m)?;
        records.push(if outcome.equal {
            CheckRecord::pass("sum-theorem", instance(&m))
        } else {
            CheckRecord::fail(
                "sum-theorem",
                instance(&m),
                format!(
                    "lhs {} vs rhs {}",
                    outcome.lhs.as_module().iso_class(),
                    outcome.rhs.as_module().iso_class()
                ),
            )
        });
    }
    for m in small_finite_family(128)? {
        let lat = enumerate_submodules(&m, lattice_cap)?;
        records.push(sweep_scalars("radical-inclusion-chain", &m, |a| {
            inclusion_chain_check(&lat, a, lattice_cap)
        })?);
        if m.invariants().len() == 1 {
            records.push(if mult_module_check(&m, lattice_cap)? {
                CheckRecord::pass("mult-module-radical", instance(&m))
            } else {
                CheckRecord::fail("mult-module-radical", instance(&m), "radical mismatch")
            });
        }
    }
    Ok(records)
}

/// Agreement of the coefficientwise and direct membership procedures for
/// polynomial rings: exhaustive at small moduli and degree, seeded samples
/// at the larger ones.
pub fn poly_theorem(seed: u64) -> Result<Vec<CheckRecord>> {
    let mut records = Vec::new();
    for n in [4u64, 8, 9, 12] {
        let n = BigInt::from(n);
        let mut rec = CheckRecord::pass(
            "poly-membership-exhaustive",
            format!("Z/{}[x], deg <= 2, all a", n),
        );
        let mut a = BigInt::zero();
        while a < n {
            if !poly_theorem_check(&n, &a, 2, &SweepMode::Exhaustive, SEARCH_CAP)?
                || !gamma_poly_check(&n, &a, 2, &SweepMode::Exhaustive)?
            {
                rec = CheckRecord::fail(
                    "poly-membership-exhaustive",
                    format!("Z/{}[x], deg <= 2, all a", n),
                    format!("disagreement at a = {}", a),
                );
                break;
            }
            a += 1;
        }
        records.push(rec);
    }
    for n in [16u64, 27] {
        let n = BigInt::from(n);
        let mut rec = CheckRecord::pass(
            "poly-membership-sampled",
            format!("Z/{}[x], deg <= 3, all a, 10^4 samples", n),
        );
        let mut a = BigInt::zero();
        while a < n {
            let mode = SweepMode::Sample { count: 10_000, seed };
            if !poly_theorem_check(&n, &a, 3, &mode, SEARCH_CAP * 10)? {
                rec = CheckRecord::fail(
                    "poly-membership-sampled",
                    format!("Z/{}[x], deg <= 3, all a, 10^4 samples", n),
                    format!("disagreement at a = {}", a),
                );
                break;
            }
            a += 1;
        }
        records.push(rec);
    }
    Ok(records)
}

/// Degree-0 cohomology agreement on the `a`-reduced part of the fleet and
/// the two pinned degree-1 comparison reports.
pub fn cohomology_suite(count: usize, seed: u64) -> Result<Vec<CheckRecord>> {
    let mut records = Vec::new();
    for m in random_fleet(count, seed) {
        let mut rec = CheckRecord::pass("cohomology-degree0", instance(&m));
        for a in m.effective_scalar_range() {
            if is_a_reduced(&m, &a) && !tz_check_h0(&m, &a)? {
                rec = CheckRecord::fail(
                    "cohomology-degree0",
                    instance(&m),
                    format!("H^0 vs Ext^0 mismatch at a = {}", a),
                );
                break;
            }
        }
        records.push(rec);
    }
    let z = RingDesc::integers();
    let pins = [
        (FgModule::from_invariants(z.clone(), 0, &[BigInt::from(3)])?, BigInt::from(3)),
        (FgModule::from_invariants(z.clone(), 1, &[])?, BigInt::from(2)),
    ];
    for (m, a) in pins {
        let report = tz_report(&m, &a)?;
        let rendered = serde_json::to_string(&report).expect("report serializes");
        // degree 1 is expected to disagree on both pins; degree 0 to agree
        records.push(if report.degree0_agree && !report.degree1_agree {
            CheckRecord::value("cohomology-report", format!("{}, a={}", instance(&m), a), rendered)
        } else {
            CheckRecord::fail("cohomology-report", format!("{}, a={}", instance(&m), a), rendered)
        });
    }
    Ok(records)
}

/// Smith-normal-form oracle on random matrices: exact reconstruction,
/// unimodular transforms, the divisibility chain, and `d_1` equal to the
/// gcd of the entries.
pub fn snf_fuzz(count: usize, seed: u64) -> Result<Vec<CheckRecord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rec = CheckRecord::pass(
        "snf-oracle",
        format!("{} random matrices <= 6x6, entries in [-100, 100]", count),
    );
    'outer: for i in 0..count {
        let rows = rng.gen_range(1..=6usize);
        let cols = rng.gen_range(1..=6usize);
        let entries: Vec<BigInt> = (0..rows * cols)
            .map(|_| BigInt::from(rng.gen_range(-100i64..=100)))
            .collect();
        let a = IntMatrix::new(rows, cols, entries)?;
        let snf = smith_normal_form(&a);
        let fail = |what: &str, rec: &mut CheckRecord| {
            *rec = CheckRecord::fail(
                "snf-oracle",
                format!("matrix #{} ({}x{})", i, rows, cols),
                what.to_string(),
            );
        };
        if snf.u.mul(&snf.s)?.mul(&snf.v)? != a {
            fail("U*S*V != A", &mut rec);
            break 'outer;
        }
        if snf.u.det()?.abs() != BigInt::one() || snf.v.det()?.abs() != BigInt::one() {
            fail("transform not unimodular", &mut rec);
            break 'outer;
        }
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            // d_i | d_{i+1}, where 0 divides only 0
            let ok = if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].mod_floor(&w[0]).is_zero()
            };
            if !ok {
                fail("divisibility chain broken", &mut rec);
                break 'outer;
            }
        }
        let gcd_entries = (0..rows * cols).fold(BigInt::zero(), |g, k| {
            g.gcd(a.get(k / cols, k % cols))
        });
        let d1 = diag.first().cloned().unwrap_or_else(BigInt::zero);
        if d1 != gcd_entries {
            fail("d_1 != gcd of entries", &mut rec);
            break 'outer;
        }
    }
    Ok(vec![rec])
}

/// All suite names accepted by [`run_suite`].
pub const SUITE_NAMES: &[&str] = &[
    "paper-regressions",
    "functor-properties",
    "stratifications",
    "radical-chain",
    "poly-theorem",
    "cohomology",
    "snf-fuzz",
    "all",
];

/// Run one suite by name. `count` sizes the random fleets (0 keeps only
/// the exhaustive and regression parts) and `lattice_cap` bounds
/// submodule-lattice enumeration.
pub fn run_suite(
    name: &str,
    count: usize,
    seed: u64,
    lattice_cap: u64,
) -> Result<Vec<CheckRecord>> {
    match name {
        "paper-regressions" => paper_regressions(),
        "functor-properties" => functor_properties(count, seed),
        "stratifications" => stratifications(count, seed),
        "radical-chain" => radical_chain(count, seed, lattice_cap),
        "poly-theorem" => poly_theorem(seed),
        "cohomology" => cohomology_suite(count, seed),
        "snf-fuzz" => snf_fuzz(count.max(1), seed),
        "all" => {
            let mut records = Vec::new();
            for suite in SUITE_NAMES.iter().filter(|s| **s != "all") {
                records.extend(run_suite(suite, count, seed, lattice_cap)?);
            }
            Ok(records)
        }
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}
