//! Property-based invariants: the Smith-normal-form contract on arbitrary
//! small matrices, kernel/cokernel consistency, and parser round-trips.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use locnil::matrix::{hnf_contains, hermite_normal_form, smith_normal_form, IntMatrix};
use locnil::parse::{parse_module, parse_poly, render_module};
use locnil::ring::RingDesc;

fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-50i64..=50, r * c)
            .prop_map(move |entries| IntMatrix::from_i64(r, c, &entries).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_contract(a in matrix_strategy()) {
        let snf = smith_normal_form(&a);
        // exact reconstruction
        prop_assert_eq!(snf.u.mul(&snf.s).unwrap().mul(&snf.v).unwrap(), a.clone());
        // unimodular transforms with exact tracked inverses
        prop_assert_eq!(snf.u.det().unwrap().abs(), BigInt::one());
        prop_assert_eq!(snf.v.det().unwrap().abs(), BigInt::one());
        prop_assert_eq!(snf.u.mul(&snf.u_inv).unwrap(), IntMatrix::identity(a.rows()));
        prop_assert_eq!(snf.v.mul(&snf.v_inv).unwrap(), IntMatrix::identity(a.cols()));
        // nonnegative divisibility chain with d_1 = gcd of entries
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].mod_floor(&w[0]).is_zero());
            }
        }
        let gcd = (0..a.rows())
            .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
            .fold(BigInt::zero(), |g, (i, j)| g.gcd(a.get(i, j)));
        prop_assert_eq!(diag.first().cloned().unwrap_or_else(BigInt::zero), gcd);
        // off-diagonal entries of S vanish
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    prop_assert!(snf.s.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn hnf_spans_the_same_lattice(a in matrix_strategy()) {
        let h = hermite_normal_form(&a);
        // every row of A lies in the HNF lattice and vice versa (the HNF of
        // the stacked matrix is unchanged)
        for i in 0..a.rows() {
            prop_assert!(hnf_contains(&h, &a.row(i)));
        }
        prop_assert_eq!(hermite_normal_form(&a.vstack(&h).unwrap()), h);
    }

    #[test]
    fn module_parse_render_round_trip(
        free in 0usize..=3,
        torsion in proptest::collection::vec(2i64..=60, 0..=3),
    ) {
        let text = {
            let mut parts: Vec<String> = Vec::new();
            if free > 0 {
                parts.push(format!("Z^{}", free));
            }
            parts.extend(torsion.iter().map(|d| format!("Z/{}", d)));
            if parts.is_empty() { "0".to_string() } else { parts.join(" + ") }
        };
        let ring = RingDesc::integers();
        let m = parse_module(&ring, &text).unwrap();
        let rendered = render_module(&m);
        // canonical form is a fixed point of parse . render
        prop_assert_eq!(render_module(&parse_module(&ring, &rendered).unwrap()), rendered);
        // invariants form a divisibility chain of entries >= 2
        for w in m.invariants().windows(2) {
            prop_assert!(w[1].mod_floor(&w[0]).is_zero());
        }
        for d in m.invariants() {
            prop_assert!(d >= &BigInt::from(2));
        }
    }

    #[test]
    fn poly_parse_display_round_trip(
        n in 2u64..=30,
        coeffs in proptest::collection::vec(0i64..=100, 0..=4),
    ) {
        let n = BigInt::from(n);
        let text = if coeffs.is_empty() {
            "0".to_string()
        } else {
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| match i {
                    0 => c.to_string(),
                    1 => format!("{}*x", c),
                    _ => format!("{}*x^{}", c, i),
                })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        let f = parse_poly(&n, &text).unwrap();
        prop_assert_eq!(parse_poly(&n, &f.to_string()).unwrap(), f);
    }
}
