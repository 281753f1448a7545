//! Property tests over randomized inputs: group laws of the prime context,
//! the logarithm property of Fermat quotients, polynomial gcd structure,
//! factorization round trips, and determinant symmetries.

use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

use cyclocrit::battery::{exp_det, vieta_weights, ExpDetSpec};
use cyclocrit::classnum::{bareiss_det, exact_det, factor, IntMatrix};
use cyclocrit::fp::{fermat_quotient, is_prime, mult_order, pow_mod, PrimeContext};
use cyclocrit::fppoly::{poly_gcd, roots_in_units, FpPoly};

fn arbitrary_prime(lo: u64, hi: u64) -> impl Strategy<Value = u64> {
    let pool: Vec<u64> = (lo..=hi).filter(|&p| is_prime(p) && p % 2 == 1).collect();
    proptest::sample::select(pool)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fermat_little_theorem(p in arbitrary_prime(3, 1000), a in 1u64..1000) {
        let a = a % p;
        prop_assume!(a != 0);
        prop_assert_eq!(pow_mod(a as i64, p - 1, p).unwrap(), 1);
    }

    #[test]
    fn power_table_is_a_bijection(p in arbitrary_prime(3, 1000)) {
        let ctx = PrimeContext::new(p).unwrap();
        let mut seen = vec![false; p as usize];
        for i in 0..p - 1 {
            let v = ctx.upower(i as i64);
            prop_assert!(!seen[v as usize]);
            seen[v as usize] = true;
        }
    }

    #[test]
    fn fermat_quotient_is_a_logarithm(
        p in arbitrary_prime(5, 2000),
        q1 in 2u64..10_000,
        q2 in 2u64..10_000,
    ) {
        prop_assume!(q1 % p != 0 && q2 % p != 0);
        let lhs = fermat_quotient(q1 * q2, p).unwrap();
        let sum = (fermat_quotient(q1, p).unwrap() + fermat_quotient(q2, p).unwrap()) % p;
        prop_assert_eq!(lhs, sum);
    }

    #[test]
    fn mult_order_divides_p_minus_1(p in arbitrary_prime(3, 500), a in 1u64..500) {
        let a = a % p;
        prop_assume!(a != 0);
        prop_assert_eq!((p - 1) % mult_order(a, p).unwrap(), 0);
    }

    #[test]
    fn poly_gcd_divides_both_inputs(
        p in arbitrary_prime(3, 100),
        a in proptest::collection::vec(0u64..100, 1..8),
        b in proptest::collection::vec(0u64..100, 1..8),
    ) {
        let a = FpPoly::new(p, a);
        let b = FpPoly::new(p, b);
        let g = poly_gcd(&a, &b).unwrap();
        prop_assume!(!g.is_zero());
        prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn poly_roots_match_evaluation(
        p in arbitrary_prime(3, 60),
        coeffs in proptest::collection::vec(0u64..60, 1..6),
    ) {
        let a = FpPoly::new(p, coeffs);
        prop_assume!(!a.is_zero());
        let roots = roots_in_units(&a).unwrap();
        for t in 1..p {
            prop_assert_eq!(roots.contains(&t), a.eval(t) == 0);
        }
    }

    #[test]
    fn factor_output_remultiplies(parts in proptest::collection::vec(2u64..1 << 32, 1..5)) {
        // Build n as a product of arbitrary (not necessarily prime) parts,
        // up to 128 bits; the factorization must multiply back exactly.
        let n: BigInt = parts.iter().map(|&x| BigInt::from(x)).product();
        let factors = factor(&n).unwrap();
        let product: BigInt = factors.iter().map(|(q, e)| q.pow(*e)).product();
        prop_assert_eq!(product, n);
    }

    #[test]
    fn exact_det_transposition_negates(
        entries in proptest::collection::vec(-50i64..50, 16),
        swap in 0usize..3,
    ) {
        let m = IntMatrix::new(4, entries.clone());
        let mut swapped = entries;
        for c in 0..4 {
            swapped.swap(swap * 4 + c, (swap + 1) * 4 + c);
        }
        let m2 = IntMatrix::new(4, swapped);
        prop_assert_eq!(exact_det(&m), -exact_det(&m2));
    }

    #[test]
    fn bareiss_matches_crt(entries in proptest::collection::vec(-100i64..100, 36)) {
        let m = IntMatrix::new(6, entries);
        prop_assert_eq!(exact_det(&m), bareiss_det(&m));
    }

    #[test]
    fn vieta_identity_randomized(
        p in arbitrary_prime(11, 199),
        picks in proptest::collection::btree_set(1u64..198, 1..6),
    ) {
        let ctx = PrimeContext::new(p).unwrap();
        let mus: Vec<u64> = picks.into_iter().map(|x| x % (p - 1) + 1).collect();
        let mut dedup = mus.clone();
        dedup.sort_unstable();
        dedup.dedup();
        prop_assume!(dedup.len() == mus.len());
        let weights = vieta_weights(&ctx, &mus).unwrap();
        prop_assert_eq!(*weights.last().unwrap(), 1u64);
        for s in 0..(p - 1) as i64 {
            let x = ctx.upower(s);
            let lhs = weights.iter().enumerate().fold(0u64, |acc, (idx, &l)| {
                ctx.add(acc, ctx.mul(l, ctx.upower((idx as i64 + 1) * s)))
            });
            let rhs = mus.iter().fold(x, |acc, &mu| ctx.mul(acc, ctx.sub(x, mu)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exp_det_row_permutation_changes_sign_only(
        p in arbitrary_prime(11, 61),
        t in 2u64..60,
        i in 0usize..4,
        j in 0usize..4,
    ) {
        let ctx = PrimeContext::new(p).unwrap();
        let t = t % (p - 3) + 2;
        let g: Vec<u64> = (1..=4).collect();
        let k: Vec<u64> = (2..=5).collect();
        let base = ExpDetSpec::new(&ctx, g.clone(), k.clone()).unwrap();
        let mut g2 = g;
        g2.swap(i, j);
        let permuted = ExpDetSpec::new(&ctx, g2, k).unwrap();
        let a = exp_det(&ctx, &base, t).unwrap();
        let b = exp_det(&ctx, &permuted, t).unwrap();
        if i == j {
            prop_assert_eq!(a, b);
        } else {
            prop_assert_eq!(a, ctx.neg(b));
        }
    }
}

#[test]
fn factor_handles_one() {
    assert_eq!(factor(&BigInt::one()).unwrap(), vec![]);
}
