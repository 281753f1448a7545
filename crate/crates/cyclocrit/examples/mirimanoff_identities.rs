//! Pointwise identities of the Mirimanoff polynomials
//! phi_m(T) = sum i^(m-1) T^i: the symmetric-sum collapses, the twisted
//! power sums, the Fermat-quotient form of phi_{p-1}, and the Kummer
//! polynomial relation for m <= 3.
//!
//! ```bash
//! cargo run --example mirimanoff_identities -- 31
//! ```

use cyclocrit::fp::pow_mod;
use cyclocrit::fppoly::{
    kummer_relation_residual, mirimanoff_eval, symmetric_sum_residuals, twisted_sum_residual,
};
use cyclocrit::PrimeContext;

fn main() {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(31);
    let ctx = PrimeContext::new(p).expect("odd prime >= 7");

    for t in 0..p {
        assert_eq!(symmetric_sum_residuals(&ctx, t), (0, 0), "t={t}");
    }
    println!("sum_m phi_m(t) phi_(p-m)(t) = -phi_(p-1)(t^2) holds at every t mod {p}");

    for k in 1..p {
        for t in 0..p {
            assert_eq!(twisted_sum_residual(&ctx, k, t).unwrap(), 0, "k={k} t={t}");
        }
    }
    println!("sum_j j^(p-2) t^(kj mod p) = k phi_(p-1)(t) holds for every k, t");

    for t in 2..=p - 2 {
        for m in 1..=3 {
            if 2 * m + 1 < p - 1 {
                assert_eq!(kummer_relation_residual(&ctx, m, t).unwrap(), 0);
            }
        }
        // phi_{p-1}(t) equals the Fermat-quotient form (1 - t^p - (1-t)^p)/p.
        let p2 = p * p;
        let a = pow_mod(t as i64, p, p2).unwrap();
        let b = pow_mod((p + 1 - t) as i64, p, p2).unwrap();
        let quotient = (((1 + 2 * p2) - a - b) % p2) / p;
        assert_eq!(mirimanoff_eval(&ctx, p - 1, t).unwrap(), quotient % p);
    }
    println!("phi_(2m+1)(t) = -(1-t)^(p-1-2m) P_(2m+1)(-t) holds for m <= 3, all t");
    println!("phi_(p-1)(t) matches its Fermat-quotient closed form at every t");
}
