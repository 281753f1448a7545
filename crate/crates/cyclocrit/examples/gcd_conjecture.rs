//! Common-root sweep of the exponential determinants Delta_l(t) built from
//! the shifted families g_i = i^{-1}, k_j = j + l with f = ⌊p/3⌋: the only
//! residues on which every determinant vanishes are t = 1 and t = p - 1.
//!
//! ```bash
//! cargo run --example gcd_conjecture -- 17 67
//! ```

use cyclocrit::battery::gcd_conjecture_roots;
use cyclocrit::fp::is_prime;
use cyclocrit::PrimeContext;

fn main() {
    let mut args = std::env::args().skip(1);
    let lo: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(17);
    let hi: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(67);

    for p in (lo.max(17)..=hi).filter(|&p| is_prime(p)) {
        let ctx = PrimeContext::new(p).unwrap();
        let roots = gcd_conjecture_roots(&ctx).unwrap();
        let ok = roots.len() == 2;
        println!(
            "p={p:>3}: common zero set {:?} {}",
            roots,
            if ok { "= {1, p-1}" } else { "UNEXPECTED" }
        );
        assert!(ok);
    }
}
