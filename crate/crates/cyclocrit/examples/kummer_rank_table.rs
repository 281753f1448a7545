//! The p-rank k_p of the Kummer sign matrix M_p over a range of primes,
//! next to the index of irregularity: k_p = (p-1)/2 - i_p, so a rank
//! deficit flags exactly the irregular primes.
//!
//! ```bash
//! cargo run --example kummer_rank_table -- 3 199
//! ```

use cyclocrit::bernoulli::irregular_index;
use cyclocrit::fp::is_prime;
use cyclocrit::kummer::mp_rank;
use cyclocrit::PrimeContext;

fn main() {
    let mut args = std::env::args().skip(1);
    let lo: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let hi: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(101);

    println!("{:>5} {:>6} {:>10} {:>5}", "p", "k_p", "(p-1)/2", "i_p");
    for p in (lo..=hi).filter(|&p| is_prime(p) && p % 2 == 1) {
        let ctx = PrimeContext::new(p).unwrap();
        let k = mp_rank(&ctx);
        let i_p = if p >= 7 {
            irregular_index(&ctx).unwrap()
        } else {
            0
        };
        assert_eq!(k, ctx.half() - i_p, "rank law at p={p}");
        let marker = if i_p > 0 { "  <- irregular" } else { "" };
        println!("{p:>5} {k:>6} {:>10} {i_p:>5}{marker}", ctx.half());
    }
}
