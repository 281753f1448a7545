//! Kummer index sets I(d): the defining inequality, the rational-interval
//! characterization, and the summation criteria they generate.
//!
//! ```bash
//! cargo run --example index_sets -- 13
//! ```

use cyclocrit::kummer::{criterion_sum, index_set, index_set_by_intervals};
use cyclocrit::PrimeContext;

fn main() {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(13);
    let ctx = PrimeContext::new(p).expect("odd prime >= 5");
    println!("p = {p}, primitive root u = {}", ctx.root());

    for d in 1..=p - 2 {
        let direct = index_set(&ctx, d).unwrap();
        let via_intervals = index_set_by_intervals(&ctx, d).unwrap();
        assert_eq!(direct.members(), via_intervals.members());
        assert_eq!(direct.members(), index_set(&ctx, p - 1 - d).unwrap().members());
        let sums: Vec<String> = [3u64, 5, 7]
            .iter()
            .filter(|&&mu| mu <= p - 2)
            .map(|&mu| format!("S_{mu}={}", criterion_sum(&ctx, d, mu).unwrap()))
            .collect();
        println!(
            "I({d:>2}) = {:?}  |I|={}  {}",
            direct.members(),
            direct.len(),
            sums.join(" ")
        );
    }
    println!("every I(d) has exactly (p-1)/2 = {} members;", ctx.half());
    println!("a nonzero S_mu certifies the first case of Fermat's Last Theorem for {p}.");
}
