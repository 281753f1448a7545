//! Bernoulli numbers mod p with the irregular indices, cross-checked
//! through the Vandiver power-sum route.
//!
//! ```bash
//! cargo run --example bernoulli_irregular -- 157
//! ```

use cyclocrit::bernoulli::{bernoulli_even_mod_p, bernoulli_via_vandiver};
use cyclocrit::PrimeContext;

fn main() {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(37);
    let ctx = PrimeContext::new(p).expect("odd prime >= 7");
    let table = bernoulli_even_mod_p(&ctx).expect("p >= 7");

    println!("even Bernoulli numbers mod {p} (B_2 .. B_{}):", p - 3);
    for (index, value) in table.entries() {
        let (d, via_sums) = bernoulli_via_vandiver(&ctx, (p - 1 - index) / 2).unwrap();
        assert_eq!(value, via_sums, "recurrence and power sums must agree");
        let marker = if value == 0 { "  <- irregular" } else { "" };
        println!("  B_{index:<4} = {value:<10} (power-sum route, d={d}: {via_sums}){marker}");
    }
    println!(
        "index of irregularity i_{p} = {} {:?}",
        table.irregularity_index(),
        table.irregular_indices()
    );
}
