//! The interval sign matrix Delta_p: entry (d, j) is +1 exactly when some l
//! puts j strictly between lp/(d+1) and lp/d. Prints the matrix with its
//! determinant and rank mod p, and checks the rank bound (p-1)/2 - i_p.
//!
//! ```bash
//! cargo run --example delta_matrix -- 17
//! ```

use cyclocrit::bernoulli::irregular_index;
use cyclocrit::kummer::{deltap_det_mod_p, deltap_matrix, deltap_rank};
use cyclocrit::PrimeContext;

fn main() {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(17);
    let ctx = PrimeContext::new(p).expect("odd prime >= 7");
    let m = deltap_matrix(&ctx).expect("p >= 7");

    println!("Delta_{p} ({dim} x {dim}):", dim = m.dim());
    for r in 0..m.dim() {
        let row: Vec<String> = (0..m.dim())
            .map(|c| format!("{:>2}", m.entry(r, c)))
            .collect();
        println!("  [{}]", row.join(" "));
    }
    let det = deltap_det_mod_p(&ctx).unwrap();
    let rank = deltap_rank(&ctx).unwrap();
    let bound = ctx.half() - irregular_index(&ctx).unwrap();
    println!("det(Delta_{p}) = {det} (mod {p})");
    println!("rank over F_{p} = {rank}, bound (p-1)/2 - i_p = {bound}");
    assert!(rank as u64 <= bound);
}
