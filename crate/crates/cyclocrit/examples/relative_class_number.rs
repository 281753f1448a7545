//! The relative class number h⁻ by three independent determinants, with its
//! prime factorization.
//!
//! ```bash
//! cargo run --example relative_class_number -- 97
//! ```

use cyclocrit::classnum::{factor, hminus_maillet, hminus_masley, hminus_new};
use cyclocrit::PrimeContext;

fn main() {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(37);
    let ctx = PrimeContext::new(p).expect("odd prime >= 7");

    let new = hminus_new(&ctx).expect("sign-matrix route");
    let maillet = hminus_maillet(&ctx).expect("Maillet route");
    let masley = hminus_masley(&ctx).expect("Masley route");
    println!("h-(Q(zeta_{p})) by three determinant formulas:");
    println!("  +-1 sign matrix / 2^((p-3)/2): {new}");
    println!("  Maillet        / p^((p-3)/2): {maillet}");
    println!("  Masley floor-difference:      {masley}");
    assert!(new == maillet && new == masley, "routes must agree");

    let factors = factor(&new).expect("factorable");
    let rendered: Vec<String> = factors
        .iter()
        .map(|(q, e)| {
            if *e == 1 {
                q.to_string()
            } else {
                format!("{q}^{e}")
            }
        })
        .collect();
    println!("  factored: {}", rendered.join(" * "));
}
