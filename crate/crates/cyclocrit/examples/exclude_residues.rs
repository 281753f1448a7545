//! Per-residue exclusion sweep: for every t in 2..p-2 the congruence
//! battery on a hypothetical first-case residue t ≡ -x/y (mod p) must show
//! at least one nonzero value, and the first such entry is printed.
//!
//! ```bash
//! cargo run --example exclude_residues -- 19
//! ```

use cyclocrit::battery::t_battery;
use cyclocrit::PrimeContext;

fn main() {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(19);
    let ctx = PrimeContext::new(p).expect("odd prime >= 7");

    println!("excluding hypothetical first-case residues mod {p}:");
    for t in 2..=p - 2 {
        let reports = t_battery(&ctx, t).expect("battery runs");
        let excluding = reports.iter().find(|r| r.holds());
        match excluding {
            Some(r) => {
                let params: Vec<String> =
                    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!(
                    "  t={t:>3} excluded by {} {} (value {})",
                    r.criterion,
                    params.join(" "),
                    r.value
                );
            }
            None => println!("  t={t:>3} NOT excluded (no nonzero entry)"),
        }
        assert!(excluding.is_some(), "t={t} must be excluded");
    }
    println!("all {} residues excluded.", p - 3);
}
