//! Run the complete fixture suite (the same checks as
//! `cyclocrit verify-paper`): h⁻ values, the k_p rank table, Delta_p
//! determinants, subfield gcds, the conjecture range, and irregular pairs.
//!
//! ```bash
//! cargo run --example verify_tables
//! ```

fn main() {
    let code = cyclocrit::cli::run(vec!["cyclocrit".into(), "verify-paper".into()]);
    std::process::exit(code);
}
