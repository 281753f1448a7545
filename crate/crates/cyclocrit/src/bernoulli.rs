//! Even Bernoulli numbers modulo p and the irregularity data they carry.
//!
//! `B_{2k} mod p` for `2 <= 2k <= p-3` comes from the classical recurrence
//! `sum_{j=0}^{n} C(n+1, j) B_j = 0` with `B_0 = 1`, `B_1 = -1/2`; every
//! division is by `n + 1 <= p - 2`, hence invertible. An even index `2k`
//! with `B_{2k} ≡ 0` is an irregular index; the count of those is the index
//! of irregularity i_p, zero exactly for regular primes.
//!
//! [`vandiver_bernoulli_rhs`] computes the same values through Vandiver's
//! power-sum congruence
//! `(1 - d^{-2m}) B_{p-1-2m} ≡ (p-1-2m) d^{-2m-1} sum_{l<d} sum_{j<lp/d} j^{-(2m+1)}`,
//! a genuinely different algorithm used as the cross-checking oracle.

use crate::fp::PrimeContext;
use crate::{Error, Result};

/// Table of `B_{2k} mod p` for `2 <= 2k <= p-3`, with its irregular indices.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    p: u64,
    even: Vec<u64>,
    irregular: Vec<u64>,
}

impl BernoulliTable {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Number of stored values, (p − 3)/2.
    pub fn len(&self) -> usize {
        self.even.len()
    }

    pub fn is_empty(&self) -> bool {
        self.even.is_empty()
    }

    /// B_{2k} mod p for an even index `2 <= 2k <= p-3`.
    pub fn get(&self, even_index: u64) -> Option<u64> {
        if even_index < 2 || even_index % 2 != 0 || even_index > self.p - 3 {
            return None;
        }
        Some(self.even[(even_index / 2 - 1) as usize])
    }

    /// (2k, B_{2k}) pairs in increasing index order.
    pub fn entries(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.even
            .iter()
            .enumerate()
            .map(|(i, &b)| ((i as u64 + 1) * 2, b))
    }

    /// Sorted even indices 2k with B_{2k} ≡ 0 (mod p).
    pub fn irregular_indices(&self) -> &[u64] {
        &self.irregular
    }

    /// The index of irregularity i_p.
    pub fn irregularity_index(&self) -> u64 {
        self.irregular.len() as u64
    }
}

/// All even Bernoulli numbers mod p up to index p − 3, by the recurrence.
pub fn bernoulli_even_mod_p(ctx: &PrimeContext) -> Result<BernoulliTable> {
    let p = ctx.p();
    if p < 7 {
        return Err(Error::invalid(format!(
            "bernoulli_even_mod_p: need p >= 7, got {p}"
        )));
    }
    let top = (p - 3) as usize; // highest index computed
    let mut b = vec![0u64; top + 1];
    b[0] = 1;
    b[1] = p - ctx.inverse(2); // -1/2; does not affect even values

    // Pascal row, kept at level n+1 while computing B_n.
    // Start at level 2 = (n=1)+1 and grow in place.
    let mut row: Vec<u64> = vec![1, 2, 1];
    for n in 2..=top {
        // Grow row from level n to n+1.
        row.push(1);
        for j in (1..row.len() - 1).rev() {
            row[j] = ctx.add(row[j], row[j - 1]);
        }
        let mut sum = 0u64;
        for j in 0..n {
            if b[j] != 0 {
                sum = ctx.add(sum, ctx.mul(row[j], b[j]));
            }
        }
        b[n] = ctx.mul(ctx.neg(sum), ctx.inverse(n as u64 + 1));
        if n % 2 == 1 {
            debug_assert_eq!(b[n], 0, "odd Bernoulli index {n} must vanish");
        }
    }

    let even: Vec<u64> = (1..=top / 2).map(|k| b[2 * k]).collect();
    let irregular: Vec<u64> = even
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v == 0)
        .map(|(i, _)| (i as u64 + 1) * 2)
        .collect();
    Ok(BernoulliTable { p, even, irregular })
}

/// Right-hand side of Vandiver's identity:
/// `(p-1-2m) · d^{-(2m+1)} · sum_{l=1}^{d-1} sum_{1<=j<lp/d} j^{-(2m+1)}`.
///
/// Equals `(1 - d^{-2m}) B_{p-1-2m}` mod p. The caller picks d so that the
/// factor `1 - d^{-2m}` does not vanish (it vanishes iff ord(d) | 2m).
pub fn vandiver_bernoulli_rhs(ctx: &PrimeContext, d: u64, m: u64) -> Result<u64> {
    let p = ctx.p();
    if !(2..=p - 2).contains(&d) {
        return Err(Error::invalid(format!(
            "vandiver_bernoulli_rhs: d={d} outside 2..=p-2"
        )));
    }
    if m < 1 || 2 * m > p - 3 {
        return Err(Error::invalid(format!(
            "vandiver_bernoulli_rhs: m={m} outside 1..=(p-3)/2"
        )));
    }
    let mu = 2 * m + 1;
    let mut sum = 0u64;
    for l in 1..d {
        // j < lp/d, strict; lp/d is never an integer since gcd(p, d) = 1.
        let j_max = (l * p - 1) / d;
        for j in 1..=j_max {
            sum = ctx.add(sum, ctx.pow(ctx.inverse(j), mu));
        }
    }
    let coeff = ctx.mul(p - 1 - 2 * m, ctx.pow(ctx.inverse(d), mu));
    Ok(ctx.mul(coeff, sum))
}

/// The index of irregularity i_p.
pub fn irregular_index(ctx: &PrimeContext) -> Result<u64> {
    Ok(bernoulli_even_mod_p(ctx)?.irregularity_index())
}

/// Recover B_{p-1-2m} from the Vandiver identity using the smallest
/// admissible d >= 2, preferring d in {2, 3}.
///
/// Returns (d used, value). For most (p, m) one of d = 2, 3 works; when
/// ord(2) and ord(3) both divide 2m (first at p = 73, m = 18) the factor
/// vanishes for both and a larger d is selected.
pub fn bernoulli_via_vandiver(ctx: &PrimeContext, m: u64) -> Result<(u64, u64)> {
    let p = ctx.p();
    let two_m = 2 * m;
    let factor = |d: u64| ctx.sub(1, ctx.pow(ctx.inverse(d), two_m));
    let d = (2..=p - 2)
        .find(|&d| factor(d) != 0)
        .ok_or_else(|| Error::inconsistent(format!("no admissible d for p={p}, m={m}")))?;
    let rhs = vandiver_bernoulli_rhs(ctx, d, m)?;
    Ok((d, ctx.mul(rhs, ctx.inverse(factor(d)))))
}
