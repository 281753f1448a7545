//! Jacobi-resolvent index sets I(d), their interval summation criteria, the
//! Bernoulli linkage, and the two ±1 matrices M_p and Delta_p.
//!
//! With u a primitive root mod p, `u_i = u^i mod p` in `1..p-1` and
//! ν = (p−1)/2, the index set of `d in 1..p-2` is
//!
//! ```text
//! I(d) = { i | 1 <= i <= p-1,  u_{ν-i} + u_{ν-i+ind_u(d)} > p }
//! ```
//!
//! Exponents live in `1..p-1` with `u_{p-1} = u_0 = 1`; subscripts reduce
//! mod p − 1. I(d) always has exactly (p−1)/2 members, satisfies
//! I(d) = I(p−1−d), and is characterized by rational intervals: i ∈ I(d)
//! iff `u_i ≡ -j^{-1} (mod p)` for an integer j lying in some
//! `(lp/(d+1), lp/d)` with `1 <= l <= d`. Summing `j^{-μ}` over those
//! intervals gives the summation criteria: a nonzero value certifies the
//! first case of Fermat's Last Theorem for p.

use std::collections::BTreeSet;

use crate::bernoulli::BernoulliTable;
use crate::fp::PrimeContext;
use crate::linalg;
use crate::{Error, Result};

/// One Kummer index set I(d), with the context parameters that defined it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    p: u64,
    root: u64,
    d: u64,
    members: BTreeSet<u64>,
}

impl IndexSet {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Sorted exponents i in 1..p-1.
    pub fn members(&self) -> &BTreeSet<u64> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: u64) -> bool {
        self.members.contains(&i)
    }
}

/// Square matrix with entries in {−1, +1}, dimension (p−1)/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignMatrix {
    p: u64,
    dim: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at (row, col), zero-based; always ±1.
    pub fn entry(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.dim + col]
    }

    /// Rows as residues mod p (−1 becomes p−1).
    pub fn residue_rows(&self) -> Vec<Vec<u64>> {
        (0..self.dim)
            .map(|r| {
                (0..self.dim)
                    .map(|c| if self.entry(r, c) == 1 { 1 } else { self.p - 1 })
                    .collect()
            })
            .collect()
    }

    /// Rank over F_p by Gaussian elimination.
    pub fn rank_mod_p(&self) -> usize {
        linalg::rank_mod(self.residue_rows(), self.p)
    }

    /// Determinant over F_p.
    pub fn det_mod_p(&self) -> u64 {
        linalg::det_mod(self.residue_rows(), self.p)
    }
}

/// I(d) by direct enumeration of the defining inequality.
pub fn index_set(ctx: &PrimeContext, d: u64) -> Result<IndexSet> {
    let p = ctx.p();
    if d < 1 || d > p - 2 {
        return Err(Error::invalid(format!("index_set: d={d} outside 1..=p-2")));
    }
    let nu = ctx.half() as i64;
    let shift = ctx.index_of(d) as i64;
    let members: BTreeSet<u64> = (1..p)
        .filter(|&i| {
            let r1 = ctx.upower(nu - i as i64);
            let r2 = ctx.upower(nu - i as i64 + shift);
            r1 + r2 > p
        })
        .collect();
    Ok(IndexSet {
        p,
        root: ctx.root(),
        d,
        members,
    })
}

/// Does some `l in 1..=d` satisfy `lp < j(d+1)` and `jd < lp`?
///
/// The open interval (jd/p, j(d+1)/p) has length j/p < 1, so at most one
/// integer can lie inside; boundaries are never integers because
/// gcd(p, d) = gcd(p, d+1) = 1.
#[inline]
fn in_interval_family(p: u64, d: u64, j: u64) -> bool {
    let l = j * (d + 1) / p; // floor; the candidate
    l >= 1 && l * p > j * d && l * p != j * (d + 1)
}

/// The same set I(k), computed through the interval characterization:
/// i with `u_i ≡ -j^{-1} (mod p)` for j in some `(lp/(k+1), lp/k)`.
pub fn index_set_by_intervals(ctx: &PrimeContext, k: u64) -> Result<IndexSet> {
    let p = ctx.p();
    if k < 1 || k > p - 2 {
        return Err(Error::invalid(format!(
            "index_set_by_intervals: k={k} outside 1..=p-2"
        )));
    }
    let mut members = BTreeSet::new();
    for j in 1..p {
        if !in_interval_family(p, k, j) {
            continue;
        }
        let a = ctx.neg(ctx.inverse(j));
        let e = ctx.index_of(a);
        members.insert(if e == 0 { p - 1 } else { e });
    }
    Ok(IndexSet {
        p,
        root: ctx.root(),
        d: k,
        members,
    })
}

/// Summation criterion `sum j^{-μ}` over j in the d-interval family.
///
/// A nonzero value certifies the first case of Fermat's Last Theorem for p.
pub fn criterion_sum(ctx: &PrimeContext, d: u64, mu: u64) -> Result<u64> {
    let p = ctx.p();
    if d < 1 || d > p - 2 {
        return Err(Error::invalid(format!("criterion_sum: d={d} outside 1..=p-2")));
    }
    if mu % 2 == 0 || mu < 3 || mu > p - 2 {
        return Err(Error::invalid(format!(
            "criterion_sum: exponent {mu} must be odd in 3..=p-2"
        )));
    }
    let mut sum = 0u64;
    for j in 1..p {
        if in_interval_family(p, d, j) {
            sum = ctx.add(sum, ctx.pow(ctx.inverse(j), mu));
        }
    }
    Ok(sum)
}

/// `sum j^{-μ}` over j lying simultaneously in a d1-interval and a
/// d2-interval (the doubled criterion family).
pub fn double_criterion_sum(ctx: &PrimeContext, d1: u64, d2: u64, mu: u64) -> Result<u64> {
    let p = ctx.p();
    if d1 >= d2 {
        return Err(Error::invalid(format!(
            "double_criterion_sum: need d1 < d2, got {d1} >= {d2}"
        )));
    }
    if d1 < 1 || d2 > p - 2 {
        return Err(Error::invalid(format!(
            "double_criterion_sum: ({d1}, {d2}) outside 1..=p-2"
        )));
    }
    if mu % 2 == 0 || mu < 3 || mu > p - 2 {
        return Err(Error::invalid(format!(
            "double_criterion_sum: exponent {mu} must be odd in 3..=p-2"
        )));
    }
    let mut sum = 0u64;
    for j in 1..p {
        if in_interval_family(p, d1, j) && in_interval_family(p, d2, j) {
            sum = ctx.add(sum, ctx.pow(ctx.inverse(j), mu));
        }
    }
    Ok(sum)
}

/// Residual of the Bernoulli linkage
/// `criterion_sum(d, 2m+1) ≡ [d(d^{2m}-1) - (d+1)((d+1)^{2m}-1)] / (p-1-2m) · B_{p-1-2m}`;
/// expected 0 (any systematic nonzero residual would be a sign-convention
/// finding and fails the build).
pub fn bernoulli_link_residual_with(
    ctx: &PrimeContext,
    table: &BernoulliTable,
    d: u64,
    m: u64,
) -> Result<u64> {
    let p = ctx.p();
    if table.p() != p {
        return Err(Error::invalid("bernoulli_link_residual: table modulus mismatch"));
    }
    if m < 1 || 2 * m > p - 3 {
        return Err(Error::invalid(format!(
            "bernoulli_link_residual: m={m} outside 1..=(p-3)/2"
        )));
    }
    let lhs = criterion_sum(ctx, d, 2 * m + 1)?;
    let b = table
        .get(p - 1 - 2 * m)
        .expect("index p-1-2m is in the table range");
    let term = |x: u64| ctx.mul(x, ctx.sub(ctx.pow(x, 2 * m), 1));
    let coeff = ctx.sub(term(d), term(d + 1));
    let rhs = ctx.mul(ctx.mul(coeff, ctx.inverse(p - 1 - 2 * m)), b);
    Ok(ctx.sub(lhs, rhs))
}

/// Convenience form of [`bernoulli_link_residual_with`] that builds the
/// Bernoulli table itself; sweeps should build the table once instead.
pub fn bernoulli_link_residual(ctx: &PrimeContext, d: u64, m: u64) -> Result<u64> {
    let table = crate::bernoulli::bernoulli_even_mod_p(ctx)?;
    bernoulli_link_residual_with(ctx, &table, d, m)
}

/// The ±1 matrix M_p: rows d = 1..ν, columns i = 1..ν, with entry +1
/// exactly when `u_{ν-i} + (d·u_{ν-i} mod p) > p`.
///
/// The complementary condition through `u_{-i} = p - u_{ν-i}` is asserted
/// during construction: exactly one of the two defining inequalities holds
/// for every entry.
pub fn mp_matrix(ctx: &PrimeContext) -> SignMatrix {
    let p = ctx.p();
    let nu = ctx.half() as i64;
    let dim = ctx.half() as usize;
    let mut entries = Vec::with_capacity(dim * dim);
    for d in 1..=dim as u64 {
        for i in 1..=dim as i64 {
            let r = ctx.upower(nu - i);
            let s = ctx.mul(d, r);
            let plus = r + s > p;
            // Well-definedness: the mirrored condition via u_{-i} must be
            // the exact complement.
            let r2 = ctx.upower(-i);
            let s2 = ctx.mul(d, r2);
            assert_eq!(r2, p - r);
            assert_ne!(plus, r2 + s2 > p, "sign conditions must be complementary");
            entries.push(if plus { 1 } else { -1 });
        }
    }
    SignMatrix { p, dim, entries }
}

/// p-rank k_p of M_p over F_p.
pub fn mp_rank(ctx: &PrimeContext) -> u64 {
    mp_matrix(ctx).rank_mod_p() as u64
}

/// The ±1 matrix Delta_p: rows d = 1..ν, columns j = 1..ν, with entry +1
/// exactly when some l makes `lp/(d+1) < j < lp/d`.
pub fn deltap_matrix(ctx: &PrimeContext) -> Result<SignMatrix> {
    let p = ctx.p();
    if p < 7 {
        return Err(Error::invalid(format!("deltap_matrix: need p >= 7, got {p}")));
    }
    let dim = ctx.half() as usize;
    let mut entries = Vec::with_capacity(dim * dim);
    for d in 1..=dim as u64 {
        for j in 1..=dim as u64 {
            entries.push(if in_interval_family(p, d, j) { 1 } else { -1 });
        }
    }
    Ok(SignMatrix { p, dim, entries })
}

/// Determinant of Delta_p over F_p.
pub fn deltap_det_mod_p(ctx: &PrimeContext) -> Result<u64> {
    Ok(deltap_matrix(ctx)?.det_mod_p())
}

/// Rank of Delta_p over F_p. Bounded by (p−1)/2 − i_p: every minor of
/// order (p+1)/2 − i_p and above is divisible by p.
pub fn deltap_rank(ctx: &PrimeContext) -> Result<usize> {
    Ok(deltap_matrix(ctx)?.rank_mod_p())
}
