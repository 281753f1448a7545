//! Dense polynomials over F_p and the Mirimanoff/Kummer congruence kit.
//!
//! The Mirimanoff polynomial of index m is
//! `phi_m(T) = sum_{i=1}^{p-1} i^(m-1) T^i`.
//! Its values at a hypothetical first-case Fermat residue t ≡ −x/y (mod p)
//! must vanish in prescribed patterns, which is what the batteries in
//! [`crate::battery`] sweep. Evaluation is pointwise Horner — batteries
//! sweep all (m, t), so nothing materializes degree-(p−1) polynomials
//! unless an [`FpPoly`] is explicitly requested.

use std::collections::BTreeSet;

use crate::fp::{mul_mod, pow_mod_raw, PrimeContext};
use crate::{Error, Result};

/// Dense polynomial over F_p; index = exponent, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Build from coefficients (index = exponent), reducing mod p.
    pub fn new(p: u64, coeffs: Vec<u64>) -> FpPoly {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_signed(p: u64, coeffs: &[i64]) -> FpPoly {
        FpPoly::new(
            p,
            coeffs
                .iter()
                .map(|&c| (c as i128).rem_euclid(p as i128) as u64)
                .collect(),
        )
    }

    pub fn zero(p: u64) -> FpPoly {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    /// Horner evaluation at t.
    pub fn eval(&self, t: u64) -> u64 {
        let t = t % self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, t, self.p) + c) % self.p;
        }
        acc
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() || self.leading() == 1 {
            return self.clone();
        }
        let scale = pow_mod_raw(self.leading(), self.p - 2, self.p);
        FpPoly::new(
            self.p,
            self.coeffs.iter().map(|&c| mul_mod(c, scale, self.p)).collect(),
        )
    }

    pub fn mul(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check_modulus(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(FpPoly::zero(self.p));
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Ok(FpPoly::new(self.p, out))
    }

    pub fn sub(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check_modulus(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = if a >= b { a - b } else { a + self.p - b };
        }
        Ok(FpPoly::new(self.p, out))
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &FpPoly) -> Result<(FpPoly, FpPoly)> {
        self.check_modulus(divisor)?;
        if divisor.is_zero() {
            return Err(Error::invalid("div_rem: division by the zero polynomial"));
        }
        let p = self.p;
        let d = divisor.coeffs.len();
        if self.coeffs.len() < d {
            return Ok((FpPoly::zero(p), self.clone()));
        }
        let lead_inv = pow_mod_raw(divisor.leading(), p - 2, p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - d + 1];
        for k in (0..quot.len()).rev() {
            let q = mul_mod(rem[k + d - 1], lead_inv, p);
            if q == 0 {
                continue;
            }
            quot[k] = q;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let sub = mul_mod(q, b, p);
                let v = rem[k + j];
                rem[k + j] = if v >= sub { v - sub } else { v + p - sub };
            }
        }
        Ok((FpPoly::new(p, quot), FpPoly::new(p, rem)))
    }

    fn check_modulus(&self, other: &FpPoly) -> Result<()> {
        if self.p != other.p {
            return Err(Error::invalid(format!(
                "mismatched moduli: {} vs {}",
                self.p, other.p
            )));
        }
        Ok(())
    }
}

/// Monic gcd by Euclid's algorithm; gcd(A, 0) = monic(A), gcd(0, 0) = 0.
pub fn poly_gcd(a: &FpPoly, b: &FpPoly) -> Result<FpPoly> {
    a.check_modulus(b)?;
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.div_rem(&b)?.1;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// `{ t in 1..p-1 : A(t) ≡ 0 }` by exhaustive evaluation.
pub fn roots_in_units(a: &FpPoly) -> Result<BTreeSet<u64>> {
    if a.is_zero() {
        return Err(Error::invalid("roots_in_units: zero polynomial"));
    }
    Ok((1..a.p).filter(|&t| a.eval(t) == 0).collect())
}

/// `phi_m(t) = sum_{i=1}^{p-1} i^(m-1) t^i`, Horner over the reversed
/// coefficient sequence.
pub fn mirimanoff_eval(ctx: &PrimeContext, m: u64, t: u64) -> Result<u64> {
    let p = ctx.p();
    if m < 1 || m > p - 1 {
        return Err(Error::invalid(format!(
            "mirimanoff_eval: index m={m} outside 1..=p-1"
        )));
    }
    if t >= p {
        return Err(Error::invalid(format!("mirimanoff_eval: t={t} >= p")));
    }
    let mut acc = 0u64;
    for i in (1..p).rev() {
        acc = ctx.mul(acc, t);
        acc = ctx.add(acc, ctx.pow(i, m - 1));
    }
    Ok(ctx.mul(acc, t))
}

/// `phi_m(t)` for every m = 1..p-1 at once (index m-1), in O(p²).
pub fn mirimanoff_values(ctx: &PrimeContext, t: u64) -> Vec<u64> {
    let p = ctx.p();
    let mut values = vec![0u64; (p - 1) as usize];
    let mut tpow = t % p;
    for i in 1..p {
        // ipow runs through i^(m-1) as m increases.
        let mut ipow = 1u64;
        for slot in values.iter_mut() {
            *slot = ctx.add(*slot, ctx.mul(ipow, tpow));
            ipow = ctx.mul(ipow, i);
        }
        tpow = ctx.mul(tpow, t);
    }
    values
}

/// Starred variant: `phi*_1 = 1`, `phi*_m = phi_m` for odd m >= 3.
pub fn mirimanoff_star_eval(ctx: &PrimeContext, m: u64, t: u64) -> Result<u64> {
    if m % 2 == 0 {
        return Err(Error::invalid(format!(
            "mirimanoff_star_eval: index m={m} must be odd"
        )));
    }
    if m > ctx.p() - 2 {
        return Err(Error::invalid(format!(
            "mirimanoff_star_eval: index m={m} outside 1..=p-2"
        )));
    }
    if m == 1 {
        Ok(1)
    } else {
        mirimanoff_eval(ctx, m, t)
    }
}

// Expansions of the classical Kummer polynomials evaluated at -t:
//   P_1(-t) = -t
//   P_3(-t) = -t(1+t)
//   P_5(-t) = -t(1+t)(1+10t+t²)
//   P_7(-t) = -t(1+t)(1+56t+246t²+56t³+t⁴)
const KUMMER_AT_MINUS_T: [&[i64]; 4] = [
    &[0, -1],
    &[0, -1, -1],
    &[0, -1, -11, -11, -1],
    &[0, -1, -57, -302, -302, -57, -1],
];

/// The polynomial K_m with `K_m(t) = P_{2m+1}(-t)`, coefficients mod p.
///
/// Only m <= 3 exists in closed factored form; larger indices are
/// unsupported.
pub fn kummer_polynomial(ctx: &PrimeContext, m: u64) -> Result<FpPoly> {
    let coeffs = KUMMER_AT_MINUS_T
        .get(m as usize)
        .ok_or_else(|| Error::unsupported(format!("kummer_polynomial: index m={m} > 3")))?;
    Ok(FpPoly::from_signed(ctx.p(), coeffs))
}

/// `phi_{2m+1}(t) + (1-t)^(p-1-2m) · P_{2m+1}(-t) mod p`; expected 0.
///
/// This is the Kummer-Mirimanoff relation
/// `phi_{2m+1}(t) ≡ -(1-t)^(p-1-2m) P_{2m+1}(-t)` moved to one side.
pub fn kummer_relation_residual(ctx: &PrimeContext, m: u64, t: u64) -> Result<u64> {
    let p = ctx.p();
    if !(1..=3).contains(&m) {
        return Err(Error::invalid(format!(
            "kummer_relation_residual: m={m} outside 1..=3"
        )));
    }
    if t < 2 || t > p - 2 {
        return Err(Error::invalid(format!(
            "kummer_relation_residual: t={t} outside 2..=p-2 (factor 1-t degenerates)"
        )));
    }
    let phi = mirimanoff_eval(ctx, 2 * m + 1, t)?;
    let kummer = kummer_polynomial(ctx, m)?.eval(t);
    let one_minus_t = ctx.sub(1, t);
    Ok(ctx.add(phi, ctx.mul(ctx.pow(one_minus_t, p - 1 - 2 * m), kummer)))
}

/// Residuals of the two symmetric-sum identities
/// `sum_m phi_m(t) phi_{p-m}(t) ≡ -phi_{p-1}(t²)` and
/// `sum_n phi_{2n}(t) phi_{p-2n}(t) ≡ (p-1)/2 · phi_{p-1}(t²)`;
/// both components are expected to be 0.
pub fn symmetric_sum_residuals(ctx: &PrimeContext, t: u64) -> (u64, u64) {
    let p = ctx.p();
    let t = t % p;
    let values = mirimanoff_values(ctx, t); // phi_m(t), index m-1
    let phi = |m: u64| values[(m - 1) as usize];
    let phi_t2 = mirimanoff_eval(ctx, p - 1, ctx.mul(t, t)).expect("index in range");

    let mut full = 0u64;
    for m in 1..p {
        full = ctx.add(full, ctx.mul(phi(m), phi(p - m)));
    }
    let first = ctx.add(full, phi_t2);

    let mut even = 0u64;
    for n in 1..=(p - 1) / 2 {
        even = ctx.add(even, ctx.mul(phi(2 * n), phi(p - 2 * n)));
    }
    let second = ctx.sub(even, ctx.mul((p - 1) / 2, phi_t2));
    (first, second)
}

/// Residual of the twisted power-sum identity
/// `sum_{j=1}^{p-1} j^(p-2) t^(kj mod p) ≡ k · phi_{p-1}(t)`; expected 0.
///
/// Note the coefficient: substituting i = kj mod p turns the left side into
/// `k · sum_i i^(p-2) t^i` exactly, so the twist multiplies phi_{p-1} by k.
pub fn twisted_sum_residual(ctx: &PrimeContext, k: u64, t: u64) -> Result<u64> {
    let p = ctx.p();
    if k < 1 || k > p - 1 {
        return Err(Error::invalid(format!(
            "twisted_sum_residual: k={k} outside 1..=p-1"
        )));
    }
    if t >= p {
        return Err(Error::invalid(format!("twisted_sum_residual: t={t} >= p")));
    }
    let mut tpow = vec![1u64; p as usize];
    for e in 1..p as usize {
        tpow[e] = ctx.mul(tpow[e - 1], t);
    }
    let mut sum = 0u64;
    for j in 1..p {
        let e = ctx.mul(k, j) as usize;
        sum = ctx.add(sum, ctx.mul(ctx.inverse(j), tpow[e]));
    }
    let phi = mirimanoff_eval(ctx, p - 1, t)?;
    Ok(ctx.sub(sum, ctx.mul(k, phi)))
}
