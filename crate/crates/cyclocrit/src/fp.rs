//! Modular-arithmetic substrate shared by every other module.
//!
//! A [`PrimeContext`] fixes an odd prime p together with a primitive root u
//! and caches the power table `u_i = u^i mod p` for `i = 0..p-2`, the index
//! (discrete log) table, and all modular inverses. Contexts are immutable
//! after construction, so they can be shared or sent between threads freely.
//!
//! Scalar helpers work for any prime p < 2^31: intermediate products are
//! 128-bit, which keeps arithmetic mod p² exact (needed by Fermat
//! quotients).

use crate::{Error, Result};

/// (a * b) mod m with 128-bit intermediates.
#[inline(always)]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// a^e mod m by square-and-multiply. Caller guarantees m >= 2.
pub(crate) fn pow_mod_raw(mut base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m >= 2);
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// a^e mod m, reducing a into `[0, m)` first (negative a allowed).
///
/// Supports moduli up to p² for p < 2^31. A modulus below 2 is rejected.
pub fn pow_mod(a: i64, e: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::invalid("pow_mod: modulus must be at least 2"));
    }
    let base = (a as i128).rem_euclid(m as i128) as u64;
    Ok(pow_mod_raw(base, e, m))
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Distinct prime factors of n, by trial division.
pub(crate) fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn has_full_order(u: u64, p: u64, factors_of_p_minus_1: &[u64]) -> bool {
    u % p != 0
        && factors_of_p_minus_1
            .iter()
            .all(|&q| pow_mod_raw(u, (p - 1) / q, p) != 1)
}

/// Smallest primitive root modulo an odd prime p.
///
/// Candidates u = 2, 3, ... are checked with `u^((p-1)/q) != 1` for every
/// prime q dividing p − 1.
pub fn smallest_primitive_root(p: u64) -> Result<u64> {
    if p < 3 || !is_prime(p) {
        return Err(Error::invalid(format!(
            "smallest_primitive_root: {p} is not an odd prime"
        )));
    }
    let factors = distinct_prime_factors(p - 1);
    (2..p)
        .find(|&u| has_full_order(u, p, &factors))
        .ok_or_else(|| Error::inconsistent(format!("no primitive root found for {p}")))
}

/// Least k >= 1 with a^k ≡ 1 (mod p); always a divisor of p − 1.
pub fn mult_order(a: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("mult_order: {p} is not prime")));
    }
    let a = a % p;
    if a == 0 {
        return Err(Error::invalid("mult_order: argument divisible by p"));
    }
    let mut order = p - 1;
    for q in distinct_prime_factors(p - 1) {
        while order % q == 0 && pow_mod_raw(a, order / q, p) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

/// Fermat quotient `((q^(p-1) mod p²) − 1) / p mod p`.
///
/// Zero exactly when q^(p−1) ≡ 1 (mod p²); the q = 2 case is the Wieferich
/// criterion (1093 and 3511 are the only known examples below 2^31).
pub fn fermat_quotient(q: u64, p: u64) -> Result<u64> {
    if p < 3 || !is_prime(p) {
        return Err(Error::invalid(format!(
            "fermat_quotient: {p} is not an odd prime"
        )));
    }
    if p >= 1 << 31 {
        return Err(Error::invalid(format!("fermat_quotient: {p} exceeds 2^31")));
    }
    if q % p == 0 {
        return Err(Error::invalid("fermat_quotient: base divisible by p"));
    }
    let p2 = p * p;
    let r = pow_mod_raw(q % p2, p - 1, p2);
    // r ≡ 1 (mod p) by Fermat, so the quotient is exact and already < p.
    debug_assert_eq!(r % p, 1);
    Ok((r - 1) / p)
}

/// An odd prime p with its primitive-root tables.
///
/// `upow[i] = u^i mod p` for `i = 0..p-2` hits each of `1..p-1` exactly
/// once; `index_of` inverts that map (the index `ind_u`), and `inverse`
/// holds all modular inverses. The ambient modulus for everything built on
/// top.
#[derive(Clone, Debug)]
pub struct PrimeContext {
    p: u64,
    root: u64,
    upow: Vec<u64>,
    index: Vec<u32>,
    inv: Vec<u64>,
}

impl PrimeContext {
    /// Context for the smallest primitive root mod p.
    pub fn new(p: u64) -> Result<Self> {
        let root = smallest_primitive_root(p)?;
        Self::with_root(p, root)
    }

    /// Context for an explicitly chosen primitive root (validated).
    ///
    /// Quantities that do not depend on the root choice carry explicit
    /// root-independence tests rather than assuming it; this constructor is
    /// what those tests rebuild with.
    pub fn with_root(p: u64, root: u64) -> Result<Self> {
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(Error::invalid(format!(
                "PrimeContext: {p} is not an odd prime"
            )));
        }
        if p >= 1 << 31 {
            return Err(Error::invalid(format!("PrimeContext: {p} exceeds 2^31")));
        }
        let factors = distinct_prime_factors(p - 1);
        let root = root % p;
        if root < 2 || !has_full_order(root, p, &factors) {
            return Err(Error::invalid(format!(
                "PrimeContext: {root} is not a primitive root mod {p}"
            )));
        }

        let n = (p - 1) as usize;
        let mut upow = vec![0u64; n];
        let mut index = vec![u32::MAX; p as usize];
        upow[0] = 1;
        index[1] = 0;
        for i in 1..n {
            upow[i] = mul_mod(upow[i - 1], root, p);
            index[upow[i] as usize] = i as u32;
        }
        // inv[a] for a = 1..p-1 by the standard linear recurrence.
        let mut inv = vec![0u64; p as usize];
        inv[1] = 1;
        for a in 2..p as usize {
            inv[a] = mul_mod(p - p / a as u64, inv[(p % a as u64) as usize], p);
        }

        debug_assert!(index[1..].iter().all(|&i| i != u32::MAX));
        Ok(PrimeContext {
            p,
            root,
            upow,
            index,
            inv,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    /// (p − 1) / 2, the dimension of the half-system matrices.
    pub fn half(&self) -> u64 {
        (self.p - 1) / 2
    }

    /// u_i = u^i mod p with the exponent reduced mod p − 1 (negative allowed).
    pub fn upower(&self, i: i64) -> u64 {
        let n = (self.p - 1) as i64;
        self.upow[i.rem_euclid(n) as usize]
    }

    /// Index (discrete log) of a: the unique `0 <= s < p-1` with u^s ≡ a.
    ///
    /// Panics if a ≡ 0 (mod p).
    pub fn index_of(&self, a: u64) -> u64 {
        let a = a % self.p;
        assert!(a != 0, "index_of: argument divisible by p");
        self.index[a as usize] as u64
    }

    /// Modular inverse of a. Panics if a ≡ 0 (mod p).
    pub fn inverse(&self, a: u64) -> u64 {
        let a = a % self.p;
        assert!(a != 0, "inverse: argument divisible by p");
        self.inv[a as usize]
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a % self.p + b % self.p;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        let (a, b) = (a % self.p, b % self.p);
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        let a = a % self.p;
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a % self.p, b % self.p, self.p)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod_raw(a % self.p, e, self.p)
    }

    /// Canonical residue of a signed integer.
    pub fn reduce(&self, x: i64) -> u64 {
        (x as i128).rem_euclid(self.p as i128) as u64
    }
}
