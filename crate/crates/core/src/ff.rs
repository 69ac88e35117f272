//! Exact arithmetic in finite fields `F_{p^k}` for small prime powers.
//!
//! Elements are packed into `u64` codes: the coefficient vector
//! `(c_0, ..., c_{k-1})` of a residue class mod the field modulus is encoded
//! as the base-`p` integer `sum c_i p^i`, so codes range over `[0, q)`.
//! A field can optionally carry a Zech logarithm table, which turns
//! multiplication and inversion into index arithmetic and addition into a
//! single table lookup; both representations produce identical codes.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order. Covers every table in the shipped corpus
/// (largest is 7^5 = 16807) with a wide margin while keeping all internal
/// arithmetic in fixed-width integers.
pub const MAX_ORDER: u64 = 1 << 31;

/// Default ceiling for Zech table construction.
pub const ZECH_THRESHOLD: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("supplied modulus is reducible over F_{0}")]
    Reducible(u32),
    #[error("field order {0} exceeds the supported maximum {MAX_ORDER}")]
    Overflow(u128),
    #[error("field order {0} exceeds the Zech table threshold {1}")]
    TooLarge(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    BadModulus { expected: u32, got: u32 },
}

static CTX_COUNTER: AtomicU64 = AtomicU64::new(1);

/// Sentinel in the Zech table for `1 + g^i = 0`.
const ZECH_NONE: u32 = u32::MAX;

#[derive(Debug)]
struct ZechTable {
    /// discrete log of each nonzero code (`log[0]` is unused)
    log: Vec<u32>,
    /// code of `g^i` for `i` in `[0, q-1)`
    exp: Vec<u64>,
    /// `Z(i)` with `g^{Z(i)} = 1 + g^i`, or `ZECH_NONE` when `1 + g^i = 0`
    zech: Vec<u32>,
    /// discrete log of `-1` (0 in characteristic 2)
    neg_log: u64,
    generator: u64,
}

/// A finite field `F_{p^k}` with a fixed monic irreducible modulus.
#[derive(Debug)]
pub struct FieldCtx {
    p: u32,
    k: u32,
    q: u64,
    /// monic modulus, length k+1, constant coefficient first
    modulus: Vec<u32>,
    id: u64,
    zech: Option<ZechTable>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}
impl Eq for FieldCtx {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Deterministic first monic irreducible of degree `k` over `F_p`, scanning
/// coefficient vectors in base-`p` code order (constant digit least
/// significant). Irreducibility is certified by
/// `gcd(X^{p^d} - X, f) = 1` for proper divisors `d` of `k` together with
/// `X^{p^k} ≡ X (mod f)`.
pub fn irreducible_poly(p: u32, k: u32) -> Vec<u32> {
    assert!(k >= 1);
    if k == 1 {
        return vec![0, 1];
    }
    let pk = (p as u64).pow(k);
    let mut code = 0u64;
    while code < pk {
        let mut coeffs = Vec::with_capacity(k as usize + 1);
        let mut c = code;
        for _ in 0..k {
            coeffs.push((c % p as u64) as u32);
            c /= p as u64;
        }
        coeffs.push(1);
        if poly_is_irreducible(&coeffs, p) {
            return coeffs;
        }
        code += 1;
    }
    unreachable!("an irreducible polynomial of every degree exists");
}

fn poly_is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    if f[0] == 0 {
        // divisible by X (k >= 2 here)
        return k == 1;
    }
    let xq = xpow_mod((p as u64).pow(k as u32), f, p);
    // X^{p^k} ≡ X
    let mut ident = vec![0u32; k.max(2)];
    if k >= 2 {
        ident[1] = 1;
    }
    let xqv = padded(&xq, k);
    if k >= 2 && xqv != ident[..k] {
        return false;
    }
    for d in proper_divisor_degrees(k) {
        let xd = xpow_mod((p as u64).pow(d as u32), f, p);
        let mut diff = padded(&xd, k);
        if diff.len() > 1 {
            diff[1] = (diff[1] + p - 1) % p;
        }
        if !gcd_is_constant(&diff, f, p) {
            return false;
        }
    }
    true
}

fn proper_divisor_degrees(k: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut n = k;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(k / d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 && n != k {
        out.push(k / n);
    } else if n > 1 {
        out.push(k / n);
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn padded(v: &[u32], k: usize) -> Vec<u32> {
    let mut out = v.to_vec();
    out.resize(k.max(v.len()), 0);
    out.truncate(k);
    out
}

fn poly_deg(v: &[u32]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

/// dense univariate multiplication mod (f, p); inputs have degree < deg f
fn polmul_mod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let k = f.len() - 1;
    let mut out = vec![0u64; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
    }
    for i in (k..2 * k).rev() {
        let c = out[i];
        if c != 0 {
            out[i] = 0;
            for j in 0..k {
                let sub = (c * f[j] as u64) % p as u64;
                out[i - k + j] = (out[i - k + j] + p as u64 - sub) % p as u64;
            }
        }
    }
    out.truncate(k);
    out.iter().map(|&x| x as u32).collect()
}

fn xpow_mod(e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let k = f.len() - 1;
    let mut base = vec![0u32; k];
    if k == 1 {
        // X ≡ -f[0]
        base[0] = (p - f[0] % p) % p;
    } else {
        base[1] = 1;
    }
    let mut result = vec![0u32; k];
    result[0] = 1;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = polmul_mod(&result, &base, f, p);
        }
        base = polmul_mod(&base, &base, f, p);
        e >>= 1;
    }
    result
}

fn gcd_is_constant(a: &[u32], b: &[u32], p: u32) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    loop {
        let db = match poly_deg(&b) {
            None => return poly_deg(&a) == Some(0),
            Some(d) => d,
        };
        if db == 0 {
            return true;
        }
        let da = match poly_deg(&a) {
            None => return false,
            Some(d) => d,
        };
        if da < db {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // a -= lead(a)/lead(b) x^(da-db) b, repeatedly
        let inv = mod_inv(b[db], p);
        while let Some(da) = poly_deg(&a) {
            if da < db {
                break;
            }
            let factor = (a[da] as u64 * inv as u64 % p as u64) as u32;
            for i in 0..=db {
                let sub = (factor as u64 * b[i] as u64) % p as u64;
                a[da - db + i] = ((a[da - db + i] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // extended euclid
    let (mut t, mut newt) = (0i64, 1i64);
    let (mut r, mut newr) = (p as i64, (a % p) as i64);
    while newr != 0 {
        let q = r / newr;
        (t, newt) = (newt, t - q * newt);
        (r, newr) = (newr, r - q * newr);
    }
    debug_assert!(r == 1, "not invertible");
    (((t % p as i64) + p as i64) % p as i64) as u32
}

impl FieldCtx {
    /// `F_p` for a prime `p`.
    pub fn prime(p: u64) -> Result<Arc<FieldCtx>, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p > MAX_ORDER {
            return Err(FieldError::Overflow(p as u128));
        }
        Ok(Arc::new(FieldCtx {
            p: p as u32,
            k: 1,
            q: p,
            modulus: vec![0, 1],
            id: CTX_COUNTER.fetch_add(1, Ordering::Relaxed),
            zech: None,
        }))
    }

    /// `F_{p^k}`; when no modulus is supplied the deterministic
    /// lexicographically-first irreducible is used.
    pub fn extension(p: u64, k: u32, modulus: Option<&[u32]>) -> Result<Arc<FieldCtx>, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k < 1 {
            return Err(FieldError::BadModulus { expected: 1, got: 0 });
        }
        let q = (p as u128).pow(k);
        if q > MAX_ORDER as u128 {
            return Err(FieldError::Overflow(q));
        }
        let p32 = p as u32;
        let modulus = match modulus {
            None => irreducible_poly(p32, k),
            Some(m) => {
                let m: Vec<u32> = m.iter().map(|&c| c % p32).collect();
                let deg = poly_deg(&m);
                if deg != Some(k as usize) || m[k as usize] != 1 {
                    return Err(FieldError::BadModulus {
                        expected: k,
                        got: deg.map(|d| d as u32).unwrap_or(0),
                    });
                }
                if k > 1 && !poly_is_irreducible(&m, p32) {
                    return Err(FieldError::Reducible(p32));
                }
                m
            }
        };
        Ok(Arc::new(FieldCtx {
            p: p32,
            k,
            q: q as u64,
            modulus,
            id: CTX_COUNTER.fetch_add(1, Ordering::Relaxed),
            zech: None,
        }))
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn id(&self) -> u64 {
        self.id
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn has_zech(&self) -> bool {
        self.zech.is_some()
    }
    pub fn generator(&self) -> Option<u64> {
        self.zech.as_ref().map(|z| z.generator)
    }

    /// Zech logarithm table entries `Z(i)`, when built.
    pub fn zech_entries(&self) -> Option<&[u32]> {
        self.zech.as_ref().map(|z| z.zech.as_slice())
    }

    // ----- code packing ------------------------------------------------------

    pub fn code_from_coeffs(&self, coeffs: &[u32]) -> u64 {
        let mut code = 0u64;
        for &c in coeffs.iter().rev() {
            code = code * self.p as u64 + (c % self.p) as u64;
        }
        debug_assert!(code < self.q);
        code
    }

    pub fn coeffs_from_code(&self, code: u64) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        let mut c = code;
        for _ in 0..self.k {
            out.push((c % self.p as u64) as u32);
            c /= self.p as u64;
        }
        out
    }

    pub fn from_int(&self, n: i64) -> u64 {
        let p = self.p as i64;
        (((n % p) + p) % p) as u64
    }

    // ----- raw code arithmetic ----------------------------------------------

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if let Some(z) = &self.zech {
            if a == 0 {
                return b;
            }
            if b == 0 {
                return a;
            }
            let i = z.log[a as usize] as u64;
            let j = z.log[b as usize] as u64;
            let m = self.q - 1;
            let d = (j + m - i) % m;
            let zd = z.zech[d as usize];
            if zd == ZECH_NONE {
                return 0;
            }
            return z.exp[((i + zd as u64) % m) as usize];
        }
        if self.k == 1 {
            let s = a + b;
            return if s >= self.q { s - self.q } else { s };
        }
        let mut out = 0u64;
        let mut mult = 1u64;
        let (mut a, mut b) = (a, b);
        let p = self.p as u64;
        for _ in 0..self.k {
            let s = (a % p) + (b % p);
            out += (if s >= p { s - p } else { s }) * mult;
            a /= p;
            b /= p;
            mult *= p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        if let Some(z) = &self.zech {
            if a == 0 {
                return 0;
            }
            let m = self.q - 1;
            return z.exp[((z.log[a as usize] as u64 + z.neg_log) % m) as usize];
        }
        if self.k == 1 {
            return if a == 0 { 0 } else { self.q - a };
        }
        let mut out = 0u64;
        let mut mult = 1u64;
        let mut a = a;
        let p = self.p as u64;
        for _ in 0..self.k {
            let d = a % p;
            out += (if d == 0 { 0 } else { p - d }) * mult;
            a /= p;
            mult *= p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(z) = &self.zech {
            let m = self.q - 1;
            let e = (z.log[a as usize] as u64 + z.log[b as usize] as u64) % m;
            return z.exp[e as usize];
        }
        if self.k == 1 {
            return a * b % self.q;
        }
        let av = self.coeffs_from_code(a);
        let bv = self.coeffs_from_code(b);
        let prod = polmul_mod(&av, &bv, &self.modulus, self.p);
        self.code_from_coeffs(&prod)
    }

    pub fn inv(&self, a: u64) -> Result<u64, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(z) = &self.zech {
            let m = self.q - 1;
            let e = (m - z.log[a as usize] as u64) % m;
            return Ok(z.exp[e as usize]);
        }
        if self.k == 1 {
            return Ok(mod_inv(a as u32, self.p) as u64);
        }
        // extended euclid in F_p[x] against the modulus
        let mut r0: Vec<u32> = self.modulus.clone();
        let mut r1 = self.coeffs_from_code(a);
        let mut t0 = vec![0u32];
        let mut t1 = vec![1u32];
        let p = self.p;
        loop {
            let d1 = poly_deg(&r1).expect("gcd with irreducible modulus is nonzero");
            if d1 == 0 {
                let c = mod_inv(r1[0], p);
                let out: Vec<u32> = t1
                    .iter()
                    .map(|&x| (x as u64 * c as u64 % p as u64) as u32)
                    .collect();
                return Ok(self.code_from_coeffs(&out));
            }
            // r0 = q r1 + r2
            let mut r2 = r0.clone();
            let mut qpoly = vec![0u32; r0.len()];
            let inv = mod_inv(r1[d1], p);
            while let Some(d2) = poly_deg(&r2) {
                if d2 < d1 {
                    break;
                }
                let factor = (r2[d2] as u64 * inv as u64 % p as u64) as u32;
                qpoly[d2 - d1] = factor;
                for i in 0..=d1 {
                    let sub = (factor as u64 * r1[i] as u64) % p as u64;
                    r2[d2 - d1 + i] =
                        ((r2[d2 - d1 + i] as u64 + p as u64 - sub) % p as u64) as u32;
                }
            }
            // t2 = t0 - q t1
            let mut t2 = vec![0u32; t0.len().max(qpoly.len() + t1.len())];
            for (i, &x) in t0.iter().enumerate() {
                t2[i] = x;
            }
            for (i, &qc) in qpoly.iter().enumerate() {
                if qc == 0 {
                    continue;
                }
                for (j, &tc) in t1.iter().enumerate() {
                    if tc != 0 {
                        let sub = (qc as u64 * tc as u64) % p as u64;
                        t2[i + j] = ((t2[i + j] as u64 + p as u64 - sub) % p as u64) as u32;
                    }
                }
            }
            r0 = r1;
            r1 = r2;
            t0 = t1;
            t1 = t2;
        }
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(z) = &self.zech {
            let m = self.q - 1;
            let idx = (z.log[a as usize] as u128 * (e % m) as u128 % m as u128) as u64;
            return z.exp[idx as usize];
        }
        let mut result = 1u64;
        let mut base = a;
        let mut e = e % (self.q - 1);
        if e == 0 {
            e = self.q - 1;
        }
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// `a^p`, the Frobenius automorphism.
    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p as u64)
    }

    /// All element codes, `0..q`.
    pub fn element_codes(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }
}

/// Build a Zech logarithm table for `ctx`, returning a new context with the
/// table attached. The generator is found by seeded random trials with the
/// multiplicative order verified against the factorization of `q - 1`; the
/// resulting table is independent of which generator was drawn only up to
/// relabeling, but all arithmetic agrees element-for-element with polynomial
/// mode.
pub fn build_zech_table(
    ctx: &Arc<FieldCtx>,
    seed: u64,
    threshold: u64,
) -> Result<Arc<FieldCtx>, FieldError> {
    if ctx.q > threshold {
        return Err(FieldError::TooLarge(ctx.q, threshold));
    }
    let q = ctx.q;
    if q == 2 {
        // trivial table: g = 1, exp = [1], Z(0) = none (1+1=0)
        let zt = ZechTable {
            log: vec![0, 0],
            exp: vec![1],
            zech: vec![ZECH_NONE],
            neg_log: 0,
            generator: 1,
        };
        return Ok(Arc::new(FieldCtx {
            p: ctx.p,
            k: ctx.k,
            q: ctx.q,
            modulus: ctx.modulus.clone(),
            id: CTX_COUNTER.fetch_add(1, Ordering::Relaxed),
            zech: Some(zt),
        }));
    }
    let m = q - 1;
    let factors = prime_factors(m);
    // seeded generator search
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5ec4_1291);
    let generator = loop {
        let cand = rng.gen_range(1..q);
        if cand == 0 {
            continue;
        }
        if factors.iter().all(|&f| ctx.pow(cand, m / f) != 1) {
            break cand;
        }
    };
    let mut exp = vec![0u64; m as usize];
    let mut log = vec![0u32; q as usize];
    let mut cur = 1u64;
    for i in 0..m {
        exp[i as usize] = cur;
        log[cur as usize] = i as u32;
        cur = ctx.mul(cur, generator);
    }
    debug_assert_eq!(cur, 1, "generator order mismatch");
    let mut zech = vec![0u32; m as usize];
    for i in 0..m {
        let s = ctx.add(1, exp[i as usize]);
        zech[i as usize] = if s == 0 { ZECH_NONE } else { log[s as usize] };
    }
    let neg_log = if ctx.p == 2 { 0 } else { m / 2 };
    debug_assert_eq!(ctx.neg(1), exp[neg_log as usize]);
    Ok(Arc::new(FieldCtx {
        p: ctx.p,
        k: ctx.k,
        q: ctx.q,
        modulus: ctx.modulus.clone(),
        id: CTX_COUNTER.fetch_add(1, Ordering::Relaxed),
        zech: Some(ZechTable {
            log,
            exp,
            zech,
            neg_log,
            generator,
        }),
    }))
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element tied to its owning field.
#[derive(Debug, Clone)]
pub struct FieldElem {
    pub code: u64,
    pub ctx: Arc<FieldCtx>,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.id == other.ctx.id && self.code == other.code
    }
}
impl Eq for FieldElem {}

impl FieldElem {
    pub fn new(ctx: &Arc<FieldCtx>, code: u64) -> FieldElem {
        debug_assert!(code < ctx.q());
        FieldElem {
            code,
            ctx: Arc::clone(ctx),
        }
    }

    pub fn from_coeffs(ctx: &Arc<FieldCtx>, coeffs: &[u32]) -> FieldElem {
        FieldElem::new(ctx, ctx.code_from_coeffs(coeffs))
    }

    fn same(&self, other: &FieldElem) -> Result<(), FieldError> {
        if self.ctx.id != other.ctx.id {
            return Err(FieldError::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.same(other)?;
        Ok(FieldElem::new(&self.ctx, self.ctx.add(self.code, other.code)))
    }
    pub fn sub(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.same(other)?;
        Ok(FieldElem::new(&self.ctx, self.ctx.sub(self.code, other.code)))
    }
    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.same(other)?;
        Ok(FieldElem::new(&self.ctx, self.ctx.mul(self.code, other.code)))
    }
    pub fn neg(&self) -> FieldElem {
        FieldElem::new(&self.ctx, self.ctx.neg(self.code))
    }
    pub fn inv(&self) -> Result<FieldElem, FieldError> {
        Ok(FieldElem::new(&self.ctx, self.ctx.inv(self.code)?))
    }
    pub fn pow(&self, e: u64) -> FieldElem {
        FieldElem::new(&self.ctx, self.ctx.pow(self.code, e))
    }
    pub fn frobenius(&self) -> FieldElem {
        FieldElem::new(&self.ctx, self.ctx.frobenius(self.code))
    }
    pub fn is_zero(&self) -> bool {
        self.code == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(f5.q(), 5);
        assert_eq!(f5.k(), 1);
        let f31 = FieldCtx::prime(31).unwrap();
        assert_eq!(f31.q(), 31);
        assert_eq!(FieldCtx::prime(4), Err(FieldError::NotPrime(4)));
        assert_eq!(FieldCtx::prime(1), Err(FieldError::NotPrime(1)));
    }

    #[test]
    fn extension_field_construction() {
        // F_4 with t^2 + t + 1
        let f4 = FieldCtx::extension(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f4.q(), 4);
        // F_{5^4}
        let f625 = FieldCtx::extension(5, 4, None).unwrap();
        assert_eq!(f625.q(), 625);
        // t^2 + 1 = (t+1)^2 over F_2
        assert_eq!(
            FieldCtx::extension(2, 2, Some(&[1, 0, 1])),
            Err(FieldError::Reducible(2))
        );
        // too big
        assert!(matches!(
            FieldCtx::extension(2, 40, None),
            Err(FieldError::Overflow(_))
        ));
    }

    #[test]
    fn irreducible_poly_examples() {
        assert_eq!(irreducible_poly(2, 1), vec![0, 1]);
        assert_eq!(irreducible_poly(2, 2), vec![1, 1, 1]);
        // brute-force oracle: first monic irreducible quadratic over F_5 in
        // base-5 code order is the first t^2+bt+c with no root in F_5
        let mut first = None;
        'outer: for code in 0..25u32 {
            let c = code % 5;
            let b = code / 5;
            for t in 0..5u32 {
                if (t * t + b * t + c) % 5 == 0 {
                    continue 'outer;
                }
            }
            first = Some(vec![c, b, 1]);
            break;
        }
        assert_eq!(irreducible_poly(5, 2), first.unwrap());
    }

    #[test]
    fn f4_multiplication() {
        let f4 = FieldCtx::extension(2, 2, Some(&[1, 1, 1])).unwrap();
        let t = f4.code_from_coeffs(&[0, 1]);
        // t * t = t + 1
        assert_eq!(f4.mul(t, t), f4.code_from_coeffs(&[1, 1]));
    }

    #[test]
    fn inverse_examples() {
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(f5.inv(2).unwrap(), 3);
        assert_eq!(f5.inv(0), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn lagrange_in_f25() {
        let f25 = FieldCtx::extension(5, 2, None).unwrap();
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let a = rng.gen_range(1..25u64);
            assert_eq!(f25.pow(a, 24), 1);
        }
    }

    #[test]
    fn frobenius_examples() {
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(f5.frobenius(3), 3);
        let f4 = FieldCtx::extension(2, 2, Some(&[1, 1, 1])).unwrap();
        let t = f4.code_from_coeffs(&[0, 1]);
        let t1 = f4.code_from_coeffs(&[1, 1]);
        assert_eq!(f4.frobenius(t), t1);
        assert_eq!(f4.frobenius(f4.frobenius(t)), t);
    }

    #[test]
    fn field_axioms_random_samples() {
        for ctx in [
            FieldCtx::prime(7).unwrap(),
            FieldCtx::extension(3, 3, None).unwrap(),
            FieldCtx::extension(2, 5, None).unwrap(),
        ] {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
            let q = ctx.q();
            for _ in 0..10_000 {
                let a = rng.gen_range(0..q);
                let b = rng.gen_range(0..q);
                let c = rng.gen_range(0..q);
                assert_eq!(ctx.add(a, b), ctx.add(b, a));
                assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
                assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
                assert_eq!(ctx.add(ctx.add(a, b), c), ctx.add(a, ctx.add(b, c)));
                assert_eq!(
                    ctx.mul(a, ctx.add(b, c)),
                    ctx.add(ctx.mul(a, b), ctx.mul(a, c))
                );
                if a != 0 {
                    assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), 1);
                }
                assert_eq!(ctx.pow(a, q), a, "a^q = a");
            }
        }
    }

    #[test]
    fn zech_matches_polynomial_mode_exhaustively() {
        for ctx in [
            FieldCtx::extension(5, 2, None).unwrap(),
            FieldCtx::extension(2, 2, None).unwrap(),
            FieldCtx::extension(7, 2, None).unwrap(),
        ] {
            let z = build_zech_table(&ctx, 1, ZECH_THRESHOLD).unwrap();
            let q = ctx.q();
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(ctx.add(a, b), z.add(a, b));
                    assert_eq!(ctx.mul(a, b), z.mul(a, b));
                }
                if a != 0 {
                    assert_eq!(ctx.inv(a).unwrap(), z.inv(a).unwrap());
                }
                assert_eq!(ctx.neg(a), z.neg(a));
            }
        }
    }

    #[test]
    fn zech_large_field_and_threshold() {
        // 7^5 = 16807: table of 16806 entries
        let ctx = FieldCtx::extension(7, 5, None).unwrap();
        let z = build_zech_table(&ctx, 3, ZECH_THRESHOLD).unwrap();
        assert_eq!(z.zech_entries().unwrap().len(), 16806);
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100_000 {
            let a = rng.gen_range(0..16807u64);
            let b = rng.gen_range(0..16807u64);
            assert_eq!(ctx.add(a, b), z.add(a, b));
            assert_eq!(ctx.mul(a, b), z.mul(a, b));
        }
        // threshold enforcement
        let big = FieldCtx::extension(2, 21, None).unwrap();
        assert!(matches!(
            build_zech_table(&big, 0, ZECH_THRESHOLD),
            Err(FieldError::TooLarge(_, _))
        ));
    }

    #[test]
    fn zech_f2_trivial() {
        let f2 = FieldCtx::prime(2).unwrap();
        let z = build_zech_table(&f2, 0, ZECH_THRESHOLD).unwrap();
        assert_eq!(z.generator(), Some(1));
        assert_eq!(z.add(1, 1), 0);
        assert_eq!(z.mul(1, 1), 1);
    }

    #[test]
    fn irreducible_poly_deterministic() {
        for (p, k) in [(2u32, 6u32), (3, 4), (13, 3)] {
            assert_eq!(irreducible_poly(p, k), irreducible_poly(p, k));
        }
    }

    #[test]
    fn elem_mismatch() {
        let f5a = FieldCtx::prime(5).unwrap();
        let f5b = FieldCtx::prime(5).unwrap();
        let a = FieldElem::new(&f5a, 2);
        let b = FieldElem::new(&f5b, 2);
        assert_eq!(a.add(&b), Err(FieldError::FieldMismatch));
    }
}
