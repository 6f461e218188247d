//! Elementary number theory and exact cyclotomic arithmetic.
//!
//! Provides the Kronecker symbol in full generality, deterministic
//! factorization for inputs below `2^64`, primitive roots, and a dense
//! cyclotomic-number type over `Q(zeta_M)` with exact canonical forms, used
//! by the Weil-representation matrices and Milgram signature computations.

use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Float, One, Zero};

use crate::{rat_int, Error, Int, Rat, Result};

// ---------------------------------------------------------------------------
// Kronecker symbol and factorization
// ---------------------------------------------------------------------------

/// Kronecker symbol `(a / n)`, extended to all integers `n` (including
/// `n <= 0` and even `n`).
pub fn kronecker(a: i64, n: i64) -> i32 {
    let mut a = a as i128;
    let mut n = n as i128;
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result = 1i32;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    // Strip factors of two from n; (a/2) vanishes for even a, otherwise it
    // depends on a mod 8.
    while n % 2 == 0 {
        n /= 2;
        if a % 2 == 0 {
            return 0;
        }
        let am8 = a.rem_euclid(8);
        if am8 == 3 || am8 == 5 {
            result = -result;
        }
    }
    if n == 1 {
        return result;
    }
    // Jacobi symbol for odd n > 1 via quadratic reciprocity.
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let nm8 = n.rem_euclid(8);
            if nm8 == 3 || nm8 == 5 {
                result = -result;
            }
        }
        core::mem::swap(&mut a, &mut n);
        if a.rem_euclid(4) == 3 && n.rem_euclid(4) == 3 {
            result = -result;
        }
        a = a.rem_euclid(n);
    }
    if n == 1 {
        result
    } else {
        0
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin primality test, valid for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This witness set decides primality below 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Factors a nonzero integer into `(prime, exponent)` pairs, primes ascending.
///
/// The sign is discarded; every returned prime is certified by [`is_prime`].
pub fn factorize(n: i64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::ZeroInput("factorize"));
    }
    let mut m = n.unsigned_abs();
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut push = |p: u64, e: u32| {
        debug_assert!(is_prime(p));
        out.push((p, e));
    };
    for p in [2u64, 3, 5] {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            push(p, e);
        }
    }
    // Wheel over residues coprime to 30.
    let mut p = 7u64;
    let wheel = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut wi = 0usize;
    while p.saturating_mul(p) <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            push(p, e);
        }
        p += wheel[wi];
        wi = (wi + 1) % wheel.len();
    }
    if m > 1 {
        push(m, 1);
    }
    Ok(out)
}

/// Distinct prime divisors of `|n|`, ascending; empty for `n = +-1`.
pub fn prime_divisors(n: i64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    factorize(n).expect("nonzero").into_iter().map(|(p, _)| p).collect()
}

/// Number of distinct prime divisors of `|n|`.
pub fn omega(n: i64) -> u32 {
    prime_divisors(n).len() as u32
}

/// Exact p-adic valuation of a nonzero integer.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    assert!(n != 0 && p >= 2);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Smallest primitive root modulo an odd prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    assert!(p > 2 && is_prime(p), "primitive_root requires an odd prime");
    let factors = factorize((p - 1) as i64).expect("nonzero");
    't: for t in 2..p {
        for &(q, _) in &factors {
            if powmod(t, (p - 1) / q, p) == 1 {
                continue 't;
            }
        }
        return t;
    }
    unreachable!("every odd prime has a primitive root");
}

/// gcd on i64 with gcd(0, n) = |n|.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

// ---------------------------------------------------------------------------
// Cyclotomic numbers
// ---------------------------------------------------------------------------

/// Largest cyclotomic order the arithmetic will promote to.
///
/// Orders in use stay below `8 * 2N` for the levels shipped; the bound only
/// guards against runaway lcm promotion.
pub const CYCLO_ORDER_BOUND: u64 = 5760;

/// Element of `Q(zeta_M)` as a dense coefficient vector of length `M` in the
/// powers `zeta_M^0 .. zeta_M^{M-1}`, kept reduced modulo the `M`-th
/// cyclotomic polynomial (coefficients at exponents `>= phi(M)` are zero in
/// canonical form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rat>,
}

/// Shared reduction data for a fixed cyclotomic order.
///
/// Building the ring computes the cyclotomic polynomial once; bulk consumers
/// (Weil matrices) construct a single ring and route every product through it.
#[derive(Debug, Clone)]
pub struct CycloRing {
    order: u64,
    phi: usize,
    /// Cyclotomic polynomial Phi_M, monic, integer coefficients, degree phi(M).
    cyclo_poly: Vec<Int>,
    /// Row j: zeta^{phi + j} reduced mod Phi_M, j = 0 .. M - phi - 1.
    reduction: Vec<Vec<Rat>>,
}

/// Euler phi.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    for p in prime_divisors(n as i64) {
        result = result / p * (p - 1);
    }
    result
}

/// Integer polynomial helpers on dense ascending-coefficient vectors.
fn poly_trim(p: &mut Vec<Int>) {
    while p.len() > 1 && p.last().map(Zero::is_zero).unwrap_or(false) {
        p.pop();
    }
}

/// Exact division of integer polynomials; panics if the division is inexact
/// (only used with cyclotomic factors where exactness is guaranteed).
fn poly_div_exact(num: &[Int], den: &[Int]) -> Vec<Int> {
    let mut rem: Vec<Int> = num.to_vec();
    poly_trim(&mut rem);
    let mut den = den.to_vec();
    poly_trim(&mut den);
    let dlead = den.last().expect("nonzero divisor").clone();
    assert!(!dlead.is_zero());
    if rem.len() < den.len() {
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        return vec![Int::zero()];
    }
    let qdeg = rem.len() - den.len();
    let mut quot = vec![Int::zero(); qdeg + 1];
    for k in (0..=qdeg).rev() {
        let lead = rem[k + den.len() - 1].clone();
        if lead.is_zero() {
            continue;
        }
        let (c, r) = num_integer::Integer::div_rem(&lead, &dlead);
        assert!(r.is_zero(), "inexact polynomial division");
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            let t = &c * d;
            rem[k + i] -= t;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "nonzero remainder");
    poly_trim(&mut quot);
    quot
}

/// The `n`-th cyclotomic polynomial via Phi_n = prod_{d|n} (x^d - 1)^{mu(n/d)}.
pub fn cyclotomic_polynomial(n: u64) -> Vec<Int> {
    assert!(n >= 1);
    // x^n - 1 divided by the product of Phi_d over proper divisors d | n,
    // computed recursively on the distinct primes.
    let mut poly: Vec<Int> = vec![Int::from(-1)];
    poly.resize(2, Int::zero());
    poly[1] = Int::one(); // x - 1 = Phi_1
    if n == 1 {
        return poly;
    }
    let mut m = 1u64;
    let mut phi_m = poly; // Phi_1
    for p in prime_divisors(n as i64) {
        // Phi_{mp}(x) = Phi_m(x^p) / Phi_m(x)
        let mut subst = vec![Int::zero(); (phi_m.len() - 1) * p as usize + 1];
        for (i, c) in phi_m.iter().enumerate() {
            subst[i * p as usize] = c.clone();
        }
        phi_m = poly_div_exact(&subst, &phi_m);
        m *= p;
    }
    // Phi_{n}(x) = Phi_{rad(n)}(x^{n/rad(n)})
    let q = n / m;
    if q > 1 {
        let mut subst = vec![Int::zero(); (phi_m.len() - 1) * q as usize + 1];
        for (i, c) in phi_m.iter().enumerate() {
            subst[i * q as usize] = c.clone();
        }
        phi_m = subst;
    }
    phi_m
}

impl CycloRing {
    /// Builds the ring of order `m`, precomputing Phi_m and the reduction
    /// rows for exponents `phi(m) .. m-1`.
    pub fn new(m: u64) -> Result<Rc<CycloRing>> {
        if m == 0 || m > CYCLO_ORDER_BOUND {
            return Err(Error::OrderOverflow { requested: m, bound: CYCLO_ORDER_BOUND });
        }
        let cyclo_poly = cyclotomic_polynomial(m);
        let phi = cyclo_poly.len() - 1;
        // zeta^e for e >= phi reduces recursively: zeta^phi = -sum_{i<phi} c_i zeta^i.
        let mut reduction: Vec<Vec<Rat>> = Vec::with_capacity((m as usize).saturating_sub(phi));
        let top: Vec<Rat> = cyclo_poly[..phi]
            .iter()
            .map(|c| -Rat::from_integer(c.clone()))
            .collect();
        for e in phi..m as usize {
            if e == phi {
                reduction.push(top.clone());
            } else {
                // zeta^e = zeta * zeta^{e-1}
                let prev = reduction.last().expect("previous row").clone();
                let mut row = vec![Rat::zero(); phi];
                for (i, c) in prev.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if i + 1 < phi {
                        row[i + 1] += c;
                    } else {
                        let r = reduction[0].clone();
                        for (j, t) in r.iter().enumerate() {
                            row[j] += c * t;
                        }
                    }
                }
                reduction.push(row);
            }
        }
        Ok(Rc::new(CycloRing { order: m, phi, cyclo_poly, reduction }))
    }

    /// The ring's order `M`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Degree of the field over `Q`, i.e. `phi(M)`.
    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Monic integer coefficients of Phi_M.
    pub fn cyclotomic_poly(&self) -> &[Int] {
        &self.cyclo_poly
    }

    /// Canonicalizes a raw length-M coefficient vector in place.
    fn reduce_vec(&self, coeffs: &mut [Rat]) {
        let m = self.order as usize;
        debug_assert_eq!(coeffs.len(), m);
        for e in (self.phi..m).rev() {
            if coeffs[e].is_zero() {
                continue;
            }
            let c = core::mem::replace(&mut coeffs[e], Rat::zero());
            for (j, t) in self.reduction[e - self.phi].iter().enumerate() {
                if !t.is_zero() {
                    coeffs[j] += &c * t;
                }
            }
        }
    }

    /// Canonical zero.
    pub fn zero(self: &Rc<Self>) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: vec![Rat::zero(); self.order as usize] }
    }

    /// `zeta_M^e` (exponent taken mod M), canonicalized.
    pub fn root_of_unity(self: &Rc<Self>, e: i64) -> Cyclotomic {
        let m = self.order as i64;
        let e = e.rem_euclid(m) as usize;
        let mut coeffs = vec![Rat::zero(); self.order as usize];
        coeffs[e] = Rat::one();
        self.reduce_vec(&mut coeffs);
        Cyclotomic { order: self.order, coeffs }
    }

    /// A rational constant as a ring element.
    pub fn constant(self: &Rc<Self>, c: Rat) -> Cyclotomic {
        let mut coeffs = vec![Rat::zero(); self.order as usize];
        coeffs[0] = c;
        Cyclotomic { order: self.order, coeffs }
    }

    /// `e((num/den))` = `zeta_M^{M * num / den}`; requires `den | M`.
    pub fn e_frac(self: &Rc<Self>, num: i64, den: i64) -> Cyclotomic {
        assert!(den > 0 && self.order % den as u64 == 0, "denominator must divide the order");
        self.root_of_unity(num * (self.order as i64 / den))
    }

    /// Sum in this ring (operands must already have this order).
    pub fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        debug_assert!(a.order == self.order && b.order == self.order);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    /// Product in this ring, skipping zero coefficients and reducing mod Phi_M.
    pub fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        debug_assert!(a.order == self.order && b.order == self.order);
        let m = self.order as usize;
        let mut acc = vec![Rat::zero(); m];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let mut k = i + j;
                if k >= m {
                    k -= m; // zeta^M = 1
                }
                acc[k] += x * y;
            }
        }
        self.reduce_vec(&mut acc);
        Cyclotomic { order: self.order, coeffs: acc }
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conjugate(&self, a: &Cyclotomic) -> Cyclotomic {
        debug_assert!(a.order == self.order);
        let m = self.order as usize;
        let mut acc = vec![Rat::zero(); m];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            acc[(m - i) % m] += x;
        }
        self.reduce_vec(&mut acc);
        Cyclotomic { order: self.order, coeffs: acc }
    }

    /// Scales by a rational.
    pub fn scale(&self, a: &Cyclotomic, c: &Rat) -> Cyclotomic {
        let coeffs = a.coeffs.iter().map(|x| x * c).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    /// Multiplicative inverse via `1/x = conj(x) * ... ` is not needed in
    /// general; division by a nonzero *rational multiple of a Gauss sum* is
    /// handled by callers. Division by a nonzero rational is exact.
    pub fn div_rat(&self, a: &Cyclotomic, c: &Rat) -> Cyclotomic {
        assert!(!c.is_zero());
        let inv = Rat::one() / c;
        self.scale(a, &inv)
    }

    /// Quadratic Gauss sum `sum_{x mod n} e(x^2 / n)` as an element of this
    /// ring; requires `n | M`.
    pub fn quadratic_gauss_sum(self: &Rc<Self>, n: u64) -> Cyclotomic {
        assert!(n >= 1 && self.order % n == 0);
        let mut acc = self.zero();
        for x in 0..n as i64 {
            let term = self.e_frac((x * x).rem_euclid(n as i64), n as i64);
            acc = self.add(&acc, &term);
        }
        acc
    }

    /// `sqrt(n)` realized exactly inside the ring via the quadratic Gauss sum
    /// (orders: `n | M`, and `4 | M` when `n` is not 1 mod 4).
    ///
    /// Classical evaluation: the sum `g(n)` equals `sqrt(n)`, `i sqrt(n)`,
    /// `(1+i) sqrt(n)` or `0` according to `n mod 4`; the even case `n = 2 mod 4`
    /// is handled through `sqrt(n) = sqrt(n/2) * sqrt(2)`.
    pub fn sqrt_exact(self: &Rc<Self>, n: u64) -> Cyclotomic {
        assert!(n >= 1);
        match n % 4 {
            1 => self.quadratic_gauss_sum(n),
            3 => {
                // g = i sqrt(n): divide by i = zeta_4.
                let g = self.quadratic_gauss_sum(n);
                let minus_i = self.e_frac(-1, 4);
                self.mul(&g, &minus_i)
            }
            0 => {
                // g = (1+i) sqrt(n): multiply by (1-i)/2.
                let g = self.quadratic_gauss_sum(n);
                let one_minus_i = {
                    let one = self.constant(Rat::one());
                    let i = self.e_frac(1, 4);
                    let minus_i = self.scale(&i, &rat_int(-1));
                    self.add(&one, &minus_i)
                };
                let half = Rat::new(Int::one(), Int::from(2));
                self.scale(&self.mul(&g, &one_minus_i), &half)
            }
            2 if n == 2 => {
                // sqrt(2) = zeta_8 + zeta_8^{-1}
                let z = self.e_frac(1, 8);
                let zc = self.e_frac(-1, 8);
                self.add(&z, &zc)
            }
            2 => {
                let a = self.sqrt_exact(n / 2);
                let b = self.sqrt_exact(2);
                self.mul(&a, &b)
            }
            _ => unreachable!(),
        }
    }
}

impl Cyclotomic {
    /// Order `M` of the ambient `Q(zeta_M)`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Canonical coefficient vector (length `M`, zero above `phi(M)`).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// The rational part if the element is rational, else `None`.
    pub fn as_rational(&self) -> Option<&Rat> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// `true` iff the canonical form is identically zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Embeds into `C` by `zeta_M -> exp(2 pi i / M)`; returns `(re, im)`.
    pub fn embed_float(&self) -> (f64, f64) {
        let m = self.order as f64;
        let (mut re, mut im) = (0.0f64, 0.0f64);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = rat_to_f64(c);
            let theta = core::f64::consts::TAU * (j as f64) / m;
            re += x * Float::cos(theta);
            im += x * Float::sin(theta);
        }
        (re, im)
    }

    /// Promotes to the ring of order `m` (the current order must divide `m`).
    pub fn promote(&self, ring: &Rc<CycloRing>) -> Result<Cyclotomic> {
        let m = ring.order();
        if m % self.order != 0 {
            return Err(Error::OrderOverflow { requested: m, bound: CYCLO_ORDER_BOUND });
        }
        let k = (m / self.order) as usize;
        let mut coeffs = vec![Rat::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * k] += c;
            }
        }
        ring.reduce_vec(&mut coeffs);
        Ok(Cyclotomic { order: m, coeffs })
    }
}

/// Convenience one-off operations that build (and discard) the common ring.
///
/// Operands of different orders are promoted to the lcm first; the promotion
/// errors out beyond [`CYCLO_ORDER_BOUND`].
pub mod cyclo_ops {
    use super::*;
    use num_integer::Integer;

    fn common_ring(a: &Cyclotomic, b: &Cyclotomic) -> Result<Rc<CycloRing>> {
        CycloRing::new(a.order().lcm(&b.order()))
    }

    /// Sum with lcm promotion.
    pub fn add(a: &Cyclotomic, b: &Cyclotomic) -> Result<Cyclotomic> {
        let ring = common_ring(a, b)?;
        Ok(ring.add(&a.promote(&ring)?, &b.promote(&ring)?))
    }

    /// Product with lcm promotion.
    pub fn mul(a: &Cyclotomic, b: &Cyclotomic) -> Result<Cyclotomic> {
        let ring = common_ring(a, b)?;
        Ok(ring.mul(&a.promote(&ring)?, &b.promote(&ring)?))
    }

    /// Complex conjugate.
    pub fn conjugate(a: &Cyclotomic) -> Result<Cyclotomic> {
        let ring = CycloRing::new(a.order())?;
        Ok(ring.conjugate(a))
    }
}

fn rat_to_f64(x: &Rat) -> f64 {
    // Good enough for the 1e-9 embedding contracts: split into quotient and
    // remainder so huge numerators cannot overflow the conversion.
    let (q, r) = num_integer::Integer::div_rem(x.numer(), x.denom());
    let qf = bigint_to_f64(&q);
    let rf = bigint_to_f64(&r) / bigint_to_f64(x.denom());
    qf + rf
}

fn bigint_to_f64(x: &Int) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}
