//! Generation of concrete weakly holomorphic modular forms: Dedekind eta
//! quotients with Ligozat cusp orders and character computation, the
//! two-character Eisenstein family, and assembly of spanning pools per level
//! preset.
//!
//! A pool member is `(eta part) * (product of Eisenstein factors) * ascent^j`
//! where the ascent function is a weight-zero, trivial-character eta quotient
//! whose only pole sits at the cusp at infinity. Every member is validated
//! for weight, character and cusp holomorphy before it enters a pool.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::{factorize, gcd_i64, kronecker};
use crate::characters::{QuadCharacter, SignVector};
use crate::lvalues::gen_bernoulli;
use crate::qseries::LaurentQSeries;
use crate::{rat_int, Error, Int, Rat, Result};

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Index `mu = N prod_{p|N} (1 + 1/p)` of `Gamma_0(N)` in the modular group.
pub fn gamma0_index(n: u64) -> u64 {
    let mut mu = n;
    for p in crate::arith::prime_divisors(n as i64) {
        mu = mu / p * (p + 1);
    }
    mu
}

// ---------------------------------------------------------------------------
// Eta quotients
// ---------------------------------------------------------------------------

/// A formal product `prod_{d | level} eta(d tau)^{r_d}` on `Gamma_0(level)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotient {
    level: u64,
    exponents: BTreeMap<u64, i64>,
}

impl EtaQuotient {
    /// Builds a quotient from `(divisor, exponent)` pairs; every divisor must
    /// divide `level`.
    pub fn new(level: u64, exponents: &[(u64, i64)]) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidEtaQuotient("level must be positive".into()));
        }
        let mut map = BTreeMap::new();
        for &(d, r) in exponents {
            if d == 0 || level % d != 0 {
                return Err(Error::InvalidEtaQuotient(format!(
                    "{d} does not divide the level {level}"
                )));
            }
            if r != 0 {
                *map.entry(d).or_insert(0) += r;
            }
        }
        map.retain(|_, r| *r != 0);
        Ok(EtaQuotient { level, exponents: map })
    }

    /// The empty quotient (the constant 1) on `Gamma_0(level)`.
    pub fn trivial(level: u64) -> Self {
        EtaQuotient { level, exponents: BTreeMap::new() }
    }

    /// The ambient level.
    pub fn level(&self) -> u64 {
        self.level
    }

    /// The `(divisor, exponent)` pairs, ascending in the divisor.
    pub fn exponents(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exponents.iter().map(|(d, r)| (*d, *r))
    }

    /// Twice the weight: `sum_d r_d`.
    pub fn weight_doubled(&self) -> i64 {
        self.exponents.values().sum()
    }

    /// Integer weight, or an error for half-integral weight.
    pub fn weight(&self) -> Result<i64> {
        let w2 = self.weight_doubled();
        if w2 % 2 != 0 {
            return Err(Error::InvalidEtaQuotient(format!("half-integral weight {w2}/2")));
        }
        Ok(w2 / 2)
    }

    /// `sum_d d r_d` (24 times the order at infinity).
    pub fn order_sum_infinity(&self) -> i64 {
        self.exponents.iter().map(|(d, r)| *d as i64 * r).sum()
    }

    /// `sum_d (level/d) r_d` (24 times the order at zero, up to index factors).
    pub fn order_sum_zero(&self) -> i64 {
        self.exponents.iter().map(|(d, r)| (self.level / d) as i64 * r).sum()
    }

    /// Checks the two 24-divisibility constraints that make the quotient a
    /// modular form on `Gamma_0(level)` with (Kronecker-symbol) character.
    pub fn validate_integrality(&self) -> Result<()> {
        if self.order_sum_infinity() % 24 != 0 {
            return Err(Error::InvalidEtaQuotient(format!(
                "sum d r_d = {} is not divisible by 24",
                self.order_sum_infinity()
            )));
        }
        if self.order_sum_zero() % 24 != 0 {
            return Err(Error::InvalidEtaQuotient(format!(
                "sum (N/d) r_d = {} is not divisible by 24",
                self.order_sum_zero()
            )));
        }
        Ok(())
    }

    /// Merges two quotients on the same level (product of the forms).
    pub fn mul(&self, other: &EtaQuotient) -> Result<EtaQuotient> {
        if self.level != other.level {
            return Err(Error::InvalidEtaQuotient("level mismatch".into()));
        }
        let mut map = self.exponents.clone();
        for (d, r) in &other.exponents {
            *map.entry(*d).or_insert(0) += r;
        }
        map.retain(|_, r| *r != 0);
        Ok(EtaQuotient { level: self.level, exponents: map })
    }

    /// Raises the quotient to an integer power.
    pub fn pow(&self, e: i64) -> EtaQuotient {
        let exponents = self.exponents.iter().map(|(d, r)| (*d, r * e)).collect();
        EtaQuotient { level: self.level, exponents }
    }

    /// Order of vanishing at the cusps `a/c` of `Gamma_0(level)`, keyed by
    /// the cusp denominator `c | level` (the order is independent of `a`),
    /// by the Ligozat formula
    /// `ord_{a/c} = (N / (24 c gcd(c, N/c))) sum_d gcd(c,d)^2 r_d / d`.
    /// The cusp at infinity is `c = level`.
    pub fn ligozat_orders(&self) -> BTreeMap<u64, Rat> {
        let n = self.level;
        let mut out = BTreeMap::new();
        for c in divisors(n) {
            let mut s = Rat::zero();
            for (d, r) in &self.exponents {
                let g = gcd_i64(c as i64, *d as i64);
                s += Rat::new(Int::from(g * g * *r), Int::from(*d as i64));
            }
            let denom = 24 * c as i64 * gcd_i64(c as i64, (n / c) as i64);
            let factor = Rat::new(Int::from(n as i64), Int::from(denom));
            out.insert(c, factor * s);
        }
        out
    }

    /// Order at the cusp at infinity as a rational (`sum d r_d / 24`).
    pub fn order_at_infinity(&self) -> Rat {
        Rat::new(Int::from(self.order_sum_infinity()), Int::from(24))
    }

    /// `true` iff every cusp other than infinity has nonnegative order.
    pub fn holomorphic_away_from_infinity(&self) -> bool {
        self.ligozat_orders().iter().all(|(c, ord)| *c == self.level || !ord.is_negative())
    }

    /// Squarefree signed discriminant datum `D0` such that the quotient's
    /// character is `n -> kronecker(D0, n)` on the residues where both sides
    /// are defined: `D0 = (-1)^k prod_p p^{e_p mod 2}` with
    /// `e_p = sum_d v_p(d) r_d` and `k` the weight.
    pub fn character_discriminant(&self) -> Result<i64> {
        let k = self.weight()?;
        let mut e: BTreeMap<u64, i64> = BTreeMap::new();
        for (d, r) in &self.exponents {
            if *d == 1 {
                continue;
            }
            for (p, v) in factorize(*d as i64).expect("nonzero") {
                *e.entry(p).or_insert(0) += v as i64 * r;
            }
        }
        let mut d0: i64 = if k % 2 == 0 { 1 } else { -1 };
        for (p, ep) in e {
            if ep.rem_euclid(2) == 1 {
                d0 *= p as i64;
            }
        }
        Ok(d0)
    }

    /// Compares the quotient's character against a target: the trivial
    /// character (`None`) or a quadratic character (`Some(chi)`).
    ///
    /// Two quadratic characters agree iff they agree on all odd residues
    /// coprime to a common (even) modulus; the check runs one full period.
    pub fn character_matches(&self, target: Option<&QuadCharacter>) -> Result<bool> {
        let d0 = self.character_discriminant()?;
        let cond = target.map(|c| c.conductor()).unwrap_or(1);
        let modulus = 8 * self.level as i64 * d0.unsigned_abs().max(1) as i64 * cond as i64;
        for x in 1..=modulus {
            if gcd_i64(x, modulus) != 1 {
                continue;
            }
            let mine = kronecker(d0, x);
            let theirs = target.map(|c| c.eval(x)).unwrap_or(1);
            if mine != theirs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Expands the quotient to the requested absolute precision.
    ///
    /// The global exponent `sum d r_d / 24` must be an integer; the result is
    /// `q^{that} prod_d (prod_{m >= 1} (1 - q^{dm}))^{r_d}`.
    pub fn expansion(&self, prec: i64) -> Result<LaurentQSeries> {
        self.validate_integrality()?;
        let s24 = self.order_sum_infinity();
        debug_assert_eq!(s24 % 24, 0);
        let shift = s24 / 24;
        let work_prec = prec - shift;
        if work_prec <= 0 {
            return Ok(LaurentQSeries::zero(prec));
        }
        let mut acc = LaurentQSeries::one(work_prec);
        for (d, r) in &self.exponents {
            let factor = euler_product(*d as i64, work_prec);
            acc = acc.mul(&factor.pow(*r)?);
        }
        let shifted = LaurentQSeries::from_terms(
            acc.terms().map(|(n, c)| (n + shift, c.clone())),
            acc.precision() + shift,
        );
        Ok(shifted.truncate(prec))
    }
}

/// `prod_{m >= 1} (1 - q^{dm})` by the pentagonal-number theorem.
fn euler_product(d: i64, prec: i64) -> LaurentQSeries {
    let mut terms: Vec<(i64, Rat)> = Vec::new();
    let mut k: i64 = 0;
    loop {
        // generalized pentagonal exponents k(3k-1)/2, k = 0, 1, -1, 2, -2, ...
        let e1 = d * k * (3 * k - 1) / 2;
        if e1 >= prec && k > 0 {
            break;
        }
        let sign = if k.rem_euclid(2) == 0 { Rat::one() } else { -Rat::one() };
        if e1 < prec {
            terms.push((e1, sign.clone()));
        }
        if k > 0 {
            let e2 = d * k * (3 * k + 1) / 2;
            if e2 < prec {
                terms.push((e2, sign));
            }
        }
        k += 1;
    }
    LaurentQSeries::from_terms(terms, prec)
}

// ---------------------------------------------------------------------------
// Eisenstein series
// ---------------------------------------------------------------------------

/// A member of the two-character Eisenstein family `E_k^{psi1, psi2}(t tau)`,
/// with coefficients `sum_{d | n} psi1(n/d) psi2(d) d^{k-1}` and constant term
/// `L(1-k, psi2)/2` when `psi1` is trivial. The weight-two all-trivial case
/// uses the standard `E_2(tau) - t E_2(t tau)` combination (requires `t > 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinSpec {
    /// Weight `k >= 1`.
    pub weight: u64,
    /// First character (conductor `u`).
    pub psi1: QuadCharacter,
    /// Second character (conductor `v`).
    pub psi2: QuadCharacter,
    /// Argument scaling `t >= 1`: the expansion is in `q^t`.
    pub scale_t: u64,
}

impl EisensteinSpec {
    /// Checks the parity condition `psi1(-1) psi2(-1) = (-1)^k` and the
    /// weight-2 all-trivial restriction.
    pub fn validate(&self) -> Result<()> {
        if self.weight == 0 {
            return Err(Error::ParityMismatch { weight: 0 });
        }
        let parity = self.psi1.parity() * self.psi2.parity();
        let want = if self.weight % 2 == 0 { 1 } else { -1 };
        if parity != want {
            return Err(Error::ParityMismatch { weight: self.weight as i64 });
        }
        if self.scale_t == 0 {
            return Err(Error::PresetValidation("scale t must be positive".into()));
        }
        let both_trivial = self.psi1.is_trivial() && self.psi2.is_trivial();
        if both_trivial && self.weight == 2 && self.scale_t <= 1 {
            return Err(Error::PresetValidation(
                "weight-2 trivial Eisenstein series requires a scale t > 1".into(),
            ));
        }
        Ok(())
    }

    /// Product conductor `u * v * t`, which must divide the level in a pool.
    pub fn level_span(&self) -> u64 {
        self.psi1.conductor() * self.psi2.conductor() * self.scale_t
    }

    /// Character of the series as a function (the product `psi1 * psi2`).
    pub fn character_value(&self, n: i64) -> i32 {
        self.psi1.eval(n) * self.psi2.eval(n)
    }

    /// q-expansion to the requested absolute precision.
    pub fn expansion(&self, prec: i64) -> Result<LaurentQSeries> {
        self.validate()?;
        let k = self.weight;
        let both_trivial = self.psi1.is_trivial() && self.psi2.is_trivial();
        if both_trivial && k == 2 {
            // E_2(tau) - t E_2(t tau) with e2 = -1/24 + sum sigma_1(n) q^n.
            let t = self.scale_t as i64;
            let e2 = eisenstein_raw(2, &self.psi1, &self.psi2, prec);
            let e2t = e2.scale_exponents(t).truncate(prec);
            return Ok(e2.sub(&e2t.scale(&rat_int(t))).truncate(prec));
        }
        let inner_prec = div_ceil_pos(prec, self.scale_t as i64);
        let raw = eisenstein_raw(k, &self.psi1, &self.psi2, inner_prec);
        Ok(raw.scale_exponents(self.scale_t as i64).truncate(prec))
    }
}

fn div_ceil_pos(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    if a >= 0 {
        (a + b - 1) / b
    } else {
        a / b
    }
}

/// `c0 + sum_{n>=1} (sum_{d|n} psi1(n/d) psi2(d) d^{k-1}) q^n` with
/// `c0 = L(1-k, psi2)/2` when `psi1` is trivial, else 0.
fn eisenstein_raw(k: u64, psi1: &QuadCharacter, psi2: &QuadCharacter, prec: i64) -> LaurentQSeries {
    let mut terms: Vec<(i64, Rat)> = Vec::new();
    if psi1.is_trivial() {
        let c0 = -gen_bernoulli(k, psi2) / rat_int(2 * k as i64);
        terms.push((0, c0));
    }
    for n in 1..prec.max(1) {
        let mut s = Rat::zero();
        for d in divisors(n as u64) {
            let ch = psi1.eval((n as u64 / d) as i64) * psi2.eval(d as i64);
            if ch == 0 {
                continue;
            }
            let mut dp = Rat::one();
            for _ in 0..k - 1 {
                dp *= rat_int(d as i64);
            }
            s += rat_int(ch as i64) * dp;
        }
        terms.push((n, s));
    }
    LaurentQSeries::from_terms(terms, prec)
}

// ---------------------------------------------------------------------------
// Ascent function search
// ---------------------------------------------------------------------------

/// Searches for a weight-zero, trivial-character eta quotient on
/// `Gamma_0(n)` holomorphic at every cusp except infinity, with a pole at
/// infinity of minimal order `<= max_pole`. The search is exhaustive over
/// exponent vectors bounded by `max_abs_exponent` and deterministic (ties
/// break to the lexicographically smallest exponent vector).
pub fn find_ascent_function(n: u64, max_abs_exponent: i64, max_pole: i64) -> Result<EtaQuotient> {
    let divs = divisors(n);
    if divs.len() <= 1 {
        return Err(Error::SearchFailed { bound: max_abs_exponent });
    }
    let b = max_abs_exponent;
    let mut best: Option<(i64, Vec<i64>)> = None;
    let mut stack: Vec<i64> = Vec::with_capacity(divs.len());
    search_rec(&divs, b, &mut stack, &mut |exps: &[i64]| {
        if exps.iter().all(|&r| r == 0) {
            return;
        }
        let pairs: Vec<(u64, i64)> = divs.iter().copied().zip(exps.iter().copied()).collect();
        let quot = EtaQuotient::new(n, &pairs).expect("divisors valid");
        if quot.weight_doubled() != 0 || quot.validate_integrality().is_err() {
            return;
        }
        let orders = quot.ligozat_orders();
        let inf = orders.get(&n).expect("infinity cusp");
        if !inf.is_negative() {
            return;
        }
        let pole = -inf.clone();
        if pole > rat_int(max_pole) {
            return;
        }
        if orders.iter().any(|(c, o)| *c != n && o.is_negative()) {
            return;
        }
        if quot.character_matches(None) != Ok(true) {
            return;
        }
        debug_assert!(crate::rat_is_integer(&pole));
        let pole_int: i64 = pole.numer().try_into().unwrap_or(i64::MAX);
        let key = (pole_int, exps.to_vec());
        if best.as_ref().map(|cur| key < *cur).unwrap_or(true) {
            best = Some(key);
        }
    });
    match best {
        Some((_, exps)) => {
            let pairs: Vec<(u64, i64)> = divs.into_iter().zip(exps).collect();
            EtaQuotient::new(n, &pairs)
        }
        None => Err(Error::SearchFailed { bound: max_abs_exponent }),
    }
}

fn search_rec(divs: &[u64], b: i64, stack: &mut Vec<i64>, visit: &mut impl FnMut(&[i64])) {
    if stack.len() == divs.len() {
        visit(stack);
        return;
    }
    for r in -b..=b {
        stack.push(r);
        search_rec(divs, b, stack, visit);
        stack.pop();
    }
}

// ---------------------------------------------------------------------------
// Presets and pools
// ---------------------------------------------------------------------------

/// One seed form: an eta part times a product of Eisenstein factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoolSeed {
    /// Eta quotient factor (may be trivial).
    pub eta: EtaQuotient,
    /// Eisenstein factors (may be empty).
    pub eisenstein: Vec<EisensteinSpec>,
}

impl PoolSeed {
    /// Total weight of the seed.
    pub fn weight(&self) -> Result<i64> {
        let mut w = self.eta.weight()?;
        for e in &self.eisenstein {
            w += e.weight as i64;
        }
        Ok(w)
    }
}

/// Expected attainable orders for one sign vector, used for validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedOrders {
    /// Compact sign string (`+`/`-` per prime, ascending), or `()` for level 1.
    pub eps: String,
    /// Attainable leading orders the solved grid must produce, ascending.
    pub orders: Vec<i64>,
}

/// Pool description for one weight within a level preset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoolSpec {
    /// Weight `k` of every member.
    pub weight: i64,
    /// Deepest pole at infinity admitted into grids built from this pool.
    pub max_pole: i64,
    /// Smallest ascent power to include (usually 0; negative powers admit
    /// members with poles at other cusps).
    pub ascent_min: i64,
    /// Floor on the working precision, on top of the certification bound.
    pub min_precision: i64,
    /// Seed forms.
    pub seeds: Vec<PoolSeed>,
    /// Golden attainable-order sets, validated after solving when present.
    pub expected: Vec<ExpectedOrders>,
}

/// A level preset: character, ascent function and per-weight pools.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelPreset {
    /// Short name, e.g. `N5`.
    pub name: String,
    /// The character; its conductor is the level.
    pub chi: QuadCharacter,
    /// Weight-zero ascent eta quotient with its pole only at infinity.
    pub ascent: EtaQuotient,
    /// Expected pole order of the ascent function at infinity.
    pub ascent_pole: i64,
    /// Safety margin added to certification precision.
    pub precision_margin: i64,
    /// Pool descriptions per weight.
    pub pools: Vec<PoolSpec>,
}

impl LevelPreset {
    /// The level `N` (the character's conductor).
    pub fn level(&self) -> u64 {
        self.chi.conductor()
    }

    /// Finds the pool description for weight `k`.
    pub fn pool_spec(&self, k: i64) -> Result<&PoolSpec> {
        self.pools.iter().find(|p| p.weight == k).ok_or_else(|| {
            Error::PresetValidation(format!("preset {} has no pool for weight {k}", self.name))
        })
    }

    /// Structural validation: ascent divisor shape and per-seed weight,
    /// character and holomorphy requirements.
    pub fn validate(&self) -> Result<()> {
        let n = self.level();
        if n > 1 {
            if self.ascent.level() != n {
                return Err(Error::PresetValidation(format!(
                    "ascent lives on level {}, preset is level {n}",
                    self.ascent.level()
                )));
            }
            self.ascent.validate_integrality()?;
            if self.ascent.weight()? != 0 {
                return Err(Error::PresetValidation("ascent must have weight 0".into()));
            }
            if !self.ascent.character_matches(None)? {
                return Err(Error::PresetValidation("ascent must have trivial character".into()));
            }
            let orders = self.ascent.ligozat_orders();
            let inf = orders.get(&n).expect("infinity cusp");
            if inf != &rat_int(-self.ascent_pole) {
                return Err(Error::PresetValidation(format!(
                    "ascent pole at infinity is {inf}, expected {}",
                    -self.ascent_pole
                )));
            }
            if orders.iter().any(|(c, o)| *c != n && o.is_negative()) {
                return Err(Error::PresetValidation("ascent has a pole away from infinity".into()));
            }
        }
        for pool in &self.pools {
            for (i, seed) in pool.seeds.iter().enumerate() {
                let w = seed.weight()?;
                if w != pool.weight {
                    return Err(Error::PresetValidation(format!(
                        "seed {i} of the weight-{} pool has weight {w}",
                        pool.weight
                    )));
                }
                for e in &seed.eisenstein {
                    e.validate()?;
                    if n % e.level_span() != 0 {
                        return Err(Error::PresetValidation(format!(
                            "Eisenstein factor spans level {}, not a divisor of {n}",
                            e.level_span()
                        )));
                    }
                }
                seed.eta.validate_integrality()?;
                if !seed_character_matches(seed, &self.chi)? {
                    return Err(Error::PresetValidation(format!(
                        "seed {i} of the weight-{} pool does not carry the preset character",
                        pool.weight
                    )));
                }
            }
            for exp in &pool.expected {
                SignVector::parse(&self.chi, &exp.eps)?;
            }
        }
        Ok(())
    }
}

/// Compares the total character of a seed (eta part times Eisenstein factors)
/// against `chi` on one full common period of odd residues.
fn seed_character_matches(seed: &PoolSeed, chi: &QuadCharacter) -> Result<bool> {
    let d0 = seed.eta.character_discriminant()?;
    let n = seed.eta.level().max(chi.conductor());
    let modulus = 8 * n as i64 * d0.unsigned_abs().max(1) as i64 * chi.conductor().max(1) as i64;
    for x in 1..=modulus {
        if gcd_i64(x, modulus) != 1 {
            continue;
        }
        let mut mine = kronecker(d0, x);
        for e in &seed.eisenstein {
            mine *= e.character_value(x);
        }
        if mine != chi.eval(x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the pool for weight `k`: every validated seed multiplied by ascent
/// powers, keeping the members whose pole order at infinity is at most
/// `max_pole`, all expanded to absolute precision `prec`.
pub fn build_pool(
    preset: &LevelPreset,
    k: i64,
    max_pole: i64,
    prec: i64,
) -> Result<Vec<LaurentQSeries>> {
    let spec = preset.pool_spec(k)?;
    // Valuations are exact from the seed data (leading coefficients of eta
    // and Eisenstein factors never cancel), which fixes the working
    // precision every member needs to come out with `prec` known terms.
    let seed_vals: Vec<i64> = spec.seeds.iter().map(seed_valuation).collect();
    let max_seed_val = seed_vals.iter().copied().max().unwrap_or(0);
    let max_abs_val = seed_vals.iter().map(|v| v.abs()).max().unwrap_or(0);
    let work = prec
        + max_pole.max(0)
        + max_abs_val
        + preset.ascent_pole.max(1) * spec.ascent_min.unsigned_abs() as i64
        + 1;
    let seed_series: Vec<LaurentQSeries> =
        spec.seeds.iter().map(|seed| expand_seed(seed, work)).collect::<Result<Vec<_>>>()?;
    debug_assert!(seed_series
        .iter()
        .zip(&seed_vals)
        .all(|(s, v)| s.valuation() == Some(*v)));
    let ascent_pole = preset.ascent_pole.max(1);
    let j_hi = if preset.level() == 1 {
        0
    } else {
        (max_pole + max_seed_val).div_euclid(ascent_pole).max(0)
    };
    let mut members: Vec<LaurentQSeries> = Vec::new();
    for j in spec.ascent_min..=j_hi {
        let tpow = if j == 0 || preset.level() == 1 {
            LaurentQSeries::one(work)
        } else {
            preset.ascent.pow(j).expansion(work)?
        };
        for s in &seed_series {
            let member = s.mul(&tpow).truncate(prec);
            if let Some(v) = member.valuation() {
                if v >= -max_pole {
                    debug_assert!(member.precision() >= prec, "member lost precision");
                    members.push(member);
                }
            }
        }
    }
    if members.is_empty() {
        return Err(Error::PoolRankDeficient(format!(
            "weight-{k} pool of preset {} is empty at max_pole {max_pole}",
            preset.name
        )));
    }
    Ok(members)
}

/// Leading exponent of a seed, computed symbolically: the eta part leads at
/// `sum d r_d / 24` and an Eisenstein factor at 0 (trivial first character)
/// or at its scale `t`.
fn seed_valuation(seed: &PoolSeed) -> i64 {
    let mut v = seed.eta.order_sum_infinity() / 24;
    for e in &seed.eisenstein {
        if !e.psi1.is_trivial() {
            v += e.scale_t as i64;
        }
    }
    v
}

/// Expands one seed to the requested precision.
pub fn expand_seed(seed: &PoolSeed, prec: i64) -> Result<LaurentQSeries> {
    let mut acc = seed.eta.expansion(prec)?;
    for e in &seed.eisenstein {
        acc = acc.mul(&e.expansion(prec)?);
    }
    Ok(acc.truncate(prec))
}
