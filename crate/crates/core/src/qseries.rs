//! Sparse Laurent series in `q` over exact rationals with explicit absolute
//! precision.
//!
//! A [`LaurentQSeries`] stores finitely many nonzero coefficients together
//! with a precision `P`: coefficients are known exactly for every exponent
//! `n < P` and unknown from `P` on. All arithmetic propagates precision
//! conservatively, so a coefficient reported as known never changes when a
//! pipeline is re-run at higher input precision.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::{Error, Rat, Result};

/// Sparse Laurent series `sum_n a(n) q^n` with coefficients known for `n < precision`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentQSeries {
    coeffs: BTreeMap<i64, Rat>,
    precision: i64,
}

impl LaurentQSeries {
    /// The zero series known to the given precision.
    pub fn zero(precision: i64) -> Self {
        LaurentQSeries { coeffs: BTreeMap::new(), precision }
    }

    /// The constant series `1` known to the given precision.
    pub fn one(precision: i64) -> Self {
        Self::monomial(0, Rat::one(), precision)
    }

    /// `c * q^n`, known to `precision`; stores nothing if `c = 0` or `n >= precision`.
    pub fn monomial(n: i64, c: Rat, precision: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() && n < precision {
            coeffs.insert(n, c);
        }
        LaurentQSeries { coeffs, precision }
    }

    /// Builds a series from `(exponent, coefficient)` pairs; entries at or
    /// beyond `precision` and zero entries are dropped.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I, precision: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        for (n, c) in terms {
            if n < precision && !c.is_zero() {
                let slot = coeffs.entry(n).or_insert_with(Rat::zero);
                *slot += c;
                if slot.is_zero() {
                    coeffs.remove(&n);
                }
            }
        }
        LaurentQSeries { coeffs, precision }
    }

    /// Absolute precision `P`: coefficients are exact for all `n < P`.
    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// Smallest exponent with known-nonzero coefficient; `None` when the
    /// series is identically zero to its precision.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Coefficient of `q^n` (zero when unstored); only meaningful for `n < precision`.
    pub fn coeff(&self, n: i64) -> Rat {
        self.coeffs.get(&n).cloned().unwrap_or_else(Rat::zero)
    }

    /// `true` when the coefficient of `q^n` is known, i.e. `n < precision`.
    pub fn knows(&self, n: i64) -> bool {
        n < self.precision
    }

    /// Iterates the stored (nonzero) terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    /// Number of stored nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// `true` iff no nonzero coefficient is known.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient, if the series is nonzero.
    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.values().next()
    }

    /// Returns a copy truncated to `min(precision, new_precision)`.
    pub fn truncate(&self, new_precision: i64) -> Self {
        let precision = self.precision.min(new_precision);
        let coeffs = self
            .coeffs
            .iter()
            .take_while(|(n, _)| **n < precision)
            .map(|(n, c)| (*n, c.clone()))
            .collect();
        LaurentQSeries { coeffs, precision }
    }

    /// Coefficient-wise sum; precision is the minimum of the operands'.
    pub fn add(&self, other: &Self) -> Self {
        let precision = self.precision.min(other.precision);
        let mut coeffs: BTreeMap<i64, Rat> = BTreeMap::new();
        for (n, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if *n >= precision {
                continue;
            }
            let slot = coeffs.entry(*n).or_insert_with(Rat::zero);
            *slot += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentQSeries { coeffs, precision }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(n, c)| (*n, -c.clone())).collect();
        LaurentQSeries { coeffs, precision: self.precision }
    }

    /// `self - other`.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Scales every coefficient by `c`.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.precision);
        }
        let coeffs = self.coeffs.iter().map(|(n, a)| (*n, a * c)).collect();
        LaurentQSeries { coeffs, precision: self.precision }
    }

    /// Substitutes `q -> q^t` for `t >= 1`; precision scales accordingly.
    pub fn scale_exponents(&self, t: i64) -> Self {
        assert!(t >= 1);
        let coeffs = self.coeffs.iter().map(|(n, c)| (n * t, c.clone())).collect();
        // Exponents t*n with n < P are known exactly for all multiples of t
        // below t*P; intermediate non-multiples are exactly zero.
        LaurentQSeries { coeffs, precision: self.precision * t }
    }

    /// Cauchy product. Precision: `min(P_f + val_g, P_g + val_f)`; if either
    /// factor is zero to its precision the product is zero with the
    /// corresponding knowledge window.
    pub fn mul(&self, other: &Self) -> Self {
        let (vf, vg) = match (self.valuation(), other.valuation()) {
            (Some(vf), Some(vg)) => (vf, vg),
            // Zero factors: the best claimable window is min over the
            // defined combinations; fall back to min of precisions.
            (Some(vf), None) => return Self::zero(other.precision + vf),
            (None, Some(vg)) => return Self::zero(self.precision + vg),
            (None, None) => return Self::zero(self.precision.min(other.precision)),
        };
        let precision = (self.precision + vg).min(other.precision + vf);
        // Accumulate into a dense window starting at vf + vg.
        let base = vf + vg;
        let len = (precision - base).max(0) as usize;
        let mut acc: Vec<Rat> = alloc::vec![Rat::zero(); len];
        for (n, a) in &self.coeffs {
            for (m, b) in &other.coeffs {
                let e = n + m;
                if e < precision {
                    acc[(e - base) as usize] += a * b;
                }
            }
        }
        let coeffs = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (base + i as i64, c))
            .collect();
        LaurentQSeries { coeffs, precision }
    }

    /// Multiplicative inverse. Requires a nonzero leading coefficient.
    /// The inverse is returned with the conservative precision `P - 2*val`.
    pub fn invert(&self) -> Result<Self> {
        let val = self.valuation().ok_or(Error::NonInvertibleSeries)?;
        let lead = self.coeff(val);
        debug_assert!(!lead.is_zero());
        let precision = self.precision - 2 * val;
        // Solve (sum a_i q^{val+i}) * (sum b_j q^{-val+j}) = 1 term by term.
        let window = (precision - (-val)).max(0) as usize;
        let mut inv: Vec<Rat> = Vec::with_capacity(window);
        let lead_inv = Rat::one() / &lead;
        for j in 0..window {
            // b_j = -(sum_{i=1..j} a_i b_{j-i}) / a_0, b_0 = 1/a_0
            let mut s = Rat::zero();
            for i in 1..=j {
                let a_i = self.coeff(val + i as i64);
                if a_i.is_zero() {
                    continue;
                }
                s += &a_i * &inv[j - i];
            }
            if j == 0 {
                inv.push(lead_inv.clone());
            } else {
                inv.push(-(s * &lead_inv));
            }
        }
        Ok(LaurentQSeries::from_terms(
            inv.into_iter().enumerate().map(|(j, c)| (-val + j as i64, c)),
            precision,
        ))
    }

    /// Integer power by repeated squaring; negative powers invert first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e == 0 {
            let val = self.valuation().unwrap_or(0);
            return Ok(Self::one(self.precision - val));
        }
        let (base, mut k) = if e < 0 {
            (self.invert()?, e.unsigned_abs())
        } else {
            (self.clone(), e.unsigned_abs())
        };
        let mut acc: Option<Self> = None;
        let mut sq = base;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(a) => a.mul(&sq),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            sq = sq.mul(&sq);
        }
        Ok(acc.expect("nonzero exponent"))
    }

    /// Applies `D = q d/dq` raised to the `e`-th power: `a(n) -> n^e a(n)`.
    pub fn apply_qdq_power(&self, e: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(n, _)| **n != 0 || e == 0)
            .map(|(n, c)| {
                let mut f = Rat::one();
                for _ in 0..e {
                    f *= crate::rat_int(*n);
                }
                (*n, c * f)
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        LaurentQSeries { coeffs, precision: self.precision }
    }
}

/// Coefficient-wise sum (operation form).
pub fn series_add(f: &LaurentQSeries, g: &LaurentQSeries) -> LaurentQSeries {
    f.add(g)
}

/// Cauchy product (operation form).
pub fn series_mul(f: &LaurentQSeries, g: &LaurentQSeries) -> LaurentQSeries {
    f.mul(g)
}

/// Multiplicative inverse (operation form).
pub fn series_invert(f: &LaurentQSeries) -> Result<LaurentQSeries> {
    f.invert()
}

/// Integer power (operation form).
pub fn series_pow(f: &LaurentQSeries, e: i64) -> Result<LaurentQSeries> {
    f.pow(e)
}
