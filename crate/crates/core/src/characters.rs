//! Primitive quadratic Dirichlet characters, their local components, sign
//! vectors, the eps-condition and the normalizing factor `s(m)`.
//!
//! A conductor `N` is an odd squarefree number times a two-part in `{1, 4, 8}`.
//! For odd `N` and `4 || N` the primitive quadratic character of conductor `N`
//! is unique; for `8 || N` a choice between `(2/.)` and `(-2/.)` two-parts is
//! recorded. `N = 1` is the trivial character: no local components, no sign
//! vector, `s(m) = 1`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::arith::{factorize, gcd_i64, kronecker};
use crate::{Error, Result};

/// Choice of the two-part character when `8 || N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwoPart {
    /// `(2/.)`, the even character mod 8.
    Plus8,
    /// `(-2/.)`, the odd character mod 8.
    Minus8,
}

/// One local component `chi_p` of the character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalComponent {
    /// The prime `p`.
    pub p: u64,
    /// `N_p`, the largest `p`-power dividing the conductor (`p` itself for odd
    /// `p`; `4` or `8` for `p = 2`).
    pub modulus: u64,
    /// For `p = 2` with modulus 8, which mod-8 character.
    pub two_part: Option<TwoPart>,
}

impl LocalComponent {
    /// Evaluates `chi_p(n)`; zero iff `p | n`.
    pub fn eval(&self, n: i64) -> i32 {
        let m = self.modulus as i64;
        let r = n.rem_euclid(m);
        if self.p == 2 {
            if r % 2 == 0 {
                return 0;
            }
            match self.modulus {
                4 => {
                    // (-4/n) = (-1)^{(n-1)/2}
                    if r % 4 == 1 {
                        1
                    } else {
                        -1
                    }
                }
                8 => match self.two_part.expect("two-part set for modulus 8") {
                    // (2/n): +1 iff n = +-1 mod 8
                    TwoPart::Plus8 => {
                        if r == 1 || r == 7 {
                            1
                        } else {
                            -1
                        }
                    }
                    // (-2/n): +1 iff n = 1, 3 mod 8
                    TwoPart::Minus8 => {
                        if r == 1 || r == 3 {
                            1
                        } else {
                            -1
                        }
                    }
                },
                _ => unreachable!("two-part modulus is 4 or 8"),
            }
        } else {
            kronecker(r, self.p as i64)
        }
    }

    /// `chi_p(-1)`.
    pub fn eval_minus_one(&self) -> i32 {
        self.eval(-1)
    }
}

/// Primitive quadratic Dirichlet character of conductor `N >= 1`, factored
/// into local components. `N = 1` is the trivial character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadCharacter {
    conductor: u64,
    components: Vec<LocalComponent>,
}

impl QuadCharacter {
    /// Builds the character of conductor `n`; `two` selects the two-part when
    /// `8 || n` (and must be `None` otherwise).
    pub fn new(n: u64, two: Option<TwoPart>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("conductor must be positive".into()));
        }
        let mut components = Vec::new();
        if n == 1 {
            if two.is_some() {
                return Err(Error::Parse("trivial character takes no two-part".into()));
            }
            return Ok(QuadCharacter { conductor: 1, components });
        }
        let factors = factorize(n as i64).expect("nonzero");
        let mut two_modulus = 1u64;
        for &(p, e) in &factors {
            if p == 2 {
                two_modulus = 2u64.pow(e);
            } else if e > 1 {
                return Err(Error::Parse(format!(
                    "conductor must be squarefree away from 2, got {p}^{e}"
                )));
            }
        }
        match two_modulus {
            1 => {
                if two.is_some() {
                    return Err(Error::Parse("two-part only applies when 8 divides N".into()));
                }
            }
            4 => {
                if two.is_some() {
                    return Err(Error::Parse("two-part only applies when 8 divides N".into()));
                }
                components.push(LocalComponent { p: 2, modulus: 4, two_part: None });
            }
            8 => {
                let tp = two.ok_or_else(|| {
                    Error::Parse("8 || N requires a two-part choice (+8 or -8)".into())
                })?;
                components.push(LocalComponent { p: 2, modulus: 8, two_part: Some(tp) });
            }
            _ => {
                return Err(Error::Parse(format!(
                    "two-part of the conductor must be 1, 4 or 8, got {two_modulus}"
                )))
            }
        }
        for &(p, _) in factors.iter().filter(|(p, _)| *p != 2) {
            components.push(LocalComponent { p, modulus: p, two_part: None });
        }
        components.sort_by_key(|c| c.p);
        Ok(QuadCharacter { conductor: n, components })
    }

    /// Parses the config string form `N=15` or `N=8,two=+8`.
    pub fn parse_config(s: &str) -> Result<Self> {
        let mut n: Option<u64> = None;
        let mut two: Option<TwoPart> = None;
        for part in s.split(',') {
            let part = part.trim();
            if let Some(v) = part.strip_prefix("N=") {
                n = Some(
                    v.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad conductor in `{s}`")))?,
                );
            } else if let Some(v) = part.strip_prefix("two=") {
                two = Some(match v.trim() {
                    "+8" => TwoPart::Plus8,
                    "-8" => TwoPart::Minus8,
                    other => return Err(Error::Parse(format!("bad two-part `{other}`"))),
                });
            } else if !part.is_empty() {
                return Err(Error::Parse(format!("unrecognized config part `{part}`")));
            }
        }
        let n = n.ok_or_else(|| Error::Parse(format!("missing `N=` in `{s}`")))?;
        QuadCharacter::new(n, two)
    }

    /// Renders the config string form.
    pub fn config_string(&self) -> String {
        match self.two_part() {
            Some(TwoPart::Plus8) => format!("N={},two=+8", self.conductor),
            Some(TwoPart::Minus8) => format!("N={},two=-8", self.conductor),
            None => format!("N={}", self.conductor),
        }
    }

    /// The conductor `N`.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// `true` for the trivial character of conductor 1.
    pub fn is_trivial(&self) -> bool {
        self.conductor == 1
    }

    /// The two-part choice, when `8 || N`.
    pub fn two_part(&self) -> Option<TwoPart> {
        self.components.iter().find(|c| c.modulus == 8).and_then(|c| c.two_part)
    }

    /// Local components, ascending in `p`.
    pub fn components(&self) -> &[LocalComponent] {
        &self.components
    }

    /// The prime divisors of `N`, ascending.
    pub fn primes(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.p).collect()
    }

    /// Local component at `p`, or an error when `p` does not divide `N`.
    pub fn component(&self, p: u64) -> Result<&LocalComponent> {
        self.components
            .iter()
            .find(|c| c.p == p)
            .ok_or(Error::NotLocalPrime { p, conductor: self.conductor })
    }

    /// Evaluates `chi(n) = prod_p chi_p(n)`.
    pub fn eval(&self, n: i64) -> i32 {
        let mut acc = 1;
        for c in &self.components {
            let v = c.eval(n);
            if v == 0 {
                return 0;
            }
            acc *= v;
        }
        acc
    }

    /// Evaluates the local component `chi_p(n)`.
    pub fn eval_local(&self, p: u64, n: i64) -> Result<i32> {
        Ok(self.component(p)?.eval(n))
    }

    /// `chi(-1)`: `+1` for even characters, `-1` for odd.
    pub fn parity(&self) -> i32 {
        self.eval(-1)
    }
}

/// A choice of sign per prime divisor of the conductor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    /// `(p, sign)` pairs, ascending in `p`; signs are `+1` or `-1`.
    signs: Vec<(u64, i8)>,
}

impl SignVector {
    /// Builds a sign vector for `chi` from signs listed in ascending-prime order.
    pub fn new(chi: &QuadCharacter, signs: &[i8]) -> Result<Self> {
        let primes = chi.primes();
        if signs.len() != primes.len() {
            return Err(Error::Parse(format!(
                "expected {} signs for conductor {}, got {}",
                primes.len(),
                chi.conductor(),
                signs.len()
            )));
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::Parse("signs must be +1 or -1".into()));
        }
        Ok(SignVector { signs: primes.into_iter().zip(signs.iter().copied()).collect() })
    }

    /// The empty sign vector (conductor 1).
    pub fn empty() -> Self {
        SignVector { signs: Vec::new() }
    }

    /// All `2^omega(N)` sign vectors for `chi`, in lexicographic order with
    /// `+1` before `-1` per coordinate.
    pub fn all(chi: &QuadCharacter) -> Vec<SignVector> {
        let primes = chi.primes();
        let count = 1usize << primes.len();
        let mut out = Vec::with_capacity(count);
        for mask in 0..count {
            let signs: Vec<(u64, i8)> = primes
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, if mask & (1 << i) == 0 { 1i8 } else { -1i8 }))
                .collect();
            out.push(SignVector { signs });
        }
        out
    }

    /// Parses `+1`/`-1` (single prime), `all` is rejected here, or a compact
    /// string of `+`/`-` per prime in ascending order, e.g. `+-` for
    /// `(+1 at 3, -1 at 5)` when `N = 15`.
    pub fn parse(chi: &QuadCharacter, s: &str) -> Result<Self> {
        let primes = chi.primes();
        let s = s.trim();
        if primes.is_empty() && matches!(s, "()" | "" | "+1" | "-1" | "+" | "-") {
            return Ok(SignVector::empty());
        }
        let compact: Vec<i8> = match s {
            "+1" | "+" => alloc::vec![1; primes.len().max(1)],
            "-1" | "-" => alloc::vec![-1; primes.len().max(1)],
            other => other
                .chars()
                .map(|c| match c {
                    '+' => Ok(1i8),
                    '-' => Ok(-1i8),
                    _ => Err(Error::Parse(format!("bad sign character `{c}` in `{s}`"))),
                })
                .collect::<Result<Vec<i8>>>()?,
        };
        if primes.is_empty() {
            return Ok(SignVector::empty());
        }
        SignVector::new(chi, &compact)
    }

    /// Compact display form: `+`/`-` per prime ascending; `()` when empty.
    pub fn compact_string(&self) -> String {
        if self.signs.is_empty() {
            return "()".to_string();
        }
        self.signs.iter().map(|(_, s)| if *s > 0 { '+' } else { '-' }).collect()
    }

    /// The `(p, sign)` pairs, ascending in `p`.
    pub fn pairs(&self) -> &[(u64, i8)] {
        &self.signs
    }

    /// The sign at `p`.
    pub fn sign_at(&self, p: u64) -> Result<i8> {
        self.signs
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, s)| *s)
            .ok_or(Error::NotLocalPrime { p, conductor: 0 })
    }
}

/// The dual sign vector: `eps*_p = chi_p(-1) eps_p`.
pub fn dual_sign(chi: &QuadCharacter, eps: &SignVector) -> SignVector {
    let signs = eps
        .pairs()
        .iter()
        .map(|&(p, s)| {
            let cm1 = chi.component(p).expect("sign vector matches chi").eval_minus_one();
            (p, (s as i32 * cm1) as i8)
        })
        .collect();
    SignVector { signs }
}

/// The normalizing factor `s(m) = 2^{omega(gcd(m, N))}`, with `gcd(0, N) = N`.
pub fn s_factor(m: i64, n: u64) -> u64 {
    let g = gcd_i64(m, n as i64);
    let g = if g == 0 { n as i64 } else { g };
    1u64 << crate::arith::omega(g)
}

/// The eps-condition: `true` iff `chi_p(n) != -eps_p` for every `p | N`,
/// i.e. a coefficient at exponent `n` is allowed to be nonzero.
pub fn epsilon_allows(chi: &QuadCharacter, eps: &SignVector, n: i64) -> bool {
    for &(p, s) in eps.pairs() {
        let v = chi.component(p).expect("sign vector matches chi").eval(n);
        if v == -(s as i32) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(n: u64) -> QuadCharacter {
        QuadCharacter::new(n, if n % 8 == 0 { Some(TwoPart::Plus8) } else { None }).unwrap()
    }

    #[test]
    fn local_values_mod_15() {
        let c = chi(15);
        assert_eq!(c.eval(2), 1);
        assert_eq!(c.eval_local(3, 2).unwrap(), -1);
        assert_eq!(c.eval_local(5, 2).unwrap(), -1);
        assert_eq!(c.eval(3), 0);
        assert_eq!(c.eval_local(7, 2).unwrap_err(),
            crate::Error::NotLocalPrime { p: 7, conductor: 15 });
    }

    #[test]
    fn mod8_characters() {
        let c = chi(8);
        assert_eq!(c.eval(7), 1); // 7 = -1 mod 8, (2/.) is even
        assert_eq!(c.eval(3), -1);
        assert_eq!(c.eval(2), 0);
        assert_eq!(c.parity(), 1);
        let cm = QuadCharacter::new(8, Some(TwoPart::Minus8)).unwrap();
        assert_eq!(cm.eval(3), 1);
        assert_eq!(cm.eval(7), -1);
        assert_eq!(cm.parity(), -1);
    }

    #[test]
    fn product_of_locals_is_global() {
        for n in [5u64, 13, 15, 8, 12, 40] {
            let c = chi(n);
            for x in -50i64..200 {
                let mut prod = 1i32;
                let mut zero = false;
                for comp in c.components() {
                    let v = comp.eval(x);
                    if v == 0 {
                        zero = true;
                    }
                    prod *= v;
                }
                let expected = if zero { 0 } else { prod };
                assert_eq!(c.eval(x), expected, "N={n} x={x}");
            }
        }
    }

    #[test]
    fn parity_is_product_of_local_parities() {
        for n in [5u64, 13, 15, 8, 12] {
            let c = chi(n);
            let prod: i32 = c.components().iter().map(|l| l.eval_minus_one()).product();
            assert_eq!(c.parity(), prod);
        }
        assert_eq!(chi(5).parity(), 1);
        assert_eq!(chi(15).parity(), -1);
        assert_eq!(chi(12).parity(), 1); // (-4/.)(./3): odd*odd
    }

    #[test]
    fn dual_sign_examples() {
        // N=8, eps=+1: eps* = +1.
        let c8 = chi(8);
        let eps = SignVector::parse(&c8, "+1").unwrap();
        assert_eq!(dual_sign(&c8, &eps).compact_string(), "+");
        // N=15: eps1 = (-1,-1) and eps2 = (+1,-1) are dual to each other.
        let c15 = chi(15);
        let eps1 = SignVector::parse(&c15, "--").unwrap();
        let eps2 = SignVector::parse(&c15, "+-").unwrap();
        assert_eq!(dual_sign(&c15, &eps1), eps2);
        assert_eq!(dual_sign(&c15, &eps2), eps1);
        // Involution on every sign vector.
        for n in [5u64, 8, 13, 15, 12] {
            let c = chi(n);
            for eps in SignVector::all(&c) {
                assert_eq!(dual_sign(&c, &dual_sign(&c, &eps)), eps);
            }
        }
    }

    #[test]
    fn s_factor_values() {
        assert_eq!(s_factor(0, 8), 2);
        assert_eq!(s_factor(-1, 8), 1);
        assert_eq!(s_factor(-10, 15), 2);
        assert_eq!(s_factor(0, 15), 4);
        assert_eq!(s_factor(0, 1), 1);
        assert_eq!(s_factor(7, 1), 1);
        // Periodicity mod N.
        for n in [5i64, 8, 13, 15] {
            for m in -40..40 {
                assert_eq!(
                    s_factor(m, n as u64),
                    s_factor(m.rem_euclid(n), n as u64),
                    "m={m} N={n}"
                );
            }
        }
    }

    #[test]
    fn epsilon_condition_examples() {
        let c8 = chi(8);
        let plus = SignVector::parse(&c8, "+1").unwrap();
        assert!(!epsilon_allows(&c8, &plus, 3));
        assert!(epsilon_allows(&c8, &plus, 7));
        assert!(epsilon_allows(&c8, &plus, 2));

        let c13 = chi(13);
        let p13 = SignVector::parse(&c13, "+1").unwrap();
        let m13 = SignVector::parse(&c13, "-1").unwrap();
        assert!(epsilon_allows(&c13, &p13, 9));
        assert!(epsilon_allows(&c13, &m13, 7));
        assert!(!epsilon_allows(&c13, &p13, 7));
    }

    #[test]
    fn config_string_round_trip() {
        for s in ["N=15", "N=8,two=+8", "N=8,two=-8", "N=5", "N=1", "N=12"] {
            let c = QuadCharacter::parse_config(s).unwrap();
            assert_eq!(c.config_string(), *s);
        }
        assert!(QuadCharacter::parse_config("N=8").is_err());
        assert!(QuadCharacter::parse_config("N=9").is_err());
        assert!(QuadCharacter::parse_config("N=16").is_err());
        assert!(QuadCharacter::parse_config("N=15,two=+8").is_err());
    }

    #[test]
    fn trivial_character_bypass() {
        let c1 = QuadCharacter::new(1, None).unwrap();
        assert!(c1.is_trivial());
        assert_eq!(c1.eval(7), 1);
        assert_eq!(c1.parity(), 1);
        let eps = SignVector::parse(&c1, "all-ish").err();
        assert!(eps.is_some());
        let empty = SignVector::empty();
        assert!(epsilon_allows(&c1, &empty, 42));
        assert_eq!(s_factor(5, 1), 1);
    }
}
