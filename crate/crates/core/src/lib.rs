//! Exact arithmetic for weakly holomorphic modular forms with sign vectors.
//!
//! The crate computes reduced-modular-form grids of the subspaces
//! `A^eps(N, k, chi)` cut out of weakly holomorphic modular forms by a sign
//! vector `eps`, entirely over arbitrary-precision rationals, and provides
//! machine checkers for the structural identities these grids satisfy:
//! Zagier duality between weights `k` and `2-k`, constant-term divisibility
//! driven by Dirichlet L-values, Hecke-operator and differential-operator
//! divisibility, and the discriminant-form / Weil-representation side of the
//! scalar-to-vector-valued correspondence.
//!
//! Module map:
//! - [`arith`]: integers, Kronecker symbols, factorization, cyclotomic numbers
//! - [`qseries`]: sparse Laurent series in `q` over exact rationals
//! - [`characters`]: primitive quadratic characters, sign vectors, `s(m)`
//! - [`lvalues`]: Bernoulli numbers, `B_{k,chi}`, `L(1-k, chi)` denominators
//! - [`formgen`]: eta quotients, Eisenstein series, spanning pools per level
//! - [`reduced`]: eps-subspace solving, reduced grids, Sturm-style certification
//! - [`operators`]: Hecke operators `T(r)` and the differential operator
//! - [`discform`]: discriminant forms, Weil representation, the pairing
//! - [`theorems`]: executable verifiers producing divisibility reports
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `epsgrid-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod characters;
pub mod discform;
pub mod error;
pub mod formgen;
pub mod lvalues;
pub mod operators;
pub mod presets;
pub mod qseries;
pub mod reduced;
pub mod theorems;

pub use error::{Error, Result};

/// Exact rational scalar used for every Fourier coefficient and L-value.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

use num_traits::{One, Signed, Zero};

/// `true` iff `x` is an integer.
pub fn rat_is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// `true` iff `d` divides `x` exactly, i.e. `x / d` is an integer.
///
/// `d` may be any nonzero rational; the callers use positive integers.
pub fn rat_divisible(x: &Rat, d: &Rat) -> bool {
    assert!(!d.is_zero(), "divisibility by zero");
    rat_is_integer(&(x / d))
}

/// Rational from an integer pair, panicking on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0);
    Rat::new(Int::from(num), Int::from(den))
}

/// Rational from an `i64`.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(Int::from(num))
}

/// Formats a rational as `num` or `num/den`, the form used in file formats.
pub fn rat_to_string(x: &Rat) -> alloc::string::String {
    use alloc::format;
    if rat_is_integer(x) {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `num` or `num/den` (exact decimal strings) back into a rational.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let parse_int = |t: &str| -> Result<Int> {
        t.trim()
            .parse::<Int>()
            .map_err(|_| Error::Parse(alloc::format!("bad integer `{t}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse(alloc::format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn rat_sign(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
