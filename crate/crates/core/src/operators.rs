//! Hecke operators `T(r)` with `(r, N) = 1` on q-expansions, the sign-vector
//! image map, membership in `R_0`, and the differential operator `D^{1-k}`.
//!
//! `T(p)` for `p | N` is deliberately rejected: it does not act on the
//! sign-vector subspaces.

use num_traits::{One, Zero};

use crate::arith::gcd_i64;
use crate::characters::{QuadCharacter, SignVector};
use crate::qseries::LaurentQSeries;
use crate::{rat_int, Error, Rat, Result};

/// Context for a Hecke operator `T(r)` on `A(N, k, chi)`.
#[derive(Debug, Clone)]
pub struct HeckeContext {
    /// The character (conductor = level `N`).
    pub chi: QuadCharacter,
    /// Weight `k` (any integer; `d^{k-1}` is exact rational arithmetic).
    pub weight: i64,
    /// Operator index, coprime to `N`.
    pub index: u64,
}

impl HeckeContext {
    /// Builds the context, rejecting indices sharing a factor with the level.
    pub fn new(chi: QuadCharacter, weight: i64, index: u64) -> Result<Self> {
        let n = chi.conductor();
        if index == 0 || gcd_i64(index as i64, n as i64) != 1 {
            return Err(Error::HeckeIndexNotCoprime { r: index, level: n });
        }
        Ok(HeckeContext { chi, weight, index })
    }
}

/// `d^{k-1}` as an exact rational for any integer `k`.
fn power_k_minus_1(d: i64, k: i64) -> Rat {
    let e = k - 1;
    let mut acc = Rat::one();
    for _ in 0..e.unsigned_abs() {
        acc *= rat_int(d);
    }
    if e < 0 {
        Rat::one() / acc
    } else {
        acc
    }
}

/// Applies `T(r)`: output coefficients
/// `b(n) = sum_{0 < d | (r, n)} chi(d) d^{k-1} a(r n / d^2)`,
/// with the pole part handled by the same formula. The output precision is
/// `floor(P / r)`; the pole can deepen to `r * val(f)`.
pub fn hecke_t(f: &LaurentQSeries, ctx: &HeckeContext) -> LaurentQSeries {
    let r = ctx.index as i64;
    let out_prec = f.precision().div_euclid(r);
    let val = match f.valuation() {
        Some(v) => v,
        None => return LaurentQSeries::zero(out_prec),
    };
    let lo = if val < 0 { val * r } else { val.div_euclid(r) };
    let mut terms: alloc::vec::Vec<(i64, Rat)> = alloc::vec::Vec::new();
    for n in lo..out_prec {
        let mut b = Rat::zero();
        let g = if n == 0 { r } else { gcd_i64(r, n) };
        for d in crate::formgen::divisors(g as u64) {
            let d = d as i64;
            let ch = ctx.chi.eval(d);
            if ch == 0 {
                continue;
            }
            let arg_num = r * n;
            debug_assert_eq!(arg_num % (d * d), 0);
            let a = f.coeff(arg_num / (d * d));
            if a.is_zero() {
                continue;
            }
            b += rat_int(ch as i64) * power_k_minus_1(d, ctx.weight) * a;
        }
        if !b.is_zero() {
            terms.push((n, b));
        }
    }
    LaurentQSeries::from_terms(terms, out_prec)
}

/// The sign vector of the image: `T(r)` maps the eps-subspace into the
/// eps'-subspace with `eps'_p = eps_p chi_p(r)`.
pub fn sign_image(chi: &QuadCharacter, eps: &SignVector, r: u64) -> Result<SignVector> {
    if gcd_i64(r as i64, chi.conductor() as i64) != 1 {
        return Err(Error::HeckeIndexNotCoprime { r, level: chi.conductor() });
    }
    let signs: alloc::vec::Vec<i8> = eps
        .pairs()
        .iter()
        .map(|&(p, s)| {
            let c = chi.component(p).expect("eps matches chi").eval(r as i64);
            debug_assert!(c != 0);
            (s as i32 * c) as i8
        })
        .collect();
    SignVector::new(chi, &signs)
}

/// `true` iff `chi_p(r) = 1` for every `p | N` (the index set whose Hecke
/// operators stabilize every eps-subspace).
pub fn in_r0(chi: &QuadCharacter, r: u64) -> bool {
    assert!(r > 0);
    chi.components().iter().all(|c| c.eval(r as i64) == 1)
}

/// The differential operator `D^{1-k}` with `D = q d/dq`, for `k <= 0`:
/// `a(n) -> n^{1-k} a(n)`. The constant term always vanishes.
pub fn differential_power(f: &LaurentQSeries, k: i64) -> Result<LaurentQSeries> {
    if k > 0 {
        return Err(Error::PositiveWeight { weight: k });
    }
    Ok(f.apply_qdq_power((1 - k) as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn chi15() -> QuadCharacter {
        QuadCharacter::parse_config("N=15").unwrap()
    }

    /// g1 = eta(3t)^3 eta(5t)^3 in S(15, 3, chi).
    fn g1(prec: i64) -> LaurentQSeries {
        crate::formgen::EtaQuotient::new(15, &[(3, 3), (5, 3)])
            .unwrap()
            .expansion(prec)
            .unwrap()
    }

    /// g2 = eta(t)^3 eta(15t)^3 in S(15, 3, chi).
    fn g2(prec: i64) -> LaurentQSeries {
        crate::formgen::EtaQuotient::new(15, &[(1, 3), (15, 3)])
            .unwrap()
            .expansion(prec)
            .unwrap()
    }

    #[test]
    fn t2_swaps_g1_and_g2() {
        let chi = chi15();
        let ctx = HeckeContext::new(chi, 3, 2).unwrap();
        let prec = 80;
        let a = g1(prec);
        let b = g2(prec);
        let a_t2 = hecke_t(&a, &ctx);
        let b_t2 = hecke_t(&b, &ctx);
        for n in 0..a_t2.precision() {
            assert_eq!(a_t2.coeff(n), b.coeff(n), "g1|T(2) at q^{n}");
        }
        for n in 0..b_t2.precision() {
            assert_eq!(b_t2.coeff(n), a.coeff(n), "g2|T(2) at q^{n}");
        }
    }

    #[test]
    fn t1_is_identity() {
        let chi = chi15();
        let ctx = HeckeContext::new(chi, 3, 1).unwrap();
        let f = g1(40);
        let tf = hecke_t(&f, &ctx);
        assert_eq!(tf, f);
    }

    #[test]
    fn t4_multiplicativity_on_g1() {
        // 4 is in R_0 for N=15 and a(4n) = a(4) a(n) for odd n; in particular
        // a(36) = a(4) a(9) = -27.
        let chi = chi15();
        assert!(in_r0(&chi, 4));
        let a = g1(77);
        assert_eq!(a.coeff(36), rat_int(-27));
        assert_eq!(a.coeff(4) * a.coeff(9), rat_int(-27));
        for n in (1..19).step_by(2) {
            assert_eq!(a.coeff(4 * n), a.coeff(4) * a.coeff(n), "n={n}");
        }
    }

    #[test]
    fn r0_membership() {
        let chi = chi15();
        assert!(in_r0(&chi, 4));
        assert!(in_r0(&chi, 19));
        assert!(!in_r0(&chi, 2));
    }

    #[test]
    fn sign_images() {
        let chi = chi15();
        let eps4 = SignVector::parse(&chi, "++").unwrap();
        let eps1 = SignVector::parse(&chi, "--").unwrap();
        // chi_3(2) = chi_5(2) = -1: T(2) interchanges the (+,+) and (-,-) spaces.
        assert_eq!(sign_image(&chi, &eps4, 2).unwrap(), eps1);
        assert_eq!(sign_image(&chi, &eps1, 2).unwrap(), eps4);
        // r in R_0 fixes every sign vector; so does r = 1.
        assert_eq!(sign_image(&chi, &eps4, 4).unwrap(), eps4);
        assert_eq!(sign_image(&chi, &eps1, 19).unwrap(), eps1);
        assert_eq!(sign_image(&chi, &eps4, 1).unwrap(), eps4);
    }

    #[test]
    fn index_sharing_a_factor_with_the_level_is_rejected() {
        let chi = chi15();
        assert!(matches!(
            HeckeContext::new(chi.clone(), 3, 5),
            Err(Error::HeckeIndexNotCoprime { r: 5, level: 15 })
        ));
        assert!(sign_image(&chi, &SignVector::parse(&chi, "++").unwrap(), 3).is_err());
    }

    #[test]
    fn hecke_deepens_poles_by_the_index() {
        // T(3) on a q^{-2} pole reaches q^{-6}: the d = r term contributes
        // a(val) at n = r * val.
        let chi8 = QuadCharacter::parse_config("N=8,two=+8").unwrap();
        let ctx = HeckeContext::new(chi8, 0, 3).unwrap();
        let f = LaurentQSeries::from_terms([(-2, rat_int(1)), (1, rat_int(5))], 30);
        let tf = hecke_t(&f, &ctx);
        // chi(3) = -1 at level 8; b(-6) = chi(3) 3^{-1} a(-2).
        assert_eq!(tf.coeff(-6), rat(-1, 3));
        // b(-2): d | gcd(3, 2) = 1: a(-6) = 0.
        assert_eq!(tf.coeff(-2), rat_int(0));
        assert_eq!(tf.coeff(3), f.coeff(9) + rat(-1, 3) * f.coeff(1));
        assert_eq!(tf.precision(), 10);
    }

    #[test]
    fn differential_power_examples() {
        // k = 0 on a weight-0 form: coefficient of q^n multiplies by n.
        let f = LaurentQSeries::from_terms([(-5, rat(1, 2)), (0, rat_int(15)), (1, rat_int(275))], 12);
        let d = differential_power(&f, 0).unwrap();
        assert_eq!(d.coeff(1), rat_int(275));
        assert_eq!(d.coeff(0), rat_int(0));
        assert_eq!(d.coeff(-5), rat(-5, 2));
        // k = -1: leading 1/2 q^{-10} becomes 50 q^{-10}.
        let g = LaurentQSeries::monomial(-10, rat(1, 2), 5);
        let dg = differential_power(&g, -1).unwrap();
        assert_eq!(dg.coeff(-10), rat_int(50));
        assert!(differential_power(&f, 1).is_err());
    }

    #[test]
    fn commutativity_in_r0() {
        // T(4) T(19) = T(76) on g1 to matched precision.
        let chi = chi15();
        let a = g1(200);
        let t4 = HeckeContext::new(chi.clone(), 3, 4).unwrap();
        let t19 = HeckeContext::new(chi.clone(), 3, 19).unwrap();
        let t76 = HeckeContext::new(chi, 3, 76).unwrap();
        let lhs = hecke_t(&hecke_t(&a, &t4), &t19);
        let rhs = hecke_t(&a, &t76);
        let prec = lhs.precision().min(rhs.precision());
        for n in 0..prec {
            assert_eq!(lhs.coeff(n), rhs.coeff(n), "at q^{n}");
        }
    }
}
