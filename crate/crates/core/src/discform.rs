//! Discriminant forms built from `(chi, eps)`, signatures via the Milgram
//! Gauss sum, Weil representation matrices, the scalar-to-vector lift, and
//! the pairing whose constant term drives Zagier duality.
//!
//! Jordan components: for odd `p | N` the group `Z/p` with `Q(x) = a x^2 / p`
//! where `a` is the least positive residue with `chi_p(a N/p) = eps_p`; for
//! `4 || N` the group `(Z/2)^2` with `Q = t (x^2 + y^2)/4`,
//! `t = eps_2 chi_2(N/4)`; for `8 || N` the group `Z/2 x Z/4` with
//! `Q = t1 x^2/4 + t2 y^2/8`, the pair `(t1, t2)` canonical (lexicographic
//! smallest admissible). The two admissible `8 || N` options give isomorphic
//! forms; this is checked, not assumed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::{CycloRing, Cyclotomic};
use crate::characters::{s_factor, QuadCharacter, SignVector};
use crate::qseries::LaurentQSeries;
use crate::{rat_int, Error, Int, Rat, Result};

/// One Jordan component of a discriminant form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JordanComponent {
    /// `Z/p` with `Q(x) = a x^2 / p`, `p` an odd prime, `0 < a < p`.
    OddPrime { p: u64, a: u64 },
    /// `(Z/2)^2` with `Q(x, y) = t (x^2 + y^2) / 4`, `t` in `{1, -1}`.
    Four { t: i8 },
    /// `Z/2 x Z/4` with `Q(x, y) = t1 x^2 / 4 + t2 y^2 / 8`.
    Eight { t1: i8, t2: i8 },
}

impl JordanComponent {
    fn moduli(&self) -> &'static [u64] {
        match self {
            JordanComponent::OddPrime { .. } => &[0], // placeholder, see moduli_vec
            JordanComponent::Four { .. } => &[2, 2],
            JordanComponent::Eight { .. } => &[2, 4],
        }
    }

    fn order(&self) -> u64 {
        match self {
            JordanComponent::OddPrime { p, .. } => *p,
            JordanComponent::Four { .. } => 4,
            JordanComponent::Eight { .. } => 8,
        }
    }

    /// Q at a coordinate slice, as a rational mod 1.
    fn q_value(&self, coords: &[u64]) -> Rat {
        match self {
            JordanComponent::OddPrime { p, a } => {
                let x = coords[0] as i64;
                rat_mod1(Rat::new(Int::from(*a as i64 * x * x), Int::from(*p as i64)))
            }
            JordanComponent::Four { t } => {
                let (x, y) = (coords[0] as i64, coords[1] as i64);
                rat_mod1(Rat::new(Int::from(*t as i64 * (x * x + y * y)), Int::from(4)))
            }
            JordanComponent::Eight { t1, t2 } => {
                let (x, y) = (coords[0] as i64, coords[1] as i64);
                let q1 = Rat::new(Int::from(*t1 as i64 * x * x), Int::from(4));
                let q2 = Rat::new(Int::from(*t2 as i64 * y * y), Int::from(8));
                rat_mod1(q1 + q2)
            }
        }
    }

    fn negated(&self) -> JordanComponent {
        match *self {
            JordanComponent::OddPrime { p, a } => JordanComponent::OddPrime { p, a: p - a },
            JordanComponent::Four { t } => JordanComponent::Four { t: -t },
            JordanComponent::Eight { t1, t2 } => JordanComponent::Eight { t1: -t1, t2: -t2 },
        }
    }
}

fn rat_mod1(x: Rat) -> Rat {
    let f = x.floor();
    x - f
}

/// A finite quadratic module `(D, Q)` built from `(chi, eps)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantForm {
    components: Vec<JordanComponent>,
    /// Cyclic moduli of the underlying group, component by component.
    moduli: Vec<u64>,
    /// Strides for mixed-radix element indexing.
    strides: Vec<u64>,
    order: u64,
}

impl DiscriminantForm {
    fn from_components(components: Vec<JordanComponent>) -> Self {
        let mut moduli: Vec<u64> = Vec::new();
        for c in &components {
            match c {
                JordanComponent::OddPrime { p, .. } => moduli.push(*p),
                _ => moduli.extend_from_slice(c.moduli()),
            }
        }
        let mut strides = alloc::vec![1u64; moduli.len()];
        for i in (0..moduli.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1];
        }
        let order = moduli.iter().product::<u64>().max(1);
        DiscriminantForm { components, moduli, strides, order }
    }

    /// Builds the discriminant form determined by `(chi, eps)`.
    pub fn build(chi: &QuadCharacter, eps: &SignVector) -> Result<Self> {
        let n = chi.conductor();
        let mut components = Vec::new();
        for local in chi.components() {
            let sign = eps.sign_at(local.p).map_err(|_| {
                Error::DiscriminantForm(format!("sign vector lacks p = {}", local.p))
            })? as i32;
            match (local.p, local.modulus) {
                (2, 4) => {
                    let t = sign * local.eval((n / 4) as i64);
                    debug_assert!(t == 1 || t == -1);
                    components.push(JordanComponent::Four { t: t as i8 });
                }
                (2, 8) => {
                    let pair = eight_part_options(chi, sign)?
                        .into_iter()
                        .next()
                        .ok_or_else(|| {
                            Error::DiscriminantForm("no admissible (t1, t2) pair".into())
                        })?;
                    components.push(JordanComponent::Eight { t1: pair.0, t2: pair.1 });
                }
                (p, _) => {
                    let np = (n / p) as i64;
                    let a = (1..p)
                        .find(|&a| local.eval(a as i64 * np) == sign)
                        .ok_or_else(|| {
                            Error::DiscriminantForm(format!("no admissible residue at p = {p}"))
                        })?;
                    components.push(JordanComponent::OddPrime { p, a });
                }
            }
        }
        Ok(Self::from_components(components))
    }

    /// Both admissible `8 || N` variants of the discriminant form (equal when
    /// `8` does not divide the conductor).
    pub fn build_all_eight_variants(chi: &QuadCharacter, eps: &SignVector) -> Result<Vec<Self>> {
        let base = Self::build(chi, eps)?;
        let Some(idx) =
            base.components.iter().position(|c| matches!(c, JordanComponent::Eight { .. }))
        else {
            return Ok(alloc::vec![base]);
        };
        let sign = eps.sign_at(2).expect("8-part present") as i32;
        let mut out = Vec::new();
        for (t1, t2) in eight_part_options(chi, sign)? {
            let mut comps = base.components.clone();
            comps[idx] = JordanComponent::Eight { t1, t2 };
            out.push(Self::from_components(comps));
        }
        Ok(out)
    }

    /// The dual form: same group, quadratic form `-Q`.
    pub fn dual(&self) -> Self {
        Self::from_components(self.components.iter().map(|c| c.negated()).collect())
    }

    /// The Jordan components.
    pub fn components(&self) -> &[JordanComponent] {
        &self.components
    }

    /// Number of elements `|D|` (equals the conductor).
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coordinates of the element with the given index (mixed radix).
    pub fn coords(&self, idx: u64) -> Vec<u64> {
        debug_assert!(idx < self.order);
        self.moduli
            .iter()
            .zip(&self.strides)
            .map(|(m, s)| (idx / s) % m)
            .collect()
    }

    fn index_of(&self, coords: &[u64]) -> u64 {
        coords
            .iter()
            .zip(self.moduli.iter())
            .zip(&self.strides)
            .map(|((c, m), s)| (c % m) * s)
            .sum()
    }

    /// Element sum by index.
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let ca = self.coords(a);
        let cb = self.coords(b);
        let sum: Vec<u64> =
            ca.iter().zip(&cb).zip(&self.moduli).map(|((x, y), m)| (x + y) % m).collect();
        self.index_of(&sum)
    }

    /// Element negation by index.
    pub fn neg(&self, a: u64) -> u64 {
        let ca = self.coords(a);
        let neg: Vec<u64> = ca.iter().zip(&self.moduli).map(|(x, m)| (m - x) % m).collect();
        self.index_of(&neg)
    }

    /// `Q(gamma)` as a rational in `[0, 1)`.
    pub fn q_value(&self, idx: u64) -> Rat {
        let coords = self.coords(idx);
        let mut acc = Rat::zero();
        let mut at = 0usize;
        for c in &self.components {
            let width = match c {
                JordanComponent::OddPrime { .. } => 1,
                _ => 2,
            };
            acc += c.q_value(&coords[at..at + width]);
            at += width;
        }
        rat_mod1(acc)
    }

    /// Bilinear form `(gamma, delta) = Q(gamma + delta) - Q(gamma) - Q(delta)`
    /// as a rational in `[0, 1)`.
    pub fn bilinear(&self, a: u64, b: u64) -> Rat {
        rat_mod1(self.q_value(self.add(a, b)) - self.q_value(a) - self.q_value(b))
    }

    /// The multiset of `Q` values over all elements, sorted.
    pub fn q_multiset(&self) -> Vec<Rat> {
        let mut v: Vec<Rat> = (0..self.order).map(|i| self.q_value(i)).collect();
        v.sort();
        v
    }

    /// `N Q(gamma) mod N` residues, one per element index.
    pub fn residues(&self) -> Vec<u64> {
        let n = self.order as i64;
        (0..self.order)
            .map(|i| {
                let q = self.q_value(i) * rat_int(n);
                debug_assert!(crate::rat_is_integer(&q));
                let r: i64 = q.numer().try_into().expect("small residue");
                r.rem_euclid(n) as u64
            })
            .collect()
    }

    /// The cyclotomic ring in which all exact computations for this form run.
    pub fn ring(&self) -> Result<Rc<CycloRing>> {
        let m = num_integer::Integer::lcm(&8u64, &self.order.max(1));
        CycloRing::new(m)
    }

    /// Signature `r mod 8` via the Milgram identity
    /// `sum_gamma e(Q(gamma)) = sqrt(|D|) e(r/8)`, verified exactly in
    /// cyclotomic arithmetic.
    pub fn signature(&self) -> Result<u8> {
        let ring = self.ring()?;
        let gauss = self.milgram_sum(&ring)?;
        let sqrt = ring.sqrt_exact(self.order.max(1));
        for r in 0..8u8 {
            let rhs = ring.mul(&sqrt, &ring.e_frac(r as i64, 8));
            if gauss == rhs {
                return Ok(r);
            }
        }
        Err(Error::DiscriminantForm(
            "Milgram identity fails for every residue: degenerate form".into(),
        ))
    }

    /// `sum_gamma e(Q(gamma))` in the given ring.
    pub fn milgram_sum(&self, ring: &Rc<CycloRing>) -> Result<Cyclotomic> {
        let mut acc = ring.zero();
        for i in 0..self.order {
            let q = self.q_value(i);
            let den: i64 = q.denom().try_into().map_err(|_| {
                Error::DiscriminantForm("Q denominator exceeds machine range".into())
            })?;
            let num: i64 = q.numer().try_into().map_err(|_| {
                Error::DiscriminantForm("Q numerator exceeds machine range".into())
            })?;
            acc = ring.add(&acc, &ring.e_frac(num, den));
        }
        Ok(acc)
    }

    /// Weil representation generators as exact cyclotomic matrices:
    /// `rho_T = diag(e(Q(gamma)))` and
    /// `rho_S[g][d] = (i^{-r/2} / sqrt(N)) e(-(g, d))`.
    /// Rejects odd signatures.
    pub fn weil_matrices(&self) -> Result<WeilMatrices> {
        let r = self.signature()?;
        if r % 2 != 0 {
            return Err(Error::DiscriminantForm(format!("odd signature {r}")));
        }
        let ring = self.ring()?;
        let n = self.order;
        let size = n as usize;
        let rho_t: Vec<Cyclotomic> = (0..n)
            .map(|i| {
                let q = self.q_value(i);
                e_of_rat(&ring, &q)
            })
            .collect();
        // scalar i^{-r/2} / sqrt(N) = i^{-r/2} sqrt(N) / N
        let sqrt = ring.sqrt_exact(n);
        let i_pow = ring.e_frac(-(r as i64 / 2), 4);
        let scalar = ring.div_rat(&ring.mul(&i_pow, &sqrt), &rat_int(n as i64));
        let mut rho_s: Vec<Vec<Cyclotomic>> = Vec::with_capacity(size);
        for g in 0..n {
            let mut row = Vec::with_capacity(size);
            for d in 0..n {
                let b = rat_mod1(-self.bilinear(g, d));
                row.push(ring.mul(&scalar, &e_of_rat(&ring, &b)));
            }
            rho_s.push(row);
        }
        Ok(WeilMatrices { ring, size, rho_t, rho_s, signature: r })
    }

    /// Human-readable component summary, e.g. `Z/3(a=2) + Z/5(a=2)`.
    pub fn describe(&self) -> String {
        use alloc::string::ToString;
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| match c {
                JordanComponent::OddPrime { p, a } => format!("Z/{p}(a={a})"),
                JordanComponent::Four { t } => format!("(Z/2)^2(t={t})"),
                JordanComponent::Eight { t1, t2 } => format!("Z/2xZ/4(t1={t1},t2={t2})"),
            })
            .collect();
        if parts.is_empty() {
            "trivial".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Admissible `(t1, t2)` pairs for the `8 || N` two-part, lexicographically
/// ordered (numeric order on `t1` then `t2`).
fn eight_part_options(chi: &QuadCharacter, sign: i32) -> Result<Vec<(i8, i8)>> {
    let n = chi.conductor();
    let local = chi.component(2)?;
    let chi2_minus1 = local.eval_minus_one();
    let mut out = Vec::new();
    for t1 in [-1i8, 1] {
        for t2 in [-3i8, -1, 1, 3] {
            // Parity condition: chi_2(-1) = (-1)^{(t1+t2)/2}. (Restricting to
            // e(-(t1+t2)/8) = chi_2(-1) instead would leave the classes with
            // chi_2(t2 N/8) = -1 without any admissible pair at all; the
            // corrected form is pinned by the residue sets {N Q(gamma)} and
            // the Milgram signatures of the four isomorphism classes.)
            let s = (t1 + t2) as i64;
            debug_assert_eq!(s.rem_euclid(2), 0);
            let sign_of_e = if s.rem_euclid(4) == 0 { 1 } else { -1 };
            if sign_of_e != chi2_minus1 {
                continue;
            }
            if local.eval(t2 as i64 * (n / 8) as i64) != sign {
                continue;
            }
            out.push((t1, t2));
        }
    }
    if out.is_empty() {
        return Err(Error::DiscriminantForm("no admissible (t1, t2) pair".into()));
    }
    Ok(out)
}

fn e_of_rat(ring: &Rc<CycloRing>, q: &Rat) -> Cyclotomic {
    let den: i64 = q.denom().try_into().expect("small denominator");
    let num: i64 = q.numer().try_into().expect("small numerator");
    ring.e_frac(num, den)
}

/// The exact Weil representation generators for a discriminant form.
pub struct WeilMatrices {
    /// Common cyclotomic ring.
    pub ring: Rc<CycloRing>,
    /// Matrix size `|D|`.
    pub size: usize,
    /// Diagonal of `rho_T`.
    pub rho_t: Vec<Cyclotomic>,
    /// Full matrix of `rho_S`.
    pub rho_s: Vec<Vec<Cyclotomic>>,
    /// Even signature `r mod 8`.
    pub signature: u8,
}

impl WeilMatrices {
    fn identity(&self) -> Vec<Vec<Cyclotomic>> {
        let mut m = alloc::vec![alloc::vec![self.ring.zero(); self.size]; self.size];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = self.ring.constant(Rat::one());
        }
        m
    }

    fn mat_mul(&self, a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
        let n = self.size;
        let mut out = alloc::vec![alloc::vec![self.ring.zero(); n]; n];
        for i in 0..n {
            for (k, aik) in a[i].iter().enumerate() {
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    if b[k][j].is_zero() {
                        continue;
                    }
                    let t = self.ring.mul(aik, &b[k][j]);
                    out[i][j] = self.ring.add(&out[i][j], &t);
                }
            }
        }
        out
    }

    fn rho_st(&self) -> Vec<Vec<Cyclotomic>> {
        // (rho_S rho_T)[i][j] = rho_S[i][j] * rho_T[j]
        self.rho_s
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.rho_t)
                    .map(|(s, t)| self.ring.mul(s, t))
                    .collect()
            })
            .collect()
    }

    /// Checks `rho_S^4 = 1`, `(rho_S rho_T)^3 = rho_S^2` and unitarity of
    /// `rho_S` (conjugate transpose is a two-sided inverse), all exactly.
    pub fn verify_relations(&self) -> Result<()> {
        let s2 = self.mat_mul(&self.rho_s, &self.rho_s);
        let s4 = self.mat_mul(&s2, &s2);
        if s4 != self.identity() {
            return Err(Error::DiscriminantForm("rho_S^4 is not the identity".into()));
        }
        let st = self.rho_st();
        let st3 = self.mat_mul(&self.mat_mul(&st, &st), &st);
        if st3 != s2 {
            return Err(Error::DiscriminantForm("(rho_S rho_T)^3 != rho_S^2".into()));
        }
        // Unitarity of rho_S.
        let mut s_dag = alloc::vec![alloc::vec![self.ring.zero(); self.size]; self.size];
        for i in 0..self.size {
            for j in 0..self.size {
                s_dag[j][i] = self.ring.conjugate(&self.rho_s[i][j]);
            }
        }
        if self.mat_mul(&self.rho_s, &s_dag) != self.identity() {
            return Err(Error::DiscriminantForm("rho_S is not unitary".into()));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// The lift and the duality pairing
// ---------------------------------------------------------------------------

/// A vector-valued expansion: one component per residue class
/// `N Q(gamma) mod N`, stored as integer-exponent series in `q^{1/N}`
/// (an exponent `n` means `q^{n/N}`), plus the multiplicity of each class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorForm {
    /// The level `N = |D|`.
    pub level: u64,
    /// Component per residue of `N Q(gamma) mod N`.
    pub components: BTreeMap<u64, LaurentQSeries>,
    /// Number of `gamma` sharing each residue class.
    pub multiplicity: BTreeMap<u64, usize>,
}

/// Lifts an eps-certified scalar form to its vector-valued counterpart:
/// `F_gamma = sum_{n = N Q(gamma) mod N} s(n) a(n) q^{n/N}`.
///
/// Components are stored once per residue class; classes whose residue meets
/// no coefficient hold an empty series.
pub fn lift(f: &LaurentQSeries, d: &DiscriminantForm) -> VectorForm {
    let n = d.order();
    let mut multiplicity: BTreeMap<u64, usize> = BTreeMap::new();
    for r in d.residues() {
        *multiplicity.entry(r).or_insert(0) += 1;
    }
    let mut components = BTreeMap::new();
    for &r in multiplicity.keys() {
        let terms: Vec<(i64, Rat)> = f
            .terms()
            .filter(|(e, _)| e.rem_euclid(n as i64) as u64 == r)
            .map(|(e, c)| (e, c * rat_int(s_factor(e, n) as i64)))
            .collect();
        components.insert(r, LaurentQSeries::from_terms(terms, f.precision()));
    }
    VectorForm { level: n, components, multiplicity }
}

/// Constant term of the duality pairing:
/// `sum_n s(n) a(n) b(-n)` over the finite overlap window.
///
/// Errors when either series does not cover the full support window of the
/// other side.
pub fn pairing_constant_term(f: &LaurentQSeries, g: &LaurentQSeries, n: u64) -> Result<Rat> {
    let (Some(vf), Some(vg)) = (f.valuation(), g.valuation()) else {
        return Ok(Rat::zero());
    };
    // Support of the summand: n >= val(f) and -n >= val(g), so n <= -val(g).
    let hi = -vg;
    if f.precision() <= hi {
        return Err(Error::PrecisionShortfall { needed: hi + 1, have: f.precision() });
    }
    if g.precision() <= -vf {
        return Err(Error::PrecisionShortfall { needed: -vf + 1, have: g.precision() });
    }
    let mut acc = Rat::zero();
    for e in vf..=hi {
        let a = f.coeff(e);
        if a.is_zero() {
            continue;
        }
        let b = g.coeff(-e);
        if b.is_zero() {
            continue;
        }
        acc += rat_int(s_factor(e, n) as i64) * a * b;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::TwoPart;
    use crate::rat;

    fn chi(n: u64) -> QuadCharacter {
        QuadCharacter::new(n, if n % 8 == 0 { Some(TwoPart::Plus8) } else { None }).unwrap()
    }

    fn eps_plus(c: &QuadCharacter) -> SignVector {
        SignVector::parse(c, "+1").unwrap()
    }

    #[test]
    fn n5_plus_has_a_equal_one() {
        let c = chi(5);
        let d = DiscriminantForm::build(&c, &eps_plus(&c)).unwrap();
        assert_eq!(d.components(), &[JordanComponent::OddPrime { p: 5, a: 1 }]);
        assert_eq!(d.order(), 5);
    }

    #[test]
    fn n15_is_z3_plus_z5() {
        let c = chi(15);
        let eps4 = SignVector::parse(&c, "++").unwrap();
        let d = DiscriminantForm::build(&c, &eps4).unwrap();
        assert_eq!(d.order(), 15);
        assert!(matches!(d.components()[0], JordanComponent::OddPrime { p: 3, .. }));
        assert!(matches!(d.components()[1], JordanComponent::OddPrime { p: 5, .. }));
    }

    #[test]
    fn n8_canonical_pair() {
        let c = chi(8);
        let d = DiscriminantForm::build(&c, &eps_plus(&c)).unwrap();
        // chi_2(-1) = +1 forces t1 + t2 = 0 mod 8; chi_2(t2) = +1 holds for
        // t2 = +-1; lexicographically smallest admissible pair is (-1, 1).
        assert_eq!(d.components(), &[JordanComponent::Eight { t1: -1, t2: 1 }]);
        assert_eq!(d.order(), 8);
    }

    #[test]
    fn signatures_by_direct_gauss_sums() {
        // Z/5 with Q = x^2/5: Gauss sum sqrt(5), signature 0.
        let c5 = chi(5);
        let d = DiscriminantForm::build(&c5, &eps_plus(&c5)).unwrap();
        assert_eq!(d.signature().unwrap(), 0);
        // Z/5 with Q = 2x^2/5: Gauss sum -sqrt(5) = sqrt(5) e(4/8), signature 4.
        let minus = SignVector::parse(&c5, "-1").unwrap();
        let dm = DiscriminantForm::build(&c5, &minus).unwrap();
        assert_eq!(dm.components(), &[JordanComponent::OddPrime { p: 5, a: 2 }]);
        assert_eq!(dm.signature().unwrap(), 4);
    }

    #[test]
    fn dual_negates_signature_and_q() {
        for n in [5u64, 8, 13, 15] {
            let c = chi(n);
            for eps in SignVector::all(&c) {
                let d = DiscriminantForm::build(&c, &eps).unwrap();
                let dd = d.dual();
                let r = d.signature().unwrap();
                let rd = dd.signature().unwrap();
                assert_eq!((r + rd) % 8, 0, "N={n}");
                assert_eq!(d.dual().dual(), d);
                for i in 0..d.order() {
                    let sum = rat_mod1(d.q_value(i) + dd.q_value(i));
                    assert!(sum.is_zero(), "Q and -Q at element {i}");
                }
            }
        }
    }

    #[test]
    fn milgram_exact_for_all_levels_and_duals() {
        for n in [5u64, 8, 13, 15] {
            let c = chi(n);
            for eps in SignVector::all(&c) {
                let d = DiscriminantForm::build(&c, &eps).unwrap();
                assert!(d.signature().is_ok(), "N={n} eps={}", eps.compact_string());
                assert!(d.dual().signature().is_ok());
            }
        }
    }

    #[test]
    fn eight_variants_are_isomorphic() {
        let c = chi(8);
        for eps in SignVector::all(&c) {
            let variants = DiscriminantForm::build_all_eight_variants(&c, &eps).unwrap();
            assert_eq!(variants.len(), 2);
            let sig0 = variants[0].signature().unwrap();
            let sig1 = variants[1].signature().unwrap();
            assert_eq!(sig0, sig1);
            assert_eq!(variants[0].q_multiset(), variants[1].q_multiset());
        }
        let cm = QuadCharacter::new(8, Some(TwoPart::Minus8)).unwrap();
        for eps in SignVector::all(&cm) {
            let variants = DiscriminantForm::build_all_eight_variants(&cm, &eps).unwrap();
            assert_eq!(variants.len(), 2);
            assert_eq!(variants[0].q_multiset(), variants[1].q_multiset());
            assert_eq!(
                variants[0].signature().unwrap(),
                variants[1].signature().unwrap()
            );
        }
    }

    #[test]
    fn residue_sets_match_the_allowed_exponents() {
        // The residues {N Q(gamma) mod N} of D(chi, eps) are exactly the
        // exponent classes the eps-condition allows; this pins the Jordan
        // data (including the 8 || N parity rule) independently.
        use crate::characters::epsilon_allows;
        for config in ["N=5", "N=8,two=+8", "N=8,two=-8", "N=13", "N=15", "N=12"] {
            let c = QuadCharacter::parse_config(config).unwrap();
            let n = c.conductor();
            for eps in SignVector::all(&c) {
                let d = DiscriminantForm::build(&c, &eps).unwrap();
                let mut from_d: Vec<u64> = d.residues();
                from_d.sort_unstable();
                from_d.dedup();
                let allowed: Vec<u64> =
                    (0..n).filter(|&r| epsilon_allows(&c, &eps, r as i64)).collect();
                assert_eq!(from_d, allowed, "{config} eps={}", eps.compact_string());
            }
        }
    }

    #[test]
    fn weil_relations_hold_exactly() {
        for n in [5u64, 8, 13] {
            let c = chi(n);
            let d = DiscriminantForm::build(&c, &eps_plus(&c)).unwrap();
            let w = d.weil_matrices().unwrap();
            w.verify_relations().unwrap();
        }
    }

    #[test]
    fn rho_t_is_diagonal_of_q_values() {
        let c = chi(5);
        let d = DiscriminantForm::build(&c, &eps_plus(&c)).unwrap();
        let w = d.weil_matrices().unwrap();
        // Q values on Z/5 with a = 1: x^2/5 at x = 0..4.
        for (x, expected_num) in [(0u64, 0i64), (1, 1), (2, 4), (3, 4), (4, 1)] {
            let q = d.q_value(x);
            assert_eq!(q, rat(expected_num, 5).clone() - rat(expected_num, 5).floor());
            let e = w.ring.e_frac(expected_num, 5);
            assert_eq!(w.rho_t[x as usize], e);
        }
    }

    #[test]
    fn lift_components_follow_residues() {
        // For N=5 and f_{-1}: the class with residue 4 contains the q^4 term,
        // scaled by s(4) = 1, so coefficient -54 at exponent 4.
        let c = chi(5);
        let d = DiscriminantForm::build(&c, &eps_plus(&c)).unwrap();
        let f = LaurentQSeries::from_terms(
            [
                (-1, rat_int(1)),
                (0, rat_int(5)),
                (1, rat_int(11)),
                (4, rat_int(-54)),
                (5, rat_int(55)),
            ],
            11,
        );
        let v = lift(&f, &d);
        // residues of NQ: {0, 1, 4, 4, 1} -> classes 0, 1, 4 with mult 1, 2, 2.
        assert_eq!(v.multiplicity[&0], 1);
        assert_eq!(v.multiplicity[&1], 2);
        assert_eq!(v.multiplicity[&4], 2);
        let f4 = &v.components[&4];
        assert_eq!(f4.coeff(4), rat_int(-54));
        assert_eq!(f4.coeff(-1), rat_int(1));
        let f0 = &v.components[&0];
        assert_eq!(f0.coeff(0), rat_int(10)); // s(0) a(0) = 2 * 5
        assert_eq!(f0.coeff(5), rat_int(110)); // s(5) a(5) = 2 * 55
        // T-compatibility: every stored exponent matches its class mod N.
        for (r, comp) in &v.components {
            for (e, _) in comp.terms() {
                assert_eq!(e.rem_euclid(5) as u64, *r);
            }
        }
    }

    #[test]
    fn zero_series_lifts_to_zero() {
        let c = chi(5);
        let d = DiscriminantForm::build(&c, &eps_plus(&c)).unwrap();
        let v = lift(&LaurentQSeries::zero(10), &d);
        assert!(v.components.values().all(|s| s.is_zero()));
    }

    #[test]
    fn pairing_window_example() {
        // N=8: f = f_{-1} (weight 2), g = g_{-2} (weight 0):
        // 1*1*8 + 2*(-8)*(1/2) = 0.
        let f = LaurentQSeries::from_terms(
            [(-1, rat_int(1)), (1, rat_int(-2)), (2, rat_int(-8))],
            10,
        );
        let g = LaurentQSeries::from_terms(
            [(-2, rat(1, 2)), (0, rat_int(3)), (1, rat_int(8)), (2, rat_int(-3))],
            10,
        );
        assert_eq!(pairing_constant_term(&f, &g, 8).unwrap(), rat_int(0));
        // Zero inputs pair to zero.
        assert_eq!(
            pairing_constant_term(&LaurentQSeries::zero(5), &g, 8).unwrap(),
            rat_int(0)
        );
        // Insufficient overlap is reported: the window needs a(n) up to
        // n = -val(g) = 12, beyond f's precision 10.
        let shallow = LaurentQSeries::from_terms([(-12, rat_int(1))], 5);
        assert!(pairing_constant_term(&f, &shallow, 8).is_err());
    }
}
