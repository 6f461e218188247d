//! Solving for the eps-subspace inside a pool, reduced-modular-form grids,
//! and Sturm-style certification bounds.
//!
//! A grid is the family of reduced forms `f_m = (1/s(m)) q^m + ...` of
//! `A^eps(N, k, chi)`: the full reduced row echelon of the solved subspace
//! over the attainable leading orders, each pivot normalized so its leading
//! coefficient is `1/s(m)`. Every coefficient of every form vanishes at the
//! other attainable orders and at every eps-disallowed exponent below the
//! certification precision.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::characters::{epsilon_allows, s_factor, QuadCharacter, SignVector};
use crate::formgen::gamma0_index;
use crate::qseries::LaurentQSeries;
use crate::{rat_int, Error, Int, Rat, Result};

/// Default safety margin added on top of the pole-clearing Sturm bound.
pub const DEFAULT_PRECISION_MARGIN: i64 = 10;

/// Sturm bound for `M(N, k)`: `ceil(k mu / 12) + 1` with `mu` the index of
/// `Gamma_0(N)`.
pub fn sturm_bound(n: u64, k: i64) -> i64 {
    assert!(k >= 0, "sturm_bound requires k >= 0");
    let mu = gamma0_index(n) as i64;
    let num = k * mu;
    num.div_euclid(12) + i64::from(num.rem_euclid(12) != 0) + 1
}

/// Conservative certification precision for a pool of weight `k` with poles
/// of order at most `max_pole`: clear the poles by a power of the
/// discriminant, then apply the Sturm bound, plus a margin.
pub fn certification_precision(n: u64, k: i64, max_pole: i64) -> i64 {
    certification_precision_with_margin(n, k, max_pole, DEFAULT_PRECISION_MARGIN)
}

/// [`certification_precision`] with an explicit margin.
pub fn certification_precision_with_margin(n: u64, k: i64, max_pole: i64, margin: i64) -> i64 {
    let mu = gamma0_index(n) as i64;
    let pole = max_pole.max(0);
    pole * mu + sturm_bound(n, k + 12 * pole) + margin
}

/// Identification of a grid: level data plus the computation window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridParams {
    /// The character (conductor = level).
    pub chi: QuadCharacter,
    /// Weight `k`.
    pub weight: i64,
    /// Sign vector.
    pub eps: SignVector,
    /// Deepest admitted pole order at infinity.
    pub max_pole: i64,
    /// Absolute precision of every form.
    pub precision: i64,
}

/// One reduced form `f_m` of a grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedForm {
    /// Leading order `m`.
    pub order: i64,
    /// The q-expansion, with leading coefficient `1/s(m)`.
    pub series: LaurentQSeries,
}

/// The indexed family of reduced forms for one `(N, k, chi, eps)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    /// Level data and computation window.
    pub params: GridParams,
    /// Reduced forms keyed by leading order.
    pub forms: BTreeMap<i64, ReducedForm>,
    /// Dimension of the relevant dual cusp space, when it has been detected
    /// (count of positive attainable orders of the holomorphic dual solve).
    pub dual_cusp_dim: Option<usize>,
}

impl Grid {
    /// The level `N`.
    pub fn level(&self) -> u64 {
        self.params.chi.conductor()
    }

    /// Attainable leading orders, ascending.
    pub fn orders(&self) -> Vec<i64> {
        self.forms.keys().copied().collect()
    }

    /// The reduced form of order `m`, if attainable.
    pub fn form(&self, m: i64) -> Option<&ReducedForm> {
        self.forms.get(&m)
    }

    /// Coefficient `a_m(n)`; zero when `f_m` does not exist, in line with
    /// reading nonexistent reduced forms as zero.
    pub fn coeff(&self, m: i64, n: i64) -> Rat {
        self.forms.get(&m).map(|f| f.series.coeff(n)).unwrap_or_else(Rat::zero)
    }
}

/// Solves for the subspace of the pool span whose coefficients vanish at
/// every eps-disallowed exponent below `prec`.
///
/// Returns an exact basis of solution series (each a rational combination of
/// pool members). Pool members must carry at least `prec` known coefficients.
pub fn epsilon_solve(
    pool: &[LaurentQSeries],
    chi: &QuadCharacter,
    eps: &SignVector,
    prec: i64,
) -> Result<Vec<LaurentQSeries>> {
    if pool.is_empty() {
        return Ok(Vec::new());
    }
    for member in pool {
        if member.precision() < prec {
            return Err(Error::PrecisionShortfall { needed: prec, have: member.precision() });
        }
    }
    let lo = pool.iter().filter_map(|f| f.valuation()).min().unwrap_or(0);
    // One constraint row per disallowed exponent carrying a nonzero
    // coefficient anywhere in the pool.
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for e in lo..prec {
        if epsilon_allows(chi, eps, e) {
            continue;
        }
        let row: Vec<Rat> = pool.iter().map(|f| f.coeff(e)).collect();
        if row.iter().any(|c| !c.is_zero()) {
            rows.push(row);
        }
    }
    let null = nullspace(rows, pool.len());
    let mut out = Vec::new();
    for combo in null {
        let mut acc = LaurentQSeries::zero(prec);
        for (c, member) in combo.iter().zip(pool) {
            if !c.is_zero() {
                acc = acc.add(&member.scale(c));
            }
        }
        // Pool relations appear as identically-zero solutions; drop them.
        if !acc.is_zero() {
            out.push(acc.truncate(prec));
        }
    }
    Ok(out)
}

/// Basis of the common nullspace of the constraint `rows` (each of width
/// `cols`), over exact rationals.
///
/// Works incrementally: the candidate space starts as the standard basis and
/// each constraint eliminates one direction. Basis vectors are rescaled to
/// primitive integer vectors after every step, which keeps the coefficient
/// sizes flat even with hundreds of constraints. Deterministic.
fn nullspace(rows: Vec<Vec<Rat>>, cols: usize) -> Vec<Vec<Rat>> {
    let mut basis: Vec<Vec<Rat>> = (0..cols)
        .map(|i| {
            let mut v = alloc::vec![Rat::zero(); cols];
            v[i] = Rat::one();
            v
        })
        .collect();
    for row in &rows {
        if basis.is_empty() {
            break;
        }
        let vals: Vec<Rat> =
            basis.iter().map(|b| dot_sparse(b, row)).collect();
        let Some(j) = vals.iter().position(|v| !v.is_zero()) else {
            continue;
        };
        let pivot = basis.remove(j);
        let pv = vals[j].clone();
        for (i, b) in basis.iter_mut().enumerate() {
            let idx = if i < j { i } else { i + 1 };
            let v = &vals[idx];
            if v.is_zero() {
                continue;
            }
            let factor = v / &pv;
            for (x, p) in b.iter_mut().zip(&pivot) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
            make_primitive(b);
        }
    }
    basis
}

fn dot_sparse(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Rescales a rational vector so its entries are coprime integers with a
/// positive first nonzero entry.
fn make_primitive(v: &mut [Rat]) {
    use num_integer::Integer as _;
    let mut den_lcm = Int::one();
    for x in v.iter() {
        if !x.is_zero() {
            den_lcm = den_lcm.lcm(x.denom());
        }
    }
    let mut num_gcd = Int::zero();
    for x in v.iter() {
        if !x.is_zero() {
            num_gcd = num_gcd.gcd(&(x.numer() * &den_lcm / x.denom()));
        }
    }
    if num_gcd.is_zero() {
        return;
    }
    let mut scale = Rat::new(den_lcm, num_gcd);
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if (first * &scale) < Rat::zero() {
            scale = -scale;
        }
    }
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x *= &scale;
        }
    }
}

/// Computes the reduced grid: full Gauss-Jordan of the eps-solved space with
/// pivots at the attainable leading orders, each scaled to lead with `1/s(m)`.
/// Exponents are processed in increasing order and scaling happens last.
pub fn reduced_grid(
    pool: &[LaurentQSeries],
    chi: &QuadCharacter,
    eps: &SignVector,
    max_pole: i64,
    prec: i64,
) -> Result<Grid> {
    let solutions = epsilon_solve(pool, chi, eps, prec)?;
    let mut pivots: BTreeMap<i64, LaurentQSeries> = BTreeMap::new();
    for s in solutions {
        let mut cur = s;
        loop {
            let Some(v) = cur.valuation() else { break };
            match pivots.get(&v) {
                Some(p) => {
                    let factor = cur.coeff(v) / p.coeff(v);
                    cur = cur.sub(&p.scale(&factor));
                }
                None => {
                    pivots.insert(v, cur);
                    break;
                }
            }
        }
    }
    // Backward pass: clear every pivot's coefficients at the other pivot
    // orders, highest order first so higher pivots are already clean.
    let orders: Vec<i64> = pivots.keys().copied().collect();
    for (i, &m) in orders.iter().enumerate().rev() {
        let mut f = pivots.remove(&m).expect("pivot present");
        for &m_high in &orders[i + 1..] {
            let c = f.coeff(m_high);
            if c.is_zero() {
                continue;
            }
            let p = pivots.get(&m_high).expect("higher pivot cleaned");
            let factor = c / p.coeff(m_high);
            f = f.sub(&p.scale(&factor));
        }
        pivots.insert(m, f);
    }
    // Scale last: leading coefficient 1/s(m).
    let n = chi.conductor();
    let mut forms = BTreeMap::new();
    for (m, f) in pivots {
        debug_assert!(m >= -max_pole, "pool admitted a pole beyond max_pole");
        let lead = f.coeff(m);
        let target = Rat::new(Int::one(), Int::from(s_factor(m, n)));
        let form = f.scale(&(target / lead));
        forms.insert(m, ReducedForm { order: m, series: form });
    }
    Ok(Grid {
        params: GridParams {
            chi: chi.clone(),
            weight: 0, // weighted constructor fills this in
            eps: eps.clone(),
            max_pole,
            precision: prec,
        },
        forms,
        dual_cusp_dim: None,
    })
}

/// [`reduced_grid`] with the weight recorded in the grid parameters.
pub fn reduced_grid_weighted(
    pool: &[LaurentQSeries],
    chi: &QuadCharacter,
    eps: &SignVector,
    weight: i64,
    max_pole: i64,
    prec: i64,
) -> Result<Grid> {
    let mut grid = reduced_grid(pool, chi, eps, max_pole, prec)?;
    grid.params.weight = weight;
    Ok(grid)
}

/// One integrality failure witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityWitness {
    /// Grid order `m`.
    pub order: i64,
    /// Exponent `n` with non-integral `s(m) a_m(n)`.
    pub exponent: i64,
    /// The offending value `s(m) a_m(n)`.
    pub value: Rat,
}

/// Checks that `s(m) a_m(n)` is an integer for every known coefficient of
/// every grid form; failures are listed, not fatal.
pub fn integrality_check(grid: &Grid) -> Vec<IntegralityWitness> {
    let n = grid.level();
    let mut out = Vec::new();
    for (m, form) in &grid.forms {
        let s = rat_int(s_factor(*m, n) as i64);
        for (e, c) in form.series.terms() {
            let v = c * &s;
            if !crate::rat_is_integer(&v) {
                out.push(IntegralityWitness { order: *m, exponent: e, value: v });
            }
        }
    }
    out
}

/// Exponents violating the eps-condition anywhere in the grid (empty on a
/// certified grid).
pub fn epsilon_condition_witnesses(grid: &Grid) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for (m, form) in &grid.forms {
        for (e, _) in form.series.terms() {
            if !epsilon_allows(&grid.params.chi, &grid.params.eps, e) {
                out.push((*m, e));
            }
        }
    }
    out
}

/// Violations of the echelon and normalization invariants: leading
/// coefficient `1/s(m)` and vanishing at every other attainable order.
pub fn echelon_witnesses(grid: &Grid) -> Vec<String> {
    use alloc::format;
    let n = grid.level();
    let orders = grid.orders();
    let mut out = Vec::new();
    for (m, form) in &grid.forms {
        if form.series.valuation() != Some(*m) {
            out.push(format!("f_{m} does not lead at q^{m}"));
            continue;
        }
        let lead = form.series.coeff(*m);
        if lead * rat_int(s_factor(*m, n) as i64) != Rat::one() {
            out.push(format!("f_{m} leading coefficient is not 1/s({m})"));
        }
        for &mp in &orders {
            if mp != *m && !form.series.coeff(mp).is_zero() {
                out.push(format!("f_{m} has a nonzero coefficient at attainable order {mp}"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formgen::{build_pool, EisensteinSpec, EtaQuotient, LevelPreset, PoolSeed, PoolSpec};
    use crate::rat;

    #[test]
    fn sturm_bounds() {
        assert_eq!(sturm_bound(1, 12), 2);
        assert_eq!(sturm_bound(5, 2), 2);
        assert_eq!(sturm_bound(8, 2), 3);
        assert_eq!(sturm_bound(15, 3), 7);
    }

    #[test]
    fn certification_precisions() {
        assert_eq!(certification_precision(5, 0, 5), 71);
        assert_eq!(certification_precision(1, 12, 0), sturm_bound(1, 12) + 10);
        assert_eq!(certification_precision(8, 2, 7), 7 * 12 + sturm_bound(8, 86) + 10);
    }

    fn trivial_chi() -> QuadCharacter {
        QuadCharacter::new(1, None).unwrap()
    }

    /// Minimal level-5 preset assembled inline (the shipped preset files
    /// live with the CLI).
    fn preset_n5() -> LevelPreset {
        let chi = QuadCharacter::parse_config("N=5").unwrap();
        let triv = trivial_chi();
        let u5 = EtaQuotient::new(5, &[(1, 1), (5, -5)]).unwrap();
        let e2_5 = EisensteinSpec { weight: 2, psi1: triv.clone(), psi2: triv.clone(), scale_t: 5 };
        let ea = EisensteinSpec { weight: 2, psi1: triv.clone(), psi2: chi.clone(), scale_t: 1 };
        let eb = EisensteinSpec { weight: 2, psi1: chi.clone(), psi2: triv, scale_t: 1 };
        LevelPreset {
            name: "N5".into(),
            chi,
            ascent: EtaQuotient::new(5, &[(1, 6), (5, -6)]).unwrap(),
            ascent_pole: 1,
            precision_margin: 10,
            pools: alloc::vec![
                PoolSpec {
                    weight: 0,
                    max_pole: 5,
                    ascent_min: -1,
                    min_precision: 0,
                    seeds: alloc::vec![PoolSeed { eta: u5, eisenstein: alloc::vec![e2_5] }],
                    expected: alloc::vec![],
                },
                PoolSpec {
                    weight: 2,
                    max_pole: 5,
                    ascent_min: -1,
                    min_precision: 0,
                    seeds: alloc::vec![
                        PoolSeed { eta: EtaQuotient::trivial(5), eisenstein: alloc::vec![ea] },
                        PoolSeed { eta: EtaQuotient::trivial(5), eisenstein: alloc::vec![eb] },
                    ],
                    expected: alloc::vec![],
                },
            ],
        }
    }

    #[test]
    fn n5_weight0_grid_matches_printed_forms() {
        let preset = preset_n5();
        preset.validate().unwrap();
        let prec = certification_precision(5, 0, 5);
        let pool = build_pool(&preset, 0, 5, prec).unwrap();
        let chi = &preset.chi;
        let plus = SignVector::parse(chi, "+1").unwrap();
        let grid = reduced_grid_weighted(&pool, chi, &plus, 0, 5, prec).unwrap();
        assert_eq!(grid.orders(), alloc::vec![-5, -4, -1]);

        let f1 = &grid.form(-1).unwrap().series;
        assert_eq!(f1.coeff(-1), rat_int(1));
        assert_eq!(f1.coeff(0), rat_int(5));
        assert_eq!(f1.coeff(1), rat_int(11));
        assert_eq!(f1.coeff(4), rat_int(-54));
        assert_eq!(f1.coeff(5), rat_int(55));
        assert_eq!(f1.coeff(6), rat_int(44));
        assert_eq!(f1.coeff(9), rat_int(-395));
        assert_eq!(f1.coeff(10), rat_int(340));
        assert_eq!(f1.coeff(2), rat_int(0));
        assert_eq!(f1.coeff(3), rat_int(0));

        let f4 = &grid.form(-4).unwrap().series;
        assert_eq!(f4.coeff(0), rat_int(15));
        assert_eq!(f4.coeff(1), rat_int(-216));
        assert_eq!(f4.coeff(4), rat_int(4959));
        assert_eq!(f4.coeff(5), rat_int(22040));

        let f5 = &grid.form(-5).unwrap().series;
        assert_eq!(f5.coeff(-5), rat(1, 2));
        assert_eq!(f5.coeff(0), rat_int(15));
        assert_eq!(f5.coeff(1), rat_int(275));
        assert_eq!(f5.coeff(4), rat_int(27550));

        assert!(integrality_check(&grid).is_empty());
        assert!(epsilon_condition_witnesses(&grid).is_empty());
        assert!(echelon_witnesses(&grid).is_empty());
    }

    #[test]
    fn n5_weight2_grid_has_order_zero_form() {
        let preset = preset_n5();
        let prec = certification_precision(5, 2, 5);
        let pool = build_pool(&preset, 2, 5, prec).unwrap();
        let chi = &preset.chi;
        let plus = SignVector::parse(chi, "+1").unwrap();
        let grid = reduced_grid_weighted(&pool, chi, &plus, 2, 5, prec).unwrap();
        // g_0 = 1/2 - 5q + ... (the Eisenstein line), dual to the weight-0 grid.
        let g0 = &grid.form(0).unwrap().series;
        assert_eq!(g0.coeff(0), rat(1, 2));
        assert_eq!(g0.coeff(1), rat_int(-5));
        assert!(grid.orders().contains(&-5));
        assert!(epsilon_condition_witnesses(&grid).is_empty());
        assert!(echelon_witnesses(&grid).is_empty());
    }

    #[test]
    fn synthetic_integrality_failure_is_witnessed() {
        let chi = QuadCharacter::parse_config("N=5").unwrap();
        let eps = SignVector::parse(&chi, "+1").unwrap();
        let series = LaurentQSeries::from_terms([(0, rat(1, 1)), (1, rat(1, 3))], 10);
        let mut forms = BTreeMap::new();
        forms.insert(0, ReducedForm { order: 0, series });
        let grid = Grid {
            params: GridParams { chi, weight: 2, eps, max_pole: 0, precision: 10 },
            forms,
            dual_cusp_dim: None,
        };
        let witnesses = integrality_check(&grid);
        assert_eq!(witnesses.len(), 1);
        assert_eq!(witnesses[0].exponent, 1);
    }

    #[test]
    fn empty_pool_solves_to_empty_basis() {
        let chi = QuadCharacter::parse_config("N=5").unwrap();
        let eps = SignVector::parse(&chi, "+1").unwrap();
        assert!(epsilon_solve(&[], &chi, &eps, 10).unwrap().is_empty());
    }

    #[test]
    fn precision_shortfall_is_reported() {
        let chi = QuadCharacter::parse_config("N=5").unwrap();
        let eps = SignVector::parse(&chi, "+1").unwrap();
        let member = LaurentQSeries::one(5);
        let err = epsilon_solve(&[member], &chi, &eps, 10).unwrap_err();
        assert!(matches!(err, Error::PrecisionShortfall { .. }));
    }
}
