//! Built-in level presets for `N` in `{1, 5, 8, 13, 15}`.
//!
//! Each preset names the character, the ascent function (a weight-zero
//! trivial-character eta quotient polar only at infinity), and per-weight
//! seed lists whose products with ascent powers span the working spaces.
//! The shipped preset files mirror these definitions; the companion crate
//! pins file and builtin to each other.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::characters::QuadCharacter;
use crate::formgen::{EisensteinSpec, EtaQuotient, ExpectedOrders, LevelPreset, PoolSeed, PoolSpec};
use crate::Result;

fn triv() -> QuadCharacter {
    QuadCharacter::new(1, None).expect("trivial character")
}

fn eis(weight: u64, psi1: QuadCharacter, psi2: QuadCharacter, t: u64) -> EisensteinSpec {
    EisensteinSpec { weight, psi1, psi2, scale_t: t }
}

fn eta(level: u64, exps: &[(u64, i64)]) -> EtaQuotient {
    EtaQuotient::new(level, exps).expect("valid eta quotient")
}

fn expected(eps: &str, orders: &[i64]) -> ExpectedOrders {
    ExpectedOrders { eps: eps.to_string(), orders: orders.to_vec() }
}

/// Level 1: weight 12 (order-zero golden data) and the weight-0 function pool.
pub fn preset_n1() -> LevelPreset {
    let chi = triv();
    LevelPreset {
        name: "N1".to_string(),
        chi: chi.clone(),
        ascent: EtaQuotient::trivial(1),
        ascent_pole: 1,
        precision_margin: 10,
        pools: vec![
            PoolSpec {
                weight: 12,
                max_pole: 0,
                ascent_min: 0,
                min_precision: 0,
                seeds: vec![
                    PoolSeed { eta: eta(1, &[(1, 24)]), eisenstein: vec![] },
                    PoolSeed {
                        eta: EtaQuotient::trivial(1),
                        eisenstein: vec![eis(12, chi.clone(), chi.clone(), 1)],
                    },
                ],
                expected: vec![expected("()", &[0, 1])],
            },
            PoolSpec {
                weight: 0,
                max_pole: 1,
                ascent_min: 0,
                min_precision: 0,
                seeds: vec![
                    PoolSeed { eta: EtaQuotient::trivial(1), eisenstein: vec![] },
                    // The modular function with a simple pole: E_4^3 / Delta.
                    PoolSeed {
                        eta: eta(1, &[(1, -24)]),
                        eisenstein: vec![
                            eis(4, chi.clone(), chi.clone(), 1),
                            eis(4, chi.clone(), chi.clone(), 1),
                            eis(4, chi.clone(), chi, 1),
                        ],
                    },
                ],
                expected: vec![expected("()", &[-1, 0])],
            },
        ],
    }
}

/// Level 5: the weight-0 grid of the classical computation and its weight-2
/// dual.
pub fn preset_n5() -> LevelPreset {
    let chi = QuadCharacter::parse_config("N=5").expect("level 5 character");
    LevelPreset {
        name: "N5".to_string(),
        chi: chi.clone(),
        ascent: eta(5, &[(1, 6), (5, -6)]),
        ascent_pole: 1,
        precision_margin: 10,
        pools: vec![
            PoolSpec {
                weight: 0,
                max_pole: 5,
                ascent_min: -1,
                min_precision: 0,
                seeds: vec![PoolSeed {
                    eta: eta(5, &[(1, 1), (5, -5)]),
                    eisenstein: vec![eis(2, triv(), triv(), 5)],
                }],
                expected: vec![expected("+", &[-5, -4, -1])],
            },
            PoolSpec {
                weight: 2,
                max_pole: 5,
                ascent_min: -1,
                min_precision: 0,
                seeds: vec![
                    PoolSeed {
                        eta: EtaQuotient::trivial(5),
                        eisenstein: vec![eis(2, triv(), chi.clone(), 1)],
                    },
                    PoolSeed {
                        eta: EtaQuotient::trivial(5),
                        eisenstein: vec![eis(2, chi, triv(), 1)],
                    },
                ],
                expected: vec![],
            },
        ],
    }
}

/// Level 8 with the even two-part character: weight-2 and weight-0 tables.
///
/// Gamma_0(8) has four cusps; ascent powers only move poles between infinity
/// and 0, so the seeds are additionally dressed by powers of the weight-zero
/// transfer function with divisor -[1/2] + [1/4], which reaches the grid
/// forms carrying poles at the width-two and width-one cusps.
pub fn preset_n8() -> LevelPreset {
    let chi = QuadCharacter::parse_config("N=8,two=+8").expect("level 8 character");
    let ea = eis(2, triv(), chi.clone(), 1);
    let eb = eis(2, chi.clone(), triv(), 1);
    // Inverse of the weight-2 quotient with divisor 2[infinity].
    let e8_inv = eta(8, &[(4, 4), (8, -8)]);
    let transfer = eta(8, &[(1, 4), (2, -14), (4, 14), (8, -4)]);
    let dress = |base: EtaQuotient, es: &EisensteinSpec| -> Vec<PoolSeed> {
        (-2i64..=2)
            .map(|i| PoolSeed {
                eta: base.mul(&transfer.pow(i)).expect("same level"),
                eisenstein: vec![es.clone()],
            })
            .collect()
    };
    let mut w2_seeds = dress(EtaQuotient::trivial(8), &ea);
    w2_seeds.extend(dress(EtaQuotient::trivial(8), &eb));
    let mut w0_seeds = dress(e8_inv.clone(), &ea);
    w0_seeds.extend(dress(e8_inv, &eb));
    LevelPreset {
        name: "N8".to_string(),
        chi,
        ascent: eta(8, &[(1, 4), (2, -2), (4, 2), (8, -4)]),
        ascent_pole: 1,
        precision_margin: 10,
        pools: vec![
            PoolSpec {
                weight: 2,
                max_pole: 7,
                ascent_min: -1,
                min_precision: 0,
                seeds: w2_seeds,
                expected: vec![expected("+", &[-7, -6, -4, -2, -1, 0])],
            },
            PoolSpec {
                weight: 0,
                max_pole: 7,
                ascent_min: -1,
                min_precision: 0,
                seeds: w0_seeds,
                expected: vec![expected("+", &[-7, -6, -4, -2, -1])],
            },
        ],
    }
}

/// Level 13: the holomorphic weight-6 space whose order-zero forms carry the
/// constant-term divisibility by 13.
pub fn preset_n13() -> LevelPreset {
    let chi = QuadCharacter::parse_config("N=13").expect("level 13 character");
    let mut seeds: Vec<PoolSeed> = Vec::new();
    // eta(t)^{12-a} eta(13t)^a for odd a in [-1, 13] are holomorphic of
    // weight 6 with the level character, with leading orders 0..7.
    for a in (-1..=13).step_by(2) {
        seeds.push(PoolSeed { eta: eta(13, &[(1, 12 - a), (13, a)]), eisenstein: vec![] });
    }
    seeds.push(PoolSeed {
        eta: EtaQuotient::trivial(13),
        eisenstein: vec![eis(6, triv(), chi.clone(), 1)],
    });
    seeds.push(PoolSeed {
        eta: EtaQuotient::trivial(13),
        eisenstein: vec![eis(6, chi.clone(), triv(), 1)],
    });
    LevelPreset {
        name: "N13".to_string(),
        chi,
        ascent: eta(13, &[(1, 2), (13, -2)]),
        ascent_pole: 1,
        precision_margin: 15,
        pools: vec![PoolSpec {
            weight: 6,
            max_pole: 0,
            ascent_min: 0,
            min_precision: 0,
            seeds,
            expected: vec![expected("+", &[0, 1, 3, 4]), expected("-", &[0, 2, 5, 6])],
        }],
    }
}

/// Level 15: weight 3 (cusp forms and Eisenstein series) and the weight -1
/// grids reached by dividing out the weight-4 form with divisor 8[infinity].
pub fn preset_n15() -> LevelPreset {
    let chi = QuadCharacter::parse_config("N=15").expect("level 15 character");
    let chi3 = QuadCharacter::parse_config("N=3").expect("level 3 character");
    let chi5 = QuadCharacter::parse_config("N=5").expect("level 5 character");
    let weight3_eis = |psi1: QuadCharacter, psi2: QuadCharacter| eis(3, psi1, psi2, 1);
    let g1 = eta(15, &[(3, 3), (5, 3)]);
    let g2 = eta(15, &[(1, 3), (15, 3)]);
    // Inverse of eta(t) eta(3t)^{-3} eta(5t)^{-5} eta(15t)^{15}, the weight-4
    // trivial-character form with divisor 8[infinity].
    let e15_inv = eta(15, &[(1, -1), (3, 3), (5, 5), (15, -15)]);
    let eis3: Vec<EisensteinSpec> = vec![
        weight3_eis(triv(), chi.clone()),
        weight3_eis(chi.clone(), triv()),
        weight3_eis(chi3.clone(), chi5.clone()),
        weight3_eis(chi5, chi3),
    ];
    let w3_seeds: Vec<PoolSeed> = [g1.clone(), g2.clone()]
        .into_iter()
        .map(|e| PoolSeed { eta: e, eisenstein: vec![] })
        .chain(
            eis3.iter()
                .cloned()
                .map(|e| PoolSeed { eta: EtaQuotient::trivial(15), eisenstein: vec![e] }),
        )
        .collect();
    // Weight -1 seeds: the weight-3 seeds divided by the claw form (covering
    // the Eisenstein and cusp directions), plus direct weight -1 eta
    // quotients whose divisors spread poles over all four cusps (the ascent
    // only moves poles between infinity and 1/5).
    let mut wm1_seeds: Vec<PoolSeed> = [g1, g2]
        .into_iter()
        .map(|e| PoolSeed { eta: e.mul(&e15_inv).expect("same level"), eisenstein: vec![] })
        .chain(
            eis3.iter()
                .cloned()
                .map(|e| PoolSeed { eta: e15_inv.clone(), eisenstein: vec![e] }),
        )
        .collect();
    for exps in [
        [(1u64, -2i64), (3, 1), (5, 1), (15, -2)],   // divisor (-1,-1, 0, 0)
        [(1, 3), (3, -4), (5, 0), (15, -1)],         // divisor (-1, 1,-2, 0)
        [(1, -7), (3, 6), (5, 2), (15, -3)],         // divisor (-1,-3, 2, 0)
        [(1, 7), (3, -2), (5, -8), (15, 1)],         // divisor (-1, 3, 0,-4)
        [(1, 0), (3, -1), (5, 3), (15, -4)],         // divisor (-2, 0,-1, 1)
        [(1, -5), (3, 4), (5, 4), (15, -5)],         // divisor (-2,-2, 1, 1)
        [(1, 5), (3, -6), (5, 2), (15, -3)],         // divisor (-2, 2,-3, 1)
        [(1, -4), (3, -3), (5, 11), (15, -6)],       // divisor (-2,-2,-3, 5)
        [(1, 2), (3, -3), (5, 5), (15, -6)],         // divisor (-3, 1,-2, 2)
        [(1, -3), (3, 2), (5, 6), (15, -7)],         // divisor (-3,-1, 0, 2)
        [(1, -8), (3, 7), (5, 7), (15, -8)],         // divisor (-3,-3, 2, 2)
        [(1, 1), (3, 4), (5, -2), (15, -5)],         // divisor (-3, 1, 2,-2)
    ] {
        wm1_seeds.push(PoolSeed { eta: eta(15, &exps), eisenstein: vec![] });
    }
    LevelPreset {
        name: "N15".to_string(),
        chi,
        ascent: eta(15, &[(1, -1), (3, 1), (5, 5), (15, -5)]),
        ascent_pole: 2,
        precision_margin: 10,
        pools: vec![
            PoolSpec {
                weight: 3,
                max_pole: 0,
                ascent_min: 0,
                min_precision: 96,
                seeds: w3_seeds,
                expected: vec![expected("++", &[0, 1]), expected("--", &[0, 2])],
            },
            PoolSpec {
                weight: -1,
                max_pole: 12,
                ascent_min: -1,
                min_precision: 0,
                seeds: wm1_seeds,
                expected: vec![],
            },
        ],
    }
}

/// All built-in presets, by name.
pub fn builtin_presets() -> Vec<LevelPreset> {
    vec![preset_n1(), preset_n5(), preset_n8(), preset_n13(), preset_n15()]
}

/// Looks up a built-in preset by its name (`N1`, `N5`, `N8`, `N13`, `N15`).
pub fn builtin_preset(name: &str) -> Result<LevelPreset> {
    builtin_presets()
        .into_iter()
        .find(|p| p.name == name)
        .ok_or_else(|| crate::Error::PresetValidation(alloc::format!("unknown preset `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_validate() {
        for preset in builtin_presets() {
            preset.validate().unwrap_or_else(|e| panic!("{}: {e}", preset.name));
        }
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(builtin_preset("N13").unwrap().level(), 13);
        assert!(builtin_preset("N7").is_err());
    }
}
