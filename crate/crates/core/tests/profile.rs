// Scratch: phase timings for the heavy level-15 weight -1 computation.

use epsgrid::characters::SignVector;
use epsgrid::formgen::{build_pool, expand_seed};
use epsgrid::presets;
use epsgrid::reduced::{certification_precision_with_margin, epsilon_solve, reduced_grid_weighted};
use std::time::Instant;

#[test]
#[ignore]
fn phases() {
    let preset = presets::builtin_preset("N15").unwrap();
    let spec = preset.pool_spec(-1).unwrap();
    let prec = certification_precision_with_margin(15, -1, spec.max_pole, 10);
    let t = Instant::now();
    let seeds: Vec<_> = spec.seeds.iter().map(|s| expand_seed(s, prec + 30).unwrap()).collect();
    println!("seed expansion ({}): {:?}", seeds.len(), t.elapsed());
    let t = Instant::now();
    let pool = build_pool(&preset, -1, spec.max_pole, prec).unwrap();
    println!("build_pool ({} members): {:?}", pool.len(), t.elapsed());
    let eps = SignVector::parse(&preset.chi, "--").unwrap();
    let t = Instant::now();
    let sols = epsilon_solve(&pool, &preset.chi, &eps, prec).unwrap();
    println!("epsilon_solve ({} solutions): {:?}", sols.len(), t.elapsed());
    let t = Instant::now();
    let grid = reduced_grid_weighted(&pool, &preset.chi, &eps, -1, spec.max_pole, prec).unwrap();
    println!("reduced_grid (orders {:?}): {:?}", grid.orders(), t.elapsed());
}
