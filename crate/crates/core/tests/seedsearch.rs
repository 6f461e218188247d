// Scratch: enumerate weight -1, chi-character eta quotients on Gamma_0(15)
// and print their cusp divisors, to pick seeds covering the pole shapes.

use epsgrid::characters::QuadCharacter;
use epsgrid::formgen::EtaQuotient;

#[test]
#[ignore]
fn search_weight_minus1_level15() {
    let chi = QuadCharacter::parse_config("N=15").unwrap();
    let b = 16i64;
    let mut found = 0;
    for r1 in -b..=b {
        for r3 in -b..=b {
            for r5 in -b..=b {
                let r15 = -2 - r1 - r3 - r5;
                if r15.abs() > b {
                    continue;
                }
                if (r3 + r15).rem_euclid(2) != 1 || (r5 + r15).rem_euclid(2) != 1 {
                    continue;
                }
                let quot =
                    EtaQuotient::new(15, &[(1, r1), (3, r3), (5, r5), (15, r15)]).unwrap();
                if quot.validate_integrality().is_err() {
                    continue;
                }
                if quot.character_matches(Some(&chi)) != Ok(true) {
                    continue;
                }
                let ords = quot.ligozat_orders();
                let inf = &ords[&15];
                // Interesting: pole at infinity within the window, any shape.
                let ok = *inf >= epsgrid::rat(-12, 1) && *inf <= epsgrid::rat(-1, 1);
                if ok {
                    found += 1;
                    println!(
                        "({r1},{r3},{r5},{r15}) div inf={} zero={} third={} fifth={}",
                        ords[&15], ords[&1], ords[&3], ords[&5]
                    );
                }
            }
        }
    }
    println!("total {found}");
}
