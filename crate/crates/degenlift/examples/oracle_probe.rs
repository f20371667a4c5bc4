// scratch probe: compare kuranishi vanishing condition with lifter ideal on random fixtures
use degenlift::{fixtures, kuranishi, lifter, lines::Line};

fn main() {
    for seed in 0..10u64 {
        let (spec, feet) = fixtures::k3_oracle_fixture(seed);
        let line = Line::through(&feet[0], &feet[1]).unwrap();
        assert!(line.contains(&feet[2]));
        let kur = kuranishi::kuranishi_first_order(&spec, &line).unwrap();
        let ideal = lifter::obstruction_ideal(&spec, &line, 2).unwrap();
        println!("seed {seed}: kuranishi = {}", kur.vanishing_condition);
        for g in &ideal {
            println!("  lifter  = {g}");
        }
        if ideal.len() == 1 {
            let k = &kur.vanishing_condition;
            let g = &ideal[0];
            if k == g {
                println!("  EXACT MATCH");
            } else if let Some(q) = g.try_div_exact(k) {
                println!("  lifter = kuranishi * ({q})");
            } else if let Some(q) = k.try_div_exact(g) {
                println!("  kuranishi = lifter * ({q})");
            } else {
                println!("  MISMATCH!");
            }
        }
    }
}
