//! Long-running randomized sweeps, excluded from the default run:
//! `cargo test -p intmult --test stress -- --ignored --nocapture`

use intmult::bipath::{diagram_closed_form, diagram_via_unified_cover, diagram_via_zigzag};
use intmult::field::Field;
use intmult::grid::{grid_multiplicity, reduced_rank_multiplicity};
use intmult::multiplicity::{interval_multiplicity, oracle_multiplicity};
use intmult::poset::{make_bipath, make_grid};
use intmult::sample::{random_module, random_poset, Rng};

#[test]
#[ignore = "long randomized sweep"]
fn oracle_equivalence_deep() {
    let mut rng = Rng::new(0x5EED_0001);
    let fields = [
        Field::GF2,
        Field::gf(3).unwrap(),
        Field::gf(7).unwrap(),
        Field::Rationals,
    ];
    let mut intervals_checked = 0usize;
    for round in 0..3000usize {
        let field = fields[round % fields.len()];
        let n = 2 + rng.below(8); // up to 9 elements
        let poset = random_poset(n, &mut rng);
        let module = random_module(&poset, field, 4, &mut rng);
        for interval in poset.enumerate_intervals() {
            assert_eq!(
                interval_multiplicity(&module, &interval),
                oracle_multiplicity(&module, &interval),
                "round {round} over {field}, interval {interval:?}"
            );
            intervals_checked += 1;
        }
    }
    println!("deep oracle sweep: {intervals_checked} intervals checked");
}

#[test]
#[ignore = "long randomized sweep"]
fn grid_paths_deep() {
    let mut rng = Rng::new(0x5EED_0002);
    for (w, h) in [(4, 4), (5, 3), (5, 2)] {
        let poset = make_grid(w, h);
        let intervals = poset.enumerate_intervals();
        println!("grid {w}x{h}: {} intervals", intervals.len());
        for _ in 0..3 {
            let module = random_module(&poset, Field::gf(5).unwrap(), 3, &mut rng);
            for interval in &intervals {
                let general = interval_multiplicity(&module, interval);
                assert_eq!(grid_multiplicity(&module, interval).unwrap(), general);
                assert_eq!(
                    reduced_rank_multiplicity(&module, interval).unwrap(),
                    general
                );
            }
        }
    }
}

#[test]
#[ignore = "long randomized sweep"]
fn bipath_routes_deep() {
    let mut rng = Rng::new(0x5EED_0003);
    for round in 0..600usize {
        let n = 1 + rng.below(5);
        let m = 1 + rng.below(5);
        let poset = make_bipath(n, m);
        let module = random_module(&poset, Field::GF2, 3, &mut rng);
        let closed = diagram_closed_form(&module).unwrap();
        assert_eq!(
            closed,
            diagram_via_zigzag(&module).unwrap(),
            "round {round}"
        );
        if n <= 3 && m <= 3 {
            assert_eq!(
                closed,
                diagram_via_unified_cover(&module).unwrap(),
                "round {round}"
            );
        }
        assert_eq!(closed.total_dim(), module.total_dim(), "round {round}");
    }
}
