//! Shared fixtures for the integration suites: the worked G_{4,2} module
//! and its variant, the two D-type scenarios, and the G_{5,2} filtration
//! with its zigzag cover.

// Each test binary uses its own subset of these fixtures.
#![allow(dead_code)]

use intmult::cover::OrderMap;
use intmult::field::Field;
use intmult::homology::{face_closure, SimplicialFiltration};
use intmult::matrix::DenseMatrix;
use intmult::module::PersistenceModule;
use intmult::poset::{make_grid, make_zigzag, Interval, Poset};
use std::collections::BTreeMap;

pub fn module_from_specs(
    poset: &Poset,
    field: Field,
    dims: &[usize],
    arrows: &[((usize, usize), Vec<Vec<i64>>)],
) -> PersistenceModule {
    let mut maps = BTreeMap::new();
    for ((x, y), rows) in arrows {
        let r: Vec<&[i64]> = rows.iter().map(|v| v.as_slice()).collect();
        let m = if rows.is_empty() || rows[0].is_empty() {
            DenseMatrix::zeros(field, dims[*y], dims[*x])
        } else {
            DenseMatrix::from_rows(field, &r)
        };
        maps.insert((*x, *y), m);
    }
    for &(x, y) in poset.hasse_arrows() {
        maps.entry((x, y))
            .or_insert_with(|| DenseMatrix::zeros(field, dims[y], dims[x]));
    }
    PersistenceModule::new(poset.clone(), field, dims.to_vec(), &maps).expect("valid module")
}

/// The G_{4,2} module with decomposition V_I^2 + V_[1,4] + V_{4'}:
/// bottom row 1..4 are indices 0..3, top row 1'..4' are 4..7.
pub fn grid_example_module(field: Field) -> PersistenceModule {
    let p = make_grid(4, 2);
    module_from_specs(
        &p,
        field,
        &[1, 3, 3, 3, 2, 2, 2, 1],
        &[
            ((0, 1), vec![vec![0], vec![0], vec![1]]),
            ((1, 2), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            ((2, 3), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            ((4, 5), vec![vec![1, 0], vec![0, 1]]),
            ((5, 6), vec![vec![1, 0], vec![0, 1]]),
            ((6, 7), vec![vec![0, 0]]),
            ((0, 4), vec![vec![0], vec![0]]),
            ((1, 5), vec![vec![1, 0, 0], vec![0, 1, 0]]),
            ((2, 6), vec![vec![1, 0, 0], vec![0, 1, 0]]),
            ((3, 7), vec![vec![0, 0, 0]]),
        ],
    )
}

/// The variant with the maps into 4' made nonzero; decomposition picks up
/// V_[{2,1'},4'] instead of one copy of V_I.
pub fn grid_example_variant(field: Field) -> PersistenceModule {
    let p = make_grid(4, 2);
    module_from_specs(
        &p,
        field,
        &[1, 3, 3, 3, 2, 2, 2, 1],
        &[
            ((0, 1), vec![vec![0], vec![0], vec![1]]),
            ((1, 2), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            ((2, 3), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            ((4, 5), vec![vec![1, 0], vec![0, 1]]),
            ((5, 6), vec![vec![1, 0], vec![0, 1]]),
            ((6, 7), vec![vec![1, 0]]),
            ((0, 4), vec![vec![0], vec![0]]),
            ((1, 5), vec![vec![1, 0, 0], vec![0, 1, 0]]),
            ((2, 6), vec![vec![1, 0, 0], vec![0, 1, 0]]),
            ((3, 7), vec![vec![1, 0, 0]]),
        ],
    )
}

pub fn grid_example_interval(p: &Poset) -> Interval {
    p.interval(&[1, 2, 3, 4, 5, 6]).expect("[{2,1'},{4,3'}]")
}

/// D-type poset 1 -> 2 -> 3 with 4 -> 2 (indices 0..3 for labels 1..4).
pub fn d_poset() -> Poset {
    Poset::from_hasse(4, &[(0, 1), (1, 2), (3, 1)]).unwrap()
}

pub fn d_module_one(field: Field) -> PersistenceModule {
    module_from_specs(
        &d_poset(),
        field,
        &[1, 2, 1, 1],
        &[
            ((0, 1), vec![vec![1], vec![1]]),
            ((1, 2), vec![vec![1, 0]]),
            ((3, 1), vec![vec![1], vec![1]]),
        ],
    )
}

pub fn d_module_two(field: Field) -> PersistenceModule {
    module_from_specs(
        &d_poset(),
        field,
        &[1, 2, 1, 1],
        &[
            ((0, 1), vec![vec![0], vec![1]]),
            ((1, 2), vec![vec![1, 1]]),
            ((3, 1), vec![vec![1], vec![0]]),
        ],
    )
}

/// The tree cover of the D-type poset: same elements, but with the curved
/// relation 1 <= 3 replacing the factorization through 2.
pub fn d_cover() -> OrderMap {
    let z = Poset::from_hasse(4, &[(0, 1), (3, 1), (0, 2)]).unwrap();
    OrderMap::new(z, d_poset(), vec![0, 1, 2, 3]).unwrap()
}

/// Source-centered star 2 -> 1, 2 -> 3, 2 -> 4 (indices 0..3 for 1..4).
pub fn star_poset() -> Poset {
    Poset::from_hasse(4, &[(1, 0), (1, 2), (1, 3)]).unwrap()
}

pub fn star_module(field: Field) -> PersistenceModule {
    module_from_specs(
        &star_poset(),
        field,
        &[1, 3, 2, 1],
        &[
            ((1, 0), vec![vec![1, 0, 0]]),
            ((1, 2), vec![vec![1, 0, 0], vec![0, 1, 1]]),
            ((1, 3), vec![vec![1, 0, 0]]),
        ],
    )
}

/// The folded zigzag 2 -> 3 <- 2' -> 1 <- 2'' -> 4 mapping every copy of 2
/// onto 2.
pub fn star_folded_cover() -> OrderMap {
    let z = make_zigzag("fbfbf").unwrap();
    OrderMap::new(z, star_poset(), vec![1, 2, 1, 0, 1, 3]).unwrap()
}

/// The G_{5,2} scenario: the interval spanning both rows, the zigzag
/// subposet covering it, and a filtration on four points realizing the
/// worked homology data. Grid indices: (x,y) has index (y-1)*5 + (x-1).
pub struct GridCoverScenario {
    pub poset: Poset,
    pub interval: Interval,
    pub zigzag: Poset,
    pub zeta: OrderMap,
    pub filtration: SimplicialFiltration,
}

pub fn grid_cover_scenario() -> GridCoverScenario {
    let poset = make_grid(5, 2);
    // I = [{(2,1),(1,2)}, {(5,1),(3,2)}]
    let interval = poset.interval(&[1, 2, 3, 4, 5, 6, 7]).unwrap();
    // Z in zigzag order 42, 12, 22, 21, 32, 31, 51, 11.
    let zigzag = make_zigzag("bfbfbfb").unwrap();
    let zeta = OrderMap::new(zigzag.clone(), poset.clone(), vec![8, 5, 6, 1, 7, 2, 4, 0]).unwrap();

    let everywhere: Vec<usize> = (0..10).collect();
    let simplices = face_closure(vec![
        (vec![1], everywhere.clone()),
        (vec![2], everywhere.clone()),
        (vec![3], everywhere.clone()),
        (vec![4], everywhere.clone()),
        (vec![2, 3], everywhere.clone()),
        (vec![3, 4], everywhere.clone()),
        (vec![2, 4], everywhere),
        // edge {1,3} appears from (2,1)
        (vec![1, 3], vec![1, 2, 3, 4, 6, 7, 8, 9]),
        // edge {1,4} appears from (2,1) and (1,2)
        (vec![1, 4], vec![1, 2, 3, 4, 5, 6, 7, 8, 9]),
        // edge {1,2} appears from (3,1) and (1,2)
        (vec![1, 2], vec![2, 3, 4, 5, 6, 7, 8, 9]),
        // triangle {2,3,4} fills from (4,2)
        (vec![2, 3, 4], vec![8, 9]),
    ]);
    let filtration = SimplicialFiltration::new(poset.clone(), simplices).unwrap();
    GridCoverScenario {
        poset,
        interval,
        zigzag,
        zeta,
        filtration,
    }
}
