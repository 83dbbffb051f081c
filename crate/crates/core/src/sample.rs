//! Deterministic random instances for the randomized suites.
//!
//! Modules are sampled as cokernels of random maps between projectives,
//! which produces arbitrary (not just interval-decomposable) modules while
//! guaranteeing functoriality by construction.

use crate::field::Field;
use crate::matrix::DenseMatrix;
use crate::module::PersistenceModule;
use crate::poset::Poset;
use std::collections::BTreeMap;

/// xorshift64*; fixed seeds give identical streams on every platform.
#[derive(Clone)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        (self.next_u64() % den as u64) < num as u64
    }
}

/// A random poset on `n` elements whose relation refines the index order.
pub fn random_poset(n: usize, rng: &mut Rng) -> Poset {
    loop {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                // Denser for small n so connected instances are common.
                if rng.chance(2, (n as u32).max(4)) {
                    edges.push((i, j));
                }
            }
        }
        if let Ok(p) = Poset::from_hasse(n, &edges) {
            return p;
        }
    }
}

/// A random connected poset on `n` elements.
pub fn random_connected_poset(n: usize, rng: &mut Rng) -> Poset {
    loop {
        let p = random_poset(n, rng);
        let all: Vec<usize> = (0..n).collect();
        if p.is_connected(&all) {
            return p;
        }
    }
}

/// A random module with pointwise dimension at most `max_dim`, built as the
/// cokernel of a random morphism between projectives.
pub fn random_module(
    poset: &Poset,
    field: Field,
    max_dim: usize,
    rng: &mut Rng,
) -> PersistenceModule {
    loop {
        let m = random_cokernel_module(poset, field, rng);
        if m.dims().iter().all(|&d| d <= max_dim) && m.total_dim() > 0 {
            return m;
        }
    }
}

fn random_cokernel_module(poset: &Poset, field: Field, rng: &mut Rng) -> PersistenceModule {
    let n = poset.len();
    let n_generators = 1 + rng.below(4.min(n) + 1);
    let generators: Vec<usize> = (0..n_generators).map(|_| rng.below(n)).collect();
    let n_relations = rng.below(n_generators + 2);
    // Relation r lives at `site`: a vector over generators below the site.
    let relations: Vec<(usize, Vec<i64>)> = (0..n_relations)
        .map(|_| {
            let site = rng.below(n);
            let coeffs = generators
                .iter()
                .map(|&g| {
                    if poset.leq(g, site) && rng.chance(2, 3) {
                        match rng.below(3) {
                            0 => 1,
                            1 => -1,
                            _ => 2,
                        }
                    } else {
                        0
                    }
                })
                .collect();
            (site, coeffs)
        })
        .collect();
    cokernel_module(poset, field, &generators, &relations)
}

/// The module presented by `generators` (one projective per entry) and
/// `relations` (a site plus one coefficient per generator; a coefficient
/// may be nonzero only if the generator lies below the site).
pub fn cokernel_module(
    poset: &Poset,
    field: Field,
    generators: &[usize],
    relations: &[(usize, Vec<i64>)],
) -> PersistenceModule {
    let n = poset.len();
    // Value at x: span of the generators below x, modulo relations at
    // sites below x.
    let slots_at = |x: usize| -> Vec<usize> {
        generators
            .iter()
            .enumerate()
            .filter(|&(_, &g)| poset.leq(g, x))
            .map(|(k, _)| k)
            .collect()
    };
    let relation_matrix = |x: usize, slots: &[usize]| -> DenseMatrix {
        let active: Vec<&(usize, Vec<i64>)> = relations
            .iter()
            .filter(|(site, _)| poset.leq(*site, x))
            .collect();
        let mut m = DenseMatrix::zeros(field, slots.len(), active.len());
        for (c, (_, coeffs)) in active.iter().enumerate() {
            for (r, &slot) in slots.iter().enumerate() {
                m.set(r, c, field.from_i64(coeffs[slot]));
            }
        }
        m
    };

    // Choose, per element, standard basis vectors completing the relation
    // image to the full slot space; they represent the quotient basis.
    let mut dims = vec![0usize; n];
    let mut basis: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut slot_cache: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut rel_cache: Vec<DenseMatrix> = Vec::with_capacity(n);
    for x in 0..n {
        let slots = slots_at(x);
        let rel = relation_matrix(x, &slots);
        let mut chosen = Vec::new();
        let mut current = rel.clone();
        let mut rank = rel.rank();
        for (pos, _) in slots.iter().enumerate() {
            let mut e = DenseMatrix::zeros(field, slots.len(), 1);
            e.set(pos, 0, field.one());
            let widened = DenseMatrix::hstack(field, &[&current, &e]).unwrap();
            if widened.rank() > rank {
                rank += 1;
                chosen.push(pos);
                current = widened;
            }
        }
        dims[x] = chosen.len();
        basis[x] = chosen;
        slot_cache.push(slots);
        rel_cache.push(rel);
    }

    let mut maps = BTreeMap::new();
    for &(x, y) in poset.hasse_arrows() {
        // Express each basis vector of M(x), zero-extended into the slot
        // space at y, in M(y)'s basis modulo relations at y.
        let sy = &slot_cache[y];
        // Columns: chosen basis vectors at y, then the relation image at y.
        let mut basis_block = DenseMatrix::zeros(field, sy.len(), dims[y]);
        for (k, &pos) in basis[y].iter().enumerate() {
            basis_block.set(pos, k, field.one());
        }
        let lhs = DenseMatrix::hstack(field, &[&basis_block, &rel_cache[y]]).unwrap();
        let mut rhs = DenseMatrix::zeros(field, sy.len(), dims[x]);
        for (col, &pos_x) in basis[x].iter().enumerate() {
            let slot_id = slot_cache[x][pos_x];
            let pos_y = sy.iter().position(|&s| s == slot_id).expect("slots grow");
            rhs.set(pos_y, col, field.one());
        }
        let sol = lhs
            .solve_matrix(&rhs)
            .expect("generators at x remain expressible at y");
        let map = sol.select_rows(&(0..dims[y]).collect::<Vec<_>>());
        maps.insert((x, y), map);
    }
    PersistenceModule::new(poset.clone(), field, dims, &maps)
        .expect("cokernel construction is functorial")
}
