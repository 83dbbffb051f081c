//! Persistence modules over the incidence category of a finite poset.
//!
//! Structure maps are stored only on Hasse arrows. Construction validates
//! functoriality (all path compositions agree) and caches the composite
//! `map(x, y)` for every comparable pair, after which a module is immutable
//! and freely shareable across threads.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::formal::FormalMorphism;
use crate::matrix::DenseMatrix;
use crate::poset::{Interval, Poset};
use std::collections::BTreeMap;

#[derive(Clone)]
pub struct PersistenceModule {
    poset: Poset,
    field: Field,
    dims: Vec<usize>,
    // Composite structure maps for every comparable pair, filled at
    // construction once path-independence is proven.
    pair_maps: BTreeMap<(usize, usize), DenseMatrix>,
}

impl PersistenceModule {
    /// Builds and validates a module from per-arrow structure maps.
    ///
    /// `arrow_maps` must hold one matrix of shape `dims[y] x dims[x]` per
    /// Hasse arrow `(x, y)`. Any pair of Hasse paths between comparable
    /// elements must compose to the same matrix.
    pub fn new(
        poset: Poset,
        field: Field,
        dims: Vec<usize>,
        arrow_maps: &BTreeMap<(usize, usize), DenseMatrix>,
    ) -> Result<Self> {
        let n = poset.len();
        if dims.len() != n {
            return Err(Error::BadInput(format!(
                "{} dims for {} elements",
                dims.len(),
                n
            )));
        }
        for &(x, y) in poset.hasse_arrows() {
            let m = arrow_maps
                .get(&(x, y))
                .ok_or_else(|| Error::BadInput(format!("missing map for arrow {x}->{y}")))?;
            if (m.rows(), m.cols()) != (dims[y], dims[x]) {
                return Err(Error::Shape(format!(
                    "arrow {x}->{y}: got {}x{}, need {}x{}",
                    m.rows(),
                    m.cols(),
                    dims[y],
                    dims[x]
                )));
            }
            if m.field() != field {
                return Err(Error::BadInput(format!(
                    "arrow {x}->{y} uses field {}, module uses {field}",
                    m.field()
                )));
            }
        }
        for &(x, y) in arrow_maps.keys() {
            if !poset.hasse_arrows().contains(&(x, y)) {
                return Err(Error::BadInput(format!(
                    "map given for {x}->{y}, which is not a covering arrow"
                )));
            }
        }

        let order = topological_order(&poset);
        let mut pair_maps = BTreeMap::new();
        for x in 0..n {
            pair_maps.insert((x, x), DenseMatrix::identity(field, dims[x]));
            for &z in &order {
                if z == x || !poset.leq(x, z) {
                    continue;
                }
                // All last-arrow extensions of already-checked composites
                // must agree; by induction this proves path-independence.
                let mut composite: Option<DenseMatrix> = None;
                for &(w, t) in poset.hasse_arrows() {
                    if t != z || !poset.leq(x, w) {
                        continue;
                    }
                    let step = arrow_maps[&(w, z)].mul(&pair_maps[&(x, w)]);
                    match &composite {
                        None => composite = Some(step),
                        Some(existing) => {
                            if *existing != step {
                                return Err(Error::Commutativity { x, y: z });
                            }
                        }
                    }
                }
                let m = composite.expect("z > x implies an incoming arrow from the up-set of x");
                pair_maps.insert((x, z), m);
            }
        }

        Ok(PersistenceModule {
            poset,
            field,
            dims,
            pair_maps,
        })
    }

    /// The interval module `V_I`: one-dimensional on `I` with identity
    /// internal maps, zero outside.
    pub fn interval_module(poset: &Poset, interval: &Interval, field: Field) -> Self {
        let dims: Vec<usize> = (0..poset.len())
            .map(|x| usize::from(interval.contains(x)))
            .collect();
        let mut maps = BTreeMap::new();
        for &(x, y) in poset.hasse_arrows() {
            let m = if interval.contains(x) && interval.contains(y) {
                DenseMatrix::identity(field, 1)
            } else {
                DenseMatrix::zeros(field, dims[y], dims[x])
            };
            maps.insert((x, y), m);
        }
        Self::new(poset.clone(), field, dims, &maps).expect("interval modules are functorial")
    }

    pub fn zero_module(poset: &Poset, field: Field) -> Self {
        let dims = vec![0; poset.len()];
        let mut maps = BTreeMap::new();
        for &(x, y) in poset.hasse_arrows() {
            maps.insert((x, y), DenseMatrix::zeros(field, 0, 0));
        }
        Self::new(poset.clone(), field, dims, &maps).expect("zero module is functorial")
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, x: usize) -> usize {
        self.dims[x]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// The composite structure map `M(x) -> M(y)` for `x <= y`.
    pub fn map(&self, x: usize, y: usize) -> &DenseMatrix {
        self.pair_maps
            .get(&(x, y))
            .unwrap_or_else(|| panic!("map({x},{y}) requested but {x} <= {y} fails"))
    }

    /// Blockwise direct sum.
    pub fn direct_sum(&self, other: &PersistenceModule) -> Result<PersistenceModule> {
        if !self.poset.same_order(&other.poset) {
            return Err(Error::PosetMismatch);
        }
        if self.field != other.field {
            return Err(Error::BadInput("direct sum across fields".into()));
        }
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let mut maps = BTreeMap::new();
        for &(x, y) in self.poset.hasse_arrows() {
            maps.insert(
                (x, y),
                DenseMatrix::block_diag(self.field, &[self.map(x, y), other.map(x, y)]),
            );
        }
        PersistenceModule::new(self.poset.clone(), self.field, dims, &maps)
    }

    /// Structural equality: same dims and same composite maps.
    pub fn structurally_equal(&self, other: &PersistenceModule) -> bool {
        self.poset.same_order(&other.poset)
            && self.dims == other.dims
            && self.pair_maps == other.pair_maps
    }

    /// Evaluates a formal block morphism at this module: the `(j, i)` block
    /// is `coeff * M(x_i -> y_j)`, a zero block when the coefficient is 0.
    /// Empty object lists produce 0-dimension blocks.
    pub fn evaluate(&self, g: &FormalMorphism) -> DenseMatrix {
        let row_dims: Vec<usize> = g.row_objects().iter().map(|&y| self.dims[y]).collect();
        let col_dims: Vec<usize> = g.col_objects().iter().map(|&x| self.dims[x]).collect();
        let rows: usize = row_dims.iter().sum();
        let cols: usize = col_dims.iter().sum();
        let mut out = DenseMatrix::zeros(self.field, rows, cols);
        let mut ro = 0;
        for (j, &y) in g.row_objects().iter().enumerate() {
            let mut co = 0;
            for (i, &x) in g.col_objects().iter().enumerate() {
                let c = g.coeff(j, i);
                if c != 0 {
                    let scalar = self.field.from_i64(c);
                    let block = self.map(x, y).scale(&scalar);
                    for bi in 0..block.rows() {
                        for bj in 0..block.cols() {
                            out.set(ro + bi, co + bj, block.get(bi, bj).clone());
                        }
                    }
                }
                co += col_dims[i];
            }
            ro += row_dims[j];
        }
        out
    }
}

impl std::fmt::Debug for PersistenceModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PersistenceModule(dims={:?}, field={})",
            self.dims, self.field
        )
    }
}

fn topological_order(poset: &Poset) -> Vec<usize> {
    let n = poset.len();
    let mut indeg = vec![0usize; n];
    for &(_, y) in poset.hasse_arrows() {
        indeg[y] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = ready.pop() {
        order.push(x);
        for &(a, b) in poset.hasse_arrows() {
            if a == x {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.push(b);
                }
            }
        }
    }
    debug_assert_eq!(order.len(), n);
    order
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::poset::{make_chain, make_grid};

    pub(crate) fn module_from_specs(
        poset: &Poset,
        field: Field,
        dims: &[usize],
        arrows: &[((usize, usize), Vec<Vec<i64>>)],
    ) -> Result<PersistenceModule> {
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
        PersistenceModule::new(poset.clone(), field, dims.to_vec(), &maps)
    }

    /// The G_{4,2} module of the worked grid example: indices 0..3 are the
    /// bottom row 1..4, indices 4..7 are the top row 1'..4'.
    pub(crate) fn example_grid_module(field: Field) -> PersistenceModule {
        let p = make_grid(4, 2);
        let dims = [1, 3, 3, 3, 2, 2, 2, 1];
        module_from_specs(
            &p,
            field,
            &dims,
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
        .unwrap()
    }

    /// The variant with `M_{4',3'}` and `M_{4',4}` replaced by [1,0] and
    /// [1,0,0].
    pub(crate) fn example_grid_module_variant(field: Field) -> PersistenceModule {
        let p = make_grid(4, 2);
        let dims = [1, 3, 3, 3, 2, 2, 2, 1];
        module_from_specs(
            &p,
            field,
            &dims,
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
        .unwrap()
    }

    #[test]
    fn chain_module_validates() {
        let p = make_chain(3);
        let m = module_from_specs(
            &p,
            Field::GF2,
            &[1, 1, 1],
            &[((0, 1), vec![vec![1]]), ((1, 2), vec![vec![1]])],
        );
        assert!(m.is_ok());
    }

    #[test]
    fn example_module_validates_and_composes() {
        let m = example_grid_module(Field::GF2);
        // M_{4,1} composes to the column (0,0,1)^t.
        let c = m.map(0, 3);
        assert_eq!((c.rows(), c.cols()), (3, 1));
        assert!(c.get(0, 0).is_zero());
        assert!(c.get(1, 0).is_zero());
        assert!(c.get(2, 0).is_one());
    }

    #[test]
    fn commutativity_violation_reported() {
        let p = make_grid(2, 2);
        // Square 0 -> 1, 0 -> 2, 1 -> 3, 2 -> 3 with differing compositions.
        let got = module_from_specs(
            &p,
            Field::GF2,
            &[1, 1, 1, 1],
            &[
                ((0, 1), vec![vec![1]]),
                ((0, 2), vec![vec![1]]),
                ((1, 3), vec![vec![1]]),
                ((2, 3), vec![vec![0]]),
            ],
        );
        match got {
            Err(Error::Commutativity { x, y }) => {
                assert_eq!((x, y), (0, 3));
            }
            other => panic!("expected commutativity error, got {other:?}"),
        }
    }

    #[test]
    fn interval_module_dimensions() {
        let p = make_grid(4, 2);
        let i = p.interval(&[1, 2, 3, 4, 5, 6]).unwrap();
        let v = PersistenceModule::interval_module(&p, &i, Field::GF2);
        assert_eq!(v.dims(), &[0, 1, 1, 1, 1, 1, 1, 0]);
        let single = p.interval(&[2]).unwrap();
        let s = PersistenceModule::interval_module(&p, &single, Field::GF2);
        assert_eq!(s.total_dim(), 1);
    }

    #[test]
    fn interval_modules_validate_everywhere() {
        let p = make_grid(2, 2);
        for i in p.enumerate_intervals() {
            let _ = PersistenceModule::interval_module(&p, &i, Field::gf(3).unwrap());
        }
    }

    #[test]
    fn direct_sum_dims_and_mismatch() {
        let p = make_grid(4, 2);
        let i = p.interval(&[1, 2, 3, 4, 5, 6]).unwrap();
        let v = PersistenceModule::interval_module(&p, &i, Field::GF2);
        let vv = v.direct_sum(&v).unwrap();
        assert_eq!(vv.dims(), &[0, 2, 2, 2, 2, 2, 2, 0]);
        let z = PersistenceModule::zero_module(&p, Field::GF2);
        assert!(v.direct_sum(&z).unwrap().structurally_equal(&v));
        let q = make_chain(8);
        let w = PersistenceModule::zero_module(&q, Field::GF2);
        assert!(matches!(v.direct_sum(&w), Err(Error::PosetMismatch)));
    }

    #[test]
    fn example_decomposition_dims_agree() {
        // M and V_I^2 + V_[1,4] + V_{4'} have the same dimension vector.
        let p = make_grid(4, 2);
        let f = Field::GF2;
        let m = example_grid_module(f);
        let i = p.interval(&[1, 2, 3, 4, 5, 6]).unwrap();
        let vi = PersistenceModule::interval_module(&p, &i, f);
        let seg = p.interval(&[0, 1, 2, 3]).unwrap();
        let vseg = PersistenceModule::interval_module(&p, &seg, f);
        let pt = p.interval(&[7]).unwrap();
        let vpt = PersistenceModule::interval_module(&p, &pt, f);
        let sum = vi
            .direct_sum(&vi)
            .unwrap()
            .direct_sum(&vseg)
            .unwrap()
            .direct_sum(&vpt)
            .unwrap();
        assert_eq!(sum.dims(), m.dims());
    }

    #[test]
    fn evaluate_identity_morphism() {
        let m = example_grid_module(Field::GF2);
        let mut g = FormalMorphism::zero(vec![1], vec![1]);
        g.set(0, 0, 1);
        let e = m.evaluate(&g);
        assert_eq!(e, DenseMatrix::identity(Field::GF2, 3));
    }

    #[test]
    fn evaluate_respects_direct_sums() {
        let p = make_grid(4, 2);
        let f = Field::gf(5).unwrap();
        let m = example_grid_module(f);
        let i = p.interval(&[1, 2, 3, 4, 5, 6]).unwrap();
        let n = PersistenceModule::interval_module(&p, &i, f);
        let sum = m.direct_sum(&n).unwrap();
        let mut g = FormalMorphism::zero(vec![5, 3], vec![0, 1]);
        g.set(0, 0, 1);
        g.set(0, 1, -1);
        g.set(1, 1, 1);
        assert_eq!(
            sum.evaluate(&g).rank(),
            m.evaluate(&g).rank() + n.evaluate(&g).rank()
        );
    }
}
