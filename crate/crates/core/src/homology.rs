//! From poset-indexed simplicial filtrations to persistence modules.
//!
//! A filtration assigns to each poset element a simplicial complex, with
//! inclusions along the order. Homology in a fixed degree, over an exact
//! field, produces a persistence module whose structure maps are the
//! induced maps on homology, solved exactly in chosen cycle bases.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::DenseMatrix;
use crate::module::PersistenceModule;
use crate::poset::Poset;
use std::collections::{BTreeMap, BTreeSet};

/// A simplex as a sorted vertex list.
pub type Simplex = Vec<u32>;

/// A monotone family of simplicial complexes indexed by a finite poset.
pub struct SimplicialFiltration {
    poset: Poset,
    /// Each simplex with the set of poset elements where it is present;
    /// presence sets are up-sets and faces are present wherever their
    /// cofaces are.
    simplices: Vec<(Simplex, Vec<usize>)>,
}

impl SimplicialFiltration {
    pub fn new(poset: Poset, simplices: Vec<(Simplex, Vec<usize>)>) -> Result<Self> {
        let mut seen: BTreeSet<Simplex> = BTreeSet::new();
        for (verts, present) in &simplices {
            if verts.is_empty() {
                return Err(Error::BadFiltration("empty simplex".into()));
            }
            if verts.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::BadFiltration(format!(
                    "vertices of {verts:?} must be strictly increasing"
                )));
            }
            if !seen.insert(verts.clone()) {
                return Err(Error::BadFiltration(format!("duplicate simplex {verts:?}")));
            }
            for &e in present {
                if e >= poset.len() {
                    return Err(Error::IndexOutOfRange(e, poset.len()));
                }
            }
            let mut sorted = present.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if poset.up_set(&sorted) != sorted {
                return Err(Error::BadFiltration(format!(
                    "presence set of {verts:?} is not an up-set"
                )));
            }
        }
        let table: BTreeMap<&Simplex, &Vec<usize>> =
            simplices.iter().map(|(s, p)| (s, p)).collect();
        for (verts, present) in &simplices {
            if verts.len() == 1 {
                continue;
            }
            for skip in 0..verts.len() {
                let facet: Simplex = verts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let facet_present = table.get(&facet).ok_or_else(|| {
                    Error::BadFiltration(format!("face {facet:?} of {verts:?} is missing"))
                })?;
                if present.iter().any(|e| !facet_present.contains(e)) {
                    return Err(Error::BadFiltration(format!(
                        "face {facet:?} absent where {verts:?} is present"
                    )));
                }
            }
        }
        Ok(SimplicialFiltration { poset, simplices })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// The simplices of dimension `q` present at `at`, in a fixed order.
    fn complex_part(&self, at: usize, q: usize) -> Vec<&Simplex> {
        let mut part: Vec<&Simplex> = self
            .simplices
            .iter()
            .filter(|(s, present)| s.len() == q + 1 && present.contains(&at))
            .map(|(s, _)| s)
            .collect();
        part.sort();
        part
    }

    fn boundary_matrix(&self, at: usize, q: usize, field: Field) -> DenseMatrix {
        let rows = if q == 0 {
            Vec::new()
        } else {
            self.complex_part(at, q - 1)
        };
        let cols = self.complex_part(at, q);
        let row_index: BTreeMap<&Simplex, usize> =
            rows.iter().enumerate().map(|(k, &s)| (s, k)).collect();
        let mut d = DenseMatrix::zeros(field, rows.len(), cols.len());
        for (j, simplex) in cols.iter().enumerate() {
            if q == 0 {
                continue;
            }
            for skip in 0..simplex.len() {
                let facet: Simplex = simplex
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let i = row_index[&facet];
                let sign = if skip % 2 == 0 { 1 } else { -1 };
                d.set(i, j, field.from_i64(sign));
            }
        }
        d
    }

    /// Euler characteristic at an element, from simplex counts.
    pub fn euler_characteristic(&self, at: usize) -> i64 {
        self.simplices
            .iter()
            .filter(|(_, present)| present.contains(&at))
            .map(|(s, _)| if (s.len() - 1) % 2 == 0 { 1 } else { -1 })
            .sum()
    }
}

struct LocalHomology {
    /// Cycle representatives of the homology basis, as columns over the
    /// q-simplices of the local complex.
    basis: DenseMatrix,
    /// Boundary image generators at this element.
    boundaries: DenseMatrix,
    /// The q-simplices of the local complex, for re-indexing.
    cells: Vec<Simplex>,
}

/// The degree-`q` persistent homology of a filtration as a validated
/// persistence module.
pub fn persistent_homology(
    filtration: &SimplicialFiltration,
    q: usize,
    field: Field,
) -> Result<PersistenceModule> {
    let poset = filtration.poset().clone();
    let n = poset.len();
    let mut locals: Vec<LocalHomology> = Vec::with_capacity(n);
    for x in 0..n {
        let d_q = filtration.boundary_matrix(x, q, field);
        let d_q1 = filtration.boundary_matrix(x, q + 1, field);
        let kernel = d_q.nullspace();
        let n_cells = d_q.cols();
        let kernel_mat = columns_to_matrix(field, n_cells, &kernel);
        // Standard-basis completion of the boundary image inside the cycle
        // space: kernel vectors that enlarge the image span represent a
        // homology basis.
        let mut current = d_q1.clone();
        let mut rank = current.rank();
        let mut chosen: Vec<usize> = Vec::new();
        for k in 0..kernel_mat.cols() {
            let cand = kernel_mat.column(k);
            let widened = DenseMatrix::hstack(field, &[&current, &cand])?;
            if widened.rank() > rank {
                rank += 1;
                chosen.push(k);
                current = widened;
            }
        }
        let basis = kernel_mat.select_columns(&chosen);
        locals.push(LocalHomology {
            basis,
            boundaries: d_q1,
            cells: filtration.complex_part(x, q).into_iter().cloned().collect(),
        });
    }

    let dims: Vec<usize> = locals.iter().map(|l| l.basis.cols()).collect();
    let mut maps = BTreeMap::new();
    for &(x, y) in poset.hasse_arrows() {
        let lx = &locals[x];
        let ly = &locals[y];
        // Re-index cycles of the smaller complex into the larger one.
        let positions: Vec<usize> = lx
            .cells
            .iter()
            .map(|s| {
                ly.cells
                    .binary_search(s)
                    .expect("monotone filtrations only grow")
            })
            .collect();
        let mut reindexed = DenseMatrix::zeros(field, ly.cells.len(), lx.basis.cols());
        for col in 0..lx.basis.cols() {
            for row in 0..lx.cells.len() {
                reindexed.set(positions[row], col, lx.basis.get(row, col).clone());
            }
        }
        // Express each image cycle in the target homology basis modulo
        // boundaries.
        let lhs = DenseMatrix::hstack(field, &[&ly.basis, &ly.boundaries])?;
        let sol = lhs
            .solve_matrix(&reindexed)
            .expect("a cycle stays a cycle under inclusion");
        let map = sol.select_rows(&(0..ly.basis.cols()).collect::<Vec<_>>());
        maps.insert((x, y), map);
    }
    PersistenceModule::new(poset, field, dims, &maps)
}

fn columns_to_matrix(field: Field, rows: usize, cols: &[DenseMatrix]) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(field, rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for i in 0..rows {
            m.set(i, j, c.get(i, 0).clone());
        }
    }
    m
}

/// End-to-end: the multiplicity of `V_I` in the degree-`q` homology module
/// of the filtration.
pub fn multiplicity_from_filtration(
    filtration: &SimplicialFiltration,
    q: usize,
    field: Field,
    interval: &crate::poset::Interval,
) -> Result<usize> {
    let module = persistent_homology(filtration, q, field)?;
    Ok(crate::multiplicity::interval_multiplicity(
        &module, interval,
    ))
}

/// Precomposition with an order-preserving map at the filtration level:
/// the complex at `z` is the complex at `zeta(z)`.
pub fn restrict_filtration(
    zeta: &crate::cover::OrderMap,
    filtration: &SimplicialFiltration,
) -> Result<SimplicialFiltration> {
    if !zeta.codomain().same_order(filtration.poset()) {
        return Err(Error::PosetMismatch);
    }
    let z = zeta.domain();
    let simplices = filtration
        .simplices
        .iter()
        .map(|(verts, present)| {
            let lifted: Vec<usize> = (0..z.len())
                .filter(|&x| present.contains(&zeta.apply(x)))
                .collect();
            (verts.clone(), lifted)
        })
        .collect();
    SimplicialFiltration::new(z.clone(), simplices)
}

/// The filtration-level pipeline along an established essential cover: the
/// homology module is only ever computed over the (typically zigzag)
/// domain, never over the original poset. Requires the cover to exist;
/// callers check with `essentially_covers` first.
pub fn multiplicity_from_filtration_via_cover(
    filtration: &SimplicialFiltration,
    q: usize,
    field: Field,
    interval: &crate::poset::Interval,
    zeta: &crate::cover::OrderMap,
) -> Result<usize> {
    let restricted = restrict_filtration(zeta, filtration)?;
    let small = persistent_homology(&restricted, q, field)?;
    let v = {
        let vp =
            crate::module::PersistenceModule::interval_module(filtration.poset(), interval, field);
        crate::cover::restrict(zeta, &vp)?
    };
    let d = crate::cover::bar_d(&small, &v)?;
    debug_assert_eq!(
        d,
        multiplicity_from_filtration(filtration, q, field, interval)?
    );
    Ok(d)
}

/// Helper to list all faces of a simplex set, closing it downward; presence
/// sets of created faces are unions of their cofaces' sets.
pub fn face_closure(simplices: Vec<(Simplex, Vec<usize>)>) -> Vec<(Simplex, Vec<usize>)> {
    let mut table: BTreeMap<Simplex, BTreeSet<usize>> = BTreeMap::new();
    let mut queue: Vec<(Simplex, Vec<usize>)> = simplices;
    while let Some((verts, present)) = queue.pop() {
        let entry = table.entry(verts.clone()).or_default();
        let before = entry.len();
        entry.extend(present.iter().copied());
        if entry.len() == before {
            continue;
        }
        if verts.len() > 1 {
            let present: Vec<usize> = table[&verts].iter().copied().collect();
            for skip in 0..verts.len() {
                let facet: Simplex = verts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                queue.push((facet, present.clone()));
            }
        }
    }
    table
        .into_iter()
        .map(|(s, p)| (s, p.into_iter().collect()))
        .collect()
}
