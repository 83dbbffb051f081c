//! 2D-grid specialization: minimal presentations from consecutive joins and
//! meets only, plus the pivot-elimination evaluation that reads the
//! multiplicity off the reduced normal form.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::module::PersistenceModule;
use crate::multiplicity::multiplicity_from_presentation;
use crate::poset::{Interval, LabeledJoin, Poset};
use crate::presentation::{assemble_g, build_presentation, epsilon1, pi1, PresentationData};

/// A poset recognized as the product of two chains in canonical row-major
/// numbering: element `(x, y)` has index `(y-1)*m + (x-1)`.
#[derive(Clone, Debug)]
pub struct Grid {
    m: usize,
    n: usize,
}

impl Grid {
    pub fn from_poset(poset: &Poset) -> Result<Grid> {
        let total = poset.len();
        for m in 1..=total {
            if total % m != 0 {
                continue;
            }
            let n = total / m;
            let coord = |e: usize| (e % m + 1, e / m + 1);
            let ok = (0..total).all(|e| {
                (0..total).all(|f| {
                    let (xe, ye) = coord(e);
                    let (xf, yf) = coord(f);
                    poset.leq(e, f) == (xe <= xf && ye <= yf)
                })
            });
            if ok {
                return Ok(Grid { m, n });
            }
        }
        Err(Error::NotAGrid)
    }

    pub fn extent(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn coord(&self, e: usize) -> (usize, usize) {
        (e % self.m + 1, e / self.m + 1)
    }

    pub fn index(&self, x: usize, y: usize) -> usize {
        (y - 1) * self.m + (x - 1)
    }

    fn join(&self, a: usize, b: usize) -> usize {
        let (xa, ya) = self.coord(a);
        let (xb, yb) = self.coord(b);
        self.index(xa.max(xb), ya.max(yb))
    }

    fn meet(&self, a: usize, b: usize) -> usize {
        let (xa, ya) = self.coord(a);
        let (xb, yb) = self.coord(b);
        self.index(xa.min(xb), ya.min(yb))
    }
}

/// Staircase data of a grid interval: sources and sinks ordered by
/// increasing second coordinate, with their consecutive joins and meets.
#[derive(Clone, Debug)]
pub struct GridInterval {
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub consecutive_joins: Vec<usize>,
    pub consecutive_meets: Vec<usize>,
}

impl GridInterval {
    pub fn new(grid: &Grid, poset: &Poset, interval: &Interval) -> GridInterval {
        // Index order on a grid antichain is exactly increasing y, so the
        // canonical source/sink lists are already staircase-ordered.
        let sources = poset.sources(interval.members());
        let sinks = poset.sinks(interval.members());
        debug_assert!(sources
            .windows(2)
            .all(|w| grid.coord(w[0]).1 < grid.coord(w[1]).1
                && grid.coord(w[0]).0 > grid.coord(w[1]).0));
        let consecutive_joins = sources.windows(2).map(|w| grid.join(w[0], w[1])).collect();
        let consecutive_meets = sinks.windows(2).map(|w| grid.meet(w[0], w[1])).collect();
        GridInterval {
            sources,
            sinks,
            consecutive_joins,
            consecutive_meets,
        }
    }
}

/// The minimal-presentation data for a grid interval: consecutive joins and
/// meets instead of the full labeled sets, the minimal-second-coordinate
/// choice maps, and a pivot moved off `(b_1, a_1)` only when `a_1 <= b_1`
/// fails.
pub fn grid_presentation(poset: &Poset, interval: &Interval) -> Result<PresentationData> {
    let grid = Grid::from_poset(poset)?;
    let gi = GridInterval::new(&grid, poset, interval);
    let general = build_presentation(poset, interval);
    let sc1: Vec<LabeledJoin> = gi
        .sources
        .windows(2)
        .zip(&gi.consecutive_joins)
        .map(|(w, &c)| LabeledJoin {
            pair: (w[0], w[1]),
            witness: c,
        })
        .collect();
    let sk1: Vec<LabeledJoin> = gi
        .sinks
        .windows(2)
        .zip(&gi.consecutive_meets)
        .map(|(w, &d)| LabeledJoin {
            pair: (w[0], w[1]),
            witness: d,
        })
        .collect();
    // Choice maps minimize the second coordinate; the staircase lists are
    // ordered by it, so the first admissible entry wins.
    let c_map = general
        .up_sources
        .iter()
        .map(|&a1| {
            *gi.sources
                .iter()
                .find(|&&a| poset.leq(a, a1))
                .expect("choice map target exists")
        })
        .collect();
    let d_map = general
        .down_sinks
        .iter()
        .map(|&b1| {
            *gi.sinks
                .iter()
                .find(|&&b| poset.leq(b1, b))
                .expect("choice map target exists")
        })
        .collect();
    let a1 = gi.sources[0];
    let pivot_sink = *gi
        .sinks
        .iter()
        .find(|&&b| poset.leq(a1, b))
        .expect("some sink lies above the first source");
    Ok(PresentationData {
        sc1,
        sk1,
        c_map,
        d_map,
        pivot: (pivot_sink, a1),
        ..general
    })
}

/// Interval multiplicity over a grid via the minimal presentation.
pub fn grid_multiplicity(m: &PersistenceModule, interval: &Interval) -> Result<usize> {
    let pd = grid_presentation(m.poset(), interval)?;
    Ok(multiplicity_from_presentation(m, &pd))
}

/// Interval multiplicity read off the reduced normal form: unit pivots of
/// the relation blocks are eliminated in place and the rank of what
/// survives in the pivot block is the answer.
pub fn reduced_rank_multiplicity(m: &PersistenceModule, interval: &Interval) -> Result<usize> {
    let pd = grid_presentation(m.poset(), interval)?;
    let g = assemble_g(&pd);
    let mut e = Eliminator::new(m.evaluate(&g));

    let eps_rows: usize = pd
        .sc1
        .iter()
        .map(|j| m.dim_at(j.witness))
        .chain(pd.up_sources.iter().map(|&a| m.dim_at(a)))
        .sum();
    let sc_cols: usize = pd.sc.iter().map(|&a| m.dim_at(a)).sum();

    // Row ranges of the sink block, split at the pivot sink; column ranges
    // of the source block, split at the pivot source.
    let (pivot_sink, pivot_source) = pd.pivot;
    let mut row_ranges = Vec::new(); // (element, start, end) over sk rows
    let mut off = eps_rows;
    for &b in &pd.sk {
        row_ranges.push((b, off, off + m.dim_at(b)));
        off += m.dim_at(b);
    }
    let mut col_ranges = Vec::new(); // over sc cols
    let mut coff = 0;
    for &a in &pd.sc {
        col_ranges.push((a, coff, coff + m.dim_at(a)));
        coff += m.dim_at(a);
    }
    let total_rows = e.mat.rows();
    let total_cols = e.mat.cols();

    let rows_eps: Vec<usize> = (0..eps_rows).collect();
    let rows_pivot: Vec<usize> = row_ranges
        .iter()
        .filter(|&&(b, _, _)| b == pivot_sink)
        .flat_map(|&(_, s, t)| s..t)
        .collect();
    let rows_rest: Vec<usize> = (eps_rows..total_rows)
        .filter(|r| !rows_pivot.contains(r))
        .collect();
    let cols_pivot: Vec<usize> = col_ranges
        .iter()
        .filter(|&&(a, _, _)| a == pivot_source)
        .flat_map(|&(_, s, t)| s..t)
        .collect();
    let cols_sc_rest: Vec<usize> = (0..sc_cols).filter(|c| !cols_pivot.contains(c)).collect();
    let cols_pi: Vec<usize> = (sc_cols..total_cols).collect();

    let r1 = e.eliminate(&rows_eps, &cols_sc_rest);
    let r2 = e.eliminate(&rows_rest, &cols_pi);
    let r1p = e.eliminate(&rows_eps, &cols_pivot);
    let r2p = e.eliminate(&rows_pivot, &cols_pi);

    // The extracted pivots account exactly for the two subtracted ranks.
    debug_assert_eq!(r1 + r1p, m.evaluate(&epsilon1(&pd)).rank());
    debug_assert_eq!(r2 + r2p, m.evaluate(&pi1(&pd)).rank());

    Ok(e.live_rank())
}

/// In-place pivot elimination with live row/column masks.
struct Eliminator {
    mat: DenseMatrix,
    row_live: Vec<bool>,
    col_live: Vec<bool>,
}

impl Eliminator {
    fn new(mat: DenseMatrix) -> Self {
        let (r, c) = (mat.rows(), mat.cols());
        Eliminator {
            mat,
            row_live: vec![true; r],
            col_live: vec![true; c],
        }
    }

    /// Exhausts the live part of `rows x cols`: each found pivot is scaled
    /// to 1, its whole row and column are cleared by elementary operations,
    /// and both are retired. Returns the number of pivots.
    fn eliminate(&mut self, rows: &[usize], cols: &[usize]) -> usize {
        let mut count = 0;
        loop {
            let Some((pr, pc)) = self.find_pivot(rows, cols) else {
                return count;
            };
            count += 1;
            let inv = self.mat.get(pr, pc).inv();
            for j in 0..self.mat.cols() {
                let v = self.mat.get(pr, j).mul(&inv);
                self.mat.set(pr, j, v);
            }
            // Clear the pivot column.
            for r in 0..self.mat.rows() {
                if r != pr && self.row_live[r] && !self.mat.get(r, pc).is_zero() {
                    let factor = self.mat.get(r, pc).neg();
                    for j in 0..self.mat.cols() {
                        if self.col_live[j] {
                            let v = self.mat.get(r, j).add(&self.mat.get(pr, j).mul(&factor));
                            self.mat.set(r, j, v);
                        }
                    }
                }
            }
            // Clear the pivot row.
            for j in 0..self.mat.cols() {
                if j != pc && self.col_live[j] && !self.mat.get(pr, j).is_zero() {
                    let factor = self.mat.get(pr, j).neg();
                    for r in 0..self.mat.rows() {
                        if self.row_live[r] {
                            let v = self.mat.get(r, j).add(&self.mat.get(r, pc).mul(&factor));
                            self.mat.set(r, j, v);
                        }
                    }
                }
            }
            self.row_live[pr] = false;
            self.col_live[pc] = false;
        }
    }

    fn find_pivot(&self, rows: &[usize], cols: &[usize]) -> Option<(usize, usize)> {
        for &r in rows {
            if !self.row_live[r] {
                continue;
            }
            for &c in cols {
                if self.col_live[c] && !self.mat.get(r, c).is_zero() {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Rank of the surviving live submatrix.
    fn live_rank(&self) -> usize {
        let rows: Vec<usize> = (0..self.mat.rows()).filter(|&r| self.row_live[r]).collect();
        let cols: Vec<usize> = (0..self.mat.cols()).filter(|&c| self.col_live[c]).collect();
        self.mat.select_rows(&rows).select_columns(&cols).rank()
    }
}
