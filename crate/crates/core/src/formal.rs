//! Block morphisms over the formal additive hull of the incidence category.
//!
//! A `FormalMorphism` from the tuple of column objects to the tuple of row
//! objects stores, per cell `(j, i)`, an integer coefficient of the unique
//! order morphism `col_objects[i] -> row_objects[j]`. Evaluating at a module
//! substitutes the structure map of each arrow and yields a block matrix
//! whose `(j, i)` block has shape `dim(row_j) x dim(col_i)`.

use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalMorphism {
    row_objects: Vec<usize>,
    col_objects: Vec<usize>,
    coeffs: Vec<i64>, // row-major over (row block, col block)
}

impl FormalMorphism {
    /// All-zero morphism between the given object tuples. Either list may
    /// be empty: those are the empty matrices of the hull.
    pub fn zero(row_objects: Vec<usize>, col_objects: Vec<usize>) -> Self {
        let coeffs = vec![0; row_objects.len() * col_objects.len()];
        FormalMorphism {
            row_objects,
            col_objects,
            coeffs,
        }
    }

    pub fn row_objects(&self) -> &[usize] {
        &self.row_objects
    }

    pub fn col_objects(&self) -> &[usize] {
        &self.col_objects
    }

    pub fn coeff(&self, j: usize, i: usize) -> i64 {
        self.coeffs[j * self.col_objects.len() + i]
    }

    pub fn set(&mut self, j: usize, i: usize, coeff: i64) {
        let w = self.col_objects.len();
        self.coeffs[j * w + i] = coeff;
    }

    /// Checks the matrix condition: every nonzero cell must be typed by an
    /// actual order relation `col <= row`.
    pub fn validate(&self, poset: &Poset) -> Result<()> {
        for (j, &y) in self.row_objects.iter().enumerate() {
            for (i, &x) in self.col_objects.iter().enumerate() {
                if self.coeff(j, i) != 0 && !poset.leq(x, y) {
                    return Err(Error::BadInput(format!(
                        "entry ({j},{i}) is a multiple of p_{{{y},{x}}} but {x} <= {y} fails"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Lower-triangular block assembly `[[g1, 0], [g3, g2]]` used by the
    /// multiplicity formula; `g3` must match `g2`'s rows and `g1`'s columns.
    pub fn block_lower_triangular(g1: &Self, g2: &Self, g3: &Self) -> Self {
        assert_eq!(g3.row_objects, g2.row_objects, "g3/g2 row objects differ");
        assert_eq!(g3.col_objects, g1.col_objects, "g3/g1 col objects differ");
        let rows: Vec<usize> = g1
            .row_objects
            .iter()
            .chain(&g2.row_objects)
            .copied()
            .collect();
        let cols: Vec<usize> = g1
            .col_objects
            .iter()
            .chain(&g2.col_objects)
            .copied()
            .collect();
        let (r1, c1) = (g1.row_objects.len(), g1.col_objects.len());
        let mut out = FormalMorphism::zero(rows, cols);
        for j in 0..r1 {
            for i in 0..c1 {
                out.set(j, i, g1.coeff(j, i));
            }
        }
        for j in 0..g2.row_objects.len() {
            for i in 0..c1 {
                out.set(r1 + j, i, g3.coeff(j, i));
            }
            for i in 0..g2.col_objects.len() {
                out.set(r1 + j, c1 + i, g2.coeff(j, i));
            }
        }
        out
    }

    /// Keeps the listed columns, in order.
    pub fn select_columns(&self, keep: &[usize]) -> Self {
        let cols: Vec<usize> = keep.iter().map(|&i| self.col_objects[i]).collect();
        let mut out = FormalMorphism::zero(self.row_objects.clone(), cols);
        for j in 0..self.row_objects.len() {
            for (ii, &i) in keep.iter().enumerate() {
                out.set(j, ii, self.coeff(j, i));
            }
        }
        out
    }

    /// Keeps the listed rows, in order.
    pub fn select_rows(&self, keep: &[usize]) -> Self {
        let rows: Vec<usize> = keep.iter().map(|&j| self.row_objects[j]).collect();
        let mut out = FormalMorphism::zero(rows, self.col_objects.clone());
        for (jj, &j) in keep.iter().enumerate() {
            for i in 0..self.col_objects.len() {
                out.set(jj, i, self.coeff(j, i));
            }
        }
        out
    }

    /// Text grid of `±p_{y,x}` entries, for golden comparisons against
    /// matrices printed elsewhere.
    pub fn dump(&self, poset: &Poset) -> String {
        let mut cells: Vec<Vec<String>> = Vec::new();
        for (j, &y) in self.row_objects.iter().enumerate() {
            let mut row = Vec::new();
            for (i, &x) in self.col_objects.iter().enumerate() {
                let c = self.coeff(j, i);
                let text = match c {
                    0 => "0".to_string(),
                    1 => format!("p_{{{},{}}}", poset.label(y), poset.label(x)),
                    -1 => format!("-p_{{{},{}}}", poset.label(y), poset.label(x)),
                    c => format!("{c}p_{{{},{}}}", poset.label(y), poset.label(x)),
                };
                row.push(text);
            }
            cells.push(row);
        }
        let widths: Vec<usize> = (0..self.col_objects.len())
            .map(|i| cells.iter().map(|r| r[i].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for row in &cells {
            out.push('[');
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                out.push_str(&format!("{:>w$}", cell, w = widths[i]));
            }
            out.push_str("]\n");
        }
        out
    }
}
