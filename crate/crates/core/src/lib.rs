//! Exact computation of interval multiplicities of persistence modules
//! over arbitrary finite posets.
//!
//! The core pipeline: build a [`poset::Poset`], attach structure maps to get
//! a [`module::PersistenceModule`], and ask [`multiplicity`] for the number
//! of copies of an interval module inside it. Everything runs over an exact
//! field ([`field::Field`]): GF(p) or the rationals.
//!
//! Specialized layers: [`grid`] (2D grids, smaller matrices), [`bipath`]
//! (closed forms and diagrams via two zigzag restrictions), [`cover`]
//! (transporting the computation along an order-preserving map), and
//! [`homology`] (from simplicial filtrations to modules).
//!
//! ```
//! use intmult::{make_grid, interval_multiplicity, Field, PersistenceModule};
//!
//! let poset = make_grid(3, 2);
//! let interval = poset.interval(&[1, 2, 4, 5]).unwrap();
//! let module = PersistenceModule::interval_module(&poset, &interval, Field::GF2);
//! let doubled = module.direct_sum(&module).unwrap();
//! assert_eq!(interval_multiplicity(&doubled, &interval), 2);
//! ```

pub mod bipath;
pub mod cover;
pub mod error;
pub mod field;
pub mod formal;
pub mod grid;
pub mod homology;
pub mod io;
pub mod matrix;
pub mod module;
pub mod multiplicity;
pub mod poset;
pub mod presentation;
pub mod sample;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use formal::FormalMorphism;
pub use matrix::DenseMatrix;
pub use module::PersistenceModule;
pub use multiplicity::{interval_multiplicity, Diagram};
pub use poset::{make_bipath, make_chain, make_grid, make_zigzag, Interval, LabeledJoin, Poset};
