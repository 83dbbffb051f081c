//! JSON schemas for posets, modules, order maps, filtrations, and
//! diagrams. These are the wire formats the command-line front-end speaks.

use crate::bipath::{BipathDiagram, BipathKind};
use crate::cover::OrderMap;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::homology::SimplicialFiltration;
use crate::matrix::DenseMatrix;
use crate::module::PersistenceModule;
use crate::multiplicity::Diagram;
use crate::poset::Poset;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PosetJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub hasse: Vec<(usize, usize)>,
}

impl PosetJson {
    pub fn to_poset(&self) -> Result<Poset> {
        match &self.labels {
            Some(labels) => Poset::from_hasse_labeled(self.n, &self.hasse, labels.clone()),
            None => Poset::from_hasse(self.n, &self.hasse),
        }
    }

    pub fn from_poset(poset: &Poset) -> PosetJson {
        PosetJson {
            n: poset.len(),
            labels: Some(poset.labels().to_vec()),
            hasse: poset.hasse_arrows().to_vec(),
        }
    }
}

/// A poset given inline or as a path to another JSON file.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum PosetRef {
    Path(String),
    Inline(PosetJson),
}

impl PosetRef {
    pub fn resolve(&self, loader: &dyn Fn(&str) -> Result<String>) -> Result<Poset> {
        match self {
            PosetRef::Inline(pj) => pj.to_poset(),
            PosetRef::Path(path) => {
                let text = loader(path)?;
                let pj: PosetJson = serde_json::from_str(&text)
                    .map_err(|e| Error::BadInput(format!("poset file {path}: {e}")))?;
                pj.to_poset()
            }
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum ScalarJson {
    Int(i64),
    Text(String),
}

impl ScalarJson {
    fn to_scalar(&self, field: Field) -> Result<Scalar> {
        match self {
            ScalarJson::Int(v) => Ok(field.from_i64(*v)),
            ScalarJson::Text(t) => field.parse_scalar(t),
        }
    }

    fn from_scalar(s: &Scalar) -> ScalarJson {
        let text = s.to_string();
        match text.parse::<i64>() {
            Ok(v) => ScalarJson::Int(v),
            Err(_) => ScalarJson::Text(text),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ModuleJson {
    pub poset: PosetRef,
    pub field: String,
    pub dims: Vec<usize>,
    /// Keys look like "x->y" with element indices of a Hasse arrow.
    pub maps: BTreeMap<String, Vec<Vec<ScalarJson>>>,
}

impl ModuleJson {
    pub fn to_module(&self, loader: &dyn Fn(&str) -> Result<String>) -> Result<PersistenceModule> {
        self.to_module_in(Field::parse(&self.field)?, loader)
    }

    /// Reads the module over a caller-chosen field instead of the one in
    /// the file, reinterpreting integer entries.
    pub fn to_module_in(
        &self,
        field: Field,
        loader: &dyn Fn(&str) -> Result<String>,
    ) -> Result<PersistenceModule> {
        let poset = self.poset.resolve(loader)?;
        let mut maps = BTreeMap::new();
        for (key, rows) in &self.maps {
            let (x, y) = parse_arrow_key(key)?;
            let expected_rows = *self
                .dims
                .get(y)
                .ok_or(Error::IndexOutOfRange(y, self.dims.len()))?;
            let expected_cols = *self
                .dims
                .get(x)
                .ok_or(Error::IndexOutOfRange(x, self.dims.len()))?;
            if rows.len() != expected_rows {
                return Err(Error::Shape(format!(
                    "map {key}: {} rows, expected {expected_rows}",
                    rows.len()
                )));
            }
            let mut m = DenseMatrix::zeros(field, expected_rows, expected_cols);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != expected_cols {
                    return Err(Error::Shape(format!(
                        "map {key} row {i}: {} cols, expected {expected_cols}",
                        row.len()
                    )));
                }
                for (j, v) in row.iter().enumerate() {
                    m.set(i, j, v.to_scalar(field)?);
                }
            }
            maps.insert((x, y), m);
        }
        // Unlisted arrows default to zero maps.
        for &(x, y) in poset.hasse_arrows() {
            maps.entry((x, y))
                .or_insert_with(|| DenseMatrix::zeros(field, self.dims[y], self.dims[x]));
        }
        PersistenceModule::new(poset, field, self.dims.clone(), &maps)
    }

    pub fn from_module(module: &PersistenceModule) -> ModuleJson {
        let mut maps = BTreeMap::new();
        for &(x, y) in module.poset().hasse_arrows() {
            let m = module.map(x, y);
            let rows: Vec<Vec<ScalarJson>> = (0..m.rows())
                .map(|i| {
                    (0..m.cols())
                        .map(|j| ScalarJson::from_scalar(m.get(i, j)))
                        .collect()
                })
                .collect();
            maps.insert(format!("{x}->{y}"), rows);
        }
        ModuleJson {
            poset: PosetRef::Inline(PosetJson::from_poset(module.poset())),
            field: module.field().to_string(),
            dims: module.dims().to_vec(),
            maps,
        }
    }
}

fn parse_arrow_key(key: &str) -> Result<(usize, usize)> {
    let (x, y) = key
        .split_once("->")
        .ok_or_else(|| Error::BadInput(format!("map key `{key}` is not `x->y`")))?;
    let x = x
        .trim()
        .parse()
        .map_err(|_| Error::BadInput(format!("bad index in map key `{key}`")))?;
    let y = y
        .trim()
        .parse()
        .map_err(|_| Error::BadInput(format!("bad index in map key `{key}`")))?;
    Ok((x, y))
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct OrderMapJson {
    #[serde(rename = "Z")]
    pub z: PosetJson,
    #[serde(rename = "P")]
    pub p: PosetRef,
    pub map: Vec<usize>,
}

impl OrderMapJson {
    pub fn to_order_map(&self, loader: &dyn Fn(&str) -> Result<String>) -> Result<OrderMap> {
        OrderMap::new(
            self.z.to_poset()?,
            self.p.resolve(loader)?,
            self.map.clone(),
        )
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SimplexJson {
    pub verts: Vec<u32>,
    pub present_at: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FiltrationJson {
    pub poset: PosetRef,
    pub simplices: Vec<SimplexJson>,
}

impl FiltrationJson {
    pub fn to_filtration(
        &self,
        loader: &dyn Fn(&str) -> Result<String>,
    ) -> Result<SimplicialFiltration> {
        let poset = self.poset.resolve(loader)?;
        let simplices = self
            .simplices
            .iter()
            .map(|s| (s.verts.clone(), s.present_at.clone()))
            .collect();
        SimplicialFiltration::new(poset, simplices)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct DiagramEntryJson {
    pub interval: Vec<usize>,
    pub mult: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct DiagramJson {
    pub entries: Vec<DiagramEntryJson>,
    pub decomposable: bool,
}

impl DiagramJson {
    pub fn new(diagram: &Diagram, decomposable: bool) -> DiagramJson {
        DiagramJson {
            entries: diagram
                .entries
                .iter()
                .map(|(i, m)| DiagramEntryJson {
                    interval: i.members().to_vec(),
                    mult: *m,
                })
                .collect(),
            decomposable,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct BipathEntryJson {
    pub kind: String,
    pub interval: Vec<usize>,
    pub mult: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct BipathDiagramJson {
    pub entries: Vec<BipathEntryJson>,
    pub total_dim: usize,
}

impl BipathDiagramJson {
    pub fn new(diagram: &BipathDiagram) -> BipathDiagramJson {
        BipathDiagramJson {
            entries: diagram
                .entries
                .iter()
                .map(|e| BipathEntryJson {
                    kind: kind_name(e.kind).to_string(),
                    interval: e.interval.members().to_vec(),
                    mult: e.mult,
                })
                .collect(),
            total_dim: diagram.total_dim(),
        }
    }
}

pub fn kind_name(kind: BipathKind) -> &'static str {
    match kind {
        BipathKind::Full => "full",
        BipathKind::Upper { .. } => "upper",
        BipathKind::Lower { .. } => "lower",
        BipathKind::Left { .. } => "left",
        BipathKind::Right { .. } => "right",
    }
}

/// Loader that refuses path references; for inline-only inputs.
pub fn no_paths(_: &str) -> Result<String> {
    Err(Error::BadInput(
        "path references are not allowed here".into(),
    ))
}
