//! Formal presentation morphisms attached to an interval.
//!
//! For an interval `I` these are the three block morphisms the rank formula
//! consumes: `epsilon1` (relations of the projective presentation of `V_I`),
//! `pi1` (presenting the translate side), and the single-entry `lambda`
//! pivot, assembled into the lower-triangular `g`. Choice maps and the pivot
//! are free parameters; the computed multiplicity does not depend on them,
//! so defaults just pick the smallest admissible index.

use crate::error::{Error, Result};
use crate::formal::FormalMorphism;
use crate::poset::{Interval, LabeledJoin, Poset};

/// Index sets and choices for one interval.
#[derive(Clone, Debug)]
pub struct PresentationData {
    pub interval: Interval,
    /// Sources of `I` (equivalently of its up-set), index order.
    pub sc: Vec<usize>,
    /// Sinks of `I`, index order.
    pub sk: Vec<usize>,
    /// Labeled pre-joins over source pairs.
    pub sc1: Vec<LabeledJoin>,
    /// Labeled pre-meets over sink pairs.
    pub sk1: Vec<LabeledJoin>,
    /// Sources of the proper up-set.
    pub up_sources: Vec<usize>,
    /// Sinks of the proper down-set.
    pub down_sinks: Vec<usize>,
    /// For each element of `up_sources`, a source of `I` below it.
    pub c_map: Vec<usize>,
    /// For each element of `down_sinks`, a sink of `I` above it.
    pub d_map: Vec<usize>,
    /// A comparable pair `(b, a)` in `sk x sc`.
    pub pivot: (usize, usize),
}

/// Builds the index sets with the default smallest-index choices.
pub fn build_presentation(poset: &Poset, interval: &Interval) -> PresentationData {
    let sc = poset.sources(interval.members());
    let sk = poset.sinks(interval.members());
    let sc1 = poset.sc1(interval);
    let sk1 = poset.sk1(interval);
    let up_sources = poset.sources(&poset.proper_up_set(interval));
    let down_sinks = poset.sinks(&poset.proper_down_set(interval));
    let c_map = up_sources
        .iter()
        .map(|&a1| {
            *sc.iter()
                .find(|&&a| poset.leq(a, a1))
                .expect("a source of I lies below every source of the proper up-set")
        })
        .collect();
    let d_map = down_sinks
        .iter()
        .map(|&b1| {
            *sk.iter()
                .find(|&&b| poset.leq(b1, b))
                .expect("a sink of I lies above every sink of the proper down-set")
        })
        .collect();
    let pivot = default_pivot(poset, &sc, &sk);
    PresentationData {
        interval: interval.clone(),
        sc,
        sk,
        sc1,
        sk1,
        up_sources,
        down_sinks,
        c_map,
        d_map,
        pivot,
    }
}

fn default_pivot(poset: &Poset, sc: &[usize], sk: &[usize]) -> (usize, usize) {
    for &a in sc {
        for &b in sk {
            if poset.leq(a, b) {
                return (b, a);
            }
        }
    }
    unreachable!("every source of an interval lies below some sink")
}

impl PresentationData {
    /// Iterates over every admissible `(c_map, d_map, pivot)` alternative.
    /// Used to test choice invariance and to search essential covers.
    pub fn admissible_variants<'a>(
        &'a self,
        poset: &'a Poset,
    ) -> impl Iterator<Item = PresentationData> + 'a {
        let c_options: Vec<Vec<usize>> = self
            .up_sources
            .iter()
            .map(|&a1| {
                self.sc
                    .iter()
                    .copied()
                    .filter(|&a| poset.leq(a, a1))
                    .collect()
            })
            .collect();
        let d_options: Vec<Vec<usize>> = self
            .down_sinks
            .iter()
            .map(|&b1| {
                self.sk
                    .iter()
                    .copied()
                    .filter(|&b| poset.leq(b1, b))
                    .collect()
            })
            .collect();
        let pivots: Vec<(usize, usize)> = self
            .sk
            .iter()
            .flat_map(|&b| {
                self.sc
                    .iter()
                    .filter(move |&&a| poset.leq(a, b))
                    .map(move |&a| (b, a))
            })
            .collect();
        CartesianChoices::new(c_options)
            .flat_map(move |c_map| {
                let pivots = pivots.clone();
                CartesianChoices::new(d_options.clone()).flat_map(move |d_map| {
                    let c_map = c_map.clone();
                    pivots
                        .clone()
                        .into_iter()
                        .map(move |pivot| (c_map.clone(), d_map.clone(), pivot))
                })
            })
            .map(move |(c_map, d_map, pivot)| PresentationData {
                c_map,
                d_map,
                pivot,
                ..self.clone()
            })
    }
}

/// Iterator over one pick per slot.
struct CartesianChoices {
    options: Vec<Vec<usize>>,
    state: Vec<usize>,
    done: bool,
}

impl CartesianChoices {
    fn new(options: Vec<Vec<usize>>) -> Self {
        let done = options.iter().any(|o| o.is_empty());
        let state = vec![0; options.len()];
        CartesianChoices {
            options,
            state,
            done,
        }
    }
}

impl Iterator for CartesianChoices {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current: Vec<usize> = self
            .state
            .iter()
            .zip(&self.options)
            .map(|(&i, opts)| opts[i])
            .collect();
        // Advance odometer.
        let mut k = self.options.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.state[k] += 1;
            if self.state[k] < self.options[k].len() {
                break;
            }
            self.state[k] = 0;
        }
        Some(current)
    }
}

/// Relation block of the presentation of `V_I`:
/// rows are `sc1(I)` then the sources of the proper up-set, columns are
/// `sc(I)`. A labeled join `{a_low, a_high}_c` row carries `+p_{c,a_low}`
/// and `-p_{c,a_high}`; an up-source row `a'` carries `+p_{a',c(a')}`.
pub fn epsilon1(pd: &PresentationData) -> FormalMorphism {
    let rows: Vec<usize> = pd
        .sc1
        .iter()
        .map(|j| j.witness)
        .chain(pd.up_sources.iter().copied())
        .collect();
    let mut g = FormalMorphism::zero(rows, pd.sc.clone());
    for (j, join) in pd.sc1.iter().enumerate() {
        let low = pd.sc.iter().position(|&a| a == join.pair.0).unwrap();
        let high = pd.sc.iter().position(|&a| a == join.pair.1).unwrap();
        g.set(j, low, 1);
        g.set(j, high, -1);
    }
    let offset = pd.sc1.len();
    for (k, _a1) in pd.up_sources.iter().enumerate() {
        let col = pd.sc.iter().position(|&a| a == pd.c_map[k]).unwrap();
        g.set(offset + k, col, 1);
    }
    g
}

/// Relation block on the sink side: rows are `sk(I)`, columns are the sinks
/// of the proper down-set then `sk1(I)`. A down-sink column `b'` carries
/// `+p_{d(b'),b'}`; a labeled meet `{b_low, b_high}_d` column carries
/// `+p_{b_low,d}` and `-p_{b_high,d}`.
pub fn pi1(pd: &PresentationData) -> FormalMorphism {
    let cols: Vec<usize> = pd
        .down_sinks
        .iter()
        .copied()
        .chain(pd.sk1.iter().map(|j| j.witness))
        .collect();
    let mut g = FormalMorphism::zero(pd.sk.clone(), cols);
    for (k, _b1) in pd.down_sinks.iter().enumerate() {
        let row = pd.sk.iter().position(|&b| b == pd.d_map[k]).unwrap();
        g.set(row, k, 1);
    }
    let offset = pd.down_sinks.len();
    for (i, meet) in pd.sk1.iter().enumerate() {
        let low = pd.sk.iter().position(|&b| b == meet.pair.0).unwrap();
        let high = pd.sk.iter().position(|&b| b == meet.pair.1).unwrap();
        g.set(low, offset + i, 1);
        g.set(high, offset + i, -1);
    }
    g
}

/// The `sk(I) x sc(I)` block whose single nonzero entry is `p_{b,a}` at the
/// chosen pivot.
pub fn lambda(pd: &PresentationData) -> FormalMorphism {
    let mut g = FormalMorphism::zero(pd.sk.clone(), pd.sc.clone());
    let (b, a) = pd.pivot;
    let row = pd.sk.iter().position(|&x| x == b).unwrap();
    let col = pd.sc.iter().position(|&x| x == a).unwrap();
    g.set(row, col, 1);
    g
}

/// `g = [[epsilon1, 0], [lambda, pi1]]`.
pub fn assemble_g(pd: &PresentationData) -> FormalMorphism {
    FormalMorphism::block_lower_triangular(&epsilon1(pd), &pi1(pd), &lambda(pd))
}

/// Extension used when `V_I` is injective, i.e. `I` is the down-set of its
/// maximum `b`: one extra row with entry `+p_{b, a}` for a chosen source
/// `a`. Stacked under `epsilon1` this presents `V_I / soc V_I`.
pub fn epsilon1_injective_extension(
    poset: &Poset,
    pd: &PresentationData,
) -> Result<FormalMorphism> {
    let max = injective_max(poset, &pd.interval).ok_or(Error::NotInjectiveInterval)?;
    // c'(max) defaults to the smallest-index source, column 0.
    let mut row = FormalMorphism::zero(vec![max], pd.sc.clone());
    row.set(0, 0, 1);
    Ok(row)
}

/// The maximum of `I` when `I = down_set(max)`, otherwise None.
pub fn injective_max(poset: &Poset, interval: &Interval) -> Option<usize> {
    let sinks = poset.sinks(interval.members());
    if sinks.len() != 1 {
        return None;
    }
    let b = sinks[0];
    let down = poset.down_set(&[b]);
    if down == interval.members() {
        Some(b)
    } else {
        None
    }
}
