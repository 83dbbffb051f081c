//! Interval multiplicities: the rank formula, the one-parameter fast path,
//! diagrams, decomposability diagnostics, and an independent Hom-pairing
//! oracle used for cross-checking.

use crate::error::{Error, Result};
use crate::formal::FormalMorphism;
use crate::matrix::DenseMatrix;
use crate::module::PersistenceModule;
use crate::poset::Interval;
use crate::presentation::{
    assemble_g, build_presentation, epsilon1, epsilon1_injective_extension, pi1, PresentationData,
};
use std::sync::atomic::{AtomicUsize, Ordering};

/// The multiplicity of the interval module `V_I` in the indecomposable
/// decomposition of `M`, by the unified rank formula.
pub fn interval_multiplicity(m: &PersistenceModule, interval: &Interval) -> usize {
    let pd = build_presentation(m.poset(), interval);
    multiplicity_from_presentation(m, &pd)
}

/// Same formula, with explicit (possibly non-default) choices.
pub fn multiplicity_from_presentation(m: &PersistenceModule, pd: &PresentationData) -> usize {
    let g = assemble_g(pd);
    let g1 = epsilon1(pd);
    let g2 = pi1(pd);
    let full = m.evaluate(&g).rank() as i64;
    let r1 = m.evaluate(&g1).rank() as i64;
    let r2 = m.evaluate(&g2).rank() as i64;
    let d = full - r1 - r2;
    debug_assert!(d >= 0, "multiplicity must be nonnegative");
    d.max(0) as usize
}

/// Cross-check path for injective interval modules (`I` the down-set of its
/// maximum): stack the socle-quotient row under the relation block and
/// subtract.
pub fn interval_multiplicity_injective(
    m: &PersistenceModule,
    interval: &Interval,
) -> Result<usize> {
    let pd = build_presentation(m.poset(), interval);
    let ext = epsilon1_injective_extension(m.poset(), &pd)?;
    let e1 = epsilon1(&pd);
    let top = m.evaluate(&e1);
    let bottom = m.evaluate(&ext);
    let stacked = DenseMatrix::vstack(m.field(), &[&top, &bottom])?;
    Ok(stacked.rank() - top.rank())
}

/// `dim Hom(C, M)` from a projective presentation of `C` with relation
/// morphism `mu`: the sum of the dimensions at the generator objects minus
/// the rank of the evaluated relations.
pub fn dim_hom(m: &PersistenceModule, mu: &FormalMorphism) -> usize {
    let generators: usize = mu.col_objects().iter().map(|&x| m.dim_at(x)).sum();
    generators - m.evaluate(mu).rank()
}

/// One-parameter persistence multiplicity on a chain, with out-of-range
/// boundary terms dropped.
pub fn one_parameter_multiplicity(
    m: &PersistenceModule,
    start: usize,
    end: usize,
) -> Result<usize> {
    let poset = m.poset();
    let n = poset.len();
    for x in 0..n {
        for y in 0..n {
            if !poset.comparable(x, y) {
                return Err(Error::NotAChain);
            }
        }
    }
    let mut chain: Vec<usize> = (0..n).collect();
    chain.sort_by(|&a, &b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if poset.lt(a, b) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let pos = |e: usize| chain.iter().position(|&x| x == e).unwrap();
    let (s, t) = (pos(start), pos(end));
    if s > t {
        return Err(Error::BadInput("start must precede end".into()));
    }
    let rank_of = |a: usize, b: usize| m.map(chain[a], chain[b]).rank() as i64;
    let mut mu = rank_of(s, t);
    if s > 0 {
        mu -= rank_of(s - 1, t);
    }
    if t + 1 < n {
        mu -= rank_of(s, t + 1);
    }
    if s > 0 && t + 1 < n {
        mu += rank_of(s - 1, t + 1);
    }
    debug_assert!(mu >= 0);
    Ok(mu.max(0) as usize)
}

/// A multiset of intervals with multiplicities, sorted by (size, members).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub entries: Vec<(Interval, usize)>,
}

impl Diagram {
    /// Per-element dimension accounted for by the entries.
    pub fn accounted_dims(&self, n_elements: usize) -> Vec<usize> {
        let mut acc = vec![0; n_elements];
        for (interval, mult) in &self.entries {
            for &x in interval.members() {
                acc[x] += mult;
            }
        }
        acc
    }

    pub fn total_dim(&self) -> usize {
        self.entries.iter().map(|(i, m)| i.len() * m).sum()
    }

    pub fn multiplicity_of(&self, interval: &Interval) -> usize {
        self.entries
            .iter()
            .find(|(i, _)| i == interval)
            .map_or(0, |(_, m)| *m)
    }
}

/// The maximal interval-decomposable summand: multiplicity of every
/// interval, zero entries omitted. `jobs` worker threads split the interval
/// list; the merge order is fixed, so output is deterministic.
pub fn maximal_interval_summand(m: &PersistenceModule, jobs: usize) -> Diagram {
    let intervals = m.poset().enumerate_intervals();
    let mults = multiplicities_parallel(m, &intervals, jobs);
    let entries = intervals
        .into_iter()
        .zip(mults)
        .filter(|(_, d)| *d > 0)
        .collect();
    Diagram { entries }
}

fn multiplicities_parallel(
    m: &PersistenceModule,
    intervals: &[Interval],
    jobs: usize,
) -> Vec<usize> {
    if jobs <= 1 || intervals.len() < 2 {
        return intervals
            .iter()
            .map(|i| interval_multiplicity(m, i))
            .collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<AtomicUsize> = (0..intervals.len()).map(|_| AtomicUsize::new(0)).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(intervals.len()) {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                if k >= intervals.len() {
                    break;
                }
                let d = interval_multiplicity(m, &intervals[k]);
                slots[k].store(d, Ordering::Relaxed);
            });
        }
    });
    slots.into_iter().map(|s| s.into_inner()).collect()
}

/// Decomposability verdict per the dimension-count criterion, with the
/// dimension-vector criterion checked alongside.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub decomposable: bool,
    pub diagram: Diagram,
    pub accounted: Vec<usize>,
}

pub fn is_interval_decomposable(m: &PersistenceModule, jobs: usize) -> DecompositionReport {
    let diagram = maximal_interval_summand(m, jobs);
    let accounted = diagram.accounted_dims(m.poset().len());
    let by_total = diagram.total_dim() == m.total_dim();
    let by_vector = accounted == m.dims();
    // The two criteria are equivalent; a mismatch would mean a computation
    // bug, not a property of the input.
    assert_eq!(
        by_total, by_vector,
        "dimension-count and dimension-vector criteria disagree"
    );
    DecompositionReport {
        decomposable: by_total,
        diagram,
        accounted,
    }
}

/// Basis of the natural transformations `A -> B`, one family of per-element
/// matrices per basis vector. Unknowns are the entries of all components;
/// one matrix equation per Hasse arrow constrains them; the kernel of the
/// assembled system is the Hom space.
pub fn hom_basis(a: &PersistenceModule, b: &PersistenceModule) -> Vec<Vec<DenseMatrix>> {
    assert!(a.poset().same_order(b.poset()), "hom across posets");
    assert_eq!(a.field(), b.field(), "hom across fields");
    let field = a.field();
    let poset = a.poset();
    let n = poset.len();
    let mut offsets = vec![0usize; n + 1];
    for x in 0..n {
        offsets[x + 1] = offsets[x] + b.dim_at(x) * a.dim_at(x);
    }
    let total_vars = offsets[n];
    let var = |x: usize, r: usize, c: usize| offsets[x] + r * a.dim_at(x) + c;

    let mut rows: Vec<DenseMatrix> = Vec::new();
    for &(x, y) in poset.hasse_arrows() {
        let ax = a.map(x, y); // dimA(y) x dimA(x)
        let bx = b.map(x, y); // dimB(y) x dimB(x)
        for r in 0..b.dim_at(y) {
            for c in 0..a.dim_at(x) {
                // sum_k f_y[r,k] * ax[k,c] - sum_k bx[r,k] * f_x[k,c] = 0
                let mut row = DenseMatrix::zeros(field, 1, total_vars);
                for k in 0..a.dim_at(y) {
                    let coeff = ax.get(k, c).clone();
                    if !coeff.is_zero() {
                        let j = var(y, r, k);
                        row.set(0, j, row.get(0, j).add(&coeff));
                    }
                }
                for k in 0..b.dim_at(x) {
                    let coeff = bx.get(r, k).neg();
                    if !coeff.is_zero() {
                        let j = var(x, k, c);
                        row.set(0, j, row.get(0, j).add(&coeff));
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() {
        DenseMatrix::zeros(field, 0, total_vars)
    } else {
        DenseMatrix::vstack(field, &rows.iter().collect::<Vec<_>>()).expect("uniform width")
    };
    system
        .nullspace()
        .into_iter()
        .map(|v| {
            (0..n)
                .map(|x| {
                    let mut f = DenseMatrix::zeros(field, b.dim_at(x), a.dim_at(x));
                    for r in 0..b.dim_at(x) {
                        for c in 0..a.dim_at(x) {
                            f.set(r, c, v.get(var(x, r, c), 0).clone());
                        }
                    }
                    f
                })
                .collect()
        })
        .collect()
}

/// Independent multiplicity oracle: the rank of the composition pairing
/// `Hom(V_I, M) x Hom(M, V_I) -> End(V_I) = k`. Because no copy of `V_I`
/// splits off the complement, every composite through it vanishes and the
/// pairing rank equals the number of `V_I` summands.
pub fn oracle_multiplicity(m: &PersistenceModule, interval: &Interval) -> usize {
    let v = PersistenceModule::interval_module(m.poset(), interval, m.field());
    let into = hom_basis(&v, m);
    let outof = hom_basis(m, &v);
    if into.is_empty() || outof.is_empty() {
        return 0;
    }
    let x0 = interval.members()[0];
    let field = m.field();
    let mut pairing = DenseMatrix::zeros(field, outof.len(), into.len());
    for (j, g) in outof.iter().enumerate() {
        for (i, f) in into.iter().enumerate() {
            let comp = g[x0].mul(&f[x0]); // 1x1
            pairing.set(j, i, comp.get(0, 0).clone());
        }
    }
    pairing.rank()
}
