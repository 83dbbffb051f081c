//! Bipath posets `B_{n,m}`: the five-type interval classification, closed
//! multiplicity formulas per type, and the bipath persistence diagram via
//! two zigzag restrictions (plus a single unified zigzag as a third route).

use crate::cover::{bar_d, restrict, OrderMap};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::module::PersistenceModule;
use crate::multiplicity::interval_multiplicity;
use crate::poset::{make_bipath, Interval, Poset};

/// A poset recognized as `B_{n,m}` in canonical numbering.
#[derive(Clone, Copy, Debug)]
pub struct Bipath {
    pub n: usize,
    pub m: usize,
}

impl Bipath {
    pub fn from_poset(poset: &Poset) -> Result<Bipath> {
        let total = poset.len();
        if total >= 4 {
            for n in 1..=(total - 3) {
                let m = total - 2 - n;
                if m >= 1 && make_bipath(n, m).same_order(poset) {
                    return Ok(Bipath { n, m });
                }
            }
        }
        Err(Error::NotABipath)
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.n + self.m + 1
    }

    pub fn index(&self, pos: BipathPos) -> usize {
        match pos {
            BipathPos::Zero => 0,
            BipathPos::Up(i) => {
                debug_assert!((1..=self.n).contains(&i));
                i
            }
            BipathPos::Down(j) => {
                debug_assert!((1..=self.m).contains(&j));
                self.n + j
            }
            BipathPos::One => self.top(),
        }
    }

    pub fn position(&self, e: usize) -> BipathPos {
        if e == 0 {
            BipathPos::Zero
        } else if e <= self.n {
            BipathPos::Up(e)
        } else if e <= self.n + self.m {
            BipathPos::Down(e - self.n)
        } else {
            BipathPos::One
        }
    }

    /// `t + 1` along the upper path.
    pub fn up_succ(&self, pos: BipathPos) -> BipathPos {
        match pos {
            BipathPos::Zero => BipathPos::Up(1),
            BipathPos::Up(i) if i < self.n => BipathPos::Up(i + 1),
            BipathPos::Up(_) => BipathPos::One,
            _ => panic!("up_succ of {pos:?}"),
        }
    }

    /// `t' + 1'` along the lower path.
    pub fn down_succ(&self, pos: BipathPos) -> BipathPos {
        match pos {
            BipathPos::Zero => BipathPos::Down(1),
            BipathPos::Down(j) if j < self.m => BipathPos::Down(j + 1),
            BipathPos::Down(_) => BipathPos::One,
            _ => panic!("down_succ of {pos:?}"),
        }
    }

    /// `s - 1` along the upper path.
    pub fn up_pred(&self, pos: BipathPos) -> BipathPos {
        match pos {
            BipathPos::One => BipathPos::Up(self.n),
            BipathPos::Up(1) => BipathPos::Zero,
            BipathPos::Up(i) => BipathPos::Up(i - 1),
            _ => panic!("up_pred of {pos:?}"),
        }
    }

    /// `s' - 1'` along the lower path.
    pub fn down_pred(&self, pos: BipathPos) -> BipathPos {
        match pos {
            BipathPos::One => BipathPos::Down(self.m),
            BipathPos::Down(1) => BipathPos::Zero,
            BipathPos::Down(j) => BipathPos::Down(j - 1),
            _ => panic!("down_pred of {pos:?}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BipathPos {
    Zero,
    Up(usize),
    Down(usize),
    One,
}

/// The five interval types of a bipath poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipathKind {
    Full,
    /// `[s, t]` inside the upper path.
    Upper {
        s: usize,
        t: usize,
    },
    /// `[s', t']` inside the lower path.
    Lower {
        s: usize,
        t: usize,
    },
    /// `[0^, t] U [0^, t']`; an endpoint equal to `Zero` means that side
    /// is empty.
    Left {
        t_up: BipathPos,
        t_down: BipathPos,
    },
    /// `[s, 1^] U [s', 1^]`; an endpoint equal to `One` means that side is
    /// empty.
    Right {
        s_up: BipathPos,
        s_down: BipathPos,
    },
}

/// Classifies an interval of a bipath poset into its type and endpoints.
pub fn classify(bp: &Bipath, interval: &Interval) -> BipathKind {
    let has_bottom = interval.contains(bp.bottom());
    let has_top = interval.contains(bp.top());
    let uppers: Vec<usize> = interval
        .members()
        .iter()
        .copied()
        .filter(|&e| matches!(bp.position(e), BipathPos::Up(_)))
        .collect();
    let downs: Vec<usize> = interval
        .members()
        .iter()
        .copied()
        .filter(|&e| matches!(bp.position(e), BipathPos::Down(_)))
        .collect();
    match (has_bottom, has_top) {
        (true, true) => BipathKind::Full,
        (true, false) => BipathKind::Left {
            t_up: uppers.last().map_or(BipathPos::Zero, |&e| bp.position(e)),
            t_down: downs.last().map_or(BipathPos::Zero, |&e| bp.position(e)),
        },
        (false, true) => BipathKind::Right {
            s_up: uppers.first().map_or(BipathPos::One, |&e| bp.position(e)),
            s_down: downs.first().map_or(BipathPos::One, |&e| bp.position(e)),
        },
        (false, false) => {
            if !uppers.is_empty() {
                BipathKind::Upper {
                    s: uppers[0],
                    t: *uppers.last().unwrap(),
                }
            } else {
                let first = bp.position(downs[0]);
                let last = bp.position(*downs.last().unwrap());
                match (first, last) {
                    (BipathPos::Down(s), BipathPos::Down(t)) => BipathKind::Lower { s, t },
                    _ => unreachable!(),
                }
            }
        }
    }
}

/// The members of the interval described by a kind.
pub fn kind_members(bp: &Bipath, kind: BipathKind) -> Vec<usize> {
    let mut members = Vec::new();
    match kind {
        BipathKind::Full => members.extend(0..=bp.top()),
        BipathKind::Upper { s, t } => members.extend(s..=t),
        BipathKind::Lower { s, t } => members.extend(bp.n + s..=bp.n + t),
        BipathKind::Left { t_up, t_down } => {
            members.push(bp.bottom());
            if let BipathPos::Up(t) = t_up {
                members.extend(1..=t);
            }
            if let BipathPos::Down(t) = t_down {
                members.extend(bp.n + 1..=bp.n + t);
            }
        }
        BipathKind::Right { s_up, s_down } => {
            if let BipathPos::Up(s) = s_up {
                members.extend(s..=bp.n);
            }
            if let BipathPos::Down(s) = s_down {
                members.extend(bp.n + s..=bp.n + bp.m);
            }
            members.push(bp.top());
        }
    }
    members.sort_unstable();
    members
}

/// All intervals of the bipath poset, as kinds, in a fixed order.
pub fn all_kinds(bp: &Bipath) -> Vec<BipathKind> {
    let mut kinds = vec![BipathKind::Full];
    for s in 1..=bp.n {
        for t in s..=bp.n {
            kinds.push(BipathKind::Upper { s, t });
        }
    }
    for s in 1..=bp.m {
        for t in s..=bp.m {
            kinds.push(BipathKind::Lower { s, t });
        }
    }
    let up_ends: Vec<BipathPos> = std::iter::once(BipathPos::Zero)
        .chain((1..=bp.n).map(BipathPos::Up))
        .collect();
    let down_ends: Vec<BipathPos> = std::iter::once(BipathPos::Zero)
        .chain((1..=bp.m).map(BipathPos::Down))
        .collect();
    for &t_up in &up_ends {
        for &t_down in &down_ends {
            kinds.push(BipathKind::Left { t_up, t_down });
        }
    }
    let up_starts: Vec<BipathPos> = (1..=bp.n)
        .map(BipathPos::Up)
        .chain(std::iter::once(BipathPos::One))
        .collect();
    let down_starts: Vec<BipathPos> = (1..=bp.m)
        .map(BipathPos::Down)
        .chain(std::iter::once(BipathPos::One))
        .collect();
    for &s_up in &up_starts {
        for &s_down in &down_starts {
            kinds.push(BipathKind::Right { s_up, s_down });
        }
    }
    kinds
}

/// Closed-form multiplicity, dispatched on the interval type.
pub fn closed_form_multiplicity(m: &PersistenceModule, interval: &Interval) -> Result<usize> {
    let bp = Bipath::from_poset(m.poset())?;
    let kind = classify(&bp, interval);
    closed_form_by_kind(m, &bp, kind)
}

pub fn closed_form_by_kind(
    module: &PersistenceModule,
    bp: &Bipath,
    kind: BipathKind,
) -> Result<usize> {
    let f = module.field();
    let at = |pos: BipathPos| bp.index(pos);
    let map = |x: usize, y: usize| module.map(x, y).clone();
    let value = match kind {
        BipathKind::Full => map(bp.bottom(), bp.top()).rank() as i64,
        BipathKind::Upper { s, t } => {
            let sp = BipathPos::Up(s);
            let tp = BipathPos::Up(t);
            segment_formula(
                module,
                at(sp),
                at(tp),
                at(bp.up_succ(tp)),
                at(bp.up_pred(sp)),
            )?
        }
        BipathKind::Lower { s, t } => {
            let sp = BipathPos::Down(s);
            let tp = BipathPos::Down(t);
            segment_formula(
                module,
                at(sp),
                at(tp),
                at(bp.down_succ(tp)),
                at(bp.down_pred(sp)),
            )?
        }
        BipathKind::Left { t_up, t_down } => {
            let zero = bp.bottom();
            let a = map(zero, at(bp.up_succ(t_up)));
            let b = map(zero, at(bp.down_succ(t_down)));
            if t_up == BipathPos::Zero || t_down == BipathPos::Zero {
                // One side is empty: the interval module is injective.
                let top_end = if t_up == BipathPos::Zero {
                    t_down
                } else {
                    t_up
                };
                let c = map(zero, at(top_end));
                let big = DenseMatrix::vstack(f, &[&a, &b, &c])?;
                let small = DenseMatrix::vstack(f, &[&a, &b])?;
                big.rank() as i64 - small.rank() as i64
            } else {
                let c = map(zero, at(t_up));
                let d = map(zero, at(t_down));
                let zc = DenseMatrix::zeros(f, a.rows(), c.cols());
                let zb = DenseMatrix::zeros(f, b.rows(), c.cols());
                let zd = DenseMatrix::zeros(f, d.rows(), c.cols());
                let big = DenseMatrix::block(
                    f,
                    &[
                        vec![&a, &zc],
                        vec![&b, &zb],
                        vec![&c, &c],
                        vec![&zd, &d.neg()],
                    ],
                )?;
                let eps = DenseMatrix::vstack(f, &[&a, &b])?;
                let pi = DenseMatrix::vstack(f, &[&c, &d.neg()])?;
                big.rank() as i64 - eps.rank() as i64 - pi.rank() as i64
            }
        }
        BipathKind::Right { s_up, s_down } => {
            let top = bp.top();
            let c = map(at(bp.up_pred(s_up)), top);
            let d = map(at(bp.down_pred(s_down)), top);
            if s_up == BipathPos::One || s_down == BipathPos::One {
                let start = if s_up == BipathPos::One { s_down } else { s_up };
                let a = map(at(start), top);
                let big = DenseMatrix::hstack(f, &[&a, &c, &d])?;
                let small = DenseMatrix::hstack(f, &[&c, &d])?;
                big.rank() as i64 - small.rank() as i64
            } else {
                let a = map(at(s_up), top);
                let b = map(at(s_down), top);
                let z_a = DenseMatrix::zeros(f, a.rows(), c.cols());
                let z_b = DenseMatrix::zeros(f, a.rows(), d.cols());
                let z_mid = DenseMatrix::zeros(f, a.rows(), b.cols());
                let big =
                    DenseMatrix::block(f, &[vec![&a, &b, &z_a, &z_b], vec![&a, &z_mid, &c, &d]])?;
                let eps = DenseMatrix::hstack(f, &[&a, &b])?;
                let pi = DenseMatrix::hstack(f, &[&c, &d])?;
                big.rank() as i64 - eps.rank() as i64 - pi.rank() as i64
            }
        }
    };
    debug_assert!(value >= 0);
    Ok(value.max(0) as usize)
}

/// `rank [[M_{t+1,s}, 0], [M_{t,s}, M_{t,s-1}]] - rank M_{t+1,s} -
/// rank M_{t,s-1}`, the path-segment formula shared by types (ii)/(iii).
fn segment_formula(
    module: &PersistenceModule,
    s: usize,
    t: usize,
    t_next: usize,
    s_prev: usize,
) -> Result<i64> {
    let f = module.field();
    let a = module.map(s, t_next);
    let b = module.map(s, t);
    let c = module.map(s_prev, t);
    let z = DenseMatrix::zeros(f, a.rows(), c.cols());
    let big = DenseMatrix::block(f, &[vec![a, &z], vec![b, c]])?;
    Ok(big.rank() as i64 - a.rank() as i64 - c.rank() as i64)
}

/// One diagram entry: type, member set, multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipathEntry {
    pub kind: BipathKind,
    pub interval: Interval,
    pub mult: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipathDiagram {
    pub entries: Vec<BipathEntry>,
}

impl BipathDiagram {
    fn from_mults(bp: &Bipath, poset: &Poset, mults: Vec<(BipathKind, usize)>) -> BipathDiagram {
        let mut entries: Vec<BipathEntry> = mults
            .into_iter()
            .filter(|(_, d)| *d > 0)
            .map(|(kind, mult)| BipathEntry {
                kind,
                interval: poset
                    .interval(&kind_members(bp, kind))
                    .expect("bipath kinds are intervals"),
                mult,
            })
            .collect();
        entries.sort_by(|a, b| {
            a.interval
                .len()
                .cmp(&b.interval.len())
                .then_with(|| a.interval.members().cmp(b.interval.members()))
        });
        BipathDiagram { entries }
    }

    pub fn total_dim(&self) -> usize {
        self.entries.iter().map(|e| e.interval.len() * e.mult).sum()
    }
}

/// The bipath persistence diagram via the closed formulas.
pub fn diagram_closed_form(module: &PersistenceModule) -> Result<BipathDiagram> {
    let bp = Bipath::from_poset(module.poset())?;
    let mults = all_kinds(&bp)
        .into_iter()
        .map(|kind| Ok((kind, closed_form_by_kind(module, &bp, kind)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BipathDiagram::from_mults(&bp, module.poset(), mults))
}

/// The zigzag `Z` covering everything except left-type intervals: the
/// minimum is doubled, with the copy attached to the upper path. Returns
/// the map onto `B_{n,m}`; the extra element is the last index.
pub fn right_zigzag_cover(n: usize, m: usize) -> (Poset, OrderMap) {
    let p = make_bipath(n, m);
    let total = n + m + 2;
    let dup = total; // the doubled minimum
    let mut edges = vec![(dup, 1), (0, n + 1), (n, total - 1), (n + m, total - 1)];
    for i in 1..n {
        edges.push((i, i + 1));
    }
    for j in 1..m {
        edges.push((n + j, n + j + 1));
    }
    let mut labels: Vec<String> = p.labels().to_vec();
    labels.push("0~".to_string());
    let z = Poset::from_hasse_labeled(total + 1, &edges, labels).expect("zigzag is acyclic");
    let mut map: Vec<usize> = (0..total).collect();
    map.push(0);
    let zeta = OrderMap::new(z.clone(), p, map).expect("projection is order-preserving");
    (z, zeta)
}

/// The dual zigzag `Z'` covering everything except right-type intervals:
/// the maximum is doubled, with the copy attached to the lower path.
pub fn left_zigzag_cover(n: usize, m: usize) -> (Poset, OrderMap) {
    let p = make_bipath(n, m);
    let total = n + m + 2;
    let dup = total; // the doubled maximum
    let mut edges = vec![(0, 1), (0, n + 1), (n, total - 1), (n + m, dup)];
    for i in 1..n {
        edges.push((i, i + 1));
    }
    for j in 1..m {
        edges.push((n + j, n + j + 1));
    }
    let mut labels: Vec<String> = p.labels().to_vec();
    labels.push("1~".to_string());
    let z = Poset::from_hasse_labeled(total + 1, &edges, labels).expect("zigzag is acyclic");
    let mut map: Vec<usize> = (0..total).collect();
    map.push(total - 1);
    let zeta = OrderMap::new(z.clone(), p, map).expect("projection is order-preserving");
    (z, zeta)
}

/// A single zigzag covering every interval type at once: the lower path is
/// duplicated above a doubled minimum. Restrictions of lower-type interval
/// modules split into two bars, so the bar-multiplicity is required.
pub fn unified_zigzag_cover(n: usize, m: usize) -> (Poset, OrderMap) {
    let p = make_bipath(n, m);
    let total = n + m + 2;
    let dup0 = total; // doubled minimum
    let first_dup = total + 1; // 1'', .., m'' are total+1 .. total+m
    let mut edges = vec![
        (dup0, 1),
        (dup0, first_dup),
        (0, n + 1),
        (n, total - 1),
        (n + m, total - 1),
    ];
    for i in 1..n {
        edges.push((i, i + 1));
    }
    for j in 1..m {
        edges.push((n + j, n + j + 1));
        edges.push((first_dup + j - 1, first_dup + j));
    }
    let mut labels: Vec<String> = p.labels().to_vec();
    labels.push("0~".to_string());
    labels.extend((1..=m).map(|j| format!("{j}''")));
    let z = Poset::from_hasse_labeled(total + 1 + m, &edges, labels).expect("acyclic");
    let mut map: Vec<usize> = (0..total).collect();
    map.push(0);
    map.extend((1..=m).map(|j| n + j));
    let zeta = OrderMap::new(z.clone(), p, map).expect("order-preserving");
    (z, zeta)
}

/// The bipath diagram computed through the two zigzag restrictions: the
/// right cover handles upper, lower, right, and full intervals; the left
/// cover handles left intervals. Over each zigzag the multiplicity is the
/// general rank formula on the restricted module.
pub fn diagram_via_zigzag(module: &PersistenceModule) -> Result<BipathDiagram> {
    let bp = Bipath::from_poset(module.poset())?;
    let (z_right, zeta_right) = right_zigzag_cover(bp.n, bp.m);
    let (z_left, zeta_left) = left_zigzag_cover(bp.n, bp.m);
    let restricted_right = restrict(&zeta_right, module)?;
    let restricted_left = restrict(&zeta_left, module)?;
    let mults = all_kinds(&bp)
        .into_iter()
        .map(|kind| {
            let members = kind_members(&bp, kind);
            let d = match kind {
                BipathKind::Left { .. } => {
                    let support: Vec<usize> = (0..z_left.len())
                        .filter(|&z| members.binary_search(&zeta_left.apply(z)).is_ok())
                        .collect();
                    let j = z_left.interval(&support).expect("preimage is an interval");
                    interval_multiplicity(&restricted_left, &j)
                }
                _ => {
                    let support: Vec<usize> = (0..z_right.len())
                        .filter(|&z| members.binary_search(&zeta_right.apply(z)).is_ok())
                        .collect();
                    let j = z_right.interval(&support).expect("preimage is an interval");
                    interval_multiplicity(&restricted_right, &j)
                }
            };
            Ok((kind, d))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BipathDiagram::from_mults(&bp, module.poset(), mults))
}

/// Third route: one unified zigzag for all types, using bar-multiplicity
/// where the restriction splits (lower and left types).
pub fn diagram_via_unified_cover(module: &PersistenceModule) -> Result<BipathDiagram> {
    let bp = Bipath::from_poset(module.poset())?;
    let (_, zeta) = unified_zigzag_cover(bp.n, bp.m);
    let restricted = restrict(&zeta, module)?;
    let field = module.field();
    let mults = all_kinds(&bp)
        .into_iter()
        .map(|kind| {
            let members = kind_members(&bp, kind);
            let interval = module.poset().interval(&members).expect("interval");
            let v = PersistenceModule::interval_module(module.poset(), &interval, field);
            let rv = restrict(&zeta, &v)?;
            Ok((kind, bar_d(&restricted, &rv)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BipathDiagram::from_mults(&bp, module.poset(), mults))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::sample::{random_module, Rng};

    #[test]
    fn detection_and_positions() {
        let p = make_bipath(3, 2);
        let bp = Bipath::from_poset(&p).unwrap();
        assert_eq!((bp.n, bp.m), (3, 2));
        assert_eq!(bp.position(0), BipathPos::Zero);
        assert_eq!(bp.position(2), BipathPos::Up(2));
        assert_eq!(bp.position(4), BipathPos::Down(1));
        assert_eq!(bp.position(6), BipathPos::One);
        assert!(Bipath::from_poset(&crate::poset::make_grid(3, 2)).is_err());
    }

    #[test]
    fn endpoint_arithmetic_table() {
        let bp = Bipath { n: 3, m: 2 };
        assert_eq!(bp.up_succ(BipathPos::Zero), BipathPos::Up(1));
        assert_eq!(bp.up_succ(BipathPos::Up(3)), BipathPos::One);
        assert_eq!(bp.up_succ(BipathPos::Up(1)), BipathPos::Up(2));
        assert_eq!(bp.down_succ(BipathPos::Zero), BipathPos::Down(1));
        assert_eq!(bp.down_succ(BipathPos::Down(2)), BipathPos::One);
        assert_eq!(bp.up_pred(BipathPos::Up(1)), BipathPos::Zero);
        assert_eq!(bp.up_pred(BipathPos::One), BipathPos::Up(3));
        assert_eq!(bp.down_pred(BipathPos::Down(1)), BipathPos::Zero);
        assert_eq!(bp.down_pred(BipathPos::One), BipathPos::Down(2));
        assert_eq!(bp.down_pred(BipathPos::Down(2)), BipathPos::Down(1));
    }

    #[test]
    fn classification_of_each_type() {
        let p = make_bipath(2, 2);
        let bp = Bipath::from_poset(&p).unwrap();
        let whole = p.whole_interval().unwrap();
        assert_eq!(classify(&bp, &whole), BipathKind::Full);
        // Indices in B_{2,2}: 0^ = 0, upper {1, 2}, lower 1' = 3, 2' = 4, 1^ = 5.
        let left = p.interval(&[0, 1, 3]).unwrap(); // [0^,1] U [0^,1']
        assert_eq!(
            classify(&bp, &left),
            BipathKind::Left {
                t_up: BipathPos::Up(1),
                t_down: BipathPos::Down(1)
            }
        );
        let upper = p.interval(&[1, 2]).unwrap();
        assert_eq!(classify(&bp, &upper), BipathKind::Upper { s: 1, t: 2 });
        let lower = p.interval(&[4]).unwrap();
        assert_eq!(classify(&bp, &lower), BipathKind::Lower { s: 2, t: 2 });
        let right = p.interval(&[2, 3, 4, 5]).unwrap();
        assert_eq!(
            classify(&bp, &right),
            BipathKind::Right {
                s_up: BipathPos::Up(2),
                s_down: BipathPos::Down(1)
            }
        );
        let bottom_only = p.interval(&[0]).unwrap();
        assert_eq!(
            classify(&bp, &bottom_only),
            BipathKind::Left {
                t_up: BipathPos::Zero,
                t_down: BipathPos::Zero
            }
        );
    }

    #[test]
    fn kinds_enumerate_all_intervals() {
        for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            let p = make_bipath(n, m);
            let bp = Bipath::from_poset(&p).unwrap();
            let mut from_kinds: Vec<Vec<usize>> = all_kinds(&bp)
                .into_iter()
                .map(|k| kind_members(&bp, k))
                .collect();
            from_kinds.sort();
            from_kinds.dedup();
            let mut enumerated: Vec<Vec<usize>> = p
                .enumerate_intervals()
                .iter()
                .map(|i| i.members().to_vec())
                .collect();
            enumerated.sort();
            assert_eq!(from_kinds, enumerated, "B_{{{n},{m}}}");
        }
    }

    #[test]
    fn full_interval_of_interval_module() {
        let p = make_bipath(2, 2);
        let f = Field::GF2;
        let whole = p.whole_interval().unwrap();
        let v = PersistenceModule::interval_module(&p, &whole, f);
        assert_eq!(closed_form_multiplicity(&v, &whole).unwrap(), 1);
        let upper = p.interval(&[1, 2]).unwrap();
        let vu = PersistenceModule::interval_module(&p, &upper, f);
        assert_eq!(closed_form_multiplicity(&vu, &upper).unwrap(), 1);
        assert_eq!(closed_form_multiplicity(&vu, &whole).unwrap(), 0);
    }

    #[test]
    fn closed_form_matches_general_on_random_modules() {
        let p = make_bipath(3, 2);
        let mut rng = Rng::new(31);
        for _ in 0..5 {
            let m = random_module(&p, Field::GF2, 3, &mut rng);
            for i in p.enumerate_intervals() {
                assert_eq!(
                    closed_form_multiplicity(&m, &i).unwrap(),
                    interval_multiplicity(&m, &i),
                    "interval {i:?}"
                );
            }
        }
    }

    #[test]
    fn interval_module_diagrams_are_deltas() {
        let p = make_bipath(2, 2);
        let bp = Bipath::from_poset(&p).unwrap();
        let f = Field::GF2;
        for kind in all_kinds(&bp) {
            let i = p.interval(&kind_members(&bp, kind)).unwrap();
            let v = PersistenceModule::interval_module(&p, &i, f);
            for route in [
                diagram_closed_form(&v).unwrap(),
                diagram_via_zigzag(&v).unwrap(),
                diagram_via_unified_cover(&v).unwrap(),
            ] {
                assert_eq!(route.entries.len(), 1, "kind {kind:?}");
                assert_eq!(route.entries[0].interval, i);
                assert_eq!(route.entries[0].mult, 1);
                assert_eq!(route.entries[0].kind, kind);
            }
        }
    }

    #[test]
    fn three_routes_agree_and_account_all_dimensions() {
        let p = make_bipath(2, 2);
        let mut rng = Rng::new(77);
        for _ in 0..5 {
            let m = random_module(&p, Field::gf(3).unwrap(), 3, &mut rng);
            let closed = diagram_closed_form(&m).unwrap();
            assert_eq!(closed, diagram_via_zigzag(&m).unwrap());
            assert_eq!(closed, diagram_via_unified_cover(&m).unwrap());
            // Bipath modules are always interval-decomposable.
            assert_eq!(closed.total_dim(), m.total_dim());
        }
    }
}
