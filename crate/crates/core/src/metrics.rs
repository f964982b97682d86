//! Length, genus, distances, level partitions, type and the canonical ideal.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::point::{ext_lt, Point, Point2, INF};
use crate::semigroup::{finite_maximals, infinity_projection, walk_box, GoodSemigroup, Projection};

/// `(l_S, g_S)` of every infinity projection, axis by axis.
pub fn axis_contributions(s: &GoodSemigroup) -> Vec<Projection> {
    (0..s.dim())
        .map(|i| infinity_projection(s, i).expect("axis in range"))
        .collect()
}

pub fn length(s: &GoodSemigroup) -> u64 {
    axis_contributions(s).iter().map(Projection::length).sum()
}

pub fn genus(s: &GoodSemigroup) -> u64 {
    axis_contributions(s).iter().map(Projection::genus).sum()
}

/// Planar genus as `g(S₁) + g(S₂) + |A_f(S)|`, with `S_i` the plain
/// coordinate projections.
pub fn genus_by_maximals(s: &GoodSemigroup) -> Result<u64> {
    s.require_planar()?;
    let (c1, c2) = s.c2();
    let mut p1 = vec![false; c1 as usize];
    let mut p2 = vec![false; c2 as usize];
    for p in s.small() {
        if p[0] < c1 {
            p1[p[0] as usize] = true;
        }
        if p[1] < c2 {
            p2[p[1] as usize] = true;
        }
    }
    let gaps = |v: &[bool]| v.iter().filter(|&&b| !b).count() as u64;
    Ok(gaps(&p1) + gaps(&p2) + finite_maximals(s).len() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxisContribution {
    pub axis: usize,
    pub length: u64,
    pub genus: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricsReport {
    pub length: u64,
    pub genus: u64,
    pub conductor_sum: u64,
    #[serde(rename = "type")]
    pub type_: Option<usize>,
    pub axis_contributions: Vec<AxisContribution>,
}

pub fn metrics_report(s: &GoodSemigroup) -> Result<MetricsReport> {
    let axes = axis_contributions(s);
    let report = MetricsReport {
        length: axes.iter().map(Projection::length).sum(),
        genus: axes.iter().map(Projection::genus).sum(),
        conductor_sum: s.conductor_sum(),
        type_: if s.dim() == 2 && !s.is_whole_space() {
            Some(type_of(s)?)
        } else {
            None
        },
        axis_contributions: axes
            .iter()
            .map(|p| AxisContribution {
                axis: p.axis + 1,
                length: p.length(),
                genus: p.genus(),
            })
            .collect(),
    };
    if s.dim() == 2 && genus_by_maximals(s)? != report.genus {
        return Err(Error::Internal(format!(
            "genus formulas disagree on {s}"
        )));
    }
    Ok(report)
}

/// A relative ideal given by its members below a saturation bound:
/// `α ∈ E ⟺ min(α, bound) ∈ E`.
#[derive(Clone, Debug)]
pub struct Ideal {
    dim: usize,
    bound: Vec<u32>,
    members: HashSet<Vec<u32>>,
}

impl Ideal {
    /// Members are read from `pred` on the box `[0, bound]`.
    pub fn from_predicate(bound: Vec<u32>, pred: impl Fn(&[u32]) -> bool) -> Self {
        let mut members = HashSet::new();
        walk_box(&vec![0; bound.len()], &bound, |p| {
            if pred(p) {
                members.insert(p.to_vec());
            }
            true
        });
        Ideal {
            dim: bound.len(),
            bound,
            members,
        }
    }

    pub fn whole_space(dim: usize) -> Self {
        Ideal::from_predicate(vec![0; dim], |_| true)
    }

    pub fn from_semigroup(s: &GoodSemigroup) -> Self {
        Ideal {
            dim: s.dim(),
            bound: s.conductor().to_vec(),
            members: s.small().map(|p| p.to_vec()).collect(),
        }
    }

    /// `C(S) = c(S) + ℕ^d`.
    pub fn conductor_ideal(s: &GoodSemigroup) -> Self {
        let c = s.conductor().to_vec();
        Ideal::from_predicate(c.clone(), |p| p == c.as_slice())
    }

    /// `S − M`, the elements whose sum with any nonzero element is in `S`.
    pub fn dual_of_maximal(s: &GoodSemigroup) -> Self {
        let nonzero: Vec<&[u32]> = s.small().filter(|p| p.iter().any(|&v| v > 0)).collect();
        Ideal::from_predicate(s.conductor().to_vec(), |a| {
            nonzero.iter().all(|m| {
                let sum: Vec<u32> = a.iter().zip(*m).map(|(x, y)| x + y).collect();
                s.contains_unchecked(&sum)
            })
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        let clipped: Vec<u32> = p.iter().zip(&self.bound).map(|(&v, &b)| v.min(b)).collect();
        self.members.contains(&clipped)
    }

    /// `e(E)`, the componentwise minimum, when it belongs to `E`.
    pub fn minimum(&self) -> Option<Vec<u32>> {
        let mut it = self.members.iter();
        let mut m = it.next()?.clone();
        for p in it {
            for (a, &b) in m.iter_mut().zip(p) {
                *a = (*a).min(b);
            }
        }
        self.contains(&m).then_some(m)
    }

    /// G1 and the finite G3 criterion on the members below the bound.
    pub fn is_good(&self) -> bool {
        let pts: Vec<&Vec<u32>> = self.members.iter().collect();
        let d = self.dim;
        let c = &self.bound;
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                let m: Vec<u32> = a.iter().zip(b.iter()).map(|(x, y)| *x.min(y)).collect();
                if !self.members.contains(&m) {
                    return false;
                }
                for axis in 0..d {
                    if a[axis] != b[axis] || a[axis] >= c[axis] {
                        continue;
                    }
                    let ok = pts.iter().any(|s| {
                        s[axis] > a[axis]
                            && (0..d).filter(|&j| j != axis).all(|j| {
                                if a[j] != b[j] {
                                    s[j] == a[j].min(b[j])
                                } else {
                                    s[j] >= a[j]
                                }
                            })
                    });
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy)]
enum Cover {
    LexMin,
    SumMinLexMax,
}

/// Length of a saturated chain of `E` from `from` to `to`, picking covers
/// by the given rule. Every pick is a cover: anything strictly between would
/// be lexicographically smaller and have a smaller coordinate sum.
fn chain_length(e: &Ideal, from: &[u32], to: &[u32], rule: Cover) -> Result<u64> {
    let mut p = from.to_vec();
    let mut steps = 0;
    while p != to {
        let mut best: Option<Vec<u32>> = None;
        walk_box(&p, to, |q| {
            if q == p.as_slice() || !e.contains(q) {
                return true;
            }
            match rule {
                Cover::LexMin => {
                    best = Some(q.to_vec());
                    false
                }
                Cover::SumMinLexMax => {
                    let sum: u64 = q.iter().map(|&v| v as u64).sum();
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            let bs: u64 = b.iter().map(|&v| v as u64).sum();
                            sum < bs || (sum == bs && q > b.as_slice())
                        }
                    };
                    if better {
                        best = Some(q.to_vec());
                    }
                    true
                }
            }
        });
        p = best.ok_or_else(|| {
            Error::Distance(format!("chain stuck at {}", Point::new(p.clone())))
        })?;
        steps += 1;
    }
    Ok(steps)
}

fn chain_from_minimum(e: &Ideal, to: &[u32]) -> Result<u64> {
    let m = e
        .minimum()
        .ok_or_else(|| Error::Distance("ideal has no minimum".into()))?;
    let a = chain_length(e, &m, to, Cover::LexMin)?;
    let b = chain_length(e, &m, to, Cover::SumMinLexMax)?;
    if a != b {
        return Err(Error::Internal(format!(
            "saturated chains of different lengths: {a} and {b}"
        )));
    }
    Ok(a)
}

/// `d(E ∖ F)` computed from explicit saturated chains.
pub fn distance_oracle(e: &Ideal, f: &Ideal) -> Result<u64> {
    if e.dim != f.dim {
        return Err(Error::DimensionMismatch {
            expected: e.dim,
            got: f.dim,
        });
    }
    if !e.is_good() || !f.is_good() {
        return Err(Error::Distance("input is not a good ideal".into()));
    }
    let alpha: Vec<u32> = e
        .bound
        .iter()
        .zip(&f.bound)
        .map(|(&a, &b)| a.max(b) + 1)
        .collect();
    let mut escaped = None;
    walk_box(&vec![0; e.dim], &alpha, |p| {
        if f.contains(p) && !e.contains(p) {
            escaped = Some(p.to_vec());
            false
        } else {
            true
        }
    });
    if let Some(p) = escaped {
        return Err(Error::Distance(format!(
            "{} lies in the smaller ideal only",
            Point::new(p)
        )));
    }
    let de = chain_from_minimum(e, &alpha)?;
    let df = chain_from_minimum(f, &alpha)?;
    de.checked_sub(df)
        .ok_or_else(|| Error::Internal("negative distance".into()))
}

/// Level partition `A₁, …, A_N` of a clipped planar set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelPartition {
    pub levels: Vec<Vec<Point2>>,
}

impl LevelPartition {
    pub fn nl(&self) -> usize {
        self.levels.len()
    }

    /// 1-based level of `p`.
    pub fn level_of(&self, p: Point2) -> Option<usize> {
        self.levels.iter().position(|l| l.contains(&p)).map(|i| i + 1)
    }
}

fn in_delta(a: Point2, b: Point2, axis: usize) -> bool {
    if axis == 0 {
        b.x == a.x && b.y != a.y && ext_lt(a.y, b.y)
    } else {
        b.y == a.y && b.x != a.x && ext_lt(a.x, b.x)
    }
}

/// Peels off the `D`-sets: maximal points under `≪` that are not the meet
/// of two others in the same layer.
pub fn level_partition(a: &[Point2]) -> Result<LevelPartition> {
    if a.contains(&Point2::new(INF, INF)) {
        return Err(Error::CoCone("the set contains (inf,inf)".into()));
    }
    let mut rest: Vec<Point2> = a.to_vec();
    rest.sort();
    rest.dedup();
    let mut peeled = Vec::new();
    while !rest.is_empty() {
        let b: Vec<Point2> = rest
            .iter()
            .copied()
            .filter(|&p| !rest.iter().any(|&q| p.ll(q)))
            .collect();
        let d: Vec<Point2> = b
            .iter()
            .copied()
            .filter(|&p| {
                !(b.iter().any(|&q| in_delta(p, q, 0)) && b.iter().any(|&q| in_delta(p, q, 1)))
            })
            .collect();
        if d.is_empty() {
            return Err(Error::Internal("level recursion made no progress".into()));
        }
        rest.retain(|p| !d.contains(p));
        peeled.push(d);
    }
    peeled.reverse();
    Ok(LevelPartition { levels: peeled })
}

/// Points `(x, y)` with `x, y` in `0..c_i+pad` or infinite that satisfy
/// `pred`; the infinite class is evaluated at `c_i + pad`.
pub fn clipped_set(
    s: &GoodSemigroup,
    pad: u32,
    pred: impl Fn(u32, u32) -> bool,
) -> Result<Vec<Point2>> {
    s.require_planar()?;
    let (c1, c2) = s.c2();
    let xs: Vec<u32> = (0..c1 + pad).chain([INF]).collect();
    let ys: Vec<u32> = (0..c2 + pad).chain([INF]).collect();
    let mut out = Vec::new();
    for &x in &xs {
        for &y in &ys {
            let rx = if x == INF { c1 + pad } else { x };
            let ry = if y == INF { c2 + pad } else { y };
            if pred(rx, ry) {
                out.push(Point2::new(x, y));
            }
        }
    }
    Ok(out)
}

/// `ℕ² ∖ S`, clipped with the given padding.
pub fn gaps(s: &GoodSemigroup, pad: u32) -> Result<Vec<Point2>> {
    clipped_set(s, pad, |x, y| !s.contains_unchecked(&[x, y]))
}

fn is_pseudo_frobenius(s: &GoodSemigroup, nonzero: &[&[u32]], x: u32, y: u32) -> bool {
    // min(α+m, c) = min(α+min(m,c), c), so the nonzero small elements
    // stand in for all of M.
    !s.contains_unchecked(&[x, y])
        && nonzero
            .iter()
            .all(|m| s.contains_unchecked(&[x + m[0], y + m[1]]))
}

/// `PF(S)` clipped with the given padding.
pub fn pseudo_frobenius_padded(s: &GoodSemigroup, pad: u32) -> Result<Vec<Point2>> {
    let nonzero: Vec<&[u32]> = s.small().skip(1).collect();
    clipped_set(s, pad, |x, y| is_pseudo_frobenius(s, &nonzero, x, y))
}

/// `PF(S)`, clipped: coordinates up to `c_i`, or infinite.
pub fn pseudo_frobenius(s: &GoodSemigroup) -> Result<Vec<Point2>> {
    pseudo_frobenius_padded(s, 1)
}

/// `t(S) = NL(PF(S))`.
pub fn type_of(s: &GoodSemigroup) -> Result<usize> {
    Ok(level_partition(&pseudo_frobenius(s)?)?.nl())
}

/// `Δ^S(β) ≠ ∅` for `β ∈ ℤ²`.
fn delta_nonempty(s: &GoodSemigroup, bx: i64, by: i64) -> bool {
    let (c1, c2) = s.c2();
    let (c1, c2) = (c1 as i64, c2 as i64);
    let column = bx >= 0
        && (by.max(-1) + 1..=c2.max(by + 1)).any(|y| s.contains_unchecked(&[bx as u32, y as u32]));
    let row = by >= 0
        && (bx.max(-1) + 1..=c1.max(bx + 1)).any(|x| s.contains_unchecked(&[x as u32, by as u32]));
    column || row
}

/// The canonical ideal `K = {α : Δ^S(γ − α) = ∅}`, `γ = c − 1`, on the box
/// `[0, c+1]` where `c_i + 1` stands for every larger value.
pub fn canonical_ideal(s: &GoodSemigroup) -> Result<Vec<Point2>> {
    s.require_planar()?;
    let (c1, c2) = s.c2();
    let mut out = Vec::new();
    for x in 0..=c1 + 1 {
        for y in 0..=c2 + 1 {
            let (gx, gy) = (c1 as i64 - 1 - x as i64, c2 as i64 - 1 - y as i64);
            if !delta_nonempty(s, gx, gy) {
                out.push(Point2::new(x, y));
            }
        }
    }
    Ok(out)
}

/// `K` as an ideal saturated at the conductor.
pub fn canonical_ideal_as_ideal(s: &GoodSemigroup) -> Result<Ideal> {
    let k: HashSet<Point2> = canonical_ideal(s)?.into_iter().collect();
    Ok(Ideal::from_predicate(s.conductor().to_vec(), |p| {
        k.contains(&Point2::new(p[0], p[1]))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{parse_semigroup, validate};

    fn sg(points: &[(u32, u32)]) -> GoodSemigroup {
        validate(points.iter().map(|&(x, y)| vec![x, y]).collect()).unwrap()
    }

    #[test]
    fn small_lengths_and_genera() {
        let u = GoodSemigroup::unit_box(2);
        assert_eq!((length(&u), genus(&u)), (1, 1));
        let s3 = sg(&[(0, 0), (1, 1), (2, 2)]);
        assert_eq!((length(&s3), genus(&s3)), (2, 2));
        let s1 = sg(&[(0, 0), (1, 2)]);
        assert_eq!(genus(&s1), 2);
        assert_eq!(genus_by_maximals(&s1).unwrap(), 2);
        assert_eq!(genus_by_maximals(&s3).unwrap(), 2);
    }

    #[test]
    fn distance_examples() {
        let s1 = sg(&[(0, 0), (1, 2)]);
        let s3 = sg(&[(0, 0), (1, 1), (2, 2)]);
        let e = Ideal::from_semigroup(&s1);
        assert_eq!(distance_oracle(&e, &e).unwrap(), 0);
        assert_eq!(distance_oracle(&Ideal::whole_space(2), &e).unwrap(), 2);
        assert_eq!(
            distance_oracle(&Ideal::from_semigroup(&s3), &Ideal::conductor_ideal(&s3)).unwrap(),
            2
        );
        assert!(matches!(
            distance_oracle(&e, &Ideal::whole_space(2)),
            Err(Error::Distance(_))
        ));
    }

    #[test]
    fn levels_of_small_sets() {
        let p = |x, y| Point2::new(x, y);
        let lp = level_partition(&[p(1, 2), p(2, 1), p(1, 1)]).unwrap();
        assert_eq!(lp.levels, vec![vec![p(1, 1)], vec![p(1, 2), p(2, 1)]]);
        // an L-shaped Δ(f)
        let l: Vec<Point2> = vec![p(2, 3), p(2, 4), p(2, INF), p(3, 2), p(4, 2), p(INF, 2)];
        assert_eq!(level_partition(&l).unwrap().nl(), 1);
        assert!(level_partition(&[p(INF, INF)]).is_err());
        let s3 = sg(&[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(level_partition(&gaps(&s3, 1).unwrap()).unwrap().nl(), 2);
    }

    #[test]
    fn pseudo_frobenius_and_type() {
        let p = |x, y| Point2::new(x, y);
        let s3 = sg(&[(0, 0), (1, 1), (2, 2)]);
        let mut pf = pseudo_frobenius(&s3).unwrap();
        pf.sort();
        assert_eq!(pf, vec![p(1, 2), p(1, INF), p(2, 1), p(INF, 1)]);
        assert_eq!(type_of(&s3).unwrap(), 1);
        let u = GoodSemigroup::unit_box(2);
        let mut pf = pseudo_frobenius(&u).unwrap();
        pf.sort();
        assert_eq!(pf, vec![p(0, 1), p(0, INF), p(1, 0), p(INF, 0)]);
        assert_eq!(type_of(&u).unwrap(), 1);
    }

    #[test]
    fn canonical_ideal_of_unit_box() {
        let u = GoodSemigroup::unit_box(2);
        let k = canonical_ideal(&u).unwrap();
        for x in 0..=2 {
            for y in 0..=2 {
                assert_eq!(
                    k.contains(&Point2::new(x, y)),
                    u.contains_unchecked(&[x, y]),
                    "({x},{y})"
                );
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let s = parse_semigroup("0 0\n1 2").unwrap();
        let json = serde_json::to_value(metrics_report(&s).unwrap()).unwrap();
        assert_eq!(json["genus"], 2);
        assert_eq!(json["length"], 1);
        assert_eq!(json["conductor_sum"], 3);
        // every gap of S₁ is pseudo-Frobenius, and the gaps form two levels
        assert_eq!(json["type"], 2);
        assert_eq!(json["axis_contributions"][1]["genus"], 2);
    }
}
