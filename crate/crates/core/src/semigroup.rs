//! Good semigroups of `ℕ^d` stored through their small elements.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result, ValidationError};
use crate::point::{leq, Point, Point2, INF};

/// A validated good semigroup.
///
/// `small` holds the small elements in lexicographic order, flattened
/// `dim` coordinates at a time. The conductor is the last point of the
/// lexicographic order only by accident; it is stored separately as the
/// componentwise maximum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GoodSemigroup {
    dim: usize,
    small: Vec<u32>,
    conductor: Vec<u32>,
}

impl GoodSemigroup {
    /// Builds from sorted, deduplicated points without checking the axioms.
    pub(crate) fn from_sorted_unchecked(dim: usize, small: Vec<u32>) -> Self {
        debug_assert!(dim > 0 && small.len() % dim == 0 && !small.is_empty());
        let mut conductor = vec![0; dim];
        for p in small.chunks_exact(dim) {
            for (c, &v) in conductor.iter_mut().zip(p) {
                *c = (*c).max(v);
            }
        }
        GoodSemigroup {
            dim,
            small,
            conductor,
        }
    }

    /// `ℕ^d` itself, the semigroup with conductor 0.
    pub fn whole_space(dim: usize) -> Self {
        GoodSemigroup::from_sorted_unchecked(dim, vec![0; dim])
    }

    /// `ℕ^d(1,…,1)`, the local semigroup with small elements `{0, 1}`.
    pub fn unit_box(dim: usize) -> Self {
        let mut small = vec![0; dim];
        small.extend(std::iter::repeat(1).take(dim));
        GoodSemigroup::from_sorted_unchecked(dim, small)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> &[u32] {
        &self.conductor
    }

    /// `c_S`, the sum of the conductor's coordinates.
    pub fn conductor_sum(&self) -> u64 {
        self.conductor.iter().map(|&v| v as u64).sum()
    }

    pub fn small(&self) -> std::slice::ChunksExact<'_, u32> {
        self.small.chunks_exact(self.dim)
    }

    pub fn small_points(&self) -> Vec<Point> {
        self.small().map(|p| Point::new(p.to_vec())).collect()
    }

    pub fn small_len(&self) -> usize {
        self.small.len() / self.dim
    }

    pub fn is_whole_space(&self) -> bool {
        self.conductor.iter().all(|&v| v == 0)
    }

    /// A non-fatal remark about the input, if any.
    pub fn warning(&self) -> Option<&'static str> {
        self.is_whole_space()
            .then_some("the set {0} describes the whole space, which is not local")
    }

    /// Membership of a small element candidate `p ≤ c`.
    pub(crate) fn is_small(&self, p: &[u32]) -> bool {
        let d = self.dim;
        let n = self.small_len();
        let (mut lo, mut hi) = (0, n);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.small[mid * d..(mid + 1) * d].cmp(p) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Membership with coordinates already known to have length `dim`.
    /// Infinite coordinates are clipped like any value above the conductor.
    pub(crate) fn contains_unchecked(&self, p: &[u32]) -> bool {
        let clipped: Vec<u32> = p
            .iter()
            .zip(&self.conductor)
            .map(|(&v, &c)| v.min(c))
            .collect();
        self.is_small(&clipped)
    }

    pub fn contains(&self, p: &[u32]) -> Result<bool> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.len(),
            });
        }
        Ok(self.contains_unchecked(p))
    }

    /// Planar conductor as a pair. Panics off the plane; callers check first.
    pub(crate) fn c2(&self) -> (u32, u32) {
        assert_eq!(self.dim, 2);
        (self.conductor[0], self.conductor[1])
    }

    pub(crate) fn require_planar(&self) -> Result<()> {
        if self.dim == 2 {
            Ok(())
        } else {
            Err(Error::NotPlanar(self.dim))
        }
    }

    /// The small elements as planar points.
    pub fn small2(&self) -> Result<Vec<Point2>> {
        self.require_planar()?;
        Ok(self.small().map(|p| Point2::new(p[0], p[1])).collect())
    }

    /// Canonical text document: one point per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in self.small() {
            let line: Vec<String> = p.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Canonical single-line form, e.g. `0,0 1,2`.
    pub fn to_line(&self) -> String {
        let pts: Vec<String> = self
            .small()
            .map(|p| {
                p.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        pts.join(" ")
    }

    /// Inverse of [`GoodSemigroup::to_line`]. Checks the canonical shape
    /// (sorted, distinct, equal dimensions, origin present) but not the axioms.
    pub fn from_line(line: &str) -> Result<Self> {
        let mut flat = Vec::new();
        let mut dim = 0;
        for (k, tok) in line.split_whitespace().enumerate() {
            let coords: std::result::Result<Vec<u32>, _> =
                tok.split(',').map(str::parse::<u32>).collect();
            let coords = coords.map_err(|e| Error::Syntax {
                line: 1,
                message: format!("bad point {tok:?}: {e}"),
            })?;
            if k == 0 {
                dim = coords.len();
            } else if coords.len() != dim {
                return Err(Error::Syntax {
                    line: 1,
                    message: format!("point {tok:?} has the wrong dimension"),
                });
            }
            flat.extend(coords);
        }
        if dim == 0 {
            return Err(Error::Syntax {
                line: 1,
                message: "empty semigroup line".into(),
            });
        }
        let sorted = flat
            .chunks_exact(dim)
            .zip(flat.chunks_exact(dim).skip(1))
            .all(|(a, b)| a < b);
        if !sorted || flat[..dim].iter().any(|&v| v != 0) {
            return Err(Error::Syntax {
                line: 1,
                message: "semigroup line is not in canonical form".into(),
            });
        }
        Ok(GoodSemigroup::from_sorted_unchecked(dim, flat))
    }
}

impl fmt::Display for GoodSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.small().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", Point::new(p.to_vec()))?;
        }
        f.write_str("}")
    }
}

#[derive(Serialize)]
struct SmallDoc<'a> {
    small: Vec<&'a [u32]>,
}

impl Serialize for GoodSemigroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SmallDoc {
            small: self.small().collect(),
        }
        .serialize(s)
    }
}

/// Calls `f` on every point of the box `[lo, hi]` in lexicographic order
/// until it returns `false`. Returns whether the walk completed.
pub(crate) fn walk_box(lo: &[u32], hi: &[u32], mut f: impl FnMut(&[u32]) -> bool) -> bool {
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return true;
    }
    let mut p = lo.to_vec();
    loop {
        if !f(&p) {
            return false;
        }
        let mut k = p.len();
        loop {
            if k == 0 {
                return true;
            }
            k -= 1;
            if p[k] < hi[k] {
                p[k] += 1;
                break;
            }
            p[k] = lo[k];
        }
    }
}

fn parse_text(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut points = Vec::new();
    let mut dim = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut coords = Vec::new();
        for tok in line.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| Error::Syntax {
                line: idx + 1,
                message: format!("expected a non-negative integer, found {tok:?}"),
            })?;
            if v == INF {
                return Err(Error::Syntax {
                    line: idx + 1,
                    message: format!("coordinate {v} is out of range"),
                });
            }
            coords.push(v);
        }
        match dim {
            None => dim = Some(coords.len()),
            Some(d) if d != coords.len() => {
                return Err(Error::Syntax {
                    line: idx + 1,
                    message: format!("expected {d} coordinates, found {}", coords.len()),
                })
            }
            _ => {}
        }
        points.push(coords);
    }
    Ok(points)
}

#[derive(serde::Deserialize)]
struct SmallInput {
    small: Vec<Vec<u32>>,
}

fn parse_json(text: &str) -> Result<Vec<Vec<u32>>> {
    let doc: SmallInput = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        message: e.to_string(),
    })?;
    if let Some((i, _)) = doc.small.iter().enumerate().find(|(_, p)| p.is_empty()) {
        return Err(Error::Syntax {
            line: 1,
            message: format!("point #{} has no coordinates", i + 1),
        });
    }
    Ok(doc.small)
}

/// Parses and validates a small-set document (plain text or JSON).
pub fn parse_semigroup(text: &str) -> Result<GoodSemigroup> {
    let points = if text.trim_start().starts_with('{') {
        parse_json(text)?
    } else {
        parse_text(text)?
    };
    Ok(validate(points)?)
}

/// Validates a finite set of finite points and returns the canonical
/// semigroup it describes.
pub fn validate(points: Vec<Vec<u32>>) -> std::result::Result<GoodSemigroup, ValidationError> {
    let dim = match points.first() {
        None => return Err(ValidationError::Empty),
        Some(p) if p.is_empty() => {
            return Err(ValidationError::Dimension {
                point: vec![],
                expected: 1,
            })
        }
        Some(p) => p.len(),
    };
    if let Some(p) = points.iter().find(|p| p.len() != dim) {
        return Err(ValidationError::Dimension {
            point: p.clone(),
            expected: dim,
        });
    }
    let mut pts = points;
    pts.sort();
    pts.dedup();
    let flat: Vec<u32> = pts.concat();
    let s = GoodSemigroup::from_sorted_unchecked(dim, flat);
    check_axioms(&s)?;
    Ok(canonicalize(s)?)
}

fn check_axioms(s: &GoodSemigroup) -> std::result::Result<(), ValidationError> {
    let d = s.dim;
    let zero = vec![0; d];
    if !s.is_small(&zero) {
        return Err(ValidationError::ZeroMissing);
    }
    let pts: Vec<&[u32]> = s.small().collect();
    let mut buf = vec![0; d];

    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            for k in 0..d {
                buf[k] = a[k].min(b[k]);
            }
            if !s.is_small(&buf) {
                return Err(ValidationError::G1 {
                    a: a.to_vec(),
                    b: b.to_vec(),
                    min: buf.clone(),
                });
            }
        }
    }

    if !s.is_small(&s.conductor) {
        return Err(ValidationError::ConductorMissing {
            conductor: s.conductor.clone(),
        });
    }

    if let Some(p) = pts
        .iter()
        .find(|p| p.iter().any(|&v| v == 0) && p.iter().any(|&v| v != 0))
    {
        return Err(ValidationError::Locality { point: p.to_vec() });
    }

    let c = &s.conductor;
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i..] {
            for k in 0..d {
                buf[k] = (a[k] + b[k]).min(c[k]);
            }
            if !s.is_small(&buf) {
                return Err(ValidationError::Additive {
                    a: a.to_vec(),
                    b: b.to_vec(),
                    sum: buf.clone(),
                });
            }
        }
    }

    // Coordinate escape, checked on small elements only: a shared value at
    // or above the conductor, or an equality demand at a capped coordinate,
    // is always met inside the conductor cone.
    for (ia, a) in pts.iter().enumerate() {
        for b in &pts[ia + 1..] {
            for axis in 0..d {
                if a[axis] != b[axis] || a[axis] >= c[axis] {
                    continue;
                }
                let escapes = pts.iter().any(|s| {
                    s[axis] > a[axis]
                        && (0..d).filter(|&j| j != axis).all(|j| {
                            if a[j] != b[j] {
                                s[j] == a[j].min(b[j])
                            } else {
                                s[j] >= a[j]
                            }
                        })
                });
                if !escapes {
                    return Err(ValidationError::G3 {
                        a: a.to_vec(),
                        b: b.to_vec(),
                        axis,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Shrinks the conductor to the least `δ` with `δ + ℕ^d ⊆ S`.
fn canonicalize(s: GoodSemigroup) -> std::result::Result<GoodSemigroup, ValidationError> {
    let c = s.conductor.clone();
    let mut candidates: Vec<&[u32]> = s.small().collect();
    candidates.sort_by_key(|p| (p.iter().map(|&v| v as u64).sum::<u64>(), p.to_vec()));
    let true_c = candidates
        .into_iter()
        .find(|delta| walk_box(delta, &c, |p| s.is_small(p)))
        .map(|p| p.to_vec())
        .unwrap_or_else(|| c.clone());
    if true_c == c {
        return Ok(s);
    }
    let d = s.dim;
    let mut flat = Vec::new();
    for p in s.small() {
        if leq(p, &true_c) {
            flat.extend_from_slice(p);
        }
    }
    let t = GoodSemigroup::from_sorted_unchecked(d, flat);
    let mut bad = None;
    walk_box(&vec![0; d], &c, |p| {
        if s.is_small(p) != t.contains_unchecked(p) {
            bad = Some(p.to_vec());
            false
        } else {
            true
        }
    });
    match bad {
        Some(point) => Err(ValidationError::Saturation { point }),
        None => Ok(t),
    }
}

/// `α ∈ S`.
pub fn membership(s: &GoodSemigroup, alpha: &[u32]) -> Result<bool> {
    s.contains(alpha)
}

/// The finite part of the projection `S_i^{∞(U_i)}` (axis `i` is 0-based):
/// values below `c_i` reached by small elements that sit at the conductor
/// on every earlier axis. Everything from `c_i` on is implicitly present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Projection {
    pub axis: usize,
    pub below: Vec<u32>,
    pub conductor: u32,
}

impl Projection {
    /// `l_S` of this projection.
    pub fn length(&self) -> u64 {
        self.below.len() as u64
    }

    /// `g_S` of this projection.
    pub fn genus(&self) -> u64 {
        self.conductor as u64 - self.below.len() as u64
    }
}

pub fn infinity_projection(s: &GoodSemigroup, axis: usize) -> Result<Projection> {
    if axis >= s.dim {
        return Err(Error::Unsupported(format!(
            "axis {} out of range for dimension {}",
            axis + 1,
            s.dim
        )));
    }
    let c = &s.conductor;
    let mut below: Vec<u32> = s
        .small()
        .filter(|p| p[..axis] == c[..axis] && p[axis] < c[axis])
        .map(|p| p[axis])
        .collect();
    below.sort_unstable();
    below.dedup();
    Ok(Projection {
        axis,
        below,
        conductor: c[axis],
    })
}

/// `Δ^S(α) ≠ ∅` for a small element `α`.
pub(crate) fn has_delta(s: &GoodSemigroup, a: &[u32]) -> bool {
    let d = s.dim;
    s.small().any(|p| {
        (0..d).any(|i| p[i] == a[i] && (0..d).all(|j| j == i || p[j] > a[j]))
    })
}

/// `A_f(S)`: finite maximals, computed on small elements strictly below the
/// conductor (anything reaching the conductor on some axis has a nonempty
/// `Δ`, since the cone above it lies in `S`).
pub fn finite_maximals(s: &GoodSemigroup) -> Vec<Point> {
    let c = &s.conductor;
    s.small()
        .filter(|p| p.iter().zip(c).all(|(a, b)| a < b))
        .filter(|p| !has_delta(s, p))
        .map(|p| Point::new(p.to_vec()))
        .collect()
}

/// Infinite maximals `(x,∞)` and `(∞,y)` of a planar semigroup, clipped:
/// coordinates run up to `c_i`, and `c_i + 1` stands for every larger value.
pub fn infinite_maximals(s: &GoodSemigroup) -> Result<Vec<Point2>> {
    s.require_planar()?;
    let (c1, c2) = s.c2();
    let mut out = Vec::new();
    for x in 0..=c1 + 1 {
        if s.contains_unchecked(&[x, c2]) && !(x == 0 && c2 > 0) {
            out.push(Point2::new(x, INF));
        }
    }
    for y in 0..=c2 + 1 {
        if s.contains_unchecked(&[c1, y]) && !(y == 0 && c1 > 0) {
            out.push(Point2::new(INF, y));
        }
    }
    Ok(out)
}

/// Clipped `Δ_i^S(α)` and `ᵢΔ^S(α)` for every axis `i`. A coordinate equal to
/// `c_j + 1` stands for "some value above `c_j`"; infinite coordinates of `α`
/// follow the extended definitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaSets {
    pub upper: Vec<Vec<Point>>,
    pub lower: Vec<Vec<Point>>,
}

impl DeltaSets {
    /// `Δ^S(α) = ∅`.
    pub fn upper_empty(&self) -> bool {
        self.upper.iter().all(Vec::is_empty)
    }
}

enum Rel {
    Eq,
    Gt,
    Lt,
}

fn coord_classes(a: u32, c: u32, rel: Rel) -> Vec<u32> {
    let k = c + 1;
    match rel {
        Rel::Eq if a == INF => vec![],
        Rel::Eq if a <= c => vec![a],
        Rel::Eq => vec![k],
        Rel::Gt if a == INF => vec![],
        Rel::Gt => {
            let mut v: Vec<u32> = (a.saturating_add(1)..=c).collect();
            v.push(k);
            v
        }
        Rel::Lt => {
            let mut v: Vec<u32> = (0..a.min(k)).collect();
            if a > k {
                v.push(k);
            }
            v
        }
    }
}

pub fn delta_sets(s: &GoodSemigroup, alpha: &[u32]) -> Result<DeltaSets> {
    let d = s.dim;
    if alpha.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: alpha.len(),
        });
    }
    if d != 2 && alpha.contains(&INF) {
        return Err(Error::NotPlanar(d));
    }
    let c = &s.conductor;
    let collect = |i: usize, upper: bool| -> Vec<Point> {
        let classes: Vec<Vec<u32>> = (0..d)
            .map(|j| {
                let rel = if j == i {
                    Rel::Eq
                } else if upper {
                    Rel::Gt
                } else {
                    Rel::Lt
                };
                coord_classes(alpha[j], c[j], rel)
            })
            .collect();
        let mut out = Vec::new();
        if classes.iter().any(Vec::is_empty) {
            return out;
        }
        let mut idx = vec![0usize; d];
        loop {
            let p: Vec<u32> = (0..d).map(|j| classes[j][idx[j]]).collect();
            if s.contains_unchecked(&p) {
                out.push(Point::new(p));
            }
            let mut k = d;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < classes[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    };
    Ok(DeltaSets {
        upper: (0..d).map(|i| collect(i, true)).collect(),
        lower: (0..d).map(|i| collect(i, false)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(text: &str) -> GoodSemigroup {
        parse_semigroup(text).unwrap()
    }

    #[test]
    fn parses_unit_box_and_whole_plane() {
        let s = sg("0 0\n1 1");
        assert_eq!(s.conductor(), &[1, 1]);
        assert_eq!(s, GoodSemigroup::unit_box(2));
        let n = sg("0 0");
        assert!(n.is_whole_space());
        assert!(n.warning().is_some());
        assert_eq!(n.conductor(), &[0, 0]);
    }

    #[test]
    fn g1_witness() {
        let e = parse_semigroup("0 0\n1 2\n2 1").unwrap_err();
        match e {
            Error::Invalid(ValidationError::G1 { min, .. }) => assert_eq!(min, vec![1, 1]),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn locality_witness() {
        let e = validate(vec![vec![0, 0], vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(e, ValidationError::Locality { point: vec![0, 1] });
    }

    #[test]
    fn accepts_tree_member() {
        let s = validate(vec![
            vec![0, 0],
            vec![1, 2],
            vec![1, 3],
            vec![2, 2],
            vec![2, 4],
        ])
        .unwrap();
        assert_eq!(s.conductor(), &[2, 4]);
    }

    #[test]
    fn other_axiom_errors() {
        assert_eq!(validate(vec![]).unwrap_err(), ValidationError::Empty);
        assert_eq!(
            validate(vec![vec![1, 1]]).unwrap_err(),
            ValidationError::ZeroMissing
        );
        assert!(matches!(
            validate(vec![vec![0, 0], vec![1, 2], vec![1, 1], vec![2, 1]]).unwrap_err(),
            ValidationError::ConductorMissing { .. }
        ));
        // (1,1)+(1,1) = (2,2) clipped to c = (3,3) is missing
        assert!(matches!(
            validate(vec![vec![0, 0], vec![1, 1], vec![3, 3]]).unwrap_err(),
            ValidationError::Additive { .. }
        ));
        // (2,1) and (2,2) share x = 2 < 3; no element escapes above x = 2 at y = 1
        let e = validate(vec![vec![0, 0], vec![2, 1], vec![2, 2], vec![3, 2]]).unwrap_err();
        assert_eq!(e.code(), "g3");
        assert!(matches!(
            validate(vec![vec![0, 0], vec![1]]).unwrap_err(),
            ValidationError::Dimension { .. }
        ));
    }

    #[test]
    fn shrinks_an_oversized_box() {
        let s = validate(vec![
            vec![0, 0],
            vec![1, 1],
            vec![1, 2],
            vec![2, 1],
            vec![2, 2],
        ])
        .unwrap();
        assert_eq!(s, GoodSemigroup::unit_box(2));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        match parse_semigroup("# header\n0 0\n\n1 x").unwrap_err() {
            Error::Syntax { line, .. } => assert_eq!(line, 4),
            other => panic!("unexpected {other}"),
        }
        match parse_semigroup("0 0\n1 1 1").unwrap_err() {
            Error::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn json_input_matches_text() {
        let a = sg(r#"{"small": [[1,2],[0,0]]}"#);
        let b = sg("0 0\n1 2\n");
        assert_eq!(a, b);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"small":[[0,0],[1,2]]}"#);
    }

    #[test]
    fn membership_examples() {
        let s1 = sg("0 0\n1 2");
        assert!(membership(&s1, &[5, 7]).unwrap());
        assert!(!membership(&s1, &[1, 1]).unwrap());
        assert!(membership(&s1, &[1, 9]).unwrap());
        assert!(membership(&s1, &[1, 2, 3]).is_err());
    }

    #[test]
    fn line_round_trip() {
        let s = sg("0 0\n1 2\n1 3\n2 2\n2 4");
        let line = s.to_line();
        assert_eq!(line, "0,0 1,2 1,3 2,2 2,4");
        assert_eq!(GoodSemigroup::from_line(&line).unwrap(), s);
        assert!(GoodSemigroup::from_line("1,2 0,0").is_err());
    }

    #[test]
    fn maximals_small_cases() {
        let s1 = sg("0 0\n1 2");
        assert_eq!(finite_maximals(&s1), vec![Point::zero(2)]);
        assert_eq!(finite_maximals(&GoodSemigroup::unit_box(2)), vec![Point::zero(2)]);
        let s3 = sg("0 0\n1 1\n2 2");
        assert_eq!(
            finite_maximals(&s3),
            vec![Point::zero(2), Point::new(vec![1, 1])]
        );
        assert!(finite_maximals(&GoodSemigroup::whole_space(2)).is_empty());

        let inf = infinite_maximals(&s1).unwrap();
        assert_eq!(
            inf,
            vec![
                Point2::new(1, INF),
                Point2::new(2, INF),
                Point2::new(INF, 2),
                Point2::new(INF, 3)
            ]
        );
    }

    #[test]
    fn delta_examples() {
        let u = GoodSemigroup::unit_box(2);
        assert!(delta_sets(&u, &[0, 0]).unwrap().upper_empty());
        let s3 = sg("0 0\n1 1\n2 2");
        assert!(delta_sets(&s3, &[1, 1]).unwrap().upper_empty());
        let d = delta_sets(&u, &[1, INF]).unwrap();
        assert_eq!(
            d.lower[0],
            vec![Point::new(vec![1, 1]), Point::new(vec![1, 2])]
        );
        assert!(d.lower[1].is_empty());
        assert!(d.upper_empty());
    }
}
