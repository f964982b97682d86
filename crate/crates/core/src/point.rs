//! Points of the extended lattice, with `u32::MAX` standing in for infinity.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Sentinel coordinate for the point at infinity of an axis.
pub const INF: u32 = u32::MAX;

/// `a < b` on extended naturals, with `∞ < ∞` treated as satisfied.
///
/// This is the per-coordinate test behind the extended strict order `≪`:
/// unbounded rows and columns behave like limits that can always be
/// increased further.
#[inline]
pub fn ext_lt(a: u32, b: u32) -> bool {
    a < b || (a == INF && b == INF)
}

/// Sum on extended naturals (`n + ∞ = ∞`).
#[inline]
pub fn ext_add(a: u32, b: u32) -> u32 {
    if a == INF || b == INF {
        INF
    } else {
        a.checked_add(b).filter(|&s| s != INF).unwrap_or(INF)
    }
}

fn fmt_coord(f: &mut fmt::Formatter<'_>, v: u32) -> fmt::Result {
    if v == INF {
        f.write_str("inf")
    } else {
        write!(f, "{v}")
    }
}

fn serialize_coord<S: SerializeSeq>(seq: &mut S, v: u32) -> Result<(), S::Error> {
    if v == INF {
        seq.serialize_element("inf")
    } else {
        seq.serialize_element(&v)
    }
}

/// A point of `ℕ̄^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Point(Vec<u32>);

impl Point {
    pub fn new(coords: Vec<u32>) -> Self {
        Point(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Point(vec![0; dim])
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|&v| v != INF)
    }

    /// Componentwise `≤`.
    pub fn le(&self, other: &Point) -> bool {
        leq(&self.0, &other.0)
    }

    /// Extended strict order `≪`.
    pub fn ll(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| ext_lt(a, b))
    }

    /// `⊕`: componentwise minimum.
    pub fn meet(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    /// `⊙`: componentwise sum, absorbing at infinity.
    pub fn add(&self, other: &Point) -> Point {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| ext_add(a, b))
                .collect(),
        )
    }
}

impl From<Vec<u32>> for Point {
    fn from(v: Vec<u32>) -> Self {
        Point(v)
    }
}

impl From<Point2> for Point {
    fn from(p: Point2) -> Self {
        Point(vec![p.x, p.y])
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            fmt_coord(f, v)?;
        }
        f.write_str(")")
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for &v in &self.0 {
            serialize_coord(&mut seq, v)?;
        }
        seq.end()
    }
}

/// Componentwise `≤` on coordinate slices of equal length.
#[inline]
pub fn leq(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Renders a coordinate slice as `(a,b,…)`.
pub fn show(coords: &[u32]) -> String {
    Point(coords.to_vec()).to_string()
}

/// A point of `ℕ̄²`. Ordered by first coordinate, then second, so points
/// of the form `(∞, y)` sort after every finite first coordinate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Point2 {
    pub x: u32,
    pub y: u32,
}

impl Point2 {
    pub const ZERO: Point2 = Point2 { x: 0, y: 0 };

    #[inline]
    pub const fn new(x: u32, y: u32) -> Self {
        Point2 { x, y }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x != INF && self.y != INF
    }

    #[inline]
    pub fn le(self, o: Point2) -> bool {
        self.x <= o.x && self.y <= o.y
    }

    /// Both `self ≤ other` and `self ≠ other`.
    #[inline]
    pub fn lt(self, o: Point2) -> bool {
        self.le(o) && self != o
    }

    #[inline]
    pub fn ll(self, o: Point2) -> bool {
        ext_lt(self.x, o.x) && ext_lt(self.y, o.y)
    }

    #[inline]
    pub fn comparable(self, o: Point2) -> bool {
        self.le(o) || o.le(self)
    }

    #[inline]
    pub fn meet(self, o: Point2) -> Point2 {
        Point2::new(self.x.min(o.x), self.y.min(o.y))
    }

    #[inline]
    pub fn add(self, o: Point2) -> Point2 {
        Point2::new(ext_add(self.x, o.x), ext_add(self.y, o.y))
    }
}

impl PartialOrd for Point2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Point2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.x, self.y).cmp(&(other.x, other.y))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        fmt_coord(f, self.x)?;
        f.write_str(",")?;
        fmt_coord(f, self.y)?;
        f.write_str(")")
    }
}

impl Serialize for Point2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        serialize_coord(&mut seq, self.x)?;
        serialize_coord(&mut seq, self.y)?;
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extended_strict_order() {
        let a = Point2::new(1, INF);
        let b = Point2::new(2, INF);
        assert!(a.ll(b));
        assert!(!b.ll(a));
        assert!(!a.ll(a));
        assert!(Point2::new(0, 3).ll(Point2::new(1, INF)));
        assert!(!Point2::new(1, 3).ll(Point2::new(1, INF)));
    }

    #[test]
    fn semiring_ops_absorb_infinity() {
        let a = Point2::new(1, INF);
        let b = Point2::new(INF, 1);
        assert_eq!(a.meet(b), Point2::new(1, 1));
        assert_eq!(a.add(b), Point2::new(INF, INF));
        assert_eq!(ext_add(u32::MAX - 1, 5), INF);
    }

    #[test]
    fn display_and_json() {
        let p = Point2::new(4, INF);
        assert_eq!(p.to_string(), "(4,inf)");
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"[4,"inf"]"#);
        assert_eq!(Point::new(vec![1, 2, 3]).to_string(), "(1,2,3)");
    }

    #[test]
    fn ordering_puts_infinite_first_coordinate_last() {
        let mut v = vec![
            Point2::new(INF, 2),
            Point2::new(3, INF),
            Point2::new(1, 5),
            Point2::new(INF, 1),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Point2::new(1, 5),
                Point2::new(3, INF),
                Point2::new(INF, 1),
                Point2::new(INF, 2)
            ]
        );
    }
}
