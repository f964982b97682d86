//! Tracks of planar semigroups: recognition, removal and special parents.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::genus;
use crate::plane::Plane;
use crate::point::{Point2, INF};
use crate::semigroup::{validate, GoodSemigroup};

/// A track, identified by its anchors. The swept set is derived data over
/// the box `[0, c+e]`, where a coordinate equal to `c_i + e_i` stands for
/// every value from there on.
#[derive(Clone, Debug, Eq)]
pub struct Track {
    anchors: Vec<Point2>,
    swept: Vec<Point2>,
}

impl PartialEq for Track {
    fn eq(&self, other: &Self) -> bool {
        self.anchors == other.anchors
    }
}

impl std::hash::Hash for Track {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.anchors.hash(state)
    }
}

impl Track {
    pub fn anchors(&self) -> &[Point2] {
        &self.anchors
    }

    pub fn swept(&self) -> &[Point2] {
        &self.swept
    }

    pub fn start(&self) -> Point2 {
        self.anchors[0]
    }

    pub fn end(&self) -> Point2 {
        *self.anchors.last().unwrap()
    }
}

impl fmt::Display for Track {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("T(")?;
        for (i, a) in self.anchors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Track {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc<'a> {
            anchors: &'a [Point2],
        }
        Doc {
            anchors: &self.anchors,
        }
        .serialize(s)
    }
}

/// Marked points over `[0, b1] × [0, b2]`; the last row and column are tails.
pub(crate) struct Mask {
    b1: u32,
    b2: u32,
    bits: Vec<bool>,
}

impl Mask {
    fn new(b1: u32, b2: u32) -> Self {
        Mask {
            b1,
            b2,
            bits: vec![false; (b1 as usize + 1) * (b2 as usize + 1)],
        }
    }

    #[inline]
    fn idx(&self, x: u32, y: u32) -> usize {
        x as usize * (self.b2 as usize + 1) + y as usize
    }

    #[inline]
    fn get(&self, x: u32, y: u32) -> bool {
        self.bits[self.idx(x, y)]
    }

    #[inline]
    fn set(&mut self, x: u32, y: u32) {
        let i = self.idx(x, y);
        self.bits[i] = true;
    }

    fn points(&self) -> Vec<Point2> {
        let mut out = Vec::new();
        for x in 0..=self.b1 {
            for y in 0..=self.b2 {
                if self.get(x, y) {
                    out.push(Point2::new(x, y));
                }
            }
        }
        out
    }
}

/// Everything needed to list and remove the tracks of one semigroup.
pub(crate) struct TrackContext {
    plane: Plane,
    ia: Vec<Point2>,
}

pub(crate) struct Candidate {
    pub anchors: Vec<Point2>,
    pub mask: Mask,
    pub beyond: bool,
}

impl TrackContext {
    pub fn new(s: &GoodSemigroup) -> Result<Self> {
        let plane = Plane::new(s)?;
        let ia = plane.irreducible_maximals(s);
        Ok(TrackContext { plane, ia })
    }

    fn column_irreducible(&self, x: u32, from: u32, to: u32) -> bool {
        (from..=to).all(|y| !self.plane.mem(x, y) || self.plane.irreducible(x, y))
    }

    fn row_irreducible(&self, y: u32, from: u32, to: u32) -> bool {
        (from..=to).all(|x| !self.plane.mem(x, y) || self.plane.irreducible(x, y))
    }

    /// `Δ^S(α ⊕ β) ⊆ I(S)` for `α` before `β` in anchor order.
    pub fn piece(&self, a: Point2, b: Point2) -> bool {
        if !(a.x < b.x && a.y > b.y) {
            return false;
        }
        let (gx, gy) = (a.x, b.y);
        let (r1, r2) = (2 * self.plane.c1, 2 * self.plane.c2);
        self.column_irreducible(gx, gy + 1, r2.max(gy + 1))
            && self.row_irreducible(gy, gx + 1, r1.max(gx + 1))
    }

    /// `₂Δ^S(α) ⊆ I(S)`.
    fn start_ok(&self, a: Point2) -> bool {
        if a.y == INF {
            true
        } else if a.x == INF {
            self.row_irreducible(a.y, 0, 2 * self.plane.c1)
        } else {
            a.x == 0 || self.row_irreducible(a.y, 0, a.x - 1)
        }
    }

    /// `₁Δ^S(α) ⊆ I(S)`.
    fn end_ok(&self, a: Point2) -> bool {
        if a.x == INF {
            true
        } else if a.y == INF {
            self.column_irreducible(a.x, 0, 2 * self.plane.c2)
        } else {
            a.y == 0 || self.column_irreducible(a.x, 0, a.y - 1)
        }
    }

    /// All anchor sequences forming tracks, in lexicographic order.
    pub fn anchor_lists(&self) -> Vec<Vec<Point2>> {
        let n = self.ia.len();
        let succ: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                (i + 1..n)
                    .filter(|&j| self.piece(self.ia[i], self.ia[j]))
                    .collect()
            })
            .collect();
        let ends: Vec<bool> = self.ia.iter().map(|&a| self.end_ok(a)).collect();
        let mut out = Vec::new();
        let mut path = Vec::new();
        for i in 0..n {
            if self.start_ok(self.ia[i]) {
                path.push(i);
                self.walk(&succ, &ends, &mut path, &mut out);
                path.pop();
            }
        }
        out
    }

    fn walk(
        &self,
        succ: &[Vec<usize>],
        ends: &[bool],
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<Point2>>,
    ) {
        let last = *path.last().unwrap();
        if ends[last] {
            out.push(path.iter().map(|&k| self.ia[k]).collect());
        }
        for &j in &succ[last] {
            path.push(j);
            self.walk(succ, ends, path, out);
            path.pop();
        }
    }

    fn box_bounds(&self) -> (u32, u32) {
        (self.plane.c1 + self.plane.e1, self.plane.c2 + self.plane.e2)
    }

    /// The swept set of an anchor list on the `[0, c+e]` grid.
    pub fn mask(&self, anchors: &[Point2]) -> Mask {
        let (b1, b2) = self.box_bounds();
        let p = &self.plane;
        let mut m = Mask::new(b1, b2);
        let column = |m: &mut Mask, x: u32, from: u32, to: u32| {
            for y in from..=to.min(b2) {
                if p.mem(x, y) {
                    m.set(x, y);
                }
            }
        };
        for a in anchors.iter().filter(|a| a.is_finite()) {
            m.set(a.x, a.y);
        }
        let first = anchors[0];
        if first.x == INF {
            for x in 0..=b1 {
                if p.mem(x, first.y) {
                    m.set(x, first.y);
                }
            }
        } else if first.y != INF {
            for x in 0..first.x {
                if p.mem(x, first.y) {
                    m.set(x, first.y);
                }
            }
        }
        for w in anchors.windows(2) {
            let (gx, gy) = (w[0].x, w[1].y);
            column(&mut m, gx, gy + 1, b2);
            for x in gx + 1..=b1 {
                if p.mem(x, gy) {
                    m.set(x, gy);
                }
            }
        }
        let last = *anchors.last().unwrap();
        if last.y == INF {
            column(&mut m, last.x, 0, b2);
        } else if last.x != INF && last.y > 0 {
            column(&mut m, last.x, 0, last.y - 1);
        }
        m
    }

    pub fn candidates(&self) -> Vec<Candidate> {
        let (c1, c2) = (self.plane.c1, self.plane.c2);
        self.anchor_lists()
            .into_iter()
            .map(|anchors| {
                let mask = self.mask(&anchors);
                let beyond =
                    (c1..=mask.b1).any(|x| (c2..=mask.b2).any(|y| mask.get(x, y)));
                Candidate {
                    anchors,
                    mask,
                    beyond,
                }
            })
            .collect()
    }

    pub fn is_favored(&self, c: &Candidate) -> bool {
        let c2 = self.plane.c2;
        if !c.beyond {
            return false;
        }
        if c2 == 1 {
            return true;
        }
        let end = *c.anchors.last().unwrap();
        end.x == INF && end.y >= c2
    }

    pub fn to_track(&self, c: &Candidate) -> Track {
        Track {
            anchors: c.anchors.clone(),
            swept: c.mask.points(),
        }
    }

    /// `S ∖ T`, read off the grid.
    pub fn remove(&self, mask: &Mask) -> Result<GoodSemigroup> {
        let (b1, b2) = (mask.b1, mask.b2);
        let grid: Vec<bool> = (0..=b1)
            .flat_map(|x| (0..=b2).map(move |y| (x, y)))
            .map(|(x, y)| self.plane.mem(x, y) && !mask.get(x, y))
            .collect();
        semigroup_from_grid(b1, b2, &grid)
    }
}

/// Reads a semigroup from a membership grid over `[0, b1] × [0, b2]`
/// whose last row and column stand for everything beyond.
pub(crate) fn semigroup_from_grid(b1: u32, b2: u32, grid: &[bool]) -> Result<GoodSemigroup> {
    let (w, h) = (b1 as usize + 1, b2 as usize + 1);
    let at = |x: usize, y: usize| grid[x * h + y];
    // good[x][y]: every grid point at or above (x, y) is a member
    let mut good = vec![false; w * h];
    for x in (0..w).rev() {
        for y in (0..h).rev() {
            let right = x + 1 >= w || good[(x + 1) * h + y];
            let up = y + 1 >= h || good[x * h + y + 1];
            good[x * h + y] = at(x, y) && right && up;
        }
    }
    let c1 = (0..w).find(|&x| good[x * h + h - 1]);
    let c2 = (0..h).find(|&y| good[(w - 1) * h + y]);
    let (c1, c2) = match (c1, c2) {
        (Some(a), Some(b)) if good[a * h + b] => (a, b),
        _ => {
            return Err(Error::Internal(
                "membership grid has no conductor".into(),
            ))
        }
    };
    let mut small = Vec::new();
    for x in 0..=c1 {
        for y in 0..=c2 {
            if at(x, y) {
                small.push(x as u32);
                small.push(y as u32);
            }
        }
    }
    Ok(GoodSemigroup::from_sorted_unchecked(2, small))
}

/// `I(S)`: the irreducible elements of `Γ_S`, clipped. Finite points cover
/// `[0, 2c₁+1] × [0, 2c₂+1]`, where `2c_i + 1` stands for every larger value
/// (reducibility is constant there); infinite ones list `(x,∞)` and `(∞,y)`
/// below `c + e`, past which nothing is irreducible.
pub fn irreducibles(s: &GoodSemigroup) -> Result<Vec<Point2>> {
    let p = Plane::new(s)?;
    let (c1, c2) = (p.c1, p.c2);
    let mut out = Vec::new();
    for x in 1..=2 * c1 + 1 {
        for y in 1..=2 * c2 + 1 {
            if p.irreducible(x, y) {
                out.push(Point2::new(x, y));
            }
        }
    }
    for x in 1..c1 + p.e1 {
        if p.col_inf_irreducible(x) {
            out.push(Point2::new(x, INF));
        }
    }
    for y in 1..c2 + p.e2 {
        if p.row_inf_irreducible(y) {
            out.push(Point2::new(INF, y));
        }
    }
    Ok(out)
}

/// `I_A(S)` in anchor order.
pub fn irreducible_maximals(s: &GoodSemigroup) -> Result<Vec<Point2>> {
    Ok(TrackContext::new(s)?.ia)
}

/// Def. of a piece of track: `α`, `β` incomparable irreducible maximals and
/// every `S`-point of `Δ(α ⊕ β)` irreducible. Order of arguments is free.
pub fn piece_of_track(s: &GoodSemigroup, a: Point2, b: Point2) -> Result<bool> {
    let ctx = TrackContext::new(s)?;
    for p in [a, b] {
        if !ctx.ia.contains(&p) {
            return Err(Error::NotIrreducibleMaximal(p.to_string()));
        }
    }
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    Ok(ctx.piece(a, b))
}

pub fn tracks(s: &GoodSemigroup) -> Result<Vec<Track>> {
    let ctx = TrackContext::new(s)?;
    Ok(ctx.candidates().iter().map(|c| ctx.to_track(c)).collect())
}

pub fn beyond_tracks(s: &GoodSemigroup) -> Result<Vec<Track>> {
    let ctx = TrackContext::new(s)?;
    Ok(ctx
        .candidates()
        .iter()
        .filter(|c| c.beyond)
        .map(|c| ctx.to_track(c))
        .collect())
}

pub fn favored_tracks(s: &GoodSemigroup) -> Result<Vec<Track>> {
    let ctx = TrackContext::new(s)?;
    Ok(ctx
        .candidates()
        .iter()
        .filter(|c| ctx.is_favored(c))
        .map(|c| ctx.to_track(c))
        .collect())
}

/// `S ∖ T` for a track `T` of `S`; the result is re-validated.
pub fn remove_track(s: &GoodSemigroup, t: &Track) -> Result<GoodSemigroup> {
    let ctx = TrackContext::new(s)?;
    if !ctx.anchor_lists().iter().any(|a| a == &t.anchors) {
        return Err(Error::NotATrack(t.to_string()));
    }
    let child = ctx.remove(&ctx.mask(&t.anchors))?;
    revalidate(child)
}

fn revalidate(s: GoodSemigroup) -> Result<GoodSemigroup> {
    let points: Vec<Vec<u32>> = s.small().map(|p| p.to_vec()).collect();
    match validate(points) {
        Ok(v) if v == s => Ok(v),
        Ok(v) => Err(Error::Internal(format!("{s} is not canonical, expected {v}"))),
        Err(e) => Err(Error::Internal(format!("{s} is not a good semigroup: {e}"))),
    }
}

/// Children of `S` along its favored tracks, in track order.
pub fn favored_children(s: &GoodSemigroup) -> Result<Vec<GoodSemigroup>> {
    let ctx = TrackContext::new(s)?;
    let mut out = Vec::new();
    for c in ctx.candidates().iter().filter(|c| ctx.is_favored(c)) {
        let child = ctx.remove(&c.mask)?;
        debug_assert!(revalidate(child.clone()).is_ok());
        out.push(child);
    }
    Ok(out)
}

/// Number of favored tracks, without building the children.
pub fn favored_count(s: &GoodSemigroup) -> Result<usize> {
    let ctx = TrackContext::new(s)?;
    Ok(ctx.candidates().iter().filter(|c| ctx.is_favored(c)).count())
}

/// Children of `S` along all beyond tracks, duplicates kept.
pub fn beyond_children(s: &GoodSemigroup) -> Result<Vec<GoodSemigroup>> {
    let ctx = TrackContext::new(s)?;
    ctx.candidates()
        .iter()
        .filter(|c| c.beyond)
        .map(|c| ctx.remove(&c.mask))
        .collect()
}

/// The special parents of `S'` with the tracks leading back to `S'`.
pub fn special_parents(s: &GoodSemigroup) -> Result<Vec<(GoodSemigroup, Track)>> {
    s.require_planar()?;
    if s.is_whole_space() || *s == GoodSemigroup::unit_box(2) {
        return Err(Error::Unsupported(format!("{s} has no special parent")));
    }
    let (c1, c2) = s.c2();
    let (f1, f2) = (c1 - 1, c2 - 1);
    let h = c2 as usize + 1;
    let base: Vec<bool> = (0..=c1)
        .flat_map(|x| (0..=c2).map(move |y| (x, y)))
        .map(|(x, y)| s.contains_unchecked(&[x, y]))
        .collect();
    let mem = |x: u32, y: u32| base[x as usize * h + y as usize];

    let mut built: Vec<(Vec<(u32, u32)>, Vec<Point2>)> = Vec::new();
    if mem(f1, f2) {
        built.push((
            vec![(f1, c2), (c1, f2)],
            vec![Point2::new(f1, INF), Point2::new(INF, f2)],
        ));
    } else {
        if f1 != 0 {
            let y_max = (0..c2).filter(|&y| mem(f1, y)).max();
            let mut add = vec![(f1, c2)];
            add.extend((0..=f2).filter(|&y| mem(c1, y)).map(|y| (f1, y)));
            let anchors = match y_max {
                Some(y) => {
                    add.push((c1, y));
                    vec![Point2::new(f1, INF), Point2::new(INF, y)]
                }
                None => vec![Point2::new(f1, INF)],
            };
            built.push((add, anchors));
        }
        if f2 != 0 {
            let x_max = (0..c1).filter(|&x| mem(x, f2)).max();
            let mut add = vec![(c1, f2)];
            add.extend((0..=f1).filter(|&x| mem(x, c2)).map(|x| (x, f2)));
            let anchors = match x_max {
                Some(x) => {
                    add.push((x, c2));
                    vec![Point2::new(x, INF), Point2::new(INF, f2)]
                }
                None => vec![Point2::new(INF, f2)],
            };
            built.push((add, anchors));
        }
    }

    let g = genus(s);
    let mut out = Vec::new();
    for (add, anchors) in built {
        let mut grid = base.clone();
        for (x, y) in add {
            grid[x as usize * h + y as usize] = true;
        }
        let parent = revalidate(semigroup_from_grid(c1, c2, &grid)?)?;
        let ctx = TrackContext::new(&parent)?;
        let cand = ctx
            .candidates()
            .into_iter()
            .find(|c| c.anchors == anchors)
            .ok_or_else(|| {
                Error::Internal(format!(
                    "constructed anchors are not a track of parent {parent}"
                ))
            })?;
        let track = ctx.to_track(&cand);
        let back = ctx.remove(&cand.mask)?;
        if back != *s || genus(&parent) + 1 != g || !cand.beyond {
            return Err(Error::Internal(format!(
                "special parent {parent} via {track} does not lead back to {s}"
            )));
        }
        out.push((parent, track));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::parse_semigroup;

    fn sg(points: &[(u32, u32)]) -> GoodSemigroup {
        validate(points.iter().map(|&(x, y)| vec![x, y]).collect()).unwrap()
    }

    fn names(ts: &[Track]) -> Vec<String> {
        ts.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn unit_box_tracks() {
        let u = GoodSemigroup::unit_box(2);
        let ts = tracks(&u).unwrap();
        assert_eq!(
            names(&ts),
            vec!["T((1,inf))", "T((1,inf),(inf,1))", "T((inf,1))"]
        );
        assert_eq!(beyond_tracks(&u).unwrap().len(), 3);
        assert_eq!(favored_tracks(&u).unwrap().len(), 3);
        let children: Vec<GoodSemigroup> =
            ts.iter().map(|t| remove_track(&u, t).unwrap()).collect();
        assert!(children.contains(&sg(&[(0, 0), (1, 1), (2, 2)])));
        assert!(children.contains(&sg(&[(0, 0), (1, 2)])));
        assert!(children.contains(&sg(&[(0, 0), (2, 1)])));
    }

    #[test]
    fn s1_tracks() {
        let s1 = sg(&[(0, 0), (1, 2)]);
        let bt = beyond_tracks(&s1).unwrap();
        assert_eq!(bt.len(), 5);
        assert!(names(&bt).contains(&"T((1,inf),(inf,2))".to_string()));
        assert!(names(&bt).contains(&"T((inf,3))".to_string()));
        let fav = favored_tracks(&s1).unwrap();
        assert_eq!(fav.len(), 4);
        assert!(!names(&fav).contains(&"T((1,inf))".to_string()));
        assert!(piece_of_track(&s1, Point2::new(1, INF), Point2::new(INF, 2)).unwrap());
    }

    #[test]
    fn paper_track_counts() {
        assert_eq!(beyond_tracks(&sg(&[(0, 0), (2, 2)])).unwrap().len(), 8);
        assert_eq!(beyond_tracks(&sg(&[(0, 0), (3, 1)])).unwrap().len(), 7);
        assert_eq!(favored_tracks(&sg(&[(0, 0), (2, 1)])).unwrap().len(), 5);
        let s12 = sg(&[(0, 0), (1, 2), (1, 3), (2, 2), (2, 4)]);
        assert!(beyond_tracks(&s12).unwrap().is_empty());
    }

    #[test]
    fn s3_single_beyond_track() {
        let s3 = sg(&[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(tracks(&s3).unwrap().len(), 2);
        let ts = beyond_tracks(&s3).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(
            remove_track(&s3, &ts[0]).unwrap(),
            sg(&[(0, 0), (1, 1), (2, 2), (3, 3)])
        );
    }

    #[test]
    fn rejects_foreign_track() {
        let u = GoodSemigroup::unit_box(2);
        let s1 = sg(&[(0, 0), (1, 2)]);
        let t = tracks(&s1)
            .unwrap()
            .into_iter()
            .find(|t| t.to_string() == "T((inf,3))")
            .unwrap();
        assert!(matches!(remove_track(&u, &t), Err(Error::NotATrack(_))));
    }

    #[test]
    fn parents_examples() {
        let u = GoodSemigroup::unit_box(2);
        let s1 = sg(&[(0, 0), (1, 2)]);
        let s2 = sg(&[(0, 0), (2, 1)]);
        let s3 = sg(&[(0, 0), (1, 1), (2, 2)]);
        let p = special_parents(&s3).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].0, u);
        let p = special_parents(&sg(&[(0, 0), (2, 2)])).unwrap();
        assert_eq!(p.iter().map(|x| x.0.clone()).collect::<Vec<_>>(), vec![s1.clone(), s2]);
        let p = special_parents(&s1).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].0, u);
        assert!(special_parents(&u).is_err());
    }

    #[test]
    fn json_track() {
        let t = &tracks(&GoodSemigroup::unit_box(2)).unwrap()[1];
        assert_eq!(
            serde_json::to_string(t).unwrap(),
            r#"{"anchors":[[1,"inf"],["inf",1]]}"#
        );
    }

    #[test]
    fn irreducible_examples() {
        let s3 = parse_semigroup("0 0\n1 1\n2 2").unwrap();
        let irr = irreducibles(&s3).unwrap();
        assert!(irr.contains(&Point2::new(1, 1)));
        assert!(!irr.contains(&Point2::new(2, 2)));
        let u = GoodSemigroup::unit_box(2);
        assert!(irreducibles(&u).unwrap().contains(&Point2::new(1, 1)));
        assert_eq!(
            irreducible_maximals(&parse_semigroup("0 0\n1 2").unwrap()).unwrap(),
            vec![Point2::new(1, INF), Point2::new(INF, 2), Point2::new(INF, 3)]
        );
    }
}
