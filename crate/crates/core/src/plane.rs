//! Planar lookup tables: clipped membership, reducibility and the
//! infinite elements of `Γ_S`.

use crate::error::{Error, Result};
use crate::point::{Point2, INF};
use crate::semigroup::{has_delta, GoodSemigroup};

fn or_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for (i, &w) in src.iter().enumerate() {
        if w == 0 {
            continue;
        }
        let t = i + ws;
        if t >= dst.len() {
            break;
        }
        dst[t] |= w << bs;
        if bs > 0 && t + 1 < dst.len() {
            dst[t + 1] |= w >> (64 - bs);
        }
    }
}

#[inline]
fn bit(row: &[u64], x: usize) -> bool {
    row[x / 64] >> (x % 64) & 1 == 1
}

/// Lookup tables for a local planar semigroup other than `ℕ²`.
///
/// Reducibility of a finite point only changes while a coordinate is below
/// twice the conductor, so `red` covers `[0, 2c₁] × [0, 2c₂]`.
pub(crate) struct Plane {
    pub c1: u32,
    pub c2: u32,
    pub e1: u32,
    pub e2: u32,
    mem: Vec<bool>,
    red: Vec<Vec<u64>>,
    proj1: Vec<bool>,
    proj2: Vec<bool>,
}

impl Plane {
    pub fn new(s: &GoodSemigroup) -> Result<Self> {
        s.require_planar()?;
        if s.is_whole_space() {
            return Err(Error::Unsupported(
                "the whole plane is not local and has no irreducible maximals".into(),
            ));
        }
        let (c1, c2) = s.c2();
        let h = c2 as usize + 1;
        let mut mem = vec![false; (c1 as usize + 1) * h];
        let mut proj1 = vec![false; c1 as usize + 1];
        let mut proj2 = vec![false; c2 as usize + 1];
        let (mut e1, mut e2) = (u32::MAX, u32::MAX);
        for p in s.small() {
            mem[p[0] as usize * h + p[1] as usize] = true;
            proj1[p[0] as usize] = true;
            proj2[p[1] as usize] = true;
            if p[0] != 0 {
                e1 = e1.min(p[0]);
                e2 = e2.min(p[1]);
            }
        }
        let mut plane = Plane {
            c1,
            c2,
            e1,
            e2,
            mem,
            red: Vec::new(),
            proj1,
            proj2,
        };
        plane.build_red();
        Ok(plane)
    }

    fn build_red(&mut self) {
        let (w, h) = (2 * self.c1 as usize + 1, 2 * self.c2 as usize + 1);
        let words = w.div_ceil(64);
        let mut rows = vec![vec![0u64; words]; h];
        for (y, row) in rows.iter_mut().enumerate().skip(1) {
            for x in 1..w {
                if self.mem(x as u32, y as u32) {
                    row[x / 64] |= 1 << (x % 64);
                }
            }
        }
        let mut red = vec![vec![0u64; words]; h];
        for by in 1..h {
            for bx in 1..w {
                if !bit(&rows[by], bx) {
                    continue;
                }
                for y in by + 1..h {
                    or_shifted(&mut red[y], &rows[y - by], bx);
                }
            }
        }
        self.red = red;
    }

    /// Membership of a finite point.
    #[inline]
    pub fn mem(&self, x: u32, y: u32) -> bool {
        let (x, y) = (x.min(self.c1), y.min(self.c2));
        self.mem[x as usize * (self.c2 as usize + 1) + y as usize]
    }

    /// A finite nonzero member that is a sum of two nonzero members.
    #[inline]
    pub fn reducible(&self, x: u32, y: u32) -> bool {
        let (x, y) = (x.min(2 * self.c1), y.min(2 * self.c2));
        bit(&self.red[y as usize], x as usize)
    }

    #[inline]
    pub fn irreducible(&self, x: u32, y: u32) -> bool {
        (x, y) != (0, 0) && self.mem(x, y) && !self.reducible(x, y)
    }

    /// `x` lies in the first projection of `S`.
    #[inline]
    pub fn in_proj1(&self, x: u32) -> bool {
        x >= self.c1 || self.proj1[x as usize]
    }

    #[inline]
    pub fn in_proj2(&self, y: u32) -> bool {
        y >= self.c2 || self.proj2[y as usize]
    }

    /// `(x,∞) ∈ Γ_S ∖ {0}`.
    #[inline]
    pub fn col_inf(&self, x: u32) -> bool {
        x > 0 && self.mem(x, self.c2)
    }

    /// `(∞,y) ∈ Γ_S ∖ {0}`.
    #[inline]
    pub fn row_inf(&self, y: u32) -> bool {
        y > 0 && self.mem(self.c1, y)
    }

    /// `(x,∞)` is a sum of two nonzero elements of `Γ_S`: one summand has to
    /// be an infinite column, the other contributes any nonzero first
    /// coordinate of `S`.
    pub fn col_inf_irreducible(&self, x: u32) -> bool {
        self.col_inf(x) && !(1..x).any(|x1| self.in_proj1(x1) && self.col_inf(x - x1))
    }

    pub fn row_inf_irreducible(&self, y: u32) -> bool {
        self.row_inf(y) && !(1..y).any(|y1| self.in_proj2(y1) && self.row_inf(y - y1))
    }

    /// `I_A(S)` in anchor order: irreducible finite maximals, then the
    /// irreducible columns `(x,∞)` and rows `(∞,y)`. Columns at or beyond
    /// `c₁+e₁` are sums of `(e₁,·)` and a column at or beyond `c₁`, so the
    /// search stops there.
    pub fn irreducible_maximals(&self, s: &GoodSemigroup) -> Vec<Point2> {
        let mut out: Vec<Point2> = s
            .small()
            .filter(|p| p[0] > 0 && p[0] < self.c1 && p[1] < self.c2)
            .filter(|p| !has_delta(s, p) && self.irreducible(p[0], p[1]))
            .map(|p| Point2::new(p[0], p[1]))
            .collect();
        for x in 1..self.c1 + self.e1 {
            if self.col_inf_irreducible(x) {
                out.push(Point2::new(x, INF));
            }
        }
        for y in 1..self.c2 + self.e2 {
            if self.row_inf_irreducible(y) {
                out.push(Point2::new(INF, y));
            }
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::parse_semigroup;

    fn brute_reducible(s: &GoodSemigroup, x: u32, y: u32) -> bool {
        (1..x).any(|a| {
            (1..y).any(|b| {
                s.contains_unchecked(&[a, b]) && s.contains_unchecked(&[x - a, y - b])
            })
        })
    }

    #[test]
    fn reducibility_matches_brute_force() {
        for text in [
            "0 0\n1 1",
            "0 0\n1 2",
            "0 0\n1 1\n2 2",
            "0 0\n1 2\n1 3\n2 2\n2 4",
            "0 0\n1 3",
        ] {
            let s = parse_semigroup(text).unwrap();
            let p = Plane::new(&s).unwrap();
            let (c1, c2) = s.c2();
            for x in 0..=3 * c1 + 2 {
                for y in 0..=3 * c2 + 2 {
                    if (x, y) == (0, 0) || !s.contains_unchecked(&[x, y]) {
                        continue;
                    }
                    assert_eq!(
                        p.reducible(x, y),
                        brute_reducible(&s, x, y),
                        "{text:?} at ({x},{y})"
                    );
                }
            }
        }
    }

    #[test]
    fn unit_box_irreducible_maximals() {
        let s = GoodSemigroup::unit_box(2);
        let p = Plane::new(&s).unwrap();
        assert_eq!(
            p.irreducible_maximals(&s),
            vec![Point2::new(1, INF), Point2::new(INF, 1)]
        );
        assert!(p.irreducible(1, 1));
        assert!(p.irreducible(1, 7));
        assert!(!p.irreducible(2, 2));
    }
}
