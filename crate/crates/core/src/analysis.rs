//! Semiring closure, embedding dimension and the Wilf inequality.

use std::fmt;

use itertools::Itertools;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{frontiers, pool};
use crate::error::{Error, Result};
use crate::metrics::genus;
use crate::plane::Plane;
use crate::point::{Point2, INF};
use crate::semigroup::GoodSemigroup;

/// A finite quotient of `ℕ̄²`: each coordinate is exact up to `n_i`, then one
/// class for "finite and larger", then infinity. Both semiring operations
/// pass to the quotient, and finite sums never reach the infinite class.
#[derive(Clone, Copy, Debug)]
struct Lattice {
    n1: u32,
    n2: u32,
}

impl Lattice {
    fn width(self) -> usize {
        self.n1 as usize + 3
    }

    fn height(self) -> usize {
        self.n2 as usize + 3
    }

    fn size(self) -> usize {
        self.width() * self.height()
    }

    fn code(v: u32, n: u32) -> u32 {
        if v == INF {
            n + 2
        } else {
            v.min(n + 1)
        }
    }

    fn encode(self, p: Point2) -> usize {
        Lattice::code(p.x, self.n1) as usize * self.height() + Lattice::code(p.y, self.n2) as usize
    }

    fn decode(self, i: usize) -> (u32, u32) {
        ((i / self.height()) as u32, (i % self.height()) as u32)
    }

    /// Codes back to points: the overflow class becomes `n_i + 1`.
    fn point(self, i: usize) -> Point2 {
        let (x, y) = self.decode(i);
        let f = |v: u32, n: u32| if v == n + 2 { INF } else { v };
        Point2::new(f(x, self.n1), f(y, self.n2))
    }

    fn add1(a: u32, b: u32, n: u32) -> u32 {
        if a == n + 2 || b == n + 2 {
            n + 2
        } else {
            (a + b).min(n + 1)
        }
    }

    fn meet(self, a: usize, b: usize) -> usize {
        let ((ax, ay), (bx, by)) = (self.decode(a), self.decode(b));
        ax.min(bx) as usize * self.height() + ay.min(by) as usize
    }

    fn add(self, a: usize, b: usize) -> usize {
        let ((ax, ay), (bx, by)) = (self.decode(a), self.decode(b));
        Lattice::add1(ax, bx, self.n1) as usize * self.height()
            + Lattice::add1(ay, by, self.n2) as usize
    }

    /// Least subset containing the generators and 0 that is closed under
    /// both operations.
    fn closure(self, gens: &[usize]) -> Vec<bool> {
        let mut inset = vec![false; self.size()];
        let mut elems = Vec::new();
        for &g in std::iter::once(&0).chain(gens) {
            if !inset[g] {
                inset[g] = true;
                elems.push(g);
            }
        }
        let mut i = 0;
        while i < elems.len() {
            let a = elems[i];
            for j in 0..=i {
                let b = elems[j];
                for r in [self.meet(a, b), self.add(a, b)] {
                    if !inset[r] {
                        inset[r] = true;
                        elems.push(r);
                    }
                }
            }
            i += 1;
        }
        inset
    }

    /// The image of `Γ_S`.
    fn gamma(self, s: &GoodSemigroup) -> Vec<bool> {
        let (c1, c2) = s.c2();
        let (ix, iy) = (self.n1 + 2, self.n2 + 2);
        let mut out = vec![false; self.size()];
        for i in 0..self.size() {
            let (x, y) = self.decode(i);
            out[i] = match (x == ix, y == iy) {
                (true, true) => true,
                (false, true) => s.contains_unchecked(&[x, c2]),
                (true, false) => s.contains_unchecked(&[c1, y]),
                (false, false) => s.contains_unchecked(&[x, y]),
            };
        }
        out
    }
}

fn lattice_for(n: (u32, u32)) -> Lattice {
    Lattice { n1: n.0, n2: n.1 }
}

/// `c + e`, with `e` the componentwise minimum of the nonzero small
/// elements. Every coordinate of `I_A(S)` is below it, and each element of
/// `Γ_S` past it is a meet of a column and a row that are sums of elements
/// inside it, so closures compared up to this bound are exact.
pub fn lattice_bound(s: &GoodSemigroup) -> (u32, u32) {
    let (c1, c2) = s.c2();
    let e = |i: usize| s.small().skip(1).map(|p| p[i]).min().unwrap_or(0);
    (c1 + e(0), c2 + e(1))
}

fn to_points(l: Lattice, set: &[bool]) -> Vec<Point2> {
    let mut pts: Vec<Point2> = (0..set.len()).filter(|&i| set[i]).map(|i| l.point(i)).collect();
    pts.sort();
    pts
}

/// Closure of `gens ∪ {0}` under `⊕` and `⊙` on the lattice exact up to
/// `bound`. In the output a coordinate `bound_i + 1` stands for any finite
/// value above `bound_i`, and `∞` stays the limit element.
pub fn semiring_closure(gens: &[Point2], bound: (u32, u32)) -> Vec<Point2> {
    let l = lattice_for(bound);
    let codes: Vec<usize> = gens.iter().map(|&g| l.encode(g)).collect();
    to_points(l, &l.closure(&codes))
}

/// `Γ_S` on the lattice of [`semiring_closure`] with bound [`lattice_bound`].
pub fn clipped_gamma(s: &GoodSemigroup) -> Result<Vec<Point2>> {
    s.require_planar()?;
    let l = lattice_for(lattice_bound(s));
    Ok(to_points(l, &l.gamma(s)))
}

/// Whether `gens` generate `Γ_S`, compared on the lattice exact up to `bound`.
pub fn generates(s: &GoodSemigroup, gens: &[Point2], bound: (u32, u32)) -> Result<bool> {
    s.require_planar()?;
    let l = lattice_for(bound);
    let codes: Vec<usize> = gens.iter().map(|&g| l.encode(g)).collect();
    Ok(l.closure(&codes) == l.gamma(s))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingDimension {
    pub edim: usize,
    pub witness: Vec<Point2>,
}

/// Smallest subset of `I_A(S)` generating `Γ_S`. Infinite irreducible
/// maximals are forced: a meet giving `(x,∞)` needs `(x,∞)` itself, and
/// finite sums stay finite. The finite ones are searched by size.
pub fn embedding_dimension(s: &GoodSemigroup) -> Result<EmbeddingDimension> {
    let plane = Plane::new(s)?;
    let ia = plane.irreducible_maximals(s);
    let l = lattice_for(lattice_bound(s));
    let target = l.gamma(s);
    let (forced, optional): (Vec<Point2>, Vec<Point2>) =
        ia.iter().partition(|p| !p.is_finite());
    let forced_codes: Vec<usize> = forced.iter().map(|&p| l.encode(p)).collect();
    let opt_codes: Vec<usize> = optional.iter().map(|&p| l.encode(p)).collect();

    let all: Vec<usize> = forced_codes.iter().chain(&opt_codes).copied().collect();
    if l.closure(&all) != target {
        return Err(Error::Internal(format!(
            "irreducible maximals do not generate {s}"
        )));
    }
    for k in 0..=optional.len() {
        for pick in (0..optional.len()).combinations(k) {
            let mut gens = forced_codes.clone();
            gens.extend(pick.iter().map(|&i| opt_codes[i]));
            if l.closure(&gens) == target {
                let mut witness = forced.clone();
                witness.extend(pick.iter().map(|&i| optional[i]));
                witness.sort();
                return Ok(EmbeddingDimension {
                    edim: witness.len(),
                    witness,
                });
            }
        }
    }
    unreachable!("the full set generates")
}

/// An exact nonnegative fraction in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        let g = num.gcd(&den).max(1);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WilfReport {
    pub edim: u64,
    pub c_s: u64,
    pub genus: u64,
    pub lhs: u64,
    pub rhs: Ratio,
    pub holds: bool,
    pub witness: Vec<Point2>,
}

impl fmt::Display for WilfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.holds { ">=" } else { "<" };
        write!(f, "{} {rel} {}", self.lhs, self.rhs)
    }
}

/// `edim(S) ≥ c_S / (c_S − g(S))`, decided in integers.
pub fn wilf_check(s: &GoodSemigroup) -> Result<WilfReport> {
    s.require_planar()?;
    if s.is_whole_space() {
        return Err(Error::Unsupported(
            "the Wilf inequality is undefined for the whole plane".into(),
        ));
    }
    let ed = embedding_dimension(s)?;
    let c_s = s.conductor_sum();
    let g = genus(s);
    let l = c_s - g;
    let edim = ed.edim as u64;
    Ok(WilfReport {
        edim,
        c_s,
        genus: g,
        lhs: edim,
        rhs: Ratio::new(c_s, l),
        holds: edim * l >= c_s,
        witness: ed.witness,
    })
}

/// Every semigroup of genus at most `max_g` violating the inequality.
pub fn wilf_scan(max_g: u64, threads: usize) -> Result<Vec<(GoodSemigroup, WilfReport)>> {
    let levels = frontiers(max_g, threads)?;
    pool(threads)?.install(|| {
        let mut out = Vec::new();
        for level in &levels {
            let reports: Vec<WilfReport> = level
                .members
                .par_iter()
                .map(wilf_check)
                .collect::<Result<_>>()?;
            out.extend(
                level
                    .members
                    .iter()
                    .cloned()
                    .zip(reports)
                    .filter(|(_, r)| !r.holds),
            );
        }
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::validate;

    fn sg(points: &[(u32, u32)]) -> GoodSemigroup {
        validate(points.iter().map(|&(x, y)| vec![x, y]).collect()).unwrap()
    }

    #[test]
    fn closure_basics() {
        assert_eq!(semiring_closure(&[], (1, 1)), vec![Point2::ZERO]);
        let u = GoodSemigroup::unit_box(2);
        let gens = [Point2::new(1, INF), Point2::new(INF, 1)];
        assert_eq!(semiring_closure(&gens, lattice_bound(&u)), clipped_gamma(&u).unwrap());
    }

    #[test]
    fn finite_sums_stay_finite() {
        // (1,2)+(1,2) overflows the box but is not the limit (2,∞)
        let c = semiring_closure(&[Point2::new(1, 2)], (3, 3));
        assert!(c.contains(&Point2::new(2, 4)));
        assert!(!c.contains(&Point2::new(2, INF)));
    }

    #[test]
    fn unit_box_wilf() {
        let u = GoodSemigroup::unit_box(2);
        let e = embedding_dimension(&u).unwrap();
        assert_eq!(e.edim, 2);
        let w = wilf_check(&u).unwrap();
        assert_eq!((w.edim, w.c_s, w.genus), (2, 2, 1));
        assert_eq!(w.rhs, Ratio::new(2, 1));
        assert!(w.holds);
        assert_eq!(w.to_string(), "2 >= 2/1");
        assert!(wilf_check(&GoodSemigroup::whole_space(2)).is_err());
    }

    #[test]
    fn s3_edim_is_stable_under_box_growth() {
        let s3 = sg(&[(0, 0), (1, 1), (2, 2)]);
        let e = embedding_dimension(&s3).unwrap();
        assert!(generates(&s3, &e.witness, lattice_bound(&s3)).unwrap());
        assert!(generates(&s3, &e.witness, (9, 9)).unwrap());
    }

    #[test]
    fn columns_past_the_conductor_are_not_overflow() {
        // (3,∞) is irreducible in Γ_S; clipping at c would fake it as 2·(2,∞)
        let s2 = sg(&[(0, 0), (2, 1)]);
        let e = embedding_dimension(&s2).unwrap();
        assert_eq!(
            e.witness,
            vec![Point2::new(2, INF), Point2::new(3, INF), Point2::new(INF, 1)]
        );
        assert!(!generates(&s2, &[Point2::new(2, INF), Point2::new(INF, 1)], (6, 6)).unwrap());
        assert!(wilf_check(&s2).unwrap().holds);
    }

    #[test]
    fn ratio_json() {
        let r = Ratio::new(68, 22);
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"num":34,"den":11}"#);
    }
}
