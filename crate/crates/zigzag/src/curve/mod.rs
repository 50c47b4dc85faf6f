//! Graded curves on punctured discs.
//!
//! Type B curves live on the disc with punctures `0, …, n` (puncture `0` is the
//! fixed one); they carry a trigrading and are acted on by the type B braid
//! group. Their lifts through the double cover branched at puncture `0` are
//! bigraded curves on the disc with `2n` punctures. See [`engine`] for the
//! combinatorial model.

mod complexes;
mod cover;
pub mod engine;
mod json;

use std::fmt;

use crate::algebra::AlgebraType;
use crate::arith::{GradedLaurent, GradingTag, Rational};
use crate::error::{Error, Result};
use crate::functor::BraidWord;
use engine::{endpoint_index, interior_index, wall_hits, Chain, Lift, Node, Shift, Surface, WallHit};

pub use complexes::{curve_complex, multicurve_complex, sgn};
pub use cover::{bigraded_intersect, lift, BigradedMulticurve};
pub use json::{CrossingJson, CurveJson, LiftJson, SegmentJson};

/// Whether the positive generator twists counter-clockwise.
const POSITIVE_TWIST_CCW: bool = true;

/// The deck transformation `χ(r₁, r₂, r₃)` of the grading covering.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradingShift {
    pub r1: i32,
    pub r2: i32,
    pub r3: u8,
}

impl GradingShift {
    pub fn new(r1: i32, r2: i32, r3: u8) -> Self {
        GradingShift { r1, r2, r3: r3 % 2 }
    }

    pub fn then(self, o: Self) -> Self {
        Self::new(self.r1 + o.r1, self.r2 + o.r2, self.r3 ^ o.r3)
    }

    pub fn inverse(self) -> Self {
        Self::new(-self.r1, -self.r2, self.r3)
    }

    fn as_shift(self) -> Shift {
        [self.r1, self.r2, self.r3 as i32]
    }
}

impl fmt::Display for GradingShift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.r1, self.r2, self.r3)
    }
}

/// A crossing of a curve with wall `wall` and its local index there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub wall: usize,
    pub mu: Shift,
    /// Whether the curve leaves the crossing eastward.
    pub exits_east: bool,
}

/// A graded admissible curve in normal form: endpoints at distinct punctures,
/// minimal intersection with the axis, oriented from the smaller puncture.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Curve {
    surface: Surface,
    start: usize,
    end: usize,
    first_half: i8,
    segments: Vec<i32>,
    start_lift: Lift,
}

/// Trigraded curve on the type B disc.
pub type TrigradedCurve = Curve;

/// Grading normalisation of the basic curve and wall with index `i`.
fn normalization(s: &Surface, i: usize) -> Shift {
    let i = i as i32;
    match s.kind {
        AlgebraType::B => [1 - i, 0, 0],
        AlgebraType::A => {
            let n = s.punctures as i32 / 2;
            if i >= n {
                [n - i, 0, 0]
            } else {
                [n - i, i - n, 0]
            }
        }
    }
}

impl Curve {
    /// The basic curve `b_j` of the rank-`n` type B disc: the straight segment
    /// from puncture `j − 1` to puncture `j`.
    pub fn basic(n: usize, j: usize) -> Result<Self> {
        Self::basic_on(Surface::type_b(n), n, j)
    }

    /// The basic segment with index `i` (`1..2n`) on the type A disc with `2n`
    /// punctures, graded as the lift of the corresponding type B curve.
    pub fn basic_a(n: usize, i: usize) -> Result<Self> {
        Self::basic_on(Surface::type_a(2 * n), 2 * n - 1, i)
    }

    fn basic_on(s: Surface, max: usize, j: usize) -> Result<Self> {
        if s.punctures < 3 {
            return Err(Error::Rank(s.punctures.saturating_sub(1)));
        }
        if j == 0 || j > max {
            return Err(Error::Vertex { vertex: j, max });
        }
        Ok(Curve {
            surface: s,
            start: j - 1,
            end: j,
            first_half: 1,
            segments: Vec::new(),
            start_lift: s.normalize(Lift::new(2, normalization(&s, j))),
        })
    }

    /// Builds a curve from raw axis data, reducing it to normal form. The lift
    /// is that of the start germ.
    pub fn from_axis(
        kind: AlgebraType,
        punctures: usize,
        start: usize,
        first_half: i8,
        segments: Vec<i32>,
        end: usize,
        start_lift: Lift,
    ) -> Result<Self> {
        let s = Surface { kind, punctures };
        if punctures < 3 || start >= punctures || end >= punctures || start == end {
            return Err(Error::Curve("endpoints must be distinct punctures".into()));
        }
        if first_half != 1 && first_half != -1 {
            return Err(Error::Curve("half must be +1 or -1".into()));
        }
        if let Some(a) = segments.iter().find(|&&a| a < -1 || a > s.last_segment()) {
            return Err(Error::Curve(format!("segment {a} out of range")));
        }
        let mut nodes = vec![Node::puncture(start as i32, Some(start_lift))];
        nodes.extend(segments.iter().map(|&a| Node::crossing(a, None)));
        nodes.push(Node::puncture(end as i32, None));
        let mut chain = Chain { first_half, nodes };
        let dir = chain.direction(0);
        if (start_lift.angle - dir).rem_euclid(4) != 0 {
            return Err(Error::Curve("start lift is not tangent to the curve".into()));
        }
        chain.propagate(&s)?;
        chain.reduce(&s);
        let lifts = chain.solve(&s)?;
        Ok(Self::from_chain(s, chain, &lifts))
    }

    fn from_chain(s: Surface, mut chain: Chain, lifts: &[Lift]) -> Self {
        let mut start_lift = lifts[0];
        if chain.nodes[0].pos > chain.nodes[chain.last()].pos {
            start_lift = lifts[chain.last()];
            chain.reverse();
        }
        let last = chain.last();
        Curve {
            surface: s,
            start: (chain.nodes[0].pos / 2) as usize,
            end: (chain.nodes[last].pos / 2) as usize,
            first_half: chain.first_half,
            segments: chain.nodes[1..last].iter().map(Node::segment).collect(),
            start_lift: s.normalize(start_lift),
        }
    }

    pub(crate) fn chain(&self) -> Chain {
        let mut nodes = vec![Node::puncture(self.start as i32, None)];
        nodes.extend(self.segments.iter().map(|&a| Node::crossing(a, None)));
        nodes.push(Node::puncture(self.end as i32, None));
        Chain { first_half: self.first_half, nodes }
    }

    /// Normalised lifts at the start germ, every axis crossing and the end germ.
    pub(crate) fn lifts(&self) -> Vec<Lift> {
        self.chain().integrate(&self.surface, 0, self.start_lift).expect("normal form has no U-turns")
    }

    pub(crate) fn surface(&self) -> Surface {
        self.surface
    }

    pub fn kind(&self) -> AlgebraType {
        self.surface.kind
    }

    /// Number of braid generators acting on the disc: the type B rank `n`
    /// (punctures `0..=n`), or `2n − 1` on the type A side.
    pub fn rank(&self) -> usize {
        self.surface.punctures - 1
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.start, self.end)
    }

    pub fn first_half(&self) -> i8 {
        self.first_half
    }

    /// Axis segments crossed, in order.
    pub fn axis_crossings(&self) -> &[i32] {
        &self.segments
    }

    pub fn start_lift(&self) -> Lift {
        self.start_lift
    }

    /// Whether the curve is the straight segment between adjacent punctures.
    pub fn is_segment(&self) -> Option<usize> {
        (self.segments.is_empty() && self.end == self.start + 1).then_some(self.start)
    }

    pub fn shifted(&self, g: GradingShift) -> Self {
        let s = self.surface;
        Curve {
            start_lift: s
                .normalize(Lift { shift: engine::add(self.start_lift.shift, g.as_shift()), ..self.start_lift }),
            ..self.clone()
        }
    }

    pub(crate) fn hits(&self) -> Vec<WallHit> {
        wall_hits(&self.surface, &self.chain(), &self.lifts())
    }

    /// Crossings with the walls through the segment midpoints, in order along
    /// the curve, with their local indices.
    pub fn crossings(&self) -> Vec<Crossing> {
        let s = self.surface;
        self.hits()
            .into_iter()
            .map(|h| Crossing {
                wall: h.wall,
                mu: interior_index(&s, wall_lift(&s, h.wall), h.lift),
                exits_east: h.exits_east,
            })
            .collect()
    }

    /// Image under the generator `letter` (negative for inverses).
    pub fn act(&self, letter: i32) -> Result<Self> {
        let j = letter.unsigned_abs() as usize;
        if letter == 0 || j > self.rank() {
            return Err(Error::Invalid(format!("generator {letter} out of range")));
        }
        let s = self.surface;
        let (k, times) = match s.kind {
            AlgebraType::B if j == 1 => (0, 2),
            _ => (j as i32 - 1, 1),
        };
        let positive = letter > 0;
        if self.is_segment() == Some(k as usize) {
            let r3 = u8::from(s.kind == AlgebraType::B && j == 1);
            let g = GradingShift::new(-1, 1, r3);
            return Ok(self.shifted(if positive { g } else { g.inverse() }));
        }
        let mut chain = self.chain();
        for (n, l) in chain.nodes.iter_mut().zip(self.lifts()) {
            n.lift = Some(l);
        }
        let ccw = positive == POSITIVE_TWIST_CCW;
        if !ccw {
            chain.mirror();
        }
        for _ in 0..times {
            chain.half_twist(k);
        }
        if !ccw {
            chain.mirror();
        }
        chain.propagate(&s)?;
        chain.reduce(&s);
        let lifts = chain.solve(&s)?;
        Ok(Self::from_chain(s, chain, &lifts))
    }

    /// `w(c)`, the rightmost letter acting first.
    pub fn act_word(&self, w: &BraidWord) -> Result<Self> {
        if w.kind != self.kind() || w.rank != self.rank() {
            return Err(Error::Invalid(format!(
                "word of type {} rank {} on a curve of rank {}",
                w.kind,
                w.rank,
                self.rank()
            )));
        }
        let mut c = self.clone();
        for &l in w.letters.iter().rev() {
            c = c.act(l)?;
        }
        Ok(c)
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.start, if self.first_half > 0 { "+" } else { "-" })?;
        for a in &self.segments {
            write!(f, " {a}")?;
        }
        let l = self.start_lift;
        write!(f, " {} @ angle {} shift ({}, {}, {})", self.end, l.angle, l.shift[0], l.shift[1], l.shift[2])
    }
}

fn wall_lift(s: &Surface, wall: usize) -> Lift {
    Lift::new(2, normalization(s, wall))
}

fn poly(tag: GradingTag, terms: &[[i32; 3]]) -> GradedLaurent {
    let mut p = GradedLaurent::zero(tag);
    for t in terms {
        p.add_term(*t, 1);
    }
    p
}

fn tag_of(s: &Surface) -> GradingTag {
    match s.kind {
        AlgebraType::B => GradingTag::Tri,
        AlgebraType::A => GradingTag::Bi,
    }
}

/// Intersection number of the straight segment `seg` (a basic curve) with `c`.
fn pair_with_segment(seg: &Curve, c: &Curve) -> GradedLaurent {
    let s = seg.surface;
    let tag = tag_of(&s);
    let b = s.kind == AlgebraType::B;
    let left = seg.start;
    let axis = Lift::new(0, seg.start_lift.shift);
    let mut out = GradedLaurent::zero(tag);
    if c.is_segment() == Some(left) {
        let r = engine::sub(c.start_lift.shift, seg.start_lift.shift);
        let base = if b && left != 0 {
            poly(tag, &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [0, 1, 1]])
        } else {
            poly(tag, &[[0, 0, 0], [0, 1, 0]])
        };
        return base.shift(&r[..tag.arity()]);
    }
    let interior = if b {
        poly(tag, &[[0, 0, 0], [0, 0, 1], [-1, 1, 0], [-1, 1, 1]])
    } else {
        poly(tag, &[[0, 0, 0], [-1, 1, 0]])
    };
    let chain = c.chain();
    let lifts = c.lifts();
    let seg_pos = 2 * left as i32 + 1;
    for (n, l) in chain.nodes.iter().zip(&lifts).skip(1).take(chain.last().saturating_sub(1)) {
        if n.pos == seg_pos {
            let mu = interior_index(&s, axis, *l);
            out = &out + &interior.shift(&mu[..tag.arity()]);
        }
    }
    let last = chain.last();
    let germs =
        [(c.start, lifts[0].rotate_to(chain.direction(0))), (c.end, lifts[last].rotate_to(chain.direction(last) + 4))];
    for (p, ray) in germs {
        let own = if p == left {
            axis
        } else if p == left + 1 {
            axis.rotate_to(4)
        } else {
            continue;
        };
        let mu = endpoint_index(&s, p as i32, own, ray);
        let factor = match (b, p) {
            (false, _) => poly(tag, &[[0, 0, 0]]),
            (true, 0) => poly(tag, &[[0, 0, 0], [-1, 1, 1]]),
            (true, _) => poly(tag, &[[0, 0, 0], [0, 0, 1]]),
        };
        out = &out + &factor.shift(&mu[..tag.arity()]);
    }
    out
}

fn check_rank(c: &Curve, n: usize) -> Result<()> {
    if c.kind() != AlgebraType::B || c.rank() != n {
        return Err(Error::Invalid(format!("expected a type B curve of rank {n}")));
    }
    Ok(())
}

/// Trigraded intersection number `I(b_j, c)`.
pub fn intersect_basic(j: usize, c: &Curve) -> Result<GradedLaurent> {
    if c.kind() != AlgebraType::B {
        return Err(Error::Invalid("intersect_basic takes a type B curve".into()));
    }
    let b = Curve::basic(c.rank(), j)?;
    Ok(pair_with_segment(&b, c))
}

/// Trigraded intersection number of the wall `d_j` with `c`.
pub fn intersect_wall(j: usize, c: &Curve) -> Result<GradedLaurent> {
    let s = c.surface;
    if s.kind != AlgebraType::B || j == 0 || j > c.rank() {
        return Err(Error::Vertex { vertex: j, max: c.rank() });
    }
    let factor = poly(GradingTag::Tri, &[[0, 0, 0], [0, 0, 1], [-1, 1, 0], [-1, 1, 1]]);
    let mut out = GradedLaurent::zero(GradingTag::Tri);
    for x in c.crossings().into_iter().filter(|x| x.wall == j) {
        out = &out + &factor.shift(&x.mu);
    }
    Ok(out)
}

/// `I(w₀(b_j), w₁(b_k))`, computed as `I(b_j, w₀⁻¹w₁(b_k))`.
pub fn intersect(n: usize, w0: &BraidWord, j: usize, w1: &BraidWord, k: usize) -> Result<GradedLaurent> {
    let c = Curve::basic(n, k)?.act_word(&w0.inverse().concat(w1))?;
    check_rank(&c, n)?;
    intersect_basic(j, &c)
}

/// Geometric intersection number of `b_j` with `c`: transverse interior
/// intersections plus one half for each shared puncture.
pub fn geometric_intersect(j: usize, c: &Curve) -> Result<Rational> {
    let b = Curve::basic(c.rank(), j)?;
    if c.kind() != AlgebraType::B {
        return Err(Error::Invalid("geometric_intersect takes a type B curve".into()));
    }
    let seg = 2 * b.start as i32 + 1;
    let interior = c.segments.iter().filter(|&&a| 2 * a + 1 == seg).count() as i64;
    let shared = [c.start, c.end].iter().filter(|&&p| p == b.start || p == b.end).count() as i64;
    Ok(&Rational::from_int(interior) + &Rational::new(shared, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(s: &str) -> GradedLaurent {
        GradedLaurent::parse(GradingTag::Tri, s).unwrap()
    }

    #[test]
    fn basic_pairings() {
        for n in 2..=4 {
            for j in 1..=n {
                let bj = Curve::basic(n, j).unwrap();
                let own = if j == 1 { tri("1 + q2") } else { tri("1 + q2 + q3 + q2*q3") };
                assert_eq!(intersect_basic(j, &bj).unwrap(), own);
                assert_eq!(intersect_wall(j, &bj).unwrap(), tri("1 + q3 + q1^-1*q2 + q1^-1*q2*q3"));
                if j < n {
                    let next = Curve::basic(n, j + 1).unwrap();
                    assert_eq!(intersect_basic(j, &next).unwrap(), tri("1 + q3"));
                    assert_eq!(intersect_basic(j + 1, &bj).unwrap(), tri("q2 + q2*q3"));
                }
            }
        }
    }

    #[test]
    fn twisting_a_basic_curve_shifts_it() {
        let b2 = Curve::basic(3, 2).unwrap();
        assert_eq!(b2.act(2).unwrap(), b2.shifted(GradingShift::new(-1, 1, 0)));
        let b1 = Curve::basic(3, 1).unwrap();
        assert_eq!(b1.act(1).unwrap(), b1.shifted(GradingShift::new(-1, 1, 1)));
        assert_eq!(b1.act(-1).unwrap(), b1.shifted(GradingShift::new(1, -1, 1)));
    }

    #[test]
    fn generator_and_inverse_cancel() {
        let b = Curve::basic(3, 2).unwrap();
        for l in [1, -1, 2, -2, 3, -3] {
            let c = b.act(l).unwrap();
            assert_eq!(c.act(-l).unwrap(), b, "letter {l}");
        }
    }

    #[test]
    fn geometric_count_of_neighbours() {
        let b2 = Curve::basic(2, 2).unwrap();
        assert_eq!(geometric_intersect(1, &b2).unwrap(), Rational::new(1, 2));
        assert_eq!(geometric_intersect(1, &Curve::basic(3, 3).unwrap()).unwrap(), Rational::from_int(0));
    }
}
