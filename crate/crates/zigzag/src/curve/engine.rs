//! Curves on a punctured disc, encoded by how they cross the horizontal line
//! through the punctures.
//!
//! Punctures sit at `x = 0, …, P−1`. Segment `a` is the open interval between
//! punctures `a` and `a + 1`; segments `−1` and `P−1` are the two boundary
//! rays. Positions are doubled, so puncture `p` sits at `2p` and segment `a`
//! at `2a + 1`. Between consecutive items a curve runs along a semicircle, in
//! the upper and lower half-planes alternately.
//!
//! A grading is a point of a covering of the bundle of tangent lines: an angle
//! in eighths of a turn together with a shift. Turning by half a turn is the
//! shift `(1, 0, 0)`, and passing eastward below puncture `p` (across the cut
//! hanging down from it) adds the class [`Surface::cut`].

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraType;
use crate::error::{Error, Result};

pub type Shift = [i32; 3];

/// Tangent line together with its point in the grading covering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lift {
    /// In eighths of a full turn, counter-clockwise from east.
    pub angle: i32,
    pub shift: Shift,
}

impl Lift {
    pub fn new(angle: i32, shift: Shift) -> Self {
        Lift { angle, shift }
    }

    /// The same point written with a different angle representative.
    pub fn rotate_to(self, angle: i32) -> Self {
        debug_assert_eq!((angle - self.angle).rem_euclid(4), 0, "not the same line");
        let k = (angle - self.angle).div_euclid(4);
        Lift { angle, shift: [self.shift[0] - k, self.shift[1], self.shift[2]] }
    }

    fn add_shift(self, s: Shift) -> Self {
        Lift { angle: self.angle, shift: add(self.shift, s) }
    }
}

pub fn add(a: Shift, b: Shift) -> Shift {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub(a: Shift, b: Shift) -> Shift {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Surface {
    pub kind: AlgebraType,
    pub punctures: usize,
}

impl Surface {
    /// Type B disc of rank `n`: punctures `0..=n`, puncture `0` special.
    pub fn type_b(n: usize) -> Self {
        Surface { kind: AlgebraType::B, punctures: n + 1 }
    }

    pub fn type_a(punctures: usize) -> Self {
        Surface { kind: AlgebraType::A, punctures }
    }

    /// Class added when crossing the cut of puncture `p` eastward.
    pub fn cut(&self, p: i32) -> Shift {
        match (self.kind, p) {
            (AlgebraType::B, 0) => [-1, 0, 1],
            _ => [-2, 1, 0],
        }
    }

    pub fn last_segment(&self) -> i32 {
        self.punctures as i32 - 1
    }

    pub fn is_ray(&self, seg: i32) -> bool {
        seg < 0 || seg >= self.last_segment()
    }

    pub fn normalize_shift(&self, s: Shift) -> Shift {
        match self.kind {
            AlgebraType::B => [s[0], s[1], s[2].rem_euclid(2)],
            AlgebraType::A => [s[0], s[1], 0],
        }
    }

    /// Canonical representative with angle in `0..4`.
    pub fn normalize(&self, l: Lift) -> Lift {
        let k = l.angle.div_euclid(4);
        Lift { angle: l.angle - 4 * k, shift: self.normalize_shift([l.shift[0] + k, l.shift[1], l.shift[2]]) }
    }

    /// Sum of cut classes crossed by a lower arc from `from` to `to`.
    fn cuts_between(&self, from: i32, to: i32) -> Shift {
        let (lo, hi, sign) = if from < to { (from, to, 1) } else { (to, from, -1) };
        let mut s = [0; 3];
        for p in 0..self.punctures as i32 {
            if lo < 2 * p && 2 * p < hi {
                let c = self.cut(p);
                for i in 0..3 {
                    s[i] += sign * c[i];
                }
            }
        }
        s
    }
}

/// Local index at a transverse interior intersection, from the first curve's
/// lift to the second's.
pub fn interior_index(s: &Surface, first: Lift, second: Lift) -> Shift {
    let complexify = (first.angle - second.angle).rem_euclid(4);
    assert!(complexify != 0, "curves are tangent");
    let j = (first.angle - complexify - second.angle).div_euclid(4);
    s.normalize_shift(sub(second.shift, add(first.shift, [j, 0, 0])))
}

/// Local index at a shared puncture `p`; both lifts are written with their
/// angle equal to the outgoing ray direction.
pub fn endpoint_index(s: &Surface, p: i32, first: Lift, second: Lift) -> Shift {
    let complexify = (first.angle - second.angle).rem_euclid(8);
    assert!(complexify != 0, "curves leave the puncture in the same direction");
    let to_cut = (first.angle - 6).rem_euclid(8);
    let mut base = first.shift;
    if to_cut > 0 && to_cut < complexify {
        base = sub(base, s.cut(p));
    }
    let j = (first.angle - complexify - second.angle).div_euclid(8);
    base[0] += 2 * j;
    s.normalize_shift(sub(second.shift, base))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Node {
    /// Doubled position: even for punctures (first and last node), odd for crossings.
    pub pos: i32,
    pub lift: Option<Lift>,
    /// Whether `lift`, if present, is known to belong to this point of the final curve.
    pub trusted: bool,
}

impl Node {
    pub fn puncture(p: i32, lift: Option<Lift>) -> Self {
        Node { pos: 2 * p, lift, trusted: true }
    }

    pub fn crossing(seg: i32, lift: Option<Lift>) -> Self {
        Node { pos: 2 * seg + 1, lift, trusted: true }
    }

    pub fn segment(&self) -> i32 {
        (self.pos - 1).div_euclid(2)
    }
}

/// A possibly non-reduced curve with optional gradings attached to its items.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    /// `+1` if the first arc lies in the upper half-plane.
    pub first_half: i8,
    pub nodes: Vec<Node>,
}

impl Chain {
    pub fn last(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn half(&self, arc: usize) -> i8 {
        if arc.is_multiple_of(2) {
            self.first_half
        } else {
            -self.first_half
        }
    }

    /// Travel direction at node `i`, in eighths, `0..8`.
    pub fn direction(&self, i: usize) -> i32 {
        let last = self.last();
        if i == 0 {
            match (self.half(0) > 0, self.nodes[1].pos > self.nodes[0].pos) {
                (true, _) => 2,
                (false, true) => 7,
                (false, false) => 5,
            }
        } else if i == last {
            match (self.half(last - 1) > 0, self.nodes[last].pos > self.nodes[last - 1].pos) {
                (true, _) => 6,
                (false, true) => 1,
                (false, false) => 3,
            }
        } else if self.half(i - 1) > 0 {
            6
        } else {
            2
        }
    }

    fn is_turn(&self, arc: usize) -> bool {
        self.nodes[arc].pos == self.nodes[arc + 1].pos
    }

    /// Turning and cut classes along arc `i`, or `None` for a U-turn.
    pub fn arc_data(&self, s: &Surface, arc: usize) -> Option<(i32, Shift)> {
        if self.is_turn(arc) {
            return None;
        }
        let (from, to) = (self.nodes[arc].pos, self.nodes[arc + 1].pos);
        let east = to > from;
        let upper = self.half(arc) > 0;
        let diff = (self.direction(arc + 1) - self.direction(arc)).rem_euclid(8);
        let turn = if upper != east { diff } else { diff - 8 };
        let cuts = if upper { [0; 3] } else { s.cuts_between(from, to) };
        Some((turn, cuts))
    }

    /// Transport a lift across arc `arc` (forwards) as a normalized lift.
    pub fn forward(&self, s: &Surface, arc: usize, l: Lift) -> Option<Lift> {
        let (turn, cuts) = self.arc_data(s, arc)?;
        let l = l.rotate_to(self.direction(arc));
        Some(s.normalize(Lift { angle: l.angle + turn, shift: add(l.shift, cuts) }))
    }

    pub fn backward(&self, s: &Surface, arc: usize, l: Lift) -> Option<Lift> {
        let (turn, cuts) = self.arc_data(s, arc)?;
        let l = l.rotate_to(self.direction(arc + 1));
        Some(s.normalize(Lift { angle: l.angle - turn, shift: sub(l.shift, cuts) }))
    }

    /// Spreads known lifts along every arc that is not a U-turn, checking
    /// agreement where two known lifts meet.
    pub fn propagate(&mut self, s: &Surface) -> Result<()> {
        for arc in 0..self.last() {
            if let Some(l) = self.nodes[arc].lift {
                if let Some(next) = self.forward(s, arc, l) {
                    self.merge(arc + 1, next)?;
                }
            }
        }
        for arc in (0..self.last()).rev() {
            if let Some(l) = self.nodes[arc + 1].lift {
                if let Some(prev) = self.backward(s, arc, l) {
                    self.merge(arc, prev)?;
                }
            }
        }
        Ok(())
    }

    fn merge(&mut self, i: usize, l: Lift) -> Result<()> {
        match self.nodes[i].lift {
            Some(old) if old != l => Err(Error::Curve(format!("inconsistent gradings at item {i}: {old:?} vs {l:?}"))),
            _ => {
                self.nodes[i].lift = Some(l);
                Ok(())
            }
        }
    }

    pub fn reverse(&mut self) {
        self.first_half = self.half(self.last() - 1);
        self.nodes.reverse();
    }

    /// Removes bigons with the axis and half-bigons at the ends, and puts an
    /// arc between adjacent punctures in the upper half-plane.
    ///
    /// Crossings whose identity in the reduced curve depends on the order of
    /// cancellation lose their trust. A germ freed from a half-bigon takes its
    /// lift from its new neighbour; germs of a flipped arc are rotated along.
    pub fn reduce(&mut self, s: &Surface) {
        let interior: Vec<Node> = self.nodes[1..self.last()].to_vec();
        let left = greedy(&interior, false);
        let right = greedy(&interior, true);
        debug_assert_eq!(left.len(), right.len());
        let mut nodes = vec![self.nodes[0]];
        for (a, b) in left.iter().zip(&right) {
            let mut n = interior[*a];
            n.trusted &= a == b;
            nodes.push(n);
        }
        nodes.push(self.nodes[self.last()]);
        self.nodes = nodes;

        loop {
            let last = self.last();
            if last >= 2 && (self.nodes[1].pos - self.nodes[0].pos).abs() == 1 {
                self.nodes.remove(1);
                self.first_half = -self.first_half;
                let next = self.nodes[1];
                self.nodes[0].lift = next.lift.and_then(|l| self.backward(s, 0, l));
                self.nodes[0].trusted = next.trusted;
                continue;
            }
            if last >= 2 && (self.nodes[last - 1].pos - self.nodes[last].pos).abs() == 1 {
                self.nodes.remove(last - 1);
                let l = self.last();
                let prev = self.nodes[l - 1];
                self.nodes[l].lift = prev.lift.and_then(|p| self.forward(s, l - 1, p));
                self.nodes[l].trusted = prev.trusted;
                continue;
            }
            break;
        }

        if self.nodes.len() == 2 && (self.nodes[1].pos - self.nodes[0].pos).abs() == 2 && self.first_half < 0 {
            let east = self.nodes[1].pos > self.nodes[0].pos;
            let d0 = self.direction(0);
            let d1 = self.direction(1);
            let (r0, r1) = if east { (3, -3) } else { (-3, 3) };
            if let Some(l) = self.nodes[0].lift {
                let l = l.rotate_to(d0);
                self.nodes[0].lift = Some(Lift { angle: l.angle + r0, ..l });
            }
            if let Some(l) = self.nodes[1].lift {
                let l = l.rotate_to(d1);
                self.nodes[1].lift = Some(Lift { angle: l.angle + r1, ..l });
            }
            self.first_half = 1;
        }
    }

    /// Lifts of all nodes of a reduced chain, from the trusted known ones.
    pub fn solve(&self, s: &Surface) -> Result<Vec<Lift>> {
        let anchor = self
            .nodes
            .iter()
            .position(|n| n.trusted && n.lift.is_some())
            .ok_or_else(|| Error::Curve("grading of the image is not determined".into()))?;
        let lifts = self.integrate(s, anchor, self.nodes[anchor].lift.unwrap())?;
        for (i, n) in self.nodes.iter().enumerate() {
            if let (true, Some(l)) = (n.trusted, n.lift) {
                if s.normalize(l) != lifts[i] {
                    return Err(Error::Curve(format!(
                        "grading anchors disagree at item {i}: {:?} vs {:?}",
                        s.normalize(l),
                        lifts[i]
                    )));
                }
            }
        }
        Ok(lifts)
    }

    /// Normalized lifts of every node given the lift at `anchor`.
    pub fn integrate(&self, s: &Surface, anchor: usize, l: Lift) -> Result<Vec<Lift>> {
        let mut out = vec![None; self.nodes.len()];
        out[anchor] = Some(s.normalize(l));
        let turn = || Error::Curve("cannot integrate a grading through a U-turn".into());
        for arc in anchor..self.last() {
            out[arc + 1] = Some(self.forward(s, arc, out[arc].unwrap()).ok_or_else(turn)?);
        }
        for arc in (0..anchor).rev() {
            out[arc] = Some(self.backward(s, arc, out[arc + 1].unwrap()).ok_or_else(turn)?);
        }
        Ok(out.into_iter().map(Option::unwrap).collect())
    }

    /// Replaces the chain by its image under the counter-clockwise half twist
    /// exchanging punctures `k` and `k + 1`. Items inside the twisted region
    /// lose their lifts.
    pub fn half_twist(&mut self, k: i32) {
        let seg = 2 * k + 1;
        let mut nodes = vec![self.nodes[0]];
        for i in 1..self.last() {
            let n = self.nodes[i];
            if n.pos != seg {
                nodes.push(n);
                continue;
            }
            let order = if self.half(i - 1) > 0 { [k - 1, k, k + 1] } else { [k + 1, k, k - 1] };
            nodes.extend(order.iter().map(|&a| Node::crossing(a, None)));
        }
        nodes.push(self.nodes[self.last()]);
        self.nodes = nodes;
        self.twist_start(k);
        self.reverse();
        self.twist_start(k);
        self.reverse();
    }

    fn twist_start(&mut self, k: i32) {
        let p = self.nodes[0].pos / 2;
        if p != k && p != k + 1 {
            return;
        }
        let h = self.first_half;
        let prefix = if h > 0 { k - 1 } else { k + 1 };
        self.nodes[0] = Node::puncture(if p == k { k + 1 } else { k }, None);
        self.nodes.insert(1, Node::crossing(prefix, None));
        self.first_half = -h;
    }

    /// Reflection in the axis.
    pub fn mirror(&mut self) {
        self.first_half = -self.first_half;
    }
}

/// Indices of the crossings surviving free cancellation of equal neighbours,
/// scanning from the left (or from the right).
fn greedy(items: &[Node], from_right: bool) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::new();
    let order: Vec<usize> = if from_right { (0..items.len()).rev().collect() } else { (0..items.len()).collect() };
    for i in order {
        match stack.last() {
            Some(&top) if items[top].pos == items[i].pos => {
                stack.pop();
            }
            _ => stack.push(i),
        }
    }
    if from_right {
        stack.reverse();
    }
    stack
}

/// A point where the curve crosses one of the vertical walls through the
/// segment midpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WallHit {
    /// One more than the segment the wall passes through.
    pub wall: usize,
    pub lift: Lift,
    /// Whether the curve continues east of the wall.
    pub exits_east: bool,
}

/// Wall crossings of a reduced chain with known lifts, in order along the curve.
pub fn wall_hits(s: &Surface, chain: &Chain, lifts: &[Lift]) -> Vec<WallHit> {
    let mut out = Vec::new();
    let wall_of = |pos: i32| -> Option<usize> {
        let seg = (pos - 1) / 2;
        (pos % 2 != 0 && !s.is_ray(seg)).then(|| seg as usize + 1)
    };
    for i in 0..chain.last() {
        if i > 0 {
            let pos = chain.nodes[i].pos;
            if let Some(wall) = wall_of(pos) {
                let before = chain.nodes[i - 1].pos - pos;
                let after = chain.nodes[i + 1].pos - pos;
                if before.signum() * after.signum() < 0 {
                    let dir = chain.direction(i);
                    let east = after > 0;
                    let tilt = if (dir == 6) == east { 1 } else { -1 };
                    let l = lifts[i].rotate_to(dir);
                    out.push(WallHit {
                        wall,
                        lift: s.normalize(Lift { angle: l.angle + tilt, ..l }),
                        exits_east: east,
                    });
                }
            }
        }
        let (from, to) = (chain.nodes[i].pos, chain.nodes[i + 1].pos);
        let (turn, _) = chain.arc_data(s, i).expect("reduced chains have no U-turns");
        let start = lifts[i].rotate_to(chain.direction(i));
        let mid = if turn > 0 { (start.angle.div_euclid(4) + 1) * 4 } else { (start.angle - 1).div_euclid(4) * 4 };
        debug_assert!(if turn > 0 { mid < start.angle + turn } else { mid > start.angle + turn });
        let east = to > from;
        let walls: Vec<i32> = if east {
            ((from + 1)..to).filter(|p| p % 2 != 0).collect()
        } else {
            ((to + 1)..from).rev().filter(|p| p % 2 != 0).collect()
        };
        for w in walls {
            let Some(wall) = wall_of(w) else { continue };
            let cuts = if chain.half(i) > 0 { [0; 3] } else { s.cuts_between(from, w) };
            out.push(WallHit {
                wall,
                lift: s.normalize(Lift { angle: mid, shift: start.shift }.add_shift(cuts)),
                exits_east: east,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(first_half: i8, start: i32, segs: &[i32], end: i32) -> Chain {
        let mut nodes = vec![Node::puncture(start, None)];
        nodes.extend(segs.iter().map(|&a| Node::crossing(a, None)));
        nodes.push(Node::puncture(end, None));
        Chain { first_half, nodes }
    }

    fn segs(c: &Chain) -> Vec<i32> {
        c.nodes[1..c.last()].iter().map(Node::segment).collect()
    }

    #[test]
    fn reduction_cancels_bigons_and_half_bigons() {
        let s = Surface::type_b(4);
        let mut c = chain(1, 1, &[2, 3, 3, 2, -1], 3);
        c.reduce(&s);
        assert_eq!(segs(&c), vec![-1]);
        let mut c = chain(1, 1, &[1, 3], 4);
        c.reduce(&s);
        assert_eq!(c.first_half, -1);
        assert_eq!(segs(&c), Vec::<i32>::new());
    }

    #[test]
    fn triple_run_loses_trust() {
        let mut c = chain(1, 0, &[2, 2, 2], 4);
        c.reduce(&Surface::type_b(4));
        assert_eq!(segs(&c), vec![2]);
        assert!(!c.nodes[1].trusted);
    }

    #[test]
    fn upper_arc_turns_clockwise_going_east() {
        let s = Surface::type_b(3);
        let c = chain(1, 1, &[], 2);
        assert_eq!(c.arc_data(&s, 0), Some((-4, [0; 3])));
        let c = chain(-1, 1, &[], 3);
        assert_eq!(c.arc_data(&s, 0), Some((2, [-2, 1, 0])));
    }

    #[test]
    fn half_twist_of_vertical_crossing() {
        let mut c = chain(1, 0, &[1], 3);
        c.half_twist(1);
        assert_eq!(segs(&c), vec![0, 1, 2]);
    }

    #[test]
    fn endpoint_index_of_adjacent_segments() {
        let s = Surface::type_b(3);
        // axis segment west of puncture 2 leaves it heading west; the upper
        // arc east of it leaves heading up
        let west = Lift::new(4, [-2, 0, 0]);
        let up = Lift::new(2, [-2, 0, 0]);
        assert_eq!(endpoint_index(&s, 2, west, up), [0, 0, 0]);
        let east = Lift::new(0, [-2, 0, 0]);
        assert_eq!(endpoint_index(&s, 2, east, up), [0, 1, 0]);
    }
}
