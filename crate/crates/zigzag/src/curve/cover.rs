//! Lifting type B curves through the double cover `w ↦ w²` branched at the
//! fixed puncture.
//!
//! Puncture `a ≥ 1` has preimages `±√a`; segment `a ≥ 0` lifts to a segment on
//! each side of the origin, while the ray left of puncture `0` lifts to the
//! imaginary axis, so crossing it swaps the side of the origin the lift is on.

use crate::algebra::AlgebraType;
use crate::arith::{GradedLaurent, GradingTag};
use crate::error::{Error, Result};

use super::engine::{Chain, Lift, Node, Surface};
use super::{pair_with_segment, Curve};

/// A bigraded multicurve on the type A disc with `2n` punctures.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BigradedMulticurve {
    rank: usize,
    components: Vec<Curve>,
}

impl BigradedMulticurve {
    pub fn new(rank: usize, mut components: Vec<Curve>) -> Result<Self> {
        for c in &components {
            if c.kind() != AlgebraType::A || c.surface().punctures != 2 * rank {
                return Err(Error::Invalid(format!(
                    "component is not a curve on the disc with {} punctures",
                    2 * rank
                )));
            }
        }
        components.sort_by(|a, b| (a.start, a.end, &a.segments).cmp(&(b.start, b.end, &b.segments)));
        Ok(BigradedMulticurve { rank, components })
    }

    /// The type B rank `n`; the type A side has `2n − 1` vertices.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[Curve] {
        &self.components
    }

    /// Applies a type A braid word to every component.
    pub fn act_word(&self, w: &crate::functor::BraidWord) -> Result<Self> {
        let comps = self.components.iter().map(|c| c.act_word(w)).collect::<Result<Vec<_>>>()?;
        Self::new(self.rank, comps)
    }
}

/// Type A grading at the preimage on `side` of a point of type B segment `seg`.
fn lift_grading(l: Lift, seg: i32, side: i8) -> Lift {
    let g = l.shift;
    if side > 0 {
        Lift::new(l.angle, [g[0], g[1], 0])
    } else {
        Lift::new(l.angle, [g[0] + 2 * seg, g[1] - seg, 0])
    }
}

fn lifted_puncture(n: i32, p: i32, side: i8) -> i32 {
    if side > 0 {
        n + p - 1
    } else {
        n - p
    }
}

fn lifted_segment(n: i32, seg: i32, side: i8) -> i32 {
    if side > 0 {
        n + seg - 1
    } else {
        n - seg - 1
    }
}

/// The lift of nodes `1..` of a type B chain that starts on `side`: type A
/// crossings with their gradings, the lifted end puncture, and the type A
/// half-plane of the first and last arcs.
fn sheet(n: i32, chain: &Chain, lifts: &[Option<Lift>], side0: i8) -> (Vec<Node>, i8, i8) {
    let mut side = side0;
    let mut out = Vec::new();
    for i in 1..chain.last() {
        let seg = chain.nodes[i].segment();
        if seg < 0 {
            side = -side;
            continue;
        }
        let l = lifts[i].map(|l| lift_grading(l, seg, side));
        out.push(Node::crossing(lifted_segment(n, seg, side), l));
    }
    let end = chain.nodes[chain.last()].pos / 2;
    out.push(Node::puncture(lifted_puncture(n, end, side), None));
    (out, chain.first_half * side0, chain.half(chain.last() - 1) * side)
}

fn finish(sa: &Surface, mut chain: Chain) -> Result<Curve> {
    chain.propagate(sa)?;
    chain.reduce(sa);
    let lifts = chain.solve(sa)?;
    Ok(Curve::from_chain(*sa, chain, &lifts))
}

/// The lift of a trigraded curve: one component through the origin if the
/// curve ends at puncture 0, otherwise two components exchanged by `w ↦ −w`.
/// The `ℤ/2` part of the grading is forgotten.
pub fn lift(c: &Curve) -> Result<BigradedMulticurve> {
    if c.kind() != AlgebraType::B {
        return Err(Error::Invalid("only type B curves can be lifted".into()));
    }
    let sb = c.surface();
    let n = c.rank() as i32;
    let sa = Surface::type_a(2 * n as usize);
    let mut chain = c.chain();
    let known = c.lifts();

    if c.start != 0 {
        // Detour through a half-bigon on the segment east of the start puncture
        // so that every sheet carries a crossing with a known grading.
        let a = c.start as i32;
        let mut nodes = vec![Node::puncture(a, None), Node::crossing(a, None)];
        nodes.extend(chain.nodes[1..].iter().zip(&known[1..]).map(|(nd, l)| Node { lift: Some(*l), ..*nd }));
        chain = Chain { first_half: -chain.first_half, nodes };
        chain.propagate(&sb)?;
        let lifts: Vec<Option<Lift>> = chain.nodes.iter().map(|nd| nd.lift).collect();
        let mut comps = Vec::new();
        for side in [1i8, -1] {
            let (rest, first, _) = sheet(n, &chain, &lifts, side);
            let mut nodes = vec![Node::puncture(lifted_puncture(n, a, side), None)];
            nodes.extend(rest);
            comps.push(finish(&sa, Chain { first_half: first, nodes })?);
        }
        return BigradedMulticurve::new(n as usize, comps);
    }

    let lifts: Vec<Option<Lift>> = known.iter().copied().map(Some).collect();
    let (pos, _, _) = sheet(n, &chain, &lifts, 1);
    let (mut neg, _, neg_last) = sheet(n, &chain, &lifts, -1);
    // The two sheets meet at the origin, which lies on the middle segment.
    let germ = known[0].rotate_to(chain.direction(0));
    let germ = if germ.angle == 7 { germ.rotate_to(-1) } else { germ };
    let origin = match germ.angle {
        -1 => Lift::new(-2, [germ.shift[0], germ.shift[1], 0]),
        _ => Lift::new(2, [germ.shift[0], germ.shift[1], 0]),
    };
    neg.reverse();
    let mut nodes = neg;
    nodes.push(Node::crossing(n - 1, Some(sa.normalize(origin))));
    nodes.extend(pos);
    finish(&sa, Chain { first_half: neg_last, nodes }).and_then(|comp| BigradedMulticurve::new(n as usize, vec![comp]))
}

/// Bigraded intersection number; the left multicurve must consist of basic
/// segments (as lifts of basic curves do).
pub fn bigraded_intersect(left: &BigradedMulticurve, right: &BigradedMulticurve) -> Result<GradedLaurent> {
    if left.rank != right.rank {
        return Err(Error::Invalid("multicurves on different discs".into()));
    }
    let mut out = GradedLaurent::zero(GradingTag::Bi);
    for l in &left.components {
        if l.is_segment().is_none() {
            return Err(Error::Invalid("left multicurve must consist of basic segments".into()));
        }
        for r in &right.components {
            out = &out + &pair_with_segment(l, r);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_curves_lift_to_basic_segments() {
        let n = 3;
        let m = lift(&Curve::basic(n, 1).unwrap()).unwrap();
        assert_eq!(m.components(), &[Curve::basic_a(n, n).unwrap()]);
        for j in 2..=n {
            let m = lift(&Curve::basic(n, j).unwrap()).unwrap();
            let expect = [Curve::basic_a(n, n - j + 1).unwrap(), Curve::basic_a(n, n + j - 1).unwrap()];
            assert_eq!(m.components(), &expect[..]);
        }
    }

    #[test]
    fn lifted_basic_pairings() {
        let n = 3;
        let bi = |s: &str| GradedLaurent::parse(GradingTag::Bi, s).unwrap();
        for i in 1..2 * n {
            let r = BigradedMulticurve::new(n, vec![Curve::basic_a(n, i).unwrap()]).unwrap();
            assert_eq!(bigraded_intersect(&r, &r).unwrap(), bi("1 + q2"));
        }
    }
}
