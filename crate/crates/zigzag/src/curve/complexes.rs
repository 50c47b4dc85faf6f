//! Complexes of projective modules attached to graded curves: one generator per
//! wall crossing, differentials along the pieces of curve between crossings.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::algebra::{build_type_a, build_type_b, AlgebraElement, AlgebraType, ZigzagAlgebra};
use crate::arith::{Field, GaussRational, Rational};
use crate::complex::{ProjComplex, ProjGenerator};
use crate::error::{Error, Result};

use super::{BigradedMulticurve, Crossing, Curve};

/// Consecutive crossings `(a, b)` and the index of the region between them
/// (region `j` lies between walls `j` and `j + 1`).
fn pieces(xs: &[Crossing]) -> Vec<(usize, usize, usize)> {
    xs.windows(2)
        .enumerate()
        .map(|(i, w)| {
            let region = if w[0].wall == w[1].wall {
                if w[0].exits_east {
                    w[0].wall
                } else {
                    w[0].wall - 1
                }
            } else {
                w[0].wall.min(w[1].wall)
            };
            (i, i + 1, region)
        })
        .collect()
}

/// The unmodified differential entry for an essential piece, oriented so the
/// cohomological degree goes up.
fn entry<F: Field>(
    alg: &ZigzagAlgebra<F>,
    xs: &[Crossing],
    a: usize,
    b: usize,
) -> Result<Option<(usize, usize, AlgebraElement<F>)>> {
    let (from, to) = if xs[b].mu[0] == xs[a].mu[0] + 1 {
        (a, b)
    } else if xs[a].mu[0] == xs[b].mu[0] + 1 {
        (b, a)
    } else {
        return Ok(None);
    };
    let (u, v) = (xs[from].wall, xs[to].wall);
    let name = if u == v { format!("X{u}") } else { format!("({u}|{v})") };
    Ok(Some((from, to, alg.element(&name)?)))
}

fn add_crossings<F: Field>(c: &mut ProjComplex<F>, xs: &[Crossing]) -> usize {
    let off = c.len();
    for x in xs {
        c.add_generator(ProjGenerator::new(x.wall, x.mu[0], x.mu[1], x.mu[2].rem_euclid(2) as u8));
    }
    off
}

/// The type B complex of a trigraded curve.
pub fn curve_complex(curve: &Curve) -> Result<ProjComplex<Rational>> {
    if curve.kind() != AlgebraType::B {
        return Err(Error::Invalid("curve_complex takes a type B curve".into()));
    }
    let n = curve.rank();
    let alg = build_type_b(n)?;
    let xs = curve.crossings();
    let mut out = ProjComplex::new(alg.clone());
    add_crossings(&mut out, &xs);

    let mut entries: BTreeMap<(usize, usize), AlgebraElement<Rational>> = BTreeMap::new();
    let mut partner: HashMap<usize, usize> = HashMap::new();
    let mut across: HashMap<usize, usize> = HashMap::new();
    for (a, b, region) in pieces(&xs) {
        if region == 0 {
            partner.insert(a, b);
            partner.insert(b, a);
            continue;
        }
        if region == 1 {
            for (y, z) in [(a, b), (b, a)] {
                if xs[y].wall == 1 {
                    across.insert(y, z);
                }
            }
        }
        if let Some((from, to, x)) = entry(&alg, &xs, a, b)? {
            entries.insert((from, to), x);
        }
    }

    // Each 1-crossing paired through region 0 inherits a twisted copy of the
    // maps along the region-1 piece of its partner.
    let mut extra = Vec::new();
    for (&y, &z) in &across {
        let Some(&y2) = partner.get(&y) else { continue };
        if xs[z].wall == 2 {
            if xs[y].mu[0] == xs[z].mu[0] + 1 {
                extra.push((z, y2, alg.element("(ie2)(2|1)")?.neg()));
            } else {
                extra.push((y2, z, alg.element("(1|2)(ie2)")?));
            }
        } else if xs[z].mu[0] == xs[y].mu[0] + 1 {
            if let Some(&z2) = partner.get(&z) {
                extra.push((y2, z2, alg.element("X1")?));
            }
        }
    }
    for (from, to, x) in extra {
        entries.insert((from, to), x);
    }
    for ((from, to), x) in entries {
        out.add_entry(from, to, x);
    }
    Ok(out)
}

/// The type A complex of a bigraded multicurve: the direct sum over components.
pub fn multicurve_complex(m: &BigradedMulticurve) -> Result<ProjComplex<GaussRational>> {
    let alg: Arc<_> = build_type_a(2 * m.rank() - 1)?;
    let mut out = ProjComplex::new(alg.clone());
    for comp in m.components() {
        let xs = comp.crossings();
        let off = add_crossings(&mut out, &xs);
        for (a, b, _) in pieces(&xs) {
            if let Some((from, to, x)) = entry(&alg, &xs, a, b)? {
                out.add_entry(off + from, off + to, x);
            }
        }
    }
    Ok(out)
}

/// Parity of the total `⟨·⟩`-shift over the generators at vertex 1.
pub fn sgn(c: &ProjComplex<Rational>) -> u8 {
    (c.generators().iter().filter(|g| g.vertex == 1).map(|g| g.t as u32).sum::<u32>() % 2) as u8
}
