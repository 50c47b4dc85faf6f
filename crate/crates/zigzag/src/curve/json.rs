//! JSON form of curves. The `axis` and `lift` fields determine the curve; the
//! crossing and segment lists are derived data for readers.

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraType;
use crate::error::{Error, Result};

use super::engine::Lift;
use super::Curve;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub wall: usize,
    pub mu: [i32; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentJson {
    pub region: usize,
    /// `end` (from a puncture to a wall), `pass` (between adjacent walls) or
    /// `turn` (leaving and returning to the same wall).
    #[serde(rename = "type")]
    pub kind: String,
    pub shift: [i32; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftJson {
    pub angle: i32,
    pub shift: [i32; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisJson {
    /// `1` if the curve leaves its first puncture into the upper half-plane.
    pub half: i8,
    pub segments: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub punctures: usize,
    pub endpoints: [usize; 2],
    pub crossings: Vec<CrossingJson>,
    pub segments: Vec<SegmentJson>,
    pub axis: AxisJson,
    pub lift: LiftJson,
}

impl CurveJson {
    pub fn from_curve(c: &Curve) -> Self {
        let xs = c.crossings();
        let (start, end) = c.endpoints();
        let mut segments = Vec::new();
        match (xs.first(), xs.last()) {
            (Some(first), Some(last)) => {
                segments.push(SegmentJson { region: start, kind: "end".into(), shift: first.mu });
                for w in xs.windows(2) {
                    let (kind, region) = if w[0].wall == w[1].wall {
                        ("turn", if w[0].exits_east { w[0].wall } else { w[0].wall - 1 })
                    } else {
                        ("pass", w[0].wall.min(w[1].wall))
                    };
                    segments.push(SegmentJson { region, kind: kind.into(), shift: w[0].mu });
                }
                segments.push(SegmentJson { region: end, kind: "end".into(), shift: last.mu });
            }
            _ => segments.push(SegmentJson { region: start, kind: "end".into(), shift: [0; 3] }),
        }
        let l = c.start_lift();
        CurveJson {
            kind: c.kind().label().into(),
            punctures: c.surface().punctures,
            endpoints: [start, end],
            crossings: xs.iter().map(|x| CrossingJson { wall: x.wall, mu: x.mu }).collect(),
            segments,
            axis: AxisJson { half: c.first_half(), segments: c.axis_crossings().to_vec() },
            lift: LiftJson { angle: l.angle, shift: l.shift },
        }
    }

    pub fn to_curve(&self) -> Result<Curve> {
        let kind = match self.kind.as_str() {
            "a" => AlgebraType::A,
            "b" => AlgebraType::B,
            other => return Err(Error::Parse(format!("unknown curve type `{other}`"))),
        };
        Curve::from_axis(
            kind,
            self.punctures,
            self.endpoints[0],
            self.axis.half,
            self.axis.segments.clone(),
            self.endpoints[1],
            Lift::new(self.lift.angle, self.lift.shift),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let c = Curve::basic(3, 2).unwrap().act(1).unwrap().act(-3).unwrap();
        let j = CurveJson::from_curve(&c);
        let text = serde_json::to_string(&j).unwrap();
        let back: CurveJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_curve().unwrap(), c);
    }
}
