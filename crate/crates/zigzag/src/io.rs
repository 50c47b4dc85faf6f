//! JSON forms of algebras and complexes. Algebra elements are written in path
//! notation (`"(1|2)(ie2)"`, `"-1/2*X1 + e1"`), as [`ZigzagAlgebra::render`] prints them.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{build_type_a, build_type_b, AlgebraType, ZigzagAlgebra};
use crate::arith::{Field, GaussRational, Rational};
use crate::complex::{ProjComplex, ProjGenerator};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraRef {
    #[serde(rename = "type")]
    pub kind: String,
    /// Number of vertices.
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub id: usize,
    pub vertex: usize,
    pub r: i32,
    pub s: i32,
    pub t: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub from: usize,
    pub to: usize,
    pub element: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub algebra: AlgebraRef,
    pub generators: Vec<GeneratorJson>,
    pub differential: Vec<EntryJson>,
}

/// A complex over either algebra, as read from JSON.
#[derive(Clone, Debug)]
pub enum AnyComplex {
    A(ProjComplex<GaussRational>),
    B(ProjComplex<Rational>),
}

impl<F: Field> From<&ProjComplex<F>> for ComplexJson {
    fn from(c: &ProjComplex<F>) -> Self {
        let alg = c.algebra();
        ComplexJson {
            algebra: AlgebraRef { kind: alg.kind().label().into(), rank: alg.vertices() },
            generators: c
                .generators()
                .iter()
                .enumerate()
                .map(|(id, g)| GeneratorJson { id, vertex: g.vertex, r: g.r, s: g.s, t: g.t })
                .collect(),
            differential: c.entries().map(|(&(from, to), x)| EntryJson { from, to, element: alg.render(x) }).collect(),
        }
    }
}

impl ComplexJson {
    pub fn kind(&self) -> Result<AlgebraType> {
        self.algebra.kind.parse()
    }

    fn build<F: Field>(&self, alg: Arc<ZigzagAlgebra<F>>) -> Result<ProjComplex<F>> {
        let mut c = ProjComplex::new(alg.clone());
        for (k, g) in self.generators.iter().enumerate() {
            if g.id != k {
                return Err(Error::Parse(format!("generator ids must be 0, 1, …; found {} at position {k}", g.id)));
            }
            alg.check_vertex(g.vertex)?;
            c.add_generator(ProjGenerator::new(g.vertex, g.r, g.s, g.t));
        }
        for e in &self.differential {
            if e.from >= c.len() || e.to >= c.len() {
                return Err(Error::Parse(format!("entry {} → {} names a missing generator", e.from, e.to)));
            }
            c.add_entry(e.from, e.to, alg.parse_element(&e.element)?);
        }
        let problems = c.check();
        if !problems.is_empty() {
            return Err(Error::Complex(problems.join("; ")));
        }
        Ok(c)
    }

    pub fn to_type_b(&self) -> Result<ProjComplex<Rational>> {
        match self.kind()? {
            AlgebraType::B => self.build(build_type_b(self.algebra.rank)?),
            AlgebraType::A => Err(Error::AlgebraMismatch("expected a type B complex".into())),
        }
    }

    pub fn to_type_a(&self) -> Result<ProjComplex<GaussRational>> {
        match self.kind()? {
            AlgebraType::A => self.build(build_type_a(self.algebra.rank)?),
            AlgebraType::B => Err(Error::AlgebraMismatch("expected a type A complex".into())),
        }
    }

    pub fn to_complex(&self) -> Result<AnyComplex> {
        Ok(match self.kind()? {
            AlgebraType::A => AnyComplex::A(self.to_type_a()?),
            AlgebraType::B => AnyComplex::B(self.to_type_b()?),
        })
    }
}

pub fn complex_from_str(s: &str) -> Result<AnyComplex> {
    let j: ComplexJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    j.to_complex()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisJson {
    pub index: usize,
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub degree: i32,
    pub parity: u8,
    pub length: u8,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductJson {
    pub left: String,
    pub right: String,
    pub result: String,
}

/// Basis, degrees and every nonzero product of two basis paths.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraDump {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub dim: usize,
    pub basis: Vec<BasisJson>,
    pub products: Vec<ProductJson>,
}

impl<F: Field> From<&ZigzagAlgebra<F>> for AlgebraDump {
    fn from(alg: &ZigzagAlgebra<F>) -> Self {
        let basis = alg
            .basis()
            .iter()
            .enumerate()
            .map(|(index, p)| BasisJson {
                index,
                name: p.name.clone(),
                source: p.source,
                target: p.target,
                degree: p.degree,
                parity: p.z2,
                length: p.length,
            })
            .collect();
        let mut products = Vec::new();
        for (a, pa) in alg.basis().iter().enumerate() {
            for (b, pb) in alg.basis().iter().enumerate() {
                if let Some((p, neg)) = alg.mul_basis(a, b) {
                    let name = &alg.path(p).name;
                    let result = if neg { format!("-{name}") } else { name.clone() };
                    products.push(ProductJson { left: pa.name.clone(), right: pb.name.clone(), result });
                }
            }
        }
        AlgebraDump { kind: alg.kind().label().into(), rank: alg.vertices(), dim: alg.dim(), basis, products }
    }
}
