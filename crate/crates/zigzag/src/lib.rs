//! Exact computations with the type A and type B zigzag algebras, their
//! categorical braid group actions on complexes of projective modules, and the
//! trigraded curve calculus on the punctured disc that models them.

pub mod algebra;
pub mod arith;
pub mod complex;
pub mod curve;
pub mod error;
pub mod extend;
pub mod functor;
pub mod hom;
pub mod io;
pub mod k0;
pub mod linalg;
pub mod verify;

pub use algebra::{AlgebraA, AlgebraB, AlgebraElement, AlgebraType, Complexification, GradingMode, ZigzagAlgebra};
pub use arith::{Field, GaussRational, GradedLaurent, GradingTag, Rational};
pub use complex::{chain_map_space, cone, is_isomorphic, ChainMap, Isomorphism, ProjComplex, ProjGenerator};
pub use curve::{
    bigraded_intersect, curve_complex, geometric_intersect, intersect, intersect_basic, intersect_wall, lift,
    multicurve_complex, sgn, BigradedMulticurve, Crossing, Curve, CurveJson, GradingShift, TrigradedCurve,
};
pub use error::{Error, Result};
pub use extend::extend;
pub use functor::{apply_cone_functor, apply_generator, apply_tl, apply_word, type_a_word, BraidWord};
pub use hom::{hom_complex, poincare, HomComplex};
pub use io::{AlgebraDump, AnyComplex, ComplexJson};
pub use k0::{check_decat_square, k0_class, rep_matrix, word_matrix, K0Vector, RepMatrix};
