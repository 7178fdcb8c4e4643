//! Diagrams for algebraic connections on the affine line.
//!
//! The formal data of a connection (an irregular class at infinity with its
//! formal monodromy classes, plus tame poles on the affine line) determines
//! a diagram with a symmetric, possibly negative, edge matrix, a Cartan
//! matrix `C = 2·Id − B` and a dimension vector `d`. The moduli space of the
//! connection then has dimension `2 − (d, d)` whenever it is nonempty.
//!
//! ```
//! use wilddiag::{compile, io::parse};
//!
//! let input = parse("infinity { factor \"x^(5/2)\" mult 1 }").unwrap();
//! let c = compile(&input).unwrap();
//! assert_eq!(c.cartan.cartan, vec![vec![0]]);
//! assert_eq!(c.cartan.dim_b, 2);
//! ```

pub mod circles;
pub mod congruence;
pub mod cyclotomic;
pub mod diagram;
pub mod error;
pub mod io;
pub mod legs;

pub use circles::{hom_class, Circle, ExpFactor, Exponent, IrregularClass};
pub use cyclotomic::{cyclotomic_poly, CycloNumber, Rational};
pub use diagram::{
    add_tame_pole, build_diagram, cartan, compile, core_diagram, dim_oracle, glue_formal_legs,
    CartanData, Compiled, Diagram, FormalComponent, Node, NodeKind, PoleLocation, ProblemInput,
    TamePole,
};
pub use error::{Error, Result};
pub use legs::JordanClass;
