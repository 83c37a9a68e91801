//! Exact computation with ambiskew polynomial algebras over Hopf bases:
//! normal-form arithmetic, Hopf-structure verification, coradical degrees
//! and ring-theoretic invariants.

pub mod ambicore;
pub mod basehopf;
pub mod coradical;
pub mod corpus;
pub mod error;
pub mod exprparse;
pub mod hopfstruct;
pub mod linear;
pub mod properties;
pub mod sample;
pub mod scalar;
pub mod session;

pub use ambicore::{AmbiElement, AmbiKey, AmbiskewAlgebra, TensorElement};
pub use basehopf::{BaseAutomorphism, BaseDescriptor, BaseHopf, Character, Dim};
pub use error::{Error, Result};
pub use exprparse::{parse_expr, parse_spec, Expr, FieldSpec, SpecDocument};
pub use hopfstruct::{CheckReport, ExtensionData, GeneralPresentation, HopfAmbiskew};
pub use linear::{BaseElement, BaseTensor, LinComb, Monomial};
pub use scalar::{Field, Order, Scalar};
pub use session::{Overrides, Session};
