//! The KLR algebra `H_alpha`: straightening to the monomial basis,
//! homogeneous cuspidal representations, proper standard modules and their
//! contravariant forms.

pub mod algebra;
pub mod homog;
pub mod linalg;
pub mod perm;
pub mod relations;
pub mod standard;

pub use algebra::{Generator, KlrAlgebra, KlrElement, Monomial, SignConvention};
pub use homog::HomogRep;
pub use linalg::rank_over;
pub use standard::{BasisVector, StandardModule, StandardModuleElement};
