//! Exact computation in the q-shuffle algebra, the positive part of quantum
//! affine sl2 and its alternating central extension, over Q(q).

pub mod algebra;
pub mod error;
pub mod freeword;
pub mod linalg;
pub mod lincomb;
pub mod parse;
pub mod polyz;
pub mod rewrite;
pub mod scalar;
pub mod series;
pub mod ucal;
pub mod uqp;

pub use algebra::{QAlgebra, Ring};
pub use error::{Error, Result};
pub use freeword::{Bidegree, FreeElement, Letter, Word};
pub use lincomb::LinComb;
pub use scalar::RationalFunction;
