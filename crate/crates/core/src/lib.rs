//! Curve neighborhoods of Schubert varieties in the affine flag manifold of
//! type `A_{n-1}^(1)`, computed two independent ways: closed-form results
//! over the affine Weyl group, and an exhaustive bounded-budget chain search
//! over the moment graph that verifies them.

pub mod affine_weyl;
pub mod error;
pub mod neighborhoods;
pub mod oracle;
pub mod roots;
pub mod z_elem;

pub use affine_weyl::AffinePerm;
pub use error::{Error, Result};
pub use neighborhoods::NbhdResult;
pub use roots::{Degree, FiniteRoot, PosRealRoot};
pub use z_elem::ZFactorization;
