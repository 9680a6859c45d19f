//! Computations on the level 2 mapping class group of the closed
//! non-orientable surface `N_g`: free-group words and substitution
//! endomorphisms, the degree 2 Magnus expansion over GF(2), tensor powers of
//! `H = H_1(N_g; Z/2)`, the mod 2 Johnson homomorphism `tau_1`, and the rank
//! computations that pin down the abelianization.
//!
//! Index conventions: `gamma_1..gamma_g` and `C_1..C_g` are 1-based in every
//! public constructor; a degree `n` tensor with indices `(i, j, k)` sits at
//! flat coordinate `(i-1) g^2 + (j-1) g + (k-1)`.

pub mod catalog;
pub mod error;
pub mod formulas;
pub mod gf2;
pub mod homology;
pub mod johnson;
pub mod magnus;
pub mod tensor;
pub mod verify;
pub mod word;

pub use catalog::{parse_expr, Factor, GeneratingSet, McgExpr, McgGen};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec, Subspace};
pub use homology::HomologyAction;
pub use johnson::{tau1, Tau1Engine, Tau1Hom, Tau1Tensor};
pub use magnus::{theta2, Jet};
pub use tensor::{HClass, InvariantBases, Tensor};
pub use verify::{Check, Report, Status, Suite};
pub use word::{SubstEndo, Word};
