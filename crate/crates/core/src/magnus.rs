//! Standard Magnus expansion over GF(2), truncated after degree 2.
//!
//! `theta(gamma_i) = 1 + C_i`, hence `theta(gamma_i^-1) = 1 + C_i + C_i (x) C_i`
//! in characteristic 2. A word is evaluated by streaming its letters through
//! a running jet.

use crate::error::Result;
use crate::gf2::{BitVec, Subspace};
use crate::tensor::{check_genus, omega, HClass, Tensor};
use crate::word::Word;

/// The degree 1 and degree 2 parts of `theta(w) - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet {
    pub deg1: HClass,
    pub deg2: Tensor,
}

impl Jet {
    pub fn unit(genus: usize) -> Self {
        Jet {
            deg1: HClass::zero(genus),
            deg2: Tensor::zero(genus, 2).expect("degree 2"),
        }
    }

    pub fn genus(&self) -> usize {
        self.deg1.genus()
    }

    /// `(a1, a2) * (b1, b2) = (a1 + b1, a2 + b2 + a1 (x) b1)`.
    pub fn mul(&self, other: &Jet) -> Result<Jet> {
        check_genus(self.genus(), other.genus())?;
        let mut deg2 = self.deg2.add(&other.deg2)?;
        deg2.add_assign(&self.deg1.to_tensor().outer(&other.deg1.to_tensor())?)?;
        Ok(Jet {
            deg1: self.deg1.add(&other.deg1)?,
            deg2,
        })
    }

    /// Right-multiplies by the jet of a single letter.
    #[inline]
    fn push_letter(&mut self, letter: i32) {
        let k = letter.unsigned_abs() as usize - 1;
        for i in self.deg1.coords().ones() {
            self.deg2.flip0(&[i, k]);
        }
        if letter < 0 {
            self.deg2.flip0(&[k, k]);
        }
        self.deg1.flip0(k);
    }
}

/// Degree `<= 2` Magnus jet of a word.
pub fn theta2(w: &Word) -> Jet {
    let mut jet = Jet::unit(w.genus());
    for &l in w.letters() {
        jet.push_letter(l);
    }
    jet
}

/// `<omega>` inside `H^{(x)2}`.
pub fn omega_span(genus: usize) -> Result<Subspace> {
    let w = omega(genus)?;
    Subspace::span(genus * genus, [w.coords()])
}

/// Equality of `theta2` values of `u` and `v` in `H^{(x)2} / <omega>`, together
/// with equal homology classes.
pub fn theta2_bar_eq(u: &Word, v: &Word) -> Result<bool> {
    check_genus(u.genus(), v.genus())?;
    let (a, b) = (theta2(u), theta2(v));
    if a.deg1 != b.deg1 {
        return Ok(false);
    }
    let diff: BitVec = a.deg2.add(&b.deg2)?.into_coords();
    omega_span(u.genus())?.contains(&diff)
}
