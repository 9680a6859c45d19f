//! `H_1(N_g; Z/2)` with its intersection form and the homology action of
//! substitution endomorphisms.
//!
//! The curves `gamma_i` are one-sided and pairwise disjoint away from the
//! basepoint, so the mod 2 intersection form is the identity matrix in the
//! C-basis and `w1` is the all-ones functional.

use std::fmt;

use crate::error::Result;
use crate::gf2::{kernel_of_map, BitMatrix, BitVec, Subspace};
use crate::tensor::{check_genus, HClass};
use crate::word::{SubstEndo, Word};

/// Mod 2 homology class of a word: parity of each generator's occurrences.
pub fn homology_class(w: &Word) -> HClass {
    let mut c = HClass::zero(w.genus());
    for &l in w.letters() {
        c.flip0(l.unsigned_abs() as usize - 1);
    }
    c
}

pub fn intersection_form(x: &HClass, y: &HClass) -> Result<bool> {
    check_genus(x.genus(), y.genus())?;
    x.coords().dot(y.coords())
}

pub fn w1(x: &HClass) -> bool {
    x.w1()
}

/// `H_even = Ker w1`.
pub fn h_even(genus: usize) -> Result<Subspace> {
    let domain: Vec<BitVec> = (0..genus).map(|i| BitVec::unit(genus, i)).collect();
    let images: Vec<BitVec> = (0..genus).map(|_| BitVec::from_bools(&[true])).collect();
    kernel_of_map(&domain, &images)
}

/// Matrix of the induced map on `H`; column `i` is the class of the image of
/// `gamma_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyAction {
    genus: usize,
    matrix: BitMatrix,
}

impl HomologyAction {
    pub fn of(e: &SubstEndo) -> Self {
        let g = e.genus();
        let columns: Vec<BitVec> = e
            .images()
            .iter()
            .map(|w| homology_class(w).coords().clone())
            .collect();
        let as_rows = BitMatrix::new(g, columns).expect("classes have length g");
        HomologyAction {
            genus: g,
            matrix: as_rows.transpose(),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == BitMatrix::identity(self.genus)
    }

    /// `M^T Q M = Q` with `Q` the identity.
    pub fn preserves_form(&self) -> bool {
        self.matrix
            .transpose()
            .mul(&self.matrix)
            .map(|p| p == BitMatrix::identity(self.genus))
            .unwrap_or(false)
    }

    pub fn apply(&self, x: &HClass) -> Result<HClass> {
        HClass::from_coords(self.genus, self.matrix.mul_vec(x.coords())?)
    }
}

impl fmt::Display for HomologyAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.matrix.rows().iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "[{row}]")?;
        }
        Ok(())
    }
}

pub fn is_level2(e: &SubstEndo) -> bool {
    HomologyAction::of(e).is_identity()
}

pub fn preserves_form(e: &SubstEndo) -> bool {
    HomologyAction::of(e).preserves_form()
}
