//! Fixtures shared by the benchmarks.

use l2mcg::tensor::{h_even_basis, sym3_spanning_set};
use l2mcg::{BitVec, McgExpr, McgGen, Tensor};

/// Unreduced spanning rows of `(H_even^3)^{S_3}` in the full `g^3` coordinates.
pub fn even_sym3_rows(genus: usize) -> Vec<BitVec> {
    sym3_spanning_set(&h_even_basis(genus))
        .expect("genus >= 2")
        .into_iter()
        .map(Tensor::into_coords)
        .collect()
}

/// Every crosscap slide `Y(i,j)` at this genus.
pub fn all_slides(genus: usize) -> Vec<McgExpr> {
    let mut out = Vec::new();
    for i in 1..=genus {
        for j in (1..=genus).filter(|&j| j != i) {
            out.push(McgExpr::gen(genus, McgGen::YSlide { i, j }).expect("valid indices"));
        }
    }
    out
}
