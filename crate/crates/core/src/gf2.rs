//! Exact linear algebra over the two-element field.
//!
//! Vectors are packed into `u64` words and every elimination is XOR based.
//! Ambient dimensions are carried explicitly and compared on every binary
//! operation, so a coordinate mix-up surfaces as an error instead of a
//! silently wrong rank.
//!
//! Pivots are always the *lowest* set coordinate of a row. A [`Subspace`] is
//! stored in reduced row-echelon form with rows ordered by pivot, which makes
//! it canonical: two subspaces are equal iff their bases are equal.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2) of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The `index`-th coordinate unit vector (0-based).
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector with ones exactly at `ones` (0-based). Repeated indices
    /// cancel in pairs.
    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set coordinate, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Indices of the set coordinates in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(k * WORD_BITS + tz)
                }
            })
        })
    }

    /// Dot product over GF(2).
    pub fn dot(&self, other: &BitVec) -> Result<bool> {
        check_dims(self.len, other.len)?;
        let parity = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>();
        Ok(parity % 2 == 1)
    }

    /// `self += other`, checked.
    pub fn add_assign_checked(&mut self, other: &BitVec) -> Result<()> {
        check_dims(self.len, other.len)?;
        self.xor_words(other);
        Ok(())
    }

    /// `self + other`, checked.
    pub fn add(&self, other: &BitVec) -> Result<BitVec> {
        let mut out = self.clone();
        out.add_assign_checked(other)?;
        Ok(out)
    }

    /// Unchecked XOR; callers guarantee equal lengths.
    #[inline]
    pub(crate) fn xor_words(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// XOR starting at the word that contains coordinate `from`; the
    /// caller guarantees `other` is zero below that word.
    #[inline]
    fn xor_words_from(&mut self, other: &BitVec, from: usize) {
        let start = from / WORD_BITS;
        for (a, b) in self.words[start..].iter_mut().zip(&other.words[start..]) {
            *a ^= b;
        }
    }

    pub fn as_words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec[{}](", self.len)?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[inline]
fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

/// A row-major matrix over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn new(ncols: usize, rows: Vec<BitVec>) -> Result<Self> {
        for r in &rows {
            check_dims(ncols, r.len())?;
        }
        Ok(BitMatrix { ncols, rows })
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        BitMatrix {
            ncols,
            rows: vec![BitVec::zeros(ncols); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        BitMatrix {
            ncols: n,
            rows: (0..n).map(|i| BitVec::unit(n, i)).collect(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.ncols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones() {
                t.rows[c].set(r, true);
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        check_dims(self.ncols, other.nrows())?;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitVec::zeros(other.ncols);
                for k in row.ones() {
                    acc.xor_words(&other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            ncols: other.ncols,
            rows,
        })
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        check_dims(self.ncols, v.len())?;
        let mut out = BitVec::zeros(self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            if row.dot(v)? {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.ncols);
        for r in &self.rows {
            ech.insert_unchecked(r.clone());
        }
        ech.rank()
    }

    /// Reduced row-echelon form with zero rows removed, rows ordered by pivot.
    pub fn rref(&self) -> BitMatrix {
        let mut ech = Echelon::new(self.ncols);
        for r in &self.rows {
            ech.insert_unchecked(r.clone());
        }
        BitMatrix {
            ncols: self.ncols,
            rows: ech.into_reduced_rows(),
        }
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank_of(ncols: usize, rows: impl IntoIterator<Item = BitVec>) -> Result<usize> {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(r)?;
    }
    Ok(ech.rank())
}

/// Incremental semi-echelon basis.
///
/// Each stored row has its pivot (lowest set bit) cleared from every row
/// inserted after it, so a single pass in insertion order reduces any vector.
/// Optionally tracks, for every stored row, which inputs were summed into it.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
    histories: Option<Vec<BitVec>>,
    inputs: usize,
    input_capacity: usize,
}

/// Result of inserting a vector into an [`Echelon`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insertion {
    /// The vector was independent and became a new basis row.
    Independent,
    /// The vector reduced to zero. Carries the dependency among inputs
    /// (including the new one) when history tracking is on.
    Dependent(Option<BitVec>),
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            histories: None,
            inputs: 0,
            input_capacity: 0,
        }
    }

    /// Tracks combination coefficients over at most `max_inputs` inserted vectors.
    pub fn with_history(ncols: usize, max_inputs: usize) -> Self {
        Echelon {
            histories: Some(Vec::new()),
            input_capacity: max_inputs,
            ..Echelon::new(ncols)
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn insert(&mut self, v: BitVec) -> Result<Insertion> {
        check_dims(self.ncols, v.len())?;
        Ok(self.insert_unchecked(v))
    }

    fn insert_unchecked(&mut self, mut v: BitVec) -> Insertion {
        let idx = self.inputs;
        self.inputs += 1;
        let mut hist = self.histories.as_ref().map(|_| {
            assert!(
                idx < self.input_capacity,
                "echelon history capacity {} exceeded",
                self.input_capacity
            );
            BitVec::unit(self.input_capacity, idx)
        });
        for (k, row) in self.rows.iter().enumerate() {
            let p = self.pivots[k];
            if v.get(p) {
                v.xor_words_from(row, p);
                if let (Some(h), Some(hs)) = (hist.as_mut(), self.histories.as_ref()) {
                    h.xor_words(&hs[k]);
                }
            }
        }
        match v.first_one() {
            Some(p) => {
                self.rows.push(v);
                self.pivots.push(p);
                if let (Some(h), Some(hs)) = (hist, self.histories.as_mut()) {
                    hs.push(h);
                }
                Insertion::Independent
            }
            None => Insertion::Dependent(hist),
        }
    }

    /// Reduces `v` against the basis. Returns the residue and, with history on,
    /// the combination of inputs that was subtracted.
    pub fn reduce(&self, v: &BitVec) -> Result<(BitVec, Option<BitVec>)> {
        check_dims(self.ncols, v.len())?;
        let mut r = v.clone();
        let mut comb = self
            .histories
            .as_ref()
            .map(|_| BitVec::zeros(self.input_capacity));
        for (k, row) in self.rows.iter().enumerate() {
            let p = self.pivots[k];
            if r.get(p) {
                r.xor_words_from(row, p);
                if let (Some(c), Some(hs)) = (comb.as_mut(), self.histories.as_ref()) {
                    c.xor_words(&hs[k]);
                }
            }
        }
        Ok((r, comb))
    }

    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        Ok(self.reduce(v)?.0.is_zero())
    }

    /// Expresses `v` as a combination of the inserted inputs, if possible.
    pub fn solve(&self, v: &BitVec) -> Result<Option<BitVec>> {
        let (res, comb) = self.reduce(v)?;
        if !res.is_zero() {
            return Ok(None);
        }
        Ok(Some(
            comb.expect("solve requires an echelon built with history"),
        ))
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    /// Back-substitutes into reduced row-echelon form, sorted by pivot.
    pub fn into_reduced_rows(self) -> Vec<BitVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.pivots[k]);
        let pivots = self.pivots;
        let mut rows: Vec<BitVec> = self.rows;
        // Eliminate each pivot from every other row, highest pivot first so
        // that cleared columns stay cleared.
        for &k in order.iter().rev() {
            let p = pivots[k];
            let pivot_row = rows[k].clone();
            for (m, row) in rows.iter_mut().enumerate() {
                if m != k && row.get(p) {
                    row.xor_words(&pivot_row);
                }
            }
        }
        let mut sorted: Vec<Option<BitVec>> = rows.into_iter().map(Some).collect();
        order
            .into_iter()
            .map(|k| sorted[k].take().expect("row taken once"))
            .collect()
    }
}

/// A linear subspace of GF(2)^ambient in canonical (RREF) form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<BitVec>,
}

/// Sum and intersection of two subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| BitVec::unit(ambient, i)).collect(),
        }
    }

    /// The span of `vectors`.
    pub fn span<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a BitVec>) -> Result<Self> {
        let mut ech = Echelon::new(ambient);
        for v in vectors {
            ech.insert(v.clone())?;
        }
        Ok(Self::from_echelon(ech))
    }

    pub fn from_echelon(ech: Echelon) -> Self {
        let ambient = ech.ncols();
        Subspace {
            ambient,
            basis: ech.into_reduced_rows(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> BitMatrix {
        BitMatrix {
            ncols: self.ambient,
            rows: self.basis.clone(),
        }
    }

    /// Whether `v` lies in the subspace.
    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        check_dims(self.ambient, v.len())?;
        // RREF: one pass over pivots suffices.
        let mut r = v.clone();
        for row in &self.basis {
            let p = row.first_one().expect("basis rows are nonzero");
            if r.get(p) {
                r.xor_words_from(row, p);
            }
        }
        Ok(r.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_dims(self.ambient, other.ambient)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dims(self.ambient, other.ambient)?;
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        check_dims(self.ambient, other.ambient)?;
        let na = self.basis.len();
        let nb = other.basis.len();
        let mut ech = Echelon::with_history(self.ambient, na + nb);
        for v in &self.basis {
            ech.insert(v.clone())?;
        }
        let mut meet = Echelon::new(self.ambient);
        for v in &other.basis {
            if let Insertion::Dependent(Some(hist)) = ech.insert(v.clone())? {
                // sum over a-part equals sum over b-part; collect the b-part.
                let mut x = BitVec::zeros(self.ambient);
                for k in hist.ones().filter(|&k| k >= na) {
                    x.xor_words(&other.basis[k - na]);
                }
                meet.insert(x)?;
            }
        }
        Ok(Subspace::from_echelon(meet))
    }

    pub fn ops(&self, other: &Subspace) -> Result<SubspaceOps> {
        Ok(SubspaceOps {
            sum: self.sum(other)?,
            intersection: self.intersection(other)?,
        })
    }

    /// `dim(self / (self ∩ other))`, i.e. `dim(self + other) - dim(other)`.
    pub fn quotient_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.sum(other)?.dim() - other.dim())
    }
}

/// A prepared decomposition problem `t = u + w` with `u ∈ a`, `w ∈ b`.
///
/// Building the solver is the expensive step; each [`SumSolver::solve`] call
/// is a single reduction pass. Deterministic: the same `t` always yields the
/// same pair, and when `a ∩ b = 0` the pair is the unique one.
#[derive(Clone, Debug)]
pub struct SumSolver {
    a: Subspace,
    b: Subspace,
    ech: Echelon,
}

impl SumSolver {
    pub fn new(a: &Subspace, b: &Subspace) -> Result<Self> {
        check_dims(a.ambient, b.ambient)?;
        let mut ech = Echelon::with_history(a.ambient, a.dim() + b.dim());
        for v in a.basis.iter().chain(&b.basis) {
            ech.insert(v.clone())?;
        }
        Ok(SumSolver {
            a: a.clone(),
            b: b.clone(),
            ech,
        })
    }

    pub fn solve(&self, t: &BitVec) -> Result<(BitVec, BitVec)> {
        let comb = self.ech.solve(t)?.ok_or(Error::NotInSum)?;
        let na = self.a.dim();
        let mut u = BitVec::zeros(self.a.ambient);
        let mut w = BitVec::zeros(self.a.ambient);
        for k in comb.ones() {
            if k < na {
                u.xor_words(&self.a.basis[k]);
            } else {
                w.xor_words(&self.b.basis[k - na]);
            }
        }
        Ok((u, w))
    }
}

/// One-shot form of [`SumSolver`].
pub fn solve_in_sum(t: &BitVec, a: &Subspace, b: &Subspace) -> Result<(BitVec, BitVec)> {
    SumSolver::new(a, b)?.solve(t)
}

/// Kernel of the linear map sending `domain[i]` to `images[i]`, returned as
/// a subspace of the domain's ambient space.
pub fn kernel_of_map(domain: &[BitVec], images: &[BitVec]) -> Result<Subspace> {
    check_dims(domain.len(), images.len())?;
    let Some(first) = domain.first() else {
        return Err(Error::Empty("kernel_of_map needs a nonempty domain"));
    };
    let ambient = first.len();
    let image_dim = images[0].len();
    let mut ech = Echelon::with_history(image_dim, images.len());
    let mut ker = Echelon::new(ambient);
    for img in images {
        if let Insertion::Dependent(Some(hist)) = ech.insert(img.clone())? {
            let mut x = BitVec::zeros(ambient);
            for k in hist.ones() {
                x.add_assign_checked(&domain[k])?;
            }
            ker.insert(x)?;
        }
    }
    Ok(Subspace::from_echelon(ker))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(bits: &str) -> BitVec {
        BitVec::from_bools(&bits.chars().map(|c| c == '1').collect::<Vec<_>>())
    }

    #[test]
    fn bitvec_basics() {
        let mut a = BitVec::zeros(130);
        a.set(0, true);
        a.set(64, true);
        a.set(129, true);
        assert_eq!(a.count_ones(), 3);
        assert_eq!(a.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(a.first_one(), Some(0));
        let b = a.clone();
        assert!(a.add(&b).unwrap().is_zero());
        assert!(a.add(&BitVec::zeros(3)).is_err());
    }

    #[test]
    fn rank_identity_and_duplicates() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        let m = BitMatrix::new(3, vec![v("110"), v("110")]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(BitMatrix::zeros(4, 5).rank(), 0);
    }

    #[test]
    fn rref_is_idempotent_and_reduced() {
        let m = BitMatrix::new(5, vec![v("11010"), v("01101"), v("10111"), v("00011")]).unwrap();
        let r = m.rref();
        assert_eq!(r.rref(), r);
        assert_eq!(r.rank(), m.rank());
        for (i, row) in r.rows().iter().enumerate() {
            let p = row.first_one().unwrap();
            for (j, other) in r.rows().iter().enumerate() {
                if i != j {
                    assert!(!other.get(p));
                }
            }
        }
    }

    #[test]
    fn membership() {
        let s = Subspace::span(4, [&v("1100"), &v("0110")]).unwrap();
        assert!(s.contains(&BitVec::zeros(4)).unwrap());
        assert!(s.contains(&v("1010")).unwrap());
        assert!(!s.contains(&v("0001")).unwrap());
        assert!(matches!(
            s.contains(&BitVec::zeros(5)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn sum_and_intersection() {
        let e1 = Subspace::span(2, [&v("10")]).unwrap();
        let e2 = Subspace::span(2, [&v("01")]).unwrap();
        let ops = e1.ops(&e2).unwrap();
        assert_eq!(ops.sum.dim(), 2);
        assert_eq!(ops.intersection.dim(), 0);

        let same = e1.ops(&e1).unwrap();
        assert_eq!(same.sum, e1);
        assert_eq!(same.intersection, e1);

        let a = Subspace::span(4, [&v("1100"), &v("0011")]).unwrap();
        let b = Subspace::span(4, [&v("1111"), &v("1000")]).unwrap();
        let ops = a.ops(&b).unwrap();
        assert_eq!(ops.intersection, Subspace::span(4, [&v("1111")]).unwrap());
        assert_eq!(ops.sum.dim(), 3);

        assert!(e1.sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn solve_in_sum_cases() {
        let a = Subspace::span(4, [&v("1100"), &v("0010")]).unwrap();
        let b = Subspace::span(4, [&v("0001")]).unwrap();
        let (u, w) = solve_in_sum(&BitVec::zeros(4), &a, &b).unwrap();
        assert!(u.is_zero() && w.is_zero());
        let (u, w) = solve_in_sum(&v("1110"), &a, &b).unwrap();
        assert_eq!((u, w), (v("1110"), v("0000")));
        let (u, w) = solve_in_sum(&v("1111"), &a, &b).unwrap();
        assert_eq!((u, w), (v("1110"), v("0001")));
        assert!(matches!(
            solve_in_sum(&v("1000"), &a, &b),
            Err(Error::NotInSum)
        ));
    }

    #[test]
    fn kernel_of_simple_map() {
        // parity functional on GF(2)^3
        let domain: Vec<BitVec> = (0..3).map(|i| BitVec::unit(3, i)).collect();
        let images = vec![v("1"); 3];
        let ker = kernel_of_map(&domain, &images).unwrap();
        assert_eq!(ker.dim(), 2);
        assert!(ker.contains(&v("110")).unwrap());
        assert!(!ker.contains(&v("100")).unwrap());
    }

    #[test]
    fn matrix_product_and_transpose() {
        let a = BitMatrix::new(2, vec![v("11"), v("01")]).unwrap();
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, BitMatrix::identity(2));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.mul_vec(&v("10")).unwrap(), v("10"));
    }
}
