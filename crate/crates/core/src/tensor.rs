//! Tensor powers of `H = H_1(N_g; Z/2)` in degrees 1 to 3.
//!
//! Coordinates are lexicographic in the C-basis: with 1-based generator
//! indices, `C_i (x) C_j (x) C_k` sits at flat position
//! `(i-1)g^2 + (j-1)g + (k-1)`, and analogously in degree 2. Every module in
//! the crate goes through [`Tensor::flat_index`] for this, never its own
//! arithmetic.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitVec, Subspace};

/// A homology class in `H`, as coordinates in the basis `C_1, ..., C_g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HClass {
    genus: usize,
    coords: BitVec,
}

impl HClass {
    pub fn zero(genus: usize) -> Self {
        HClass {
            genus,
            coords: BitVec::zeros(genus),
        }
    }

    /// The basis class `C_i` (1-based).
    pub fn basis(genus: usize, i: usize) -> Result<Self> {
        check_index(genus, i)?;
        Ok(HClass {
            genus,
            coords: BitVec::unit(genus, i - 1),
        })
    }

    /// `C_{i_1} + ... + C_{i_m}` (1-based; repeats cancel).
    pub fn sum_of(genus: usize, indices: &[usize]) -> Result<Self> {
        let mut coords = BitVec::zeros(genus);
        for &i in indices {
            check_index(genus, i)?;
            coords.flip(i - 1);
        }
        Ok(HClass { genus, coords })
    }

    pub fn from_coords(genus: usize, coords: BitVec) -> Result<Self> {
        if coords.len() != genus {
            return Err(Error::DimensionMismatch {
                left: genus,
                right: coords.len(),
            });
        }
        Ok(HClass { genus, coords })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn coords(&self) -> &BitVec {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    /// Toggles the coefficient of `C_{i+1}` (0-based `i`).
    pub(crate) fn flip0(&mut self, i: usize) {
        self.coords.flip(i);
    }

    /// First Stiefel-Whitney class: the sum of coordinates, since every
    /// `gamma_i` is one-sided.
    pub fn w1(&self) -> bool {
        self.coords.count_ones() % 2 == 1
    }

    pub fn add(&self, other: &HClass) -> Result<HClass> {
        check_genus(self.genus, other.genus)?;
        Ok(HClass {
            genus: self.genus,
            coords: self.coords.add(&other.coords)?,
        })
    }

    pub fn to_tensor(&self) -> Tensor {
        Tensor {
            genus: self.genus,
            degree: 1,
            coords: self.coords.clone(),
        }
    }
}

impl fmt::Display for HClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.coords.ones().map(|i| format!("C{}", i + 1)).collect();
        f.write_str(&terms.join(" + "))
    }
}

/// An element of `H^{(x) n}` for `n` in 1..=3.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    genus: usize,
    degree: usize,
    coords: BitVec,
}

impl Tensor {
    pub fn zero(genus: usize, degree: usize) -> Result<Self> {
        check_degree(degree)?;
        Ok(Tensor {
            genus,
            degree,
            coords: BitVec::zeros(genus.pow(degree as u32)),
        })
    }

    /// The basis monomial `C_{i_1} (x) ... (x) C_{i_n}` (1-based indices).
    pub fn basis(genus: usize, indices: &[usize]) -> Result<Self> {
        let mut t = Tensor::zero(genus, indices.len())?;
        let zero_based = indices
            .iter()
            .map(|&i| check_index(genus, i).map(|_| i - 1))
            .collect::<Result<Vec<_>>>()?;
        t.coords.set(Self::flat_index(genus, &zero_based), true);
        Ok(t)
    }

    pub fn from_coords(genus: usize, degree: usize, coords: BitVec) -> Result<Self> {
        check_degree(degree)?;
        let expected = genus.pow(degree as u32);
        if coords.len() != expected {
            return Err(Error::DimensionMismatch {
                left: expected,
                right: coords.len(),
            });
        }
        Ok(Tensor {
            genus,
            degree,
            coords,
        })
    }

    /// Flat coordinate of a monomial given by 0-based factor indices.
    #[inline]
    pub fn flat_index(genus: usize, zero_based: &[usize]) -> usize {
        zero_based.iter().fold(0, |acc, &i| acc * genus + i)
    }

    /// Inverse of [`Tensor::flat_index`].
    pub fn multi_index(genus: usize, degree: usize, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; degree];
        for slot in out.iter_mut().rev() {
            *slot = flat % genus;
            flat /= genus;
        }
        out
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coords(&self) -> &BitVec {
        &self.coords
    }

    pub fn into_coords(self) -> BitVec {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    fn check_same_space(&self, other: &Tensor) -> Result<()> {
        check_genus(self.genus, other.genus)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Tensor) -> Result<()> {
        self.check_same_space(other)?;
        self.coords.xor_words(&other.coords);
        Ok(())
    }

    /// Toggles a monomial given by 0-based indices.
    #[inline]
    pub(crate) fn flip0(&mut self, zero_based: &[usize]) {
        debug_assert_eq!(zero_based.len(), self.degree);
        self.coords.flip(Self::flat_index(self.genus, zero_based));
    }

    #[inline]
    pub(crate) fn get0(&self, zero_based: &[usize]) -> bool {
        self.coords.get(Self::flat_index(self.genus, zero_based))
    }

    /// Tensor product; the result degree must not exceed 3.
    pub fn outer(&self, other: &Tensor) -> Result<Tensor> {
        check_genus(self.genus, other.genus)?;
        let degree = self.degree + other.degree;
        let mut out = Tensor::zero(self.genus, degree)?;
        let stride = self.genus.pow(other.degree as u32);
        let right: Vec<usize> = other.coords.ones().collect();
        for i in self.coords.ones() {
            for &j in &right {
                out.coords.flip(i * stride + j);
            }
        }
        Ok(out)
    }

    /// Permutes tensor factors: factor `m` of the result is factor `perm[m]`
    /// of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Tensor> {
        if perm.len() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: perm.len(),
            });
        }
        let mut out = Tensor::zero(self.genus, self.degree)?;
        let mut dst = vec![0; self.degree];
        for flat in self.coords.ones() {
            let src = Self::multi_index(self.genus, self.degree, flat);
            for (m, &p) in perm.iter().enumerate() {
                dst[m] = src[p];
            }
            out.flip0(&dst);
        }
        Ok(out)
    }

    /// Fixed by every permutation of the tensor factors.
    pub fn is_symmetric(&self) -> bool {
        all_permutations(self.degree)
            .iter()
            .all(|p| self.permute(p).map(|t| &t == self).unwrap_or(false))
    }

    /// Coordinates at the sorted monomials `i <= j <= k` (degree 3) or
    /// `i <= j` (degree 2), in lexicographic order.
    ///
    /// The projection is injective on symmetric tensors, so ranks of
    /// symmetric tensors can be computed in this much smaller space.
    pub fn sorted_coords(&self) -> BitVec {
        let g = self.genus;
        let mut out = BitVec::zeros(sorted_dim(g, self.degree));
        let mut pos = 0;
        match self.degree {
            1 => return self.coords.clone(),
            2 => {
                for i in 0..g {
                    for j in i..g {
                        if self.get0(&[i, j]) {
                            out.set(pos, true);
                        }
                        pos += 1;
                    }
                }
            }
            _ => {
                for i in 0..g {
                    for j in i..g {
                        for k in j..g {
                            if self.get0(&[i, j, k]) {
                                out.set(pos, true);
                            }
                            pos += 1;
                        }
                    }
                }
            }
        }
        out
    }

    /// Basis monomials present, as 1-based index tuples in lexicographic order.
    pub fn monomials(&self) -> Vec<Vec<usize>> {
        self.coords
            .ones()
            .map(|flat| {
                Self::multi_index(self.genus, self.degree, flat)
                    .into_iter()
                    .map(|i| i + 1)
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Tensor {
    /// `C1.C1.C2 + C1.C2.C1`, lexicographic; `0` for the zero tensor.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monos = self.monomials();
        if monos.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = monos
            .iter()
            .map(|m| {
                m.iter()
                    .map(|i| format!("C{i}"))
                    .collect::<Vec<_>>()
                    .join(".")
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Number of sorted monomials of the given degree: `C(g + n - 1, n)`.
pub fn sorted_dim(genus: usize, degree: usize) -> usize {
    crate::formulas::binomial(genus + degree - 1, degree)
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    match n {
        1 => vec![vec![0]],
        2 => vec![vec![0, 1], vec![1, 0]],
        _ => vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ],
    }
}

fn check_degree(degree: usize) -> Result<()> {
    if (1..=3).contains(&degree) {
        Ok(())
    } else {
        Err(Error::UnsupportedDegree(degree))
    }
}

pub(crate) fn check_genus(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::GenusMismatch { left, right })
    }
}

fn check_index(genus: usize, i: usize) -> Result<()> {
    if (1..=genus).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            index: i as i64,
            genus,
        })
    }
}

/// `omega = sum_i C_i (x) C_i`.
pub fn omega(genus: usize) -> Result<Tensor> {
    if genus == 0 {
        return Err(Error::GenusTooSmall {
            genus,
            min: 1,
            what: "omega",
        });
    }
    let mut t = Tensor::zero(genus, 2)?;
    for i in 0..genus {
        t.flip0(&[i, i]);
    }
    Ok(t)
}

/// `S(X,Y) = X(x)X(x)Y + X(x)Y(x)X + Y(x)X(x)X`.
pub fn s2(x: &HClass, y: &HClass) -> Result<Tensor> {
    check_genus(x.genus, y.genus)?;
    let (x, y) = (x.to_tensor(), y.to_tensor());
    let mut t = x.outer(&x)?.outer(&y)?;
    t.add_assign(&x.outer(&y)?.outer(&x)?)?;
    t.add_assign(&y.outer(&x)?.outer(&x)?)?;
    Ok(t)
}

/// `S(X,Y,Z)`: the sum of all six orderings of `X (x) Y (x) Z`.
pub fn s3(x: &HClass, y: &HClass, z: &HClass) -> Result<Tensor> {
    check_genus(x.genus, y.genus)?;
    check_genus(x.genus, z.genus)?;
    let f = [x.to_tensor(), y.to_tensor(), z.to_tensor()];
    let mut t = Tensor::zero(x.genus, 3)?;
    for p in all_permutations(3) {
        t.add_assign(&f[p[0]].outer(&f[p[1]])?.outer(&f[p[2]])?)?;
    }
    Ok(t)
}

/// `X (x) X (x) X`.
pub fn cube(x: &HClass) -> Tensor {
    let t = x.to_tensor();
    t.outer(&t)
        .and_then(|sq| sq.outer(&t))
        .expect("degree 3 is supported")
}

fn check_degree_is(t: &Tensor, degree: usize) -> Result<()> {
    if t.degree == degree {
        Ok(())
    } else {
        Err(Error::DegreeMismatch {
            left: degree,
            right: t.degree,
        })
    }
}

/// `c(X (x) Y (x) Z) = w1(X) Y (x) Z`, extended linearly.
pub fn c_map(t: &Tensor) -> Result<Tensor> {
    check_degree_is(t, 3)?;
    let g2 = t.genus * t.genus;
    let mut out = Tensor::zero(t.genus, 2)?;
    for flat in t.coords.ones() {
        out.coords.flip(flat % g2);
    }
    Ok(out)
}

/// `f(X (x) Y (x) Z) = w1(X) Y (x) Z + w1(Y) Z (x) X`, extended linearly.
pub fn f_map(t: &Tensor) -> Result<Tensor> {
    check_degree_is(t, 3)?;
    let g = t.genus;
    let mut out = Tensor::zero(g, 2)?;
    for flat in t.coords.ones() {
        let (a, b, c) = (flat / (g * g), (flat / g) % g, flat % g);
        out.flip0(&[b, c]);
        out.flip0(&[c, a]);
    }
    Ok(out)
}

/// `X_i = C_i + C_{i+1}` for `i = 1..g-1`, a basis of `H_even = Ker w1`.
pub fn h_even_basis(genus: usize) -> Vec<HClass> {
    (1..genus)
        .map(|i| HClass::sum_of(genus, &[i, i + 1]).expect("indices in range"))
        .collect()
}

/// `{X^3} + {S(X_a, X_b) : a != b} + {S(X_a, X_b, X_c) : a < b < c}` over a
/// basis `xs` of some subspace of `H`.
pub fn sym3_spanning_set(xs: &[HClass]) -> Result<Vec<Tensor>> {
    let mut out = Vec::new();
    for x in xs {
        out.push(cube(x));
    }
    for (a, xa) in xs.iter().enumerate() {
        for (b, xb) in xs.iter().enumerate() {
            if a != b {
                out.push(s2(xa, xb)?);
            }
        }
    }
    for a in 0..xs.len() {
        for b in a + 1..xs.len() {
            for c in b + 1..xs.len() {
                out.push(s3(&xs[a], &xs[b], &xs[c])?);
            }
        }
    }
    Ok(out)
}

/// `{C_i^2} + {C_i (x) C_j + C_j (x) C_i : i < j}`.
pub fn sym2_spanning_set(genus: usize) -> Result<Vec<Tensor>> {
    let mut out = Vec::new();
    for i in 0..genus {
        let mut t = Tensor::zero(genus, 2)?;
        t.flip0(&[i, i]);
        out.push(t);
    }
    for i in 0..genus {
        for j in i + 1..genus {
            let mut t = Tensor::zero(genus, 2)?;
            t.flip0(&[i, j]);
            t.flip0(&[j, i]);
            out.push(t);
        }
    }
    Ok(out)
}

/// `{C_k (x) omega : k = 1..g}`.
pub fn h_omega_spanning_set(genus: usize) -> Result<Vec<Tensor>> {
    let w = omega(genus)?;
    (1..=genus)
        .map(|k| HClass::basis(genus, k)?.to_tensor().outer(&w))
        .collect()
}

/// The invariant subspaces used throughout, built from explicit spanning sets.
#[derive(Clone, Debug)]
pub struct InvariantBases {
    pub genus: usize,
    /// `(H^2)^{S_2}`
    pub sym2: Subspace,
    /// `(H^3)^{S_3}`
    pub sym3: Subspace,
    /// `(H_even^3)^{S_3}`
    pub even_sym3: Subspace,
    /// `H (x) <omega>`
    pub h_omega: Subspace,
}

impl InvariantBases {
    pub fn new(genus: usize) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall {
                genus,
                min: 2,
                what: "invariant bases",
            });
        }
        let g = genus;
        let span = |n: usize, ts: Vec<Tensor>| {
            let coords: Vec<BitVec> = ts.into_iter().map(Tensor::into_coords).collect();
            Subspace::span(g.pow(n as u32), coords.iter())
        };
        let c_basis: Vec<HClass> = (1..=g)
            .map(|i| HClass::basis(g, i))
            .collect::<Result<_>>()?;
        Ok(InvariantBases {
            genus,
            sym2: span(2, sym2_spanning_set(g)?)?,
            sym3: span(3, sym3_spanning_set(&c_basis)?)?,
            even_sym3: span(3, sym3_spanning_set(&h_even_basis(g))?)?,
            h_omega: span(3, h_omega_spanning_set(g)?)?,
        })
    }
}
