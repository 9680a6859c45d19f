//! Independent reference implementations used as oracles.
//!
//! Everything here works on plain `Vec<u8>` rows with one coordinate per byte
//! and textbook elimination, sharing no code with the packed kernel.

#![allow(dead_code)]

use std::collections::BTreeMap;

use l2mcg::{BitVec, HClass, Subspace, Tensor, Word};

pub type Dense = Vec<u8>;

pub fn dense(v: &BitVec) -> Dense {
    (0..v.len()).map(|i| v.get(i) as u8).collect()
}

pub fn dense_tensor(t: &Tensor) -> Dense {
    dense(t.coords())
}

/// Reduced row echelon form, pivots taken left to right, zero rows dropped.
pub fn rref(rows: &[Dense]) -> Vec<Dense> {
    let mut m: Vec<Dense> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] == 1) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] == 1 {
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x ^= p;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

pub fn rank(rows: &[Dense]) -> usize {
    rref(rows).len()
}

/// Basis of `{ v : a . v = 0 for every row a }` in ambient `n`.
pub fn nullspace(conditions: &[Dense], n: usize) -> Vec<Dense> {
    let r = rref(conditions);
    let mut pivots = Vec::new();
    for row in &r {
        pivots.push(row.iter().position(|&x| x == 1).expect("nonzero row"));
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u8; n];
        v[free] = 1;
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = row[free];
        }
        out.push(v);
    }
    out
}

pub fn same_span(a: &[Dense], b: &[Dense]) -> bool {
    let ra = rank(a);
    let rb = rank(b);
    let both: Vec<Dense> = a.iter().chain(b).cloned().collect();
    ra == rb && rank(&both) == ra
}

pub fn subspace_rows(s: &Subspace) -> Vec<Dense> {
    s.basis().iter().map(dense).collect()
}

pub fn in_span(v: &Dense, rows: &[Dense]) -> bool {
    let mut with: Vec<Dense> = rows.to_vec();
    with.push(v.clone());
    rank(&with) == rank(rows)
}

/// Coordinate of a 0-based multi-index, lexicographic.
pub fn flat(g: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * g + i)
}

fn multi(g: usize, n: usize, mut f: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = f % g;
        f /= g;
    }
    out
}

/// Linear conditions `v(sigma . x) = v(x)` for the adjacent transpositions of
/// the `n` tensor factors.
pub fn symmetry_conditions(g: usize, n: usize) -> Vec<Dense> {
    let dim = g.pow(n as u32);
    let mut out = Vec::new();
    for t in 0..n - 1 {
        for f in 0..dim {
            let mut idx = multi(g, n, f);
            idx.swap(t, t + 1);
            let f2 = flat(g, &idx);
            if f2 > f {
                let mut row = vec![0u8; dim];
                row[f] = 1;
                row[f2] = 1;
                out.push(row);
            }
        }
    }
    out
}

/// `(H^{(x)n})^{S_n}` as the fixed points of the factor action.
pub fn fixed_points(g: usize, n: usize) -> Vec<Dense> {
    nullspace(&symmetry_conditions(g, n), g.pow(n as u32))
}

/// Conditions that each factor of a degree 3 tensor pairs to zero with the
/// all-ones functional, i.e. the tensor lies in `H_even^{(x)3}`.
pub fn even_conditions(g: usize) -> Vec<Dense> {
    let dim = g * g * g;
    let mut out = Vec::new();
    for slot in 0..3 {
        for a in 0..g {
            for b in 0..g {
                let mut row = vec![0u8; dim];
                for i in 0..g {
                    let idx = match slot {
                        0 => [i, a, b],
                        1 => [a, i, b],
                        _ => [a, b, i],
                    };
                    row[flat(g, &idx)] = 1;
                }
                out.push(row);
            }
        }
    }
    out
}

pub fn even_fixed_points(g: usize) -> Vec<Dense> {
    let mut cond = symmetry_conditions(g, 3);
    cond.extend(even_conditions(g));
    nullspace(&cond, g * g * g)
}

pub fn h_omega(g: usize) -> Vec<Dense> {
    (0..g)
        .map(|k| {
            let mut v = vec![0u8; g * g * g];
            for i in 0..g {
                v[flat(g, &[k, i, i])] = 1;
            }
            v
        })
        .collect()
}

/// Magnus expansion truncated at degree 2, as a map from index tuples to
/// coefficients, by literal series multiplication.
pub fn magnus2(w: &Word) -> BTreeMap<Vec<usize>, u8> {
    let mut acc: BTreeMap<Vec<usize>, u8> = BTreeMap::new();
    acc.insert(vec![], 1);
    for &l in w.letters() {
        let k = l.unsigned_abs() as usize - 1;
        let mut factor: BTreeMap<Vec<usize>, u8> = BTreeMap::new();
        factor.insert(vec![], 1);
        factor.insert(vec![k], 1);
        if l < 0 {
            // (1 + x)^-1 = 1 - x + x^2 - ...
            factor.insert(vec![k, k], 1);
        }
        let mut next: BTreeMap<Vec<usize>, u8> = BTreeMap::new();
        for (a, ca) in &acc {
            for (b, cb) in &factor {
                if a.len() + b.len() > 2 {
                    continue;
                }
                let mut m = a.clone();
                m.extend(b);
                *next.entry(m).or_insert(0) ^= ca & cb;
            }
        }
        next.retain(|_, c| *c == 1);
        acc = next;
    }
    acc
}

pub fn magnus2_deg(w: &Word, g: usize, deg: usize) -> Dense {
    let mut v = vec![0u8; g.pow(deg as u32)];
    for (m, _) in magnus2(w).iter().filter(|(m, _)| m.len() == deg) {
        v[flat(g, m)] = 1;
    }
    v
}

pub fn class(g: usize, idx: &[usize]) -> HClass {
    HClass::sum_of(g, idx).unwrap()
}
