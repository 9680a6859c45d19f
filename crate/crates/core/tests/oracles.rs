mod common;

use common::*;
use l2mcg::gf2::{rank_of, solve_in_sum, BitMatrix};
use l2mcg::johnson::{tau1_hom, CubeSet};
use l2mcg::tensor::{cube, omega, s2, sym3_spanning_set};
use l2mcg::verify::random_word;
use l2mcg::{theta2, BitVec, HClass, InvariantBases, Subspace, Tau1Engine, Tensor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_rows(rng: &mut ChaCha8Rng, nrows: usize, ncols: usize, density: f64) -> Vec<BitVec> {
    (0..nrows)
        .map(|_| {
            let bits: Vec<bool> = (0..ncols).map(|_| rng.gen_bool(density)).collect();
            BitVec::from_bools(&bits)
        })
        .collect()
}

#[test]
fn packed_rank_matches_dense_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let nrows = rng.gen_range(1..40);
        let ncols = rng.gen_range(1..150);
        let density = rng.gen_range(0.02..0.6);
        let rows = random_rows(&mut rng, nrows, ncols, density);
        let d: Vec<Dense> = rows.iter().map(dense).collect();
        let m = BitMatrix::new(ncols, rows).unwrap();
        assert_eq!(m.rank(), rank(&d));
        assert_eq!(m.rref().rank(), m.rank());
    }
}

#[test]
fn rank_of_pair_symmetrizations_at_genus_four() {
    let g = 4;
    let c = |i| HClass::basis(g, i).unwrap();
    let mut pairs = Vec::new();
    for i in 1..=g {
        for j in i + 1..=g {
            pairs.push((i, j));
        }
    }
    // six pairs plus four repeated
    let chosen: Vec<(usize, usize)> = pairs.iter().chain(&pairs[..4]).copied().collect();
    assert_eq!(chosen.len(), 10);

    let deg3: Vec<BitVec> = chosen
        .iter()
        .map(|&(i, j)| {
            s2(&c(i), &c(j))
                .unwrap()
                .add(&s2(&c(j), &c(i)).unwrap())
                .unwrap()
                .into_coords()
        })
        .collect();
    let oracle3 = rank(&deg3.iter().map(dense).collect::<Vec<_>>());
    assert_eq!(rank_of(64, deg3).unwrap(), oracle3);
    assert_eq!(oracle3, 6);

    // The degree 2 reading of the same rows: C_i (x) C_j + C_j (x) C_i in 16 coordinates.
    let deg2: Vec<BitVec> = chosen
        .iter()
        .map(|&(i, j)| {
            Tensor::basis(g, &[i, j])
                .unwrap()
                .add(&Tensor::basis(g, &[j, i]).unwrap())
                .unwrap()
                .into_coords()
        })
        .collect();
    let oracle2 = rank(&deg2.iter().map(dense).collect::<Vec<_>>());
    assert_eq!(rank_of(16, deg2).unwrap(), oracle2);
    assert_eq!(oracle2, 6);
}

#[test]
fn membership_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let ambient = rng.gen_range(1..20);
        let k = rng.gen_range(0..8);
        let rows = random_rows(&mut rng, k, ambient, 0.4);
        let s = Subspace::span(ambient, rows.iter()).unwrap();
        assert!(s.dim() <= 12);
        let mut members = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << s.dim()) {
            let mut v = BitVec::zeros(ambient);
            for (i, b) in s.basis().iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v.add_assign_checked(b).unwrap();
                }
            }
            members.insert(dense(&v));
        }
        for _ in 0..30 {
            let v = random_rows(&mut rng, 1, ambient, 0.3).pop().unwrap();
            assert_eq!(s.contains(&v).unwrap(), members.contains(&dense(&v)));
        }
        for m in &members {
            let bits: Vec<bool> = m.iter().map(|&x| x == 1).collect();
            assert!(s.contains(&BitVec::from_bools(&bits)).unwrap());
        }
    }
}

#[test]
fn omega_span_membership_examples() {
    let g = 3;
    let w = omega(g).unwrap();
    let span = Subspace::span(9, [w.coords()]).unwrap();
    assert!(span.contains(&BitVec::zeros(9)).unwrap());
    assert!(span.contains(w.coords()).unwrap());
    let sym = Tensor::basis(g, &[1, 2])
        .unwrap()
        .add(&Tensor::basis(g, &[2, 1]).unwrap())
        .unwrap();
    assert!(!span.contains(sym.coords()).unwrap());
    assert!(!in_span(&dense_tensor(&sym), &[dense_tensor(&w)]));
}

#[test]
fn invariant_subspaces_match_fixed_point_solver() {
    for g in 2..=5 {
        let b = InvariantBases::new(g).unwrap();
        assert!(
            same_span(&subspace_rows(&b.sym2), &fixed_points(g, 2)),
            "sym2 g={g}"
        );
        assert!(
            same_span(&subspace_rows(&b.sym3), &fixed_points(g, 3)),
            "sym3 g={g}"
        );
        assert!(
            same_span(&subspace_rows(&b.even_sym3), &even_fixed_points(g)),
            "even g={g}"
        );
        assert!(
            same_span(&subspace_rows(&b.h_omega), &h_omega(g)),
            "h_omega g={g}"
        );
    }
}

#[test]
fn intersection_matches_dimension_count() {
    for g in 2..=5 {
        let b = InvariantBases::new(g).unwrap();
        let sym = fixed_points(g, 3);
        let how = h_omega(g);
        let both: Vec<Dense> = sym.iter().chain(&how).cloned().collect();
        let oracle = rank(&sym) + rank(&how) - rank(&both);
        assert_eq!(b.h_omega.intersection(&b.sym3).unwrap().dim(), oracle);
        assert_eq!(oracle, 0);
    }
}

#[test]
fn solve_in_sum_example() {
    let g = 4;
    let b = InvariantBases::new(g).unwrap();
    let u = s2(&class(g, &[1]), &class(g, &[1, 2])).unwrap();
    let w = HClass::basis(g, 3)
        .unwrap()
        .to_tensor()
        .outer(&omega(g).unwrap())
        .unwrap();
    let t = u.add(&w).unwrap();
    let (x, y) = solve_in_sum(t.coords(), &b.sym3, &b.h_omega).unwrap();
    assert_eq!(&x, u.coords());
    assert_eq!(&y, w.coords());
}

/// Lift by dense elimination over the stacked oracle bases.
fn oracle_lift(g: usize, t: &Dense) -> Dense {
    let sym = fixed_points(g, 3);
    let how = h_omega(g);
    let n = g * g * g;
    // Columns: sym basis then h_omega basis; solve coefficients by Gaussian
    // elimination on the augmented transposed system.
    let gens: Vec<&Dense> = sym.iter().chain(&how).collect();
    let m = gens.len();
    let aug: Vec<Dense> = (0..n)
        .map(|r| {
            let mut row: Dense = gens.iter().map(|v| v[r]).collect();
            row.push(t[r]);
            row
        })
        .collect();
    let red = rref(&aug);
    let mut coef = vec![0u8; m];
    for row in &red {
        let p = row.iter().position(|&x| x == 1).unwrap();
        assert!(p < m, "inconsistent system");
        coef[p] = row[m];
    }
    let mut out = vec![0u8; n];
    for (k, v) in sym.iter().enumerate() {
        if coef[k] == 1 {
            for i in 0..n {
                out[i] ^= v[i];
            }
        }
    }
    out
}

#[test]
fn lift_matches_dense_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for g in 2..=4 {
        let engine = Tau1Engine::new(g).unwrap();
        for _ in 0..10 {
            let x = l2mcg::verify::random_expr(&mut rng, g);
            let t =
                l2mcg::johnson::assemble(&tau1_hom(&x.inverse_endo().unwrap()).unwrap()).unwrap();
            let lifted = engine.sym_lift(&t).unwrap();
            assert_eq!(dense_tensor(&lifted), oracle_lift(g, &dense_tensor(&t)));
        }
    }
}

#[test]
fn theta2_matches_series_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for g in 1..=5 {
        for _ in 0..200 {
            let w = random_word(&mut rng, g, 25);
            let jet = theta2(&w);
            assert_eq!(dense(jet.deg1.coords()), magnus2_deg(&w, g, 1));
            assert_eq!(dense_tensor(&jet.deg2), magnus2_deg(&w, g, 2));
        }
    }
}

#[test]
fn image_rank_matches_unprojected_dense_rank() {
    for g in 4..=6 {
        let engine = Tau1Engine::new(g).unwrap();
        let mut rows: Vec<Dense> = Vec::new();
        for i in 1..=g {
            for j in 1..=g {
                if i != j {
                    let x = l2mcg::McgExpr::gen(g, l2mcg::McgGen::YSlide { i, j }).unwrap();
                    rows.push(dense_tensor(&engine.tau1(&x).unwrap().value));
                }
            }
        }
        for mask in 1u32..(1 << g) {
            if mask.count_ones() % 2 == 0 {
                let idx: Vec<usize> = (0..g)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| i + 1)
                    .collect();
                rows.push(dense_tensor(&cube(&class(g, &idx))));
            }
        }
        for v in engine.push_values().unwrap() {
            rows.push(dense_tensor(&v));
        }
        let oracle = rank(&rows);
        assert_eq!(engine.image_rank(CubeSet::All).unwrap(), oracle, "g={g}");
        assert_eq!(
            engine.image_rank(CubeSet::UpToThreeTerms).unwrap(),
            oracle,
            "g={g}"
        );
    }
}

#[test]
fn cube_sets_span_the_same_space() {
    for g in 4..=10 {
        let xs = l2mcg::tensor::h_even_basis(g);
        let sum = |mask: u32| {
            (0..xs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(HClass::zero(g), |a, i| a.add(&xs[i]).unwrap())
        };
        let all: Vec<BitVec> = (1u32..(1 << xs.len()))
            .map(|m| cube(&sum(m)).sorted_coords())
            .collect();
        let small: Vec<BitVec> = (1u32..(1 << xs.len()))
            .filter(|m| m.count_ones() <= 3)
            .map(|m| cube(&sum(m)).sorted_coords())
            .collect();
        let n = l2mcg::tensor::sorted_dim(g, 3);
        let a = Subspace::span(n, all.iter()).unwrap();
        assert_eq!(a, Subspace::span(n, small.iter()).unwrap(), "g={g}");
        let even = Subspace::span(
            n,
            sym3_spanning_set(&xs)
                .unwrap()
                .iter()
                .map(|t| t.sorted_coords())
                .collect::<Vec<_>>()
                .iter(),
        )
        .unwrap();
        assert!(a.is_subspace_of(&even).unwrap());
    }
}

#[test]
fn minimality_quotient_matches_dense_rank() {
    for g in 4..=6 {
        let engine = Tau1Engine::new(g).unwrap();
        let pushes: Vec<Dense> = engine
            .push_values()
            .unwrap()
            .iter()
            .map(dense_tensor)
            .collect();
        let gens: Vec<Dense> =
            l2mcg::catalog::generating_set(g, l2mcg::GeneratingSet::FirstIndexQuadruples)
                .unwrap()
                .iter()
                .map(|x| dense_tensor(&engine.tau1(x).unwrap().value))
                .collect();
        let all: Vec<Dense> = pushes.iter().chain(&gens).cloned().collect();
        let oracle = rank(&all) - rank(&pushes);
        assert_eq!(engine.minimality().unwrap().quotient_dim, oracle);
        assert_eq!(oracle, l2mcg::formulas::abelianization_dim(g));
    }
}
