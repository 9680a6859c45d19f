//! The mod 2 Johnson homomorphism `tau_1` on the level 2 subgroup, and the
//! rank computations built on it.
//!
//! `tau_1` is computed three ways:
//!
//! * [`tau1_hom`]: `gamma_k -> theta2(gamma_k) - theta2(phi^-1(gamma_k))`,
//!   a homomorphism `pi -> H^2 / <omega>`, from the inverse action.
//! * [`Tau1Engine::tau1`]: the same value assembled into `H^3 / (H (x) <omega>)`
//!   via `h -> sum_k C_k (x) h(gamma_k)` and lifted to the unique
//!   `S_3`-invariant representative.
//! * [`tau1_appendix`]: `gamma_k -> [phi(gamma_k) gamma_k^-1]`, read through
//!   `theta2` on the mod 2 lower central series quotient.
//!
//! The formal quadruple twists `T2(i,j,k,l)` have no known action on `pi_1`;
//! their value is taken to be the cube of the curve's homology class, the
//! same shape as the pair twists. Results that depend on this are flagged
//! with [`Tau1Tensor::uses_derived_closed_form`].

use crate::catalog::{generating_set, Factor, GeneratingSet, McgExpr, McgGen};
use crate::error::{Error, Result};
use crate::formulas;
use crate::gf2::{kernel_of_map, rank_of, BitVec, Subspace, SumSolver};
use crate::homology::HomologyAction;
use crate::magnus::{omega_span, theta2};
use crate::tensor::{
    c_map, cube, f_map, h_even_basis, h_omega_spanning_set, sorted_dim, HClass, InvariantBases,
    Tensor,
};
use crate::word::{SubstEndo, Word};

/// Values of `tau_1(phi)` on `gamma_1, ..., gamma_g`, each a representative
/// modulo `<omega>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tau1Hom {
    pub genus: usize,
    pub values: Vec<Tensor>,
}

impl Tau1Hom {
    /// Componentwise equality modulo `<omega>`.
    pub fn eq_mod_omega(&self, other: &Tau1Hom) -> Result<bool> {
        crate::tensor::check_genus(self.genus, other.genus)?;
        let span = omega_span(self.genus)?;
        for (a, b) in self.values.iter().zip(&other.values) {
            if !span.contains(a.add(b)?.coords())? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn require_level2(e: &SubstEndo) -> Result<()> {
    let action = HomologyAction::of(e);
    if action.is_identity() {
        Ok(())
    } else {
        Err(Error::NotLevel2 {
            matrix: action.to_string(),
        })
    }
}

/// `tau_1` as a homomorphism, from the inverse action `e` of a level 2 class.
pub fn tau1_hom(e: &SubstEndo) -> Result<Tau1Hom> {
    require_level2(e)?;
    let g = e.genus();
    let values = (1..=g as i32)
        .map(|k| {
            let gk = Word::letter(g, k)?;
            theta2(&gk).deg2.add(&theta2(&e.apply(&gk)?).deg2)
        })
        .collect::<Result<_>>()?;
    Ok(Tau1Hom { genus: g, values })
}

/// `sum_k C_k (x) h(gamma_k)`, a representative in `H^3` modulo `H (x) <omega>`.
pub fn assemble(h: &Tau1Hom) -> Result<Tensor> {
    let g = h.genus;
    let mut out = Tensor::zero(g, 3)?;
    for (k, v) in h.values.iter().enumerate() {
        out.add_assign(&HClass::basis(g, k + 1)?.to_tensor().outer(v)?)?;
    }
    Ok(out)
}

/// `tau_1` through `[phi(gamma_k) gamma_k^-1]`. `e` may be either the forward
/// or the inverse action; the two give the same class since the image is
/// 2-torsion.
pub fn tau1_appendix(e: &SubstEndo) -> Result<Tau1Hom> {
    require_level2(e)?;
    let g = e.genus();
    let values = (1..=g as i32)
        .map(|k| {
            let gk = Word::letter(g, k)?;
            Ok(theta2(&e.apply(&gk)?.concat(&gk.inverse())?).deg2)
        })
        .collect::<Result<_>>()?;
    Ok(Tau1Hom { genus: g, values })
}

/// `(C_a + C_b + C_c + C_d)^3` for the formal quadruple twist.
pub fn quad_closed_form(genus: usize, q: [usize; 4]) -> Result<Tensor> {
    Ok(cube(&HClass::sum_of(genus, &q)?))
}

/// An `S_3`-invariant value of `tau_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tau1Tensor {
    pub value: Tensor,
    /// Set when a formal `T2(i,j,k,l)` factor contributed its derived value.
    pub uses_derived_closed_form: bool,
}

/// Per-genus state for lifting: the invariant subspaces and a prepared
/// decomposition `H^3 ⊇ (H^3)^{S_3} ⊕ H (x) <omega>`.
#[derive(Clone, Debug)]
pub struct Tau1Engine {
    genus: usize,
    bases: InvariantBases,
    solver: SumSolver,
}

impl Tau1Engine {
    pub fn new(genus: usize) -> Result<Self> {
        let bases = InvariantBases::new(genus)?;
        let solver = SumSolver::new(&bases.sym3, &bases.h_omega)?;
        Ok(Tau1Engine {
            genus,
            bases,
            solver,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn bases(&self) -> &InvariantBases {
        &self.bases
    }

    /// The `S_3`-invariant `s` with `t - s` in `H (x) <omega>`.
    pub fn sym_lift(&self, t: &Tensor) -> Result<Tensor> {
        if t.degree() != 3 || t.genus() != self.genus {
            return Err(Error::DimensionMismatch {
                left: self.genus.pow(3),
                right: t.coords().len(),
            });
        }
        let (sym, _) = self.solver.solve(t.coords()).map_err(|e| match e {
            Error::NotInSum => Error::NotLiftable,
            other => other,
        })?;
        Tensor::from_coords(self.genus, 3, sym)
    }

    /// `tau_1` of a level 2 inverse action.
    pub fn tau1_of_endo(&self, e: &SubstEndo) -> Result<Tensor> {
        self.sym_lift(&assemble(&tau1_hom(e)?)?)
    }

    pub fn tau1(&self, x: &McgExpr) -> Result<Tau1Tensor> {
        crate::tensor::check_genus(self.genus, x.genus())?;
        let (formal, rest): (Vec<&Factor>, Vec<&Factor>) =
            x.factors().iter().partition(|f| f.gen.is_formal());
        let mut value = if rest.is_empty() {
            Tensor::zero(self.genus, 3)?
        } else {
            let actual = McgExpr::new(self.genus, rest.into_iter().cloned().collect())?;
            self.tau1_of_endo(&actual.inverse_endo()?)?
        };
        for f in &formal {
            if let McgGen::TSquareQuad(q) = f.gen {
                value.add_assign(&quad_closed_form(self.genus, q)?)?;
            }
        }
        Ok(Tau1Tensor {
            value,
            uses_derived_closed_form: !formal.is_empty(),
        })
    }
}

/// One-shot `tau_1`; builds a [`Tau1Engine`] for the expression's genus.
pub fn tau1(x: &McgExpr) -> Result<Tau1Tensor> {
    Tau1Engine::new(x.genus())?.tau1(x)
}

/// One-shot lift; see [`Tau1Engine::sym_lift`].
pub fn sym_lift(t: &Tensor) -> Result<Tensor> {
    Tau1Engine::new(t.genus())?.sym_lift(t)
}

/// Which even classes `X` contribute `X^3` to the image span.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubeSet {
    /// Every nonzero `X` in `H_even` (`2^(g-1) - 1` classes).
    All,
    /// Sums of at most three of the `X_i`; spans the same space as `All`
    /// because a cube only sees triples of summands.
    UpToThreeTerms,
}

impl CubeSet {
    pub fn default_for(genus: usize) -> Self {
        if genus <= 12 {
            CubeSet::All
        } else {
            CubeSet::UpToThreeTerms
        }
    }
}

fn even_cubes(genus: usize, which: CubeSet) -> Vec<Tensor> {
    let xs = h_even_basis(genus);
    let sum = |idx: &[usize]| {
        idx.iter().fold(HClass::zero(genus), |acc, &i| {
            acc.add(&xs[i]).expect("same genus")
        })
    };
    match which {
        CubeSet::All => (1u64..(1u64 << xs.len()))
            .map(|mask| {
                let idx: Vec<usize> = (0..xs.len()).filter(|&i| mask >> i & 1 == 1).collect();
                cube(&sum(&idx))
            })
            .collect(),
        CubeSet::UpToThreeTerms => {
            let n = xs.len();
            let mut out = Vec::new();
            for a in 0..n {
                out.push(cube(&sum(&[a])));
                for b in a + 1..n {
                    out.push(cube(&sum(&[a, b])));
                    for c in b + 1..n {
                        out.push(cube(&sum(&[a, b, c])));
                    }
                }
            }
            out
        }
    }
}

fn push_gen(genus: usize, i: usize) -> Result<McgExpr> {
    McgExpr::gen(genus, McgGen::Push(Word::letter(genus, i as i32)?))
}

/// Rank of symmetric degree 3 tensors, computed on sorted coordinates.
fn sym_rank(genus: usize, ts: impl IntoIterator<Item = Tensor>) -> Result<usize> {
    rank_of(
        sorted_dim(genus, 3),
        ts.into_iter().map(|t| t.sorted_coords()),
    )
}

/// `(H (x) <omega>) ∩ (H^3)^{S_3}` and the `f`-map argument for its vanishing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaSymCheck {
    pub intersection_dim: usize,
    pub f_kills_sym3: bool,
    pub f_rank_on_h_omega: usize,
}

impl OmegaSymCheck {
    pub fn ok(&self, genus: usize) -> bool {
        self.intersection_dim == 0 && self.f_kills_sym3 && self.f_rank_on_h_omega == genus
    }
}

pub fn omega_sym_check(bases: &InvariantBases) -> Result<OmegaSymCheck> {
    let g = bases.genus;
    let intersection_dim = bases.h_omega.intersection(&bases.sym3)?.dim();
    let mut f_kills_sym3 = true;
    for v in bases.sym3.basis() {
        if !f_map(&Tensor::from_coords(g, 3, v.clone())?)?.is_zero() {
            f_kills_sym3 = false;
            break;
        }
    }
    let images = h_omega_spanning_set(g)?
        .iter()
        .map(|t| f_map(t).map(Tensor::into_coords))
        .collect::<Result<Vec<_>>>()?;
    Ok(OmegaSymCheck {
        intersection_dim,
        f_kills_sym3,
        f_rank_on_h_omega: rank_of(g * g, images)?,
    })
}

/// `0 -> (H_even^3)^{S_3} -> (H^3)^{S_3} --c--> (H^2)^{S_2} -> 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSequenceCheck {
    pub surjective: bool,
    pub kernel_eq: bool,
    pub sym3_dim: usize,
    pub sym2_dim: usize,
    pub even_sym3_dim: usize,
    pub kernel_dim: usize,
}

pub fn exact_sequence_check(bases: &InvariantBases) -> Result<ExactSequenceCheck> {
    let g = bases.genus;
    if g < 3 {
        return Err(Error::GenusTooSmall {
            genus: g,
            min: 3,
            what: "the c-map exact sequence",
        });
    }
    let domain: Vec<BitVec> = bases.sym3.basis().to_vec();
    let images = domain
        .iter()
        .map(|v| c_map(&Tensor::from_coords(g, 3, v.clone())?).map(Tensor::into_coords))
        .collect::<Result<Vec<_>>>()?;
    let image = Subspace::span(g * g, images.iter())?;
    let kernel = kernel_of_map(&domain, &images)?;
    Ok(ExactSequenceCheck {
        surjective: image == bases.sym2,
        kernel_eq: kernel == bases.even_sym3,
        sym3_dim: bases.sym3.dim(),
        sym2_dim: bases.sym2.dim(),
        even_sym3_dim: bases.even_sym3.dim(),
        kernel_dim: kernel.dim(),
    })
}

/// Minimality certificate for the slide-plus-quadruple generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimality {
    pub generator_count: usize,
    pub quotient_dim: usize,
    pub independent: bool,
    pub uses_derived_closed_form: bool,
}

/// Aggregate of the rank computations for one genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSuite {
    pub genus: usize,
    pub omega_sym: OmegaSymCheck,
    pub exact_sequence: ExactSequenceCheck,
    /// Span of tau_1 over slides, even cubes and pushes.
    pub image_rank: usize,
    /// Span of tau_1 over the pushes alone.
    pub push_rank: usize,
    pub minimality: Minimality,
}

impl Tau1Engine {
    pub fn push_values(&self) -> Result<Vec<Tensor>> {
        (1..=self.genus)
            .map(|i| Ok(self.tau1(&push_gen(self.genus, i)?)?.value))
            .collect()
    }

    /// Dimension of the span of `tau_1(Y(i,j))` for all `i != j`, the cubes
    /// `X^3` for `X` in `H_even`, and `tau_1(push(gamma_i))`.
    pub fn image_rank(&self, cubes: CubeSet) -> Result<usize> {
        let g = self.genus;
        let mut vs = Vec::new();
        for i in 1..=g {
            for j in 1..=g {
                if i != j {
                    vs.push(self.tau1(&McgExpr::gen(g, McgGen::YSlide { i, j })?)?.value);
                }
            }
        }
        vs.extend(even_cubes(g, cubes));
        vs.extend(self.push_values()?);
        sym_rank(g, vs)
    }

    pub fn push_rank(&self) -> Result<usize> {
        sym_rank(self.genus, self.push_values()?)
    }

    /// Independence of the minimal generating set's tau_1 values modulo the
    /// span of the push values.
    pub fn minimality(&self) -> Result<Minimality> {
        let g = self.genus;
        let gens = generating_set(g, GeneratingSet::FirstIndexQuadruples)?;
        let mut derived = false;
        let mut values = Vec::with_capacity(gens.len());
        for x in &gens {
            let t = self.tau1(x)?;
            derived |= t.uses_derived_closed_form;
            values.push(t.value);
        }
        let pushes = self.push_values()?;
        let push_rank = sym_rank(g, pushes.clone())?;
        let total = sym_rank(g, pushes.into_iter().chain(values))?;
        let quotient_dim = total - push_rank;
        Ok(Minimality {
            generator_count: gens.len(),
            quotient_dim,
            independent: quotient_dim == gens.len(),
            uses_derived_closed_form: derived,
        })
    }

    pub fn rank_suite(&self) -> Result<RankSuite> {
        let g = self.genus;
        if g < 4 {
            return Err(Error::GenusTooSmall {
                genus: g,
                min: 4,
                what: "the rank suite",
            });
        }
        Ok(RankSuite {
            genus: g,
            omega_sym: omega_sym_check(&self.bases)?,
            exact_sequence: exact_sequence_check(&self.bases)?,
            image_rank: self.image_rank(CubeSet::default_for(g))?,
            push_rank: self.push_rank()?,
            minimality: self.minimality()?,
        })
    }
}

pub fn rank_suite(genus: usize) -> Result<RankSuite> {
    Tau1Engine::new(genus)?.rank_suite()
}

/// Expected value of the image span, for comparison.
pub fn expected_image_rank(genus: usize) -> usize {
    formulas::tau1_image_dim(genus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{parse_expr, slide_inverse_action};
    use crate::tensor::{s2, Tensor};

    fn c(g: usize, i: usize) -> HClass {
        HClass::basis(g, i).unwrap()
    }

    fn mono(g: usize, idx: &[usize]) -> Tensor {
        Tensor::basis(g, idx).unwrap()
    }

    #[test]
    fn identity_is_zero() {
        let g = 3;
        let h = tau1_hom(&SubstEndo::identity(g)).unwrap();
        assert!(h.values.iter().all(Tensor::is_zero));
        assert!(assemble(&h).unwrap().is_zero());
        assert!(tau1(&McgExpr::identity(g)).unwrap().value.is_zero());
        assert!(tau1_appendix(&SubstEndo::identity(g))
            .unwrap()
            .values
            .iter()
            .all(Tensor::is_zero));
    }

    #[test]
    fn slide_hom_values() {
        let g = 4;
        for (i, j) in [(1, 2), (2, 4), (3, 1), (4, 2)] {
            let h = tau1_hom(&slide_inverse_action(g, i, j)).unwrap();
            let expect_i = mono(g, &[i, j])
                .add(&mono(g, &[j, i]))
                .unwrap()
                .add(&mono(g, &[i, i]))
                .unwrap();
            let expected = Tau1Hom {
                genus: g,
                values: (1..=g)
                    .map(|k| {
                        if k == i {
                            expect_i.clone()
                        } else if k == j {
                            mono(g, &[i, i])
                        } else {
                            Tensor::zero(g, 2).unwrap()
                        }
                    })
                    .collect(),
            };
            assert!(h.eq_mod_omega(&expected).unwrap(), "Y({i},{j})");
        }
    }

    #[test]
    fn push_hom_values() {
        let g = 4;
        let i = 2;
        let e = parse_expr(g, "push(g2)").unwrap().inverse_endo().unwrap();
        let h = tau1_hom(&e).unwrap();
        for j in 1..=g {
            let expect = if j == i {
                Tensor::zero(g, 2).unwrap()
            } else {
                mono(g, &[j, i]).add(&mono(g, &[i, j])).unwrap()
            };
            assert_eq!(h.values[j - 1], expect);
        }
    }

    #[test]
    fn lifts() {
        let engine = Tau1Engine::new(4).unwrap();
        let t = s2(&c(4, 1), &c(4, 2)).unwrap();
        assert_eq!(engine.sym_lift(&t).unwrap(), t);
        let w = crate::tensor::omega(4).unwrap();
        let noisy = t.add(&c(4, 2).to_tensor().outer(&w).unwrap()).unwrap();
        assert_eq!(engine.sym_lift(&noisy).unwrap(), t);
        assert!(matches!(
            engine.sym_lift(&mono(4, &[1, 2, 3])),
            Err(Error::NotLiftable)
        ));
        let y12 = tau1_hom(&slide_inverse_action(4, 1, 2)).unwrap();
        let lifted = engine.sym_lift(&assemble(&y12).unwrap()).unwrap();
        assert_eq!(
            lifted,
            s2(&c(4, 1), &HClass::sum_of(4, &[1, 2]).unwrap()).unwrap()
        );
    }

    #[test]
    fn pair_twist_and_quad() {
        let g = 4;
        let t = tau1(&parse_expr(g, "Y(1,2)^-1 * Y(2,1)").unwrap()).unwrap();
        assert_eq!(t.value, cube(&HClass::sum_of(g, &[1, 2]).unwrap()));
        assert!(!t.uses_derived_closed_form);
        let q = tau1(&parse_expr(g, "T2(1,2,3,4)").unwrap()).unwrap();
        assert_eq!(q.value, cube(&HClass::sum_of(g, &[1, 2, 3, 4]).unwrap()));
        assert!(q.uses_derived_closed_form);
    }

    #[test]
    fn not_level2_is_rejected() {
        let g = 3;
        let swap = SubstEndo::new(
            g,
            vec![
                Word::parse(g, "g2").unwrap(),
                Word::parse(g, "g1").unwrap(),
                Word::parse(g, "g3").unwrap(),
            ],
        )
        .unwrap();
        assert!(matches!(tau1_hom(&swap), Err(Error::NotLevel2 { .. })));
        assert!(matches!(tau1_appendix(&swap), Err(Error::NotLevel2 { .. })));
    }

    #[test]
    fn appendix_genus_two_value() {
        let e = slide_inverse_action(2, 1, 2);
        let h = tau1_appendix(&e).unwrap();
        let expect = Tau1Hom {
            genus: 2,
            values: vec![h.values[0].clone(), mono(2, &[1, 1])],
        };
        assert!(h.eq_mod_omega(&expect).unwrap());
    }

    #[test]
    fn rank_suite_genus_four() {
        let r = rank_suite(4).unwrap();
        assert_eq!(r.image_rank, 14);
        assert_eq!(r.push_rank, 4);
        assert_eq!(r.minimality.quotient_dim, 10);
        assert!(r.minimality.independent);
        assert!(r.minimality.uses_derived_closed_form);
        assert!(r.omega_sym.ok(4));
        assert!(r.exact_sequence.surjective && r.exact_sequence.kernel_eq);
        assert!(rank_suite(3).is_err());
    }
}
