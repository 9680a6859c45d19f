//! Verification suites and their reports.
//!
//! Each suite runs a fixed set of exact checks at one genus. Randomized
//! checks draw from a ChaCha8 stream keyed by `(seed, genus, suite)`, so a
//! report depends only on those three inputs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{
    catalog_generators, generating_set, generator_count_identity, Factor, GeneratingSet, McgExpr,
    McgGen,
};
use crate::error::{Error, Result};
use crate::formulas;
use crate::homology::{homology_class, is_level2, preserves_form, HomologyAction};
use crate::johnson::{
    exact_sequence_check, omega_sym_check, tau1_appendix, tau1_hom, CubeSet, Tau1Engine,
};
use crate::magnus::{theta2, theta2_bar_eq};
use crate::tensor::{cube, omega, s2, HClass, InvariantBases, Tensor};
use crate::word::{relator, Letter, Word};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const MAX_GENUS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Magnus,
    Lemma34,
    Lemma35,
    Lemma42,
    Lemma43,
    Minimality,
    Appendix,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Magnus,
        Suite::Lemma34,
        Suite::Lemma35,
        Suite::Lemma42,
        Suite::Lemma43,
        Suite::Minimality,
        Suite::Appendix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Magnus => "magnus",
            Suite::Lemma34 => "lemma34",
            Suite::Lemma35 => "lemma35",
            Suite::Lemma42 => "lemma42",
            Suite::Lemma43 => "lemma43",
            Suite::Minimality => "minimality",
            Suite::Appendix => "appendix",
        }
    }

    pub fn min_genus(self) -> usize {
        match self {
            Suite::Magnus | Suite::Lemma34 | Suite::Lemma35 | Suite::Appendix => 2,
            Suite::Lemma42 => 3,
            Suite::Lemma43 | Suite::Minimality => 4,
        }
    }

    pub fn applies_to(self, genus: usize) -> bool {
        genus >= self.min_genus()
    }

    /// Parses `name[,name...]`; `all` expands to every suite. Duplicates are
    /// dropped and the result is in canonical order.
    pub fn parse_list(text: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim) {
            if part == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(Error::Empty("suite list"));
        }
        Ok(out)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown suite `{s}`"),
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Finding,
    Fail,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Finding => "FINDING",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub values: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &str, status: Status) -> Self {
        Check {
            name: name.to_string(),
            status,
            values: BTreeMap::new(),
            detail: None,
        }
    }

    fn with(mut self, key: &str, value: usize) -> Self {
        self.values.insert(key.to_string(), value as u64);
        self
    }

    fn detail(mut self, text: impl Into<String>) -> Self {
        self.detail = Some(text.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub genus: usize,
    pub suite: Suite,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl Report {
    /// Worst status over all checks.
    pub fn status(&self) -> Status {
        self.checks
            .iter()
            .map(|c| c.status)
            .max()
            .unwrap_or(Status::Pass)
    }

    pub fn has_fail(&self) -> bool {
        self.status() == Status::Fail
    }
}

/// Counts of random trials per genus for the randomized checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub conjugators: usize,
    pub relator_insertions: usize,
    pub jet_pairs: usize,
    pub hom_pairs: usize,
    pub conjugations: usize,
    pub appendix_products: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            conjugators: 1000,
            relator_insertions: 500,
            jet_pairs: 1000,
            hom_pairs: 200,
            conjugations: 50,
            appendix_products: 100,
        }
    }
}

pub fn suite_rng(seed: u64, genus: usize, suite: Suite) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((genus as u64) << 8) | suite as u64);
    rng
}

/// Uniform random freely reduced word of length at most `max_len`.
pub fn random_word<R: Rng>(rng: &mut R, genus: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| {
        let i = rng.gen_range(1..=genus as Letter);
        if rng.gen() {
            i
        } else {
            -i
        }
    });
    Word::from_letters(genus, letters.collect::<Vec<_>>()).expect("letters in range")
}

/// Product of one to three random non-formal catalog factors, each possibly
/// inverted. Pushes occasionally use a random short loop.
pub fn random_expr<R: Rng>(rng: &mut R, genus: usize) -> McgExpr {
    let gens = catalog_generators(genus).expect("genus >= 2");
    let n = rng.gen_range(1..=3);
    let factors = (0..n)
        .map(|_| {
            let gen = if rng.gen_ratio(1, 8) {
                McgGen::Push(random_word(rng, genus, 4))
            } else {
                gens.choose(rng).expect("nonempty").factors()[0].gen.clone()
            };
            Factor {
                gen,
                inverted: rng.gen(),
            }
        })
        .collect();
    McgExpr::new(genus, factors).expect("valid factors")
}

fn count_check(name: &str, trials: usize, violations: usize) -> Check {
    Check::new(name, Status::from_bool(violations == 0))
        .with("trials", trials)
        .with("violations", violations)
}

/// Shared per-genus state; the engine is built on first use.
pub struct GenusContext {
    genus: usize,
    engine: Option<Tau1Engine>,
}

impl GenusContext {
    pub fn new(genus: usize) -> Self {
        GenusContext {
            genus,
            engine: None,
        }
    }

    fn engine(&mut self) -> Result<&Tau1Engine> {
        if self.engine.is_none() {
            self.engine = Some(Tau1Engine::new(self.genus)?);
        }
        Ok(self.engine.as_ref().expect("just set"))
    }

    fn bases(&mut self) -> Result<&InvariantBases> {
        Ok(self.engine()?.bases())
    }

    pub fn run(&mut self, suite: Suite, seed: u64, budget: &Budget) -> Result<Report> {
        let g = self.genus;
        if !suite.applies_to(g) {
            return Err(Error::GenusTooSmall {
                genus: g,
                min: suite.min_genus(),
                what: suite.name(),
            });
        }
        let start = Instant::now();
        let mut rng = suite_rng(seed, g, suite);
        let checks = match suite {
            Suite::Magnus => magnus_checks(g, &mut rng, budget)?,
            Suite::Lemma34 => generator_value_checks(self.engine()?, &mut rng, budget)?,
            Suite::Lemma35 => vec![omega_sym(self.bases()?)?],
            Suite::Lemma42 => vec![exact_sequence(self.bases()?)?],
            Suite::Lemma43 => image_checks(self.engine()?)?,
            Suite::Minimality => minimality_checks(self.engine()?)?,
            Suite::Appendix => appendix_checks(g, &mut rng, budget)?,
        };
        Ok(Report {
            genus: g,
            suite,
            checks,
            wall_ms: Some(start.elapsed().as_millis() as u64),
        })
    }
}

pub fn run_suite(suite: Suite, genus: usize, seed: u64) -> Result<Report> {
    GenusContext::new(genus).run(suite, seed, &Budget::default())
}

/// Runs every applicable suite for every genus in `genera`, genera in
/// parallel, and returns reports ordered by genus then suite. Suites that do
/// not apply to a genus are skipped; it is an error if a requested suite
/// applies to none of them.
pub fn run_many(
    genera: &[usize],
    suites: &[Suite],
    seed: u64,
    budget: &Budget,
) -> Result<Vec<Report>> {
    for &g in genera {
        check_genus_range(g)?;
    }
    for &s in suites {
        if !genera.iter().any(|&g| s.applies_to(g)) {
            return Err(Error::GenusTooSmall {
                genus: genera.iter().copied().max().unwrap_or(0),
                min: s.min_genus(),
                what: s.name(),
            });
        }
    }
    let per_genus: Vec<Result<Vec<Report>>> = genera
        .par_iter()
        .map(|&g| {
            let mut ctx = GenusContext::new(g);
            suites
                .iter()
                .filter(|s| s.applies_to(g))
                .map(|&s| ctx.run(s, seed, budget))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for r in per_genus {
        out.extend(r?);
    }
    Ok(out)
}

pub fn check_genus_range(genus: usize) -> Result<()> {
    if genus < 2 {
        return Err(Error::GenusTooSmall {
            genus,
            min: 2,
            what: "verification",
        });
    }
    if genus > MAX_GENUS {
        return Err(Error::GenusTooLarge {
            genus,
            max: MAX_GENUS,
        });
    }
    Ok(())
}

fn magnus_checks(g: usize, rng: &mut ChaCha8Rng, budget: &Budget) -> Result<Vec<Check>> {
    let r = relator(g);
    let w = omega(g)?;
    let mut bad = 0;
    for _ in 0..budget.conjugators {
        let x = random_word(rng, g, 30);
        if theta2(&r.conjugate_by(&x)?).deg2 != w {
            bad += 1;
        }
    }
    let conj = count_check("conjugated_relator_is_omega", budget.conjugators, bad);

    let mut bad = 0;
    for _ in 0..budget.relator_insertions {
        let u = random_word(rng, g, 20);
        let x = random_word(rng, g, 10);
        let rr = if rng.gen() { r.clone() } else { r.inverse() };
        let cut = rng.gen_range(0..=u.len());
        let (a, b) = u.letters().split_at(cut);
        let v = Word::product(
            g,
            [
                &Word::from_letters(g, a.to_vec())?,
                &rr.conjugate_by(&x)?,
                &Word::from_letters(g, b.to_vec())?,
            ],
        )?;
        if !theta2_bar_eq(&u, &v)? {
            bad += 1;
        }
    }
    let well_defined = count_check(
        "relator_insertion_invariance",
        budget.relator_insertions,
        bad,
    );

    let mut bad = 0;
    for _ in 0..budget.jet_pairs {
        let u = random_word(rng, g, 20);
        let v = random_word(rng, g, 20);
        let tu = theta2(&u);
        if theta2(&u.concat(&v)?) != tu.mul(&theta2(&v))? || homology_class(&u) != tu.deg1 {
            bad += 1;
            continue;
        }
        let sq = tu.deg1.to_tensor().outer(&tu.deg1.to_tensor())?;
        if theta2(&u.inverse()).deg2 != tu.deg2.add(&sq)? {
            bad += 1;
        }
    }
    let jets = count_check("jet_product_and_inverse", budget.jet_pairs, bad);
    Ok(vec![conj, well_defined, jets])
}

fn generator_value_checks(
    engine: &Tau1Engine,
    rng: &mut ChaCha8Rng,
    budget: &Budget,
) -> Result<Vec<Check>> {
    let g = engine.genus();
    let c = |i: usize| HClass::basis(g, i);
    let mut slide_bad = 0;
    let mut pair_bad = 0;
    let mut slides = 0;
    let mut pairs = 0;
    for i in 1..=g {
        for j in 1..=g {
            if i == j {
                continue;
            }
            slides += 1;
            let y = engine
                .tau1(&McgExpr::gen(g, McgGen::YSlide { i, j })?)?
                .value;
            if y != s2(&c(i)?, &c(i)?.add(&c(j)?)?)? {
                slide_bad += 1;
            }
            pairs += 1;
            let expr = McgExpr::new(
                g,
                vec![
                    Factor {
                        gen: McgGen::YSlide { i, j },
                        inverted: true,
                    },
                    Factor {
                        gen: McgGen::YSlide { i: j, j: i },
                        inverted: false,
                    },
                ],
            )?;
            if engine.tau1(&expr)?.value != cube(&c(i)?.add(&c(j)?)?) {
                pair_bad += 1;
            }
        }
    }
    let mut push_bad = 0;
    for i in 1..=g {
        let p = engine
            .tau1(&McgExpr::gen(
                g,
                McgGen::Push(Word::letter(g, i as Letter)?),
            )?)?
            .value;
        let mut expect = Tensor::zero(g, 3)?;
        for j in 1..=g {
            expect.add_assign(&s2(&c(j)?, &c(i)?)?)?;
        }
        if p != expect {
            push_bad += 1;
        }
    }

    let mut cat_bad = 0;
    let gens = catalog_generators(g)?;
    for x in &gens {
        let e = x.inverse_endo()?;
        if !(e.descends_to_pi() && is_level2(&e) && preserves_form(&e)) {
            cat_bad += 1;
        }
    }

    let mut hom_bad = 0;
    let mut tor_bad = 0;
    for _ in 0..budget.hom_pairs {
        let x = random_expr(rng, g);
        let y = random_expr(rng, g);
        let tx = engine.tau1(&x)?.value;
        let ty = engine.tau1(&y)?.value;
        if engine.tau1(&x.mul(&y)?)?.value != tx.add(&ty)? {
            hom_bad += 1;
        }
        if engine.tau1(&x.inverse())?.value != tx {
            tor_bad += 1;
        }
    }
    let mut conj_bad = 0;
    for _ in 0..budget.conjugations {
        let x = random_expr(rng, g);
        let y = random_expr(rng, g);
        let yxy = y.inverse().mul(&x)?.mul(&y)?;
        if engine.tau1(&yxy)?.value != engine.tau1(&x)?.value {
            conj_bad += 1;
        }
    }

    Ok(vec![
        count_check("slide_closed_form", slides, slide_bad),
        count_check("pair_twist_closed_form", pairs, pair_bad),
        count_check("push_closed_form", g, push_bad),
        count_check(
            "catalog_level2_descends_preserves_form",
            gens.len(),
            cat_bad,
        ),
        count_check("homomorphism_law", budget.hom_pairs, hom_bad),
        count_check("two_torsion_law", budget.hom_pairs, tor_bad),
        count_check("conjugation_invariance", budget.conjugations, conj_bad),
    ])
}

fn omega_sym(bases: &InvariantBases) -> Result<Check> {
    let g = bases.genus;
    let r = omega_sym_check(bases)?;
    Ok(
        Check::new("omega_meets_sym3_trivially", Status::from_bool(r.ok(g)))
            .with("intersection_dim", r.intersection_dim)
            .with("f_kills_sym3", r.f_kills_sym3 as usize)
            .with("f_rank_on_h_omega", r.f_rank_on_h_omega)
            .with("h_omega_dim", bases.h_omega.dim()),
    )
}

fn exact_sequence(bases: &InvariantBases) -> Result<Check> {
    let g = bases.genus;
    let r = exact_sequence_check(bases)?;
    let dims_ok = r.sym3_dim == formulas::sym3_dim(g)
        && r.sym2_dim == formulas::sym2_dim(g)
        && r.even_sym3_dim == formulas::even_sym3_dim(g);
    Ok(Check::new(
        "c_map_exact_sequence",
        Status::from_bool(r.surjective && r.kernel_eq && dims_ok),
    )
    .with("sym3_dim", r.sym3_dim)
    .with("sym2_dim", r.sym2_dim)
    .with("even_sym3_dim", r.even_sym3_dim)
    .with("kernel_dim", r.kernel_dim)
    .with("surjective", r.surjective as usize)
    .with("kernel_eq", r.kernel_eq as usize))
}

fn image_checks(engine: &Tau1Engine) -> Result<Vec<Check>> {
    let g = engine.genus();
    let rank = engine.image_rank(CubeSet::default_for(g))?;
    let bound = formulas::tau1_image_dim(g);
    let status = match rank.cmp(&bound) {
        std::cmp::Ordering::Equal => Status::Pass,
        std::cmp::Ordering::Greater => Status::Finding,
        std::cmp::Ordering::Less => Status::Fail,
    };
    let mut image = Check::new("image_span_rank", status)
        .with("rank", rank)
        .with("lower_bound", bound);
    if status == Status::Finding {
        image = image.detail("rank exceeds the lower bound; equality was expected");
    }
    let push_rank = engine.push_rank()?;
    let push = Check::new("push_span_rank", Status::from_bool(push_rank == g))
        .with("rank", push_rank)
        .with("expected", g);
    Ok(vec![image, push])
}

fn minimality_checks(engine: &Tau1Engine) -> Result<Vec<Check>> {
    let g = engine.genus();
    let m = engine.minimality()?;
    let expected = formulas::abelianization_dim(g);
    let mut check = Check::new(
        "generator_independence",
        Status::from_bool(m.independent && m.quotient_dim == expected),
    )
    .with("quotient_dim", m.quotient_dim)
    .with("generator_count", m.generator_count)
    .with("expected", expected);
    if m.uses_derived_closed_form {
        check = check.detail("derived closed form for T2(1,j,k,l)");
    }
    let id = generator_count_identity(g)?;
    let count = Check::new("generator_count_identity", Status::from_bool(id.equal))
        .with("count", id.count)
        .with("predicted", id.predicted);
    Ok(vec![check, count])
}

fn appendix_checks(g: usize, rng: &mut ChaCha8Rng, budget: &Budget) -> Result<Vec<Check>> {
    let mut exprs = catalog_generators(g)?;
    let n_catalog = exprs.len();
    exprs.extend((0..budget.appendix_products).map(|_| random_expr(rng, g)));
    let mut cat_bad = 0;
    let mut rnd_bad = 0;
    let mut sym_bad = 0;
    for (k, x) in exprs.iter().enumerate() {
        let e = x.inverse_endo()?;
        let a = tau1_appendix(&e)?;
        if !a.eq_mod_omega(&tau1_hom(&e)?)? {
            if k < n_catalog {
                cat_bad += 1;
            } else {
                rnd_bad += 1;
            }
        }
        let swap = [1, 0];
        for v in &a.values {
            if v.permute(&swap)? != *v {
                sym_bad += 1;
            }
        }
    }
    Ok(vec![
        count_check("catalog_agreement", n_catalog, cat_bad),
        count_check(
            "random_product_agreement",
            budget.appendix_products,
            rnd_bad,
        ),
        count_check("raw_values_symmetric", exprs.len() * g, sym_bad),
    ])
}

/// Paired formula and computed values; `computed` is `None` where the
/// computation does not apply at this genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Column {
    pub formula: u64,
    pub computed: Option<u64>,
}

impl Column {
    fn new(formula: usize, computed: Option<usize>) -> Self {
        Column {
            formula: formula as u64,
            computed: computed.map(|c| c as u64),
        }
    }

    pub fn mismatch(&self) -> bool {
        self.computed.is_some_and(|c| c != self.formula)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsRow {
    pub genus: usize,
    pub abelianization: Column,
    pub image_span: Column,
    pub sym2: Column,
    pub sym3: Column,
    pub even_sym3: Column,
    pub generators: Column,
    pub uses_derived_closed_form: bool,
}

impl DimsRow {
    pub fn columns(&self) -> [(&'static str, Column); 6] {
        [
            ("abelianization", self.abelianization),
            ("image_span", self.image_span),
            ("sym2", self.sym2),
            ("sym3", self.sym3),
            ("even_sym3", self.even_sym3),
            ("generators", self.generators),
        ]
    }

    pub fn has_mismatch(&self) -> bool {
        self.columns().iter().any(|(_, c)| c.mismatch())
    }
}

/// One row of the dimension table. Needs `g >= 3`; the abelianization,
/// image and generator columns are computed only for `g >= 4`.
pub fn dims_row(genus: usize) -> Result<DimsRow> {
    let g = genus;
    if g < 3 {
        return Err(Error::GenusTooSmall {
            genus: g,
            min: 3,
            what: "the dimension table",
        });
    }
    check_genus_range(g)?;
    let engine = Tau1Engine::new(g)?;
    let b = engine.bases();
    let (abel, image, gens, derived) = if g >= 4 {
        let m = engine.minimality()?;
        let image = engine.image_rank(CubeSet::UpToThreeTerms)?;
        let gens = generating_set(g, GeneratingSet::FirstIndexQuadruples)?.len();
        (
            Some(m.quotient_dim),
            Some(image),
            Some(gens),
            m.uses_derived_closed_form,
        )
    } else {
        (None, None, None, false)
    };
    Ok(DimsRow {
        genus: g,
        abelianization: Column::new(formulas::abelianization_dim(g), abel),
        image_span: Column::new(formulas::tau1_image_dim(g), image),
        sym2: Column::new(formulas::sym2_dim(g), Some(b.sym2.dim())),
        sym3: Column::new(formulas::sym3_dim(g), Some(b.sym3.dim())),
        even_sym3: Column::new(formulas::even_sym3_dim(g), Some(b.even_sym3.dim())),
        generators: Column::new(formulas::generator_count(g), gens),
        uses_derived_closed_form: derived,
    })
}

/// Rows for every genus, computed in parallel and returned in order.
pub fn dims_table(genera: &[usize]) -> Result<Vec<DimsRow>> {
    genera.par_iter().map(|&g| dims_row(g)).collect()
}

/// Homology matrix of the inverse action of `x`, for error reporting.
pub fn action_matrix(x: &McgExpr) -> Result<String> {
    Ok(HomologyAction::of(&x.inverse_endo()?).to_string())
}
