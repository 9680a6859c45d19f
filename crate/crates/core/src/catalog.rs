//! Mapping classes by their action on `pi'`.
//!
//! A mapping class is carried as the substitution endomorphism of its
//! *inverse*. Products follow the convention `phi psi = [g ∘ f]` for
//! `phi = [f]`, `psi = [g]`, i.e. the left factor acts first. Hence the inverse
//! action of `f_1 f_2 ... f_n` is `inv(f_1) ∘ inv(f_2) ∘ ... ∘ inv(f_n)`.
//!
//! Crosscap slides `Y(i,j)` use the explicit inverse actions; their forward
//! actions (needed for factors with exponent `-1`) are closed forms obtained
//! from the fact that `Y(i,j)^2` acts as a partial conjugation by the
//! boundary of the Klein bottle neighbourhood. Tests check both are mutually
//! inverse.

use std::fmt;

use crate::error::{Error, Result};
use crate::formulas;
use crate::word::{Letter, SubstEndo, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum McgGen {
    /// Crosscap slide `Y_{i;j}`, `i != j`.
    YSlide { i: usize, j: usize },
    /// Point push along a loop; acts by `u -> w u w^-1`.
    Push(Word),
    /// `T_{i,j}^2 = Y_{i;j}^-1 Y_{j;i}`.
    TSquarePair { i: usize, j: usize },
    /// `T^2_{i,j,k,l}`, `i < j < k < l`. Formal: no `pi_1` action is known,
    /// only its tau_1 value.
    TSquareQuad([usize; 4]),
}

impl McgGen {
    pub fn validate(&self, genus: usize) -> Result<()> {
        let in_range = |x: usize| {
            if (1..=genus).contains(&x) {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange {
                    index: x as i64,
                    genus,
                })
            }
        };
        match self {
            McgGen::YSlide { i, j } | McgGen::TSquarePair { i, j } => {
                in_range(*i)?;
                in_range(*j)?;
                if i == j {
                    return Err(Error::InvalidGenerator(format!(
                        "{self}: indices must differ"
                    )));
                }
            }
            McgGen::Push(w) => {
                if w.genus() != genus {
                    return Err(Error::GenusMismatch {
                        left: genus,
                        right: w.genus(),
                    });
                }
            }
            McgGen::TSquareQuad(q) => {
                for &x in q {
                    in_range(x)?;
                }
                if !q.windows(2).all(|p| p[0] < p[1]) {
                    return Err(Error::InvalidGenerator(format!(
                        "{self}: indices must be strictly increasing"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_formal(&self) -> bool {
        matches!(self, McgGen::TSquareQuad(_))
    }

    /// Action of the inverse mapping class on `pi'`.
    pub fn inverse_action(&self, genus: usize) -> Result<SubstEndo> {
        self.validate(genus)?;
        match self {
            McgGen::YSlide { i, j } => Ok(slide_inverse_action(genus, *i, *j)),
            McgGen::Push(w) => conjugation(&w.inverse()),
            McgGen::TSquarePair { i, j } => {
                slide_forward_action(genus, *i, *j).compose(&slide_inverse_action(genus, *j, *i))
            }
            McgGen::TSquareQuad(_) => Err(Error::FormalOnly),
        }
    }

    /// Action of the mapping class itself on `pi'`.
    pub fn forward_action(&self, genus: usize) -> Result<SubstEndo> {
        self.validate(genus)?;
        match self {
            McgGen::YSlide { i, j } => Ok(slide_forward_action(genus, *i, *j)),
            McgGen::Push(w) => conjugation(w),
            McgGen::TSquarePair { i, j } => {
                slide_forward_action(genus, *j, *i).compose(&slide_inverse_action(genus, *i, *j))
            }
            McgGen::TSquareQuad(_) => Err(Error::FormalOnly),
        }
    }
}

impl fmt::Display for McgGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McgGen::YSlide { i, j } => write!(f, "Y({i},{j})"),
            McgGen::Push(w) => write!(f, "push({w})"),
            McgGen::TSquarePair { i, j } => write!(f, "T2({i},{j})"),
            McgGen::TSquareQuad([a, b, c, d]) => write!(f, "T2({a},{b},{c},{d})"),
        }
    }
}

/// `u -> x u x^-1` on every generator.
fn conjugation(x: &Word) -> Result<SubstEndo> {
    let g = x.genus();
    let images = (1..=g as Letter)
        .map(|k| Word::letter(g, k)?.conjugate_by(x))
        .collect::<Result<_>>()?;
    SubstEndo::new(g, images)
}

fn w(genus: usize, letters: impl IntoIterator<Item = Letter>) -> Word {
    Word::from_letters(genus, letters).expect("catalog letters are in range")
}

/// `gamma_lo^2 gamma_{lo+1}^2 ... gamma_hi^2`, empty when `lo > hi`.
fn squares(genus: usize, lo: usize, hi: usize) -> Word {
    w(genus, (lo..=hi).flat_map(|k| [k as Letter, k as Letter]))
}

fn cat(genus: usize, parts: &[&Word]) -> Word {
    Word::product(genus, parts.iter().copied()).expect("same genus")
}

fn with_images(genus: usize, i: usize, img_i: Word, j: usize, img_j: Word) -> SubstEndo {
    let mut images = SubstEndo::identity(genus).images().to_vec();
    images[i - 1] = img_i;
    images[j - 1] = img_j;
    SubstEndo::new(genus, images).expect("g images")
}

/// Inverse action of the crosscap slide `Y_{i;j}`.
pub fn slide_inverse_action(genus: usize, i: usize, j: usize) -> SubstEndo {
    let g = genus;
    let (gi, gj) = (w(g, [i as Letter]), w(g, [j as Letter]));
    let gi_inv = gi.inverse();
    let gi_sq = gi.pow(2);
    if i < j {
        let p = squares(g, i + 1, j - 1);
        let conj = cat(g, &[&p, &gj, &p.inverse()]);
        let img_i = cat(g, &[&conj.inverse(), &gi_inv, &conj]);
        let q = squares(g, i + 1, j);
        let img_j = cat(g, &[&gj, &q.inverse(), &gi_sq, &q]);
        with_images(g, i, img_i, j, img_j)
    } else {
        let a = squares(g, j + 1, i);
        let conj = cat(g, &[&a.inverse(), &gj, &a]);
        let img_i = cat(g, &[&conj.inverse(), &gi_inv, &conj]);
        let p = squares(g, j + 1, i - 1);
        let img_j = cat(g, &[&gj, &p, &gi_sq, &p.inverse()]);
        with_images(g, i, img_i, j, img_j)
    }
}

/// Forward action of the crosscap slide `Y_{i;j}`.
pub fn slide_forward_action(genus: usize, i: usize, j: usize) -> SubstEndo {
    let g = genus;
    let (gi, gj) = (w(g, [i as Letter]), w(g, [j as Letter]));
    let (gi_inv, gj_inv) = (gi.inverse(), gj.inverse());
    if i < j {
        let p = squares(g, i + 1, j - 1);
        let p_inv = p.inverse();
        let gi_sq = gi.pow(2);
        let img_i = cat(
            g,
            &[
                &gi_sq,
                &p,
                &gj,
                &p_inv,
                &gi_inv,
                &p,
                &gj_inv,
                &p_inv,
                &gi_sq.inverse(),
            ],
        );
        let img_j = cat(g, &[&p_inv, &gi_sq, &p, &gj]);
        with_images(g, i, img_i, j, img_j)
    } else {
        let p = squares(g, j + 1, i - 1);
        let p_inv = p.inverse();
        let img_i = cat(g, &[&p_inv, &gj, &p, &gi_inv, &p_inv, &gj_inv, &p]);
        let img_j = cat(g, &[&gj.pow(2), &p, &gi.pow(2), &p_inv, &gj_inv]);
        with_images(g, i, img_i, j, img_j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub gen: McgGen,
    pub inverted: bool,
}

/// A word in catalog generators, read with the left factor acting first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct McgExpr {
    genus: usize,
    factors: Vec<Factor>,
}

impl McgExpr {
    pub fn identity(genus: usize) -> Self {
        McgExpr {
            genus,
            factors: Vec::new(),
        }
    }

    pub fn gen(genus: usize, gen: McgGen) -> Result<Self> {
        Self::new(
            genus,
            vec![Factor {
                gen,
                inverted: false,
            }],
        )
    }

    pub fn new(genus: usize, factors: Vec<Factor>) -> Result<Self> {
        for f in &factors {
            f.gen.validate(genus)?;
        }
        Ok(McgExpr { genus, factors })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_formal(&self) -> bool {
        self.factors.iter().any(|f| f.gen.is_formal())
    }

    pub fn mul(&self, other: &McgExpr) -> Result<McgExpr> {
        crate::tensor::check_genus(self.genus, other.genus)?;
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(McgExpr {
            genus: self.genus,
            factors,
        })
    }

    pub fn inverse(&self) -> McgExpr {
        McgExpr {
            genus: self.genus,
            factors: self
                .factors
                .iter()
                .rev()
                .map(|f| Factor {
                    gen: f.gen.clone(),
                    inverted: !f.inverted,
                })
                .collect(),
        }
    }

    /// Substitution endomorphism of the inverse mapping class.
    pub fn inverse_endo(&self) -> Result<SubstEndo> {
        let mut acc = SubstEndo::identity(self.genus);
        for f in &self.factors {
            let inv = if f.inverted {
                f.gen.forward_action(self.genus)?
            } else {
                f.gen.inverse_action(self.genus)?
            };
            acc = acc.compose(&inv)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for McgExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, fac) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{}", fac.gen)?;
            if fac.inverted {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Which published generating set to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratingSet {
    /// Slides `Y(i,j)`, `i <= g-1`, plus `T2(i,j,k,l)` for all `i<j<k<l`.
    AllQuadruples,
    /// Slides `Y(i,j)`, `i <= g-1`, plus `T2(1,j,k,l)` only. Minimal.
    FirstIndexQuadruples,
}

pub fn generating_set(genus: usize, which: GeneratingSet) -> Result<Vec<McgExpr>> {
    if genus < 4 {
        return Err(Error::GenusTooSmall {
            genus,
            min: 4,
            what: "generating sets",
        });
    }
    let g = genus;
    let mut out = Vec::new();
    for i in 1..g {
        for j in 1..=g {
            if i != j {
                out.push(McgExpr::gen(g, McgGen::YSlide { i, j })?);
            }
        }
    }
    let first_range = match which {
        GeneratingSet::AllQuadruples => 1..=g,
        GeneratingSet::FirstIndexQuadruples => 1..=1,
    };
    for a in first_range {
        for b in a + 1..=g {
            for c in b + 1..=g {
                for d in c + 1..=g {
                    out.push(McgExpr::gen(g, McgGen::TSquareQuad([a, b, c, d]))?);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountIdentity {
    pub count: usize,
    pub predicted: usize,
    pub equal: bool,
}

/// Compares the size of the minimal generating set with `C(g,3) + C(g,2)`.
pub fn generator_count_identity(genus: usize) -> Result<CountIdentity> {
    let count = generating_set(genus, GeneratingSet::FirstIndexQuadruples)?.len();
    let predicted = formulas::abelianization_dim(genus);
    Ok(CountIdentity {
        count,
        predicted,
        equal: count == predicted,
    })
}

/// Every slide `Y(i,j)`, every pair twist `T2(i,j)` with `i<j`, and every
/// generator push `push(g_i)`.
pub fn catalog_generators(genus: usize) -> Result<Vec<McgExpr>> {
    let g = genus;
    let mut out = Vec::new();
    for i in 1..=g {
        for j in 1..=g {
            if i != j {
                out.push(McgExpr::gen(g, McgGen::YSlide { i, j })?);
            }
        }
    }
    for i in 1..=g {
        for j in i + 1..=g {
            out.push(McgExpr::gen(g, McgGen::TSquarePair { i, j })?);
        }
    }
    for i in 1..=g {
        out.push(McgExpr::gen(
            g,
            McgGen::Push(Word::letter(g, i as Letter)?),
        )?);
    }
    Ok(out)
}

const MAX_EXPONENT: u64 = 64;

/// Parses `Y(1,2)^-1 * Y(2,1) * T2(1,2,3,4) * push(g1 g2^-1)`.
///
/// Factors are separated by `*` or `·`; `1` alone is the identity. Error
/// positions are character offsets.
pub fn parse_expr(genus: usize, text: &str) -> Result<McgExpr> {
    let mut p = ExprParser {
        chars: text.chars().collect(),
        pos: 0,
        genus,
    };
    p.skip_ws();
    if p.rest_trimmed() == "1" {
        return Ok(McgExpr::identity(genus));
    }
    let mut factors = Vec::new();
    loop {
        p.skip_ws();
        let (gen, exp) = p.term()?;
        let inverted = exp < 0;
        for _ in 0..exp.unsigned_abs() {
            factors.push(Factor {
                gen: gen.clone(),
                inverted,
            });
        }
        p.skip_ws();
        match p.peek() {
            None => break,
            Some('*') | Some('·') => p.pos += 1,
            Some(_) => return Err(p.err("expected `*` or end of input")),
        }
    }
    McgExpr::new(genus, factors)
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
    genus: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn rest_trimmed(&self) -> String {
        self.chars[self.pos..]
            .iter()
            .collect::<String>()
            .trim()
            .to_string()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn eat(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n]
                .iter()
                .copied()
                .eq(s.chars())
        {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer too large".into(),
            })
    }

    fn index_list(&mut self) -> Result<Vec<usize>> {
        self.expect('(')?;
        let mut out = vec![self.uint()? as usize];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    out.push(self.uint()? as usize);
                }
                Some(')') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.err("expected `,` or `)`")),
            }
        }
    }

    fn term(&mut self) -> Result<(McgGen, i64)> {
        let start = self.pos;
        let gen = if self.eat("push") {
            self.expect('(')?;
            let open = self.pos;
            let close = self.chars[open..]
                .iter()
                .position(|&c| c == ')')
                .map(|k| open + k)
                .ok_or_else(|| self.err("unterminated `push(`"))?;
            let inner: String = self.chars[open..close].iter().collect();
            let word = Word::parse_at(self.genus, &inner, open)?;
            self.pos = close + 1;
            McgGen::Push(word)
        } else if self.eat("T2") {
            let idx = self.index_list()?;
            match idx.as_slice() {
                [i, j] => McgGen::TSquarePair { i: *i, j: *j },
                [a, b, c, d] => McgGen::TSquareQuad([*a, *b, *c, *d]),
                _ => {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "T2 takes 2 or 4 indices".into(),
                    })
                }
            }
        } else if self.eat("Y") {
            let idx = self.index_list()?;
            match idx.as_slice() {
                [i, j] => McgGen::YSlide { i: *i, j: *j },
                _ => {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "Y takes 2 indices".into(),
                    })
                }
            }
        } else {
            return Err(self.err("expected `Y(`, `T2(` or `push(`"));
        };
        gen.validate(self.genus)?;
        self.skip_ws();
        let mut exp = 1i64;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let neg = self.peek() == Some('-');
            if neg {
                self.pos += 1;
            }
            let at = self.pos;
            let e = self.uint()?;
            if e > MAX_EXPONENT {
                return Err(Error::Parse {
                    pos: at,
                    msg: format!("exponent larger than {MAX_EXPONENT}"),
                });
            }
            exp = if neg { -(e as i64) } else { e as i64 };
        }
        Ok((gen, exp))
    }
}
