//! Words in the free group `pi' = pi_1(N_g - Int D)` on `gamma_1, ..., gamma_g`
//! and substitution endomorphisms of it.
//!
//! A letter is a nonzero `i32`: `+i` is `gamma_i`, `-i` its inverse. Words are
//! kept freely reduced at all times. Products follow path order, so
//! `u.concat(v)` traverses `u` first.

use std::fmt;

use crate::error::{Error, Result};
use crate::tensor::check_genus;

pub type Letter = i32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    genus: usize,
    letters: Vec<Letter>,
}

/// Appends `l` to a reduced buffer, cancelling against the tail.
#[inline]
fn push_reduced(buf: &mut Vec<Letter>, l: Letter) {
    if buf.last() == Some(&-l) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

fn check_letter(genus: usize, l: Letter) -> Result<()> {
    if l != 0 && (l.unsigned_abs() as usize) <= genus {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            index: l as i64,
            genus,
        })
    }
}

impl Word {
    pub fn identity(genus: usize) -> Self {
        Word {
            genus,
            letters: Vec::new(),
        }
    }

    /// Single-letter word; `letter` may be negative.
    pub fn letter(genus: usize, letter: Letter) -> Result<Self> {
        check_letter(genus, letter)?;
        Ok(Word {
            genus,
            letters: vec![letter],
        })
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters(genus: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut buf = Vec::new();
        for l in letters {
            check_letter(genus, l)?;
            push_reduced(&mut buf, l);
        }
        Ok(Word {
            genus,
            letters: buf,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        check_genus(self.genus, other.genus)?;
        let mut buf = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut buf, l);
        }
        Ok(Word {
            genus: self.genus,
            letters: buf,
        })
    }

    /// Product of several words in order.
    pub fn product<'a>(genus: usize, words: impl IntoIterator<Item = &'a Word>) -> Result<Word> {
        words
            .into_iter()
            .try_fold(Word::identity(genus), |acc, w| acc.concat(w))
    }

    pub fn inverse(&self) -> Word {
        Word {
            genus: self.genus,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity(self.genus);
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base).expect("same genus");
        }
        out
    }

    /// `x * self * x^-1`.
    pub fn conjugate_by(&self, x: &Word) -> Result<Word> {
        x.concat(self)?.concat(&x.inverse())
    }

    /// Strips matching inverse pairs from the two ends.
    pub fn cyclically_reduced(&self) -> Word {
        let l = &self.letters;
        let (mut lo, mut hi) = (0, l.len());
        while hi - lo >= 2 && l[lo] == -l[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        Word {
            genus: self.genus,
            letters: l[lo..hi].to_vec(),
        }
    }

    /// Whether `other` is a cyclic rotation of `self` (letter sequences).
    pub fn is_rotation_of(&self, other: &Word) -> bool {
        let (a, b) = (&self.letters, &other.letters);
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|s| a[s..].iter().chain(&a[..s]).eq(b.iter()))
    }

    /// Parses `g1 g2^-1 g1^2` style text; `1` or empty text is the identity.
    pub fn parse(genus: usize, text: &str) -> Result<Word> {
        Self::parse_at(genus, text, 0)
    }

    /// As [`Word::parse`], reporting error positions shifted by `offset`.
    pub(crate) fn parse_at(genus: usize, text: &str, offset: usize) -> Result<Word> {
        let mut letters = Vec::new();
        let bytes = text.as_bytes();
        let mut pos = 0;
        let err = |pos: usize, msg: &str| Error::Parse {
            pos: offset + pos,
            msg: msg.to_string(),
        };
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if text[pos..].trim() == "1" {
            return Ok(Word::identity(genus));
        }
        while pos < bytes.len() {
            let start = pos;
            if bytes[pos] != b'g' {
                return Err(err(pos, "expected generator like `g1`"));
            }
            pos += 1;
            let idx =
                parse_uint(bytes, &mut pos).ok_or_else(|| err(pos, "expected generator index"))?;
            let mut exp: i64 = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let neg = pos < bytes.len() && bytes[pos] == b'-';
                if neg {
                    pos += 1;
                }
                let e = parse_uint(bytes, &mut pos).ok_or_else(|| err(pos, "expected exponent"))?;
                exp = if neg { -(e as i64) } else { e as i64 };
            }
            if idx == 0 || idx as usize > genus {
                return Err(Error::IndexOutOfRange {
                    index: idx as i64,
                    genus,
                });
            }
            let l = idx as Letter;
            let l = if exp < 0 { -l } else { l };
            for _ in 0..exp.unsigned_abs() {
                letters.push(l);
            }
            if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                return Err(err(pos, "expected whitespace between generators"));
            }
            skip_ws(&mut pos);
            debug_assert!(pos > start);
        }
        Word::from_letters(genus, letters)
    }
}

fn parse_uint(bytes: &[u8], pos: &mut usize) -> Option<u64> {
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        return None;
    }
    std::str::from_utf8(&bytes[start..*pos]).ok()?.parse().ok()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let exp = if l < 0 { -(run as i64) } else { run as i64 };
            if exp == 1 {
                write!(f, "g{}", l.abs())?;
            } else {
                write!(f, "g{}^{}", l.abs(), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word<{}>({})", self.genus, self)
    }
}

/// The boundary word `gamma_1^2 gamma_2^2 ... gamma_g^2`.
pub fn relator(genus: usize) -> Word {
    Word {
        genus,
        letters: (1..=genus as Letter).flat_map(|i| [i, i]).collect(),
    }
}

/// An endomorphism of `pi'` given by the images of the generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubstEndo {
    genus: usize,
    images: Vec<Word>,
}

impl SubstEndo {
    pub fn identity(genus: usize) -> Self {
        SubstEndo {
            genus,
            images: (1..=genus as Letter)
                .map(|i| Word {
                    genus,
                    letters: vec![i],
                })
                .collect(),
        }
    }

    pub fn new(genus: usize, images: Vec<Word>) -> Result<Self> {
        if images.len() != genus {
            return Err(Error::DimensionMismatch {
                left: genus,
                right: images.len(),
            });
        }
        for w in &images {
            check_genus(genus, w.genus)?;
        }
        Ok(SubstEndo { genus, images })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of `gamma_i` (1-based).
    pub fn image(&self, i: usize) -> &Word {
        &self.images[i - 1]
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        check_genus(self.genus, w.genus)?;
        let mut buf: Vec<Letter> = Vec::with_capacity(w.len());
        for &l in &w.letters {
            let img = &self.images[l.unsigned_abs() as usize - 1].letters;
            if l > 0 {
                for &x in img {
                    push_reduced(&mut buf, x);
                }
            } else {
                for &x in img.iter().rev() {
                    push_reduced(&mut buf, -x);
                }
            }
        }
        Ok(Word {
            genus: self.genus,
            letters: buf,
        })
    }

    /// `self ∘ inner`: applies `inner` first, then `self`.
    pub fn compose(&self, inner: &SubstEndo) -> Result<SubstEndo> {
        check_genus(self.genus, inner.genus)?;
        let images = inner
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<_>>()?;
        Ok(SubstEndo {
            genus: self.genus,
            images,
        })
    }

    /// Whether the image of the boundary relator is, up to cyclic reduction,
    /// a rotation of the relator or of its inverse. This is a sufficient
    /// condition for the endomorphism to induce one of `pi = pi_1(N_g)`.
    pub fn descends_to_pi(&self) -> bool {
        let r = relator(self.genus);
        let img = self
            .apply(&r)
            .expect("relator has matching genus")
            .cyclically_reduced();
        img.is_rotation_of(&r) || img.is_rotation_of(&r.inverse())
    }
}

impl fmt::Debug for SubstEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SubstEndo{")?;
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "g{} -> {}", i + 1, w)?;
        }
        f.write_str("}")
    }
}
