//! Free-group words, finite presentations, Fox derivatives and their images
//! in the group ring of H.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::ring::{GroupRingElem, HElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    #[error("generator index {index} out of range ({count} generators)")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("relator index {index} out of range ({count} relators)")]
    RelatorOutOfRange { index: usize, count: usize },
    #[error("relator {relator} does not define generator {generator}: it must occur exactly once")]
    NotDefiningRelator { generator: usize, relator: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i8,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        Letter { generator: self.generator, exponent: -self.exponent }
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn generator(g: usize) -> Self {
        FreeWord { letters: alloc::vec![Letter { generator: g, exponent: 1 }] }
    }

    /// Reduces the given letters.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = FreeWord::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Word from syllables `(generator, power)`.
    pub fn from_powers(syllables: &[(usize, i64)]) -> Self {
        let mut w = FreeWord::empty();
        for &(g, k) in syllables {
            let e = if k < 0 { -1 } else { 1 };
            for _ in 0..k.unsigned_abs() {
                w.push(Letter { generator: g, exponent: e });
            }
        }
        w
    }

    fn push(&mut self, l: Letter) {
        assert!(l.exponent == 1 || l.exponent == -1, "letters have exponent ±1");
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
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

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    /// Removes matching letters from both ends (conjugation).
    pub fn cyclically_reduced(&self) -> FreeWord {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j >= i + 2 && l[i] == l[j - 1].inverse() {
            i += 1;
            j -= 1;
        }
        FreeWord { letters: l[i..j].to_vec() }
    }

    /// Number of letters on generator `g`.
    pub fn occurrences(&self, g: usize) -> usize {
        self.letters.iter().filter(|l| l.generator == g).count()
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.letters.iter().filter(|l| l.generator == g).map(|l| l.exponent as i64).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    /// Replaces every occurrence of `g` by `w`.
    pub fn substitute(&self, g: usize, w: &FreeWord) -> FreeWord {
        let winv = w.inverse();
        let mut out = FreeWord::empty();
        for &l in &self.letters {
            if l.generator == g {
                let piece = if l.exponent > 0 { w } else { &winv };
                for &m in &piece.letters {
                    out.push(m);
                }
            } else {
                out.push(l);
            }
        }
        out
    }

    /// Renames generators through `f`.
    pub fn map_generators(&self, f: impl Fn(usize) -> usize) -> FreeWord {
        FreeWord::from_letters(self.letters.iter().map(|l| Letter { generator: f(l.generator), exponent: l.exponent }))
    }

    /// Image in H under a map of generators to group elements.
    pub fn image(&self, images: &[HElement]) -> HElement {
        let v = images.first().map_or(0, |h| h.exponents.len());
        let mut acc = HElement::identity(v);
        for l in &self.letters {
            let h = &images[l.generator];
            acc = if l.exponent > 0 { acc.mul(h) } else { acc.mul(&h.inverse()) };
        }
        acc
    }

    /// Syllable form `(generator, power)`.
    pub fn syllables(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((g, k)) if *g == l.generator => *k += l.exponent as i64,
                _ => out.push((l.generator, l.exponent as i64)),
            }
        }
        out
    }
}

/// Formal integer combination of words: an element of Z[F].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeRingElem {
    terms: BTreeMap<FreeWord, BigInt>,
}

impl FreeRingElem {
    pub fn zero() -> Self {
        FreeRingElem::default()
    }

    pub fn from_word(w: FreeWord) -> Self {
        let mut e = FreeRingElem::zero();
        e.add_term(w, BigInt::from(1));
        e
    }

    pub fn add_term(&mut self, w: FreeWord, c: BigInt) {
        let entry = self.terms.entry(w.clone()).or_default();
        *entry += c;
        if *entry == BigInt::from(0) {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &FreeRingElem) -> FreeRingElem {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// Left multiplication by a word.
    pub fn left_mul(&self, u: &FreeWord) -> FreeRingElem {
        let mut out = FreeRingElem::zero();
        for (w, c) in &self.terms {
            out.add_term(u.concat(w), c.clone());
        }
        out
    }

    /// Ring homomorphism Z[F] → Z[H] induced by generator images.
    pub fn project(&self, images: &[HElement], has_torsion: bool) -> GroupRingElem {
        let v = images.first().map_or(0, |h| h.exponents.len());
        GroupRingElem::from_terms(v, has_torsion, self.terms.iter().map(|(w, c)| (w.image(images), c.clone())))
    }
}

/// Fox derivative ∂w/∂x_j in Z[F].
pub fn fox_derivative(w: &FreeWord, j: usize, num_generators: usize) -> Result<FreeRingElem, FreeGroupError> {
    if j >= num_generators {
        return Err(FreeGroupError::GeneratorOutOfRange { index: j, count: num_generators });
    }
    let mut out = FreeRingElem::zero();
    let mut prefix = FreeWord::empty();
    for &l in w.letters() {
        if l.generator == j {
            if l.exponent > 0 {
                out.add_term(prefix.clone(), BigInt::from(1));
            } else {
                out.add_term(prefix.concat(&FreeWord::from_letters([l])), BigInt::from(-1));
            }
        }
        prefix.push(l);
    }
    Ok(out)
}

/// Image of ∂w/∂x_j in Z[H], computed without materializing prefixes.
pub fn fox_derivative_projected(w: &FreeWord, j: usize, images: &[HElement], has_torsion: bool) -> GroupRingElem {
    let v = images.first().map_or(0, |h| h.exponents.len());
    let mut terms: Vec<(HElement, BigInt)> = Vec::new();
    let mut prefix = HElement::identity(v);
    for &l in w.letters() {
        let h = &images[l.generator];
        let step = if l.exponent > 0 { h.clone() } else { h.inverse() };
        if l.generator == j {
            if l.exponent > 0 {
                terms.push((prefix.clone(), BigInt::from(1)));
            } else {
                terms.push((prefix.mul(&step), BigInt::from(-1)));
            }
        }
        prefix = prefix.mul(&step);
    }
    GroupRingElem::from_terms(v, has_torsion, terms)
}

/// A finite presentation ⟨x_1, …, x_n | r_1, …, r_m⟩.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<FreeWord>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Result<Self, FreeGroupError> {
        let count = generators.len();
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= count {
                    return Err(FreeGroupError::GeneratorOutOfRange { index: g, count });
                }
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Generators minus relators.
    pub fn deficiency(&self) -> isize {
        self.generators.len() as isize - self.relators.len() as isize
    }

    /// Removes relator `r`.
    pub fn without_relator(&self, r: usize) -> Presentation {
        let mut p = self.clone();
        p.relators.remove(r);
        p
    }

    /// Drops relators that are trivial up to conjugation.
    pub fn without_trivial_relators(&self) -> Presentation {
        let mut p = self.clone();
        p.relators.retain(|w| !w.cyclically_reduced().is_empty());
        p
    }

    /// Tietze move: solves relator `r` for generator `g`, substitutes the
    /// solution everywhere and drops both.
    pub fn tietze_eliminate(&self, g: usize, r: usize) -> Result<Presentation, FreeGroupError> {
        let n = self.generators.len();
        if g >= n {
            return Err(FreeGroupError::GeneratorOutOfRange { index: g, count: n });
        }
        if r >= self.relators.len() {
            return Err(FreeGroupError::RelatorOutOfRange { index: r, count: self.relators.len() });
        }
        let rel = &self.relators[r];
        if rel.occurrences(g) != 1 {
            return Err(FreeGroupError::NotDefiningRelator { generator: g, relator: r });
        }
        let k = rel.letters().iter().position(|l| l.generator == g).unwrap();
        let a = FreeWord::from_letters(rel.letters()[..k].iter().copied());
        let b = FreeWord::from_letters(rel.letters()[k + 1..].iter().copied());
        // a g^e b = 1
        let solution = if rel.letters()[k].exponent > 0 { a.inverse().concat(&b.inverse()) } else { b.concat(&a) };
        let relators = self
            .relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != r)
            .map(|(_, w)| w.substitute(g, &solution).map_generators(|x| if x > g { x - 1 } else { x }))
            .collect();
        let mut generators = self.generators.clone();
        generators.remove(g);
        Ok(Presentation { generators, relators })
    }

    /// A generator occurring exactly once in some relator, as `(g, r)`,
    /// preferring short relators.
    pub fn find_eliminable(&self, allowed: impl Fn(usize) -> bool) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for (r, w) in self.relators.iter().enumerate() {
            for g in 0..self.generators.len() {
                if allowed(g) && w.occurrences(g) == 1 && best.is_none_or(|(_, _, len)| w.len() < len) {
                    best = Some((g, r, w.len()));
                }
            }
        }
        best.map(|(g, r, _)| (g, r))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} |", self.generators.join(","))?;
        for (i, r) in self.relators.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            if r.is_empty() {
                f.write_str("1")?;
            }
            for (k, (g, e)) in r.syllables().into_iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                if e == 1 {
                    write!(f, "{}", self.generators[g])?;
                } else {
                    write!(f, "{}^{}", self.generators[g], e)?;
                }
            }
        }
        f.write_str(">")
    }
}
