use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{MultiLaurent, SignedMonomial};

/// An element `t^exponents · u^torsion` of H = Z^v × (Z/2 or trivial).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HElement {
    pub exponents: Vec<i64>,
    pub torsion: bool,
}

impl HElement {
    pub fn identity(v: usize) -> Self {
        HElement { exponents: vec![0; v], torsion: false }
    }

    pub fn is_identity(&self) -> bool {
        !self.torsion && self.exponents.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &HElement) -> HElement {
        HElement {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
            torsion: self.torsion ^ other.torsion,
        }
    }

    pub fn inverse(&self) -> HElement {
        HElement { exponents: self.exponents.iter().map(|x| -x).collect(), torsion: self.torsion }
    }

    pub fn pow(&self, k: i64) -> HElement {
        HElement { exponents: self.exponents.iter().map(|x| x * k).collect(), torsion: self.torsion && k.rem_euclid(2) == 1 }
    }
}

/// Element of the integral group ring Z[H].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElem {
    nvars: usize,
    has_torsion: bool,
    terms: BTreeMap<HElement, BigInt>,
}

impl GroupRingElem {
    pub fn zero(nvars: usize, has_torsion: bool) -> Self {
        GroupRingElem { nvars, has_torsion, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, has_torsion: bool) -> Self {
        Self::from_element(HElement::identity(nvars), has_torsion)
    }

    pub fn from_element(h: HElement, has_torsion: bool) -> Self {
        Self::from_terms(h.exponents.len(), has_torsion, [(h, BigInt::from(1))])
    }

    pub fn from_terms<I>(nvars: usize, has_torsion: bool, terms: I) -> Self
    where
        I: IntoIterator<Item = (HElement, BigInt)>,
    {
        let mut out = Self::zero(nvars, has_torsion);
        for (h, c) in terms {
            out.add_term(h, c);
        }
        out
    }

    fn add_term(&mut self, h: HElement, c: BigInt) {
        assert_eq!(h.exponents.len(), self.nvars, "exponent vector length");
        assert!(self.has_torsion || !h.torsion, "torsion bit without torsion");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(h).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn has_torsion(&self) -> bool {
        self.has_torsion
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HElement, &BigInt)> {
        self.terms.iter()
    }

    /// Ring map to Laurent polynomials: variable i goes to `images[i]` and
    /// the torsion generator to `torsion_sign`.
    pub fn substitute(&self, images: &[SignedMonomial], m: usize, torsion_sign: i8) -> MultiLaurent {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let mut out = MultiLaurent::zero(m);
        for (h, c) in &self.terms {
            let mono = MultiLaurent::monomial(h.exponents.clone(), c.clone());
            let mut img = mono.substitute(images, m);
            if h.torsion && torsion_sign < 0 {
                img = -img;
            }
            out = &out + &img;
        }
        out
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        assert_eq!(self.has_torsion, other.has_torsion, "torsion mismatch");
    }
}

impl<'a> Add<&'a GroupRingElem> for &'a GroupRingElem {
    type Output = GroupRingElem;
    fn add(self, rhs: &GroupRingElem) -> GroupRingElem {
        self.check(rhs);
        let mut out = self.clone();
        for (h, c) in &rhs.terms {
            out.add_term(h.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a GroupRingElem> for &'a GroupRingElem {
    type Output = GroupRingElem;
    fn sub(self, rhs: &GroupRingElem) -> GroupRingElem {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a GroupRingElem> for &'a GroupRingElem {
    type Output = GroupRingElem;
    fn mul(self, rhs: &GroupRingElem) -> GroupRingElem {
        self.check(rhs);
        let mut out = GroupRingElem::zero(self.nvars, self.has_torsion);
        for (h1, c1) in &self.terms {
            for (h2, c2) in &rhs.terms {
                out.add_term(h1.mul(h2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &GroupRingElem {
    type Output = GroupRingElem;
    fn neg(self) -> GroupRingElem {
        GroupRingElem { nvars: self.nvars, has_torsion: self.has_torsion, terms: self.terms.iter().map(|(h, c)| (h.clone(), -c)).collect() }
    }
}
