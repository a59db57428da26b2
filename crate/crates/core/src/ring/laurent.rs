use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{poly, RingError};

/// Laurent polynomial in `nvars` variables with integer coefficients.
///
/// Terms are kept in a map ordered lexicographically by exponent vector; the
/// last entry is the leading term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiLaurent {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

/// A unit `sign · t^exponents` of the Laurent ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedMonomial {
    pub sign: i8,
    pub exponents: Vec<i64>,
}

/// The unit applied by [`MultiLaurent::canonicalize`].
pub type UnitClass = SignedMonomial;

impl SignedMonomial {
    pub fn identity(nvars: usize) -> Self {
        SignedMonomial { sign: 1, exponents: vec![0; nvars] }
    }

    pub fn new(sign: i8, exponents: Vec<i64>) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        SignedMonomial { sign, exponents }
    }

    /// Product of two units: exponents add, signs multiply.
    pub fn compose(&self, other: &SignedMonomial) -> SignedMonomial {
        assert_eq!(self.exponents.len(), other.exponents.len());
        SignedMonomial {
            sign: self.sign * other.sign,
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inverse(&self) -> SignedMonomial {
        SignedMonomial { sign: self.sign, exponents: self.exponents.iter().map(|e| -e).collect() }
    }

    pub fn pow(&self, k: i64) -> SignedMonomial {
        let sign = if self.sign == -1 && k.rem_euclid(2) == 1 { -1 } else { 1 };
        SignedMonomial { sign, exponents: self.exponents.iter().map(|e| e * k).collect() }
    }

    pub fn to_poly(&self) -> MultiLaurent {
        MultiLaurent::monomial(self.exponents.clone(), BigInt::from(self.sign))
    }
}

impl MultiLaurent {
    pub fn zero(nvars: usize) -> Self {
        MultiLaurent { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exponents: Vec<i64>, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        MultiLaurent { nvars, terms }
    }

    /// The variable `t_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    /// Builds from (exponents, coefficient) pairs, summing repeats.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            out.add_term(e, c.into());
        }
        out
    }

    /// One-variable polynomial from coefficients, lowest degree `low`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(1, coeffs.iter().enumerate().map(|(k, &c)| (vec![low + k as i64], c)))
    }

    pub(crate) fn add_term(&mut self, e: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i64]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        self.fold_exponents(i64::min)
    }

    pub fn max_exponents(&self) -> Option<Vec<i64>> {
        self.fold_exponents(i64::max)
    }

    fn fold_exponents(&self, f: fn(i64, i64) -> i64) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let mut acc = it.next()?.clone();
        for e in it {
            for (a, &b) in acc.iter_mut().zip(e) {
                *a = f(*a, b);
            }
        }
        Some(acc)
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn check(&self, other: &Self) -> Result<(), RingError> {
        if self.nvars != other.nvars {
            Err(RingError::VarCountMismatch { left: self.nvars, right: other.nvars })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiLaurent { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        MultiLaurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), v.clone())).collect(),
        }
    }

    pub fn mul_unit(&self, u: &SignedMonomial) -> Self {
        let s = self.shift(&u.exponents);
        if u.sign < 0 {
            -s
        } else {
            s
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// The image under t_i ↦ t_i^{-1} for every variable.
    pub fn invert_variables(&self) -> Self {
        MultiLaurent { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.iter().map(|x| -x).collect(), v.clone())).collect() }
    }

    /// Ring homomorphism sending variable i to `images[i]`; every image must
    /// have the same length `m`.
    pub fn substitute(&self, images: &[SignedMonomial], m: usize) -> Self {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let mut out = Self::zero(m);
        for (e, c) in &self.terms {
            let mut exps = vec![0i64; m];
            let mut neg = false;
            for (k, &x) in e.iter().enumerate() {
                let img = &images[k];
                assert_eq!(img.exponents.len(), m);
                for (a, b) in exps.iter_mut().zip(&img.exponents) {
                    *a += b * x;
                }
                if img.sign < 0 && x.rem_euclid(2) == 1 {
                    neg = !neg;
                }
            }
            out.add_term(exps, if neg { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Returns the canonical representative of the unit class of `self`
    /// together with the unit `w` such that `self = w · canonical`.
    ///
    /// The representative has minimum exponent 0 in every variable and a
    /// positive leading (lexicographically largest) coefficient.
    pub fn canonicalize(&self) -> (MultiLaurent, UnitClass) {
        let Some(shift) = self.min_exponents() else {
            return (self.clone(), UnitClass::identity(self.nvars));
        };
        let neg: Vec<i64> = shift.iter().map(|x| -x).collect();
        let mut p = self.shift(&neg);
        let sign = if self.leading_term().is_some_and(|(_, c)| c.is_negative()) { -1 } else { 1 };
        if sign < 0 {
            p = -p;
        }
        (p, UnitClass { sign, exponents: shift })
    }

    pub fn canonical(&self) -> MultiLaurent {
        self.canonicalize().0
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.canonical() == other.canonical()
    }

    /// If `other = w · self` for a unit `w`, returns `w`.
    pub fn unit_ratio(&self, other: &Self) -> Option<UnitClass> {
        let (a, ua) = self.canonicalize();
        let (b, ub) = other.canonicalize();
        if a != b {
            return None;
        }
        Some(ub.compose(&ua.inverse()))
    }

    /// Greatest common divisor in canonical form.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        if self.is_zero() {
            return other.canonical();
        }
        if other.is_zero() {
            return self.canonical();
        }
        poly::gcd(&self.canonical(), &other.canonical()).canonical()
    }

    /// Exact quotient `self / divisor`.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, RingError> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        // Clear both to polynomials without monomial factors; in Z[t] a
        // Laurent quotient of such polynomials is itself a polynomial.
        let sa = self.min_exponents().unwrap();
        let sb = divisor.min_exponents().unwrap();
        let a = self.shift(&sa.iter().map(|x| -x).collect::<Vec<_>>());
        let b = divisor.shift(&sb.iter().map(|x| -x).collect::<Vec<_>>());
        let q = poly::div_exact(&a, &b).ok_or(RingError::NotDivisible)?;
        let back: Vec<i64> = sa.iter().zip(&sb).map(|(x, y)| x - y).collect();
        Ok(q.shift(&back))
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.divide_exact(self).is_ok()
    }

    /// For a one-variable `p`, finds `(r, s)` with `p(t^{-1}) = s·t^r·p(t)`.
    pub fn symmetry_exponent(&self) -> Option<(i64, i8)> {
        assert_eq!(self.nvars, 1, "symmetry_exponent needs one variable");
        if self.is_zero() {
            return Some((0, 1));
        }
        let lo = self.terms.keys().next().unwrap()[0];
        let hi = self.terms.keys().next_back().unwrap()[0];
        let r = -(lo + hi);
        let lo_c = &self.terms[&vec![lo]];
        let hi_c = &self.terms[&vec![hi]];
        let s: i8 = if lo_c == hi_c {
            1
        } else if *lo_c == -hi_c {
            -1
        } else {
            return None;
        };
        let candidate = self.shift(&[r]);
        let candidate = if s < 0 { -candidate } else { candidate };
        (candidate == self.invert_variables()).then_some((r, s))
    }

    /// Degree span of a one-variable polynomial.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        assert_eq!(self.nvars, 1);
        Some((self.terms.keys().next()?[0], self.terms.keys().next_back()?[0]))
    }

    /// One-variable polynomial under t ↦ t^k.
    pub fn dilate(&self, k: i64) -> Self {
        assert_eq!(self.nvars, 1);
        MultiLaurent { nvars: 1, terms: self.terms.iter().map(|(e, c)| (vec![e[0] * k], c.clone())).collect() }
    }
}

impl<'a> Add<&'a MultiLaurent> for &'a MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: &MultiLaurent) -> MultiLaurent {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl<'a> Sub<&'a MultiLaurent> for &'a MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, rhs: &MultiLaurent) -> MultiLaurent {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl<'a> Mul<&'a MultiLaurent> for &'a MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: &MultiLaurent) -> MultiLaurent {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        MultiLaurent { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Neg for MultiLaurent {
    type Output = MultiLaurent;
    fn neg(mut self) -> MultiLaurent {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Add for MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: MultiLaurent) -> MultiLaurent {
        &self + &rhs
    }
}

impl Sub for MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, rhs: MultiLaurent) -> MultiLaurent {
        &self - &rhs
    }
}

impl Mul for MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: MultiLaurent) -> MultiLaurent {
        &self * &rhs
    }
}
