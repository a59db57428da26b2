//! Smith normal form, abelianization and the splitting H = G × Tors H.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::freegroup::Presentation;
use crate::ring::{GroupRingElem, HElement, MultiLaurent, SignedMonomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("abelianization is {found}, expected {expected}")]
    ShapeMismatch { found: AbelianInvariants, expected: AbelianInvariants },
    #[error("relator {0} does not map to the identity")]
    RelatorNotKilled(usize),
    #[error("generator roles do not match the presentation")]
    RoleCount,
}

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "rectangular matrix");
        IntMatrix { rows: rows.len(), cols, data: rows }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    /// A matrix with explicit shape, for the cases where `rows` is empty.
    pub fn with_shape(rows: usize, cols: usize, data: Vec<Vec<BigInt>>) -> Self {
        assert_eq!(data.len(), rows);
        assert!(data.iter().all(|r| r.len() == cols));
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i][j] += &self.data[i][k] * &other.data[k][j];
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "square matrix");
        let n = self.rows;
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * &a[n - 1][n - 1]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.data {
            r.swap(a, b);
        }
    }

    /// row_dst += q · row_src
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src][j] * q;
            self.data[dst][j] += v;
        }
    }

    /// col_dst += q · col_src
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for r in &mut self.data {
            let v = &r[src] * q;
            r[dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.data[i] {
            *x = -core::mem::take(x);
        }
    }
}

/// `U · M · V = S` with `S` diagonal, `d₁ | d₂ | …`, and `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s.data[i][i].clone()).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &s.data[i][j];
                    if !x.is_zero() && pivot.is_none_or(|(pi, pj)| x.abs() < s.data[pi][pj].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish(s, u, v);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let p = s.data[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = s.data[i][t].div_floor(&p);
                if !q.is_zero() {
                    s.add_row(i, t, &-&q);
                    u.add_row(i, t, &-&q);
                }
                clean &= s.data[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = s.data[t][j].div_floor(&p);
                if !q.is_zero() {
                    s.add_col(j, t, &-&q);
                    v.add_col(j, t, &-&q);
                }
                clean &= s.data[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s.data[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    s.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s.data[t][t].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(s, u, v)
}

fn finish(s: IntMatrix, u: IntMatrix, v: IntMatrix) -> SmithForm {
    SmithForm { s, u, v }
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn abelianization(p: &Presentation) -> IntMatrix {
    let n = p.num_generators();
    let data = p.relators().iter().map(|r| (0..n).map(|g| BigInt::from(r.exponent_sum(g))).collect()).collect();
    IntMatrix::with_shape(p.relators().len(), n, data)
}

/// Z^free_rank ⊕ Z/d₁ ⊕ … with every dᵢ > 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl core::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Z^{}", self.free_rank)?;
        for d in &self.torsion {
            write!(f, " + Z/{d}")?;
        }
        Ok(())
    }
}

pub fn abelian_invariants(p: &Presentation) -> AbelianInvariants {
    let m = abelianization(p);
    let snf = smith_normal_form(&m);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    AbelianInvariants { free_rank: p.num_generators() - rank, torsion: diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect() }
}

/// What a presentation generator stands for in the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorRole {
    /// A meridian of the given component (0-based).
    Meridian(usize),
    /// The extra generator c coming from the wall.
    Wall,
}

/// A surjection from the link group onto Z^v × (Z/2 or trivial).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub v: usize,
    pub has_torsion: bool,
    pub images: Vec<HElement>,
}

impl Splitting {
    /// Builds the explicit splitting from the per-component wall degrees δᵢ.
    ///
    /// All δ even: basis t₁..t_v and u = c·∏tᵢ^{-kᵢ} with δᵢ = 2kᵢ.
    /// Otherwise, with i₀ the first component of odd δ and δᵢ = 2kᵢ + 1 on
    /// odd components, the basis is t₁..t̂_{i₀}..t_v together with
    /// u = c·∏tᵢ^{-kᵢ}, and u takes the slot of t_{i₀}.
    pub fn from_roles(roles: &[GeneratorRole], deltas: &[i64]) -> Splitting {
        let v = deltas.len();
        let k: Vec<i64> = deltas.iter().map(|d| d.div_euclid(2)).collect();
        let odd: Vec<usize> = (0..v).filter(|&i| deltas[i].rem_euclid(2) == 1).collect();
        let unit = |i: usize| {
            let mut e = vec![0i64; v];
            e[i] = 1;
            e
        };
        let (meridians, c): (Vec<HElement>, HElement) = match odd.first() {
            None => (
                (0..v).map(|i| HElement { exponents: unit(i), torsion: false }).collect(),
                HElement { exponents: k.clone(), torsion: true },
            ),
            Some(&i0) => {
                let mut mer: Vec<HElement> = (0..v).map(|i| HElement { exponents: unit(i), torsion: false }).collect();
                let mut e0 = vec![0i64; v];
                e0[i0] = 2;
                for &i in &odd[1..] {
                    e0[i] = -1;
                }
                mer[i0] = HElement { exponents: e0, torsion: false };
                let mut ec = k.clone();
                ec[i0] = 1 + 2 * k[i0];
                for &i in &odd[1..] {
                    ec[i] = k[i] - k[i0];
                }
                (mer, HElement { exponents: ec, torsion: false })
            }
        };
        let images = roles
            .iter()
            .map(|r| match r {
                GeneratorRole::Meridian(i) => meridians[*i].clone(),
                GeneratorRole::Wall => c.clone(),
            })
            .collect();
        Splitting { v, has_torsion: odd.is_empty(), images }
    }

    /// Checks that every relator maps to the identity and that H has the
    /// expected shape Z^v ⊕ Z/2 or Z^v.
    pub fn verify(&self, p: &Presentation) -> Result<(), HomologyError> {
        if self.images.len() != p.num_generators() {
            return Err(HomologyError::RoleCount);
        }
        for (i, r) in p.relators().iter().enumerate() {
            if !r.image(&self.images).is_identity() {
                return Err(HomologyError::RelatorNotKilled(i));
            }
        }
        let found = abelian_invariants(p);
        let expected = AbelianInvariants { free_rank: self.v, torsion: if self.has_torsion { vec![BigInt::from(2)] } else { vec![] } };
        if found != expected {
            return Err(HomologyError::ShapeMismatch { found, expected });
        }
        Ok(())
    }

    /// Keeps only the images of the listed generators.
    pub fn restrict(&self, keep: &[usize]) -> Splitting {
        Splitting { v: self.v, has_torsion: self.has_torsion, images: keep.iter().map(|&g| self.images[g].clone()).collect() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientMode {
    Twisted,
    Untwisted,
    OneVarTwisted,
    OneVarUntwisted,
}

/// Ring map Z[H] → Z[G] (or Z[t^{±1}]) given on the basis of H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMap {
    pub target_vars: usize,
    pub basis_images: Vec<SignedMonomial>,
    pub torsion_sign: i8,
}

impl CoefficientMap {
    pub fn apply(&self, e: &GroupRingElem) -> MultiLaurent {
        e.substitute(&self.basis_images, self.target_vars, self.torsion_sign)
    }

    /// Signed-monomial image of each presentation generator.
    pub fn generator_images(&self, s: &Splitting) -> Vec<SignedMonomial> {
        s.images
            .iter()
            .map(|h| {
                let mono = MultiLaurent::monomial(h.exponents.clone(), 1).substitute(&self.basis_images, self.target_vars);
                let (exps, c) = mono.terms().next().expect("monomial image");
                let mut sign: i8 = if c.is_negative() { -1 } else { 1 };
                if h.torsion {
                    sign *= self.torsion_sign;
                }
                SignedMonomial::new(sign, exps.clone())
            })
            .collect()
    }
}

pub fn coefficient_map(s: &Splitting, mode: CoefficientMode) -> CoefficientMap {
    let twisted = matches!(mode, CoefficientMode::Twisted | CoefficientMode::OneVarTwisted);
    let torsion_sign = if twisted && s.has_torsion { -1 } else { 1 };
    match mode {
        CoefficientMode::Twisted | CoefficientMode::Untwisted => CoefficientMap {
            target_vars: s.v,
            basis_images: (0..s.v).map(|i| SignedMonomial::new(1, (0..s.v).map(|j| (i == j) as i64).collect())).collect(),
            torsion_sign,
        },
        CoefficientMode::OneVarTwisted | CoefficientMode::OneVarUntwisted => {
            CoefficientMap { target_vars: 1, basis_images: vec![SignedMonomial::new(1, vec![1]); s.v], torsion_sign }
        }
    }
}
