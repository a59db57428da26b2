//! Polynomial (nonnegative exponent) helpers: exact division and the
//! recursive gcd with subresultant remainder sequences.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::MultiLaurent;

/// Exact division of polynomials, or `None` if `b` does not divide `a`.
pub(crate) fn div_exact(a: &MultiLaurent, b: &MultiLaurent) -> Option<MultiLaurent> {
    let n = a.nvars();
    let (be, bc) = b.leading_term()?;
    let (be, bc) = (be.clone(), bc.clone());
    let mut r = a.clone();
    let mut q = MultiLaurent::zero(n);
    while let Some((re, rc)) = r.leading_term() {
        if re.iter().zip(&be).any(|(x, y)| x < y) {
            return None;
        }
        let (qc, rem) = rc.div_rem(&bc);
        if !rem.is_zero() {
            return None;
        }
        let qe: Vec<i64> = re.iter().zip(&be).map(|(x, y)| x - y).collect();
        let term = MultiLaurent::monomial(qe, qc);
        r = &r - &(&term * b);
        q = &q + &term;
    }
    Some(q)
}

/// Highest-index variable occurring in `a` or `b`.
fn main_var(a: &MultiLaurent, b: &MultiLaurent) -> Option<usize> {
    let mut best = None;
    for p in [a, b] {
        for (e, _) in p.terms() {
            for (i, &x) in e.iter().enumerate() {
                if x != 0 && best.is_none_or(|m| i > m) {
                    best = Some(i);
                }
            }
        }
    }
    best
}

/// Polynomial in the variable `v` with coefficients free of `v`.
#[derive(Clone, Debug)]
struct Univ {
    v: usize,
    c: Vec<MultiLaurent>,
}

impl Univ {
    fn from_poly(p: &MultiLaurent, v: usize) -> Univ {
        let n = p.nvars();
        let mut c: Vec<MultiLaurent> = Vec::new();
        for (e, k) in p.terms() {
            let d = e[v] as usize;
            while c.len() <= d {
                c.push(MultiLaurent::zero(n));
            }
            let mut e2 = e.clone();
            e2[v] = 0;
            c[d].add_term(e2, k.clone());
        }
        Univ { v, c }
    }

    fn to_poly(&self, n: usize) -> MultiLaurent {
        let mut out = MultiLaurent::zero(n);
        for (d, coef) in self.c.iter().enumerate() {
            for (e, k) in coef.terms() {
                let mut e2 = e.clone();
                e2[self.v] = d as i64;
                out.add_term(e2, k.clone());
            }
        }
        out
    }

    fn trim(mut self) -> Univ {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg(&self) -> usize {
        self.c.len() - 1
    }

    fn lc(&self) -> &MultiLaurent {
        self.c.last().unwrap()
    }

    fn scale(&self, s: &MultiLaurent) -> Univ {
        Univ { v: self.v, c: self.c.iter().map(|x| x * s).collect() }.trim()
    }

    fn div_scalar(&self, s: &MultiLaurent) -> Univ {
        Univ { v: self.v, c: self.c.iter().map(|x| div_exact(x, s).expect("exact scalar division")).collect() }
    }

    /// self − x^k · other
    fn sub_shifted(&self, other: &Univ, k: usize) -> Univ {
        let len = self.c.len().max(other.c.len() + k);
        let n = other.c[0].nvars();
        let mut c = vec![MultiLaurent::zero(n); len];
        for (i, x) in self.c.iter().enumerate() {
            c[i] = x.clone();
        }
        for (i, x) in other.c.iter().enumerate() {
            c[i + k] = &c[i + k] - x;
        }
        Univ { v: self.v, c }.trim()
    }

    fn content(&self) -> MultiLaurent {
        let n = self.c[0].nvars();
        let mut g = MultiLaurent::zero(n);
        for x in &self.c {
            g = gcd(&g, x);
            if g.is_one() {
                break;
            }
        }
        g
    }
}

/// Pseudo-remainder lc(b)^{deg a − deg b + 1} · a mod b.
fn prem(a: &Univ, b: &Univ) -> Univ {
    let n = b.deg();
    let lcb = b.lc().clone();
    let mut e = a.deg() + 1 - n;
    let mut r = a.clone();
    while !r.is_zero() && r.deg() >= n {
        let k = r.deg() - n;
        let lr = r.lc().clone();
        r = r.scale(&lcb).sub_shifted(&b.scale(&lr), k);
        e -= 1;
    }
    r.scale(&lcb.pow(e as u32))
}

/// gcd of two polynomials with nonnegative exponents, positive leading
/// coefficient, up to monomial factors (callers canonicalize).
pub(crate) fn gcd(a: &MultiLaurent, b: &MultiLaurent) -> MultiLaurent {
    let n = a.nvars();
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let Some(v) = main_var(a, b) else {
        let g = a.coeff(&vec![0; n]).gcd(&b.coeff(&vec![0; n]));
        return MultiLaurent::constant(n, g);
    };
    let ua = Univ::from_poly(a, v);
    let ub = Univ::from_poly(b, v);
    let ca = ua.content();
    let cb = ub.content();
    let cont = gcd(&ca, &cb);
    let pa = ua.div_scalar(&ca);
    let pb = ub.div_scalar(&cb);
    let (mut f, mut g) = if pa.deg() >= pb.deg() { (pa, pb) } else { (pb, pa) };
    let mut gg = MultiLaurent::one(n);
    let mut h = MultiLaurent::one(n);
    let prim = loop {
        if g.deg() == 0 {
            break Univ { v, c: vec![MultiLaurent::one(n)] };
        }
        let delta = (f.deg() - g.deg()) as u32;
        let r = prem(&f, &g);
        if r.is_zero() {
            let c = g.content();
            break g.div_scalar(&c);
        }
        let denom = &gg * &h.pow(delta);
        f = g;
        g = r.div_scalar(&denom);
        gg = f.lc().clone();
        h = if delta == 0 { h } else { div_exact(&gg.pow(delta), &h.pow(delta - 1)).expect("subresultant h update") };
    };
    normalize_sign(&prim.to_poly(n) * &cont)
}

fn normalize_sign(p: MultiLaurent) -> MultiLaurent {
    if p.leading_term().is_some_and(|(_, c)| c.is_negative()) {
        -p
    } else {
        p
    }
}
