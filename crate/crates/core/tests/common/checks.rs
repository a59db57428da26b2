use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use rplink_core::diagram::Omit;
use rplink_core::homology::{coefficient_map, smith_normal_form, CoefficientMode, IntMatrix, SmithForm};
use rplink_core::invariants::*;
use rplink_core::ring::TorsionFn;
use rplink_core::{MultiLaurent, ProjectiveDiagram, SignedMonomial};

use super::combinations;

pub const MODES: [CoefficientMode; 4] =
    [CoefficientMode::Twisted, CoefficientMode::Untwisted, CoefficientMode::OneVarTwisted, CoefficientMode::OneVarUntwisted];

pub fn check_fox_identity(d: &ProjectiveDiagram) -> Result<(), TestCaseError> {
    let g = LinkGroup::new(d).unwrap();
    if g.presentation.presentation.deficiency() != 1 {
        return Ok(());
    }
    for mode in MODES {
        let map = coefficient_map(&g.splitting, mode);
        let m = g.fox.specialize(|e| map.apply(e));
        let x: Vec<MultiLaurent> = g.generator_images(mode).iter().map(|u| u.to_poly() - MultiLaurent::one(map.target_vars)).collect();
        for row in &m {
            let sum = row.iter().zip(&x).fold(MultiLaurent::zero(map.target_vars), |acc, (a, b)| acc + a * b);
            prop_assert!(sum.is_zero(), "{:?}\n{}", mode, d);
        }
    }
    Ok(())
}

pub fn check_chain_condition(d: &ProjectiveDiagram) -> Result<(), TestCaseError> {
    let g = LinkGroup::new(d).unwrap();
    if g.presentation.presentation.deficiency() != 1 {
        return Ok(());
    }
    let n = g.presentation.presentation.num_generators();
    for mode in MODES {
        let map = coefficient_map(&g.splitting, mode);
        let m = g.fox.specialize(|e| map.apply(e));
        let minors = maximal_minors(&m, n, map.target_vars);
        let x: Vec<MultiLaurent> = g.generator_images(mode).iter().map(|u| u.to_poly() - MultiLaurent::one(map.target_vars)).collect();
        for i in 0..n {
            for j in 0..n {
                let a = &x[i] * &minors[j];
                let b = &x[j] * &minors[i];
                prop_assert!(a == b || a == -b, "{:?} {} {}\n{}", mode, i, j, d);
            }
        }
    }
    Ok(())
}

pub fn check_tietze_invariance(d: &ProjectiveDiagram) -> Result<(), TestCaseError> {
    let g = LinkGroup::new(d).unwrap();
    if g.presentation.presentation.deficiency() != 1 {
        return Ok(());
    }
    let p = &g.presentation.presentation;
    let Some((gen, rel)) = p.find_eliminable(|_| true) else { return Ok(()) };
    let p2 = p.tietze_eliminate(gen, rel).unwrap();
    let keep: Vec<usize> = (0..p.num_generators()).filter(|&k| k != gen).collect();
    let s2 = g.splitting.restrict(&keep);
    let fox2 = alexander_fox(&p2, &s2.images, s2.has_torsion).unwrap();
    for mode in MODES {
        let map = coefficient_map(&s2, mode);
        let m = fox2.specialize(|e| map.apply(e));
        prop_assert_eq!(gcd_of_minors(&m, p2.num_generators(), map.target_vars), g.polynomial(mode));
    }
    Ok(())
}

pub fn check_omission_invariance(d: &ProjectiveDiagram) -> Result<(), TestCaseError> {
    let base = LinkGroup::new(d).unwrap();
    for c in d.crossings() {
        let g = LinkGroup::with_omit(d, Omit::Crossing(c.id)).unwrap();
        for mode in MODES {
            prop_assert_eq!(g.polynomial(mode), base.polynomial(mode), "omit {}\n{}", c.id, d);
        }
    }
    Ok(())
}

pub fn check_symmetry(d: &ProjectiveDiagram) -> Result<(), TestCaseError> {
    let one = LinkGroup::new(d).unwrap().polynomial(CoefficientMode::OneVarTwisted);
    prop_assert!(one.is_zero() || one.symmetry_exponent().is_some(), "{}\n{}", one, d);
    Ok(())
}

pub fn check_nabla_representatives(d: &ProjectiveDiagram, m: i64, negate: bool) -> Result<(), TestCaseError> {
    let tau = torsion_rep(d).unwrap();
    let (base, _) = nabla_of(&tau).unwrap();
    let unit = SignedMonomial::new(if negate { -1 } else { 1 }, vec![m]);
    let other = TorsionFn::new(tau.numerator.mul_unit(&unit), tau.denom_power);
    prop_assert_eq!(nabla_of(&other).unwrap().0, base);
    Ok(())
}

pub fn check_snf(m: &IntMatrix) -> Result<SmithForm, TestCaseError> {
    let f = smith_normal_form(m);
    prop_assert_eq!(&f.u.mul(m).mul(&f.v), &f.s);
    prop_assert_eq!(f.u.det().magnitude().to_string(), "1");
    prop_assert_eq!(f.v.det().magnitude().to_string(), "1");
    for i in 0..f.s.rows() {
        for j in 0..f.s.cols() {
            if i != j {
                prop_assert_eq!(f.s.get(i, j), &BigInt::from(0));
            }
        }
    }
    let d = f.diagonal();
    for k in 0..d.len() {
        prop_assert!(d[k] >= BigInt::from(0));
        if k + 1 < d.len() && d[k] != BigInt::from(0) {
            prop_assert!((&d[k + 1] % &d[k]) == BigInt::from(0), "{:?}", d);
        }
        if k + 1 < d.len() && d[k] == BigInt::from(0) {
            prop_assert_eq!(&d[k + 1], &BigInt::from(0));
        }
    }
    Ok(f)
}

/// Determinant by cofactor expansion.
pub fn int_det(m: &[Vec<BigInt>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    let mut total = BigInt::from(0);
    for j in 0..m.len() {
        let minor: Vec<Vec<BigInt>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * int_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// k-th determinantal divisor: gcd of all k×k minors.
pub fn determinantal_divisor(m: &[Vec<i64>], k: usize) -> BigInt {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut g = BigInt::from(0);
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| BigInt::from(m[i][j])).collect()).collect();
            g = g.gcd(&int_det(&sub));
        }
    }
    g
}
