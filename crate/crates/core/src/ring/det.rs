use alloc::vec::Vec;

use super::{poly, MultiLaurent};

/// Determinant of a square matrix of Laurent polynomials.
///
/// Each row is first multiplied by a monomial that makes it polynomial; the
/// monomial is divided back out at the end. Matrices up to 3×3 are expanded
/// by cofactors, larger ones go through Bareiss elimination.
pub fn det_fraction_free(m: &[Vec<MultiLaurent>], nvars: usize) -> MultiLaurent {
    if m.len() <= 3 {
        det_cofactor(m, nvars)
    } else {
        det_bareiss(m, nvars)
    }
}

/// Laplace expansion along the first row.
pub fn det_cofactor(m: &[Vec<MultiLaurent>], nvars: usize) -> MultiLaurent {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix");
    match n {
        0 => MultiLaurent::one(nvars),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = MultiLaurent::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MultiLaurent>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()).collect();
                let term = &m[0][j] * &det_cofactor(&minor, nvars);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Fraction-free Gaussian elimination (Bareiss) over the polynomial ring.
pub fn det_bareiss(m: &[Vec<MultiLaurent>], nvars: usize) -> MultiLaurent {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix");
    if n == 0 {
        return MultiLaurent::one(nvars);
    }
    let mut total_shift = alloc::vec![0i64; nvars];
    let mut a: Vec<Vec<MultiLaurent>> = Vec::with_capacity(n);
    for row in m {
        let mut lo: Option<Vec<i64>> = None;
        for x in row {
            if let Some(e) = x.min_exponents() {
                lo = Some(match lo {
                    None => e,
                    Some(l) => l.iter().zip(&e).map(|(a, b)| *a.min(b)).collect(),
                });
            }
        }
        match lo {
            None => return MultiLaurent::zero(nvars),
            Some(l) => {
                for (t, x) in total_shift.iter_mut().zip(&l) {
                    *t += x;
                }
                let neg: Vec<i64> = l.iter().map(|x| -x).collect();
                a.push(row.iter().map(|x| x.shift(&neg)).collect());
            }
        }
    }
    let mut negate = false;
    let mut prev = MultiLaurent::one(nvars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return MultiLaurent::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = poly::div_exact(&num, &prev).expect("Bareiss step is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].shift(&total_shift);
    if negate {
        -d
    } else {
        d
    }
}
