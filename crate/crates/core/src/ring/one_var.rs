use num_traits::Signed;

use super::MultiLaurent;

/// `numerator / (t − 1)^denom_power` in one variable, stored reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionFn {
    pub numerator: MultiLaurent,
    pub denom_power: u8,
}

/// `numerator / (t − t⁻¹)^denom_power` in one variable, stored reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NablaFn {
    pub numerator: MultiLaurent,
    pub denom_power: u8,
}

fn t_minus_one() -> MultiLaurent {
    MultiLaurent::from_coeffs(0, &[-1, 1])
}

fn t_minus_t_inv() -> MultiLaurent {
    MultiLaurent::from_coeffs(-1, &[-1, 0, 1])
}

fn reduce(mut num: MultiLaurent, mut d: u8, factor: &MultiLaurent) -> (MultiLaurent, u8) {
    assert_eq!(num.nvars(), 1, "one-variable function");
    if num.is_zero() {
        return (num, 0);
    }
    while d > 0 {
        match num.divide_exact(factor) {
            Ok(q) => {
                num = q;
                d -= 1;
            }
            Err(_) => break,
        }
    }
    (num, d)
}

impl TorsionFn {
    pub fn new(numerator: MultiLaurent, denom_power: u8) -> Self {
        let (numerator, denom_power) = reduce(numerator, denom_power, &t_minus_one());
        TorsionFn { numerator, denom_power }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Numerator over the denominator `(t − 1)^d`, for `d ≥ denom_power`.
    pub fn numerator_over(&self, d: u8) -> MultiLaurent {
        assert!(d >= self.denom_power);
        &self.numerator * &t_minus_one().pow((d - self.denom_power) as u32)
    }

    /// The normalized function −t^r τ(t²) with its exponent r.
    ///
    /// The result does not depend on which unit multiple of τ is used; its
    /// global sign is fixed by making the top numerator coefficient positive.
    pub fn nabla(&self) -> Option<(NablaFn, i64)> {
        if self.numerator.is_zero() {
            return Some((NablaFn { numerator: MultiLaurent::zero(1), denom_power: 0 }, 0));
        }
        let (rn, _) = self.numerator.symmetry_exponent()?;
        let d = self.denom_power as i64;
        let r = rn + d;
        // τ(t²) = N(t²) / (t^d (t − t⁻¹)^d)
        let num = -self.numerator.dilate(2).shift(&[r - d]);
        Some((NablaFn::new(num, self.denom_power), r))
    }
}

impl NablaFn {
    pub fn new(numerator: MultiLaurent, denom_power: u8) -> Self {
        let (num, d) = reduce(numerator, denom_power, &t_minus_t_inv());
        let num = if num.leading_term().is_some_and(|(_, c)| c.is_negative()) { -num } else { num };
        NablaFn { numerator: num, denom_power: d }
    }

    pub fn zero() -> Self {
        NablaFn { numerator: MultiLaurent::zero(1), denom_power: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Numerator over the denominator `(t − t⁻¹)^d`, for `d ≥ denom_power`.
    pub fn numerator_over(&self, d: u8) -> MultiLaurent {
        assert!(d >= self.denom_power);
        &self.numerator * &t_minus_t_inv().pow((d - self.denom_power) as u32)
    }

    /// Equality up to a global sign.
    pub fn eq_up_to_sign(&self, other: &NablaFn) -> bool {
        let d = self.denom_power.max(other.denom_power);
        let a = self.numerator_over(d);
        let b = other.numerator_over(d);
        a == b || a == -b
    }

    /// `(t − t⁻¹)^k`.
    pub fn t_minus_t_inv_pow(k: u32) -> MultiLaurent {
        t_minus_t_inv().pow(k)
    }
}
