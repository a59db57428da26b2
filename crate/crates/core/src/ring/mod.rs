//! Exact arithmetic over Z[t_1^{±1}, …, t_n^{±1}] and over the group ring of
//! H = Z^v × (Z/2 or trivial).

mod det;
mod group_ring;
mod laurent;
mod one_var;
mod poly;
mod text;

pub use det::{det_bareiss, det_cofactor, det_fraction_free};
pub use group_ring::{GroupRingElem, HElement};
pub use laurent::{MultiLaurent, SignedMonomial, UnitClass};
pub use one_var::{NablaFn, TorsionFn};
pub use text::ParseError;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("not divisible")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
}
