//! Twisted and untwisted Alexander polynomials, one-variable torsion and the
//! normalized function ∇ for links in the projective space, computed from
//! combinatorial diagrams.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! the command-line front end live in the `rplink` crate.
#![no_std]

extern crate alloc;

pub mod diagram;
pub mod freegroup;
pub mod homology;
pub mod invariants;
pub mod ring;

pub use diagram::{Crossing, DiagramError, Event, ProjectiveDiagram, S3Diagram, Sign, TorsionClass};
pub use freegroup::{FreeWord, Presentation};
pub use ring::{GroupRingElem, MultiLaurent, NablaFn, SignedMonomial, TorsionFn, UnitClass};
