//! Oriented link diagrams in the projective space: a disk whose boundary
//! points are identified antipodally. Each component is a cyclic sequence of
//! crossing and wall events.

mod edit;
mod format;
mod lift;
mod presentation;
mod s3;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

pub use edit::{SkeinCase, SkeinTriple};
pub use format::{parse_pld, parse_s3d, to_pld, to_s3d, FormatError};
pub use lift::Lift;
pub use presentation::{DiagramPresentation, Omit};
pub use s3::S3Diagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Event {
    Over(u32),
    Under(u32),
    /// Passing the wall point with this 1-based label.
    Boundary(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub id: u32,
    pub sign: Sign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionClass {
    Nontorsion,
    Torsion,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("eps has {found} entries, expected 2p = {expected}")]
    EpsilonLength { expected: usize, found: usize },
    #[error("eps entry {index} is not ±1")]
    EpsilonValue { index: usize },
    #[error("epsilon antisymmetry violated: eps[{i}] = eps[{j}]")]
    EpsilonAntisymmetry { i: u32, j: u32 },
    #[error("crossing {id} declared twice")]
    DuplicateCrossing { id: u32 },
    #[error("event refers to undeclared crossing {id}")]
    UnknownCrossing { id: u32 },
    #[error("crossing occurrence violated: crossing {id} appears {over} times over and {under} times under")]
    CrossingOccurrence { id: u32, over: usize, under: usize },
    #[error("boundary point B{j} is out of range 1..{max}")]
    BoundaryOutOfRange { j: u32, max: u32 },
    #[error("boundary occurrence violated: B{j} appears {count} times")]
    BoundaryOccurrence { j: u32, count: usize },
    #[error("antipodal continuity violated: exit B{j} must be followed by B{expected}")]
    AntipodalContinuity { j: u32, expected: u32 },
    #[error("boundary events are not allowed in a diagram in the 3-sphere")]
    BoundaryInSphere,
    #[error("the link has no components")]
    NoComponents,
    #[error("crossing {id} is not positive")]
    CrossingNotPositive { id: u32 },
    #[error("lift needs a nontorsion link")]
    TorsionLink,
    #[error("presentation has deficiency {deficiency}, expected 1")]
    Deficiency { deficiency: isize },
}

/// A validated diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveDiagram {
    p: u32,
    eps: Vec<i8>,
    crossings: Vec<Crossing>,
    components: Vec<Vec<Event>>,
}

pub(crate) fn check_crossings(crossings: &[Crossing], components: &[Vec<Event>]) -> Result<(), DiagramError> {
    let mut counts: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
    for c in crossings {
        if counts.insert(c.id, (0, 0)).is_some() {
            return Err(DiagramError::DuplicateCrossing { id: c.id });
        }
    }
    for ev in components.iter().flatten() {
        match *ev {
            Event::Over(id) => counts.get_mut(&id).ok_or(DiagramError::UnknownCrossing { id })?.0 += 1,
            Event::Under(id) => counts.get_mut(&id).ok_or(DiagramError::UnknownCrossing { id })?.1 += 1,
            Event::Boundary(_) => {}
        }
    }
    for (&id, &(over, under)) in &counts {
        if over != 1 || under != 1 {
            return Err(DiagramError::CrossingOccurrence { id, over, under });
        }
    }
    Ok(())
}

impl ProjectiveDiagram {
    pub fn new(p: u32, eps: Vec<i8>, crossings: Vec<Crossing>, components: Vec<Vec<Event>>) -> Result<Self, DiagramError> {
        let n = 2 * p as usize;
        if eps.len() != n {
            return Err(DiagramError::EpsilonLength { expected: n, found: eps.len() });
        }
        if let Some(index) = eps.iter().position(|&e| e != 1 && e != -1) {
            return Err(DiagramError::EpsilonValue { index: index + 1 });
        }
        for i in 0..p as usize {
            if eps[i] != -eps[i + p as usize] {
                return Err(DiagramError::EpsilonAntisymmetry { i: i as u32 + 1, j: i as u32 + p + 1 });
            }
        }
        if components.is_empty() {
            return Err(DiagramError::NoComponents);
        }
        check_crossings(&crossings, &components)?;
        let mut seen = vec![0usize; n];
        for ev in components.iter().flatten() {
            if let Event::Boundary(j) = *ev {
                if j == 0 || j as usize > n {
                    return Err(DiagramError::BoundaryOutOfRange { j, max: n as u32 });
                }
                seen[j as usize - 1] += 1;
            }
        }
        if let Some(k) = seen.iter().position(|&c| c != 1) {
            return Err(DiagramError::BoundaryOccurrence { j: k as u32 + 1, count: seen[k] });
        }
        let d = ProjectiveDiagram { p, eps, crossings, components };
        for comp in &d.components {
            for (k, ev) in comp.iter().enumerate() {
                if let Event::Boundary(j) = *ev {
                    if d.epsilon(j) == 1 {
                        let expected = d.antipode(j);
                        if comp[(k + 1) % comp.len()] != Event::Boundary(expected) {
                            return Err(DiagramError::AntipodalContinuity { j, expected });
                        }
                    }
                }
            }
        }
        Ok(d)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn epsilons(&self) -> &[i8] {
        &self.eps
    }

    /// ε_j for a 1-based wall label.
    pub fn epsilon(&self, j: u32) -> i8 {
        self.eps[j as usize - 1]
    }

    pub fn antipode(&self, j: u32) -> u32 {
        if j > self.p {
            j - self.p
        } else {
            j + self.p
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, id: u32) -> Option<&Crossing> {
        self.crossings.iter().find(|c| c.id == id)
    }

    pub fn components(&self) -> &[Vec<Event>] {
        &self.components
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// Index of the component containing the given event.
    pub fn component_of(&self, ev: Event) -> Option<usize> {
        self.components.iter().position(|c| c.contains(&ev))
    }

    /// δ_i = Σ ε_k over wall labels k ∈ 1..p lying on component i.
    pub fn deltas(&self) -> Vec<i64> {
        self.components
            .iter()
            .map(|c| {
                c.iter()
                    .filter_map(|ev| match *ev {
                        Event::Boundary(j) if j <= self.p => Some(self.epsilon(j) as i64),
                        _ => None,
                    })
                    .sum()
            })
            .collect()
    }

    pub fn torsion_class(&self) -> TorsionClass {
        if self.deltas().iter().all(|d| d % 2 == 0) {
            TorsionClass::Nontorsion
        } else {
            TorsionClass::Torsion
        }
    }

    /// Components with no under-crossing and no wall passage.
    pub fn break_free_components(&self) -> Vec<usize> {
        (0..self.components.len()).filter(|&i| self.components[i].iter().all(|ev| matches!(ev, Event::Over(_)))).collect()
    }
}
