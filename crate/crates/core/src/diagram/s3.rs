use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::presentation::{arcs, wirtinger};
use super::{check_crossings, Crossing, DiagramError, Event};
use crate::freegroup::{FreeWord, Presentation};

/// A link diagram in the 3-sphere: components of over/under events only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S3Diagram {
    crossings: Vec<Crossing>,
    components: Vec<Vec<Event>>,
}

impl S3Diagram {
    pub fn new(crossings: Vec<Crossing>, components: Vec<Vec<Event>>) -> Result<Self, DiagramError> {
        if components.is_empty() {
            return Err(DiagramError::NoComponents);
        }
        if components.iter().flatten().any(|e| matches!(e, Event::Boundary(_))) {
            return Err(DiagramError::BoundaryInSphere);
        }
        check_crossings(&crossings, &components)?;
        Ok(S3Diagram { crossings, components })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> &[Vec<Event>] {
        &self.components
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// Standard Wirtinger presentation: one generator per arc, one relation
    /// per crossing. Returns the component of each generator.
    pub fn wirtinger_presentation(&self) -> (Presentation, Vec<usize>) {
        let data = arcs(&self.components, |_| false);
        let names: Vec<String> = (1..=data.arcs.len()).map(|k| format!("x{k}")).collect();
        let comps = data.arcs.iter().map(|a| a.component).collect();
        let relators: Vec<FreeWord> = self
            .crossings
            .iter()
            .map(|cr| {
                let (x, y) = data.under[&cr.id];
                wirtinger(data.over[&cr.id], x, y, cr.sign.value())
            })
            .collect();
        (Presentation::new(names, relators).expect("arc indices in range"), comps)
    }
}
