use alloc::vec::Vec;

use super::{Crossing, DiagramError, Event, ProjectiveDiagram, S3Diagram, TorsionClass};

/// The preimage of a nontorsion link in the 3-sphere.
#[derive(Clone, Debug)]
pub struct Lift {
    pub diagram: S3Diagram,
    /// Original component of each lifted component.
    pub pairing: Vec<usize>,
    /// Id offset of the bottom copy: crossing `id` there is `id + offset`.
    pub offset: u32,
}

impl ProjectiveDiagram {
    /// Top copy keeps the diagram; the bottom copy (the reflected disk)
    /// swaps over and under and keeps every sign. A strand changes copy at
    /// each wall passage. Components 0..v start in the top copy, v..2v in
    /// the bottom one.
    pub fn lift(&self) -> Result<Lift, DiagramError> {
        if self.torsion_class() != TorsionClass::Nontorsion {
            return Err(DiagramError::TorsionLink);
        }
        let offset = self.crossings.iter().map(|c| c.id).max().unwrap_or(0);
        let mut crossings: Vec<Crossing> = self.crossings.clone();
        crossings.extend(self.crossings.iter().map(|c| Crossing { id: c.id + offset, sign: c.sign }));
        let mut components = Vec::new();
        let mut pairing = Vec::new();
        for start in [false, true] {
            for (i, comp) in self.components.iter().enumerate() {
                let mut bottom = start;
                let mut out = Vec::new();
                for ev in comp {
                    match *ev {
                        Event::Boundary(j) => {
                            if self.epsilon(j) == 1 {
                                bottom = !bottom;
                            }
                        }
                        Event::Over(id) if bottom => out.push(Event::Under(id + offset)),
                        Event::Under(id) if bottom => out.push(Event::Over(id + offset)),
                        other => out.push(other),
                    }
                }
                components.push(out);
                pairing.push(i);
            }
        }
        Ok(Lift { diagram: S3Diagram::new(crossings, components)?, pairing, offset })
    }
}
