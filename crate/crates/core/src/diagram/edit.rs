use alloc::vec::Vec;

use super::{Crossing, DiagramError, Event, ProjectiveDiagram, Sign, TorsionClass};

/// Which of the torsion-class compatibility cases a skein triple falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkeinCase {
    /// All three links are torsion links.
    Case1,
    /// Both strands belong to one component and every component of L₀ is
    /// null-homologous.
    Case2,
    /// The strands belong to two components and every component of L₊ is
    /// null-homologous.
    Case3,
    Incompatible,
}

#[derive(Clone, Debug)]
pub struct SkeinTriple {
    pub plus: ProjectiveDiagram,
    pub minus: ProjectiveDiagram,
    pub zero: ProjectiveDiagram,
    pub crossing: u32,
    pub case: SkeinCase,
}

/// Rotates a cyclic sequence so that it starts at index `k`.
fn rotate(comp: &[Event], k: usize) -> Vec<Event> {
    comp[k..].iter().chain(&comp[..k]).copied().collect()
}

impl ProjectiveDiagram {
    /// Swaps over and under at `id` and negates its sign.
    pub fn flip_crossing(&self, id: u32) -> Result<ProjectiveDiagram, DiagramError> {
        if self.crossing(id).is_none() {
            return Err(DiagramError::UnknownCrossing { id });
        }
        let mut d = self.clone();
        for c in &mut d.crossings {
            if c.id == id {
                c.sign = c.sign.flipped();
            }
        }
        for ev in d.components.iter_mut().flatten() {
            *ev = match *ev {
                Event::Over(x) if x == id => Event::Under(x),
                Event::Under(x) if x == id => Event::Over(x),
                other => other,
            };
        }
        Ok(d)
    }

    /// Oriented smoothing at `id`: the incoming over strand continues along
    /// the outgoing under strand and vice versa.
    pub fn smooth_crossing(&self, id: u32) -> Result<ProjectiveDiagram, DiagramError> {
        if self.crossing(id).is_none() {
            return Err(DiagramError::UnknownCrossing { id });
        }
        let co = self.component_of(Event::Over(id)).unwrap();
        let cu = self.component_of(Event::Under(id)).unwrap();
        let crossings: Vec<Crossing> = self.crossings.iter().filter(|c| c.id != id).copied().collect();
        let mut components = self.components.clone();
        if co == cu {
            let comp = &self.components[co];
            let k = comp.iter().position(|&e| e == Event::Over(id)).unwrap();
            let r = rotate(comp, k);
            let u = r.iter().position(|&e| e == Event::Under(id)).unwrap();
            let s1 = r[1..u].to_vec();
            let s2 = r[u + 1..].to_vec();
            components[co] = s1;
            components.insert(co + 1, s2);
        } else {
            let a = &self.components[co];
            let b = &self.components[cu];
            let ra = rotate(a, a.iter().position(|&e| e == Event::Over(id)).unwrap());
            let rb = rotate(b, b.iter().position(|&e| e == Event::Under(id)).unwrap());
            let merged: Vec<Event> = ra[1..].iter().chain(&rb[1..]).copied().collect();
            let (lo, hi) = (co.min(cu), co.max(cu));
            components[lo] = merged;
            components.remove(hi);
        }
        ProjectiveDiagram::new(self.p, self.eps.clone(), crossings, components)
    }

    /// Treats `self` as L₊ at crossing `id`.
    pub fn skein_triple(&self, id: u32) -> Result<SkeinTriple, DiagramError> {
        let c = self.crossing(id).ok_or(DiagramError::UnknownCrossing { id })?;
        if c.sign != Sign::Positive {
            return Err(DiagramError::CrossingNotPositive { id });
        }
        let minus = self.flip_crossing(id)?;
        let zero = self.smooth_crossing(id)?;
        let same = self.component_of(Event::Over(id)) == self.component_of(Event::Under(id));
        let case = classify(self, &minus, &zero, same);
        Ok(SkeinTriple { plus: self.clone(), minus, zero, crossing: id, case })
    }
}

fn classify(plus: &ProjectiveDiagram, minus: &ProjectiveDiagram, zero: &ProjectiveDiagram, same: bool) -> SkeinCase {
    let (tp, tm, tz) = (plus.torsion_class(), minus.torsion_class(), zero.torsion_class());
    if tp != tm || tp != tz {
        return SkeinCase::Incompatible;
    }
    match (tp, same) {
        (TorsionClass::Torsion, _) => SkeinCase::Case1,
        (TorsionClass::Nontorsion, true) => SkeinCase::Case2,
        (TorsionClass::Nontorsion, false) => SkeinCase::Case3,
    }
}

impl SkeinTriple {
    /// Assembles a triple from three separately supplied diagrams; only the
    /// torsion classes are checked.
    pub fn from_parts(plus: ProjectiveDiagram, minus: ProjectiveDiagram, zero: ProjectiveDiagram) -> SkeinTriple {
        let same = zero.num_components() > plus.num_components();
        let case = classify(&plus, &minus, &zero, same);
        SkeinTriple { plus, minus, zero, crossing: 0, case }
    }
}
