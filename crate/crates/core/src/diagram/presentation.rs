//! The Wirtinger-type presentation with wall generators b_1..b_2p and c.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{DiagramError, Event, ProjectiveDiagram};
use crate::freegroup::{FreeWord, Presentation};
use crate::homology::GeneratorRole;

/// Which Wirtinger relation to drop when the relations are dependent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Omit {
    /// The relation of the last listed crossing.
    #[default]
    Last,
    /// The relation of the given crossing.
    Crossing(u32),
}

#[derive(Clone, Debug)]
pub struct DiagramPresentation {
    /// All generators and relations before simplification.
    pub full: Presentation,
    pub full_roles: Vec<GeneratorRole>,
    /// The simplified presentation; deficiency one unless the diagram has
    /// several split affine unknots.
    pub presentation: Presentation,
    pub roles: Vec<GeneratorRole>,
    /// For each surviving generator, its index in `full`.
    pub kept: Vec<usize>,
    pub omitted_crossing: Option<u32>,
}

/// One arc: a maximal piece of a component between under-crossings and
/// wall exits.
#[derive(Clone, Debug)]
pub(crate) struct Arc {
    pub component: usize,
    pub enters_at: Option<u32>,
    pub exits_at: Option<u32>,
}

pub(crate) struct ArcData {
    pub arcs: Vec<Arc>,
    pub over: BTreeMap<u32, usize>,
    /// crossing id → (incoming arc, outgoing arc) of the under strand
    pub under: BTreeMap<u32, (usize, usize)>,
}

/// Splits components into arcs. An arc ends at an under-crossing or at a
/// wall exit; `is_exit` tells which boundary events are exits.
pub(crate) fn arcs(components: &[Vec<Event>], is_exit: impl Fn(u32) -> bool) -> ArcData {
    let mut data = ArcData { arcs: Vec::new(), over: BTreeMap::new(), under: BTreeMap::new() };
    for (ci, comp) in components.iter().enumerate() {
        let ends: Vec<usize> = (0..comp.len())
            .filter(|&k| match comp[k] {
                Event::Under(_) => true,
                Event::Boundary(j) => is_exit(j),
                Event::Over(_) => false,
            })
            .collect();
        if ends.is_empty() {
            let a = data.arcs.len();
            data.arcs.push(Arc { component: ci, enters_at: None, exits_at: None });
            for ev in comp {
                if let Event::Over(id) = *ev {
                    data.over.insert(id, a);
                }
            }
            continue;
        }
        let first = data.arcs.len();
        let m = ends.len();
        // arc r runs from just after ends[r-1] up to and including ends[r]
        for r in 0..m {
            let end = ends[r];
            let start = (ends[(r + m - 1) % m] + 1) % comp.len();
            let enters_at = match comp[start] {
                Event::Boundary(j) if !is_exit(j) => Some(j),
                _ => None,
            };
            let exits_at = match comp[end] {
                Event::Boundary(j) => Some(j),
                _ => None,
            };
            let a = first + r;
            data.arcs.push(Arc { component: ci, enters_at, exits_at });
            let mut k = start;
            loop {
                if let Event::Over(id) = comp[k] {
                    data.over.insert(id, a);
                }
                if k == end {
                    break;
                }
                k = (k + 1) % comp.len();
            }
            if let Event::Under(id) = comp[end] {
                data.under.insert(id, (a, first + (r + 1) % m));
            }
        }
    }
    data
}

/// Wirtinger relator y⁻¹ o^{-s} x o^{s}.
pub(crate) fn wirtinger(o: usize, x: usize, y: usize, s: i64) -> FreeWord {
    FreeWord::from_powers(&[(y, -1), (o, -s), (x, 1), (o, s)])
}

impl ProjectiveDiagram {
    pub fn build_presentation(&self) -> Result<DiagramPresentation, DiagramError> {
        self.build_presentation_with(Omit::Last)
    }

    pub fn build_presentation_with(&self, omit: Omit) -> Result<DiagramPresentation, DiagramError> {
        let p = self.p as usize;
        let data = arcs(&self.components, |j| self.epsilon(j) == 1);

        // generator indices: a-arcs, then b_1..b_2p, then c
        let mut names: Vec<String> = Vec::new();
        let mut roles: Vec<GeneratorRole> = Vec::new();
        let mut arc_gen: Vec<usize> = Vec::new();
        let mut a_count = 0;
        let mut pending_b: Vec<usize> = Vec::new();
        for arc in &data.arcs {
            match (arc.enters_at, arc.exits_at) {
                (None, None) => {
                    a_count += 1;
                    arc_gen.push(names.len());
                    names.push(format!("a{a_count}"));
                    roles.push(GeneratorRole::Meridian(arc.component));
                }
                _ => {
                    arc_gen.push(usize::MAX);
                    pending_b.push(arc_gen.len() - 1);
                }
            }
        }
        let b0 = names.len();
        let b = |j: u32| b0 + j as usize - 1;
        let mut b_component = alloc::vec![0usize; 2 * p];
        for (ci, comp) in self.components.iter().enumerate() {
            for ev in comp {
                if let Event::Boundary(j) = *ev {
                    b_component[j as usize - 1] = ci;
                }
            }
        }
        for j in 1..=2 * p {
            names.push(format!("b{j}"));
            roles.push(GeneratorRole::Meridian(b_component[j - 1]));
        }
        let c = names.len();
        names.push(String::from("c"));
        roles.push(GeneratorRole::Wall);
        for &ai in &pending_b {
            let arc = &data.arcs[ai];
            arc_gen[ai] = b(arc.enters_at.or(arc.exits_at).unwrap());
        }

        let mut relators: Vec<FreeWord> = Vec::new();
        // b_{p+i} = c⁻¹ W b_i W⁻¹ c with W = b_1^{ε_1} … b_{i-1}^{ε_{i-1}}
        let mut w = FreeWord::empty();
        for i in 1..=p as u32 {
            let conj = FreeWord::from_powers(&[(c, -1)])
                .concat(&w)
                .concat(&FreeWord::generator(b(i)))
                .concat(&w.inverse())
                .concat(&FreeWord::generator(c));
            relators.push(FreeWord::from_powers(&[(b(i + p as u32), -1)]).concat(&conj));
            w = w.concat(&FreeWord::from_powers(&[(b(i), self.epsilon(i) as i64)]));
        }
        relators.push(w.concat(&FreeWord::from_powers(&[(c, -2)])));
        let wirt_start = relators.len();
        for cr in &self.crossings {
            let o = arc_gen[data.over[&cr.id]];
            let (xa, ya) = data.under[&cr.id];
            relators.push(wirtinger(o, arc_gen[xa], arc_gen[ya], cr.sign.value()));
        }
        let bb_start = relators.len();
        for arc in &data.arcs {
            if let (Some(j), Some(k)) = (arc.enters_at, arc.exits_at) {
                relators.push(FreeWord::from_powers(&[(b(j), 1), (b(k), -1)]));
            }
        }
        let full = Presentation::new(names, relators).expect("generator indices in range");

        let mut s = Simplifier { pres: full.clone(), kept: (0..full.num_generators()).collect(), tags: Vec::new() };
        s.tags = (0..full.relators().len())
            .map(|r| {
                if r < p {
                    Tag::Wall
                } else if r >= wirt_start && r < bb_start {
                    Tag::Wirtinger(self.crossings[r - wirt_start].id)
                } else if r >= bb_start {
                    Tag::Duplicate
                } else {
                    Tag::Other
                }
            })
            .collect();
        let has_free = !self.break_free_components().is_empty();
        // without crossings the dependent relation is an arc relation b_i = b_j
        if !has_free && self.crossings.is_empty() {
            if let Some(r) = s.tags.iter().rposition(|t| *t == Tag::Duplicate) {
                s.drop_relator(r);
            }
        }

        for i in 1..=p as u32 {
            let g = s.position(b(i + p as u32)).unwrap();
            let r = s.tags.iter().position(|t| *t == Tag::Wall).unwrap();
            s.eliminate(g, r);
        }
        while let Some(r) = s.tags.iter().position(|t| *t == Tag::Duplicate) {
            let rel = s.pres.relators()[r].clone();
            let ls = rel.letters();
            if ls.len() == 2 && ls[0].generator != ls[1].generator && ls[0].exponent == -ls[1].exponent {
                let g = ls[0].generator.max(ls[1].generator);
                s.eliminate(g, r);
            } else {
                s.tags[r] = Tag::Other;
            }
        }
        let mut omitted_crossing = None;
        if !has_free {
            let target = match omit {
                Omit::Last => s.tags.iter().rposition(|t| matches!(t, Tag::Wirtinger(_))),
                Omit::Crossing(id) => s.tags.iter().position(|t| *t == Tag::Wirtinger(id)),
            };
            if let Some(r) = target {
                if let Tag::Wirtinger(id) = s.tags[r] {
                    omitted_crossing = Some(id);
                }
                s.drop_relator(r);
            }
        }
        s.drop_trivial();
        while s.pres.deficiency() < 1 {
            match s.pres.find_eliminable(|_| true) {
                Some((g, r)) => s.eliminate(g, r),
                None => break,
            }
        }
        // split affine unknots leave deficiency above one
        let deficiency = s.pres.deficiency();
        if deficiency < 1 {
            return Err(DiagramError::Deficiency { deficiency });
        }
        let roles_kept = s.kept.iter().map(|&g| roles[g]).collect();
        Ok(DiagramPresentation { full, full_roles: roles, presentation: s.pres, roles: roles_kept, kept: s.kept, omitted_crossing })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tag {
    Wall,
    Wirtinger(u32),
    Duplicate,
    Other,
}

struct Simplifier {
    pres: Presentation,
    kept: Vec<usize>,
    tags: Vec<Tag>,
}

impl Simplifier {
    fn position(&self, original: usize) -> Option<usize> {
        self.kept.iter().position(|&g| g == original)
    }

    fn eliminate(&mut self, g: usize, r: usize) {
        self.pres = self.pres.tietze_eliminate(g, r).expect("defining relator");
        self.kept.remove(g);
        self.tags.remove(r);
        self.drop_trivial();
    }

    fn drop_relator(&mut self, r: usize) {
        self.pres = self.pres.without_relator(r);
        self.tags.remove(r);
    }

    fn drop_trivial(&mut self) {
        while let Some(r) = self.pres.relators().iter().position(|w| w.is_empty()) {
            self.drop_relator(r);
        }
    }
}
