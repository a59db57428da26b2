//! Serializable reports, one per subcommand. Text and JSON output are both
//! rendered from these values.

use rplink_core::diagram::{to_s3d, DiagramError, Lift, SkeinCase, SkeinTriple};
use rplink_core::homology::{abelian_invariants, CoefficientMode, GeneratorRole, Splitting};
use rplink_core::invariants::{full_report, verify_cover, verify_skein, InvariantError, LinkGroup};
use rplink_core::ring::GroupRingElem;
use rplink_core::{MultiLaurent, NablaFn, ProjectiveDiagram, Sign, SignedMonomial, TorsionClass, TorsionFn};
use serde::Serialize;

pub const SIGN_CONVENTION: &str = "positive top coefficient";

fn class_name(c: TorsionClass) -> &'static str {
    match c {
        TorsionClass::Torsion => "Torsion",
        TorsionClass::Nontorsion => "Nontorsion",
    }
}

fn case_name(c: SkeinCase) -> &'static str {
    match c {
        SkeinCase::Case1 => "Case1",
        SkeinCase::Case2 => "Case2",
        SkeinCase::Case3 => "Case3",
        SkeinCase::Incompatible => "Incompatible",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorInfo {
    pub name: String,
    /// `meridian <component>` (1-based) or `wall`.
    pub role: String,
    /// Image in H, written in t1..tv and the torsion generator u.
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfoReport {
    pub torsion_class: &'static str,
    pub v: usize,
    pub has_torsion: bool,
    pub deltas: Vec<i64>,
    pub homology: String,
    pub generators: Vec<GeneratorInfo>,
}

pub fn info(d: &ProjectiveDiagram) -> Result<InfoReport, DiagramError> {
    let dp = d.build_presentation()?;
    let s = Splitting::from_roles(&dp.full_roles, &d.deltas());
    let generators = dp
        .full
        .generators()
        .iter()
        .zip(&dp.full_roles)
        .zip(&s.images)
        .map(|((name, role), h)| GeneratorInfo {
            name: name.clone(),
            role: match role {
                GeneratorRole::Meridian(i) => format!("meridian {}", i + 1),
                GeneratorRole::Wall => "wall".into(),
            },
            image: GroupRingElem::from_element(h.clone(), s.has_torsion).to_string(),
        })
        .collect();
    Ok(InfoReport {
        torsion_class: class_name(d.torsion_class()),
        v: s.v,
        has_torsion: s.has_torsion,
        deltas: d.deltas(),
        homology: abelian_invariants(&dp.full).to_string(),
        generators,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub presentation: String,
    pub generators: usize,
    pub relators: usize,
    pub deficiency: isize,
    pub omitted_crossing: Option<u32>,
}

pub fn presentation(d: &ProjectiveDiagram) -> Result<PresentationReport, DiagramError> {
    let dp = d.build_presentation()?;
    let p = &dp.presentation;
    Ok(PresentationReport {
        presentation: p.to_string(),
        generators: p.num_generators(),
        relators: p.relators().len(),
        deficiency: p.deficiency(),
        omitted_crossing: dp.omitted_crossing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlexReport {
    pub torsion_class: &'static str,
    pub v: usize,
    pub delta_phi: String,
    pub delta: String,
    pub delta_phi_one_var: String,
    pub delta_one_var: String,
}

pub fn alex(d: &ProjectiveDiagram) -> Result<AlexReport, InvariantError> {
    let r = full_report(d)?;
    Ok(AlexReport {
        torsion_class: class_name(r.torsion_class),
        v: r.v,
        delta_phi: r.delta_phi.to_string(),
        delta: r.delta.to_string(),
        delta_phi_one_var: r.delta_phi_one_var.to_string(),
        delta_one_var: r.delta_one_var.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauJson {
    pub num: String,
    pub denom_pow: u8,
}

impl From<&TorsionFn> for TauJson {
    fn from(t: &TorsionFn) -> Self {
        TauJson { num: t.numerator.to_string(), denom_pow: t.denom_power }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NablaJson {
    pub num: String,
    pub denom_pow: u8,
    pub sign_convention: &'static str,
}

impl From<&NablaFn> for NablaJson {
    fn from(n: &NablaFn) -> Self {
        NablaJson { num: n.numerator.to_string(), denom_pow: n.denom_power, sign_convention: SIGN_CONVENTION }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NablaReport {
    pub torsion_class: &'static str,
    pub v: usize,
    pub tau: TauJson,
    pub nabla: NablaJson,
    pub r: i64,
}

pub fn nabla(d: &ProjectiveDiagram) -> Result<NablaReport, InvariantError> {
    let r = full_report(d)?;
    Ok(NablaReport { torsion_class: class_name(r.torsion_class), v: r.v, tau: (&r.tau).into(), nabla: (&r.nabla).into(), r: r.r })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitJson {
    pub sign: i8,
    pub power: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeinJson {
    /// Crossing id; absent for explicitly supplied triples.
    pub crossing: Option<u32>,
    /// `plus` or `minus`: which member of the triple the input diagram is.
    pub input: &'static str,
    pub case: &'static str,
    pub compatible: bool,
    /// L₊, L₋, L₀.
    pub torsion_classes: [&'static str; 3],
    pub tau: [TauJson; 3],
    pub nabla: [NablaJson; 3],
    pub unrefined_holds: bool,
    pub unrefined_witness: Option<[UnitJson; 3]>,
    pub refined_holds: bool,
    pub refined_witness: Option<[i8; 3]>,
}

impl SkeinJson {
    /// A compatible triple on which either relation fails.
    pub fn failed(&self) -> bool {
        self.compatible && !(self.unrefined_holds && self.refined_holds)
    }
}

/// `at` is the crossing id and its sign in the input diagram.
pub fn skein(tr: &SkeinTriple, at: Option<(u32, Sign)>) -> Result<SkeinJson, InvariantError> {
    let r = verify_skein(tr)?;
    Ok(SkeinJson {
        crossing: at.map(|(id, _)| id),
        input: if matches!(at, Some((_, Sign::Negative))) { "minus" } else { "plus" },
        case: case_name(r.case),
        compatible: r.compatible,
        torsion_classes: [&tr.plus, &tr.minus, &tr.zero].map(|d| class_name(d.torsion_class())),
        tau: [0, 1, 2].map(|k| (&r.tau[k]).into()),
        nabla: [0, 1, 2].map(|k| (&r.nabla[k]).into()),
        unrefined_holds: r.unrefined_holds,
        unrefined_witness: r.unrefined_witness.map(|w| w.map(|(sign, power)| UnitJson { sign, power })),
        refined_holds: r.refined_holds,
        refined_witness: r.refined_witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneVarCover {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverJson {
    pub lift_alexander: String,
    pub lift_alexander_identified: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    /// Every variable sent to t on both sides; informational only.
    pub experimental_one_var: OneVarCover,
}

pub fn cover(d: &ProjectiveDiagram) -> Result<CoverJson, InvariantError> {
    let c = verify_cover(d)?;
    let g = LinkGroup::new(d)?;
    let to_t = |p: &MultiLaurent| p.substitute(&vec![SignedMonomial::new(1, vec![1]); p.nvars()], 1);
    let lhs1 = to_t(&c.lhs);
    let rhs1 = &g.polynomial(CoefficientMode::OneVarUntwisted) * &g.polynomial(CoefficientMode::OneVarTwisted);
    Ok(CoverJson {
        lift_alexander: c.lift_alexander.to_string(),
        lift_alexander_identified: c.lift_alexander_identified.to_string(),
        lhs: c.lhs.to_string(),
        rhs: c.rhs.to_string(),
        holds: c.holds,
        experimental_one_var: OneVarCover {
            holds: lhs1.equal_up_to_unit(&rhs1),
            lhs: lhs1.canonical().to_string(),
            rhs: rhs1.canonical().to_string(),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftJson {
    pub components: usize,
    pub crossings: usize,
    /// Original component (1-based) of each lifted component.
    pub pairing: Vec<usize>,
    /// Where the `.s3d` file was written, if anywhere.
    pub out: Option<String>,
    /// The `.s3d` file itself when no output path was given.
    pub s3d: Option<String>,
}

pub fn lift(l: &Lift, out: Option<String>) -> LiftJson {
    LiftJson {
        components: l.diagram.num_components(),
        crossings: l.diagram.crossings().len(),
        pairing: l.pairing.iter().map(|i| i + 1).collect(),
        s3d: if out.is_none() { Some(to_s3d(&l.diagram)) } else { None },
        out,
    }
}
