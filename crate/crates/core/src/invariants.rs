//! Alexander–Fox matrices, (twisted) Alexander polynomials, torsion, ∇, the
//! skein check and the cover check.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::diagram::{DiagramError, Omit, ProjectiveDiagram, S3Diagram, SkeinCase, SkeinTriple, TorsionClass};
use crate::freegroup::{fox_derivative_projected, Presentation};
use crate::homology::{coefficient_map, CoefficientMode, HomologyError, Splitting};
use crate::ring::{det_fraction_free, GroupRingElem, HElement, MultiLaurent, NablaFn, SignedMonomial, TorsionFn};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("presentation has deficiency {0}, expected 1")]
    Deficiency(isize),
    #[error("torsion representative {0} has no symmetry exponent")]
    Asymmetric(String),
}

/// Matrix of projected Fox derivatives, one row per relator.
#[derive(Clone, Debug)]
pub struct AlexFoxMatrix {
    pub generators: Vec<String>,
    pub entries: Vec<Vec<GroupRingElem>>,
}

pub fn alexander_fox(p: &Presentation, images: &[HElement], has_torsion: bool) -> Result<AlexFoxMatrix, InvariantError> {
    if p.deficiency() != 1 {
        return Err(InvariantError::Deficiency(p.deficiency()));
    }
    Ok(alexander_fox_unchecked(p, images, has_torsion))
}

pub(crate) fn alexander_fox_unchecked(p: &Presentation, images: &[HElement], has_torsion: bool) -> AlexFoxMatrix {
    let entries = p
        .relators()
        .iter()
        .map(|r| (0..p.num_generators()).map(|j| fox_derivative_projected(r, j, images, has_torsion)).collect())
        .collect();
    AlexFoxMatrix { generators: p.generators().to_vec(), entries }
}

impl AlexFoxMatrix {
    /// Applies a ring map entrywise.
    pub fn specialize(&self, f: impl Fn(&GroupRingElem) -> MultiLaurent) -> Vec<Vec<MultiLaurent>> {
        self.entries.iter().map(|row| row.iter().map(&f).collect()).collect()
    }
}

/// Maximal minors of an (n−1)×n matrix: minor i deletes column i.
pub fn maximal_minors(m: &[Vec<MultiLaurent>], n: usize, nvars: usize) -> Vec<MultiLaurent> {
    (0..n).map(|i| det_fraction_free(&delete_column(m, i), nvars)).collect()
}

fn delete_column(m: &[Vec<MultiLaurent>], i: usize) -> Vec<Vec<MultiLaurent>> {
    m.iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, x)| x.clone()).collect()).collect()
}

/// gcd of the maximal minors, in canonical form.
pub fn gcd_of_minors(m: &[Vec<MultiLaurent>], n: usize, nvars: usize) -> MultiLaurent {
    let mut g = MultiLaurent::zero(nvars);
    for i in 0..n {
        let d = det_fraction_free(&delete_column(m, i), nvars);
        g = g.gcd(&d);
        if g.is_one() {
            break;
        }
    }
    g.canonical()
}

/// Presentation, splitting and Fox matrix of a diagram.
#[derive(Clone, Debug)]
pub struct LinkGroup {
    pub presentation: crate::diagram::DiagramPresentation,
    pub splitting: Splitting,
    pub fox: AlexFoxMatrix,
}

impl LinkGroup {
    pub fn new(d: &ProjectiveDiagram) -> Result<LinkGroup, InvariantError> {
        Self::with_omit(d, Omit::Last)
    }

    pub fn with_omit(d: &ProjectiveDiagram, omit: Omit) -> Result<LinkGroup, InvariantError> {
        let dp = d.build_presentation_with(omit)?;
        let full = Splitting::from_roles(&dp.full_roles, &d.deltas());
        full.verify(&dp.full)?;
        let splitting = full.restrict(&dp.kept);
        let fox = alexander_fox_unchecked(&dp.presentation, &splitting.images, splitting.has_torsion);
        Ok(LinkGroup { presentation: dp, splitting, fox })
    }

    /// gcd of the maximal minors; zero when the deficiency exceeds one.
    pub fn polynomial(&self, mode: CoefficientMode) -> MultiLaurent {
        let map = coefficient_map(&self.splitting, mode);
        if self.presentation.presentation.deficiency() != 1 {
            return MultiLaurent::zero(map.target_vars);
        }
        let m = self.fox.specialize(|e| map.apply(e));
        gcd_of_minors(&m, self.presentation.presentation.num_generators(), map.target_vars)
    }

    /// Signed-monomial image of each surviving generator.
    pub fn generator_images(&self, mode: CoefficientMode) -> Vec<SignedMonomial> {
        coefficient_map(&self.splitting, mode).generator_images(&self.splitting)
    }
}

/// Δ^φ in Z[G].
pub fn twisted_alexander(d: &ProjectiveDiagram) -> Result<MultiLaurent, InvariantError> {
    Ok(LinkGroup::new(d)?.polynomial(CoefficientMode::Twisted))
}

/// Δ in Z[G].
pub fn alexander(d: &ProjectiveDiagram) -> Result<MultiLaurent, InvariantError> {
    Ok(LinkGroup::new(d)?.polynomial(CoefficientMode::Untwisted))
}

fn torsion_from(class: TorsionClass, delta_phi_one: MultiLaurent) -> TorsionFn {
    match class {
        TorsionClass::Nontorsion => TorsionFn::new(delta_phi_one, 0),
        TorsionClass::Torsion => TorsionFn::new(delta_phi_one, 1),
    }
}

/// One-variable torsion: Δ^{φ'} for nontorsion links, Δ^{φ'}/(t−1) otherwise.
pub fn torsion_rep(d: &ProjectiveDiagram) -> Result<TorsionFn, InvariantError> {
    let g = LinkGroup::new(d)?;
    Ok(torsion_from(d.torsion_class(), g.polynomial(CoefficientMode::OneVarTwisted)))
}

/// ∇ = −t^r τ(t²) with positive top coefficient, and r.
pub fn nabla_of(tau: &TorsionFn) -> Result<(NablaFn, i64), InvariantError> {
    tau.nabla().ok_or_else(|| InvariantError::Asymmetric(alloc::format!("{}", tau.numerator)))
}

pub fn nabla(d: &ProjectiveDiagram) -> Result<(NablaFn, i64), InvariantError> {
    nabla_of(&torsion_rep(d)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub torsion_class: TorsionClass,
    pub v: usize,
    pub deltas: Vec<i64>,
    pub delta_phi: MultiLaurent,
    pub delta: MultiLaurent,
    pub delta_phi_one_var: MultiLaurent,
    pub delta_one_var: MultiLaurent,
    pub tau: TorsionFn,
    pub nabla: NablaFn,
    pub r: i64,
}

pub fn full_report(d: &ProjectiveDiagram) -> Result<InvariantReport, InvariantError> {
    let g = LinkGroup::new(d)?;
    let delta_phi = g.polynomial(CoefficientMode::Twisted);
    let delta_phi_one_var = g.polynomial(CoefficientMode::OneVarTwisted);
    let (delta, delta_one_var) = if g.splitting.has_torsion {
        (g.polynomial(CoefficientMode::Untwisted), g.polynomial(CoefficientMode::OneVarUntwisted))
    } else {
        (delta_phi.clone(), delta_phi_one_var.clone())
    };
    let tau = torsion_from(d.torsion_class(), delta_phi_one_var.clone());
    let (nabla, r) = nabla_of(&tau)?;
    Ok(InvariantReport {
        torsion_class: d.torsion_class(),
        v: g.splitting.v,
        deltas: d.deltas(),
        delta_phi,
        delta,
        delta_phi_one_var,
        delta_one_var,
        tau,
        nabla,
        r,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinReport {
    pub case: SkeinCase,
    pub compatible: bool,
    /// τ of L₊, L₋, L₀.
    pub tau: [TorsionFn; 3],
    /// ∇ of L₊, L₋, L₀.
    pub nabla: [NablaFn; 3],
    pub unrefined_holds: bool,
    /// (sign, exponent) of the unit on τ₊, τ₋, τ₀.
    pub unrefined_witness: Option<[(i8, i64); 3]>,
    pub refined_holds: bool,
    /// σ₊, σ₋, σ₀.
    pub refined_witness: Option<[i8; 3]>,
}

fn t_minus_one() -> MultiLaurent {
    MultiLaurent::from_coeffs(0, &[-1, 1])
}

/// Finds units with u₊τ₊ + (1−t)u₀τ₀ + t·u₋τ₋ = 0.
pub fn unrefined_skein(tau: &[TorsionFn; 3]) -> Option<[(i8, i64); 3]> {
    let d = tau.iter().map(|x| x.denom_power).max().unwrap();
    let [np, nm, nz] = [0, 1, 2].map(|k| tau[k].numerator_over(d));
    let one_minus_t = -t_minus_one();
    let b = &one_minus_t * &nz;
    let c = nm.shift(&[1]);
    let span = |x: &MultiLaurent| x.degree_range().map_or(0, |(lo, hi)| hi - lo + lo.abs() + hi.abs());
    let bound = span(&np) + span(&b) + span(&c) + 2;
    // exponents by increasing size, so the reported witness is the smallest
    let powers: Vec<i64> = (0..=bound).flat_map(|k| if k == 0 { vec![0] } else { vec![-k, k] }).collect();
    for sz in [1i8, -1] {
        for sm in [1i8, -1] {
            for &az in &powers {
                let bz = b.shift(&[az]);
                let bz = if sz < 0 { -bz } else { bz };
                let partial = &np + &bz;
                for &am in &powers {
                    let cm = c.shift(&[am]);
                    let cm = if sm < 0 { -cm } else { cm };
                    if (&partial + &cm).is_zero() {
                        return Some([(1, 0), (sm, am), (sz, az)]);
                    }
                }
            }
        }
    }
    None
}

/// Finds σ with σ₊∇₊ − σ₋∇₋ = (t − t⁻¹)σ₀∇₀.
pub fn refined_skein(nabla: &[NablaFn; 3]) -> Option<[i8; 3]> {
    let d = nabla.iter().map(|x| x.denom_power).max().unwrap();
    let [np, nm, nz] = [0, 1, 2].map(|k| nabla[k].numerator_over(d));
    let rhs = &NablaFn::t_minus_t_inv_pow(1) * &nz;
    for sm in [1i8, -1] {
        for sz in [1i8, -1] {
            let l = if sm > 0 { &np - &nm } else { &np + &nm };
            let r = if sz > 0 { rhs.clone() } else { -&rhs };
            if l == r {
                return Some([1, sm, sz]);
            }
        }
    }
    None
}

pub fn verify_skein(tr: &SkeinTriple) -> Result<SkeinReport, InvariantError> {
    let tau = [torsion_rep(&tr.plus)?, torsion_rep(&tr.minus)?, torsion_rep(&tr.zero)?];
    let nabla = [nabla_of(&tau[0])?.0, nabla_of(&tau[1])?.0, nabla_of(&tau[2])?.0];
    let compatible = tr.case != SkeinCase::Incompatible;
    let (unrefined_witness, refined_witness) = if compatible { (unrefined_skein(&tau), refined_skein(&nabla)) } else { (None, None) };
    Ok(SkeinReport {
        case: tr.case,
        compatible,
        unrefined_holds: unrefined_witness.is_some(),
        unrefined_witness,
        refined_holds: refined_witness.is_some(),
        refined_witness,
        tau,
        nabla,
    })
}

/// Multivariable Alexander polynomial of a link in the 3-sphere, one
/// variable per component. `omit` picks the dropped relation when the
/// Wirtinger relations are dependent (default: the last nontrivial one).
pub fn s3_alexander_with(d: &S3Diagram, omit: Option<usize>) -> MultiLaurent {
    let (p, comps) = d.wirtinger_presentation();
    let p = p.without_trivial_relators();
    let p = if p.deficiency() <= 0 && !p.relators().is_empty() {
        let r = omit.filter(|&r| r < p.relators().len()).unwrap_or(p.relators().len() - 1);
        p.without_relator(r)
    } else {
        p
    };
    let n = d.num_components();
    if p.deficiency() != 1 {
        return MultiLaurent::zero(n);
    }
    let images: Vec<HElement> = comps
        .iter()
        .map(|&c| {
            let mut e = vec![0i64; n];
            e[c] = 1;
            HElement { exponents: e, torsion: false }
        })
        .collect();
    let fox = alexander_fox_unchecked(&p, &images, false);
    let id: Vec<SignedMonomial> = (0..n).map(|i| SignedMonomial::new(1, (0..n).map(|j| (i == j) as i64).collect())).collect();
    let m = fox.specialize(|e| e.substitute(&id, n, 1));
    gcd_of_minors(&m, p.num_generators(), n)
}

pub fn s3_alexander(d: &S3Diagram) -> MultiLaurent {
    s3_alexander_with(d, None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    /// Δ(L̃) of the lift, in 2v variables.
    pub lift_alexander: MultiLaurent,
    /// Δ'(L̃) after identifying t_{v+i} with t_i.
    pub lift_alexander_identified: MultiLaurent,
    pub lhs: MultiLaurent,
    pub rhs: MultiLaurent,
    pub holds: bool,
}

/// Checks (t−1)Δ'(L̃) = Δ(L)Δ^φ(L) for knots and Δ'(L̃) = Δ(L)Δ^φ(L)
/// for links of two or more components.
pub fn verify_cover(d: &ProjectiveDiagram) -> Result<CoverReport, InvariantError> {
    let lift = d.lift()?;
    let g = LinkGroup::new(d)?;
    let delta_phi = g.polynomial(CoefficientMode::Twisted);
    let delta = g.polynomial(CoefficientMode::Untwisted);
    let v = d.num_components();
    let lift_alexander = s3_alexander(&lift.diagram);
    let psi: Vec<SignedMonomial> =
        lift.pairing.iter().map(|&i| SignedMonomial::new(1, (0..v).map(|j| (i == j) as i64).collect())).collect();
    let identified = lift_alexander.substitute(&psi, v);
    let lhs = if v == 1 { &identified * &t_minus_one() } else { identified.clone() };
    let rhs = &delta * &delta_phi;
    Ok(CoverReport {
        holds: lhs.equal_up_to_unit(&rhs),
        lhs: lhs.canonical(),
        rhs: rhs.canonical(),
        lift_alexander,
        lift_alexander_identified: identified.canonical(),
    })
}
