#![allow(dead_code)]

pub mod checks;
pub mod plat;

use plat::{End, Plat};
use proptest::prelude::*;
use rplink_core::diagram::parse_pld;
use rplink_core::freegroup::fox_derivative_projected;
use rplink_core::homology::{coefficient_map, CoefficientMode, Splitting};
use rplink_core::ring::det_fraction_free;
use rplink_core::{MultiLaurent, ProjectiveDiagram};

pub fn corpus_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every `.pld` file of the corpus, sorted by name.
pub fn corpus() -> Vec<(String, ProjectiveDiagram)> {
    let mut files: Vec<_> =
        std::fs::read_dir(corpus_dir()).unwrap().map(|e| e.unwrap().path()).filter(|p| p.extension().is_some_and(|e| e == "pld")).collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let d = parse_pld(&std::fs::read_to_string(&p).unwrap()).unwrap();
            (name, d)
        })
        .collect()
}

pub fn load(name: &str) -> ProjectiveDiagram {
    parse_pld(&std::fs::read_to_string(corpus_dir().join(format!("{name}.pld"))).unwrap()).unwrap()
}

pub fn poly(s: &str) -> MultiLaurent {
    MultiLaurent::parse(s, Some(1)).unwrap()
}

fn ends(bits: &[bool]) -> Vec<End> {
    // a set bit caps this position with the next one when possible
    let mut v = Vec::new();
    let mut i = 0;
    while i < bits.len() {
        if bits[i] && i + 1 < bits.len() {
            v.push(End::CapRight);
            v.push(End::CapLeft);
            i += 2;
        } else {
            v.push(End::Wall);
            i += 1;
        }
    }
    v
}

/// Random planar diagrams with up to `max_crossings` crossings.
pub fn arb_plat(max_crossings: usize) -> impl Strategy<Value = Plat> {
    (2usize..=4)
        .prop_flat_map(move |n| {
            (
                Just(n),
                prop::collection::vec((0..n - 1, any::<bool>()), 0..=max_crossings),
                prop::collection::vec(any::<bool>(), n),
                prop::collection::vec(any::<bool>(), n),
                prop::collection::vec(any::<bool>(), 4),
            )
        })
        .prop_map(|(n, word, b, t, reverse)| Plat { n, word, bottom: ends(&b), top: ends(&t), reverse })
}

/// Random valid diagrams (plats with an odd number of wall ends are skipped).
pub fn arb_diagram(max_crossings: usize) -> impl Strategy<Value = ProjectiveDiagram> {
    arb_plat(max_crossings).prop_filter_map("odd wall count", |p| p.diagram())
}

/// gcd of all (n−1)-minors of the Fox matrix of the unsimplified
/// presentation: the first elementary ideal, computed without any
/// relation dropped or generator eliminated.
pub fn full_elementary_gcd(d: &ProjectiveDiagram, mode: CoefficientMode) -> MultiLaurent {
    let dp = d.build_presentation().unwrap();
    let s = Splitting::from_roles(&dp.full_roles, &d.deltas());
    let map = coefficient_map(&s, mode);
    let p = &dp.full;
    let n = p.num_generators();
    let m: Vec<Vec<MultiLaurent>> = p
        .relators()
        .iter()
        .map(|r| (0..n).map(|j| map.apply(&fox_derivative_projected(r, j, &s.images, s.has_torsion))).collect())
        .collect();
    let nvars = map.target_vars;
    let mut g = MultiLaurent::zero(nvars);
    if n == 1 {
        return MultiLaurent::one(nvars);
    }
    for rows in combinations(m.len(), n - 1) {
        for skip in 0..n {
            let sub: Vec<Vec<MultiLaurent>> =
                rows.iter().map(|&r| (0..n).filter(|&j| j != skip).map(|j| m[r][j].clone()).collect()).collect();
            g = g.gcd(&det_fraction_free(&sub, nvars));
        }
    }
    g.canonical()
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else { break };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}
