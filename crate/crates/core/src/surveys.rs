//! Classification surveys and theorem-level validators: Gruenberg-Kegel
//! graphs against the solvable-cut catalog, prime-spectrum constraints,
//! direct-product criteria, the metacyclic semi-rational search, the
//! alternating-group survey, and Sylow heritage checks.

use crate::arith;
use crate::classify::{
    self, classify_with_classes, AnalyzeOptions, ClassifyError, GroupReport, UsrSet,
};
use crate::group::{
    self, conjugacy_classes, direct_product, realize, ClassData, ClassTable, FiniteGroup,
    GroupSpec,
};
use crate::sympart::{AltClassTable, SymError};
use std::collections::{BTreeMap, BTreeSet};

/// Prime graph: vertices are the primes dividing the group order, with an
/// edge p-q exactly when an element of order pq exists.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GkGraph {
    pub vertices: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
}

pub fn gk_graph(t: &dyn ClassData) -> GkGraph {
    let vertices = arith::prime_divisors_u128(t.group_order());
    let mut edges = BTreeSet::new();
    for k in 0..t.class_count() {
        let ps = arith::prime_divisors(t.rep_order(k));
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                edges.insert((ps[i], ps[j]));
            }
        }
    }
    GkGraph {
        vertices,
        edges: edges.into_iter().collect(),
    }
}

/// One entry of the prime-graph catalog for solvable cut groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: char,
    pub vertices: &'static [u64],
    pub edges: &'static [(u64, u64)],
    /// Whether realizability by a solvable cut group is an open question.
    pub realizability_open: bool,
}

/// The 22 labeled prime graphs realizable (or possibly realizable) by
/// solvable cut groups.
pub const GK_CATALOG: &[CatalogEntry] = &[
    CatalogEntry { label: 'a', vertices: &[2], edges: &[], realizability_open: false },
    CatalogEntry { label: 'b', vertices: &[3], edges: &[], realizability_open: false },
    CatalogEntry { label: 'c', vertices: &[2, 3], edges: &[], realizability_open: false },
    CatalogEntry { label: 'd', vertices: &[2, 3], edges: &[(2, 3)], realizability_open: false },
    CatalogEntry { label: 'e', vertices: &[2, 5], edges: &[], realizability_open: false },
    CatalogEntry { label: 'f', vertices: &[2, 5], edges: &[(2, 5)], realizability_open: false },
    CatalogEntry { label: 'g', vertices: &[3, 7], edges: &[], realizability_open: false },
    CatalogEntry { label: 'h', vertices: &[2, 3, 5], edges: &[(2, 3)], realizability_open: false },
    CatalogEntry { label: 'i', vertices: &[2, 3, 5], edges: &[(2, 3), (2, 5)], realizability_open: false },
    CatalogEntry { label: 'j', vertices: &[2, 3, 5], edges: &[(2, 3), (3, 5)], realizability_open: false },
    CatalogEntry { label: 'k', vertices: &[2, 3, 5], edges: &[(2, 3), (2, 5), (3, 5)], realizability_open: false },
    CatalogEntry { label: 'l', vertices: &[2, 3, 7], edges: &[(2, 3)], realizability_open: false },
    CatalogEntry { label: 'm', vertices: &[2, 3, 7], edges: &[(2, 3), (2, 7)], realizability_open: false },
    CatalogEntry { label: 'n', vertices: &[2, 3, 7], edges: &[(2, 3), (3, 7)], realizability_open: false },
    CatalogEntry { label: 'o', vertices: &[2, 3, 7], edges: &[(2, 3), (2, 7), (3, 7)], realizability_open: false },
    CatalogEntry { label: 'p', vertices: &[2, 3, 5, 7], edges: &[(2, 3), (2, 7), (3, 5), (5, 7)], realizability_open: false },
    CatalogEntry { label: 'q', vertices: &[2, 3, 5, 7], edges: &[(2, 3), (2, 5), (2, 7), (3, 5), (5, 7)], realizability_open: false },
    CatalogEntry { label: 'r', vertices: &[2, 3, 5, 7], edges: &[(2, 3), (2, 5), (2, 7), (3, 5), (3, 7), (5, 7)], realizability_open: false },
    CatalogEntry { label: 's', vertices: &[2, 3, 5, 7], edges: &[(2, 3), (2, 7), (3, 5), (3, 7)], realizability_open: true },
    CatalogEntry { label: 't', vertices: &[2, 3, 5, 7], edges: &[(2, 3), (2, 5), (2, 7), (3, 5)], realizability_open: true },
    CatalogEntry { label: 'u', vertices: &[2, 3, 5, 7], edges: &[(2, 3), (2, 7), (3, 5), (3, 7), (5, 7)], realizability_open: true },
    CatalogEntry { label: 'v', vertices: &[2, 3, 5, 7], edges: &[(2, 3), (2, 5), (2, 7), (3, 5), (3, 7)], realizability_open: true },
];

/// Exact match of a prime graph against the catalog, on labeled vertices.
pub fn figure1_lookup(graph: &GkGraph) -> Option<&'static CatalogEntry> {
    GK_CATALOG.iter().find(|entry| {
        entry.vertices == graph.vertices.as_slice() && entry.edges == graph.edges.as_slice()
    })
}

/// The flags the prime-spectrum constraints consume.
#[derive(Debug, Clone)]
pub struct SpectrumFlags {
    pub primes: Vec<u64>,
    pub cut: bool,
    pub semirational: bool,
    pub usr: bool,
    pub quadratic_rational: Option<bool>,
    pub qsr: Option<bool>,
    pub is_nilpotent: Option<bool>,
    pub is_solvable: Option<bool>,
}

/// Check the prime-spectrum constraints; returns human-readable violations
/// (empty for every group satisfying the theorems).
pub fn spectrum_validate(f: &SpectrumFlags) -> Vec<String> {
    let mut out = Vec::new();
    let in_any = f.cut
        || f.semirational
        || f.usr
        || f.quadratic_rational == Some(true)
        || f.qsr == Some(true);
    if !in_any || f.primes.is_empty() {
        return out;
    }
    let has = |p: u64| f.primes.contains(&p);
    let within = |allowed: &[u64]| f.primes.iter().all(|p| allowed.contains(p));
    if !has(2) && !has(3) {
        out.push("neither 2 nor 3 divides the order".into());
    }
    if f.is_nilpotent == Some(true) && !within(&[2, 3]) {
        out.push("nilpotent group with a prime outside {2,3}".into());
    }
    if !has(2) && !within(&[3, 7]) {
        out.push("odd-order group with a prime outside {3,7}".into());
    }
    if f.is_solvable == Some(true) {
        if f.cut && !within(&[2, 3, 5, 7]) {
            out.push("solvable cut group with a prime outside {2,3,5,7}".into());
        }
        if (f.usr || f.quadratic_rational == Some(true) || f.qsr == Some(true))
            && !within(&[2, 3, 5, 7, 13])
        {
            out.push("solvable group outside the {2,3,5,7,13} spectrum".into());
        }
        if f.semirational && !within(&[2, 3, 5, 7, 13, 17]) {
            out.push("solvable semi-rational group outside {2,3,5,7,13,17}".into());
        }
    }
    out
}

/// Class-level rationality flags (rational, cut, semi-rational) without any
/// field identification.
pub fn class_side_flags(t: &dyn ClassData) -> (bool, bool, bool) {
    let mut rational = true;
    let mut cut = true;
    let mut sr = true;
    for k in 0..t.class_count() {
        let o = t.rep_order(k);
        if o <= 2 {
            continue;
        }
        let mut orbit = BTreeSet::new();
        orbit.insert(k);
        for j in arith::unit_group_generators(o) {
            orbit.insert(t.power_class(k, j as i64));
        }
        // close the orbit under the generators
        loop {
            let mut grew = false;
            for &c in orbit.clone().iter() {
                for j in arith::unit_group_generators(o) {
                    if orbit.insert(t.power_class(c, j as i64)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        if orbit.len() > 1 {
            rational = false;
        }
        if orbit.len() > 2 {
            sr = false;
            cut = false;
        } else if orbit.len() == 2 {
            let inv = t.inverse_class(k);
            if !(orbit.contains(&inv) && inv != k) {
                cut = false;
            }
        }
    }
    (rational, cut, sr)
}

// ------------------------------------------------------------------
// direct products
// ------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatClass {
    Cut,
    Usr,
    Qsr,
    Sr,
    Qr,
}

impl RatClass {
    pub const ALL: [RatClass; 5] = [
        RatClass::Cut,
        RatClass::Usr,
        RatClass::Qsr,
        RatClass::Sr,
        RatClass::Qr,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RatClass::Cut => "cut",
            RatClass::Usr => "usr",
            RatClass::Qsr => "qsr",
            RatClass::Sr => "sr",
            RatClass::Qr => "qr",
        }
    }
}

pub fn in_class(r: &GroupReport, x: RatClass) -> Option<bool> {
    match x {
        RatClass::Cut => Some(r.cut),
        RatClass::Usr => Some(r.usr),
        RatClass::Sr => Some(r.semirational),
        RatClass::Qr => r.quadratic_rational,
        RatClass::Qsr => r.qsr,
    }
}

/// One direct-product factor with the data the product criteria consume.
pub struct ProductFactor {
    pub report: GroupReport,
    pub group: FiniteGroup,
    pub nonrational_element_orders: BTreeSet<u64>,
}

pub fn product_factor(g: &FiniteGroup, opts: &AnalyzeOptions) -> Result<ProductFactor, ClassifyError> {
    let t = conjugacy_classes(g);
    let mut light = opts.clone();
    light.with_validators = false;
    let report = classify_with_classes(g, &t, &light)?;
    let mut nonrational = BTreeSet::new();
    for k in 0..t.class_count() {
        let er = classify::element_rationality(&t, k)?;
        if !er.rational {
            nonrational.insert(er.order);
        }
    }
    Ok(ProductFactor {
        report,
        group: g.clone(),
        nonrational_element_orders: nonrational,
    })
}

/// Theorem-level prediction for whether the direct product of two groups of
/// class `x` stays in `x`: one factor rational, or both group fields equal to
/// one quadratic field (imaginary for the cut class). Returns None when a
/// factor is not known to be in `x`.
pub fn predict_product(a: &ProductFactor, b: &ProductFactor, x: RatClass) -> Option<bool> {
    if !(in_class(&a.report, x)? && in_class(&b.report, x)?) {
        return None;
    }
    if a.report.rational || b.report.rational {
        return Some(true);
    }
    let (da, db) = (a.report.group_field_degree?, b.report.group_field_degree?);
    let fields_match = da == 2
        && db == 2
        && a.report.group_field_quadratic_d == b.report.group_field_quadratic_d
        && match x {
            RatClass::Cut => a.report.group_field_quadratic_d.is_some_and(|d| d < 0),
            _ => true,
        };
    Some(fields_match)
}

/// The independent cut-product criterion: every pair of non-rational element
/// orders must have gcd in {3, 4, 6}.
pub fn predict_cut_product_gcd(a: &ProductFactor, b: &ProductFactor) -> Option<bool> {
    if !(a.report.cut && b.report.cut) {
        return None;
    }
    for &n1 in &a.nonrational_element_orders {
        for &n2 in &b.nonrational_element_orders {
            if !matches!(arith::gcd(n1, n2), 3 | 4 | 6) {
                return Some(false);
            }
        }
    }
    Some(true)
}

/// Realize the product and classify it directly.
pub fn verify_product(
    a: &FiniteGroup,
    b: &FiniteGroup,
    x: RatClass,
    opts: &AnalyzeOptions,
) -> Result<Option<bool>, ClassifyError> {
    let p = direct_product(a, b, opts.cap)?;
    let mut light = opts.clone();
    light.with_validators = false;
    let report = classify::classify(&p, &light)?;
    Ok(in_class(&report, x))
}

// ------------------------------------------------------------------
// fingerprints and the metacyclic survey
// ------------------------------------------------------------------

/// Isomorphism-sensitive invariants used to deduplicate survey rows: equal
/// for isomorphic groups (a necessary condition only).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: u64,
    pub exponent: u64,
    pub class_sizes: Vec<u64>,
    pub element_order_histogram: Vec<(u64, u64)>,
    pub flags: (bool, bool, bool, bool),
}

pub fn fingerprint(t: &ClassTable, report: &GroupReport) -> Fingerprint {
    let mut sizes = t.sizes().to_vec();
    sizes.sort_unstable();
    let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
    for k in 0..t.class_count() {
        *hist.entry(t.rep_order(k)).or_insert(0) += t.sizes()[k];
    }
    Fingerprint {
        order: report.order as u64,
        exponent: report.exponent,
        class_sizes: sizes,
        element_order_histogram: hist.into_iter().collect(),
        flags: (report.rational, report.cut, report.semirational, report.usr),
    }
}

/// The published table of non-abelian metacyclic semi-rational groups that
/// are not cut: presentation parameters (n, t, l, r) and the uniform witness
/// m where one exists.
pub const METACYCLIC_SR_TABLE: [((u64, u64, u64, u64), Option<u64>); 18] = [
    ((5, 2, 5, 4), Some(2)),
    ((8, 2, 4, 7), Some(3)),
    ((8, 2, 8, 7), Some(3)),
    ((10, 2, 5, 9), Some(3)),
    ((10, 2, 10, 9), Some(3)),
    ((12, 2, 6, 11), Some(7)),
    ((12, 2, 12, 11), Some(5)),
    ((8, 4, 8, 7), Some(3)),
    ((10, 4, 10, 9), Some(3)),
    ((12, 4, 12, 11), Some(7)),
    ((13, 6, 13, 4), Some(5)),
    ((21, 6, 21, 5), Some(11)),
    ((26, 6, 26, 17), Some(11)),
    ((28, 6, 14, 3), Some(5)),
    ((28, 6, 28, 3), Some(5)),
    ((42, 6, 42, 5), Some(11)),
    ((8, 4, 4, 3), None),
    ((12, 4, 6, 11), None),
];

#[derive(Debug, Clone)]
pub struct MetacyclicRow {
    pub params: (u64, u64, u64, u64),
    pub order: u64,
    pub usr_m_set: UsrSet,
    pub qsr: bool,
    pub quadratic_rational: bool,
    pub fingerprint: Fingerprint,
    /// Index into [`METACYCLIC_SR_TABLE`] when the fingerprint matches a
    /// published presentation.
    pub paper_index: Option<usize>,
}

#[derive(Debug)]
pub struct MetacyclicSurvey {
    /// Deduplicated semi-rational-but-not-cut groups, sorted by (order, params).
    pub rows: Vec<MetacyclicRow>,
    pub scanned: usize,
    pub cut_count: usize,
    /// Tuples where quadratic rationality and uniform semi-rationality
    /// disagree (expected empty).
    pub qr_usr_mismatches: Vec<(u64, u64, u64, u64)>,
}

/// Parameter space of the metacyclic search: t in {2,3,4,6} and phi(n) in
/// {1,2,4,6,8,12}, the range any non-abelian semi-rational candidate must
/// occupy.
fn metacyclic_parameter_space() -> Vec<(u64, u64, u64, u64)> {
    let ns: Vec<u64> = (1..=42).filter(|&n| matches!(arith::euler_phi(n), 1 | 2 | 4 | 6 | 8 | 12)).collect();
    let mut tuples = Vec::new();
    for &n in &ns {
        for t in [2u64, 3, 4, 6] {
            for r in 2..n {
                if r % n == 1 % n || arith::mod_pow(r, t, n) != 1 % n {
                    continue;
                }
                for l in arith::divisors(n) {
                    if (l as u128 * ((r + n - 1) % n) as u128) % n as u128 == 0 {
                        tuples.push((n, t, l, r));
                    }
                }
            }
        }
    }
    tuples
}

pub fn metacyclic_sr_survey(opts: &AnalyzeOptions) -> Result<MetacyclicSurvey, ClassifyError> {
    let mut light = opts.clone();
    light.with_validators = false;
    // fingerprints of the published presentations, classified once
    let mut paper_prints: Vec<Fingerprint> = Vec::new();
    for ((n, t, l, r), _) in METACYCLIC_SR_TABLE {
        let g = realize(&GroupSpec::Metacyclic { n, t, l, r }, opts.cap)?;
        let ct = conjugacy_classes(&g);
        let report = classify_with_classes(&g, &ct, &light)?;
        paper_prints.push(fingerprint(&ct, &report));
    }
    let mut dedup: BTreeMap<Fingerprint, MetacyclicRow> = BTreeMap::new();
    let mut scanned = 0usize;
    let mut cut_count = 0usize;
    let mut mismatches = Vec::new();
    for (n, t, l, r) in metacyclic_parameter_space() {
        let g = realize(&GroupSpec::Metacyclic { n, t, l, r }, opts.cap)?;
        let ct = conjugacy_classes(&g);
        let report = classify_with_classes(&g, &ct, &light)?;
        scanned += 1;
        if report.cut {
            cut_count += 1;
        }
        if report.quadratic_rational != Some(report.usr) {
            mismatches.push((n, t, l, r));
        }
        if report.semirational && !report.cut {
            let fp = fingerprint(&ct, &report);
            if !dedup.contains_key(&fp) {
                let paper_index = paper_prints.iter().position(|p| *p == fp);
                dedup.insert(
                    fp.clone(),
                    MetacyclicRow {
                        params: (n, t, l, r),
                        order: g.order(),
                        usr_m_set: report.usr_m_set.clone(),
                        qsr: report.qsr == Some(true),
                        quadratic_rational: report.quadratic_rational == Some(true),
                        fingerprint: fp,
                        paper_index,
                    },
                );
            }
        }
    }
    let mut rows: Vec<MetacyclicRow> = dedup.into_values().collect();
    rows.sort_by_key(|r| (r.order, r.params));
    Ok(MetacyclicSurvey {
        rows,
        scanned,
        cut_count,
        qr_usr_mismatches: mismatches,
    })
}

// ------------------------------------------------------------------
// alternating survey
// ------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AltSurveyRow {
    pub n: u64,
    pub classes: usize,
    pub cut: bool,
    pub usr: bool,
}

/// Degrees where the alternating group is cut.
pub const ALT_CUT_DEGREES: [u64; 8] = [1, 2, 3, 4, 7, 8, 9, 12];
/// Degrees up to 22 where the alternating group fails uniform
/// semi-rationality.
pub const ALT_NON_USR_DEGREES: [u64; 2] = [16, 21];

pub fn alternating_survey(max_n: u64) -> Result<Vec<AltSurveyRow>, SymError> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let t = AltClassTable::new(n)?;
        let (_, cut, _) = class_side_flags(&t);
        let usr = !classify::usr_values(&t).is_empty();
        rows.push(AltSurveyRow {
            n,
            classes: t.class_count(),
            cut,
            usr,
        });
    }
    Ok(rows)
}

// ------------------------------------------------------------------
// Sylow heritage
// ------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SylowHeritageEntry {
    pub p: u64,
    pub sylow_order: u64,
    pub sylow_cut: bool,
    pub hypothesis: String,
}

/// For p in {2, 3} dividing the order: extract the Sylow p-subgroup, decide
/// whether it is cut, and name the applicable closure hypothesis.
pub fn sylow_heritage(
    g: &FiniteGroup,
    _opts: &AnalyzeOptions,
) -> Result<Vec<SylowHeritageEntry>, ClassifyError> {
    let mut out = Vec::new();
    for p in [2u64, 3] {
        if g.order() % p != 0 {
            continue;
        }
        let sub = group::sylow_subgroup_parts(g, p)?;
        let syl = sub.as_group(g);
        let t = conjugacy_classes(&syl);
        let (_, sylow_cut, _) = class_side_flags(&t);
        let hypothesis = if sub.is_abelian(g) {
            "abelian Sylow subgroup"
        } else if g
            .generators()
            .iter()
            .all(|&c| sub.generators.iter().all(|&s| sub.contains(g.conj(s, c))))
        {
            "normal Sylow subgroup"
        } else if g.order() % 2 == 1 {
            "odd order"
        } else {
            "direct check"
        };
        out.push(SylowHeritageEntry {
            p,
            sylow_order: syl.order(),
            sylow_cut,
            hypothesis: hypothesis.into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    fn g(s: &str) -> FiniteGroup {
        realize(&crate::cli::parse_spec(s).unwrap(), DEFAULT_CAP).unwrap()
    }

    #[test]
    fn gk_graph_examples() {
        let t = conjugacy_classes(&g("sym(4)"));
        let graph = gk_graph(&t);
        assert_eq!(graph.vertices, vec![2, 3]);
        assert!(graph.edges.is_empty());
        let t = conjugacy_classes(&g("C6"));
        let graph = gk_graph(&t);
        assert_eq!(graph.vertices, vec![2, 3]);
        assert_eq!(graph.edges, vec![(2, 3)]);
        let t = conjugacy_classes(&g("Q8"));
        let graph = gk_graph(&t);
        assert_eq!(graph.vertices, vec![2]);
        assert!(graph.edges.is_empty());
    }

    #[test]
    fn figure1_examples() {
        let no_edge_23 = GkGraph {
            vertices: vec![2, 3],
            edges: vec![],
        };
        assert_eq!(figure1_lookup(&no_edge_23).unwrap().label, 'c');
        let single3 = GkGraph {
            vertices: vec![3],
            edges: vec![],
        };
        assert_eq!(figure1_lookup(&single3).unwrap().label, 'b');
        let edge23 = GkGraph {
            vertices: vec![2, 3],
            edges: vec![(2, 3)],
        };
        assert_eq!(figure1_lookup(&edge23).unwrap().label, 'd');
        let nope = GkGraph {
            vertices: vec![2, 3, 11],
            edges: vec![],
        };
        assert!(figure1_lookup(&nope).is_none());
        assert_eq!(GK_CATALOG.len(), 22);
    }

    #[test]
    fn spectrum_validator_examples() {
        let ok = SpectrumFlags {
            primes: vec![3, 7],
            cut: true,
            semirational: true,
            usr: true,
            quadratic_rational: Some(true),
            qsr: Some(true),
            is_nilpotent: Some(false),
            is_solvable: Some(true),
        };
        assert!(spectrum_validate(&ok).is_empty());
        let bad = SpectrumFlags {
            primes: vec![2, 3, 11],
            ..ok.clone()
        };
        // 11 violates the cut, usr/qr and semi-rational spectra at once
        assert_eq!(spectrum_validate(&bad).len(), 3);
        let not_in_class = SpectrumFlags {
            primes: vec![5, 11],
            cut: false,
            semirational: false,
            usr: false,
            quadratic_rational: Some(false),
            qsr: Some(false),
            is_nilpotent: Some(false),
            is_solvable: Some(true),
        };
        assert!(spectrum_validate(&not_in_class).is_empty());
    }

    #[test]
    fn product_predictions() {
        let opts = AnalyzeOptions::default();
        let c3 = product_factor(&g("C3"), &opts).unwrap();
        let c4 = product_factor(&g("C4"), &opts).unwrap();
        let c6 = product_factor(&g("C6"), &opts).unwrap();
        // C3 x C4 leaves the cut class; C3 x C6 stays
        assert_eq!(predict_product(&c3, &c4, RatClass::Cut), Some(false));
        assert_eq!(predict_cut_product_gcd(&c3, &c4), Some(false));
        assert_eq!(predict_product(&c3, &c6, RatClass::Cut), Some(true));
        assert_eq!(predict_cut_product_gcd(&c3, &c6), Some(true));
        assert_eq!(
            verify_product(&c3.group, &c4.group, RatClass::Cut, &opts).unwrap(),
            Some(false)
        );
        assert_eq!(
            verify_product(&c3.group, &c6.group, RatClass::Cut, &opts).unwrap(),
            Some(true)
        );
        // products with a rational factor stay in every class
        let s3 = product_factor(&g("sym(3)"), &opts).unwrap();
        let q8 = product_factor(&g("Q8"), &opts).unwrap();
        for x in RatClass::ALL {
            assert_eq!(predict_product(&s3, &q8, x), Some(true), "{}", x.name());
            assert_eq!(
                verify_product(&s3.group, &q8.group, x, &opts).unwrap(),
                Some(true)
            );
        }
    }

    #[test]
    fn sylow_heritage_examples() {
        let opts = AnalyzeOptions::default();
        let entries = sylow_heritage(&g("sym(4)"), &opts).unwrap();
        assert_eq!(entries.len(), 2);
        assert!(entries.iter().all(|e| e.sylow_cut));
        let entries = sylow_heritage(&g("metacyclic(7,3,7,2)"), &opts).unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].p, 3);
        assert!(entries[0].sylow_cut);
        assert_eq!(entries[0].hypothesis, "abelian Sylow subgroup");
        let entries = sylow_heritage(&g("product(Q8, C3)"), &opts).unwrap();
        assert_eq!(entries.len(), 2);
        assert!(entries.iter().all(|e| e.sylow_cut));
    }

    #[test]
    fn alternating_survey_small() {
        let rows = alternating_survey(9).unwrap();
        for row in &rows {
            assert_eq!(row.cut, ALT_CUT_DEGREES.contains(&row.n), "n={}", row.n);
            assert!(row.usr, "n={} should be uniformly semi-rational", row.n);
        }
        assert!(alternating_survey(23).is_err());
    }
}
