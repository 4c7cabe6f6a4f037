//! Rationality classification: per-element rationality flags, the group-level
//! verdicts (rational, cut, semi-rational, uniformly semi-rational, quadratic
//! rational, quadratic semi-rational), the central-unit rank, the central
//! height, and the assembled report with validator outcomes.

use crate::arith;
use crate::chars::{self, CharError, DixonOptions, FieldCounts};
use crate::galois::{self, FieldId, GaloisError, UnitSubgroup};
use crate::group::{
    self, center, conjugacy_classes, index_two_abelian_subgroups, ClassData, FiniteGroup,
    GroupError,
};
use crate::surveys;
use std::collections::BTreeSet;

#[derive(Debug, Clone, thiserror::Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Chars(#[from] CharError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
}

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    pub cap: u64,
    pub dixon: DixonOptions,
    /// Run the heavier per-group validators (Sylow heritage).
    pub with_validators: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            cap: group::DEFAULT_CAP,
            dixon: DixonOptions::default(),
            with_validators: true,
        }
    }
}

/// Rationality data of one conjugacy class.
#[derive(Debug, Clone)]
pub struct ElementRationality {
    pub class: usize,
    pub order: u64,
    pub stabilizer: UnitSubgroup,
    pub field: FieldId,
    pub rational: bool,
    pub inverse_semirational: bool,
    pub semirational: bool,
    /// Residues m mod |x| whose power class, together with the class itself,
    /// covers all generators: `None` means every residue works (rational
    /// class), otherwise the explicit coset.
    pub partners: Option<Vec<u64>>,
}

pub fn element_rationality(
    t: &dyn ClassData,
    k: usize,
) -> Result<ElementRationality, GaloisError> {
    let o = t.rep_order(k);
    let stabilizer = galois::stabilizer_units(t, k);
    let field = galois::fixed_field_id(&stabilizer)?;
    let index = stabilizer.index();
    let rational = index == 1;
    let semirational = index <= 2;
    let minus_one_in = o <= 2 || stabilizer.contains(o - 1);
    let inverse_semirational = rational || (index == 2 && !minus_one_in);
    let partners = if rational {
        None
    } else if index == 2 {
        Some(
            arith::units(o)
                .into_iter()
                .filter(|&j| !stabilizer.contains(j))
                .collect(),
        )
    } else {
        Some(Vec::new())
    };
    Ok(ElementRationality {
        class: k,
        order: o,
        stabilizer,
        field,
        rational,
        inverse_semirational,
        semirational,
        partners,
    })
}

/// The set of residues m (mod `modulus`) such that, for every class and every
/// power coprime to the representative order, x^j lands in the class of x or
/// of x^m. The set of valid m in `0..exponent` is exactly the residues mod
/// `modulus` (which always divides the exponent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsrSet {
    pub exponent: u64,
    pub modulus: u64,
    pub residues: Vec<u64>,
}

impl UsrSet {
    pub fn all(exponent: u64) -> UsrSet {
        UsrSet {
            exponent,
            modulus: 1,
            residues: vec![0],
        }
    }

    pub fn empty(exponent: u64) -> UsrSet {
        UsrSet {
            exponent,
            modulus: 1,
            residues: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn contains(&self, m: u64) -> bool {
        self.residues.binary_search(&(m % self.modulus)).is_ok()
    }

    /// Number of valid m in `0..exponent`.
    pub fn count(&self) -> u64 {
        self.residues.len() as u64 * (self.exponent / self.modulus)
    }
}

/// Valid uniform semi-rationality witnesses, by constraint propagation: each
/// non-rational class restricts m to a coset modulo its representative order,
/// and the admissible set is met across classes via lifting to the lcm.
pub fn usr_values(t: &dyn ClassData) -> UsrSet {
    let e = t.exponent();
    let mut constraints: BTreeSet<(u64, Vec<u64>)> = BTreeSet::new();
    for k in 0..t.class_count() {
        let o = t.rep_order(k);
        if o <= 2 {
            continue;
        }
        let mut partner: Option<usize> = None;
        let mut coset = Vec::new();
        for j in arith::units(o) {
            let pc = t.power_class(k, j as i64);
            if pc == k {
                continue;
            }
            match partner {
                None => {
                    partner = Some(pc);
                    coset.push(j);
                }
                Some(q) if q == pc => coset.push(j),
                Some(_) => return UsrSet::empty(e), // not even semi-rational
            }
        }
        if partner.is_some() {
            constraints.insert((o, coset));
        }
    }
    if constraints.is_empty() {
        return expand(UsrSet::all(e));
    }
    let mut modulus = 1u64;
    let mut residues: Vec<u64> = vec![0];
    for (o, coset) in constraints {
        let m2 = arith::lcm(modulus, o);
        let lift = m2 / modulus;
        let coset: BTreeSet<u64> = coset.into_iter().collect();
        let mut next = Vec::new();
        for &s in &residues {
            for i in 0..lift {
                let x = s + i * modulus;
                if coset.contains(&(x % o)) {
                    next.push(x);
                }
            }
        }
        modulus = m2;
        residues = next;
        residues.sort_unstable();
        if residues.is_empty() {
            return UsrSet {
                exponent: e,
                modulus,
                residues,
            };
        }
    }
    expand(UsrSet {
        exponent: e,
        modulus,
        residues,
    })
}

/// Rewrite small sets over the full exponent modulus for readable reports.
fn expand(s: UsrSet) -> UsrSet {
    if s.modulus == s.exponent || s.exponent > 10_000 {
        return s;
    }
    let mut residues = Vec::new();
    for m in 0..s.exponent {
        if s.residues.binary_search(&(m % s.modulus)).is_ok() {
            residues.push(m);
        }
    }
    UsrSet {
        exponent: s.exponent,
        modulus: s.exponent,
        residues,
    }
}

/// Free rank of the central units of the integral group ring: the difference
/// between the number of real classes and rational classes.
pub fn rank_rho(t: &dyn ClassData) -> u64 {
    let r = galois::r_class_partition(t).block_count;
    let q = galois::q_class_partition(t).block_count;
    (r - q) as u64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastCutRecord {
    pub criterion: &'static str,
    pub verdict: bool,
}

/// Specialized cut criteria for odd-order groups, 2-groups and 3-groups.
pub fn fast_cut_checks(t: &dyn ClassData) -> Option<FastCutRecord> {
    let order = t.group_order();
    if order == 1 {
        return None;
    }
    let primes = arith::prime_divisors_u128(order);
    if primes == vec![2] {
        let verdict = (0..t.class_count()).all(|k| {
            let pc = t.power_class(k, 3);
            pc == k || pc == t.inverse_class(k)
        });
        return Some(FastCutRecord {
            criterion: "2-group",
            verdict,
        });
    }
    if primes == vec![3] {
        let verdict = (0..t.class_count()).all(|k| t.power_class(k, 2) == t.inverse_class(k));
        return Some(FastCutRecord {
            criterion: "3-group",
            verdict,
        });
    }
    if order % 2 == 1 {
        // every element order is 7 or a power of 3, and x^5 ~ x^-1
        let verdict = (0..t.class_count()).all(|k| {
            let o = t.rep_order(k);
            let shape_ok = o == 7 || is_power_of(o, 3);
            shape_ok && t.power_class(k, 5) == t.inverse_class(k)
        });
        return Some(FastCutRecord {
            criterion: "odd-order",
            verdict,
        });
    }
    None
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Q*-group detection: an abelian index-2 subgroup H, not elementary abelian
/// of exponent 2, inverted by some element a of order 4 with a^2 a square
/// in H.
pub fn q_star_detect(g: &FiniteGroup) -> bool {
    if g.order() % 2 != 0 || g.is_abelian() {
        // in an abelian group inversion-by-conjugation is trivial, forcing H
        // to have exponent 2, which is excluded
        return false;
    }
    if (0..g.order() as u32).all(|x| g.elem_order(x) != 4) {
        return false;
    }
    for h in index_two_abelian_subgroups(g) {
        if h.elements.iter().all(|&x| g.elem_order(x) <= 2) {
            continue;
        }
        let hgens: Vec<u32> = if h.generators.is_empty() {
            h.elements.clone()
        } else {
            h.generators.clone()
        };
        for a in 0..g.order() as u32 {
            if g.elem_order(a) != 4 || h.contains(a) {
                continue;
            }
            if !hgens.iter().all(|&x| g.conj(x, a) == g.inv(x)) {
                continue;
            }
            let a2 = g.mul(a, a);
            if h.elements.iter().any(|&b| g.mul(b, b) == a2) {
                return true;
            }
        }
    }
    false
}

/// Central height of the unit group of the integral group ring: 2 exactly for
/// Q*-groups, 0 for cut groups with trivial center, 1 otherwise.
pub fn central_height(q_star: bool, cut: bool, center_order: u64) -> u8 {
    if q_star {
        2
    } else if cut && center_order == 1 {
        0
    } else {
        1
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ValidatorOutcome {
    pub name: String,
    pub passed: Option<bool>,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureFlags {
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
}

/// The full verdict record for one group.
#[derive(Debug, Clone)]
pub struct GroupReport {
    pub order: u128,
    pub exponent: u64,
    pub primes: Vec<u64>,
    pub class_count: usize,
    pub rational: bool,
    pub cut: bool,
    pub semirational: bool,
    pub usr: bool,
    pub quadratic_rational: Option<bool>,
    pub qsr: Option<bool>,
    pub usr_m_set: UsrSet,
    pub rho: u64,
    pub central_height: Option<u8>,
    pub q_star: Option<bool>,
    pub group_field_degree: Option<u64>,
    pub group_field_quadratic_d: Option<i64>,
    pub counts: Option<FieldCounts>,
    pub gk: surveys::GkGraph,
    pub figure1_label: Option<char>,
    pub structure: Option<StructureFlags>,
    pub validators: Vec<ValidatorOutcome>,
}

/// Full classification of a realized group.
pub fn classify(g: &FiniteGroup, opts: &AnalyzeOptions) -> Result<GroupReport, ClassifyError> {
    let t = conjugacy_classes(g);
    classify_with_classes(g, &t, opts)
}

pub fn classify_with_classes(
    g: &FiniteGroup,
    t: &crate::group::ClassTable,
    opts: &AnalyzeOptions,
) -> Result<GroupReport, ClassifyError> {
    let order = g.order();
    let mut rational = true;
    let mut cut = true;
    let mut semirational = true;
    for k in 0..t.class_count() {
        let er = element_rationality(t, k)?;
        rational &= er.rational;
        cut &= er.inverse_semirational;
        semirational &= er.semirational;
    }
    let usr_m_set = usr_values(t);
    let usr = !usr_m_set.is_empty();
    let rho = rank_rho(t);
    let structure = group::solvability_flags(g);
    let center_order = center(g).order();
    let q_star = q_star_detect(g);

    // character side
    let char_data = match chars::dixon_table(t, &opts.dixon) {
        Ok(ct) => Some(ct),
        Err(CharError::ExponentTooLarge(_)) | Err(CharError::TooManyClasses(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let mut quadratic_rational = None;
    let mut qsr = None;
    let mut counts = None;
    let mut group_field_degree = None;
    let mut group_field_quadratic_d = None;
    let mut e3_cut = None;
    if let Some(ct) = &char_data {
        let mut qr = true;
        let mut e3 = true;
        for chi in 0..ct.num_chars() {
            match chars::char_field(ct, t, chi).map_err(CharError::from)? {
                FieldId::Rationals => {}
                FieldId::Quadratic(d) => {
                    if d > 0 {
                        e3 = false;
                    }
                }
                FieldId::HigherDegree(_) => {
                    qr = false;
                    e3 = false;
                }
            }
        }
        quadratic_rational = Some(qr);
        qsr = Some(qr && semirational);
        e3_cut = Some(e3);
        counts = Some(chars::field_counts(ct, t).map_err(CharError::from)?);
        let (gf, deg) = chars::group_field(ct, t);
        group_field_degree = Some(deg);
        if deg == 2 {
            if let FieldId::Quadratic(d) = galois::fixed_field_id(&gf).map_err(CharError::from)? {
                group_field_quadratic_d = Some(d);
            }
        }
        // a uniformly semi-rational group is always quadratic rational
        assert!(!usr || qr, "usr group failed quadratic rationality");
    }

    let gk = surveys::gk_graph(t);
    let figure1_label = surveys::figure1_lookup(&gk).map(|e| e.label);
    let height = central_height(q_star, cut, center_order);

    let mut validators = Vec::new();
    // three independent cut criteria
    {
        let rho_cut = rho == 0;
        let mut agree = cut == rho_cut;
        let mut detail = format!("class criterion {cut}, rank criterion {rho_cut}");
        if let Some(e3) = e3_cut {
            agree &= cut == e3;
            detail.push_str(&format!(", character criterion {e3}"));
        }
        validators.push(ValidatorOutcome {
            name: "cut-criteria-agreement".into(),
            passed: Some(agree),
            detail,
        });
    }
    if let Some(fast) = fast_cut_checks(t) {
        validators.push(ValidatorOutcome {
            name: format!("fast-cut-{}", fast.criterion),
            passed: Some(fast.verdict == cut),
            detail: format!("specialized verdict {}, general verdict {cut}", fast.verdict),
        });
    }
    {
        let report_flags = surveys::SpectrumFlags {
            primes: gk.vertices.clone(),
            cut,
            semirational,
            usr,
            quadratic_rational,
            qsr,
            is_nilpotent: Some(structure.is_nilpotent),
            is_solvable: Some(structure.is_solvable),
        };
        let violations = surveys::spectrum_validate(&report_flags);
        validators.push(ValidatorOutcome {
            name: "prime-spectrum".into(),
            passed: Some(violations.is_empty()),
            detail: if violations.is_empty() {
                "no violations".into()
            } else {
                violations.join("; ")
            },
        });
    }
    if structure.is_solvable && cut {
        let ok = matches!(figure1_label, Some(l) if ('a'..='r').contains(&l));
        validators.push(ValidatorOutcome {
            name: "gk-catalog".into(),
            passed: Some(ok),
            detail: match figure1_label {
                Some(l) => format!("matched catalog graph ({l})"),
                None => "no catalog match".into(),
            },
        });
    }
    if let Some(deg) = group_field_degree {
        if semirational || quadratic_rational == Some(true) {
            let l = gk.vertices.len() as u32;
            let bound = 1u64 << (l + 1);
            validators.push(ValidatorOutcome {
                name: "field-degree-bound".into(),
                passed: Some(deg <= bound),
                detail: format!("[Q(G):Q] = {deg} <= 2^{} = {bound}", l + 1),
            });
        }
    }
    if let Some(c) = &counts {
        if cut || qsr == Some(true) {
            let ok = c.rational_chars == c.rational_classes
                && c.quadratic_chars == c.quadratic_classes;
            validators.push(ValidatorOutcome {
                name: "field-count-equality".into(),
                passed: Some(ok),
                detail: format!(
                    "rational {}/{}, quadratic {}/{}",
                    c.rational_chars, c.rational_classes, c.quadratic_chars, c.quadratic_classes
                ),
            });
        } else {
            validators.push(ValidatorOutcome {
                name: "field-count-note".into(),
                passed: None,
                detail: format!(
                    "rational chars {} vs classes {}, quadratic chars {} vs classes {}",
                    c.rational_chars, c.rational_classes, c.quadratic_chars, c.quadratic_classes
                ),
            });
        }
    }
    if order % 2 == 1 && order > 1 {
        // observed central height against the odd-order statement; logged only
        let has7 = (0..t.class_count()).any(|k| t.rep_order(k) == 7);
        let stated: u8 = if cut && has7 { 0 } else { 1 };
        validators.push(ValidatorOutcome {
            name: "odd-order-height-note".into(),
            passed: None,
            detail: format!("observed height {height}, stated height {stated}"),
        });
    }
    if opts.with_validators && cut {
        for entry in surveys::sylow_heritage(g, opts)? {
            validators.push(ValidatorOutcome {
                name: format!("sylow-{}-cut", entry.p),
                passed: Some(entry.sylow_cut),
                detail: format!(
                    "Sylow {}-subgroup of order {} ({})",
                    entry.p, entry.sylow_order, entry.hypothesis
                ),
            });
        }
    }

    Ok(GroupReport {
        order: order as u128,
        exponent: g.exponent(),
        primes: gk.vertices.clone(),
        class_count: t.class_count(),
        rational,
        cut,
        semirational,
        usr,
        quadratic_rational,
        qsr,
        usr_m_set,
        rho,
        central_height: Some(height),
        q_star: Some(q_star),
        group_field_degree,
        group_field_quadratic_d,
        counts,
        gk,
        figure1_label,
        structure: Some(StructureFlags {
            is_abelian: structure.is_abelian,
            is_nilpotent: structure.is_nilpotent,
            is_solvable: structure.is_solvable,
        }),
        validators,
    })
}

/// Classification from class-level data only, for groups served without
/// element enumeration. Character-side flags are reported as not computed
/// unless the group is rational, where they are forced.
pub fn classify_class_level(t: &dyn ClassData, structure: Option<StructureFlags>) -> GroupReport {
    let mut rational = true;
    let mut cut = true;
    let mut semirational = true;
    for k in 0..t.class_count() {
        let er = element_rationality(t, k).expect("class-level fields");
        rational &= er.rational;
        cut &= er.inverse_semirational;
        semirational &= er.semirational;
    }
    let usr_m_set = usr_values(t);
    let usr = !usr_m_set.is_empty();
    let rho = rank_rho(t);
    let gk = surveys::gk_graph(t);
    let figure1_label = surveys::figure1_lookup(&gk).map(|e| e.label);
    let (quadratic_rational, qsr) = if rational {
        (Some(true), Some(true))
    } else {
        (None, None)
    };
    let mut validators = Vec::new();
    validators.push(ValidatorOutcome {
        name: "cut-criteria-agreement".into(),
        passed: Some(cut == (rho == 0)),
        detail: format!("class criterion {cut}, rank criterion {}", rho == 0),
    });
    if let Some(s) = &structure {
        let flags = surveys::SpectrumFlags {
            primes: gk.vertices.clone(),
            cut,
            semirational,
            usr,
            quadratic_rational,
            qsr,
            is_nilpotent: Some(s.is_nilpotent),
            is_solvable: Some(s.is_solvable),
        };
        let violations = surveys::spectrum_validate(&flags);
        validators.push(ValidatorOutcome {
            name: "prime-spectrum".into(),
            passed: Some(violations.is_empty()),
            detail: if violations.is_empty() {
                "no violations".into()
            } else {
                violations.join("; ")
            },
        });
    }
    GroupReport {
        order: t.group_order(),
        exponent: t.exponent(),
        primes: gk.vertices.clone(),
        class_count: t.class_count(),
        rational,
        cut,
        semirational,
        usr,
        quadratic_rational,
        qsr,
        usr_m_set,
        rho,
        central_height: None,
        q_star: None,
        group_field_degree: None,
        group_field_quadratic_d: None,
        counts: None,
        gk,
        figure1_label,
        structure,
        validators,
    }
}
