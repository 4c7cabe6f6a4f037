//! The JSON report document and its human-readable rendering. Field order is
//! fixed by declaration order and all numbers are exact integers, so equal
//! analyses produce byte-identical documents.

use crate::chars::FieldCounts;
use crate::classify::{GroupReport, ValidatorOutcome};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub spec: String,
    pub order: u128,
    pub exponent: u64,
    pub primes: Vec<u64>,
    pub flags: FlagsDoc,
    pub usr_m_set: UsrSetDoc,
    pub rho: u64,
    pub central_height: Option<u8>,
    pub q_star: Option<bool>,
    pub group_field: GroupFieldDoc,
    pub counts: Option<FieldCounts>,
    pub gk_graph: GkGraphDoc,
    pub validators: Vec<ValidatorOutcome>,
    pub timings: Option<TimingsDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FlagsDoc {
    pub rational: bool,
    pub cut: bool,
    pub semirational: bool,
    pub usr: bool,
    pub quadratic_rational: Option<bool>,
    pub qsr: Option<bool>,
}

/// The valid uniform witnesses m in `0..exponent` are exactly the integers
/// congruent to a listed residue modulo `modulus`.
#[derive(Debug, Clone, Serialize)]
pub struct UsrSetDoc {
    pub exponent: u64,
    pub modulus: u64,
    pub residues: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupFieldDoc {
    pub degree: Option<u64>,
    pub quadratic_d: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GkGraphDoc {
    pub vertices: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
    pub figure1_label: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TimingsDoc {
    pub total_ms: u128,
}

impl ReportDocument {
    pub fn from_report(spec: String, r: &GroupReport, timings: Option<TimingsDoc>) -> Self {
        ReportDocument {
            spec,
            order: r.order,
            exponent: r.exponent,
            primes: r.primes.clone(),
            flags: FlagsDoc {
                rational: r.rational,
                cut: r.cut,
                semirational: r.semirational,
                usr: r.usr,
                quadratic_rational: r.quadratic_rational,
                qsr: r.qsr,
            },
            usr_m_set: UsrSetDoc {
                exponent: r.usr_m_set.exponent,
                modulus: r.usr_m_set.modulus,
                residues: r.usr_m_set.residues.clone(),
            },
            rho: r.rho,
            central_height: r.central_height,
            q_star: r.q_star,
            group_field: GroupFieldDoc {
                degree: r.group_field_degree,
                quadratic_d: r.group_field_quadratic_d,
            },
            counts: r.counts,
            gk_graph: GkGraphDoc {
                vertices: r.gk.vertices.clone(),
                edges: r.gk.edges.clone(),
                figure1_label: r.figure1_label.map(|c| c.to_string()),
            },
            validators: r.validators.clone(),
            timings,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization")
    }

    /// Plain-text summary for terminal use.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let push = |s: &mut String, k: &str, v: String| {
            s.push_str(&format!("{k:<22}{v}\n"));
        };
        push(&mut s, "spec", self.spec.clone());
        push(&mut s, "order", self.order.to_string());
        push(&mut s, "exponent", self.exponent.to_string());
        push(
            &mut s,
            "primes",
            format!("{:?}", self.primes),
        );
        let opt = |b: Option<bool>| match b {
            Some(true) => "yes",
            Some(false) => "no",
            None => "not computed",
        };
        push(&mut s, "rational", opt(Some(self.flags.rational)).into());
        push(&mut s, "cut", opt(Some(self.flags.cut)).into());
        push(&mut s, "semi-rational", opt(Some(self.flags.semirational)).into());
        push(&mut s, "uniformly SR", opt(Some(self.flags.usr)).into());
        push(&mut s, "quadratic rational", opt(self.flags.quadratic_rational).into());
        push(&mut s, "quadratic SR", opt(self.flags.qsr).into());
        let usr = if self.usr_m_set.residues.is_empty() {
            "empty".to_string()
        } else if self.usr_m_set.residues.len() > 24 {
            format!(
                "{} residues mod {}",
                self.usr_m_set.residues.len(),
                self.usr_m_set.modulus
            )
        } else {
            format!(
                "{:?} mod {}",
                self.usr_m_set.residues, self.usr_m_set.modulus
            )
        };
        push(&mut s, "usr m-set", usr);
        push(&mut s, "rho", self.rho.to_string());
        push(
            &mut s,
            "central height",
            self.central_height
                .map_or("not computed".into(), |h| h.to_string()),
        );
        push(
            &mut s,
            "Q*-group",
            opt(self.q_star).into(),
        );
        let gf = match (self.group_field.degree, self.group_field.quadratic_d) {
            (Some(1), _) => "Q".to_string(),
            (Some(2), Some(d)) => format!("Q(sqrt({d}))"),
            (Some(d), _) => format!("degree {d}"),
            (None, _) => "not computed".to_string(),
        };
        push(&mut s, "Q(G)", gf);
        if let Some(c) = &self.counts {
            push(
                &mut s,
                "char counts",
                format!(
                    "real {} rational {} quadratic {}",
                    c.real_chars, c.rational_chars, c.quadratic_chars
                ),
            );
            push(
                &mut s,
                "class counts",
                format!(
                    "real {} rational {} quadratic {}",
                    c.real_classes, c.rational_classes, c.quadratic_classes
                ),
            );
        }
        let fig = self
            .gk_graph
            .figure1_label
            .as_ref()
            .map_or(String::from("-"), |l| format!("({l})"));
        push(
            &mut s,
            "GK-graph",
            format!(
                "vertices {:?} edges {:?} catalog {}",
                self.gk_graph.vertices, self.gk_graph.edges, fig
            ),
        );
        for v in &self.validators {
            let mark = match v.passed {
                Some(true) => "ok",
                Some(false) => "FAIL",
                None => "note",
            };
            s.push_str(&format!("  [{mark}] {}: {}\n", v.name, v.detail));
        }
        s
    }
}

/// The JSON schema the report documents conform to, shipped with the crate.
pub const REPORT_SCHEMA: &str = include_str!("../assets/report.schema.json");

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, AnalyzeOptions};
    use crate::group::{realize, DEFAULT_CAP};

    #[test]
    fn document_round_trip_and_shape() {
        let g = realize(&crate::cli::parse_spec("D10").unwrap(), DEFAULT_CAP).unwrap();
        let r = classify(&g, &AnalyzeOptions::default()).unwrap();
        let doc = ReportDocument::from_report("D10".into(), &r, None);
        let json = doc.to_json();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["spec"], "D10");
        assert_eq!(value["order"], 10);
        assert_eq!(value["flags"]["cut"], false);
        assert_eq!(value["flags"]["usr"], true);
        assert_eq!(value["usr_m_set"]["residues"][0], 2);
        assert!(value["timings"].is_null());
        // large orders serialize as exact integers
        let big: u128 = 51090942171709440000; // 21!
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(s, "51090942171709440000");
    }
}
