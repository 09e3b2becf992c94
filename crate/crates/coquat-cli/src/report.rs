//! Report rendering: a JSON schema that mirrors the classified zero lists,
//! and an equivalent human-readable text layout.

use coquat::verify::CertificationResult;
use coquat::{RootReport, ZeroKind};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct JsonReport {
    pub degree: usize,
    pub companion: JsonCompanion,
    pub classes: Vec<JsonClass>,
    pub counts: JsonCounts,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct JsonCompanion {
    /// Ascending degree order.
    pub coefficients: Vec<f64>,
    pub roots: Vec<JsonRoot>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct JsonRoot {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct JsonClass {
    pub q0: f64,
    pub dv: f64,
    #[serde(rename = "type")]
    pub type_tag: String,
    pub kind: String,
    pub branch: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<JsonZeroData>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum JsonZeroData {
    Isolated { z: [f64; 4] },
    Linear { gamma0: f64, k1: f64, k2: f64 },
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct JsonCounts {
    pub isolated: usize,
    pub linear: usize,
    pub hyperboloidal: usize,
}

pub fn to_json_report(report: &RootReport) -> JsonReport {
    let (isolated, linear, hyperboloidal) = report.counts();
    JsonReport {
        degree: report.polynomial.degree(),
        companion: JsonCompanion {
            coefficients: report.companion.coeffs().to_vec(),
            roots: report
                .companion_roots
                .iter()
                .map(|r| JsonRoot {
                    re: r.value.re,
                    im: r.value.im,
                    multiplicity: r.multiplicity,
                })
                .collect(),
        },
        classes: report
            .classes
            .iter()
            .map(|d| JsonClass {
                q0: d.class.q0,
                dv: d.class.dv,
                type_tag: d.class.type_tag.label().to_string(),
                kind: d.kind.label().to_string(),
                branch: d.diagnostics.branch.label().to_string(),
                data: match d.kind {
                    ZeroKind::Isolated(z) => Some(JsonZeroData::Isolated {
                        z: [z.re, z.i, z.j, z.k],
                    }),
                    ZeroKind::Linear {
                        gamma0, k1, k2, ..
                    } => Some(JsonZeroData::Linear { gamma0, k1, k2 }),
                    _ => None,
                },
            })
            .collect(),
        counts: JsonCounts {
            isolated,
            linear,
            hyperboloidal,
        },
    }
}

pub fn render_json(report: &RootReport, cert: Option<&CertificationResult>) -> String {
    // Certification goes to stderr so stdout stays a parseable report.
    if let Some(cert) = cert {
        eprintln!(
            "certification: {} (worst residual {:.3e})",
            if cert.passed { "pass" } else { "FAIL" },
            cert.worst_residual
        );
        for check in cert.checks.iter().filter(|c| !c.passed) {
            eprintln!(
                "  class (q0={}, dv={}) {}: {}",
                check.q0, check.dv, check.kind, check.note
            );
        }
    }
    serde_json::to_string(&to_json_report(report)).expect("report serialization cannot fail")
}

pub fn render_text(report: &RootReport, cert: Option<&CertificationResult>) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let (isolated, linear, hyperboloidal) = report.counts();

    writeln!(out, "degree: {}", report.polynomial.degree()).unwrap();
    writeln!(
        out,
        "companion coefficients (ascending): {:?}",
        report.companion.coeffs()
    )
    .unwrap();
    writeln!(out, "companion roots:").unwrap();
    for r in &report.companion_roots {
        if r.is_real {
            writeln!(out, "  {}  (multiplicity {})", r.value.re, r.multiplicity).unwrap();
        } else {
            writeln!(
                out,
                "  {} {} {}i  (multiplicity {})",
                r.value.re,
                if r.value.im < 0.0 { "-" } else { "+" },
                r.value.im.abs(),
                r.multiplicity
            )
            .unwrap();
        }
    }
    writeln!(out, "admissible classes: {}", report.classes.len()).unwrap();
    for d in &report.classes {
        let head = format!(
            "  [q0={}, dv={}] {} branch {}",
            d.class.q0,
            d.class.dv,
            d.class.type_tag.label(),
            d.diagnostics.branch.label()
        );
        match d.kind {
            ZeroKind::Empty => writeln!(out, "{head}: empty").unwrap(),
            ZeroKind::Isolated(z) => writeln!(out, "{head}: isolated zero {z}").unwrap(),
            ZeroKind::Linear { q0, gamma0, k1, k2 } => {
                let c = q0 - gamma0;
                writeln!(
                    out,
                    "{head}: linear zero {{ {q0} + b i + ({k2} b + {}) j + ({} b + {}) k }} \
                     (gamma0={gamma0}, k1={k1}, k2={k2})",
                    k1 * c,
                    -k1,
                    k2 * c
                )
                .unwrap()
            }
            ZeroKind::Hyperboloidal => {
                writeln!(out, "{head}: hyperboloidal zero (whole class)").unwrap()
            }
        }
    }
    writeln!(
        out,
        "counts: isolated={isolated} linear={linear} hyperboloidal={hyperboloidal}"
    )
    .unwrap();

    if let Some(cert) = cert {
        writeln!(
            out,
            "certification: {} (worst residual {:.3e})",
            if cert.passed { "pass" } else { "FAIL" },
            cert.worst_residual
        )
        .unwrap();
        for check in cert.checks.iter().filter(|c| !c.passed) {
            writeln!(
                out,
                "  class (q0={}, dv={}) {}: {}",
                check.q0, check.dv, check.kind, check.note
            )
            .unwrap();
        }
    }
    out.trim_end().to_string()
}
