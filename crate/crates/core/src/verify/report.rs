use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Partial,
    Refuted,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Partial => "partial",
            Status::Refuted => "refuted",
        })
    }
}

/// How a check relates to the published claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckRole {
    /// The claim exactly as printed.
    Statement,
    /// A corrected or restricted reading of the claim.
    Restated,
    /// A side assertion made in the accompanying argument; reported only.
    Remark,
}

impl fmt::Display for CheckRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckRole::Statement => "statement",
            CheckRole::Restated => "restated",
            CheckRole::Remark => "remark",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub role: CheckRole,
    pub status: Status,
    pub instances: usize,
    pub failures: usize,
    pub detail: String,
}

/// A single disagreeing value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub instance: String,
    pub expected: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A sequence whose graph breaks the statement.
    Sequence {
        terms: Vec<u64>,
        n: usize,
        detail: String,
    },
    /// A cover smaller than the claimed cover number.
    Cover {
        graph: String,
        claimed: Vec<Vec<usize>>,
        minimum: Vec<Vec<usize>>,
        revalidated: bool,
    },
    /// A cycle longer than claimed.
    Cycle {
        graph: String,
        cycle: Vec<usize>,
        length: usize,
        claimed: usize,
        revalidated: bool,
    },
    Values {
        mismatches: Vec<Mismatch>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets = |s: &[Vec<usize>]| {
            s.iter()
                .map(|c| {
                    let labels: Vec<String> = c.iter().map(|v| format!("v{v}")).collect();
                    format!("{{{}}}", labels.join(","))
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Witness::Sequence { terms, n, detail } => {
                let t: Vec<String> = terms.iter().map(u64::to_string).collect();
                write!(f, "sequence ({}) with n = {n}: {detail}", t.join(","))
            }
            Witness::Cover {
                graph,
                claimed,
                minimum,
                revalidated,
            } => write!(
                f,
                "{graph}: claimed cover of size {} [{}]; minimum cover of size {} [{}]; revalidated = {revalidated}",
                claimed.len(),
                sets(claimed),
                minimum.len(),
                sets(minimum)
            ),
            Witness::Cycle {
                graph,
                cycle,
                length,
                claimed,
                revalidated,
            } => {
                let c: Vec<String> = cycle.iter().map(|v| format!("v{v}")).collect();
                write!(
                    f,
                    "{graph}: cycle ({}) of length {length} vs claimed {claimed}; revalidated = {revalidated}",
                    c.join(",")
                )
            }
            Witness::Values { mismatches } => {
                let parts: Vec<String> = mismatches
                    .iter()
                    .map(|m| format!("{}: expected {} computed {}", m.instance, m.expected, m.computed))
                    .collect();
                write!(f, "{}", parts.join("; "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub statement: String,
    pub range: String,
    pub seed: u64,
    pub status: Status,
    pub checks: Vec<Check>,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl ClaimReport {
    pub fn check(&self, label_prefix: &str) -> Option<&Check> {
        self.checks
            .iter()
            .find(|c| c.label.starts_with(label_prefix))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "[{}] {}  {}\n  range: {}\n",
            self.status.to_string().to_uppercase(),
            self.claim_id,
            self.statement,
            self.range
        );
        for c in &self.checks {
            out.push_str(&format!(
                "  {} ({}): {} [{} instances, {} failing]{}\n",
                c.label,
                c.role,
                c.status,
                c.instances,
                c.failures,
                if c.detail.is_empty() {
                    String::new()
                } else {
                    format!(" {}", c.detail)
                }
            ));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("  witness: {w}\n"));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }
}

/// Overall verdict: statements and restatements decide, remarks never do.
pub(crate) fn overall(checks: &[Check]) -> Status {
    checks
        .iter()
        .filter(|c| c.role != CheckRole::Remark)
        .map(|c| c.status)
        .max()
        .unwrap_or(Status::Verified)
}
