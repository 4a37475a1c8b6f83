//! The fixed list of checks C1–C14 against the bundled construction, and
//! the report they produce.
//!
//! Every check returns a [`CheckResult`] whose witness can be confirmed by
//! [`Suite::reverify`] using expansion and evaluation only. Failures of one
//! check, including an exhausted Gröbner budget, never stop the run.

mod checks;
pub mod fixture;
pub mod mutation;
mod reverify;
pub mod witness;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{Budget, IdealBasis};

pub use fixture::{Construction, ConstructionSpec, HodgeTables};
pub use mutation::{Mutation, MutationOutcome};
pub use witness::Witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    BudgetExceeded,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::BudgetExceeded => "budget-exceeded",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub status: CheckStatus,
    pub witness: Witness,
    pub paper_anchor: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
    C14,
}

impl CheckId {
    pub const ALL: [CheckId; 14] = [
        CheckId::C1,
        CheckId::C2,
        CheckId::C3,
        CheckId::C4,
        CheckId::C5,
        CheckId::C6,
        CheckId::C7,
        CheckId::C8,
        CheckId::C9,
        CheckId::C10,
        CheckId::C11,
        CheckId::C12,
        CheckId::C13,
        CheckId::C14,
    ];

    pub fn name(self) -> &'static str {
        self.info().0
    }

    pub fn description(self) -> &'static str {
        self.info().1
    }

    /// The sentence of the source text this check is about.
    pub fn anchor(self) -> &'static str {
        self.info().2
    }

    /// Checks whose result depends on a Gröbner basis computation.
    pub fn uses_groebner(self) -> bool {
        matches!(
            self,
            CheckId::C2 | CheckId::C7 | CheckId::C8 | CheckId::C9 | CheckId::C10
        )
    }

    fn info(self) -> (&'static str, &'static str, &'static str) {
        match self {
            CheckId::C1 => (
                "C1",
                "additivity: the 5-fold iterate of the derivation is zero",
                "an additive vector field in characteristic 5, i.e., δ^[5]=0",
            ),
            CheckId::C2 => (
                "C2",
                "fixed locus: x1, x2, x3 lie in the radical of the fixed-locus ideal, which vanishes at [1:0:0:0]",
                "This vector field has precisely one singular point, namely [1:0:0:0].",
            ),
            CheckId::C3 => (
                "C3",
                "homogeneous invariants: delta(F) = delta(G) = 0",
                "which lie in the kernel of δ",
            ),
            CheckId::C4 => (
                "C4",
                "chart forms: the derivation on the charts x3, x2, x1 equals the displayed forms",
                "Then δ becomes y∂_x + z∂_y + ∂_z",
            ),
            CheckId::C5 => (
                "C5",
                "affine invariants: f, g, a, b, c, d are killed by their chart derivations",
                "which lie in the kernel of δ",
            ),
            CheckId::C6 => (
                "C6",
                "table identities: each homogeneous entry dehomogenizes to its inhomogeneous entry",
                "homogeneous of degree 5 | inhomogeneous",
            ),
            CheckId::C7 => (
                "C7",
                "presentation of B: the eliminated kernel equals (s^5 - v - 2w^2, t^5 + u - vw - 3w^3)",
                "B:=A^5[f,g]",
            ),
            CheckId::C8 => (
                "C8",
                "smoothness of B: 1 lies in the ideal plus its Jacobian minors",
                "An easy calculation shows that B:=A^5[f,g] is smooth over k.",
            ),
            CheckId::C9 => (
                "C9",
                "smoothness of C~ above w = 0 (chart x2, elements a, b)",
                "all closed points of Spec C~ lying above this neighbourhood are smooth",
            ),
            CheckId::C10 => (
                "C10",
                "smoothness of C^ above v = w = 0 (chart x1, elements c, d)",
                "ŷ^5- and ẑ^5-coordinate equal to zero",
            ),
            CheckId::C11 => (
                "C11",
                "degree-5 invariants: x0^5, ..., x3^5, F, G lie in the graded kernel V",
                "Since x_i^5 ∈ V for i=0,...,3",
            ),
            CheckId::C12 => (
                "C12",
                "invariant quintic: a seeded element Q of V is invariant, misses [1:0:0:0], and has chi = K^2 = 5",
                "Being a quintic surface in P^3, we compute χ(O_Q)=K_Q^2=5",
            ),
            CheckId::C13 => (
                "C13",
                "torsor descent: the quotient has chi = K^2 = 1",
                "we obtain χ(O_X)=K_X^2=1",
            ),
            CheckId::C14 => (
                "C14",
                "feasibility and tables: characteristics {2,3,5}, torsion bound 1, b2 = 9, E1 verdicts",
                "Non-classical Godeaux surfaces can exist in characteristic 2 ≤ p ≤ 5 only.",
            ),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    /// Accepts `C7`, `c7` or `7`.
    fn from_str(s: &str) -> Result<CheckId> {
        let t = s.trim();
        let digits = t.strip_prefix(['C', 'c']).unwrap_or(t);
        CheckId::ALL
            .iter()
            .copied()
            .find(|id| &id.name()[1..] == digits)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check `{s}` (expected C1..C14)")))
    }
}

/// Runs checks against one construction. Results of the `B` elimination are
/// cached so that C8 reuses the ideal computed for C7.
pub struct Suite {
    construction: Construction,
    tables: HodgeTables,
    seed: u64,
    budget: Budget,
    b_kernel: OnceLock<Result<IdealBasis>>,
}

impl Suite {
    pub fn new(seed: u64, budget: Budget) -> Suite {
        Suite::with_inputs(Construction::builtin(), HodgeTables::builtin(), seed, budget)
    }

    pub fn with_inputs(construction: Construction, tables: HodgeTables, seed: u64, budget: Budget) -> Suite {
        Suite {
            construction,
            tables,
            seed,
            budget,
            b_kernel: OnceLock::new(),
        }
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn run(&self, id: CheckId) -> CheckResult {
        let (status, witness) = match self.evaluate(id) {
            Ok((true, w)) => (CheckStatus::Pass, w),
            Ok((false, w)) => (CheckStatus::Fail, w),
            Err(e) => {
                let status = if e.is_budget() {
                    CheckStatus::BudgetExceeded
                } else {
                    CheckStatus::Fail
                };
                (status, Witness::Error { message: e.to_string() })
            }
        };
        CheckResult {
            id: id.name().to_string(),
            description: id.description().to_string(),
            status,
            witness,
            paper_anchor: id.anchor().to_string(),
        }
    }

    pub fn run_all(&self) -> Vec<CheckResult> {
        CheckId::ALL.iter().map(|&id| self.run(id)).collect()
    }

    pub fn run_selected(&self, ids: &[CheckId]) -> Vec<CheckResult> {
        ids.iter().map(|&id| self.run(id)).collect()
    }
}

/// All fourteen checks on the bundled inputs, in order.
pub fn run_all(seed: u64, budget: Budget) -> Vec<CheckResult> {
    Suite::new(seed, budget).run_all()
}

/// A single check on the bundled inputs.
pub fn run_only(id: &str, seed: u64, budget: Budget) -> Result<CheckResult> {
    let id: CheckId = id.parse()?;
    Ok(Suite::new(seed, budget).run(id))
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.status == CheckStatus::Pass)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportFormat {
    Json,
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReportFormat> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "text" => Ok(ReportFormat::Text),
            other => Err(Error::InvalidArgument(format!("unknown format `{other}`"))),
        }
    }
}

/// Serializes results. JSON output is a pretty-printed array followed by a
/// newline and is byte-for-byte reproducible.
pub fn report(results: &[CheckResult], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(results).expect("check results serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => text_report(results),
    }
}

fn text_report(results: &[CheckResult]) -> String {
    if results.is_empty() {
        return "no checks run\n".to_string();
    }
    let mut out = String::new();
    for r in results {
        out.push_str(&format!("{:<4} {:<15} {}\n", r.id, r.status.as_str(), r.description));
        if let Witness::Error { message } = &r.witness {
            out.push_str(&format!("     {message}\n"));
        }
    }
    let count = |s: CheckStatus| results.iter().filter(|r| r.status == s).count();
    out.push_str(&format!(
        "{} checks: {} pass, {} fail, {} budget-exceeded\n",
        results.len(),
        count(CheckStatus::Pass),
        count(CheckStatus::Fail),
        count(CheckStatus::BudgetExceeded)
    ));
    out
}
