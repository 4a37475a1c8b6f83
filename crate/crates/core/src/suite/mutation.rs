//! Single-coefficient edits of the construction fixture.
//!
//! A mutation names one string field of the fixture by a dotted path
//! (`invariants.F`, `charts.1.derivation`, `presentations.0.complete_intersection.1`)
//! and replaces one occurrence of `find` in it. The edit must match exactly
//! once so that it stays a single, local change.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Budget;

use super::fixture::{Construction, ConstructionSpec, HodgeTables, CONSTRUCTION_TOML};
use super::{CheckResult, CheckStatus, Suite};

pub const MUTATIONS_TOML: &str = include_str!("../../fixtures/mutations.toml");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Mutation {
    pub name: String,
    pub path: String,
    pub find: String,
    pub replace: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MutationFile {
    mutation: Vec<Mutation>,
}

impl Mutation {
    pub fn parse_list(text: &str) -> Result<Vec<Mutation>> {
        let file: MutationFile = toml::from_str(text).map_err(|e| Error::Fixture(e.to_string()))?;
        Ok(file.mutation)
    }

    /// The canned mutations shipped with the crate.
    pub fn builtin() -> Vec<Mutation> {
        Mutation::parse_list(MUTATIONS_TOML).expect("bundled mutation list parses")
    }

    /// Applies the edit to the fixture text `base`.
    pub fn apply(&self, base: &str) -> Result<ConstructionSpec> {
        let mut doc: toml::Value = toml::from_str(base).map_err(|e| Error::Fixture(e.to_string()))?;
        let field = locate(&mut doc, &self.path)?;
        let text = field
            .as_str()
            .ok_or_else(|| Error::Fixture(format!("`{}` is not a string", self.path)))?;
        let hits = text.matches(self.find.as_str()).count();
        if hits != 1 {
            return Err(Error::Fixture(format!(
                "`{}` occurs {hits} times in `{}`, expected once",
                self.find, self.path
            )));
        }
        *field = toml::Value::String(text.replacen(&self.find, &self.replace, 1));
        doc.try_into()
            .map_err(|e: toml::de::Error| Error::Fixture(e.to_string()))
    }

    pub fn apply_builtin(&self) -> Result<Construction> {
        Construction::build(self.apply(CONSTRUCTION_TOML)?)
    }
}

fn locate<'a>(doc: &'a mut toml::Value, path: &str) -> Result<&'a mut toml::Value> {
    let mut cur = doc;
    for seg in path.split('.') {
        let missing = || Error::Fixture(format!("no field `{seg}` on the way to `{path}`"));
        cur = match cur {
            toml::Value::Table(t) => t.get_mut(seg).ok_or_else(missing)?,
            toml::Value::Array(a) => {
                let i: usize = seg.parse().map_err(|_| missing())?;
                a.get_mut(i).ok_or_else(missing)?
            }
            _ => return Err(missing()),
        };
    }
    Ok(cur)
}

/// A mutation together with the suite results on the mutated inputs.
#[derive(Clone, Debug)]
pub struct MutationOutcome {
    pub mutation: Mutation,
    pub results: Vec<CheckResult>,
}

impl MutationOutcome {
    /// Ids of the checks that no longer pass.
    pub fn flipped(&self) -> Vec<&str> {
        self.results
            .iter()
            .filter(|r| r.status != CheckStatus::Pass)
            .map(|r| r.id.as_str())
            .collect()
    }

    pub fn detected(&self) -> bool {
        self.results.iter().any(|r| r.status == CheckStatus::Fail)
    }
}

/// Runs the whole suite on the mutated construction.
pub fn run_mutation(mutation: &Mutation, seed: u64, budget: Budget) -> Result<MutationOutcome> {
    let construction = mutation.apply_builtin()?;
    let suite = Suite::with_inputs(construction, HodgeTables::builtin(), seed, budget);
    Ok(MutationOutcome {
        mutation: mutation.clone(),
        results: suite.run_all(),
    })
}
