//! Suite inputs: the construction data and the Hodge tables, read from TOML.
//!
//! The raw, string-valued form ([`ConstructionSpec`]) is what mutation tests
//! patch; [`Construction::build`] parses it into rings and polynomials.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::numerics::{grid_from_display, Grid};
use crate::poly::{laurent_normalize, Chart, Polynomial, Ring, RingRef};

pub const CONSTRUCTION_TOML: &str = include_str!("../../fixtures/construction.toml");
pub const HODGE_TABLES_TOML: &str = include_str!("../../fixtures/hodge_tables.toml");

/// Names of the invariant symbols allowed in table numerators.
const INVARIANT_SYMBOLS: [&str; 2] = ["F", "G"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChartSpec {
    pub index: usize,
    pub names: Vec<String>,
    pub derivation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRowSpec {
    pub name: String,
    pub chart: usize,
    pub numerator: String,
    pub divisor_power: u32,
    pub affine: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationSpec {
    pub name: String,
    pub chart: usize,
    pub elements: Vec<String>,
    pub complete_intersection: Vec<String>,
    pub locus: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionSpec {
    pub characteristic: u64,
    pub variables: Vec<String>,
    pub derivation: String,
    pub invariants: BTreeMap<String, String>,
    pub charts: Vec<ChartSpec>,
    pub table: Vec<TableRowSpec>,
    pub presentations: Vec<PresentationSpec>,
}

impl ConstructionSpec {
    pub fn from_toml(text: &str) -> Result<ConstructionSpec> {
        toml::from_str(text).map_err(|e| Error::Fixture(e.to_string()))
    }

    /// The construction shipped with the crate.
    pub fn builtin() -> ConstructionSpec {
        ConstructionSpec::from_toml(CONSTRUCTION_TOML).expect("bundled construction fixture parses")
    }
}

#[derive(Clone, Debug)]
pub struct ChartData {
    pub chart: Chart,
    pub displayed: Derivation,
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub name: String,
    pub chart: usize,
    pub numerator_text: String,
    pub divisor_power: u32,
    /// The numerator with `F`, `G` substituted, in the homogeneous ring.
    pub numerator: Polynomial,
    pub affine: Polynomial,
}

impl TableRow {
    /// `x3^-divisor_power · numerator`; fails if the division is not exact.
    pub fn homogeneous(&self) -> Result<Polynomial> {
        let x3 = self.numerator.ring().nvars() - 1;
        laurent_normalize(&self.numerator, x3, self.divisor_power)
    }
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub chart: usize,
    pub elements: Vec<String>,
    /// `k[u, v, w, s, t]`.
    pub ring: RingRef,
    pub complete_intersection: Vec<Polynomial>,
    pub locus: Vec<Polynomial>,
}

/// Names of the presentation ring: Frobenius coordinates, then generators.
pub const PRESENTATION_VARIABLES: [&str; 5] = ["u", "v", "w", "s", "t"];

/// The parsed construction.
#[derive(Clone, Debug)]
pub struct Construction {
    pub spec: ConstructionSpec,
    pub ring: RingRef,
    pub derivation: Derivation,
    /// Invariants by name, in name order.
    pub invariants: Vec<(String, Polynomial)>,
    pub charts: Vec<ChartData>,
    pub table: Vec<TableRow>,
    pub presentations: Vec<Presentation>,
}

impl Construction {
    pub fn builtin() -> Construction {
        Construction::build(ConstructionSpec::builtin()).expect("bundled construction fixture is valid")
    }

    pub fn build(spec: ConstructionSpec) -> Result<Construction> {
        let p = spec.characteristic;
        let ring = Ring::new(&spec.variables, p)?;
        if ring.nvars() != 4 {
            return Err(Error::Fixture(format!(
                "expected 4 homogeneous variables, got {}",
                ring.nvars()
            )));
        }
        let derivation = Derivation::parse(&ring, &spec.derivation)?;

        let mut invariants = Vec::new();
        for name in INVARIANT_SYMBOLS {
            let text = spec
                .invariants
                .get(name)
                .ok_or_else(|| Error::Fixture(format!("missing invariant `{name}`")))?;
            invariants.push((name.to_string(), Polynomial::parse(&ring, text)?));
        }
        if spec.invariants.len() != INVARIANT_SYMBOLS.len() {
            return Err(Error::Fixture("only invariants F and G are supported".into()));
        }

        let mut charts = Vec::new();
        for c in &spec.charts {
            let chart = Chart::new(&ring, c.index, &c.names)?;
            let displayed = Derivation::parse(chart.affine_ring(), &c.derivation)?;
            charts.push(ChartData { chart, displayed });
        }

        // numerators are written over x0..x3 and the invariant symbols
        let mut numerator_names: Vec<String> = spec.variables.clone();
        numerator_names.extend(INVARIANT_SYMBOLS.iter().map(|s| s.to_string()));
        let numerator_ring = Ring::new(&numerator_names, p)?;
        let mut images: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::variable(&ring, i)).collect();
        images.extend(invariants.iter().map(|(_, f)| f.clone()));

        let mut table = Vec::new();
        for row in &spec.table {
            let chart = find_chart(&charts, row.chart)?;
            let numerator = Polynomial::parse(&numerator_ring, &row.numerator)?.substitute(&images)?;
            let affine = Polynomial::parse(chart.chart.affine_ring(), &row.affine)?;
            table.push(TableRow {
                name: row.name.clone(),
                chart: row.chart,
                numerator_text: row.numerator.clone(),
                divisor_power: row.divisor_power,
                numerator,
                affine,
            });
        }

        let pres_ring = Ring::new(&PRESENTATION_VARIABLES, p)?;
        let mut presentations = Vec::new();
        for pr in &spec.presentations {
            find_chart(&charts, pr.chart)?;
            if pr.elements.len() != 2 {
                return Err(Error::Fixture(format!(
                    "presentation {} needs exactly two elements",
                    pr.name
                )));
            }
            for e in &pr.elements {
                let row = table
                    .iter()
                    .find(|r| &r.name == e)
                    .ok_or_else(|| Error::Fixture(format!("unknown table element `{e}`")))?;
                if row.chart != pr.chart {
                    return Err(Error::Fixture(format!(
                        "element `{e}` lives on chart {}, not {}",
                        row.chart, pr.chart
                    )));
                }
            }
            let parse_all = |items: &[String]| -> Result<Vec<Polynomial>> {
                items.iter().map(|s| Polynomial::parse(&pres_ring, s)).collect()
            };
            presentations.push(Presentation {
                name: pr.name.clone(),
                chart: pr.chart,
                elements: pr.elements.clone(),
                ring: pres_ring.clone(),
                complete_intersection: parse_all(&pr.complete_intersection)?,
                locus: parse_all(&pr.locus)?,
            });
        }

        Ok(Construction {
            spec,
            ring,
            derivation,
            invariants,
            charts,
            table,
            presentations,
        })
    }

    pub fn chart(&self, index: usize) -> Result<&ChartData> {
        find_chart(&self.charts, index)
    }

    pub fn invariant(&self, name: &str) -> Option<&Polynomial> {
        self.invariants.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn row(&self, name: &str) -> Option<&TableRow> {
        self.table.iter().find(|r| r.name == name)
    }

    pub fn presentation(&self, name: &str) -> Option<&Presentation> {
        self.presentations.iter().find(|p| p.name == name)
    }
}

fn find_chart(charts: &[ChartData], index: usize) -> Result<&ChartData> {
    charts
        .iter()
        .find(|c| c.chart.index() == index)
        .ok_or_else(|| Error::Fixture(format!("no chart with index {index}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HodgeTableSpec {
    pub rows: [[i64; 3]; 3],
    pub hdr: Vec<i64>,
    pub degenerates: bool,
}

impl HodgeTableSpec {
    pub fn grid(&self) -> Grid {
        grid_from_display(&self.rows)
    }

    pub fn hdr_map(&self) -> BTreeMap<u32, i64> {
        self.hdr.iter().enumerate().map(|(n, &d)| (n as u32, d)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HodgeTables {
    pub singular: HodgeTableSpec,
    pub supersingular: HodgeTableSpec,
}

impl HodgeTables {
    pub fn from_toml(text: &str) -> Result<HodgeTables> {
        toml::from_str(text).map_err(|e| Error::Fixture(e.to_string()))
    }

    pub fn builtin() -> HodgeTables {
        HodgeTables::from_toml(HODGE_TABLES_TOML).expect("bundled Hodge tables parse")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_fixture_builds() {
        let c = Construction::builtin();
        assert_eq!(c.charts.len(), 3);
        assert_eq!(c.table.len(), 6);
        assert_eq!(c.presentations.len(), 3);
        let a = c.row("a").unwrap().homogeneous().unwrap();
        assert_eq!(
            a,
            Polynomial::parse(&c.ring, "x1^2*x3^3 + 4*x1*x2^2*x3^2 + 4*x2^4*x3").unwrap()
        );
    }

    #[test]
    fn unknown_element_is_rejected() {
        let mut spec = ConstructionSpec::builtin();
        spec.presentations[0].elements[0] = "q".into();
        assert!(matches!(Construction::build(spec), Err(Error::Fixture(_))));
    }

    #[test]
    fn tables_load() {
        let t = HodgeTables::builtin();
        assert_eq!(t.singular.grid()[1][1], 9);
        assert_eq!(t.supersingular.hdr_map()[&2], 11);
    }
}
