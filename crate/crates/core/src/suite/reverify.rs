//! Independent confirmation of passing results.
//!
//! Nothing here runs a Gröbner basis computation. A witness is first checked
//! on its own terms (cofactor expansions, substitutions, evaluations); then it
//! is tied back to the suite inputs, either by comparing the objects it names
//! with the construction or, for checks that involve no search at all, by
//! recomputing the witness.

use crate::error::Result;
use crate::groebner::{jacobian_minors, IdealBasis, Verdict};
use crate::poly::{Polynomial, RingRef};

use super::checks::{all_equal, first_nonzero_minor, fixed_point, frobenius_relations, quintic_numbers, FIXED_POINT};
use super::witness::*;
use super::{CheckId, CheckResult, CheckStatus, Suite};

impl Suite {
    /// Whether a passing result is confirmed by its witness. Non-passing
    /// results are never confirmed.
    pub fn reverify(&self, result: &CheckResult) -> Result<bool> {
        if result.status != CheckStatus::Pass {
            return Ok(false);
        }
        let id: CheckId = result.id.parse()?;
        if !self.witness_holds(&result.witness) {
            return Ok(false);
        }
        if id.uses_groebner() {
            Ok(self.witness_matches_inputs(id, &result.witness).unwrap_or(false))
        } else {
            Ok(self.evaluate(id)?.1 == result.witness)
        }
    }

    /// Checks a witness in isolation. Malformed witnesses do not hold.
    pub fn witness_holds(&self, witness: &Witness) -> bool {
        self.check_witness(witness).unwrap_or(false)
    }

    fn ring(&self, variables: &[String]) -> Result<RingRef> {
        ring_of(variables, self.construction.ring.characteristic() as u64)
    }

    fn check_witness(&self, witness: &Witness) -> Result<bool> {
        Ok(match witness {
            Witness::Vanishing { entries } => {
                for e in entries {
                    if !Polynomial::parse(&self.ring(&e.variables)?, &e.value)?.is_zero() {
                        return Ok(false);
                    }
                }
                true
            }
            Witness::Equalities { entries } => {
                for e in entries {
                    let ring = self.ring(&e.variables)?;
                    if Polynomial::parse(&ring, &e.computed)? != Polynomial::parse(&ring, &e.expected)? {
                        return Ok(false);
                    }
                }
                true
            }
            Witness::FixedLocus {
                variables,
                minors,
                values_at_point,
                point,
                certificates,
            } => {
                let ring = self.ring(variables)?;
                let minors = parse_all(&ring, minors)?;
                let pt: Vec<_> = point.iter().map(|&v| ring.element(v as i64)).collect();
                let values = minors
                    .iter()
                    .map(|m| m.evaluate(&pt).map(|v| v.value()))
                    .collect::<Result<Vec<_>>>()?;
                if &values != values_at_point || values.iter().any(|&v| v != 0) {
                    return Ok(false);
                }
                for cert in certificates {
                    let Some(k) = cert.exponent else { return Ok(false) };
                    let element = Polynomial::parse(&ring, &cert.element)?;
                    let cofactors = parse_all(&ring, &cert.cofactors)?;
                    if !cert.in_radical || combine(&ring, &cofactors, &minors) != Some(element.pow(k)) {
                        return Ok(false);
                    }
                }
                true
            }
            Witness::Elimination {
                variables,
                chart_variables,
                images,
                eliminated,
                expected,
                expected_in_eliminated,
                eliminated_in_expected,
                ..
            } => {
                let ring = self.ring(variables)?;
                let chart = self.ring(chart_variables)?;
                let images = parse_all(&chart, images)?;
                let eliminated = parse_all(&ring, eliminated)?;
                let expected = parse_all(&ring, expected)?;
                contained(&ring, &expected, expected_in_eliminated, &eliminated)?
                    && contained(&ring, &eliminated, eliminated_in_expected, &expected)?
                    && vanish_under(&eliminated, &images)?
                    && vanish_under(&expected, &images)?
            }
            Witness::FrobeniusPresentation {
                variables,
                chart_variables,
                images,
                relations,
                expected,
                substituted,
                jacobian_minor,
                ..
            } => {
                let ring = self.ring(variables)?;
                let chart = self.ring(chart_variables)?;
                let images = parse_all(&chart, images)?;
                if images.len() != ring.nvars() || chart.nvars() + 2 != ring.nvars() {
                    return Ok(false);
                }
                let rebuilt = frobenius_relations(&ring, &images, ring.characteristic())?;
                let relations = parse_all(&ring, relations)?;
                let minor = first_nonzero_minor(&images[chart.nvars()], &images[chart.nvars() + 1]);
                let resubstituted = relations
                    .iter()
                    .map(|r| r.substitute(&images))
                    .collect::<Result<Vec<_>>>()?;
                rebuilt == relations
                    && parse_all(&ring, expected)? == relations
                    && resubstituted.iter().all(Polynomial::is_zero)
                    && texts(&resubstituted) == *substituted
                    && !minor.is_zero()
                    && minor.to_string() == *jacobian_minor
            }
            Witness::Smoothness {
                variables,
                ideal,
                codimension,
                locus,
                verdict,
                unit,
                presentation,
                ..
            } => {
                let ring = self.ring(variables)?;
                let ideal = IdealBasis::new(&ring, parse_all(&ring, ideal)?)?;
                let locus = IdealBasis::new(&ring, parse_all(&ring, locus)?)?;
                let minors = IdealBasis::new(&ring, jacobian_minors(&ideal, *codimension))?;
                let mut generators = ideal.sum(&minors)?;
                match verdict {
                    Verdict::Smooth => {}
                    Verdict::SmoothOnLocus => generators = generators.sum(&locus)?,
                    Verdict::Inconclusive => return Ok(false),
                }
                let Some(unit) = unit else { return Ok(false) };
                let listed = parse_all(&ring, &unit.generators)?;
                let cofactors = parse_all(&ring, &unit.cofactors)?;
                let sum = combine(&ring, &cofactors, &listed);
                listed == generators.generators()
                    && sum.is_some_and(|s| s.is_one())
                    && presentation.as_deref().map_or(Ok(true), |w| self.check_witness(w))?
            }
            Witness::Kernel {
                variables,
                dimension,
                basis,
                members,
                ..
            } => {
                let ring = self.ring(variables)?;
                let basis = parse_all(&ring, basis)?;
                let pivots: std::collections::HashSet<_> =
                    basis.iter().filter_map(Polynomial::leading_monomial).collect();
                if basis.len() != *dimension || pivots.len() != basis.len() {
                    return Ok(false);
                }
                for m in members {
                    let Some(coords) = &m.coordinates else { return Ok(false) };
                    let scalars: Vec<Polynomial> =
                        coords.iter().map(|&c| Polynomial::constant(&ring, c as i64)).collect();
                    if combine(&ring, &scalars, &basis) != Some(Polynomial::parse(&ring, &m.polynomial)?) {
                        return Ok(false);
                    }
                }
                true
            }
            Witness::Quintic {
                variables,
                polynomial,
                derivative,
                value_at_fixed_point,
                invariants,
                ..
            } => {
                let ring = self.ring(variables)?;
                let q = Polynomial::parse(&ring, polynomial)?;
                let value = q.evaluate(&fixed_point(&ring)?)?.value();
                let (numbers, _) = quintic_numbers(q.degree().unwrap_or(0) as i64, ring.characteristic() as u64)?;
                q.is_homogeneous()
                    && Polynomial::parse(&ring, derivative)?.is_zero()
                    && value != 0
                    && value == *value_at_fixed_point
                    && all_equal(invariants)
                    && numbers == *invariants
            }
            Witness::Numbers { entries } => all_equal(entries),
            Witness::Error { .. } => false,
        })
    }

    /// Ties the witness of a search-based check to the construction.
    fn witness_matches_inputs(&self, id: CheckId, witness: &Witness) -> Result<bool> {
        let c = &self.construction;
        Ok(match (id, witness) {
            (
                CheckId::C2,
                Witness::FixedLocus {
                    minors,
                    point,
                    certificates,
                    ..
                },
            ) => {
                let elements: Vec<String> = (0..c.ring.nvars())
                    .filter(|&i| FIXED_POINT[i] == 0)
                    .map(|i| c.ring.name(i).to_string())
                    .collect();
                let listed: Vec<String> = certificates.iter().map(|w| w.element.clone()).collect();
                *minors == texts(c.derivation.fixed_locus_ideal().generators())
                    && point.iter().map(|&v| v as i64).eq(FIXED_POINT)
                    && listed == elements
            }
            (CheckId::C7, Witness::Elimination { images, expected, .. }) => {
                let pres = self.presentation("B")?;
                *images == texts(&self.presentation_images(pres)?) && *expected == texts(&pres.complete_intersection)
            }
            (
                CheckId::C8,
                Witness::Smoothness {
                    variables,
                    ideal,
                    locus,
                    verdict,
                    ..
                },
            ) => {
                let pres = self.presentation("B")?;
                let ring = self.ring(variables)?;
                let ideal = parse_all(&ring, ideal)?;
                let images = self.presentation_images(pres)?;
                *verdict == Verdict::Smooth
                    && locus.is_empty()
                    && ring.names() == pres.ring.names()
                    && vanish_under(&ideal, &images)?
            }
            (
                CheckId::C9 | CheckId::C10,
                Witness::Smoothness {
                    ideal,
                    locus,
                    presentation: Some(inner),
                    ..
                },
            ) => {
                let pres = self.presentation(if id == CheckId::C9 { "Ct" } else { "Ch" })?;
                let Witness::FrobeniusPresentation { images, expected, .. } = inner.as_ref() else {
                    return Ok(false);
                };
                let ci = texts(&pres.complete_intersection);
                *ideal == ci
                    && *expected == ci
                    && *locus == texts(&pres.locus)
                    && *images == texts(&self.presentation_images(pres)?)
            }
            _ => false,
        })
    }
}

/// Every `elements[i]` equals the listed combination of `generators`.
fn contained(
    ring: &RingRef,
    elements: &[Polynomial],
    listed: &[Containment],
    generators: &[Polynomial],
) -> Result<bool> {
    if elements.len() != listed.len() {
        return Ok(false);
    }
    for (e, m) in elements.iter().zip(listed) {
        let Some(cof) = &m.cofactors else { return Ok(false) };
        if Polynomial::parse(ring, &m.element)? != *e
            || combine(ring, &parse_all(ring, cof)?, generators) != Some(e.clone())
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn vanish_under(polys: &[Polynomial], images: &[Polynomial]) -> Result<bool> {
    for f in polys {
        if !f.substitute(images)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
