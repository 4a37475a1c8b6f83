//! Evidence attached to check results.
//!
//! Polynomials are stored as text in the core grammar together with the
//! variable names of their ring, so a report can be re-checked without the
//! process that produced it.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;
use crate::groebner::Verdict;
use crate::poly::{Polynomial, Ring, RingRef};

/// A labelled polynomial over the named variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyEntry {
    pub label: String,
    pub variables: Vec<String>,
    pub value: String,
}

/// A computed polynomial next to the one it must equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub label: String,
    pub variables: Vec<String>,
    pub computed: String,
    pub expected: String,
}

/// `element^exponent = Σ cofactors[k] * generators[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerCertificate {
    pub element: String,
    pub in_radical: bool,
    pub exponent: Option<u32>,
    pub cofactors: Vec<String>,
}

/// `element = Σ cofactors[k] * generators[k]` for a generator list fixed by
/// the surrounding witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Containment {
    pub element: String,
    pub cofactors: Option<Vec<String>>,
}

/// `Σ cofactors[k] * generators[k] = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitWitness {
    pub generators: Vec<String>,
    pub cofactors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelMember {
    pub label: String,
    pub polynomial: String,
    /// Coefficients on the kernel basis, in basis order.
    pub coordinates: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberEntry {
    pub name: String,
    pub computed: Value,
    pub expected: Value,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Every `value` is claimed to be the zero polynomial (or is the nonzero
    /// counterexample when the check failed).
    Vanishing {
        entries: Vec<PolyEntry>,
    },
    Equalities {
        entries: Vec<Comparison>,
    },
    FixedLocus {
        variables: Vec<String>,
        minors: Vec<String>,
        /// Values of the minors at the claimed fixed point.
        values_at_point: Vec<u32>,
        point: Vec<u32>,
        certificates: Vec<PowerCertificate>,
    },
    /// Kernel of a ring map computed by elimination, compared with an
    /// expected generating set in both directions.
    Elimination {
        variables: Vec<String>,
        chart_variables: Vec<String>,
        /// Images of `variables` in the chart ring.
        images: Vec<String>,
        eliminated: Vec<String>,
        expected: Vec<String>,
        /// Each expected generator over `eliminated`.
        expected_in_eliminated: Vec<Containment>,
        /// Each eliminated generator over `expected`.
        eliminated_in_expected: Vec<Containment>,
        background: String,
    },
    /// Kernel of `u_i ↦ x_i^p, s_k ↦ e_k` certified without a Gröbner
    /// search: the relations `s_k^p − e_k^(p)(u)` lie in the kernel, the
    /// quotient by them is free over `k[u]` on `s^a t^b` (`a, b < p`), and a
    /// nonzero Jacobian minor of the `e_k` makes these monomials linearly
    /// independent over the `p`-th powers, so nothing else is in the kernel.
    FrobeniusPresentation {
        variables: Vec<String>,
        chart_variables: Vec<String>,
        images: Vec<String>,
        relations: Vec<String>,
        expected: Vec<String>,
        /// The relations after substituting the images.
        substituted: Vec<String>,
        jacobian_minor: String,
        background: String,
    },
    Smoothness {
        variables: Vec<String>,
        ideal: Vec<String>,
        codimension: usize,
        locus: Vec<String>,
        verdict: Verdict,
        unit: Option<UnitWitness>,
        /// Reduced basis of the obstruction ideal when no unit was found.
        basis: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        presentation: Option<Box<Witness>>,
    },
    Kernel {
        variables: Vec<String>,
        degree: u32,
        dimension: usize,
        basis: Vec<String>,
        members: Vec<KernelMember>,
    },
    Quintic {
        variables: Vec<String>,
        seed: u64,
        polynomial: String,
        derivative: String,
        value_at_fixed_point: u32,
        invariants: Vec<NumberEntry>,
    },
    Numbers {
        entries: Vec<NumberEntry>,
    },
    Error {
        message: String,
    },
}

pub(crate) fn names(ring: &RingRef) -> Vec<String> {
    ring.names().to_vec()
}

pub(crate) fn texts(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(|f| f.to_string()).collect()
}

pub(crate) fn ring_of(variables: &[String], p: u64) -> Result<RingRef> {
    Ring::new(variables, p)
}

pub(crate) fn parse_all(ring: &RingRef, items: &[String]) -> Result<Vec<Polynomial>> {
    items.iter().map(|s| Polynomial::parse(ring, s)).collect()
}

/// `Σ cofactors[k] * generators[k]`, by expansion only.
pub(crate) fn combine(ring: &RingRef, cofactors: &[Polynomial], generators: &[Polynomial]) -> Option<Polynomial> {
    if cofactors.len() != generators.len() {
        return None;
    }
    let mut acc = Polynomial::zero(ring);
    for (c, g) in cofactors.iter().zip(generators) {
        acc = acc.checked_add(&c.checked_mul(g).ok()?).ok()?;
    }
    Some(acc)
}
