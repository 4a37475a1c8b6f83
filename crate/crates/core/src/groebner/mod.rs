//! Gröbner bases over `F_p` and the ideal-theoretic operations built on them.

mod buchberger;
mod ideal;
mod smoothness;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Ring, RingRef};

pub use buchberger::{buchberger, buchberger_lifted, reduce, s_polynomial};
pub use ideal::{
    eliminate, ideal_member, radical_member, radical_power_witness, ring_map_kernel, Membership, PowerWitness,
};
pub use smoothness::{jacobian_minors, jacobian_smoothness, SmoothnessCertificate, UnitCombination, Verdict};

/// Cap on the number of S-pairs processed by one Buchberger run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_pairs: usize,
}

impl Budget {
    pub const DEFAULT_MAX_PAIRS: usize = 100_000;

    pub fn new(max_pairs: usize) -> Result<Budget> {
        if max_pairs == 0 {
            return Err(Error::InvalidArgument("budget must be at least 1".into()));
        }
        Ok(Budget { max_pairs })
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: Budget::DEFAULT_MAX_PAIRS,
        }
    }
}

/// A list of generators of an ideal. Zero generators are dropped.
#[derive(Clone, PartialEq, Eq)]
pub struct IdealBasis {
    ring: RingRef,
    generators: Vec<Polynomial>,
}

impl IdealBasis {
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Result<IdealBasis> {
        for g in &generators {
            Ring::check_same(ring, g.ring())?;
        }
        Ok(IdealBasis {
            ring: Arc::clone(ring),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &RingRef) -> IdealBasis {
        IdealBasis {
            ring: Arc::clone(ring),
            generators: Vec::new(),
        }
    }

    /// Parses one polynomial per nonblank line; `#` starts a comment line.
    pub fn parse(ring: &RingRef, text: &str) -> Result<IdealBasis> {
        let gens = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| Polynomial::parse(ring, l))
            .collect::<Result<Vec<_>>>()?;
        IdealBasis::new(ring, gens)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    // `is_zero` is the emptiness test
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The sum of two ideals over the same ring.
    pub fn sum(&self, other: &IdealBasis) -> Result<IdealBasis> {
        Ring::check_same(&self.ring, &other.ring)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        IdealBasis::new(&self.ring, gens)
    }

    /// The same generators in the ring carrying `order`.
    pub fn with_order(&self, order: MonomialOrder) -> IdealBasis {
        let ring = self.ring.with_order(order);
        IdealBasis {
            generators: self
                .generators
                .iter()
                .map(|g| g.reorder(&ring).expect("same variables"))
                .collect(),
            ring,
        }
    }
}

impl fmt::Display for IdealBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IdealBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "IdealBasis({})", gens.join(", "))
    }
}

/// A Gröbner basis together with the order it was computed for.
///
/// When produced by [`buchberger_lifted`] it also records, for every basis
/// element, cofactors expressing it in terms of the input generators.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    basis: IdealBasis,
    order: MonomialOrder,
    reduced: bool,
    input: IdealBasis,
    lift: Option<Vec<Vec<Polynomial>>>,
    pairs_processed: usize,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        self.basis.ring()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Basis elements sorted by increasing leading monomial.
    pub fn polynomials(&self) -> &[Polynomial] {
        self.basis.generators()
    }

    pub fn as_ideal(&self) -> &IdealBasis {
        &self.basis
    }

    /// The generators the basis was computed from.
    pub fn input(&self) -> &IdealBasis {
        &self.input
    }

    pub fn lift(&self) -> Option<&[Vec<Polynomial>]> {
        self.lift.as_deref()
    }

    pub fn pairs_processed(&self) -> usize {
        self.pairs_processed
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polynomials().len() == 1 && self.polynomials()[0].is_one()
    }

    /// Normal form of `f`. `f` may live in any ring with the same variables.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let g = f.reorder(self.ring())?;
        Ok(buchberger::normal_form_plain(&g, self.polynomials()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let gens = self.polynomials();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let s = s_polynomial(&gens[i], &gens[j]);
                if !buchberger::normal_form_plain(&s, gens).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.basis == other.basis
    }
}
