//! Jacobian-criterion smoothness certificates.
//!
//! For an ideal `I` of codimension `c`, let `M` be the ideal of `c × c`
//! minors of the Jacobian matrix of the generators of `I`. Then `1 ∈ I + M`
//! certifies that `V(I)` is smooth, and `1 ∈ I + M + L` certifies smoothness
//! at every point of `V(I) ∩ V(L)`. Partial derivatives are formal, so in
//! characteristic `p` the `p`-th powers of variables differentiate to zero.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Ring};

use super::{buchberger_lifted, Budget, IdealBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Smooth,
    SmoothOnLocus,
    Inconclusive,
}

/// `Σ cofactors[k] * generators[k] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCombination {
    pub generators: Vec<Polynomial>,
    pub cofactors: Vec<Polynomial>,
}

impl UnitCombination {
    /// Expands the combination. Only multiplication and addition are used.
    pub fn expand(&self) -> Option<Polynomial> {
        let first = self.generators.first()?;
        let mut sum = Polynomial::zero(first.ring());
        for (c, g) in self.cofactors.iter().zip(&self.generators) {
            sum = sum.checked_add(&c.checked_mul(g).ok()?).ok()?;
        }
        Some(sum)
    }

    pub fn verify(&self) -> bool {
        self.generators.len() == self.cofactors.len() && self.expand().is_some_and(|s| s.is_one())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessCertificate {
    pub verdict: Verdict,
    /// Set for `Smooth` and `SmoothOnLocus`.
    pub unit: Option<UnitCombination>,
    /// Reduced Gröbner basis of `I + M (+ L)` for `Inconclusive`.
    pub basis: Vec<Polynomial>,
    pub minors: usize,
}

fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    match m.len() {
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        n => {
            let mut acc = Polynomial::zero(m[0][0].ring());
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != col)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &determinant(&sub);
                acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// All nonzero `size × size` minors of the Jacobian of the generators.
pub fn jacobian_minors(ideal: &IdealBasis, size: usize) -> Vec<Polynomial> {
    let ring = ideal.ring();
    let jac: Vec<Vec<Polynomial>> = ideal
        .generators()
        .iter()
        .map(|g| (0..ring.nvars()).map(|v| g.derivative(v)).collect())
        .collect();
    if size == 0 {
        return vec![Polynomial::one(ring)];
    }
    let mut minors = Vec::new();
    for rows in combinations(jac.len(), size) {
        for cols in combinations(ring.nvars(), size) {
            let sub: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| jac[r][c].clone()).collect())
                .collect();
            let d = determinant(&sub);
            if !d.is_zero() && !minors.contains(&d) {
                minors.push(d);
            }
        }
    }
    minors
}

fn unit_witness(ideal: &IdealBasis, budget: Budget) -> Result<(Option<UnitCombination>, Vec<Polynomial>)> {
    let gb = buchberger_lifted(ideal, MonomialOrder::DegRevLex, budget)?;
    let one = Polynomial::one(ideal.ring());
    match gb.express(&one)? {
        Some(cof) => {
            let cofactors = cof
                .iter()
                .map(|c| c.reorder(ideal.ring()))
                .collect::<Result<Vec<_>>>()?;
            Ok((
                Some(UnitCombination {
                    generators: ideal.generators().to_vec(),
                    cofactors,
                }),
                Vec::new(),
            ))
        }
        None => Ok((None, gb.polynomials().to_vec())),
    }
}

/// Jacobian-criterion certificate for `V(I)`, assumed equidimensional of
/// codimension `codim`.
pub fn jacobian_smoothness(
    ideal: &IdealBasis,
    codim: usize,
    locus: Option<&IdealBasis>,
    budget: Budget,
) -> Result<SmoothnessCertificate> {
    if let Some(l) = locus {
        Ring::check_same(ideal.ring(), l.ring())?;
    }
    if codim > ideal.ring().nvars() {
        return Err(Error::InvalidArgument(format!(
            "codimension {codim} exceeds {} variables",
            ideal.ring().nvars()
        )));
    }
    let minors = jacobian_minors(ideal, codim);
    let n_minors = minors.len();
    let with_minors = ideal.sum(&IdealBasis::new(ideal.ring(), minors)?)?;

    let (unit, basis) = unit_witness(&with_minors, budget)?;
    if let Some(unit) = unit {
        return Ok(SmoothnessCertificate {
            verdict: Verdict::Smooth,
            unit: Some(unit),
            basis: Vec::new(),
            minors: n_minors,
        });
    }
    let Some(locus) = locus else {
        return Ok(SmoothnessCertificate {
            verdict: Verdict::Inconclusive,
            unit: None,
            basis,
            minors: n_minors,
        });
    };
    let restricted = with_minors.sum(locus)?;
    let (unit, basis) = unit_witness(&restricted, budget)?;
    Ok(match unit {
        Some(unit) => SmoothnessCertificate {
            verdict: Verdict::SmoothOnLocus,
            unit: Some(unit),
            basis: Vec::new(),
            minors: n_minors,
        },
        None => SmoothnessCertificate {
            verdict: Verdict::Inconclusive,
            unit: None,
            basis,
            minors: n_minors,
        },
    })
}
