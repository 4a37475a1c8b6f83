use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Ring};

use super::{buchberger, buchberger_lifted, Budget, IdealBasis};

/// Outcome of an ideal-membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// `f = Σ cofactors[k] * generators[k]`, in the caller's ring, when a
    /// witness was requested and `f` is a member.
    pub cofactors: Option<Vec<Polynomial>>,
}

/// Tests `f ∈ I` under `order`. With `witness`, a lifted basis is computed
/// and members come with cofactors over the generators of `ideal`.
pub fn ideal_member(
    f: &Polynomial,
    ideal: &IdealBasis,
    order: MonomialOrder,
    budget: Budget,
    witness: bool,
) -> Result<Membership> {
    Ring::check_same(f.ring(), ideal.ring())?;
    if !witness {
        let gb = buchberger(ideal, order, budget)?;
        return Ok(Membership {
            member: gb.contains(f)?,
            cofactors: None,
        });
    }
    let gb = buchberger_lifted(ideal, order, budget)?;
    let cofactors = gb
        .express(f)?
        .map(|cof| cof.iter().map(|c| c.reorder(f.ring())).collect::<Result<Vec<_>>>())
        .transpose()?;
    Ok(Membership {
        member: cofactors.is_some(),
        cofactors,
    })
}

/// Rabinowitsch test: `f ∈ √I` iff `1 ∈ I + (1 − t·f)` in one more variable.
pub fn radical_member(f: &Polynomial, ideal: &IdealBasis, budget: Budget) -> Result<bool> {
    Ring::check_same(f.ring(), ideal.ring())?;
    if f.is_zero() {
        return Ok(true);
    }
    let (ring, t) = ideal.ring().with_fresh_variable("rabinowitsch_t")?;
    let n = ideal.ring().nvars();
    let mapping: Vec<usize> = (0..n).collect();
    let mut gens = ideal
        .generators()
        .iter()
        .map(|g| g.rename_into(&ring, &mapping))
        .collect::<Result<Vec<_>>>()?;
    let lifted_f = f.rename_into(&ring, &mapping)?;
    let tf = &Polynomial::variable(&ring, t) * &lifted_f;
    gens.push(&Polynomial::one(&ring) - &tf);
    let gb = buchberger(&IdealBasis::new(&ring, gens)?, MonomialOrder::DegRevLex, budget)?;
    Ok(gb.is_unit_ideal())
}

/// A certificate `f^exponent = Σ cofactors[k] * generators[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerWitness {
    pub exponent: u32,
    pub cofactors: Vec<Polynomial>,
}

/// Finds the least `k ≤ max_exponent` with `f^k ∈ I` and returns cofactors
/// for it. Re-checking the witness needs only expansion.
pub fn radical_power_witness(
    f: &Polynomial,
    ideal: &IdealBasis,
    max_exponent: u32,
    budget: Budget,
) -> Result<Option<PowerWitness>> {
    Ring::check_same(f.ring(), ideal.ring())?;
    let gb = buchberger_lifted(ideal, MonomialOrder::DegRevLex, budget)?;
    let mut power = Polynomial::one(f.ring());
    for k in 1..=max_exponent {
        power = &power * f;
        if let Some(cof) = gb.express(&power)? {
            let cofactors = cof.iter().map(|c| c.reorder(f.ring())).collect::<Result<Vec<_>>>()?;
            return Ok(Some(PowerWitness { exponent: k, cofactors }));
        }
    }
    Ok(None)
}

/// `I ∩ F_p[keep]`, computed with a block elimination order. The result
/// lives in a degrevlex ring over the kept variables (in their original
/// relative order) and is a reduced Gröbner basis there.
pub fn eliminate<S: AsRef<str>>(ideal: &IdealBasis, keep: &[S], budget: Budget) -> Result<IdealBasis> {
    let ring = ideal.ring();
    let mut keep_idx = Vec::with_capacity(keep.len());
    for name in keep {
        let idx = ring
            .index_of(name.as_ref())
            .ok_or_else(|| Error::BadVariable(name.as_ref().to_string()))?;
        if !keep_idx.contains(&idx) {
            keep_idx.push(idx);
        }
    }
    keep_idx.sort_unstable();
    let elim_idx: Vec<usize> = (0..ring.nvars()).filter(|i| !keep_idx.contains(i)).collect();

    // eliminated variables first, then kept ones
    let mut names: Vec<&str> = elim_idx.iter().map(|&i| ring.name(i)).collect();
    names.extend(keep_idx.iter().map(|&i| ring.name(i)));
    let block = Ring::with_order_new(
        &names,
        ring.characteristic() as u64,
        MonomialOrder::Block(elim_idx.len()),
    )?;
    let mut mapping = vec![0; ring.nvars()];
    for (pos, &i) in elim_idx.iter().chain(&keep_idx).enumerate() {
        mapping[i] = pos;
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.rename_into(&block, &mapping))
        .collect::<Result<Vec<_>>>()?;
    let gb = buchberger(
        &IdealBasis::new(&block, gens)?,
        MonomialOrder::Block(elim_idx.len()),
        budget,
    )?;

    let keep_names: Vec<&str> = keep_idx.iter().map(|&i| ring.name(i)).collect();
    let target = Ring::new(&keep_names, ring.characteristic() as u64)?;
    let e = elim_idx.len();
    let back: Vec<usize> = (0..block.nvars()).map(|j| j.saturating_sub(e)).collect();
    let mut out = Vec::new();
    for g in gb.polynomials() {
        if g.support().iter().all(|&j| j >= e) {
            out.push(g.rename_into(&target, &back)?);
        }
    }
    IdealBasis::new(&target, out)
}

/// Kernel of the map `F_p[source_names] → R`, `source_i ↦ images[i]`,
/// computed by eliminating the variables of `R` from the graph ideal
/// `(source_i − images[i])`.
pub fn ring_map_kernel<S: AsRef<str>>(source_names: &[S], images: &[Polynomial], budget: Budget) -> Result<IdealBasis> {
    if source_names.len() != images.len() {
        return Err(Error::InvalidArgument(format!(
            "{} source variables but {} images",
            source_names.len(),
            images.len()
        )));
    }
    let Some(first) = images.first() else {
        return Err(Error::InvalidArgument("ring map without variables".into()));
    };
    let target = first.ring().clone();
    for img in images {
        Ring::check_same(&target, img.ring())?;
    }
    let mut names: Vec<String> = target.names().to_vec();
    for s in source_names {
        if target.index_of(s.as_ref()).is_some() {
            return Err(Error::BadVariable(s.as_ref().to_string()));
        }
        names.push(s.as_ref().to_string());
    }
    let graph_ring = Ring::new(&names, target.characteristic() as u64)?;
    let n = target.nvars();
    let embed: Vec<usize> = (0..n).collect();
    let mut gens = Vec::with_capacity(images.len());
    for (k, img) in images.iter().enumerate() {
        let lifted = img.rename_into(&graph_ring, &embed)?;
        gens.push(&Polynomial::variable(&graph_ring, n + k) - &lifted);
    }
    let graph = IdealBasis::new(&graph_ring, gens)?;
    let keep: Vec<&str> = source_names.iter().map(|s| s.as_ref()).collect();
    eliminate(&graph, &keep, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RingRef;

    fn ring() -> RingRef {
        Ring::new(&["x0", "x1", "x2", "x3"], 5).unwrap()
    }

    fn ideal(r: &RingRef, gens: &[&str]) -> IdealBasis {
        IdealBasis::new(r, gens.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect()).unwrap()
    }

    fn minors(r: &RingRef) -> IdealBasis {
        ideal(
            r,
            &[
                "x1^2 - x0*x2",
                "x1*x2 - x0*x3",
                "x1*x3",
                "x2^2 - x1*x3",
                "x2*x3",
                "x3^2",
            ],
        )
    }

    fn expand(cof: &[Polynomial], gens: &[Polynomial]) -> Polynomial {
        let mut sum = Polynomial::zero(gens[0].ring());
        for (c, g) in cof.iter().zip(gens) {
            sum = &sum + &(c * g);
        }
        sum
    }

    #[test]
    fn membership_examples() {
        let r = ring();
        let o = MonomialOrder::DegRevLex;
        let b = Budget::default();
        let i = minors(&r);
        let x3sq = Polynomial::parse(&r, "x3^2").unwrap();
        let m = ideal_member(&x3sq, &i, o, b, true).unwrap();
        assert!(m.member);
        assert_eq!(expand(m.cofactors.as_ref().unwrap(), i.generators()), x3sq);
        let x0 = Polynomial::parse(&r, "x0").unwrap();
        assert!(
            !ideal_member(&x0, &ideal(&r, &["x1", "x2", "x3"]), o, b, true)
                .unwrap()
                .member
        );
    }

    #[test]
    fn proper_complete_intersection() {
        let r = Ring::new(&["u", "v", "w", "s", "t"], 5).unwrap();
        let ci = ideal(&r, &["s^5 - v - 2*w^2", "t^5 + u - v*w - 3*w^3"]);
        let one = Polynomial::one(&r);
        for o in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            assert!(!ideal_member(&one, &ci, o, Budget::default(), false).unwrap().member);
        }
    }

    #[test]
    fn radical_examples() {
        let r = ring();
        let b = Budget::default();
        let i = minors(&r);
        for v in ["x1", "x2", "x3"] {
            assert!(radical_member(&Polynomial::parse(&r, v).unwrap(), &i, b).unwrap());
        }
        let x0 = Polynomial::parse(&r, "x0").unwrap();
        assert!(!radical_member(&x0, &i, b).unwrap());
        assert!(!radical_member(&x0, &ideal(&r, &["x1", "x2", "x3"]), b).unwrap());
        let f = Polynomial::parse(&r, "x1*x3").unwrap();
        assert!(radical_member(&f, &IdealBasis::new(&r, vec![&f * &f]).unwrap(), b).unwrap());
    }

    #[test]
    fn power_witness_for_x2() {
        let r = ring();
        let i = minors(&r);
        let x2 = Polynomial::parse(&r, "x2").unwrap();
        let w = radical_power_witness(&x2, &i, 8, Budget::default()).unwrap().unwrap();
        // x2^2 = (x2^2 - x1*x3) + x1*x3
        assert_eq!(w.exponent, 2);
        assert_eq!(expand(&w.cofactors, i.generators()), x2.pow(w.exponent));
    }

    #[test]
    fn parabola_elimination() {
        let r = Ring::new(&["t", "x", "y"], 5).unwrap();
        let i = ideal(&r, &["x - t", "y - t^2"]);
        let e = eliminate(&i, &["x", "y"], Budget::default()).unwrap();
        assert_eq!(e.len(), 1);
        let target = e.ring().clone();
        let want = Polynomial::parse(&target, "y - x^2").unwrap().make_monic();
        assert_eq!(e.generators()[0].make_monic(), want);
    }

    #[test]
    fn kernel_of_injective_map_is_zero() {
        let r = Ring::new(&["x"], 5).unwrap();
        let k = ring_map_kernel(&["u"], &[Polynomial::parse(&r, "x").unwrap()], Budget::default()).unwrap();
        assert!(k.is_zero());
        assert_eq!(k.ring().names(), &["u"]);
    }
}
