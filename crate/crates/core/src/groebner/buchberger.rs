//! Buchberger's algorithm with the Gebauer–Möller pair update.
//!
//! Pairs are selected by the normal strategy (smallest lcm degree, ties by
//! the monomial order on the lcm, then by index) for graded orders. For lex
//! and block orders the lcm degree says little about the work a pair causes,
//! so the sugar degree takes its place. Every basis element is kept
//! monic. Optionally each element carries cofactors over the input
//! generators so that membership answers can be certified by expansion.

use crate::error::{Error, Result};
use crate::field::inv_mod;
use crate::poly::{Monomial, MonomialOrder, Polynomial, RingRef};

use super::{Budget, GroebnerBasis, IdealBasis};

/// `lcm/lm(f) * f - lcm/lm(g) * g` for monic-normalised leading terms.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (Some((mf, cf)), Some((mg, cg))) = (f.leading_term(), g.leading_term()) else {
        return Polynomial::zero(f.ring());
    };
    let p = f.characteristic();
    let l = mf.lcm(&mg);
    let a = f.mul_term(&mf.quotient(&l).unwrap(), inv_mod(cf, p));
    a.sub_mul_term(inv_mod(cg, p), &mg.quotient(&l).unwrap(), g)
}

/// Fully reduces `f` modulo the list `divisors` (which need not be a
/// Gröbner basis). The result has no monomial divisible by a leading
/// monomial of a nonzero divisor.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Result<Polynomial> {
    let ring = f.ring().with_order(order);
    let g = f.reorder(&ring)?;
    let divs = divisors
        .iter()
        .filter(|d| !d.is_zero())
        .map(|d| d.reorder(&ring).map(|d| d.make_monic()))
        .collect::<Result<Vec<_>>>()?;
    normal_form_plain(&g, &divs).reorder(f.ring())
}

/// Plain normal form against monic divisors in the same ring.
pub(crate) fn normal_form_plain(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let elems: Vec<Element> = divisors
        .iter()
        .map(|d| Element {
            poly: d.make_monic(),
            cofactors: None,
        })
        .collect();
    let refs: Vec<&Element> = elems.iter().collect();
    reduce_element(
        Element {
            poly: f.clone(),
            cofactors: None,
        },
        &refs,
        None,
    )
    .poly
}

#[derive(Clone, Debug)]
pub(crate) struct Element {
    pub(crate) poly: Polynomial,
    /// `poly = Σ cofactors[k] * input[k]` when tracking.
    pub(crate) cofactors: Option<Vec<Polynomial>>,
}

impl Element {
    fn scale(&mut self, c: u32) {
        self.poly = self.poly.scale(c);
        if let Some(cof) = &mut self.cofactors {
            for q in cof.iter_mut() {
                *q = q.scale(c);
            }
        }
    }
}

/// Full reduction of `f` by monic elements. When `quotients` is given, the
/// multiplier of each divisor is accumulated there.
pub(crate) fn reduce_element(
    f: Element,
    divisors: &[&Element],
    mut quotients: Option<&mut Vec<Polynomial>>,
) -> Element {
    let ring = f.poly.ring().clone();
    let Element { poly, mut cofactors } = f;
    let mut pending = poly;
    let mut remainder: Vec<(Monomial, u32)> = Vec::new();
    let lms: Vec<Monomial> = divisors
        .iter()
        .map(|d| d.poly.leading_monomial().expect("nonzero divisor"))
        .collect();
    while let Some((m, c)) = pending.leading_term() {
        let hit = lms.iter().position(|lm| lm.divides(&m));
        match hit {
            Some(k) => {
                let q = lms[k].quotient(&m).unwrap();
                let g = divisors[k];
                pending = pending.sub_mul_term(c, &q, &g.poly);
                if let (Some(cof), Some(gcof)) = (&mut cofactors, &g.cofactors) {
                    for (a, b) in cof.iter_mut().zip(gcof) {
                        if !b.is_zero() {
                            *a = a.sub_mul_term(c, &q, b);
                        }
                    }
                }
                if let Some(qs) = quotients.as_deref_mut() {
                    let t = Polynomial::monomial(&ring, q, c);
                    qs[k] = qs[k].add_unchecked(&t);
                }
            }
            None => {
                remainder.push((m, c));
                pending = drop_leading(&pending);
            }
        }
    }
    Element {
        poly: Polynomial::from_sorted(&ring, remainder),
        cofactors,
    }
}

fn drop_leading(f: &Polynomial) -> Polynomial {
    Polynomial::from_sorted(f.ring(), f.terms()[1..].to_vec())
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine {
    ring: RingRef,
    order: MonomialOrder,
    elems: Vec<Element>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    sugar: Vec<u32>,
    budget: Budget,
    processed: usize,
}

impl Engine {
    fn lm(&self, k: usize) -> Monomial {
        self.elems[k].poly.leading_monomial().unwrap()
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let graded = order.is_graded();
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let first = if graded {
                    a.lcm.degree().cmp(&b.lcm.degree())
                } else {
                    a.sugar.cmp(&b.sugar)
                };
                first
                    .then_with(|| order.compare(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    /// Gebauer–Möller update after adding element `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.lm(h);
        let candidates: Vec<(usize, Monomial)> = self.active.iter().map(|&g| (g, self.lm(g).lcm(&lm_h))).collect();

        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, &(g, l)) in candidates.iter().enumerate() {
            let coprime = self.lm(g).is_coprime(&lm_h);
            let dominated =
                candidates[idx + 1..].iter().any(|(_, l2)| l2.divides(&l)) || kept.iter().any(|(_, l2)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|&(g, _)| !self.lm(g).is_coprime(&lm_h))
            .map(|(g, lcm)| {
                let sh = self.sugar[h] + lcm.degree() - lm_h.degree();
                let sg = self.sugar[g] + lcm.degree() - self.lm(g).degree();
                Pair {
                    i: g,
                    j: h,
                    lcm,
                    sugar: sh.max(sg),
                }
            })
            .collect();

        let elems = &self.elems;
        let lm = |k: usize| elems[k].poly.leading_monomial().unwrap();
        self.pairs.retain(|pair| {
            !(lm_h.divides(&pair.lcm) && lm(pair.i).lcm(&lm_h) != pair.lcm && lm(pair.j).lcm(&lm_h) != pair.lcm)
        });
        self.pairs.extend(new_pairs);

        self.active.retain(|&g| !lm_h.divides(&lm(g)));
        self.active.push(h);
    }

    /// Adds a nonzero element. Its sugar is the larger of the sugar it
    /// inherited and its own degree.
    fn insert(&mut self, mut e: Element, sugar: u32) -> usize {
        self.sugar.push(sugar.max(e.poly.degree().unwrap_or(0)));
        let p = self.ring.characteristic();
        let lc = e.poly.leading_coefficient().unwrap();
        if lc != 1 {
            e.scale(inv_mod(lc, p));
        }
        self.elems.push(e);
        let h = self.elems.len() - 1;
        self.update(h);
        h
    }

    fn spoly(&self, pair: &Pair) -> Element {
        let (a, b) = (&self.elems[pair.i], &self.elems[pair.j]);
        let qa = self.lm(pair.i).quotient(&pair.lcm).unwrap();
        let qb = self.lm(pair.j).quotient(&pair.lcm).unwrap();
        let poly = a.poly.mul_term(&qa, 1).sub_mul_term(1, &qb, &b.poly);
        let cofactors = match (&a.cofactors, &b.cofactors) {
            (Some(ca), Some(cb)) => Some(
                ca.iter()
                    .zip(cb)
                    .map(|(x, y)| x.mul_term(&qa, 1).sub_mul_term(1, &qb, y))
                    .collect(),
            ),
            _ => None,
        };
        Element { poly, cofactors }
    }

    fn run(&mut self) -> Result<()> {
        while let Some(pair) = self.select_pair() {
            self.processed += 1;
            if self.processed > self.budget.max_pairs {
                return Err(Error::Budget {
                    processed: self.processed - 1,
                    limit: self.budget.max_pairs,
                    basis_len: self.active.len(),
                });
            }
            let s = self.spoly(&pair);
            let divisors: Vec<&Element> = self.active.iter().map(|&k| &self.elems[k]).collect();
            let r = reduce_element(s, &divisors, None);
            if r.poly.is_zero() {
                continue;
            }
            let unit = r.poly.is_constant();
            let h = self.insert(r, pair.sugar);
            if unit {
                // the unit ideal: nothing else matters
                self.active = vec![h];
                self.pairs.clear();
            }
        }
        Ok(())
    }

    /// Interreduces the active elements into the reduced Gröbner basis,
    /// sorted by increasing leading monomial.
    fn finish(self, input: IdealBasis, track: bool) -> GroebnerBasis {
        let order = self.order;
        let mut active: Vec<Element> = self.active.iter().map(|&k| self.elems[k].clone()).collect();
        active.sort_by(|a, b| order.compare(&a.poly.leading_monomial().unwrap(), &b.poly.leading_monomial().unwrap()));
        let mut reduced: Vec<Element> = Vec::with_capacity(active.len());
        for k in 0..active.len() {
            let others: Vec<&Element> = active
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, e)| e)
                .collect();
            let lead = active[k].poly.leading_term().unwrap();
            // reduce only the tail: the leading monomial is not divisible by
            // any other leading monomial
            let tail = Element {
                poly: drop_leading(&active[k].poly),
                cofactors: active[k].cofactors.clone(),
            };
            let r = reduce_element(tail, &others, None);
            let mut terms = vec![lead];
            terms.extend_from_slice(r.poly.terms());
            reduced.push(Element {
                poly: Polynomial::from_sorted(&self.ring, terms),
                cofactors: r.cofactors,
            });
        }
        let lift = track.then(|| {
            reduced
                .iter()
                .map(|e| e.cofactors.clone().expect("tracked element"))
                .collect()
        });
        let polys = reduced.into_iter().map(|e| e.poly).collect();
        GroebnerBasis {
            basis: IdealBasis::new(&self.ring, polys).expect("same ring"),
            order,
            reduced: true,
            input,
            lift,
            pairs_processed: self.processed,
        }
    }
}

fn run_engine(ideal: &IdealBasis, order: MonomialOrder, budget: Budget, track: bool) -> Result<GroebnerBasis> {
    let input = ideal.with_order(order);
    let ring = input.ring().clone();
    let n = input.len();
    let mut engine = Engine {
        ring: ring.clone(),
        order,
        elems: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        sugar: Vec::new(),
        budget,
        processed: 0,
    };
    let mut unit = None;
    for (k, g) in input.generators().iter().enumerate() {
        let cofactors = track.then(|| {
            (0..n)
                .map(|j| {
                    if j == k {
                        Polynomial::one(&ring)
                    } else {
                        Polynomial::zero(&ring)
                    }
                })
                .collect()
        });
        let is_unit = g.is_constant();
        let h = engine.insert(
            Element {
                poly: g.clone(),
                cofactors,
            },
            0,
        );
        if is_unit {
            unit = Some(h);
            break;
        }
    }
    if let Some(h) = unit {
        engine.active = vec![h];
        engine.pairs.clear();
    }
    engine.run()?;
    Ok(engine.finish(input, track))
}

/// Reduced Gröbner basis of `ideal` with respect to `order`.
pub fn buchberger(ideal: &IdealBasis, order: MonomialOrder, budget: Budget) -> Result<GroebnerBasis> {
    run_engine(ideal, order, budget, false)
}

/// Reduced Gröbner basis that also records how each element is built from
/// the input generators.
pub fn buchberger_lifted(ideal: &IdealBasis, order: MonomialOrder, budget: Budget) -> Result<GroebnerBasis> {
    run_engine(ideal, order, budget, true)
}

impl GroebnerBasis {
    /// Divides `f` by the basis. Returns the remainder and one quotient per
    /// basis element.
    pub fn divide(&self, f: &Polynomial) -> Result<(Polynomial, Vec<Polynomial>)> {
        let ring = self.ring().clone();
        let g = f.reorder(&ring)?;
        let elems: Vec<Element> = self
            .polynomials()
            .iter()
            .map(|b| Element {
                poly: b.clone(),
                cofactors: None,
            })
            .collect();
        let refs: Vec<&Element> = elems.iter().collect();
        let mut quotients = vec![Polynomial::zero(&ring); elems.len()];
        let r = reduce_element(
            Element {
                poly: g,
                cofactors: None,
            },
            &refs,
            Some(&mut quotients),
        );
        Ok((r.poly, quotients))
    }

    /// Cofactors over the input generators for a member `f`, if the basis was
    /// computed with [`buchberger_lifted`] and `f` is in the ideal.
    pub fn express(&self, f: &Polynomial) -> Result<Option<Vec<Polynomial>>> {
        let Some(lift) = self.lift() else {
            return Err(Error::InvalidArgument(
                "basis was computed without cofactor tracking".into(),
            ));
        };
        let (r, quotients) = self.divide(f)?;
        if !r.is_zero() {
            return Ok(None);
        }
        let ring = self.ring().clone();
        let mut cof = vec![Polynomial::zero(&ring); self.input().len()];
        for (q, row) in quotients.iter().zip(lift) {
            if q.is_zero() {
                continue;
            }
            for (c, l) in cof.iter_mut().zip(row) {
                if !l.is_zero() {
                    *c = c.add_unchecked(&q.mul_unchecked(l));
                }
            }
        }
        Ok(Some(cof))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn ring() -> RingRef {
        Ring::new(&["x0", "x1", "x2", "x3"], 5).unwrap()
    }

    fn ideal(r: &RingRef, gens: &[&str]) -> IdealBasis {
        IdealBasis::new(r, gens.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect()).unwrap()
    }

    const MINORS: [&str; 6] = [
        "x1^2 - x0*x2",
        "x1*x2 - x0*x3",
        "x1*x3",
        "x2^2 - x1*x3",
        "x2*x3",
        "x3^2",
    ];

    #[test]
    fn reduce_examples() {
        let r = Ring::new(&["x", "y"], 5).unwrap();
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let o = MonomialOrder::DegRevLex;
        assert!(reduce(&p("x^2"), &[p("x")], o).unwrap().is_zero());
        assert_eq!(reduce(&p("x + y"), &[p("x")], o).unwrap(), p("y"));
        let r4 = ring();
        let f = Polynomial::parse(&r4, "x1*x3^4 + 2*x2^2*x3^3").unwrap();
        let x3 = Polynomial::parse(&r4, "x3").unwrap();
        assert!(reduce(&f, &[x3], o).unwrap().is_zero());
    }

    #[test]
    fn trivial_bases() {
        let r = ring();
        let o = MonomialOrder::DegRevLex;
        let gb = buchberger(&ideal(&r, &["x0"]), o, Budget::default()).unwrap();
        assert_eq!(gb.polynomials(), ideal(&r, &["x0"]).generators());
        let gb = buchberger(&ideal(&r, &["1"]), o, Budget::default()).unwrap();
        assert!(gb.is_unit_ideal());
        let gb = buchberger(&IdealBasis::zero(&r), o, Budget::default()).unwrap();
        assert!(gb.polynomials().is_empty());
    }

    #[test]
    fn minors_basis_is_closed() {
        let r = ring();
        let i = ideal(&r, &MINORS);
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            let gb = buchberger(&i, order, Budget::default()).unwrap();
            assert!(gb.satisfies_buchberger_criterion());
            for g in i.generators() {
                assert!(gb.contains(g).unwrap());
            }
            let x3sq = Polynomial::parse(&r, "x3^2").unwrap();
            let x2x3 = Polynomial::parse(&r, "x2*x3").unwrap();
            if order == MonomialOrder::DegRevLex {
                assert!(gb.polynomials().contains(&x3sq.reorder(gb.ring()).unwrap()));
                assert!(gb.polynomials().contains(&x2x3.reorder(gb.ring()).unwrap()));
            }
            // idempotent
            let again = buchberger(gb.as_ideal(), order, Budget::default()).unwrap();
            assert_eq!(again, gb);
        }
    }

    #[test]
    fn generator_order_does_not_matter() {
        let r = ring();
        let mut rev = MINORS;
        rev.reverse();
        let a = buchberger(&ideal(&r, &MINORS), MonomialOrder::DegRevLex, Budget::default()).unwrap();
        let b = buchberger(&ideal(&r, &rev), MonomialOrder::DegRevLex, Budget::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn lifted_cofactors_expand() {
        let r = ring();
        let i = ideal(&r, &MINORS);
        let gb = buchberger_lifted(&i, MonomialOrder::DegRevLex, Budget::default()).unwrap();
        let input = gb.input().generators().to_vec();
        for (g, row) in gb.polynomials().iter().zip(gb.lift().unwrap()) {
            let mut sum = Polynomial::zero(gb.ring());
            for (c, h) in row.iter().zip(&input) {
                sum = &sum + &(c * h);
            }
            assert_eq!(&sum, g);
        }
        let f = Polynomial::parse(&r, "x1^4").unwrap();
        let cof = gb.express(&f).unwrap().expect("x1^4 is a member");
        let mut sum = Polynomial::zero(gb.ring());
        for (c, h) in cof.iter().zip(&input) {
            sum = &sum + &(c * h);
        }
        assert_eq!(sum, f.reorder(gb.ring()).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let r = ring();
        let i = ideal(&r, &MINORS);
        let err = buchberger(&i, MonomialOrder::DegRevLex, Budget::new(1).unwrap()).unwrap_err();
        assert!(err.is_budget());
    }
}
