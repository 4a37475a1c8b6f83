use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{add_mod, inv_mod, mul_mod, neg_mod, pow_mod, reduce_i128, sub_mod, FieldElement};

use super::{Monomial, Ring, RingRef};

/// A sparse polynomial over `F_p`.
///
/// Terms are kept sorted in strictly decreasing order with respect to the
/// ring's monomial order and never carry a zero coefficient, so two equal
/// polynomials over the same ring have identical term vectors.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, u32)>,
}

/// The three ring operations accepted by [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Context-checked ring arithmetic.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    Ring::check_same(&f.ring, &g.ring)?;
    Ok(match op {
        ArithOp::Add => f.add_unchecked(g),
        ArithOp::Sub => f.sub_unchecked(g),
        ArithOp::Mul => f.mul_unchecked(g),
    })
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Polynomial::constant(ring, 1)
    }

    pub fn constant(ring: &RingRef, c: i64) -> Self {
        let c = reduce_i128(c as i128, ring.characteristic());
        Polynomial::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn variable(ring: &RingRef, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index out of range");
        Polynomial::monomial(ring, Monomial::variable(ring.nvars(), index, 1), 1)
    }

    pub fn variable_named(ring: &RingRef, name: &str) -> Result<Self> {
        ring.index_of(name)
            .map(|i| Polynomial::variable(ring, i))
            .ok_or_else(|| Error::BadVariable(name.to_string()))
    }

    /// `coeff * m`, with `coeff` a residue already reduced mod p.
    pub fn monomial(ring: &RingRef, m: Monomial, coeff: u32) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if coeff.is_multiple_of(ring.characteristic()) {
            Vec::new()
        } else {
            vec![(m, coeff % ring.characteristic())]
        };
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms with
    /// signed integer coefficients.
    pub fn from_terms<I>(ring: &RingRef, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let p = ring.characteristic();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            let c = reduce_i128(c as i128, p);
            let e = acc.entry(m).or_insert(0);
            *e = add_mod(*e, c, p);
        }
        Polynomial::from_map(ring, acc)
    }

    pub(crate) fn from_map(ring: &RingRef, acc: HashMap<Monomial, u32>) -> Self {
        let order = ring.order();
        let mut terms: Vec<(Monomial, u32)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_unstable_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// Wraps terms that are already sorted and nonzero.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn characteristic(&self) -> u32 {
        self.ring.characteristic()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    // `is_zero` is the emptiness test
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<(Monomial, u32)> {
        self.terms.first().copied()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1)
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        let p = self.characteristic();
        let c = self.terms.iter().find(|(t, _)| t == m).map(|t| t.1).unwrap_or(0);
        FieldElement::from_residue(c, p)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Indices of the variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0))
            .collect()
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let p = self.characteristic();
        let c = c % p;
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|&(m, a)| (m, mul_mod(a, c, p))).collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: u32) -> Polynomial {
        let p = self.characteristic();
        let c = c % p;
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|&(t, a)| (t.mul(m), mul_mod(a, c, p))).collect(),
        }
    }

    pub fn make_monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None | Some(1) => self.clone(),
            Some(lc) => self.scale(inv_mod(lc, self.characteristic())),
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(self, other, ArithOp::Add)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(self, other, ArithOp::Sub)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(self, other, ArithOp::Mul)
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let p = self.characteristic();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let conv = |c: u32| if negate_other { neg_mod(c, p) } else { c };
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, conv(b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        sub_mod(a[i].1, b[j].1, p)
                    } else {
                        add_mod(a[i].1, b[j].1, p)
                    };
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(m, c)| (m, conv(c))));
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    pub(crate) fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub(crate) fn sub_unchecked(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    /// `self - c * m * g` in one pass.
    pub(crate) fn sub_mul_term(&self, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        let p = self.characteristic();
        let order = self.ring.order();
        let a = &self.terms;
        let b = &g.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let negc = neg_mod(c % p, p);
        while i < a.len() && j < b.len() {
            let bm = b[j].0.mul(m);
            match order.compare(&a[i].0, &bm) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, mul_mod(b[j].1, negc, p)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = add_mod(a[i].1, mul_mod(b[j].1, negc, p), p);
                    if v != 0 {
                        out.push((bm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for &(t, cb) in &b[j..] {
            out.push((t.mul(m), mul_mod(cb, negc, p)));
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let p = self.characteristic();
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = small.terms[0];
            return large.mul_term(&m, c);
        }
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(self.len() * other.len());
        for &(ma, ca) in &small.terms {
            for &(mb, cb) in &large.terms {
                let e = acc.entry(ma.mul(&mb)).or_insert(0);
                *e = add_mod(*e, mul_mod(ca, cb, p), p);
            }
        }
        Polynomial::from_map(&self.ring, acc)
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `f^p`, computed termwise: coefficients raised to the p-th power and
    /// exponents multiplied by p.
    pub fn frobenius_power(&self) -> Polynomial {
        let p = self.characteristic();
        // raising to a power preserves the relative order of monomials
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|&(m, c)| (m.pow(p), pow_mod(c, p as u64, p)))
                .collect(),
        }
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let p = self.characteristic();
        let mut acc = HashMap::new();
        for &(m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let c = mul_mod(c, e % p, p);
            if c == 0 {
                continue;
            }
            let mut dm = m;
            dm.set_exponent(var, e - 1);
            acc.insert(dm, c);
        }
        Polynomial::from_map(&self.ring, acc)
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        let p = self.characteristic();
        if point.len() != self.ring.nvars() {
            return Err(Error::InvalidArgument(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        if let Some(bad) = point.iter().find(|x| x.characteristic() != p) {
            return Err(Error::InvalidArgument(format!(
                "coordinate lives in F_{}, ring is over F_{p}",
                bad.characteristic()
            )));
        }
        let mut total = 0u32;
        for &(m, c) in &self.terms {
            let mut v = c;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v = mul_mod(v, pow_mod(point[i].value(), e as u64, p), p);
                }
            }
            total = add_mod(total, v, p);
        }
        Ok(FieldElement::from_residue(total, p))
    }

    /// Ring homomorphism sending variable `i` to `images[i]`; all images must
    /// share one target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::InvalidArgument(format!(
                "{} images supplied for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        let Some(first) = images.first() else {
            // no variables: only constants
            return Err(Error::InvalidArgument(
                "substitution from a ring without variables".into(),
            ));
        };
        let target = first.ring().clone();
        for img in images {
            Ring::check_same(&target, img.ring())?;
            if img.characteristic() != self.characteristic() {
                return Err(Error::ContextMismatch {
                    left: self.ring.to_string(),
                    right: target.to_string(),
                });
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|img| vec![Polynomial::one(&target), img.clone()])
            .collect();
        let mut acc = Polynomial::zero(&target);
        for &(m, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c as i64);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap().mul_unchecked(&table[1]);
                    table.push(next);
                }
                term = term.mul_unchecked(&table[e as usize]);
            }
            acc = acc.add_unchecked(&term);
        }
        Ok(acc)
    }

    /// Moves the polynomial into `target`, sending variable `i` to variable
    /// `mapping[i]` of the target ring.
    pub fn rename_into(&self, target: &RingRef, mapping: &[usize]) -> Result<Polynomial> {
        if mapping.len() != self.ring.nvars() || mapping.iter().any(|&j| j >= target.nvars()) {
            return Err(Error::InvalidArgument("bad variable mapping".into()));
        }
        if target.characteristic() != self.characteristic() {
            return Err(Error::ContextMismatch {
                left: self.ring.to_string(),
                right: target.to_string(),
            });
        }
        let mut acc = HashMap::with_capacity(self.terms.len());
        for &(m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[mapping[i]] += x;
            }
            let e = acc.entry(Monomial::from_exponents(&e)).or_insert(0);
            *e = add_mod(*e, c, self.characteristic());
        }
        Ok(Polynomial::from_map(target, acc))
    }

    /// Moves the polynomial into a ring with the same variable names (in any
    /// order), matching variables by name.
    pub fn rename_by_name(&self, target: &RingRef) -> Result<Polynomial> {
        let mapping: Option<Vec<usize>> = self.ring.names().iter().map(|n| target.index_of(n)).collect();
        let mapping = mapping.ok_or_else(|| Error::ContextMismatch {
            left: self.ring.to_string(),
            right: target.to_string(),
        })?;
        self.rename_into(target, &mapping)
    }

    /// Re-sorts the terms under another monomial order.
    pub fn reorder(&self, ring: &RingRef) -> Result<Polynomial> {
        if ring.names() != self.ring.names() || ring.characteristic() != self.characteristic() {
            return Err(Error::ContextMismatch {
                left: self.ring.to_string(),
                right: ring.to_string(),
            });
        }
        let order = ring.order();
        let mut terms = self.terms.clone();
        terms.sort_unstable_by(|a, b| order.compare(&b.0, &a.0));
        Ok(Polynomial {
            ring: Arc::clone(ring),
            terms,
        })
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Ring::same_context(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn assert_same(a: &Polynomial, b: &Polynomial) {
    if let Err(e) = Ring::check_same(&a.ring, &b.ring) {
        panic!("{e}");
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_same(self, rhs);
        self.add_unchecked(rhs)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_same(self, rhs);
        self.sub_unchecked(rhs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_same(self, rhs);
        self.mul_unchecked(rhs)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let p = self.characteristic();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|&(m, c)| (m, neg_mod(c, p))).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> RingRef {
        Ring::new(&["x0", "x1", "x2", "x3"], 5).unwrap()
    }

    fn parse(r: &RingRef, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn coefficients_cancel_mod_p() {
        let r = ring();
        let a = parse(&r, "2*x2^2*x3^3");
        let b = parse(&r, "3*x2^2*x3^3");
        assert!(poly_arith(&a, &b, ArithOp::Add).unwrap().is_zero());
    }

    #[test]
    fn multiplicative_identity() {
        let r = ring();
        let f = parse(&r, "x1*x3^4 + 2*x2^2*x3^3");
        assert_eq!(poly_arith(&f, &Polynomial::one(&r), ArithOp::Mul).unwrap(), f);
    }

    #[test]
    fn quintic_expansion_is_frobenius() {
        let r = Ring::new(&["x", "y", "z"], 5).unwrap();
        let f = parse(&r, "y + 2*z^2");
        let mut prod = Polynomial::one(&r);
        for _ in 0..5 {
            prod = poly_arith(&prod, &f, ArithOp::Mul).unwrap();
        }
        assert_eq!(prod, parse(&r, "y^5 + 2*z^10"));
        assert_eq!(f.frobenius_power(), prod);
        let g = parse(&r, "-x + y*z + 3*z^3");
        assert_eq!(g.frobenius_power(), parse(&r, "-x^5 + y^5*z^5 + 3*z^15"));
        assert!(Polynomial::zero(&r).frobenius_power().is_zero());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = Polynomial::one(&ring());
        let b = Polynomial::one(&Ring::new(&["x0", "x1", "x2", "x3"], 7).unwrap());
        assert!(matches!(
            poly_arith(&a, &b, ArithOp::Sub),
            Err(Error::ContextMismatch { .. })
        ));
    }

    #[test]
    fn evaluation_examples() {
        let r = ring();
        let pt = |v: [i64; 4]| v.map(|x| r.element(x));
        let f = parse(&r, "x1*x3^4 + 2*x2^2*x3^3");
        let g = parse(&r, "-x0*x3^4 + x1*x2*x3^3 + 3*x2^3*x3^2");
        assert_eq!(f.evaluate(&pt([0, 0, 0, 1])).unwrap().value(), 0);
        assert_eq!(parse(&r, "x0^5").evaluate(&pt([1, 0, 0, 0])).unwrap().value(), 1);
        assert_eq!(g.evaluate(&pt([1, 0, 0, 1])).unwrap().value(), 4);
        assert!(f.evaluate(&pt([1, 0, 0, 1])[..3]).is_err());
    }

    #[test]
    fn derivative_in_characteristic_p() {
        let r = Ring::new(&["s", "v"], 5).unwrap();
        let f = parse(&r, "s^5 - v - 2*s^2");
        assert_eq!(f.derivative(0), parse(&r, "-4*s"));
        assert_eq!(f.derivative(1), parse(&r, "-1"));
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let src = Ring::new(&["u", "v"], 5).unwrap();
        let dst = Ring::new(&["x", "y"], 5).unwrap();
        let f = parse(&src, "u^2 - v");
        let images = [parse(&dst, "x + y"), parse(&dst, "x*y")];
        assert_eq!(f.substitute(&images).unwrap(), parse(&dst, "x^2 + x*y + y^2"));
    }

    #[test]
    fn reorder_keeps_value() {
        let r = ring();
        let f = parse(&r, "x1*x3^4 + 2*x2^2*x3^3 + x0^3");
        let lex = r.with_order(crate::poly::MonomialOrder::Lex);
        let g = f.reorder(&lex).unwrap();
        assert_eq!(g.leading_monomial(), Some(Monomial::from_exponents(&[3, 0, 0, 0])));
        assert_eq!(g.reorder(&r).unwrap(), f);
    }
}
