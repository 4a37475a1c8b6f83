use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::MAX_VARS;

/// Exponent vector of a monomial. The vector length is the variable count of
/// the ring the monomial belongs to; the total degree is cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u32; MAX_VARS],
    len: u8,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Monomial {
            exps: [0; MAX_VARS],
            len: nvars as u8,
            degree: 0,
        }
    }

    pub fn from_exponents(exponents: &[u32]) -> Self {
        let mut m = Monomial::one(exponents.len());
        m.exps[..exponents.len()].copy_from_slice(exponents);
        m.degree = exponents.iter().sum();
        m
    }

    /// The monomial `x_index^power`.
    pub fn variable(nvars: usize, index: usize, power: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = power;
        m.degree = power;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps[..self.len as usize]
    }

    #[inline]
    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len, other.len);
        let mut out = *self;
        for i in 0..self.len as usize {
            out.exps[i] += other.exps[i];
        }
        out.degree += other.degree;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && (0..self.len as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for i in 0..self.len as usize {
            out.exps[i] -= self.exps[i];
        }
        out.degree -= self.degree;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut degree = 0;
        for i in 0..self.len as usize {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            degree += out.exps[i];
        }
        out.degree = degree;
        out
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.len as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut out = *self;
        for i in 0..self.len as usize {
            out.exps[i] *= k;
        }
        out.degree *= k;
        out
    }

    pub(crate) fn set_exponent(&mut self, index: usize, value: u32) {
        self.degree = self.degree - self.exps[index] + value;
        self.exps[index] = value;
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// A total, multiplicative well-order on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, `x0 > x1 > ...`.
    #[default]
    DegRevLex,
    /// Pure lexicographic, `x0 > x1 > ...`.
    Lex,
    /// Elimination order: degrevlex on the first `split` variables, ties
    /// broken by degrevlex on the remaining ones.
    Block(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            // a smaller exponent on the last differing variable is larger
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.len, b.len);
        match *self {
            MonomialOrder::DegRevLex => match a.degree.cmp(&b.degree) {
                Ordering::Equal => degrevlex(a.exponents(), b.exponents()),
                ord => ord,
            },
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Block(split) => {
                let split = split.min(a.nvars());
                match degrevlex(&a.exponents()[..split], &b.exponents()[..split]) {
                    Ordering::Equal => degrevlex(&a.exponents()[split..], &b.exponents()[split..]),
                    ord => ord,
                }
            }
        }
    }

    /// True when the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block(k) => format!("block({k})"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            "lex" => Ok(MonomialOrder::Lex),
            other => {
                if let Some(k) = other.strip_prefix("block(").and_then(|rest| rest.strip_suffix(')')) {
                    return k
                        .parse()
                        .map(MonomialOrder::Block)
                        .map_err(|_| format!("bad block split `{k}`"));
                }
                Err(format!("unknown monomial order `{other}`"))
            }
        }
    }
}
