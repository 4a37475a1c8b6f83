use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{check_prime, FieldElement};

use super::{MonomialOrder, MAX_VARS};

/// Ring context shared by all polynomials of `F_p[names...]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    p: u32,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    /// Builds a ring with the default (degrevlex) order.
    pub fn new<S: AsRef<str>>(names: &[S], p: u64) -> Result<RingRef> {
        Ring::with_order_new(names, p, MonomialOrder::DegRevLex)
    }

    pub fn with_order_new<S: AsRef<str>>(names: &[S], p: u64, order: MonomialOrder) -> Result<RingRef> {
        let p = check_prime(p)?;
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) || names[..i].contains(name) {
                return Err(Error::BadVariable(name.clone()));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > names.len() {
                return Err(Error::InvalidArgument(format!(
                    "block split {k} exceeds {} variables",
                    names.len()
                )));
            }
        }
        Ok(Arc::new(Ring { names, p, order }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn element(&self, value: i64) -> FieldElement {
        FieldElement::new(value, self.p)
    }

    /// The same variables and characteristic under another monomial order.
    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> RingRef {
        if self.order == order {
            return Arc::clone(self);
        }
        Arc::new(Ring {
            names: self.names.clone(),
            p: self.p,
            order,
        })
    }

    /// Appends a variable whose name does not clash with the existing ones.
    /// Returns the new ring and the index of the fresh variable.
    pub fn with_fresh_variable(self: &Arc<Self>, stem: &str) -> Result<(RingRef, usize)> {
        let mut name = stem.to_string();
        let mut k = 0;
        while self.index_of(&name).is_some() {
            k += 1;
            name = format!("{stem}{k}");
        }
        let mut names = self.names.clone();
        names.push(name);
        let ring = Ring::with_order_new(&names, self.p as u64, self.order)?;
        Ok((ring, names.len() - 1))
    }

    pub fn same_context(a: &RingRef, b: &RingRef) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    pub(crate) fn check_same(a: &RingRef, b: &RingRef) -> Result<()> {
        if Ring::same_context(a, b) {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: a.to_string(),
                right: b.to_string(),
            })
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}] ({})", self.p, self.names.join(","), self.order.name())
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_and_bad_names() {
        assert_eq!(Ring::new(&["x"], 4), Err(Error::NotPrime(4)));
        assert!(matches!(Ring::new(&["x", "x"], 5), Err(Error::BadVariable(_))));
        assert!(matches!(Ring::new(&["1x"], 5), Err(Error::BadVariable(_))));
        let many: Vec<String> = (0..=MAX_VARS).map(|i| format!("v{i}")).collect();
        assert!(matches!(Ring::new(&many, 5), Err(Error::TooManyVariables(_))));
    }

    #[test]
    fn fresh_variable_avoids_clash() {
        let r = Ring::new(&["t", "t1"], 5).unwrap();
        let (r2, idx) = r.with_fresh_variable("t").unwrap();
        assert_eq!(idx, 2);
        assert_eq!(r2.name(2), "t2");
    }
}
