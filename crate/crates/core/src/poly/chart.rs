//! Passing between a homogeneous coordinate ring and its affine charts.

use std::sync::Arc;

use crate::error::{Error, Result};

use super::{Monomial, Polynomial, Ring, RingRef};

/// The affine chart `x_index != 0` of a homogeneous coordinate ring.
///
/// Chart coordinates are the quotients `x_j / x_index` for `j != index`, kept
/// in their original relative order.
#[derive(Clone, Debug)]
pub struct Chart {
    homogeneous: RingRef,
    affine: RingRef,
    index: usize,
}

/// Chart coordinate names for the standard `x0..x3` ring: `x,y,z` on
/// `x3 != 0`, `xt,yt,zt` on `x2 != 0`, `xh,yh,zh` on `x1 != 0`. Other rings
/// and charts get `<name>_<index>`.
pub fn default_chart_names(ring: &Ring, index: usize) -> Vec<String> {
    let standard = ["x0", "x1", "x2", "x3"];
    if ring.names().iter().map(String::as_str).eq(standard) {
        let named: Option<[&str; 3]> = match index {
            3 => Some(["x", "y", "z"]),
            2 => Some(["xt", "yt", "zt"]),
            1 => Some(["xh", "yh", "zh"]),
            _ => None,
        };
        if let Some(names) = named {
            return names.iter().map(|s| s.to_string()).collect();
        }
    }
    (0..ring.nvars())
        .filter(|&j| j != index)
        .map(|j| format!("{}_{}", ring.name(j), index))
        .collect()
}

impl Chart {
    pub fn new<S: AsRef<str>>(homogeneous: &RingRef, index: usize, names: &[S]) -> Result<Chart> {
        if index >= homogeneous.nvars() {
            return Err(Error::InvalidArgument(format!(
                "chart index {index} out of range for {homogeneous}"
            )));
        }
        if names.len() + 1 != homogeneous.nvars() {
            return Err(Error::InvalidArgument(format!(
                "chart needs {} coordinate names, got {}",
                homogeneous.nvars() - 1,
                names.len()
            )));
        }
        let affine = Ring::with_order_new(names, homogeneous.characteristic() as u64, homogeneous.order())?;
        Ok(Chart {
            homogeneous: Arc::clone(homogeneous),
            affine,
            index,
        })
    }

    pub fn standard(homogeneous: &RingRef, index: usize) -> Result<Chart> {
        let names = default_chart_names(homogeneous, index);
        Chart::new(homogeneous, index, &names)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn homogeneous_ring(&self) -> &RingRef {
        &self.homogeneous
    }

    pub fn affine_ring(&self) -> &RingRef {
        &self.affine
    }

    /// Sets the chart variable to 1. The input must be homogeneous.
    pub fn dehomogenize(&self, f: &Polynomial) -> Result<Polynomial> {
        Ring::check_same(f.ring(), &self.homogeneous)?;
        if !f.is_homogeneous() {
            return Err(Error::Grading(format!("{f} is not homogeneous")));
        }
        self.dehomogenize_any(f)
    }

    /// Sets the chart variable to 1 without a homogeneity check.
    pub(crate) fn dehomogenize_any(&self, f: &Polynomial) -> Result<Polynomial> {
        let n = self.homogeneous.nvars();
        let terms = f.terms().iter().map(|(m, c)| {
            let e: Vec<u32> = (0..n).filter(|&j| j != self.index).map(|j| m.exponent(j)).collect();
            (Monomial::from_exponents(&e), *c as i64)
        });
        Ok(Polynomial::from_terms(&self.affine, terms))
    }

    /// Homogenizes an affine polynomial to degree `degree` with the chart
    /// variable; fails if `degree` is below the total degree of `f`.
    pub fn homogenize(&self, f: &Polynomial, degree: u32) -> Result<Polynomial> {
        Ring::check_same(f.ring(), &self.affine)?;
        if let Some(d) = f.degree() {
            if d > degree {
                return Err(Error::Grading(format!(
                    "cannot homogenize degree-{d} polynomial to degree {degree}"
                )));
            }
        }
        let n = self.homogeneous.nvars();
        let terms = f.terms().iter().map(|(m, c)| {
            let mut e = Vec::with_capacity(n);
            let mut k = 0;
            for j in 0..n {
                if j == self.index {
                    e.push(degree - m.degree());
                } else {
                    e.push(m.exponent(k));
                    k += 1;
                }
            }
            (Monomial::from_exponents(&e), *c as i64)
        });
        Ok(Polynomial::from_terms(&self.homogeneous, terms))
    }
}

/// Dehomogenization onto the standard chart `x_index != 0`.
pub fn dehomogenize(f: &Polynomial, index: usize) -> Result<Polynomial> {
    Chart::standard(f.ring(), index)?.dehomogenize(f)
}

/// Exact division by `x_var^exponent`, the Laurent normalisation used to
/// bring expressions such as `x3^-5 * F^2` back to polynomials.
pub fn laurent_normalize(expr: &Polynomial, var: usize, exponent: u32) -> Result<Polynomial> {
    let ring = expr.ring();
    if var >= ring.nvars() {
        return Err(Error::InvalidArgument(format!("no variable with index {var}")));
    }
    let divisor = Monomial::variable(ring.nvars(), var, exponent);
    let mut terms = Vec::with_capacity(expr.len());
    for &(m, c) in expr.terms() {
        match divisor.quotient(&m) {
            Some(q) => terms.push((q, c)),
            None => {
                return Err(Error::Divisibility {
                    divisor: Polynomial::monomial(ring, divisor, 1).to_string(),
                    term: Polynomial::monomial(ring, m, c).to_string(),
                })
            }
        }
    }
    // dividing every term by the same monomial preserves their order
    Ok(Polynomial::from_sorted(ring, terms))
}

/// All monomials of total degree `degree`, in decreasing monomial order.
pub fn monomial_basis(ring: &RingRef, degree: u32) -> Vec<Monomial> {
    fn fill(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur.push(left);
            out.push(Monomial::from_exponents(cur));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            fill(n, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let n = ring.nvars();
    let mut out = Vec::new();
    if n == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    fill(n, 0, degree, &mut Vec::with_capacity(n), &mut out);
    let order = ring.order();
    out.sort_unstable_by(|a, b| order.compare(b, a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    fn ring() -> RingRef {
        Ring::new(&["x0", "x1", "x2", "x3"], 5).unwrap()
    }

    #[test]
    fn dehomogenize_table_entries() {
        let r = ring();
        let chart = Chart::standard(&r, 3).unwrap();
        let a = chart.affine_ring().clone();
        let f = Polynomial::parse(&r, "x1*x3^4 + 2*x2^2*x3^3").unwrap();
        assert_eq!(
            chart.dehomogenize(&f).unwrap(),
            Polynomial::parse(&a, "y + 2*z^2").unwrap()
        );
        let g = Polynomial::parse(&r, "-x0*x3^4 + x1*x2*x3^3 + 3*x2^3*x3^2").unwrap();
        assert_eq!(
            chart.dehomogenize(&g).unwrap(),
            Polynomial::parse(&a, "-x + y*z + 3*z^3").unwrap()
        );
        let x35 = Polynomial::parse(&r, "x3^5").unwrap();
        assert!(chart.dehomogenize(&x35).unwrap().is_one());
    }

    #[test]
    fn dehomogenize_rejects_inhomogeneous() {
        let r = ring();
        let f = Polynomial::parse(&r, "x0 + x1^2").unwrap();
        assert!(matches!(dehomogenize(&f, 3), Err(Error::Grading(_))));
    }

    #[test]
    fn chart_names() {
        let r = ring();
        assert_eq!(default_chart_names(&r, 2), vec!["xt", "yt", "zt"]);
        assert_eq!(default_chart_names(&r, 0), vec!["x1_0", "x2_0", "x3_0"]);
    }

    #[test]
    fn laurent_examples() {
        let r = ring();
        let f = Polynomial::parse(&r, "x1*x3^4 + 2*x2^2*x3^3").unwrap();
        let q = laurent_normalize(&(&f * &f), 3, 5).unwrap();
        assert_eq!(
            q,
            Polynomial::parse(&r, "x1^2*x3^3 + 4*x1*x2^2*x3^2 + 4*x2^4*x3").unwrap()
        );
        assert_eq!(q.degree(), Some(5));
        let x = Polynomial::parse(&r, "x0").unwrap();
        assert!(laurent_normalize(&x, 0, 1).unwrap().is_one());
        assert!(matches!(laurent_normalize(&f, 3, 4), Err(Error::Divisibility { .. })));
    }

    #[test]
    fn monomial_basis_counts() {
        let r = ring();
        assert_eq!(monomial_basis(&r, 5).len(), 56);
        assert_eq!(monomial_basis(&r, 0), vec![Monomial::one(4)]);
        let lin = monomial_basis(&r, 1);
        let expect: Vec<Monomial> = (0..4).map(|i| Monomial::variable(4, i, 1)).collect();
        assert_eq!(lin, expect);
        let lex = r.with_order(MonomialOrder::Lex);
        assert_eq!(monomial_basis(&lex, 3).len(), 20);
    }

    #[test]
    fn homogenize_inverse() {
        let r = ring();
        let chart = Chart::standard(&r, 3).unwrap();
        let f = Polynomial::parse(chart.affine_ring(), "y + 2*z^2").unwrap();
        let h = chart.homogenize(&f, 5).unwrap();
        assert_eq!(h, Polynomial::parse(&r, "x1*x3^4 + 2*x2^2*x3^3").unwrap());
        assert!(chart.homogenize(&f, 1).is_err());
    }
}
