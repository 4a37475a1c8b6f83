//! Derivations of polynomial rings over `F_p`.
//!
//! A derivation is determined by its values on the variables. In
//! characteristic `p` the `p`-fold operator iterate of a derivation is again
//! a derivation, so [`Derivation::iterate_power`] with `m = p` returns an
//! honest derivation; `δ^[p] = 0` is the additivity test for the vector
//! field it defines.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::IdealBasis;
use crate::linalg;
use crate::poly::{is_identifier, monomial_basis, Chart, Monomial, Polynomial, Ring, RingRef};

#[derive(Clone, PartialEq, Eq)]
pub struct Derivation {
    ring: RingRef,
    images: Vec<Polynomial>,
}

impl Derivation {
    pub fn new(ring: &RingRef, images: Vec<Polynomial>) -> Result<Derivation> {
        if images.len() != ring.nvars() {
            return Err(Error::InvalidArgument(format!(
                "derivation needs {} images, got {}",
                ring.nvars(),
                images.len()
            )));
        }
        for img in &images {
            Ring::check_same(ring, img.ring())?;
        }
        Ok(Derivation {
            ring: Arc::clone(ring),
            images,
        })
    }

    pub fn zero(ring: &RingRef) -> Derivation {
        Derivation {
            ring: Arc::clone(ring),
            images: vec![Polynomial::zero(ring); ring.nvars()],
        }
    }

    /// Parses `var -> polynomial` lines over `ring`. Blank lines and lines
    /// starting with `#` are skipped; unlisted variables map to zero.
    pub fn parse(ring: &RingRef, text: &str) -> Result<Derivation> {
        let mut images = vec![None; ring.nvars()];
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs, rhs) = split_arrow(line, lineno)?;
            let index = ring.index_of(lhs).ok_or_else(|| Error::Parse {
                offset: lineno,
                message: format!("line {}: unknown variable `{lhs}`", lineno + 1),
            })?;
            if images[index].is_some() {
                return Err(Error::Parse {
                    offset: lineno,
                    message: format!("line {}: `{lhs}` given twice", lineno + 1),
                });
            }
            images[index] = Some(Polynomial::parse(ring, rhs)?);
        }
        let images = images
            .into_iter()
            .map(|img| img.unwrap_or_else(|| Polynomial::zero(ring)))
            .collect();
        Derivation::new(ring, images)
    }

    /// Parses `var -> polynomial` lines, taking the ring variables from the
    /// left-hand sides in order of appearance.
    pub fn parse_with_ring(text: &str, p: u64) -> Result<Derivation> {
        let mut names = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs, _) = split_arrow(line, lineno)?;
            if !is_identifier(lhs) {
                return Err(Error::BadVariable(lhs.to_string()));
            }
            names.push(lhs.to_string());
        }
        if names.is_empty() {
            return Err(Error::Parse {
                offset: 0,
                message: "derivation has no `var -> poly` lines".into(),
            });
        }
        let ring = Ring::new(&names, p)?;
        Derivation::parse(&ring, text)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Value of the derivation on each variable.
    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Polynomial::is_zero)
    }

    /// `δ(f) = Σ ∂f/∂x_i · δ(x_i)`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        Ring::check_same(&self.ring, f.ring())?;
        Ok(self.apply_unchecked(f))
    }

    fn apply_unchecked(&self, f: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(&self.ring);
        for (i, img) in self.images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            let d = f.derivative(i);
            if !d.is_zero() {
                acc = acc.add_unchecked(&d.mul_unchecked(img));
            }
        }
        acc
    }

    /// The map `x_i ↦ δ(δ(…δ(x_i)))` (m applications).
    pub fn iterate_power(&self, m: u32) -> Result<Derivation> {
        if m == 0 {
            return Err(Error::InvalidArgument("iterate_power needs m >= 1".into()));
        }
        let images = (0..self.ring.nvars())
            .map(|i| {
                let mut f = Polynomial::variable(&self.ring, i);
                for _ in 0..m {
                    if f.is_zero() {
                        break;
                    }
                    f = self.apply_unchecked(&f);
                }
                f
            })
            .collect();
        Ok(Derivation {
            ring: Arc::clone(&self.ring),
            images,
        })
    }

    /// Common degree of the nonzero images, if they are all homogeneous of
    /// one degree. `Some(None)` means every image is zero.
    fn image_degree(&self) -> Option<Option<u32>> {
        let mut degree = None;
        for img in self.images.iter().filter(|f| !f.is_zero()) {
            if !img.is_homogeneous() {
                return None;
            }
            let d = img.degree();
            match degree {
                None => degree = d,
                Some(_) if degree != d => return None,
                _ => {}
            }
        }
        Some(degree)
    }

    /// The derivation induced on an affine chart:
    /// `δ(x_j / x_i) = (δ(x_j) x_i − x_j δ(x_i)) / x_i²`, dehomogenized.
    pub fn chart_transform(&self, chart: &Chart) -> Result<Derivation> {
        Ring::check_same(&self.ring, chart.homogeneous_ring())?;
        if self.image_degree().is_none() {
            return Err(Error::Transform("images are not homogeneous of a common degree".into()));
        }
        let i = chart.index();
        let xi = Polynomial::variable(&self.ring, i);
        let mut images = Vec::with_capacity(self.ring.nvars() - 1);
        for j in (0..self.ring.nvars()).filter(|&j| j != i) {
            let xj = Polynomial::variable(&self.ring, j);
            let numerator = &(&self.images[j] * &xi) - &(&xj * &self.images[i]);
            // the numerator is homogeneous, so setting x_i = 1 performs the
            // division by x_i^2 exactly
            if !numerator.is_homogeneous() {
                return Err(Error::Transform(format!(
                    "numerator {numerator} of the image of {} is not homogeneous",
                    self.ring.name(j)
                )));
            }
            images.push(chart.dehomogenize(&numerator)?);
        }
        Derivation::new(chart.affine_ring(), images)
    }

    /// Echelonized basis of the homogeneous degree-`degree` elements killed by
    /// the derivation. Each basis vector is monic in its leading monomial and
    /// no leading monomial occurs in another basis vector.
    pub fn graded_kernel(&self, degree: u32) -> Result<Vec<Polynomial>> {
        let image_degree = self
            .image_degree()
            .ok_or_else(|| Error::Grading("derivation does not preserve a grading".into()))?;
        let p = self.ring.characteristic();
        let columns = monomial_basis(&self.ring, degree);
        if image_degree.is_none() {
            return Ok(columns
                .into_iter()
                .map(|m| Polynomial::monomial(&self.ring, m, 1))
                .collect());
        }
        let mut row_index: HashMap<Monomial, usize> = HashMap::new();
        let mut entries: Vec<Vec<(usize, u32)>> = Vec::with_capacity(columns.len());
        for m in &columns {
            let image = self.apply_unchecked(&Polynomial::monomial(&self.ring, *m, 1));
            let col = image
                .terms()
                .iter()
                .map(|(t, c)| {
                    let n = row_index.len();
                    (*row_index.entry(*t).or_insert(n), *c)
                })
                .collect();
            entries.push(col);
        }
        let mut matrix = vec![vec![0u32; columns.len()]; row_index.len()];
        for (j, col) in entries.iter().enumerate() {
            for &(i, c) in col {
                matrix[i][j] = c;
            }
        }
        let kernel = linalg::nullspace(&matrix, columns.len(), p);
        Ok(kernel
            .into_iter()
            .map(|v| {
                let terms: Vec<(Monomial, u32)> = columns
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| *c != 0)
                    .map(|(m, c)| (*m, c))
                    .collect();
                Polynomial::from_sorted(&self.ring, terms)
            })
            .collect())
    }

    /// The 2×2 minors of the matrix with rows `(δ(x_0), …, δ(x_n))` and
    /// `(x_0, …, x_n)`. On projective space their common zeros are the points
    /// where the vector field is proportional to the Euler field.
    pub fn fixed_locus_ideal(&self) -> IdealBasis {
        let n = self.ring.nvars();
        let mut minors = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let xi = Polynomial::variable(&self.ring, i);
                let xj = Polynomial::variable(&self.ring, j);
                minors.push(&(&self.images[i] * &xj) - &(&self.images[j] * &xi));
            }
        }
        IdealBasis::new(&self.ring, minors).expect("minors live in the derivation's ring")
    }
}

fn split_arrow(line: &str, lineno: usize) -> Result<(&str, &str)> {
    let (lhs, rhs) = line.split_once("->").ok_or_else(|| Error::Parse {
        offset: lineno,
        message: format!("line {}: expected `var -> polynomial`", lineno + 1),
    })?;
    Ok((lhs.trim(), rhs.trim()))
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            writeln!(f, "{} -> {}", self.ring.name(i), img)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, img)| format!("{} -> {}", self.ring.name(i), img))
            .collect();
        write!(f, "Derivation[{}]", parts.join("; "))
    }
}
