//! Integer bookkeeping for numerical invariants of surfaces and of the total
//! spaces of degree-`p` torsors over them.
//!
//! Everything is exact `i64` arithmetic with overflow checks; the values that
//! occur are tiny, so an overflow means a caller passed nonsense.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::is_prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TorsorKind {
    AlphaP,
    MuP,
    EtaleZp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurfaceKind {
    Classical,
    Singular,
    Supersingular,
    TorsorTotalSpace(TorsorKind),
}

/// `(p, χ(O), K², p_g, h01)` for a surface or a torsor total space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub p: u64,
    pub chi: i64,
    pub k2: i64,
    pub pg: Option<i64>,
    pub h01: Option<i64>,
    pub kind: SurfaceKind,
    /// Known lower bound for `h⁰(ω)` when `pg` itself is unknown.
    pub pg_lower_bound: Option<i64>,
}

impl InvariantRecord {
    pub fn new(p: u64, chi: i64, k2: i64, kind: SurfaceKind) -> InvariantRecord {
        InvariantRecord {
            p,
            chi,
            k2,
            pg: None,
            h01: None,
            kind,
            pg_lower_bound: None,
        }
    }

    pub fn with_genera(mut self, pg: i64, h01: i64) -> InvariantRecord {
        self.pg = Some(pg);
        self.h01 = Some(h01);
        self
    }

    /// Checks `χ = 1 − h01 + p_g` when both genera are present.
    pub fn validate(&self) -> Result<()> {
        if let (Some(pg), Some(h01)) = (self.pg, self.h01) {
            let expected = checked(1i64.checked_sub(h01).and_then(|v| v.checked_add(pg)), "genus relation")?;
            if expected != self.chi {
                return Err(Error::InvalidArgument(format!(
                    "chi = {} but 1 - h01 + pg = {expected}",
                    self.chi
                )));
            }
        }
        Ok(())
    }
}

fn checked(v: Option<i64>, what: &'static str) -> Result<i64> {
    v.ok_or(Error::Overflow(what))
}

fn require_prime(p: u64) -> Result<i64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    i64::try_from(p).map_err(|_| Error::Overflow("characteristic"))
}

/// Invariants of the total space `Y` of a degree-`p` torsor over `base`:
/// `χ(O_Y) = p·χ(O_X)`, `K_Y² = p·K_X²`, and `h⁰(ω_Y) ≥ χ(O_Y) − 1`.
pub fn torsor_invariants(base: &InvariantRecord, kind: TorsorKind) -> Result<InvariantRecord> {
    let p = require_prime(base.p)?;
    let chi = checked(base.chi.checked_mul(p), "torsor chi")?;
    let k2 = checked(base.k2.checked_mul(p), "torsor K^2")?;
    let mut out = InvariantRecord::new(base.p, chi, k2, SurfaceKind::TorsorTotalSpace(kind));
    out.pg_lower_bound = Some(checked(chi.checked_sub(1), "torsor pg bound")?);
    Ok(out)
}

/// Inverse of [`torsor_invariants`] on `(χ, K²)`: the invariants of the base.
pub fn descend_invariants(total: &InvariantRecord, kind: SurfaceKind) -> Result<InvariantRecord> {
    let p = require_prime(total.p)?;
    if total.chi % p != 0 || total.k2 % p != 0 {
        return Err(Error::InvalidArgument(format!(
            "chi = {} and K^2 = {} must both be divisible by {p}",
            total.chi, total.k2
        )));
    }
    Ok(InvariantRecord::new(total.p, total.chi / p, total.k2 / p, kind))
}

/// Second difference `χ(O) − 2χ(ω⁻¹) + χ(ω⁻²)`, which is `K²` on a smooth
/// surface by Riemann–Roch.
pub fn self_intersection_from_chis(chi0: i64, chi_neg1: i64, chi_neg2: i64) -> Result<i64> {
    let twice = checked(chi_neg1.checked_mul(2), "second difference")?;
    checked(
        chi0.checked_sub(twice).and_then(|v| v.checked_add(chi_neg2)),
        "second difference",
    )
}

/// Riemann–Roch: `χ(ω⁻ⁿ) = χ + n(n+1)K²/2`.
pub fn riemann_roch_anticanonical(chi: i64, k2: i64, n: i64) -> Result<i64> {
    let tri = checked(n.checked_mul(n + 1), "riemann-roch")? / 2;
    checked(tri.checked_mul(k2).and_then(|v| v.checked_add(chi)), "riemann-roch")
}

/// Noether-type inequality `K² ≥ 2h⁰(ω) − 4`, sharpened to `− 2` when the
/// canonical image is a curve.
pub fn noether_check(k2: i64, h0_omega: i64, image_is_curve: bool) -> bool {
    noether_with_threshold(k2, h0_omega, if image_is_curve { -2 } else { -4 })
}

/// `K² ≥ 2h⁰(ω) + threshold`, computed in `i128` so it cannot overflow.
pub fn noether_with_threshold(k2: i64, h0_omega: i64, threshold: i64) -> bool {
    k2 as i128 >= 2 * h0_omega as i128 + threshold as i128
}

/// Order of the étale fundamental group of a numerical Godeaux surface is
/// at most this.
pub const GODEAUX_COVER_BOUND: i64 = 6;

/// Primes are searched up to this bound; both constraints are linear in `p`
/// and fail for every larger prime.
const PRIME_SEARCH_LIMIT: u64 = 100;

/// Characteristics in which a non-classical numerical Godeaux surface of the
/// given kind can exist.
///
/// * singular: the torsor is étale of degree `p`, so `p ≤ 6`;
/// * supersingular: the `α_p`-torsor has `K² = p` and `h⁰(ω) ≥ p − 1`, so
///   Noether gives `p ≥ 2(p − 1) − 4`.
pub fn feasible_characteristics(kind: SurfaceKind) -> Result<Vec<u64>> {
    feasible_with_threshold(kind, -4)
}

/// As [`feasible_characteristics`], with the Noether threshold used in the
/// supersingular case made explicit.
pub fn feasible_with_threshold(kind: SurfaceKind, threshold: i64) -> Result<Vec<u64>> {
    let constraint: Box<dyn Fn(i64) -> bool> = match kind {
        SurfaceKind::Singular => Box::new(|p| p <= GODEAUX_COVER_BOUND),
        SurfaceKind::Supersingular => Box::new(move |p| noether_with_threshold(p, p - 1, threshold)),
        other => {
            return Err(Error::InvalidArgument(format!(
                "feasibility is only defined for singular and supersingular surfaces, not {other:?}"
            )))
        }
    };
    Ok((2..=PRIME_SEARCH_LIMIT)
        .filter(|&p| is_prime(p) && constraint(p as i64))
        .collect())
}

/// Largest `ℓ ≥ 0` with `p·ℓ ≤ cover_bound`.
pub fn torsion_order_bound(p: u64, cover_bound: i64) -> Result<i64> {
    let p = require_prime(p)?;
    if cover_bound < 1 {
        return Err(Error::InvalidArgument(format!("cover bound {cover_bound} < 1")));
    }
    Ok(cover_bound / p)
}

/// Topological numbers forced by Noether's formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiNumbers {
    pub c2: i64,
    pub b2: i64,
    pub b3: i64,
}

/// `c₂ = 12χ − K²`, `b₂ = c₂ − 2 + 2b₁`, `b₃ = b₁`.
pub fn betti_consistency(chi: i64, k2: i64, b1: i64) -> Result<BettiNumbers> {
    let c2 = checked(chi.checked_mul(12).and_then(|v| v.checked_sub(k2)), "c2")?;
    let b2 = checked(
        b1.checked_mul(2)
            .and_then(|v| v.checked_add(c2))
            .and_then(|v| v.checked_sub(2)),
        "b2",
    )?;
    Ok(BettiNumbers { c2, b2, b3: b1 })
}

/// A 3×3 Hodge-type grid indexed `grid[p][q]`, `0 ≤ p, q ≤ 2`.
pub type Grid = [[i64; 3]; 3];

/// Converts a grid as displayed (top row is `q = 2`, left column is `p = 0`)
/// to `grid[p][q]`.
pub fn grid_from_display(rows: &[[i64; 3]; 3]) -> Grid {
    let mut g = [[0; 3]; 3];
    for (r, row) in rows.iter().enumerate() {
        for (p, &v) in row.iter().enumerate() {
            g[p][2 - r] = v;
        }
    }
    g
}

/// For each `n` in `hdr`, whether `Σ_{p+q=n} grid[p][q] == hdr[n]`.
pub fn e1_degeneration_check(grid: &Grid, hdr: &BTreeMap<u32, i64>) -> BTreeMap<u32, bool> {
    hdr.iter()
        .map(|(&n, &dim)| {
            let sum: i64 = (0..3usize)
                .filter_map(|p| (n as usize).checked_sub(p).filter(|&q| q <= 2).map(|q| grid[p][q]))
                .sum();
            (n, sum == dim)
        })
        .collect()
}

/// Invariants of a smooth degree-`d` surface in `P³`:
/// `χ = 1 + C(d−1, 3)`, `K² = d(d−4)²`.
pub fn hypersurface_invariants(d: i64, p: u64) -> Result<InvariantRecord> {
    if d < 1 {
        return Err(Error::InvalidArgument(format!("degree {d} < 1")));
    }
    let binom = if d >= 4 {
        let n = d - 1;
        let prod = checked(n.checked_mul(n - 1).and_then(|v| v.checked_mul(n - 2)), "binomial")?;
        prod / 6
    } else {
        0
    };
    let chi = checked(binom.checked_add(1), "hypersurface chi")?;
    let k2 = checked(
        (d - 4).checked_mul(d - 4).and_then(|v| v.checked_mul(d)),
        "hypersurface K^2",
    )?;
    Ok(InvariantRecord::new(p, chi, k2, SurfaceKind::Classical))
}
