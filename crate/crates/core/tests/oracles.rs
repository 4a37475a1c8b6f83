//! Values computed independently (by hand or with a general-purpose CAS) and
//! pinned here.

use charp_core::groebner::{
    buchberger, ideal_member, jacobian_smoothness, radical_member, ring_map_kernel, Budget, IdealBasis, Verdict,
};
use charp_core::suite::fixture::PRESENTATION_VARIABLES;
use charp_core::suite::Construction;
use charp_core::{Derivation, MonomialOrder, Polynomial, Ring};

fn construction() -> Construction {
    Construction::builtin()
}

#[test]
fn homogeneous_table_entries() {
    let c = construction();
    let want = [
        ("a", "x1^2*x3^3 - x1*x2^2*x3^2 - x2^4*x3"),
        (
            "b",
            "-x0*x1^2*x3^2 + x0*x1*x2^2*x3 + x0*x2^4 + x1^3*x2*x3 + 2*x1^2*x2^3",
        ),
        ("c", "2*x0^2*x1*x3^2 - x0^2*x2^2*x3 + x0*x1^2*x2*x3 + x1^4*x3"),
        (
            "d",
            "-x0^3*x3^2 - 2*x0^2*x1*x2*x3 - x0^2*x2^3 - x0*x1^3*x3 + x0*x1^2*x2^2 + x1^4*x2",
        ),
    ];
    for (name, text) in want {
        let got = c.row(name).unwrap().homogeneous().unwrap();
        assert_eq!(got, Polynomial::parse(&c.ring, text).unwrap(), "{name}");
    }
}

#[test]
fn invariant_dimensions_by_degree() {
    let c = construction();
    let dims: Vec<usize> = (0..=7).map(|d| c.derivation.graded_kernel(d).unwrap().len()).collect();
    assert_eq!(dims, [1, 1, 2, 4, 7, 12, 17, 24]);
    let linear = c.derivation.graded_kernel(1).unwrap();
    assert_eq!(linear, vec![Polynomial::parse(&c.ring, "x3").unwrap()]);
}

#[test]
fn zero_derivation_kernel_is_everything() {
    let r = Ring::new(&["x0", "x1", "x2", "x3"], 5).unwrap();
    assert_eq!(Derivation::zero(&r).graded_kernel(2).unwrap().len(), 10);
}

#[test]
fn fixed_point_is_not_empty() {
    let c = construction();
    let ideal = c.derivation.fixed_locus_ideal();
    let x0 = Polynomial::variable(&c.ring, 0);
    assert!(!radical_member(&x0, &ideal, Budget::default()).unwrap());
}

/// The degree-5 invariants have no common zero on P^3: every variable lies in
/// the radical of the ideal they generate.
#[test]
fn quintic_invariants_have_no_base_points() {
    let c = construction();
    let basis = c.derivation.graded_kernel(5).unwrap();
    let ideal = IdealBasis::new(&c.ring, basis).unwrap();
    for i in 0..4 {
        let x = Polynomial::variable(&c.ring, i);
        assert!(radical_member(&x, &ideal, Budget::default()).unwrap(), "x{i}");
    }
    assert!(!buchberger(&ideal, MonomialOrder::DegRevLex, Budget::default()).unwrap().is_unit_ideal());
}

#[test]
fn kernel_for_b_by_elimination() {
    let c = construction();
    let chart = c.chart(3).unwrap().chart.affine_ring().clone();
    let mut images: Vec<Polynomial> = (0..3).map(|i| Polynomial::variable(&chart, i).pow(5)).collect();
    images.push(c.row("f").unwrap().affine.clone());
    images.push(c.row("g").unwrap().affine.clone());
    let k = ring_map_kernel(&PRESENTATION_VARIABLES, &images, Budget::default()).unwrap();
    let want = IdealBasis::parse(k.ring(), "t^5 + 2*w^3 + 4*v*w + u\ns^5 + 3*w^2 + 4*v").unwrap();
    assert_eq!(k, want);
    let cert = jacobian_smoothness(&k, 2, None, Budget::default()).unwrap();
    assert_eq!(cert.verdict, Verdict::Smooth);
    assert!(cert.unit.unwrap().verify());
}

/// The certificate used by the suite for the x2 chart avoids elimination;
/// here the elimination is done anyway (lex on the graph ideal, which is far
/// faster than the block order for this map) and must agree with it.
#[test]
fn kernel_for_c_tilde_by_elimination_matches_presentation() {
    let c = construction();
    let pres = c.presentation("Ct").unwrap();
    let chart = c.chart(pres.chart).unwrap().chart.affine_ring().clone();
    let mut names: Vec<String> = chart.names().to_vec();
    names.extend(PRESENTATION_VARIABLES.iter().map(|s| s.to_string()));
    let graph_ring = Ring::with_order_new(&names, 5, MonomialOrder::Lex).unwrap();
    let embed: Vec<usize> = (0..3).collect();
    let mut gens = Vec::new();
    for i in 0..3 {
        let x = Polynomial::variable(&graph_ring, i);
        gens.push(&Polynomial::variable(&graph_ring, 3 + i) - &x.pow(5));
    }
    for (k, e) in pres.elements.iter().enumerate() {
        let img = c.row(e).unwrap().affine.rename_into(&graph_ring, &embed).unwrap();
        gens.push(&Polynomial::variable(&graph_ring, 6 + k) - &img);
    }
    let graph = IdealBasis::new(&graph_ring, gens).unwrap();
    let gb = buchberger(&graph, MonomialOrder::Lex, Budget::default()).unwrap();
    let back: Vec<usize> = (0..8usize).map(|j| j.saturating_sub(3)).collect();
    let kernel: Vec<Polynomial> = gb
        .polynomials()
        .iter()
        .filter(|g| g.support().iter().all(|&j| j >= 3))
        .map(|g| g.rename_into(&pres.ring, &back).unwrap())
        .collect();
    assert!(!kernel.is_empty());
    let k = IdealBasis::new(&pres.ring, kernel).unwrap();
    let ci = IdealBasis::new(&pres.ring, pres.complete_intersection.clone()).unwrap();
    for (a, b) in [(&k, &ci), (&ci, &k)] {
        for g in a.generators() {
            let m = ideal_member(g, b, MonomialOrder::DegRevLex, Budget::default(), false).unwrap();
            assert!(m.member, "{g}");
        }
    }
}
