//! Randomized laws for the algebra engine, shared by the property tests and
//! the acceptance run. Each law takes a case count and reports the shrunk
//! counterexample on failure.

use charp_core::groebner::{buchberger, reduce, s_polynomial, Budget, IdealBasis};
use charp_core::poly::Chart;
use charp_core::suite::Construction;
use charp_core::{Derivation, Monomial, MonomialOrder, Polynomial, Ring, RingRef};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

pub const CASES: u32 = 1000;

const P: u64 = 5;

pub type Law = fn(u32) -> Result<(), String>;

pub const LAWS: [(&str, Law); 9] = [
    ("ring axioms", ring_axioms),
    ("print/parse round trip", printed_polynomials_parse_back),
    ("Leibniz rule", leibniz_rule),
    (
        "Frobenius vs repeated multiplication",
        frobenius_matches_repeated_multiplication,
    ),
    ("reduction idempotence", reduction_is_idempotent),
    (
        "Buchberger S-pairs reduce to zero",
        buchberger_output_passes_the_criterion,
    ),
    (
        "kernel closed under sums and products",
        kernels_are_closed_under_sums_and_products,
    ),
    (
        "chart derivation compatibility",
        chart_derivation_matches_homogeneous_one,
    ),
    (
        "invariants vanish on every chart",
        invariants_stay_invariant_on_every_chart,
    ),
];

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn ring(n: usize) -> RingRef {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    Ring::new(&names, P).unwrap()
}

type Terms = Vec<(Vec<u32>, i64)>;

fn terms(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -7i64..7), 0..=max_terms)
}

fn build(r: &RingRef, t: &Terms) -> Polynomial {
    Polynomial::from_terms(r, t.iter().map(|(e, c)| (Monomial::from_exponents(e), *c)))
}

/// Random coefficients on random monomials of exactly `degree`.
fn homogeneous(nvars: usize, degree: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0..=degree, nvars - 1), -7i64..7), 0..=max_terms).prop_map(
        move |raw| {
            raw.into_iter()
                .map(|(head, c)| {
                    // spread `degree` over the variables, the last one takes the rest
                    let mut left = degree;
                    let mut e: Vec<u32> = head
                        .into_iter()
                        .map(|x| {
                            let take = x.min(left);
                            left -= take;
                            take
                        })
                        .collect();
                    e.push(left);
                    (e, c)
                })
                .collect()
        },
    )
}

fn linear_images(nvars: usize) -> impl Strategy<Value = Vec<Terms>> {
    prop::collection::vec(homogeneous(nvars, 1, 3), nvars)
}

fn derivation(r: &RingRef, images: &[Terms]) -> Derivation {
    Derivation::new(r, images.iter().map(|t| build(r, t)).collect()).unwrap()
}

pub fn ring_axioms(cases: u32) -> Result<(), String> {
    let s = (terms(3, 3, 5), terms(3, 3, 5), terms(3, 3, 5));
    runner(cases)
        .run(&s, |(a, b, c)| {
            let r = ring(3);
            let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
            let zero = Polynomial::zero(&r);
            let one = Polynomial::one(&r);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &zero, a.clone());
            prop_assert_eq!(&a * &one, a.clone());
            #[allow(clippy::eq_op)]
            let self_difference = &a - &a;
            prop_assert!(self_difference.is_zero());
            prop_assert_eq!(&a + &(-&a), zero);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn printed_polynomials_parse_back(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&terms(4, 4, 6), |a| {
            let r = ring(4);
            let f = build(&r, &a);
            prop_assert_eq!(Polynomial::parse(&r, &f.to_string()).unwrap(), f);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn leibniz_rule(cases: u32) -> Result<(), String> {
    let s = (prop::collection::vec(terms(3, 2, 3), 3), terms(3, 3, 4), terms(3, 3, 4));
    runner(cases)
        .run(&s, |(images, f, g)| {
            let r = ring(3);
            let d = derivation(&r, &images);
            let (f, g) = (build(&r, &f), build(&r, &g));
            let lhs = d.apply(&(&f * &g)).unwrap();
            let rhs = &(&d.apply(&f).unwrap() * &g) + &(&f * &d.apply(&g).unwrap());
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(
                d.apply(&(&f + &g)).unwrap(),
                &d.apply(&f).unwrap() + &d.apply(&g).unwrap()
            );
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn frobenius_matches_repeated_multiplication(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(terms(3, 3, 4), terms(3, 3, 4)), |(a, b)| {
            let r = ring(3);
            let (a, b) = (build(&r, &a), build(&r, &b));
            let p = P as u32;
            let naive = (0..p).fold(Polynomial::one(&r), |acc, _| &acc * &a);
            prop_assert_eq!(a.frobenius_power(), naive.clone());
            prop_assert_eq!(a.pow(p), naive);
            prop_assert_eq!((&a + &b).frobenius_power(), &a.frobenius_power() + &b.frobenius_power());
            // p-th powers are constants for every derivation
            prop_assert!((0..3).all(|i| a.frobenius_power().derivative(i).is_zero()));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn reduction_is_idempotent(cases: u32) -> Result<(), String> {
    let s = (terms(3, 4, 6), prop::collection::vec(terms(3, 2, 3), 1..4));
    runner(cases)
        .run(&s, |(f, divisors)| {
            let r = ring(3);
            let f = build(&r, &f);
            let divs: Vec<Polynomial> = divisors.iter().map(|t| build(&r, t)).collect();
            for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
                let once = reduce(&f, &divs, order).unwrap();
                let twice = reduce(&once, &divs, order).unwrap();
                prop_assert_eq!(once, twice);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn buchberger_output_passes_the_criterion(cases: u32) -> Result<(), String> {
    let s = (prop::collection::vec(terms(3, 2, 3), 1..4), any::<bool>());
    runner(cases)
        .run(&s, |(gens, lex)| {
            let r = ring(3);
            let order = if lex {
                MonomialOrder::Lex
            } else {
                MonomialOrder::DegRevLex
            };
            let ideal = IdealBasis::new(&r, gens.iter().map(|t| build(&r, t)).collect()).unwrap();
            let gb = match buchberger(&ideal, order, Budget::new(5_000).unwrap()) {
                Ok(gb) => gb,
                Err(e) => {
                    prop_assert!(e.is_budget());
                    return Ok(());
                }
            };
            prop_assert!(gb.satisfies_buchberger_criterion());
            let basis = gb.polynomials();
            for i in 0..basis.len() {
                for j in i + 1..basis.len() {
                    prop_assert!(gb.normal_form(&s_polynomial(&basis[i], &basis[j])).unwrap().is_zero());
                }
            }
            for g in ideal.generators() {
                prop_assert!(gb.contains(g).unwrap());
            }
            // normal forms are fixed points of reduction by the basis
            let f = &ideal
                .generators()
                .first()
                .cloned()
                .unwrap_or_else(|| Polynomial::zero(&r))
                + &Polynomial::variable(&r, 0);
            let nf = gb.normal_form(&f).unwrap();
            prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn kernels_are_closed_under_sums_and_products(cases: u32) -> Result<(), String> {
    let s = (
        linear_images(4),
        1u32..3,
        1u32..3,
        prop::collection::vec(0u32..5, 20),
        prop::collection::vec(0u32..5, 20),
    );
    runner(cases)
        .run(&s, |(images, d1, d2, c1, c2)| {
            let r = ring(4);
            let d = derivation(&r, &images);
            let combo = |deg: u32, coeffs: &[u32]| {
                let basis = d.graded_kernel(deg).unwrap();
                basis
                    .iter()
                    .zip(coeffs)
                    .fold(Polynomial::zero(&r), |acc, (b, &c)| &acc + &b.scale(c))
            };
            let f = combo(d1, &c1);
            let g = combo(d2, &c2);
            let h = combo(d1, &c2);
            prop_assert!(d.apply(&f).unwrap().is_zero());
            prop_assert!(d.apply(&(&f * &g)).unwrap().is_zero());
            prop_assert!(d.apply(&(&f + &h)).unwrap().is_zero());
            prop_assert!(d.apply(&f.frobenius_power()).unwrap().is_zero());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn chart_derivation_matches_homogeneous_one(cases: u32) -> Result<(), String> {
    let s = (linear_images(4), homogeneous(4, 3, 5), 0usize..4);
    runner(cases)
        .run(&s, |(images, h, index)| {
            let r = ring(4);
            let d = derivation(&r, &images);
            let h = build(&r, &h);
            let degree = 3;
            let chart = Chart::standard(&r, index).unwrap();
            let local = d.chart_transform(&chart).unwrap();
            // D(h / x_i^d) = δ(h)/x_i^d − d · (h/x_i^d) · δ(x_i)/x_i
            let dh = chart.dehomogenize(&d.apply(&h).unwrap()).unwrap();
            let hh = chart.dehomogenize(&h).unwrap();
            let dxi = chart.dehomogenize(&d.images()[index]).unwrap();
            let expected = &dh - &(&hh * &dxi).scale(degree);
            prop_assert_eq!(local.apply(&hh).unwrap(), expected);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn invariants_stay_invariant_on_every_chart(cases: u32) -> Result<(), String> {
    let c = Construction::builtin();
    let basis = c.derivation.graded_kernel(5).unwrap();
    runner(cases)
        .run(&prop::collection::vec(0u32..5, basis.len()), |coeffs| {
            let q = basis
                .iter()
                .zip(&coeffs)
                .fold(Polynomial::zero(&c.ring), |acc, (b, &k)| &acc + &b.scale(k));
            prop_assert!(c.derivation.apply(&q).unwrap().is_zero());
            for chart in &c.charts {
                let local = chart.chart.dehomogenize(&q).unwrap();
                prop_assert!(chart.displayed.apply(&local).unwrap().is_zero());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}
