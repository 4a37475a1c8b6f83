//! Inputs shared by the engine benchmarks.

use charp_core::suite::Construction;
use charp_core::{IdealBasis, Polynomial, Ring};

/// Fixed-locus minors of the bundled vector field.
pub fn fixed_locus_minors() -> IdealBasis {
    Construction::builtin().derivation.fixed_locus_ideal()
}

/// Cyclic-4 over F_p, a standard Gröbner stress input.
pub fn cyclic4(p: u64) -> IdealBasis {
    let r = Ring::new(&["a", "b", "c", "d"], p).expect("ring");
    let gens = [
        "a + b + c + d",
        "a*b + b*c + c*d + d*a",
        "a*b*c + b*c*d + c*d*a + d*a*b",
        "a*b*c*d - 1",
    ]
    .iter()
    .map(|s| Polynomial::parse(&r, s).expect("parses"))
    .collect();
    IdealBasis::new(&r, gens).expect("ideal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_build() {
        assert_eq!(fixed_locus_minors().len(), 6);
        assert_eq!(cyclic4(5).len(), 4);
    }
}
