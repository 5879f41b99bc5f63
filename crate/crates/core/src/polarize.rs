//! Polarization: turn monomials and monomial ideals into squarefree ones
//! over copy-indexed variables, and the depolarization substitution for
//! round-trip checks.

use crate::ideal::{MonomialIdeal, SquarefreeIdeal};
use crate::monomial::{Monomial, SquarefreeMonomial};
use crate::vars::{Universe, VarId};

/// Replace each factor `x^e` by `x_1 * x_2 * ... * x_e`. The input must be
/// over unpolarized variables (all copy indices 1); total degree is
/// preserved.
pub fn polarize_monomial(m: &Monomial) -> SquarefreeMonomial {
    assert!(
        m.exponents().all(|(v, _)| v.copy() == 1),
        "polarization expects unpolarized input"
    );
    SquarefreeMonomial::from_vars(
        m.exponents()
            .flat_map(|(v, e)| (1..=e).map(move |copy| VarId::new(v.base(), copy))),
    )
}

/// Polarize every minimal generator. The polarized universe has, for each
/// base variable, as many copies as its maximum exponent over the
/// generators.
pub fn polarize_ideal(ideal: &MonomialIdeal) -> SquarefreeIdeal {
    let mut copy_counts = vec![0u32; ideal.universe().base_count()];
    for gen in ideal.generators() {
        for (v, e) in gen.exponents() {
            copy_counts[v.base()] = copy_counts[v.base()].max(e);
        }
    }
    SquarefreeIdeal::new(
        Universe::polarized(copy_counts),
        ideal.generators().iter().map(polarize_monomial),
    )
}

/// Substitute every copy `x_i` back to `x`: the exponent of a base variable
/// is the number of its copies in the support.
pub fn depolarize_monomial(sm: &SquarefreeMonomial) -> Monomial {
    Monomial::from_exponents(sm.support().map(|v| (VarId::unpolarized(v.base()), 1)))
}
