//! Alexander duality for squarefree monomial ideals.
//!
//! Two routes are provided: generic minimal-transversal enumeration
//! ([`alexander_dual`]), and the closed-form generator description for
//! unmixed height-two pairwise ideals ([`dual_generators_direct`]). The two
//! must agree; tests exercise that agreement exhaustively at desk scale.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::{PairExponents, SquarefreeIdeal};
use crate::monomial::SquarefreeMonomial;
use crate::vars::{Universe, VarId};

/// Default ceiling on intermediate partial-transversal sets.
pub const DEFAULT_TRANSVERSAL_CAP: usize = 200_000;

/// The Alexander dual: the intersection of the prime ideals spanned by each
/// generator's support, i.e. the ideal of minimal transversals (minimal
/// hitting sets) of the generator supports.
///
/// The unit ideal dualizes to the zero ideal and the zero ideal to the unit
/// ideal; both fall out of the enumeration (no set hits an empty support; the
/// empty set hits an empty family).
pub fn alexander_dual(ideal: &SquarefreeIdeal) -> Result<SquarefreeIdeal> {
    alexander_dual_with_cap(ideal, DEFAULT_TRANSVERSAL_CAP)
}

/// [`alexander_dual`] with an explicit cap on intermediate partial
/// transversals; exceeding it returns [`Error::ResourceLimit`].
pub fn alexander_dual_with_cap(ideal: &SquarefreeIdeal, cap: usize) -> Result<SquarefreeIdeal> {
    let supports: Vec<&BTreeSet<VarId>> = ideal
        .generators()
        .iter()
        .map(SquarefreeMonomial::support_set)
        .collect();
    let transversals = minimal_transversals(&supports, cap)?;
    Ok(SquarefreeIdeal::new(
        ideal.universe().clone(),
        transversals
            .into_iter()
            .map(SquarefreeMonomial::from_vars),
    ))
}

/// Minimal hitting sets of a family of vertex sets, by incremental
/// distribution: extend each partial transversal by each element of the next
/// support, minimalizing after every step.
fn minimal_transversals(
    supports: &[&BTreeSet<VarId>],
    cap: usize,
) -> Result<Vec<BTreeSet<VarId>>> {
    let mut partial: Vec<BTreeSet<VarId>> = vec![BTreeSet::new()];
    for support in supports {
        if support.is_empty() {
            // Nothing hits the empty set: the dual of the unit ideal is zero.
            return Ok(Vec::new());
        }
        let mut next: Vec<BTreeSet<VarId>> = Vec::new();
        for t in &partial {
            if t.iter().any(|v| support.contains(v)) {
                next.push(t.clone());
            } else {
                for &x in support.iter() {
                    let mut extended = t.clone();
                    extended.insert(x);
                    next.push(extended);
                }
            }
        }
        if next.len() > cap {
            return Err(Error::ResourceLimit {
                what: "transversal enumeration",
                limit: cap,
                needed: next.len(),
            });
        }
        partial = minimal_sets(next);
    }
    Ok(partial)
}

/// Keep only inclusion-minimal sets.
fn minimal_sets(sets: Vec<BTreeSet<VarId>>) -> Vec<BTreeSet<VarId>> {
    let mut distinct: Vec<BTreeSet<VarId>> = Vec::new();
    for s in sets {
        if !distinct.contains(&s) {
            distinct.push(s);
        }
    }
    distinct
        .iter()
        .filter(|s| {
            !distinct
                .iter()
                .any(|t| t.len() < s.len() && t.is_subset(s) || (t.len() == s.len() && false))
        })
        .cloned()
        .collect()
}

/// The closed-form Alexander dual of the polarization of a pairwise ideal:
/// for every pair `s < t` with exponent `p >= 1`, the generators
/// `x_{s,i} * x_{t,j}` for all `i, j >= 1` with `i + j <= p + 1`. Pairs with
/// exponent 0 contribute nothing. The universe gives base variable `s` as
/// many copies as the largest exponent on a pair through `s`.
pub fn dual_generators_direct(pairs: &PairExponents) -> SquarefreeIdeal {
    let n = pairs.n();
    let mut copy_counts = vec![0u32; n];
    for (i, j, p) in pairs.pairs() {
        copy_counts[i] = copy_counts[i].max(p);
        copy_counts[j] = copy_counts[j].max(p);
    }
    let mut gens = Vec::new();
    for (s, t, p) in pairs.pairs() {
        for i in 1..=p {
            for j in 1..=(p + 1 - i) {
                gens.push(SquarefreeMonomial::from_vars([
                    VarId::new(s, i),
                    VarId::new(t, j),
                ]));
            }
        }
    }
    SquarefreeIdeal::new(Universe::polarized(copy_counts), gens)
}
