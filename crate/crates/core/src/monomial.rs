//! Monomials: sparse exponent maps and squarefree supports.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::vars::{Universe, VarId};

/// A monomial as a sparse exponent map. Zero exponents are never stored, so
/// the empty map is the monomial 1.
///
/// The ordering is graded first, then lexicographic on the expanded variable
/// word (canonical variable order, copies ascending); this is the canonical
/// generator order used everywhere for deterministic output.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<VarId, u32>,
}

impl Monomial {
    /// The monomial 1.
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        let mut exps = BTreeMap::new();
        if e > 0 {
            exps.insert(v, e);
        }
        Monomial { exps }
    }

    /// Build from `(variable, exponent)` pairs; repeated variables add up,
    /// zero exponents are dropped.
    pub fn from_exponents<I: IntoIterator<Item = (VarId, u32)>>(iter: I) -> Self {
        let mut exps: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in iter {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    /// Nonzero exponents in canonical variable order.
    pub fn exponents(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(v, &e)| other.exponent(*v) >= e)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            let slot = exps.entry(v).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial { exps }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Variables repeated by exponent, in canonical order (`a*b*d^2` yields
    /// a, b, d, d).
    pub fn word(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps
            .iter()
            .flat_map(|(&v, &e)| std::iter::repeat(v).take(e as usize))
    }

    /// Textual form: factors joined by `*`, exponents with `^` (`a^2*c*d`).
    pub fn render(&self, universe: &Universe) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .map(|(&v, &e)| {
                if e == 1 {
                    universe.var_name(v)
                } else {
                    format!("{}^{}", universe.var_name(v), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.word().cmp(other.word()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A squarefree monomial: a set of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SquarefreeMonomial {
    support: BTreeSet<VarId>,
}

impl SquarefreeMonomial {
    /// The monomial 1 (empty support).
    pub fn one() -> Self {
        SquarefreeMonomial::default()
    }

    pub fn from_vars<I: IntoIterator<Item = VarId>>(iter: I) -> Self {
        SquarefreeMonomial {
            support: iter.into_iter().collect(),
        }
    }

    pub fn support(&self) -> impl Iterator<Item = VarId> + '_ {
        self.support.iter().copied()
    }

    pub fn support_set(&self) -> &BTreeSet<VarId> {
        &self.support
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }

    pub fn is_one(&self) -> bool {
        self.support.is_empty()
    }

    pub fn contains(&self, v: VarId) -> bool {
        self.support.contains(&v)
    }

    pub fn divides(&self, other: &SquarefreeMonomial) -> bool {
        self.support.is_subset(&other.support)
    }

    /// Squarefree lcm: union of supports.
    pub fn union(&self, other: &SquarefreeMonomial) -> SquarefreeMonomial {
        SquarefreeMonomial {
            support: self.support.union(&other.support).copied().collect(),
        }
    }

    pub fn render(&self, universe: &Universe) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.support
            .iter()
            .map(|&v| universe.var_name(v))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for SquarefreeMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.support.iter().cmp(other.support.iter()))
    }
}

impl PartialOrd for SquarefreeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(base: usize) -> VarId {
        VarId::unpolarized(base)
    }

    #[test]
    fn divisibility_and_lcm() {
        let ab = Monomial::from_exponents([(v(0), 1), (v(1), 1)]);
        let a2b = Monomial::from_exponents([(v(0), 2), (v(1), 1)]);
        assert!(ab.divides(&a2b));
        assert!(!a2b.divides(&ab));
        assert_eq!(ab.lcm(&a2b), a2b);
        assert!(Monomial::one().divides(&ab));
        assert_eq!(ab.total_degree(), 2);
    }

    #[test]
    fn graded_word_order() {
        let u = Universe::unpolarized(4);
        // All of degree 4, from the canonical form of a worked example.
        let gens = [
            Monomial::from_exponents([(v(0), 1), (v(1), 1), (v(3), 2)]), // a*b*d^2
            Monomial::from_exponents([(v(1), 2), (v(2), 1), (v(3), 1)]), // b^2*c*d
            Monomial::from_exponents([(v(0), 1), (v(1), 1), (v(2), 1), (v(3), 1)]), // a*b*c*d
            Monomial::from_exponents([(v(0), 2), (v(2), 1), (v(3), 1)]), // a^2*c*d
            Monomial::from_exponents([(v(0), 1), (v(1), 1), (v(2), 2)]), // a*b*c^2
        ];
        let mut sorted = gens.to_vec();
        sorted.sort();
        let names: Vec<String> = sorted.iter().map(|m| m.render(&u)).collect();
        assert_eq!(names, ["a^2*c*d", "a*b*c^2", "a*b*c*d", "a*b*d^2", "b^2*c*d"]);
        // Lower degree always sorts first.
        let a = Monomial::var(v(0));
        assert!(a < gens[0]);
    }

    #[test]
    fn squarefree_render_and_order() {
        let u = Universe::polarized(vec![2, 2, 2, 2]);
        let a1b1 = SquarefreeMonomial::from_vars([VarId::new(0, 1), VarId::new(1, 1)]);
        let a1b2 = SquarefreeMonomial::from_vars([VarId::new(0, 1), VarId::new(1, 2)]);
        let a2b1 = SquarefreeMonomial::from_vars([VarId::new(0, 2), VarId::new(1, 1)]);
        assert_eq!(a1b1.render(&u), "a1*b1");
        assert!(a1b1 < a1b2);
        assert!(a1b2 < a2b1);
        assert_eq!(SquarefreeMonomial::one().render(&u), "1");
    }
}
