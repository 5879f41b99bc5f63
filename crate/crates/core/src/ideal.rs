//! Monomial ideals over a declared variable universe, with the constructors
//! for tetrahedral and general pairwise ideals.
//!
//! Ideals always hold their minimal generating set in canonical order
//! (graded, then lexicographic by the canonical variable order, copies
//! ascending), so ideal equality is plain structural equality. The zero
//! ideal is the empty generator set; the unit ideal is the single generator 1.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, SquarefreeMonomial};
use crate::vars::{Universe, VarId};

/// Largest exponent accepted from external input.
pub const MAX_EXPONENT: u32 = 64;

/// Remove every monomial that is divisible by another element of the set.
///
/// The result is pairwise non-dividing, generates the same ideal, and comes
/// back sorted in canonical order. Duplicates collapse first, so ties do not
/// delete both copies.
pub fn minimalize<I: IntoIterator<Item = Monomial>>(gens: I) -> Vec<Monomial> {
    let distinct: BTreeSet<Monomial> = gens.into_iter().collect();
    distinct
        .iter()
        .filter(|m| !distinct.iter().any(|d| d != *m && d.divides(m)))
        .cloned()
        .collect()
}

fn minimalize_squarefree<I: IntoIterator<Item = SquarefreeMonomial>>(
    gens: I,
) -> Vec<SquarefreeMonomial> {
    let distinct: BTreeSet<SquarefreeMonomial> = gens.into_iter().collect();
    distinct
        .iter()
        .filter(|m| !distinct.iter().any(|d| d != *m && d.divides(m)))
        .cloned()
        .collect()
}

/// A monomial ideal: a variable universe plus its minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    universe: Universe,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Build an ideal from any generating set; the set is minimalized and
    /// canonically sorted.
    pub fn new<I: IntoIterator<Item = Monomial>>(universe: Universe, gens: I) -> Self {
        let gens = minimalize(gens);
        debug_assert!(gens
            .iter()
            .flat_map(|m| m.exponents())
            .all(|(v, _)| universe.contains(v)));
        MonomialIdeal { universe, gens }
    }

    pub fn zero(universe: Universe) -> Self {
        MonomialIdeal {
            universe,
            gens: Vec::new(),
        }
    }

    pub fn unit(universe: Universe) -> Self {
        MonomialIdeal {
            universe,
            gens: vec![Monomial::one()],
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Intersection via the lcm construction: the intersection of two
    /// monomial ideals is generated by the pairwise lcms of their generators.
    /// Both ideals must live in the same universe.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(
            self.universe, other.universe,
            "ideal intersection requires a common universe"
        );
        let products = self
            .gens
            .iter()
            .flat_map(|f| other.gens.iter().map(move |g| f.lcm(g)));
        MonomialIdeal::new(self.universe.clone(), products)
    }

    /// `(g1, g2, ...)`; the zero ideal renders as `(0)`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(&self.universe)).collect();
        format!("({})", parts.join(", "))
    }
}

/// A squarefree monomial ideal, typically over a polarized universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    universe: Universe,
    gens: Vec<SquarefreeMonomial>,
}

impl SquarefreeIdeal {
    pub fn new<I: IntoIterator<Item = SquarefreeMonomial>>(universe: Universe, gens: I) -> Self {
        let gens = minimalize_squarefree(gens);
        debug_assert!(gens
            .iter()
            .flat_map(|m| m.support())
            .all(|v| universe.contains(v)));
        SquarefreeIdeal { universe, gens }
    }

    pub fn zero(universe: Universe) -> Self {
        SquarefreeIdeal {
            universe,
            gens: Vec::new(),
        }
    }

    pub fn unit(universe: Universe) -> Self {
        SquarefreeIdeal {
            universe,
            gens: vec![SquarefreeMonomial::one()],
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Re-home the ideal in a larger universe (same base variables, copy
    /// counts at least as big).
    pub fn embed_in(&self, universe: &Universe) -> SquarefreeIdeal {
        assert!(
            self.gens
                .iter()
                .flat_map(|m| m.support())
                .all(|v| universe.contains(v)),
            "target universe must contain every generator variable"
        );
        SquarefreeIdeal {
            universe: universe.clone(),
            gens: self.gens.clone(),
        }
    }

    /// Intersection via squarefree lcms (support unions).
    pub fn intersect(&self, other: &SquarefreeIdeal) -> SquarefreeIdeal {
        assert_eq!(
            self.universe, other.universe,
            "ideal intersection requires a common universe"
        );
        let products = self
            .gens
            .iter()
            .flat_map(|f| other.gens.iter().map(move |g| f.union(g)));
        SquarefreeIdeal::new(self.universe.clone(), products)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(&self.universe)).collect();
        format!("({})", parts.join(", "))
    }
}

/// The power of a height-two prime: `(u, v)^p`, generated by
/// `u^t * v^(p-t)` for `0 <= t <= p`. The zeroth power is the unit ideal.
pub fn pair_prime_power(
    universe: &Universe,
    u: VarId,
    v: VarId,
    p: u32,
) -> Result<MonomialIdeal> {
    if u == v {
        return Err(Error::InvalidPrimePair);
    }
    if p == 0 {
        return Ok(MonomialIdeal::unit(universe.clone()));
    }
    let gens = (0..=p).map(|t| Monomial::var_pow(u, t).mul(&Monomial::var_pow(v, p - t)));
    Ok(MonomialIdeal::new(universe.clone(), gens))
}

/// The six exponents `(p1, ..., p6)` of a tetrahedral curve.
///
/// Pairing semantics: p1 <-> (a,b), p2 <-> (a,c), p3 <-> (a,d),
/// p4 <-> (b,c), p5 <-> (b,d), p6 <-> (c,d). Opposite tetrahedron edges pair
/// up as (p1,p6), (p2,p5), (p3,p4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub [u32; 6]);

/// Which base-variable pair each exponent slot refers to.
pub const EDGE_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl ExponentVector {
    pub fn new(p: [u32; 6]) -> Self {
        ExponentVector(p)
    }

    pub fn entries(&self) -> [u32; 6] {
        self.0
    }

    /// The three opposite-edge pair sums `[p1+p6, p2+p5, p3+p4]`.
    pub fn opposite_pair_sums(&self) -> [u32; 3] {
        let p = &self.0;
        [p[0] + p[5], p[1] + p[4], p[2] + p[3]]
    }

    /// Whether `p1+p6` is maximal among the three opposite-edge pair sums.
    pub fn is_normalized(&self) -> bool {
        let [s1, s2, s3] = self.opposite_pair_sums();
        s1 >= s2 && s1 >= s3
    }

    /// The same exponents as a symmetric 4x4 pair matrix.
    pub fn as_pair_exponents(&self) -> PairExponents {
        let mut entries = vec![vec![0u32; 4]; 4];
        for (slot, &(i, j)) in EDGE_PAIRS.iter().enumerate() {
            entries[i][j] = self.0[slot];
            entries[j][i] = self.0[slot];
        }
        PairExponents::new(entries).expect("edge pairs form a valid matrix")
    }

    /// Relabel base variables: entry for pair `(i, j)` of the result is the
    /// entry for `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: [usize; 4]) -> ExponentVector {
        let pairs = self.as_pair_exponents();
        let mut out = [0u32; 6];
        for (slot, &(i, j)) in EDGE_PAIRS.iter().enumerate() {
            out[slot] = pairs.get(perm[i], perm[j]);
        }
        ExponentVector(out)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.0;
        write!(
            f,
            "({},{},{},{},{},{})",
            p[0], p[1], p[2], p[3], p[4], p[5]
        )
    }
}

impl FromStr for ExponentVector {
    type Err = Error;

    /// Parses six comma-separated nonnegative integers, each at most
    /// [`MAX_EXPONENT`].
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 6 {
            return Err(Error::Parse(format!(
                "expected six comma-separated exponents, got {}",
                parts.len()
            )));
        }
        let mut p = [0u32; 6];
        for (slot, part) in parts.iter().enumerate() {
            let value: u32 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid exponent {:?}", part.trim())))?;
            if value > MAX_EXPONENT {
                return Err(Error::Parse(format!(
                    "exponent {} exceeds the supported maximum {}",
                    value, MAX_EXPONENT
                )));
            }
            p[slot] = value;
        }
        Ok(ExponentVector(p))
    }
}

/// A symmetric n x n matrix of pair exponents with zero diagonal; entry
/// `(i, j)` is the power of the prime `(x_i, x_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairExponents {
    n: usize,
    entries: Vec<Vec<u32>>,
}

impl PairExponents {
    pub fn new(entries: Vec<Vec<u32>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidPairMatrix(format!(
                    "row {} has length {}, expected {}",
                    i,
                    row.len(),
                    n
                )));
            }
            if entries[i][i] != 0 {
                return Err(Error::InvalidPairMatrix(format!(
                    "diagonal entry ({i},{i}) must be zero"
                )));
            }
            for j in 0..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::InvalidPairMatrix(format!(
                        "entries ({i},{j}) and ({j},{i}) differ"
                    )));
                }
                if entries[i][j] > MAX_EXPONENT {
                    return Err(Error::InvalidPairMatrix(format!(
                        "entry ({i},{j}) exceeds the supported maximum {MAX_EXPONENT}"
                    )));
                }
            }
        }
        Ok(PairExponents { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    /// Pairs `i < j` in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |i| (i + 1..self.n).map(move |j| (i, j, self.entries[i][j])))
    }
}

/// The ideal of the tetrahedral curve with exponent vector `p`: the
/// intersection of the six pair-prime powers on `a, b, c, d`, computed
/// left-to-right with minimalization after every step.
pub fn tetrahedral_ideal(p: &ExponentVector) -> MonomialIdeal {
    let universe = Universe::unpolarized(4);
    let mut ideal = MonomialIdeal::unit(universe.clone());
    for (slot, &(i, j)) in EDGE_PAIRS.iter().enumerate() {
        let component = pair_prime_power(
            &universe,
            VarId::unpolarized(i),
            VarId::unpolarized(j),
            p.0[slot],
        )
        .expect("distinct base variables");
        ideal = ideal.intersect(&component);
    }
    ideal
}

/// The general unmixed height-two monomial ideal: the intersection of
/// `(x_i, x_j)^{P[i][j]}` over all pairs `i < j`. Components with exponent 0
/// contribute the unit ideal.
pub fn pairwise_ideal(p: &PairExponents) -> MonomialIdeal {
    let universe = Universe::unpolarized(p.n());
    let mut ideal = MonomialIdeal::unit(universe.clone());
    for (i, j, power) in p.pairs() {
        let component = pair_prime_power(
            &universe,
            VarId::unpolarized(i),
            VarId::unpolarized(j),
            power,
        )
        .expect("distinct base variables");
        ideal = ideal.intersect(&component);
    }
    ideal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(base: usize) -> VarId {
        VarId::unpolarized(base)
    }

    fn m(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_exponents(pairs.iter().map(|&(b, e)| (v(b), e)))
    }

    #[test]
    fn minimalize_drops_multiples() {
        let a = m(&[(0, 1)]);
        let ab = m(&[(0, 1), (1, 1)]);
        assert_eq!(minimalize([a.clone(), ab]), vec![a]);
        assert_eq!(minimalize(Vec::<Monomial>::new()), Vec::<Monomial>::new());

        // a^2*b*c*d is divisible by a*b*c*d.
        let abd2 = m(&[(0, 1), (1, 1), (3, 2)]);
        let b2cd = m(&[(1, 2), (2, 1), (3, 1)]);
        let abcd = m(&[(0, 1), (1, 1), (2, 1), (3, 1)]);
        let a2bcd = m(&[(0, 2), (1, 1), (2, 1), (3, 1)]);
        let out = minimalize([abd2.clone(), b2cd.clone(), abcd.clone(), a2bcd]);
        assert_eq!(out.len(), 3);
        assert!(out.contains(&abd2) && out.contains(&b2cd) && out.contains(&abcd));
    }

    #[test]
    fn minimalize_is_idempotent() {
        let gens = [
            m(&[(0, 2)]),
            m(&[(0, 1), (1, 1)]),
            m(&[(1, 3)]),
            m(&[(0, 2), (1, 1)]),
        ];
        let once = minimalize(gens.to_vec());
        let twice = minimalize(once.clone());
        assert_eq!(once, twice);
    }

    #[test]
    fn intersect_disjoint_primes() {
        let u = Universe::unpolarized(4);
        let ab = MonomialIdeal::new(u.clone(), [m(&[(0, 1)]), m(&[(1, 1)])]);
        let cd = MonomialIdeal::new(u.clone(), [m(&[(2, 1)]), m(&[(3, 1)])]);
        let meet = ab.intersect(&cd);
        assert_eq!(meet.render(), "(a*c, a*d, b*c, b*d)");
    }

    #[test]
    fn intersect_unit_is_identity() {
        let u = Universe::unpolarized(4);
        let i = MonomialIdeal::new(u.clone(), [m(&[(0, 2)]), m(&[(1, 1), (2, 1)])]);
        assert_eq!(i.intersect(&MonomialIdeal::unit(u.clone())), i);
        assert_eq!(MonomialIdeal::unit(u).intersect(&i), i);
    }

    #[test]
    fn pair_prime_power_examples() {
        let u = Universe::unpolarized(4);
        let sq = pair_prime_power(&u, v(0), v(1), 2).unwrap();
        assert_eq!(sq.render(), "(a^2, a*b, b^2)");
        let unit = pair_prime_power(&u, v(2), v(3), 0).unwrap();
        assert!(unit.is_unit());
        let linear = pair_prime_power(&u, v(0), v(3), 1).unwrap();
        assert_eq!(linear.render(), "(a, d)");
        assert_eq!(
            pair_prime_power(&u, v(1), v(1), 3),
            Err(Error::InvalidPrimePair)
        );
    }

    #[test]
    fn tetrahedral_worked_example() {
        // (a,b)^2 n (a,c) n (a,d) n (b,c) n (b,d) n (c,d)^2
        let ideal = tetrahedral_ideal(&ExponentVector::new([2, 1, 1, 1, 1, 2]));
        assert_eq!(
            ideal.render(),
            "(a^2*c*d, a*b*c^2, a*b*c*d, a*b*d^2, b^2*c*d)"
        );
    }

    #[test]
    fn tetrahedral_trivial_curve_is_unit() {
        let ideal = tetrahedral_ideal(&ExponentVector::new([0; 6]));
        assert!(ideal.is_unit());
        assert_eq!(ideal.render(), "(1)");
    }

    #[test]
    fn tetrahedral_all_ones() {
        let ideal = tetrahedral_ideal(&ExponentVector::new([1; 6]));
        assert_eq!(ideal.render(), "(a*b*c, a*b*d, a*c*d, b*c*d)");
    }

    #[test]
    fn pairwise_matches_tetrahedral() {
        let p = ExponentVector::new([2, 1, 1, 1, 1, 2]);
        assert_eq!(pairwise_ideal(&p.as_pair_exponents()), tetrahedral_ideal(&p));
    }

    #[test]
    fn pairwise_small_cases() {
        let all_ones = PairExponents::new(vec![
            vec![0, 1, 1],
            vec![1, 0, 1],
            vec![1, 1, 0],
        ])
        .unwrap();
        assert_eq!(pairwise_ideal(&all_ones).render(), "(a*b, a*c, b*c)");

        let single = PairExponents::new(vec![vec![0, 3], vec![3, 0]]).unwrap();
        assert_eq!(
            pairwise_ideal(&single).render(),
            "(a^3, a^2*b, a*b^2, b^3)"
        );
    }

    #[test]
    fn pair_matrix_validation() {
        assert!(PairExponents::new(vec![vec![0, 1], vec![2, 0]]).is_err());
        assert!(PairExponents::new(vec![vec![1, 1], vec![1, 0]]).is_err());
        assert!(PairExponents::new(vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn exponent_vector_parsing() {
        let p: ExponentVector = "2,1,1,1,1,2".parse().unwrap();
        assert_eq!(p.entries(), [2, 1, 1, 1, 1, 2]);
        assert_eq!(p.to_string(), "(2,1,1,1,1,2)");
        assert!("2,1".parse::<ExponentVector>().is_err());
        assert!("1,2,3,4,5,x".parse::<ExponentVector>().is_err());
        assert!("1,2,3,4,5,65".parse::<ExponentVector>().is_err());
        assert!(" 0, 0,0,0,0,0 ".parse::<ExponentVector>().is_ok());
    }

    #[test]
    fn permuted_swaps_match_pair_semantics() {
        let p = ExponentVector::new([1, 2, 3, 4, 5, 6]);
        // b <-> c relabeling.
        assert_eq!(p.permuted([0, 2, 1, 3]).entries(), [2, 1, 3, 4, 6, 5]);
        // b <-> d relabeling.
        assert_eq!(p.permuted([0, 3, 2, 1]).entries(), [3, 2, 1, 6, 5, 4]);
        // Identity.
        assert_eq!(p.permuted([0, 1, 2, 3]), p);
    }
}
