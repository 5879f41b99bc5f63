//! Variables and variable universes.
//!
//! A [`VarId`] names one variable of a (possibly polarized) polynomial ring
//! as a base-variable index plus a copy index; unpolarized variables carry
//! copy index 1. A [`Universe`] records how many base variables exist, how
//! many copies each has, and whether names are rendered with copy suffixes.

/// One variable: base index into the universe plus a copy index (>= 1).
///
/// The derived ordering (base first, then copy) is the canonical variable
/// order `a < b < c < d` with copies ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    base: usize,
    copy: u32,
}

impl VarId {
    pub fn new(base: usize, copy: u32) -> Self {
        assert!(copy >= 1, "copy indices start at 1");
        VarId { base, copy }
    }

    /// The base variable itself (copy index 1).
    pub fn unpolarized(base: usize) -> Self {
        VarId { base, copy: 1 }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn copy(&self) -> u32 {
        self.copy
    }
}

/// Descriptor of the ambient ring's variables.
///
/// Unpolarized universes have one copy of each base variable and render
/// names without copy suffixes (`a`, `b`, ...). Polarized universes carry a
/// copy count per base variable (possibly zero, when a variable does not
/// occur at all) and render names with copy suffixes (`a1`, `d2`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    copy_counts: Vec<u32>,
    polarized: bool,
}

impl Universe {
    /// `base_count` variables, one copy each, bare names.
    pub fn unpolarized(base_count: usize) -> Self {
        Universe {
            copy_counts: vec![1; base_count],
            polarized: false,
        }
    }

    /// Polarized universe with the given copy count per base variable.
    pub fn polarized(copy_counts: Vec<u32>) -> Self {
        Universe {
            copy_counts,
            polarized: true,
        }
    }

    pub fn base_count(&self) -> usize {
        self.copy_counts.len()
    }

    pub fn copy_count(&self, base: usize) -> u32 {
        self.copy_counts[base]
    }

    pub fn is_polarized(&self) -> bool {
        self.polarized
    }

    /// Total number of variables (sum of copy counts).
    pub fn var_count(&self) -> usize {
        self.copy_counts.iter().map(|&c| c as usize).sum()
    }

    pub fn contains(&self, v: VarId) -> bool {
        v.base() < self.base_count() && v.copy() >= 1 && v.copy() <= self.copy_counts[v.base()]
    }

    /// All variables in canonical order.
    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.copy_counts
            .iter()
            .enumerate()
            .flat_map(|(base, &count)| (1..=count).map(move |copy| VarId::new(base, copy)))
    }

    /// Display name of a base variable: `a`..`d` for up to four base
    /// variables, `x1..xn` beyond that.
    pub fn base_name(&self, base: usize) -> String {
        if self.base_count() <= 4 {
            ["a", "b", "c", "d"][base].to_string()
        } else {
            format!("x{}", base + 1)
        }
    }

    /// Display name of a variable; polarized universes append the copy index
    /// (`a2`, or `x2_3` when base names are themselves numbered).
    pub fn var_name(&self, v: VarId) -> String {
        let base = self.base_name(v.base());
        if !self.polarized {
            base
        } else if self.base_count() <= 4 {
            format!("{}{}", base, v.copy())
        } else {
            format!("{}_{}", base, v.copy())
        }
    }

    /// Smallest common universe: per-variable maximum copy counts.
    /// Polarized if either side is.
    pub fn merge_max(&self, other: &Universe) -> Universe {
        assert_eq!(
            self.base_count(),
            other.base_count(),
            "universes must share the base variable set"
        );
        Universe {
            copy_counts: self
                .copy_counts
                .iter()
                .zip(&other.copy_counts)
                .map(|(&a, &b)| a.max(b))
                .collect(),
            polarized: self.polarized || other.polarized,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_base_then_copy() {
        let a2 = VarId::new(0, 2);
        let b1 = VarId::new(1, 1);
        let a1 = VarId::new(0, 1);
        assert!(a1 < a2);
        assert!(a2 < b1);
    }

    #[test]
    fn names_follow_polarization() {
        let plain = Universe::unpolarized(4);
        assert_eq!(plain.var_name(VarId::unpolarized(3)), "d");

        let pol = Universe::polarized(vec![2, 2, 2, 2]);
        assert_eq!(pol.var_name(VarId::new(0, 2)), "a2");
        assert_eq!(pol.var_name(VarId::new(3, 1)), "d1");

        let wide = Universe::polarized(vec![1, 1, 1, 1, 3]);
        assert_eq!(wide.var_name(VarId::new(4, 3)), "x5_3");
    }

    #[test]
    fn vars_iterates_copies_in_order() {
        let u = Universe::polarized(vec![2, 0, 1]);
        let names: Vec<String> = u.vars().map(|v| u.var_name(v)).collect();
        assert_eq!(names, ["a1", "a2", "c1"]);
        assert_eq!(u.var_count(), 3);
        assert!(u.contains(VarId::new(0, 2)));
        assert!(!u.contains(VarId::new(0, 3)));
        assert!(!u.contains(VarId::new(1, 1)));
    }
}
