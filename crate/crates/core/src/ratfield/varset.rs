//! The fixed variable universe and declared subsets of it.
//!
//! Slots are `v`, `t`, `u1`, ..., `u6` in that order. The order is the
//! lexicographic order used for canonical term ordering.

use alloc::vec::Vec;

use super::monomial::MAX_VARS;

/// Slot of `v`.
pub const V: usize = 0;
/// Slot of `t`.
pub const T: usize = 1;

const NAMES: [&str; MAX_VARS] = ["v", "t", "u1", "u2", "u3", "u4", "u5", "u6"];

/// Name of a variable slot.
pub fn var_name(slot: usize) -> &'static str {
    NAMES[slot]
}

/// Slot of a variable name, if it belongs to the universe.
pub fn var_index(name: &str) -> Option<usize> {
    NAMES.iter().position(|&n| n == name)
}

/// An ordered set of variables drawn from the universe.
///
/// Always contains `v` and `t`; spectral variables are `u1..uk`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarSet {
    mask: u8,
}

impl VarSet {
    /// `{v, t}`.
    pub const VT: VarSet = VarSet { mask: 0b11 };

    /// `{v, t, u1, .., uk}`; `k` is at most 6.
    pub fn with_spectral(k: usize) -> Self {
        assert!(k + 2 <= MAX_VARS, "at most {} spectral variables", MAX_VARS - 2);
        VarSet { mask: (((1u16 << (k + 2)) - 1) as u8) }
    }

    /// Slot of the spectral variable `u_i` (1-based).
    pub fn spectral_slot(i: usize) -> usize {
        assert!((1..=MAX_VARS - 2).contains(&i), "spectral index {i} out of range");
        i + 1
    }

    pub fn contains(self, slot: usize) -> bool {
        slot < MAX_VARS && self.mask & (1 << slot) != 0
    }

    /// Whether every variable in the bitmask `support` is declared.
    pub fn covers(self, support: u8) -> bool {
        support & !self.mask == 0
    }

    pub fn names(self) -> Vec<&'static str> {
        (0..MAX_VARS).filter(|&s| self.contains(s)).map(var_name).collect()
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }
}

impl Default for VarSet {
    fn default() -> Self {
        VarSet::VT
    }
}
