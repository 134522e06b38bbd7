//! Exact search over the optional edges, and the 2-SAT engine shared with the
//! polynomial solvers.

mod clauses;
mod dpll;
mod two_sat;

pub use clauses::{compile_clauses, ClauseSet, EdgeVariable};
pub use dpll::{solve_clauses, solve_exact, solve_exact_with_stats, SearchStats, DEFAULT_BUDGET};
pub use two_sat::{solve_two_sat, TwoSatFormula};

use std::fmt;

/// A literal over variable `var`; `positive` means "edge present" for edge
/// variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit(u32);

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit((var as u32) << 1)
    }

    pub fn neg(var: usize) -> Lit {
        Lit((var as u32) << 1 | 1)
    }

    pub fn new(var: usize, positive: bool) -> Lit {
        if positive {
            Lit::pos(var)
        } else {
            Lit::neg(var)
        }
    }

    #[inline]
    pub fn var(self) -> usize {
        (self.0 >> 1) as usize
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// True when `value` makes this literal true.
    #[inline]
    pub fn holds(self, value: bool) -> bool {
        value == self.is_positive()
    }
}

impl std::ops::Not for Lit {
    type Output = Lit;

    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.var())
        } else {
            write!(f, "!x{}", self.var())
        }
    }
}
