use serde::Serialize;

use crate::error::{JacoError, Result};

/// Default order cap for 2^n subset oracles and exact cover search.
pub const DEFAULT_SUBSET_BUDGET: usize = 14;
/// Default order cap for clique censuses (counts stay within 64 bits).
pub const DEFAULT_CENSUS_BUDGET: usize = 64;
/// Default order cap for exhaustive longest-cycle search.
pub const DEFAULT_CYCLE_BUDGET: usize = 20;

/// Order limits for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budgets {
    pub subset: usize,
    pub census: usize,
    pub cycle: usize,
    pub force: bool,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            subset: DEFAULT_SUBSET_BUDGET,
            census: DEFAULT_CENSUS_BUDGET,
            cycle: DEFAULT_CYCLE_BUDGET,
            force: false,
        }
    }
}

impl Budgets {
    pub fn check_subset(&self, what: &str, n: usize) -> Result<()> {
        check(what, n, self.subset, self.force)
    }

    pub fn check_census(&self, what: &str, n: usize) -> Result<()> {
        check(what, n, self.census, self.force)
    }

    pub fn check_cycle(&self, what: &str, n: usize) -> Result<()> {
        check(what, n, self.cycle, self.force)
    }
}

pub(crate) fn check(what: &str, n: usize, budget: usize, force: bool) -> Result<()> {
    if n > budget && !force {
        return Err(JacoError::BudgetExceeded {
            what: what.to_string(),
            n,
            budget,
        });
    }
    Ok(())
}
