//! Step accounting shared by the semi-decision procedures. A budget is
//! spent by inner loops (subdivision, refinement, counting); exhaustion
//! makes an operation answer `Unknown` instead of diverging.

#[derive(Debug, Clone)]
pub struct StepBudget {
    remaining: u64,
    spent: u64,
}

impl StepBudget {
    pub fn new(steps: u64) -> Self {
        StepBudget { remaining: steps, spent: 0 }
    }

    /// Consumes `n` steps; returns false once the budget is exhausted.
    pub fn spend(&mut self, n: u64) -> bool {
        if self.remaining >= n {
            self.remaining -= n;
            self.spent += n;
            true
        } else {
            self.spent += self.remaining;
            self.remaining = 0;
            false
        }
    }

    pub fn is_exhausted(&self) -> bool {
        self.remaining == 0
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }
}
