//! Certified partial decision procedures for the Skolem, Positivity and
//! Ultimate Positivity problems on real linear recurrences whose
//! coefficients and initial values are given as rationals or rational
//! interval boxes.
//!
//! Every decider returns either a halted verdict with a machine-checkable
//! certificate or an explicit budget-exhaustion report; halted verdicts
//! are sound by construction (all numeric reasoning goes through exact
//! rational interval arithmetic).

#![forbid(unsafe_code)]

pub mod budget;
pub mod configs;
pub mod fodecide;
pub mod linrec;
pub mod numeric;
pub mod oracle;
pub mod poly;
pub mod problems;
pub mod realname;
pub mod spectral;
