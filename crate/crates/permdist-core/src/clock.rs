//! Wall-clock abstraction.
//!
//! The core crate is `no_std`-compatible, so elapsed time enters through a
//! trait: the genetic algorithm consults a [`Clock`] for its time budget and
//! run statistics, and embedders supply whatever time source they have (the
//! CLI wraps `std::time::Instant`).

use core::time::Duration;

/// Monotonic elapsed-time source, measured from some fixed origin such as
/// the start of a run.
pub trait Clock {
    fn elapsed(&self) -> Duration;
}

/// A clock frozen at zero. Time budgets never expire under it and reported
/// wall times are zero; useful for `no_std` targets and deterministic tests.
#[derive(Debug, Clone, Copy, Default)]
pub struct NullClock;

impl Clock for NullClock {
    fn elapsed(&self) -> Duration {
        Duration::ZERO
    }
}
