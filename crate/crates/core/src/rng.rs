//! Seeded linear congruential generator for reproducible randomized checks.
//!
//! The recurrence is fixed so every platform generates identical trials:
//!
//! ```text
//! state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
//! ```
//!
//! (the MMIX multiplier/increment pair). Uniform draws take the top 53 bits
//! of the state, giving values in [-1, 1).

/// Deterministic 64-bit LCG.
#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state
    }

    /// Uniform draw in [-1, 1).
    pub fn next_unit(&mut self) -> f64 {
        let bits = self.next_u64() >> 11; // top 53 bits
        bits as f64 / (1u64 << 52) as f64 - 1.0
    }
}
