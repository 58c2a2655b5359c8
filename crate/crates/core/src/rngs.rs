//! Seeded RNG streams.
//!
//! Every source of randomness in a run draws from its own ChaCha stream so
//! that wiring differences between model variants (e.g. whether communication
//! noise is enabled) never desynchronize the streams they share. A run is
//! fully determined by `(seed, stream id)` pairs.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Fixed stream ids, one per randomness consumer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stream {
    /// Environment resets and per-episode placement.
    Env = 1,
    /// Priority-stage action sampling.
    PriorityActor = 2,
    /// Decision-stage action sampling.
    DecisionActor = 3,
    /// Random-rank draws (variant with unlearned priorities).
    RandomRank = 4,
    /// Communication noise on propagated actions.
    Noise = 5,
    /// Minibatch shuffling, priority learner.
    PriorityUpdate = 6,
    /// Minibatch shuffling, decision learner.
    DecisionUpdate = 7,
    /// Priority network initialization.
    PriorityInit = 8,
    /// Decision network initialization.
    DecisionInit = 9,
    /// Evaluation-episode seeds.
    Eval = 10,
}

/// An RNG on a dedicated stream derived from a run seed.
pub fn stream_rng(seed: u64, stream: Stream) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    rng
}
