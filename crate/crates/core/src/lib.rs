//! Priority-ranked sequential multi-agent reinforcement learning.
//!
//! The framework trains cooperative agents in team Markov games with a
//! bi-stage scheme: an auxiliary learned policy assigns each agent a scalar
//! priority score, scores are sorted into a priority rank, and agents then
//! act sequentially in rank order. Each agent's already-chosen action is
//! communicated to the lower-priority agents that can observe it and appended
//! to their observations ("action propagation"), so later movers face a more
//! predictable environment. Both the priority-assignment policy and the
//! decision-making policy are trained jointly with a from-scratch MAPPO-style
//! actor-critic learner (shared actors, centralized critics).
//!
//! Crate layout:
//! - [`pomg`]: the team partially observable Markov game contract and rollout
//!   records, plus value-estimation oracles for the matrix game.
//! - [`prioritize`]: score-to-rank generation (argsort, random ranks).
//! - [`propagate`]: observable-higher-priority sets, modified observations,
//!   sequential decision-making, communication noise, opponent prediction.
//! - [`nn`], [`policy`], [`buffer`], [`ppo`]: the hand-rolled learner stack
//!   (MLPs with analytic backprop, squashed-Gaussian/categorical heads, GAE,
//!   clipped-surrogate updates, finite-difference gradient checking).
//! - [`envs`]: a two-agent navigation matrix game and a desk-scale lane-graph
//!   traffic scenario with a merge and a crossing.
//! - [`trainer`]: the joint training loop wiring both learner instances to
//!   the sequential pipeline.
//! - [`config`], [`harness`], [`metrics`], [`checkpoint`]: experiment
//!   orchestration, the five model variants, CSV/plot outputs, persistence.

pub mod buffer;
pub mod checkpoint;
pub mod config;
pub mod envs;
pub mod error;
pub mod harness;
pub mod metrics;
pub mod nn;
pub mod policy;
pub mod pomg;
pub mod ppo;
pub mod prioritize;
pub mod propagate;
pub mod rngs;
pub mod trainer;

pub use error::{Error, Result};
