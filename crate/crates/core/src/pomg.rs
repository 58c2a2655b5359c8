//! Team partially observable Markov game contract.
//!
//! All environments implement [`TeamEnv`]: N > 1 agents, per-agent partial
//! observations, a joint action, and a single scalar team reward shared by
//! every agent each step. Stepping is deterministic given the state, the
//! joint action, and the seeded RNG stream handed to `reset`, which is what
//! makes every experiment bit-reproducible.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Identifier of one agent, 1-based as reported in logs and ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AgentId(usize);

impl AgentId {
    /// Construct from a 1-based id.
    pub fn new(id: usize) -> Result<Self> {
        if id == 0 {
            return Err(Error::UnknownAgent(0));
        }
        Ok(AgentId(id))
    }

    /// Construct from a 0-based array index.
    pub fn from_index(index: usize) -> Self {
        AgentId(index + 1)
    }

    /// The 1-based id.
    pub fn id(&self) -> usize {
        self.0
    }

    /// The 0-based array index.
    pub fn index(&self) -> usize {
        self.0 - 1
    }
}

impl std::fmt::Display for AgentId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Per-agent action space. Environments here are homogeneous: every agent
/// shares one spec.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ActionSpec {
    /// Box-bounded continuous actions.
    Continuous { low: Vec<f64>, high: Vec<f64> },
    /// Finite set of `n` symbols.
    Discrete { n: usize },
}

impl ActionSpec {
    pub fn dim(&self) -> usize {
        match self {
            ActionSpec::Continuous { low, .. } => low.len(),
            ActionSpec::Discrete { .. } => 1,
        }
    }

    /// Width of the fixed vector encoding used when an action is communicated
    /// to another agent (continuous: the vector itself; discrete: one-hot).
    pub fn encoding_dim(&self) -> usize {
        match self {
            ActionSpec::Continuous { low, .. } => low.len(),
            ActionSpec::Discrete { n } => *n,
        }
    }

    /// Largest absolute encoded value per dimension, used to scale
    /// communication noise.
    pub fn encoding_max(&self) -> Vec<f64> {
        match self {
            ActionSpec::Continuous { low, high } => low
                .iter()
                .zip(high)
                .map(|(l, h)| l.abs().max(h.abs()))
                .collect(),
            ActionSpec::Discrete { n } => vec![1.0; *n],
        }
    }

    pub fn validate(&self, action: &Action, agent: usize) -> Result<()> {
        match (self, action) {
            (ActionSpec::Continuous { low, high }, Action::Continuous(v)) => {
                if v.len() != low.len() {
                    return Err(Error::Dimension(format!(
                        "action has {} dims, spec has {}",
                        v.len(),
                        low.len()
                    )));
                }
                for (d, ((x, l), h)) in v.iter().zip(low).zip(high).enumerate() {
                    if !x.is_finite() || *x < *l || *x > *h {
                        return Err(Error::ActionBounds {
                            agent,
                            detail: format!("dim {d}: {x} outside [{l}, {h}]"),
                        });
                    }
                }
                Ok(())
            }
            (ActionSpec::Discrete { n }, Action::Discrete(k)) => {
                if k >= n {
                    return Err(Error::ActionBounds {
                        agent,
                        detail: format!("symbol {k} outside 0..{n}"),
                    });
                }
                Ok(())
            }
            _ => Err(Error::ActionBounds {
                agent,
                detail: "action kind does not match spec".into(),
            }),
        }
    }

    /// Fixed-width vector encoding of an action for communication.
    pub fn encode(&self, action: &Action) -> Vec<f64> {
        match (self, action) {
            (ActionSpec::Continuous { .. }, Action::Continuous(v)) => v.clone(),
            (ActionSpec::Discrete { n }, Action::Discrete(k)) => {
                let mut one_hot = vec![0.0; *n];
                one_hot[*k] = 1.0;
                one_hot
            }
            _ => panic!("action kind does not match spec"),
        }
    }
}

/// One agent's action.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Action {
    Continuous(Vec<f64>),
    Discrete(usize),
}

/// Ordered per-agent actions, indexed by `AgentId` (never by rank position).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointAction(pub Vec<Action>);

impl JointAction {
    pub fn get(&self, agent: AgentId) -> &Action {
        &self.0[agent.index()]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Ordered per-agent observation vectors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointObservation(pub Vec<Vec<f64>>);

impl JointObservation {
    pub fn get(&self, agent: AgentId) -> &[f64] {
        &self.0[agent.index()]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Result of one environment step.
#[derive(Debug, Clone)]
pub struct StepOutcome {
    pub obs: JointObservation,
    /// Scalar team reward, identical from every agent's perspective.
    pub reward: f64,
    pub done: bool,
    /// Whether any pair of agents was in collision this step.
    pub collision: bool,
}

/// One stored step of experience for the learner.
///
/// `obs` holds what each actor saw at this step (the stage-specific view);
/// `next_obs` holds the environment's next base observation. With
/// whole-episode rollouts the terminal flag makes bootstrap values unused.
#[derive(Debug, Clone)]
pub struct TransitionRecord {
    pub obs: JointObservation,
    pub actions: Vec<StoredAction>,
    pub log_probs: Vec<f64>,
    pub team_reward: f64,
    pub next_obs: JointObservation,
    pub done: bool,
    pub value_estimates: Vec<f64>,
}

/// Action as stored for the learner: the executed action plus, for continuous
/// heads, the pre-squash sample needed to re-evaluate its density.
#[derive(Debug, Clone, PartialEq)]
pub enum StoredAction {
    Continuous { raw: Vec<f64>, executed: Vec<f64> },
    Discrete(usize),
}

/// The team POMG environment contract.
///
/// Instances are single-threaded and not shared; run independent instances
/// on independent seeds for parallelism.
pub trait TeamEnv {
    fn num_agents(&self) -> usize;
    fn obs_dim(&self) -> usize;
    fn action_spec(&self) -> &ActionSpec;
    fn discount(&self) -> f64;
    fn max_episode_steps(&self) -> usize;
    /// How many other agents each agent can observe.
    fn k_obs(&self) -> usize;

    /// Put the environment in a seeded initial state. Identical seeds yield
    /// bit-identical initial observations.
    fn reset(&mut self, seed: u64) -> JointObservation;

    /// Advance one step. Out-of-bounds actions are rejected; callers clamp.
    fn step(&mut self, actions: &JointAction) -> Result<StepOutcome>;

    /// Which agents each agent can currently observe, in canonical order
    /// (ascending distance, ties by ascending id).
    fn observable_sets(&self) -> Vec<Vec<AgentId>>;

    /// Current agent speeds, if the environment has kinematics.
    fn agent_speeds(&self) -> Option<Vec<f64>> {
        None
    }

    /// Maximum allowed speed, if the environment has kinematics.
    fn v_max(&self) -> Option<f64> {
        None
    }

    /// Per-agent reward view. Team games share one scalar; the hook exists
    /// so heterogeneous-reward games can reuse the contract.
    fn per_agent_rewards(&self, team_reward: f64) -> Vec<f64> {
        vec![team_reward; self.num_agents()]
    }
}

/// A joint policy for rollout evaluation: observation in, joint action out.
pub trait JointPolicy {
    fn act(&self, obs: &JointObservation, rng: &mut ChaCha8Rng) -> JointAction;
}

/// Fixed joint action replayed every step.
pub struct FixedJointPolicy(pub JointAction);

impl JointPolicy for FixedJointPolicy {
    fn act(&self, _obs: &JointObservation, _rng: &mut ChaCha8Rng) -> JointAction {
        self.0.clone()
    }
}

/// Uniform-random joint policy over a discrete action spec.
pub struct UniformDiscretePolicy {
    pub num_agents: usize,
    pub n: usize,
}

impl JointPolicy for UniformDiscretePolicy {
    fn act(&self, _obs: &JointObservation, rng: &mut ChaCha8Rng) -> JointAction {
        JointAction(
            (0..self.num_agents)
                .map(|_| Action::Discrete(rng.gen_range(0..self.n)))
                .collect(),
        )
    }
}

/// Monte-Carlo estimate of the per-agent state value under a joint policy.
///
/// Runs `num_rollouts` seeded episodes from the environment's initial-state
/// distribution and averages the discounted team return. In a team POMG every
/// agent sees the same reward stream, so all N entries are equal.
pub fn monte_carlo_value(
    env: &mut dyn TeamEnv,
    policy: &dyn JointPolicy,
    num_rollouts: usize,
    seed: u64,
) -> Result<Vec<f64>> {
    if num_rollouts == 0 {
        return Err(Error::Config("num_rollouts must be >= 1".into()));
    }
    let mut rng = crate::rngs::stream_rng(seed, crate::rngs::Stream::Eval);
    let mut total = 0.0;
    for rollout in 0..num_rollouts {
        let mut obs = env.reset(seed.wrapping_add(rollout as u64));
        let mut ret = 0.0;
        let mut gamma_t = 1.0;
        for _ in 0..env.max_episode_steps() {
            let actions = policy.act(&obs, &mut rng);
            let out = env.step(&actions)?;
            ret += gamma_t * out.reward;
            gamma_t *= env.discount();
            obs = out.obs;
            if out.done {
                break;
            }
        }
        total += ret;
    }
    let value = total / num_rollouts as f64;
    Ok(vec![value; env.num_agents()])
}

/// Exact expected team reward of a one-step 3x3 matrix game under independent
/// mixed strategies: sum_ij p1(i) p2(j) payoff[i][j].
pub fn exact_matrix_value(
    payoff: &[[f64; 3]; 3],
    policy_1: &[f64; 3],
    policy_2: &[f64; 3],
) -> Result<f64> {
    for p in [policy_1, policy_2] {
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::NotNormalized(sum));
        }
        if p.iter().any(|x| *x < 0.0) {
            return Err(Error::NotNormalized(sum));
        }
    }
    let mut value = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            value += policy_1[i] * policy_2[j] * payoff[i][j];
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envs::nav_game::{NavAction, NavGame};

    #[test]
    fn agent_id_round_trips() {
        let a = AgentId::new(3).unwrap();
        assert_eq!(a.index(), 2);
        assert_eq!(AgentId::from_index(2), a);
        assert!(AgentId::new(0).is_err());
    }

    #[test]
    fn exact_value_point_masses_pick_single_cell() {
        let payoff = NavGame::default_payoff();
        // Degenerate distributions select exactly one cell.
        for i in 0..3 {
            for j in 0..3 {
                let mut p1 = [0.0; 3];
                let mut p2 = [0.0; 3];
                p1[i] = 1.0;
                p2[j] = 1.0;
                assert_eq!(exact_matrix_value(&payoff, &p1, &p2).unwrap(), payoff[i][j]);
            }
        }
    }

    #[test]
    fn exact_value_straight_left_is_ten() {
        let payoff = NavGame::default_payoff();
        let p1 = point_mass(NavAction::Straight);
        let p2 = point_mass(NavAction::Left);
        assert_eq!(exact_matrix_value(&payoff, &p1, &p2).unwrap(), 10.0);
    }

    #[test]
    fn exact_value_uniform_uniform() {
        // Hand enumeration of the adopted table: cells sum to
        // 4*10 - 10 - 2*10 + 2*5 = 20, so the uniform-uniform value is 20/9.
        let payoff = NavGame::default_payoff();
        let u = [1.0 / 3.0; 3];
        let v = exact_matrix_value(&payoff, &u, &u).unwrap();
        let brute: f64 = payoff.iter().flatten().sum::<f64>() / 9.0;
        assert!((v - brute).abs() < 1e-12);
        assert!((v - 20.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn exact_value_rejects_unnormalized() {
        let payoff = NavGame::default_payoff();
        let bad = [0.5, 0.2, 0.2];
        let u = [1.0 / 3.0; 3];
        assert!(matches!(
            exact_matrix_value(&payoff, &bad, &u),
            Err(Error::NotNormalized(_))
        ));
    }

    fn point_mass(a: NavAction) -> [f64; 3] {
        let mut p = [0.0; 3];
        p[a as usize] = 1.0;
        p
    }

    #[test]
    fn monte_carlo_deterministic_pair_hits_exact_cell() {
        let mut env = NavGame::new();
        let policy = FixedJointPolicy(JointAction(vec![
            Action::Discrete(NavAction::Straight as usize),
            Action::Discrete(NavAction::Left as usize),
        ]));
        let v = monte_carlo_value(&mut env, &policy, 1, 0).unwrap();
        assert_eq!(v, vec![10.0, 10.0]);
    }

    #[test]
    fn monte_carlo_zero_reward_env_is_zero() {
        struct ZeroReward(NavGame);
        impl TeamEnv for ZeroReward {
            fn num_agents(&self) -> usize {
                self.0.num_agents()
            }
            fn obs_dim(&self) -> usize {
                self.0.obs_dim()
            }
            fn action_spec(&self) -> &ActionSpec {
                self.0.action_spec()
            }
            fn discount(&self) -> f64 {
                self.0.discount()
            }
            fn max_episode_steps(&self) -> usize {
                self.0.max_episode_steps()
            }
            fn k_obs(&self) -> usize {
                self.0.k_obs()
            }
            fn reset(&mut self, seed: u64) -> JointObservation {
                self.0.reset(seed)
            }
            fn step(&mut self, actions: &JointAction) -> Result<StepOutcome> {
                let mut out = self.0.step(actions)?;
                out.reward = 0.0;
                Ok(out)
            }
            fn observable_sets(&self) -> Vec<Vec<AgentId>> {
                self.0.observable_sets()
            }
        }
        let mut env = ZeroReward(NavGame::new());
        let policy = UniformDiscretePolicy { num_agents: 2, n: 3 };
        let v = monte_carlo_value(&mut env, &policy, 100, 3).unwrap();
        assert_eq!(v, vec![0.0, 0.0]);
    }

    #[test]
    fn monte_carlo_matches_exact_value_within_three_sigma() {
        let mut env = NavGame::new();
        let policy = UniformDiscretePolicy { num_agents: 2, n: 3 };
        let n = 1_000_000;
        let v = monte_carlo_value(&mut env, &policy, n, 42).unwrap()[0];
        let payoff = NavGame::default_payoff();
        let u = [1.0 / 3.0; 3];
        let exact = exact_matrix_value(&payoff, &u, &u).unwrap();
        // Payoff variance under uniform play, for the standard error bound.
        let second: f64 = payoff.iter().flatten().map(|x| x * x).sum::<f64>() / 9.0;
        let sigma = (second - exact * exact).sqrt();
        let se = sigma / (n as f64).sqrt();
        assert!(
            (v - exact).abs() <= 3.0 * se,
            "MC value {v} vs exact {exact} (3se = {})",
            3.0 * se
        );
    }
}
