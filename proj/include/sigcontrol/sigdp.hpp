#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sigcontrol/path.hpp"
#include "sigcontrol/tensor_algebra.hpp"

namespace sigctl {

/// Finite state set with per-state observation vectors and a fixed horizon.
struct FiniteSignatureMDP {
    std::vector<Eigen::VectorXd> observations;  // one vector per state
    int horizon = 1;

    int n_states() const { return static_cast<int>(observations.size()); }
    int obs_dim() const { return observations.empty() ? 0 : static_cast<int>(observations.front().size()); }
    void validate() const;
};

/// Deterministic policy: state -> next state (0-based).
struct DeterministicPolicy {
    std::vector<int> next_state;

    void validate(int n_states) const;
};

/// (horizon+1) x n_states grid of truncated signatures of the path-to-go;
/// the terminal row is all unit tensors.
struct STable {
    int horizon = 0;
    int n_states = 0;
    std::vector<TruncatedTensor> entries;  // row-major (t, state)

    const TruncatedTensor& at(int t, int state) const {
        return entries[static_cast<std::size_t>(t) * n_states + state];
    }
    TruncatedTensor& at(int t, int state) {
        return entries[static_cast<std::size_t>(t) * n_states + state];
    }
};

/// Backward recursion S[t][x] = exp(obs(pi(x)) - obs(x)) (x)_m S[t+1][pi(x)],
/// terminal row unit.
STable evaluate_stable(const FiniteSignatureMDP& mdp, const DeterministicPolicy& policy,
                       int depth);

/// Recovers the deterministic policy from a vector of one-step-to-go values:
/// entry x must match the reward o1+o2 of exactly one state within `tol`,
/// which becomes pi(x).
DeterministicPolicy policy_from_value_row(const FiniteSignatureMDP& mdp,
                                          const Eigen::VectorXd& value_row,
                                          double tol = 0.02);

/// Staircase path over (discounted reward, time): per step, raise the
/// reward coordinate to gamma^t * r_t at fixed time, advance time by one,
/// and close back to reward 0 at the very end.  Its (1,2) coefficient is
/// the discounted return sum_t gamma^t r_t.
PiecewisePath build_reward_time_path(const std::vector<double>& rewards, double gamma);

/// Per-state reward o1 + o2.
Eigen::VectorXd state_rewards(const FiniteSignatureMDP& mdp);

struct ValueGrids {
    Eigen::MatrixXd signature_route;  // (horizon+1) x n_states
    Eigen::MatrixXd classical;        // same shape
};

/// Computes the value table twice: through the depth-2 signature of the
/// reward staircase (coefficient (1,2), rescaled by gamma^-t) and through
/// classical backward policy evaluation.  Rewards are o1+o2 of the state
/// being entered.
ValueGrids bellman_check(const FiniteSignatureMDP& mdp, const DeterministicPolicy& policy,
                         double gamma);

Eigen::MatrixXd classical_policy_evaluation(const FiniteSignatureMDP& mdp,
                                            const DeterministicPolicy& policy,
                                            double gamma);

struct BranchEvaluation {
    int candidate = -1;
    double cost = 0.0;
};

struct BranchResult {
    int best_candidate = -1;
    double best_cost = 0.0;
    std::vector<BranchEvaluation> all;
};

/// Evaluates |coefficient (1,2)| of the remaining observation path from
/// `branch_state` at time t when its next state is overridden by each
/// candidate (policy unchanged elsewhere).  Ties break to the lowest
/// candidate index.
BranchResult chen_optimality_eval(const FiniteSignatureMDP& mdp,
                                  const DeterministicPolicy& base_policy,
                                  int branch_state, const std::vector<int>& candidates,
                                  int t, int depth);

}  // namespace sigctl
