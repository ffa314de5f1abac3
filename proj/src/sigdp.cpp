#include "sigcontrol/sigdp.hpp"

#include <cmath>
#include <stdexcept>

namespace sigctl {

void FiniteSignatureMDP::validate() const {
    if (observations.empty()) throw std::invalid_argument("MDP needs at least one state");
    if (horizon < 1) throw std::invalid_argument("MDP horizon must be >= 1");
    const Eigen::Index p = observations.front().size();
    for (const auto& o : observations) {
        if (o.size() != p) throw std::invalid_argument("observation rows of mixed length");
    }
}

void DeterministicPolicy::validate(int n_states) const {
    if (static_cast<int>(next_state.size()) != n_states) {
        throw std::invalid_argument("policy must be total over states");
    }
    for (int s : next_state) {
        if (s < 0 || s >= n_states) throw std::invalid_argument("policy codomain out of range");
    }
}

STable evaluate_stable(const FiniteSignatureMDP& mdp, const DeterministicPolicy& policy,
                       int depth) {
    mdp.validate();
    policy.validate(mdp.n_states());
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    const int n = mdp.n_states();
    const int dim = mdp.obs_dim();

    STable table;
    table.horizon = mdp.horizon;
    table.n_states = n;
    table.entries.assign(static_cast<std::size_t>(mdp.horizon + 1) * n,
                         TruncatedTensor::unit(dim, depth));
    for (int t = mdp.horizon - 1; t >= 0; --t) {
        for (int x = 0; x < n; ++x) {
            const int nx = policy.next_state[x];
            const Eigen::VectorXd inc = mdp.observations[nx] - mdp.observations[x];
            table.at(t, x) = product(segment_exponential(inc, depth), table.at(t + 1, nx));
        }
    }
    return table;
}

Eigen::VectorXd state_rewards(const FiniteSignatureMDP& mdp) {
    Eigen::VectorXd r(mdp.n_states());
    for (int x = 0; x < mdp.n_states(); ++x) {
        r[x] = mdp.observations[x].sum();
    }
    return r;
}

DeterministicPolicy policy_from_value_row(const FiniteSignatureMDP& mdp,
                                          const Eigen::VectorXd& value_row, double tol) {
    mdp.validate();
    if (value_row.size() != mdp.n_states()) {
        throw std::invalid_argument("value row length must match state count");
    }
    const Eigen::VectorXd r = state_rewards(mdp);
    DeterministicPolicy policy;
    policy.next_state.resize(mdp.n_states());
    for (int x = 0; x < mdp.n_states(); ++x) {
        int match = -1;
        for (int y = 0; y < mdp.n_states(); ++y) {
            if (std::abs(value_row[x] - r[y]) <= tol) {
                if (match >= 0) throw std::runtime_error("ambiguous reward match in value row");
                match = y;
            }
        }
        if (match < 0) throw std::runtime_error("value row entry matches no state reward");
        policy.next_state[x] = match;
    }
    return policy;
}

PiecewisePath build_reward_time_path(const std::vector<double>& rewards, double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must be in (0,1]");
    for (double r : rewards) {
        if (!std::isfinite(r)) throw std::invalid_argument("rewards must be finite");
    }
    PiecewisePath p;
    p.points.reserve(2 * rewards.size() + 2);
    p.points.push_back(Eigen::Vector2d(0.0, 0.0));
    double disc = 1.0;
    for (std::size_t t = 0; t < rewards.size(); ++t) {
        const double level = disc * rewards[t];
        p.points.push_back(Eigen::Vector2d(level, static_cast<double>(t)));
        p.points.push_back(Eigen::Vector2d(level, static_cast<double>(t + 1)));
        disc *= gamma;
    }
    p.points.push_back(Eigen::Vector2d(0.0, static_cast<double>(rewards.size())));
    return p;
}

Eigen::MatrixXd classical_policy_evaluation(const FiniteSignatureMDP& mdp,
                                            const DeterministicPolicy& policy,
                                            double gamma) {
    mdp.validate();
    policy.validate(mdp.n_states());
    const Eigen::VectorXd r = state_rewards(mdp);
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(mdp.horizon + 1, mdp.n_states());
    for (int t = mdp.horizon - 1; t >= 0; --t) {
        for (int x = 0; x < mdp.n_states(); ++x) {
            const int nx = policy.next_state[x];
            v(t, x) = r[nx] + gamma * v(t + 1, nx);
        }
    }
    return v;
}

ValueGrids bellman_check(const FiniteSignatureMDP& mdp, const DeterministicPolicy& policy,
                         double gamma) {
    mdp.validate();
    policy.validate(mdp.n_states());
    const Eigen::VectorXd r = state_rewards(mdp);

    ValueGrids grids;
    grids.classical = classical_policy_evaluation(mdp, policy, gamma);
    grids.signature_route = Eigen::MatrixXd::Zero(mdp.horizon + 1, mdp.n_states());
    for (int t = 0; t < mdp.horizon; ++t) {
        for (int x = 0; x < mdp.n_states(); ++x) {
            // remaining rewards along the policy chain, discounted from step t
            std::vector<double> rewards;
            rewards.reserve(mdp.horizon - t);
            int cur = x;
            double disc = std::pow(gamma, t);
            double factor = disc;
            for (int k = t; k < mdp.horizon; ++k) {
                cur = policy.next_state[cur];
                rewards.push_back(factor * r[cur]);
                factor *= gamma;
            }
            // the staircase encodes the already-discounted sequence, so the
            // cost -s12 equals -gamma^t * value; rescale by gamma^-t
            const PiecewisePath path = build_reward_time_path(rewards, 1.0);
            const TruncatedTensor s = signature(path, 2);
            const double cost = -s.at({0, 1});
            grids.signature_route(t, x) = -cost / disc;
        }
    }
    return grids;
}

BranchResult chen_optimality_eval(const FiniteSignatureMDP& mdp,
                                  const DeterministicPolicy& base_policy,
                                  int branch_state, const std::vector<int>& candidates,
                                  int t, int depth) {
    mdp.validate();
    base_policy.validate(mdp.n_states());
    if (candidates.empty()) throw std::invalid_argument("candidate set must be nonempty");
    if (branch_state < 0 || branch_state >= mdp.n_states()) {
        throw std::invalid_argument("branch state out of range");
    }
    if (t < 0 || t > mdp.horizon) throw std::invalid_argument("branch time out of range");

    BranchResult result;
    for (int cand : candidates) {
        if (cand < 0 || cand >= mdp.n_states()) {
            throw std::invalid_argument("candidate state out of range");
        }
        DeterministicPolicy modified = base_policy;
        modified.next_state[branch_state] = cand;
        PiecewisePath tail;
        tail.points.push_back(mdp.observations[branch_state]);
        int cur = branch_state;
        for (int k = t; k < mdp.horizon; ++k) {
            cur = modified.next_state[cur];
            tail.points.push_back(mdp.observations[cur]);
        }
        const TruncatedTensor s = signature(tail, depth);
        const double cost = std::abs(s.at({0, 1}));
        result.all.push_back({cand, cost});
        if (result.best_candidate < 0 || cost < result.best_cost) {
            result.best_candidate = cand;
            result.best_cost = cost;
        }
    }
    return result;
}

}  // namespace sigctl
