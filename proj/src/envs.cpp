#include "sigcontrol/envs.hpp"

#include <cmath>
#include <stdexcept>

namespace sigctl {

namespace {

Eigen::Vector4d clamp_box(const Eigen::Vector4d& x, const PointMassParams& params) {
    return x.cwiseMax(params.lower).cwiseMin(params.upper);
}

Eigen::Vector4d spring_damper_deriv(const Eigen::Vector4d& s, const Eigen::Vector2d& a,
                                    const Eigen::Vector2d& w, const SpringDamperParams& p) {
    const double p1 = s[0], v1 = s[1], p2 = s[2], v2 = s[3];
    const double dv1 = -(p.k1 + p.k2) * p1 / p.m1 - (p.b1 + p.b2) * v1 / p.m1 +
                       p.k2 * p2 / p.m1 + p.b2 * v2 / p.m1 + a[0] / p.m1 + w[0];
    const double dv2 = p.k2 * p1 / p.m2 + p.b2 * v1 / p.m2 - p.k2 * p2 / p.m2 -
                       p.b2 * v2 / p.m2 + a[1] / p.m1 + w[1];
    return Eigen::Vector4d(v1, dv1, v2, dv2);
}

Eigen::Vector4d rk4_step(const Eigen::Vector4d& s, const Eigen::Vector2d& a,
                         const Eigen::Vector2d& w, double dt, const SpringDamperParams& p) {
    const Eigen::Vector4d k1 = spring_damper_deriv(s, a, w, p);
    const Eigen::Vector4d k2 = spring_damper_deriv(s + 0.5 * dt * k1, a, w, p);
    const Eigen::Vector4d k3 = spring_damper_deriv(s + 0.5 * dt * k2, a, w, p);
    const Eigen::Vector4d k4 = spring_damper_deriv(s + dt * k3, a, w, p);
    return s + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

int substep_count(double duration, double dt) {
    const int n = static_cast<int>(std::round(duration / dt));
    return n > 0 ? n : 1;
}

}  // namespace

std::vector<EnvState> pointmass_step(const EnvState& state, const ActionSegment& action,
                                     double dt, const PointMassParams& params) {
    if (!(dt > 0.0)) throw std::invalid_argument("pointmass_step: dt must be > 0");
    if (action.u.size() != 2) throw std::invalid_argument("pointmass_step: action dim must be 2");
    const Eigen::Vector2d a = action.u.cwiseMax(-params.u_max).cwiseMin(params.u_max);

    std::vector<EnvState> out;
    const int n = substep_count(action.duration, dt);
    out.reserve(n);
    Eigen::Vector4d x = state.x;
    double t = state.time;
    const double h = action.duration / n;
    for (int i = 0; i < n; ++i) {
        Eigen::Vector4d next;
        next.head<2>() = x.head<2>() + x.tail<2>() * h;
        next.tail<2>() = x.tail<2>() + a * h;
        x = clamp_box(next, params);
        t += h;
        out.push_back({x, t});
    }
    return out;
}

std::vector<EnvState> spring_damper_step(const EnvState& state, const ActionSegment& action,
                                         const Eigen::Vector2d& disturbance, double dt,
                                         const SpringDamperParams& params) {
    if (!(dt > 0.0)) throw std::invalid_argument("spring_damper_step: dt must be > 0");
    if (action.u.size() != 2) throw std::invalid_argument("spring_damper_step: action dim must be 2");
    const Eigen::Vector2d a = action.u.cwiseMax(-params.u_max).cwiseMin(params.u_max);

    std::vector<EnvState> out;
    const int n = substep_count(action.duration, dt);
    out.reserve(n);
    Eigen::Vector4d x = state.x;
    double t = state.time;
    const double h = action.duration / n;
    for (int i = 0; i < n; ++i) {
        x = rk4_step(x, a, disturbance, h, params);
        t += h;
        out.push_back({x, t});
    }
    return out;
}

PiecewisePath toy_power_map(const Eigen::Vector2d& x, int n_steps, double eps) {
    if (n_steps < 1) throw std::invalid_argument("toy_power_map: n_steps must be >= 1");
    PiecewisePath path;
    path.points.reserve(n_steps + 1);
    Eigen::Vector2d cur = x;
    path.points.push_back(cur);
    for (int i = 0; i < n_steps; ++i) {
        if (!(cur[0] > 0.0) || !(cur[1] > 0.0)) {
            throw std::domain_error("toy_power_map: non-positive coordinate encountered");
        }
        cur = Eigen::Vector2d(std::pow(cur[0], 1.1) + eps, std::pow(cur[1], 1.1) + eps);
        path.points.push_back(cur);
    }
    return path;
}

PiecewisePath mdp_observation_path(const FiniteSignatureMDP& mdp,
                                   const DeterministicPolicy& policy, int start_state,
                                   int n_steps) {
    mdp.validate();
    policy.validate(mdp.n_states());
    if (start_state < 0 || start_state >= mdp.n_states()) {
        throw std::invalid_argument("start state out of range");
    }
    if (n_steps < 0 || n_steps > mdp.horizon) {
        throw std::invalid_argument("n_steps must be in [0, horizon]");
    }
    PiecewisePath path;
    path.points.reserve(n_steps + 1);
    int cur = start_state;
    path.points.push_back(mdp.observations[cur]);
    for (int i = 0; i < n_steps; ++i) {
        cur = policy.next_state[cur];
        path.points.push_back(mdp.observations[cur]);
    }
    return path;
}

std::vector<EnvState> PointMassEnv::rollout(const EnvState& state, const ActionSegment& action,
                                            int n_eval) const {
    // n_eval nodes at even spacing over the duration; the env substeps at dt_
    std::vector<EnvState> out;
    out.reserve(n_eval);
    EnvState cur = state;
    const double sub = action.duration / n_eval;
    for (int i = 0; i < n_eval; ++i) {
        ActionSegment piece{action.u, sub};
        const auto states = pointmass_step(cur, piece, std::min(dt_, sub), params_);
        cur = states.back();
        out.push_back(cur);
    }
    return out;
}

EnvState PointMassEnv::execute(const EnvState& state, const Eigen::VectorXd& u,
                               double dt) const {
    ActionSegment piece{u, dt};
    return pointmass_step(state, piece, dt, params_).back();
}

std::vector<EnvState> SpringDamperEnv::rollout(const EnvState& state,
                                               const ActionSegment& action, int n_eval) const {
    std::vector<EnvState> out;
    out.reserve(n_eval);
    EnvState cur = state;
    const double sub = action.duration / n_eval;
    for (int i = 0; i < n_eval; ++i) {
        ActionSegment piece{action.u, sub};
        const auto states =
            spring_damper_step(cur, piece, Eigen::Vector2d::Zero(), std::min(dt_, sub), params_);
        cur = states.back();
        out.push_back(cur);
    }
    return out;
}

EnvState SpringDamperEnv::execute(const EnvState& state, const Eigen::VectorXd& u,
                                  double dt) const {
    ActionSegment piece{u, dt};
    return spring_damper_step(state, piece, disturbance_, dt, params_).back();
}

}  // namespace sigctl
