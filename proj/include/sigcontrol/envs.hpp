#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "sigcontrol/path.hpp"
#include "sigcontrol/sigdp.hpp"

namespace sigctl {

struct EnvState {
    Eigen::VectorXd x;
    double time = 0.0;
};

struct ActionSegment {
    Eigen::VectorXd u;
    double duration = 0.0;
};

struct PointMassParams {
    Eigen::Vector4d lower{0.0, 0.0, 0.0, 0.0};
    Eigen::Vector4d upper{100.0, 100.0, 5.0, 5.0};
    double u_max = 1.0;
};

/// Euler steps of the double integrator (p, v), clamping the state onto the
/// admissible box after every sub-step.  Returns the visited states after
/// each sub-step (initial state excluded).  State layout (px, py, vx, vy).
std::vector<EnvState> pointmass_step(const EnvState& state, const ActionSegment& action,
                                     double dt, const PointMassParams& params = {});

struct SpringDamperParams {
    double k1 = 2.0;
    double b1 = 0.05;
    double m1 = 1.0;
    double k2 = 1.0;
    double b2 = 0.05;
    double m2 = 2.0;
    double u_max = 1.0;
};

/// Fixed-step RK4 integration of the two-mass spring-damper system under a
/// constant action and constant disturbance on both acceleration equations.
/// State layout (p1, v1, p2, v2); returns states at dt spacing.
std::vector<EnvState> spring_damper_step(const EnvState& state, const ActionSegment& action,
                                         const Eigen::Vector2d& disturbance, double dt,
                                         const SpringDamperParams& params = {});

/// Rollout of x -> (x1^1.1, x2^1.1) + (eps, eps) from a strictly positive
/// start; path of n_steps+1 points.
PiecewisePath toy_power_map(const Eigen::Vector2d& x, int n_steps, double eps);

/// Observation path along the policy chain from start_state (n_steps
/// transitions, n_steps+1 points).
PiecewisePath mdp_observation_path(const FiniteSignatureMDP& mdp,
                                   const DeterministicPolicy& policy, int start_state,
                                   int n_steps);

/// Common stepping interface used by the MPC: planning rollouts are
/// disturbance-free, execution applies the configured disturbance.
class Environment {
public:
    virtual ~Environment() = default;

    virtual int state_dim() const = 0;
    virtual int action_dim() const = 0;
    virtual double action_limit() const = 0;

    /// Position-like observation used to build tracked paths.
    virtual Eigen::VectorXd observe(const EnvState& state) const = 0;
    virtual int obs_dim() const = 0;

    /// Disturbance-free model rollout sampled at n_eval points over the
    /// action duration (endpoint included, start excluded).
    virtual std::vector<EnvState> rollout(const EnvState& state, const ActionSegment& action,
                                          int n_eval) const = 0;

    /// One executed sub-step of length dt under the true disturbance.
    virtual EnvState execute(const EnvState& state, const Eigen::VectorXd& u,
                             double dt) const = 0;
};

class PointMassEnv : public Environment {
public:
    PointMassEnv(PointMassParams params, double dt) : params_(params), dt_(dt) {}

    int state_dim() const override { return 4; }
    int action_dim() const override { return 2; }
    double action_limit() const override { return params_.u_max; }
    Eigen::VectorXd observe(const EnvState& state) const override { return state.x.head(2); }
    int obs_dim() const override { return 2; }
    std::vector<EnvState> rollout(const EnvState& state, const ActionSegment& action,
                                  int n_eval) const override;
    EnvState execute(const EnvState& state, const Eigen::VectorXd& u, double dt) const override;

private:
    PointMassParams params_;
    double dt_;
};

class SpringDamperEnv : public Environment {
public:
    SpringDamperEnv(SpringDamperParams params, Eigen::Vector2d disturbance, double dt)
        : params_(params), disturbance_(disturbance), dt_(dt) {}

    int state_dim() const override { return 4; }
    int action_dim() const override { return 2; }
    double action_limit() const override { return params_.u_max; }
    Eigen::VectorXd observe(const EnvState& state) const override {
        Eigen::Vector2d p(state.x[0], state.x[2]);
        return p;
    }
    int obs_dim() const override { return 2; }
    std::vector<EnvState> rollout(const EnvState& state, const ActionSegment& action,
                                  int n_eval) const override;
    EnvState execute(const EnvState& state, const Eigen::VectorXd& u, double dt) const override;

private:
    SpringDamperParams params_;
    Eigen::Vector2d disturbance_;
    double dt_;
};

}  // namespace sigctl
