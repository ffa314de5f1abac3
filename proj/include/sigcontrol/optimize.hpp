#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace sigctl {

/// Derivative-free minimizers shared by MPC planning, nested terminal
/// optimization, path reconstruction and similar-path generation.
///
/// AdaptiveMomentFD drives the standard adaptive-moment update with
/// central-difference gradient estimates; CrossEntropy is iterated
/// Gaussian sampling with elite refitting.  Both are deterministic for a
/// fixed seed and return the best point ever evaluated.
struct OptimizerSpec {
    enum class Method { AdaptiveMomentFD, CrossEntropy };

    Method method = Method::AdaptiveMomentFD;
    int iterations = 100;
    std::uint64_t seed = 1234;

    // AdaptiveMomentFD
    double step_size = 0.1;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double fd_step = 1e-4;

    // CrossEntropy
    int population = 8;
    int elites = 3;
    double init_stddev = 0.5;
    double stddev_floor = 1e-3;

    void validate() const;
};

struct OptimizeResult {
    Eigen::VectorXd x_best;
    double f_best = 0.0;
    std::vector<double> trace;  // best-so-far objective per iteration
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

OptimizeResult minimize(const Objective& f, const Eigen::VectorXd& x0,
                        const OptimizerSpec& spec);

}  // namespace sigctl
