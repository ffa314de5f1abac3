#include "sigcontrol/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sigctl {

namespace {

// Gaussian draws via Box-Muller over mt19937_64 so results do not depend
// on the standard library's distribution implementation.
class Gaussian {
public:
    explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 1e-300);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    double uniform() {
        return (rng_() >> 11) * (1.0 / 9007199254740992.0);  // [0,1) with 53 bits
    }

    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

OptimizeResult run_adaptive_moment_fd(const Objective& f, const Eigen::VectorXd& x0,
                                      const OptimizerSpec& spec) {
    const Eigen::Index n = x0.size();
    Eigen::VectorXd x = x0;
    Eigen::VectorXd m = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);

    OptimizeResult result;
    result.x_best = x0;
    result.f_best = f(x0);
    if (!std::isfinite(result.f_best)) {
        throw std::runtime_error("objective non-finite at initial point");
    }
    result.trace.reserve(spec.iterations);

    Eigen::VectorXd grad(n);
    Eigen::VectorXd probe = x;
    for (int it = 1; it <= spec.iterations; ++it) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double xj = x[j];
            probe = x;
            probe[j] = xj + spec.fd_step;
            const double fp = f(probe);
            probe[j] = xj - spec.fd_step;
            const double fm = f(probe);
            grad[j] = (fp - fm) / (2.0 * spec.fd_step);
        }
        m = spec.beta1 * m + (1.0 - spec.beta1) * grad;
        v = spec.beta2 * v + (1.0 - spec.beta2) * grad.cwiseProduct(grad).eval();
        const double bc1 = 1.0 - std::pow(spec.beta1, it);
        const double bc2 = 1.0 - std::pow(spec.beta2, it);
        for (Eigen::Index j = 0; j < n; ++j) {
            const double mh = m[j] / bc1;
            const double vh = v[j] / bc2;
            x[j] -= spec.step_size * mh / (std::sqrt(vh) + spec.epsilon);
        }
        const double fx = f(x);
        if (std::isfinite(fx) && fx < result.f_best) {
            result.f_best = fx;
            result.x_best = x;
        }
        result.trace.push_back(result.f_best);
    }
    return result;
}

OptimizeResult run_cross_entropy(const Objective& f, const Eigen::VectorXd& x0,
                                 const OptimizerSpec& spec) {
    const Eigen::Index n = x0.size();
    Gaussian gauss(spec.seed);

    Eigen::VectorXd mean = x0;
    Eigen::VectorXd stddev = Eigen::VectorXd::Constant(n, spec.init_stddev);

    OptimizeResult result;
    result.x_best = x0;
    result.f_best = f(x0);
    if (!std::isfinite(result.f_best)) {
        throw std::runtime_error("objective non-finite at initial point");
    }
    result.trace.reserve(spec.iterations);

    std::vector<Eigen::VectorXd> samples(spec.population);
    std::vector<double> scores(spec.population);
    std::vector<int> order(spec.population);

    for (int it = 0; it < spec.iterations; ++it) {
        for (int s = 0; s < spec.population; ++s) {
            Eigen::VectorXd cand(n);
            for (Eigen::Index j = 0; j < n; ++j) {
                cand[j] = mean[j] + stddev[j] * gauss.next();
            }
            samples[s] = std::move(cand);
            const double fs = f(samples[s]);
            scores[s] = std::isfinite(fs) ? fs : std::numeric_limits<double>::infinity();
            if (scores[s] < result.f_best) {
                result.f_best = scores[s];
                result.x_best = samples[s];
            }
        }
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return scores[a] < scores[b]; });

        Eigen::VectorXd new_mean = Eigen::VectorXd::Zero(n);
        for (int e = 0; e < spec.elites; ++e) new_mean += samples[order[e]];
        new_mean /= spec.elites;
        Eigen::VectorXd var = Eigen::VectorXd::Zero(n);
        for (int e = 0; e < spec.elites; ++e) {
            var += (samples[order[e]] - new_mean).cwiseAbs2();
        }
        var /= spec.elites;
        mean = new_mean;
        for (Eigen::Index j = 0; j < n; ++j) {
            stddev[j] = std::max(std::sqrt(var[j]), spec.stddev_floor);
        }
        result.trace.push_back(result.f_best);
    }
    return result;
}

}  // namespace

void OptimizerSpec::validate() const {
    if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
    if (method == Method::AdaptiveMomentFD) {
        if (fd_step <= 0.0) throw std::invalid_argument("fd_step must be > 0");
    } else {
        if (population < 1 || elites < 1 || elites > population) {
            throw std::invalid_argument("need population >= elites >= 1");
        }
    }
}

OptimizeResult minimize(const Objective& f, const Eigen::VectorXd& x0,
                        const OptimizerSpec& spec) {
    spec.validate();
    if (spec.iterations == 0) {
        OptimizeResult r;
        r.x_best = x0;
        r.f_best = f(x0);
        return r;
    }
    return spec.method == OptimizerSpec::Method::AdaptiveMomentFD
               ? run_adaptive_moment_fd(f, x0, spec)
               : run_cross_entropy(f, x0, spec);
}

}  // namespace sigctl
