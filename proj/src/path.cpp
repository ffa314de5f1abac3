#include "sigcontrol/path.hpp"

#include <cmath>
#include <stdexcept>

#include "sigcontrol/optimize.hpp"

namespace sigctl {

PiecewisePath::PiecewisePath(std::vector<Eigen::VectorXd> pts, std::vector<double> ts)
    : points(std::move(pts)), times(std::move(ts)) {
    validate();
}

double PiecewisePath::time_at(std::size_t i) const {
    if (!times.empty()) return times[i];
    if (points.size() < 2) return 0.0;
    return static_cast<double>(i) / static_cast<double>(points.size() - 1);
}

void PiecewisePath::validate() const {
    if (points.empty()) throw std::invalid_argument("path needs at least one point");
    const Eigen::Index d = points.front().size();
    for (const auto& p : points) {
        if (p.size() != d) throw std::invalid_argument("path points of mixed dimension");
    }
    if (!times.empty()) {
        if (times.size() != points.size()) {
            throw std::invalid_argument("times must match point count");
        }
        for (std::size_t i = 1; i < times.size(); ++i) {
            if (!(times[i] > times[i - 1])) {
                throw std::invalid_argument("timestamps must strictly increase");
            }
        }
    }
}

TruncatedTensor signature(const PiecewisePath& path, int depth) {
    path.validate();
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    const int d = path.dim();
    TruncatedTensor s = TruncatedTensor::unit(d, depth);
    for (std::size_t i = 1; i < path.points.size(); ++i) {
        const Eigen::VectorXd inc = path.points[i] - path.points[i - 1];
        if (inc.isZero(0.0)) continue;
        s = product(s, segment_exponential(inc, depth));
    }
    return s;
}

PiecewisePath concat(const PiecewisePath& p1, const PiecewisePath& p2, double tol) {
    p1.validate();
    p2.validate();
    if (p1.dim() != p2.dim()) throw std::invalid_argument("concat: dimension mismatch");
    const Eigen::VectorXd gap = p2.points.front() - p1.points.back();
    if (gap.lpNorm<Eigen::Infinity>() > tol) {
        throw std::invalid_argument("concat: junction mismatch beyond tolerance");
    }
    PiecewisePath out;
    out.points = p1.points;
    out.points.insert(out.points.end(), p2.points.begin() + 1, p2.points.end());
    if (p1.has_times() || p2.has_times()) {
        out.times.reserve(out.points.size());
        for (std::size_t i = 0; i < p1.size(); ++i) out.times.push_back(p1.time_at(i));
        const double shift = out.times.back() - p2.time_at(0);
        for (std::size_t i = 1; i < p2.size(); ++i) {
            out.times.push_back(p2.time_at(i) + shift);
        }
    }
    out.validate();
    return out;
}

TruncatedTensor update_signature(const TruncatedTensor& s, const PiecewisePath& subpath,
                                 int depth) {
    if (std::abs(s.scalar() - 1.0) > 1e-12) {
        throw std::invalid_argument("update_signature: running signature must have unit scalar");
    }
    return product(s, signature(subpath, depth));
}

PiecewisePath time_augment(const PiecewisePath& path) {
    path.validate();
    PiecewisePath out;
    out.points.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
        Eigen::VectorXd p(path.dim() + 1);
        p[0] = path.time_at(i);
        p.tail(path.dim()) = path.points[i];
        out.points.push_back(std::move(p));
    }
    out.times = path.times;
    return out;
}

PiecewisePath subdivide(const PiecewisePath& path, int factor) {
    path.validate();
    if (factor < 1) throw std::invalid_argument("subdivide factor must be >= 1");
    if (factor == 1 || path.size() < 2) return path;
    PiecewisePath out;
    out.points.reserve((path.size() - 1) * factor + 1);
    const bool timed = path.has_times();
    if (timed) out.times.reserve(out.points.capacity());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        for (int j = 0; j < factor; ++j) {
            const double a = static_cast<double>(j) / factor;
            out.points.push_back((1.0 - a) * path.points[i] + a * path.points[i + 1]);
            if (timed) out.times.push_back((1.0 - a) * path.times[i] + a * path.times[i + 1]);
        }
    }
    out.points.push_back(path.points.back());
    if (timed) out.times.push_back(path.times.back());
    return out;
}

PiecewisePath scaled(const PiecewisePath& path, double factor) {
    PiecewisePath out = path;
    for (auto& p : out.points) p *= factor;
    return out;
}

PiecewisePath shifted(const PiecewisePath& path, const Eigen::VectorXd& c) {
    PiecewisePath out = path;
    for (auto& p : out.points) p += c;
    return out;
}

PiecewisePath suffix_from(const PiecewisePath& path, std::size_t from) {
    if (from >= path.size()) throw std::invalid_argument("suffix start out of range");
    PiecewisePath out;
    out.points.assign(path.points.begin() + from, path.points.end());
    if (path.has_times()) {
        out.times.assign(path.times.begin() + from, path.times.end());
    }
    return out;
}

std::size_t nearest_node(const PiecewisePath& path, const Eigen::VectorXd& q) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < path.size(); ++i) {
        const double d = (path.points[i] - q).squaredNorm();
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

double path_diameter(const PiecewisePath& path) {
    double best = 0.0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        for (std::size_t j = i + 1; j < path.size(); ++j) {
            best = std::max(best, (path.points[i] - path.points[j]).norm());
        }
    }
    return best;
}

double path_length(const PiecewisePath& path) {
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        total += (path.points[i] - path.points[i - 1]).norm();
    }
    return total;
}

namespace {

// Waypoint polyline resampled at n evenly spaced arc-length-free parameters
// (uniform in segment index, matching the linear-interpolation init).
std::vector<Eigen::VectorXd> resample_polyline(const PiecewisePath& waypoints, int n) {
    std::vector<Eigen::VectorXd> out;
    out.reserve(n);
    const std::size_t m = waypoints.size();
    for (int i = 0; i < n; ++i) {
        const double u = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
        const double s = u * static_cast<double>(m - 1);
        const std::size_t k = std::min(static_cast<std::size_t>(s), m - 2);
        const double a = s - static_cast<double>(k);
        out.push_back((1.0 - a) * waypoints.points[k] + a * waypoints.points[k + 1]);
    }
    return out;
}

}  // namespace

PiecewisePath smoothing_spline(const PiecewisePath& waypoints, int n_nodes,
                               double smooth_weight, int iterations, double step_size) {
    waypoints.validate();
    if (waypoints.size() < 2) throw std::invalid_argument("smoothing_spline needs >= 2 waypoints");
    if (n_nodes < static_cast<int>(waypoints.size())) {
        throw std::invalid_argument("n_nodes must be >= waypoint count");
    }
    const int d = waypoints.dim();
    const std::vector<Eigen::VectorXd> target = resample_polyline(waypoints, n_nodes);
    std::vector<Eigen::VectorXd> x = target;  // linear interpolation init

    // Analytic gradient of  sum |x_i - y_i|^2 + w * sum |x_{i-1} - 2 x_i + x_{i+1}|^2
    std::vector<Eigen::VectorXd> m(n_nodes, Eigen::VectorXd::Zero(d));
    std::vector<Eigen::VectorXd> v(n_nodes, Eigen::VectorXd::Zero(d));
    std::vector<Eigen::VectorXd> grad(n_nodes, Eigen::VectorXd::Zero(d));
    const double b1 = 0.9, b2 = 0.999, eps = 1e-8;
    for (int it = 1; it <= iterations; ++it) {
        for (int i = 0; i < n_nodes; ++i) grad[i] = 2.0 * (x[i] - target[i]);
        for (int i = 1; i + 1 < n_nodes; ++i) {
            const Eigen::VectorXd r = x[i - 1] - 2.0 * x[i] + x[i + 1];
            grad[i - 1] += 2.0 * smooth_weight * r;
            grad[i] -= 4.0 * smooth_weight * r;
            grad[i + 1] += 2.0 * smooth_weight * r;
        }
        const double bc1 = 1.0 - std::pow(b1, it);
        const double bc2 = 1.0 - std::pow(b2, it);
        for (int i = 0; i < n_nodes; ++i) {
            m[i] = b1 * m[i] + (1.0 - b1) * grad[i];
            v[i] = b2 * v[i] + (1.0 - b2) * grad[i].cwiseAbs2();
            for (int j = 0; j < d; ++j) {
                x[i][j] -= step_size * (m[i][j] / bc1) / (std::sqrt(v[i][j] / bc2) + eps);
            }
        }
    }
    PiecewisePath out;
    out.points = std::move(x);
    return out;
}

PiecewisePath reconstruct_from_signature(const TruncatedTensor& target, int n_nodes,
                                         const Eigen::VectorXd& start, int iterations,
                                         double step_size, std::uint64_t seed,
                                         const PiecewisePath& init) {
    if (!target.all_finite()) throw std::invalid_argument("target signature has non-finite entries");
    if (n_nodes < 2) throw std::invalid_argument("reconstruction needs >= 2 nodes");
    const int d = target.dim();
    const int depth = target.depth();
    const int free_nodes = n_nodes - 1;

    const auto unpack = [&](const Eigen::VectorXd& theta) {
        PiecewisePath p;
        p.points.reserve(n_nodes);
        p.points.push_back(start);
        for (int i = 0; i < free_nodes; ++i) {
            p.points.push_back(theta.segment(i * d, d));
        }
        return p;
    };
    const auto objective = [&](const Eigen::VectorXd& theta) {
        const TruncatedTensor s = signature(unpack(theta), depth);
        const TruncatedTensor diff = add(s, scale(-1.0, target));
        return inner(diff, diff);
    };

    Eigen::VectorXd theta0(free_nodes * d);
    if (!init.points.empty()) {
        if (static_cast<int>(init.size()) != n_nodes || init.dim() != d) {
            throw std::invalid_argument("reconstruction init must have n_nodes points of matching dim");
        }
        for (int i = 0; i < free_nodes; ++i) theta0.segment(i * d, d) = init.points[i + 1];
    } else {
        // free nodes start at the fixed node, with a tiny deterministic
        // jitter so finite differences see distinct segments
        std::mt19937_64 rng(seed);
        for (Eigen::Index i = 0; i < theta0.size(); ++i) {
            const double u = (rng() >> 11) * (1.0 / 9007199254740992.0);
            theta0[i] = start[i % d] + 1e-3 * (2.0 * u - 1.0);
        }
    }

    OptimizerSpec spec;
    spec.method = OptimizerSpec::Method::AdaptiveMomentFD;
    spec.iterations = iterations;
    spec.step_size = step_size;
    spec.seed = seed;
    const OptimizeResult r = minimize(objective, theta0, spec);
    return unpack(r.x_best);
}

}  // namespace sigctl
