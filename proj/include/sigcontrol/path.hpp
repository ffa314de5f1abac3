#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sigcontrol/tensor_algebra.hpp"

namespace sigctl {

/// Piecewise-linear path in R^d: an ordered list of points with optional
/// strictly increasing timestamps.  Without timestamps the path is taken
/// to be traversed at unit speed over [0,1].
struct PiecewisePath {
    std::vector<Eigen::VectorXd> points;
    std::vector<double> times;  // empty or one per point

    PiecewisePath() = default;
    explicit PiecewisePath(std::vector<Eigen::VectorXd> pts,
                           std::vector<double> ts = {});

    int dim() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
    std::size_t size() const { return points.size(); }
    bool has_times() const { return !times.empty(); }

    /// Timestamp of node i (uniform over [0,1] when absent).
    double time_at(std::size_t i) const;

    void validate() const;
};

/// Depth-m signature via Chen's identity: the ordered truncated product of
/// segment exponentials, folded left to right.  Independent of timestamps.
TruncatedTensor signature(const PiecewisePath& path, int depth);

/// Joins two paths whose junction points agree within `tol`; the duplicate
/// junction node is dropped and p2's timestamps are shifted to continue p1.
PiecewisePath concat(const PiecewisePath& p1, const PiecewisePath& p2,
                     double tol = 1e-9);

/// Chen update of a running signature with a newly traversed subpath.
TruncatedTensor update_signature(const TruncatedTensor& s,
                                 const PiecewisePath& subpath, int depth);

/// Prepends time as coordinate 0, giving a d+1 dimensional path.
PiecewisePath time_augment(const PiecewisePath& path);

/// Inserts factor-1 evenly spaced collinear points inside every segment.
PiecewisePath subdivide(const PiecewisePath& path, int factor);

/// Pointwise scaling of every node by a constant factor.
PiecewisePath scaled(const PiecewisePath& path, double factor);

/// Translation of every node by a constant vector.
PiecewisePath shifted(const PiecewisePath& path, const Eigen::VectorXd& c);

/// Suffix of the path starting at node index `from` (times preserved).
PiecewisePath suffix_from(const PiecewisePath& path, std::size_t from);

/// Index of the node closest (Euclidean) to `q`; ties break low.
std::size_t nearest_node(const PiecewisePath& path, const Eigen::VectorXd& q);

/// Max pairwise node distance, used for arrival tolerances.
double path_diameter(const PiecewisePath& path);

/// Total 1-variation (sum of segment lengths).
double path_length(const PiecewisePath& path);

/// Smooths a waypoint polyline into n_nodes points by minimizing
/// squared deviation from the resampled waypoints plus
/// smooth_weight * squared second differences, via adaptive-moment
/// gradient descent from the linear-interpolation initialization.
PiecewisePath smoothing_spline(const PiecewisePath& waypoints, int n_nodes,
                               double smooth_weight, int iterations,
                               double step_size);

/// Recovers an n_nodes path with fixed first node `start` whose depth-m
/// signature is as close as possible to `target` (squared algebra
/// distance), optimized with finite-difference adaptive moments.
/// `init` optionally seeds the free nodes; by default they start at
/// `start` with a small deterministic jitter.
PiecewisePath reconstruct_from_signature(const TruncatedTensor& target,
                                         int n_nodes,
                                         const Eigen::VectorXd& start,
                                         int iterations, double step_size,
                                         std::uint64_t seed,
                                         const PiecewisePath& init = {});

}  // namespace sigctl
