#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <vector>

namespace sigctl {

/// Element of the truncated tensor algebra T^m(R^d), stored densely.
///
/// Level k holds d^k coefficients in row-major multi-index order
/// (i_1,...,i_k) -> offset sum_j i_j * d^(k-j), 0-based axes, leftmost
/// index most significant.  Level 0 is a single scalar; signatures keep
/// it at exactly 1.
class TruncatedTensor {
public:
    TruncatedTensor(int dim, int depth);

    /// Algebra unit: level 0 = 1, everything above zero.
    static TruncatedTensor unit(int dim, int depth);

    int dim() const { return dim_; }
    int depth() const { return depth_; }

    Eigen::VectorXd& level(int k) { return levels_[k]; }
    const Eigen::VectorXd& level(int k) const { return levels_[k]; }

    double scalar() const { return levels_[0][0]; }

    /// Coefficient by multi-index, e.g. at({0,1}) is the (1,2) entry of
    /// level 2 in 1-based notation.
    double at(std::initializer_list<int> index) const;

    /// Squared Euclidean norm over all levels (level 0 included).
    double squared_norm() const;

    bool all_finite() const;

    /// Copy truncated to a shallower depth (no-op when depth >= this).
    TruncatedTensor truncated(int depth) const;

private:
    int dim_;
    int depth_;
    std::vector<Eigen::VectorXd> levels_;
};

TruncatedTensor add(const TruncatedTensor& a, const TruncatedTensor& b);
TruncatedTensor scale(double lambda, const TruncatedTensor& a);

/// Truncated tensor product: level k of the result is
/// sum_{l=0..k} a_l (x) b_{k-l}; levels above the truncation depth are
/// discarded.
TruncatedTensor product(const TruncatedTensor& a, const TruncatedTensor& b);

/// <A,B> = sum_k <a_k, b_k> with the Euclidean inner product per level.
double inner(const TruncatedTensor& a, const TruncatedTensor& b);

/// Dilation: level k multiplied by alpha^k.
TruncatedTensor dilate(double alpha, const TruncatedTensor& a);

/// Exact signature of a straight segment with increment v:
/// level k = v^(x)k / k!.
TruncatedTensor segment_exponential(const Eigen::VectorXd& v, int depth);

}  // namespace sigctl
