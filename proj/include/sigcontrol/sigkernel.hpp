#pragma once

#include <Eigen/Dense>

#include "sigcontrol/path.hpp"

namespace sigctl {

/// Settings for the signature kernel k(X,Y) = <S(X),S(Y)> computed as the
/// terminal value of a Goursat PDE driven by static-kernel increments.
struct SignatureKernelConfig {
    enum class StaticKernel { Linear, Rbf };

    StaticKernel static_kernel = StaticKernel::Linear;
    double bandwidth = 0.5;  // RBF only: exp(-|x-y|^2 / (2 bw^2))
    int dyadic_order = 2;    // each grid cell refined 2^order times per axis

    void validate() const;
};

/// Static-kernel Gram matrix between all node pairs of X and Y.
Eigen::MatrixXd static_gram(const PiecewisePath& x, const PiecewisePath& y,
                            const SignatureKernelConfig& cfg);

/// Signature kernel via the second-order finite-difference scheme on the
/// dyadically refined grid.  Deterministic; throws on grid overflow.
double kernel(const PiecewisePath& x, const PiecewisePath& y,
              const SignatureKernelConfig& cfg);

/// Kernel-trick squared distance k(X,X) - 2 k(X,Y) + k(Y,Y), clamped at 0.
double distance2(const PiecewisePath& x, const PiecewisePath& y,
                 const SignatureKernelConfig& cfg);

/// Exact inner product of depth-m truncated signatures; the direct oracle
/// for the Linear static kernel.
double truncated_inner(const PiecewisePath& x, const PiecewisePath& y, int depth);

}  // namespace sigctl
