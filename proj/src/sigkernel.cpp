#include "sigcontrol/sigkernel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sigctl {

namespace {

constexpr long kMaxRefinedAxis = 1 << 14;  // refined grid cap per axis

}  // namespace

void SignatureKernelConfig::validate() const {
    if (static_kernel == StaticKernel::Rbf && !(bandwidth > 0.0)) {
        throw std::invalid_argument("RBF bandwidth must be > 0");
    }
    if (dyadic_order < 0 || dyadic_order > 6) {
        throw std::invalid_argument("dyadic_order must be in [0, 6]");
    }
}

Eigen::MatrixXd static_gram(const PiecewisePath& x, const PiecewisePath& y,
                            const SignatureKernelConfig& cfg) {
    cfg.validate();
    if (x.dim() != y.dim()) throw std::invalid_argument("static_gram: dimension mismatch");
    const Eigen::Index nx = static_cast<Eigen::Index>(x.size());
    const Eigen::Index ny = static_cast<Eigen::Index>(y.size());
    Eigen::MatrixXd g(nx, ny);
    if (cfg.static_kernel == SignatureKernelConfig::StaticKernel::Linear) {
        for (Eigen::Index i = 0; i < nx; ++i) {
            for (Eigen::Index j = 0; j < ny; ++j) {
                g(i, j) = x.points[i].dot(y.points[j]);
            }
        }
    } else {
        const double inv = 1.0 / (2.0 * cfg.bandwidth * cfg.bandwidth);
        for (Eigen::Index i = 0; i < nx; ++i) {
            for (Eigen::Index j = 0; j < ny; ++j) {
                g(i, j) = std::exp(-(x.points[i] - y.points[j]).squaredNorm() * inv);
            }
        }
    }
    return g;
}

double kernel(const PiecewisePath& x, const PiecewisePath& y,
              const SignatureKernelConfig& cfg) {
    cfg.validate();
    if (x.size() < 2 || y.size() < 2) {
        // constant paths have unit signature, so the solve degenerates to 1
        // only when one side has no increments at all
        if (x.size() < 1 || y.size() < 1) throw std::invalid_argument("kernel: empty path");
        return 1.0;
    }
    const Eigen::MatrixXd g = static_gram(x, y, cfg);
    const Eigen::Index sx = g.rows() - 1;
    const Eigen::Index sy = g.cols() - 1;
    const long refine = 1L << cfg.dyadic_order;
    const long px = static_cast<long>(sx) * refine;
    const long py = static_cast<long>(sy) * refine;
    if (px > kMaxRefinedAxis || py > kMaxRefinedAxis) {
        throw std::runtime_error("kernel: refined PDE grid exceeds cap");
    }

    // Mixed second-order increment of the Gram surface per data cell,
    // spread uniformly over the refined subcells.
    Eigen::MatrixXd inc(sx, sy);
    const double cell_scale = 1.0 / static_cast<double>(refine * refine);
    for (Eigen::Index i = 0; i < sx; ++i) {
        for (Eigen::Index j = 0; j < sy; ++j) {
            inc(i, j) = (g(i + 1, j + 1) - g(i + 1, j) - g(i, j + 1) + g(i, j)) * cell_scale;
        }
    }

    // u = 1 on both axes; cell update of order two in the increment.
    std::vector<double> prev(static_cast<std::size_t>(py) + 1, 1.0);
    std::vector<double> cur(static_cast<std::size_t>(py) + 1, 1.0);
    for (long i = 0; i < px; ++i) {
        cur[0] = 1.0;
        const Eigen::Index ci = static_cast<Eigen::Index>(i / refine);
        for (long j = 0; j < py; ++j) {
            const double a = inc(ci, static_cast<Eigen::Index>(j / refine));
            const double c1 = 1.0 + 0.5 * a + a * a * (1.0 / 12.0);
            const double c2 = 1.0 - a * a * (1.0 / 12.0);
            cur[j + 1] = (cur[j] + prev[j + 1]) * c1 - prev[j] * c2;
        }
        std::swap(prev, cur);
    }
    return prev[static_cast<std::size_t>(py)];
}

double distance2(const PiecewisePath& x, const PiecewisePath& y,
                 const SignatureKernelConfig& cfg) {
    const double d2 = kernel(x, x, cfg) - 2.0 * kernel(x, y, cfg) + kernel(y, y, cfg);
    return d2 > 0.0 ? d2 : 0.0;
}

double truncated_inner(const PiecewisePath& x, const PiecewisePath& y, int depth) {
    if (x.dim() != y.dim()) throw std::invalid_argument("truncated_inner: dimension mismatch");
    return inner(signature(x, depth), signature(y, depth));
}

}  // namespace sigctl
