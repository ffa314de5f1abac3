#include "sigcontrol/tensor_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace sigctl {

namespace {

void check_compatible(const TruncatedTensor& a, const TruncatedTensor& b) {
    if (a.dim() != b.dim() || a.depth() != b.depth()) {
        throw std::invalid_argument("tensor dim/depth mismatch");
    }
}

}  // namespace

TruncatedTensor::TruncatedTensor(int dim, int depth) : dim_(dim), depth_(depth) {
    if (dim < 1 || depth < 0) {
        throw std::invalid_argument("TruncatedTensor requires dim >= 1, depth >= 0");
    }
    levels_.reserve(depth + 1);
    Eigen::Index size = 1;
    for (int k = 0; k <= depth; ++k) {
        levels_.push_back(Eigen::VectorXd::Zero(size));
        size *= dim;
    }
}

TruncatedTensor TruncatedTensor::unit(int dim, int depth) {
    TruncatedTensor t(dim, depth);
    t.levels_[0][0] = 1.0;
    return t;
}

double TruncatedTensor::at(std::initializer_list<int> index) const {
    const int k = static_cast<int>(index.size());
    if (k > depth_) throw std::invalid_argument("multi-index longer than depth");
    Eigen::Index offset = 0;
    for (int i : index) {
        if (i < 0 || i >= dim_) throw std::invalid_argument("multi-index axis out of range");
        offset = offset * dim_ + i;
    }
    return levels_[k][offset];
}

double TruncatedTensor::squared_norm() const {
    double s = 0.0;
    for (const auto& l : levels_) s += l.squaredNorm();
    return s;
}

bool TruncatedTensor::all_finite() const {
    for (const auto& l : levels_) {
        if (!l.allFinite()) return false;
    }
    return true;
}

TruncatedTensor TruncatedTensor::truncated(int depth) const {
    if (depth >= depth_) return *this;
    TruncatedTensor out(dim_, depth);
    for (int k = 0; k <= depth; ++k) out.level(k) = levels_[k];
    return out;
}

TruncatedTensor add(const TruncatedTensor& a, const TruncatedTensor& b) {
    check_compatible(a, b);
    TruncatedTensor out(a.dim(), a.depth());
    for (int k = 0; k <= a.depth(); ++k) out.level(k) = a.level(k) + b.level(k);
    return out;
}

TruncatedTensor scale(double lambda, const TruncatedTensor& a) {
    TruncatedTensor out(a.dim(), a.depth());
    for (int k = 0; k <= a.depth(); ++k) out.level(k) = lambda * a.level(k);
    return out;
}

TruncatedTensor product(const TruncatedTensor& a, const TruncatedTensor& b) {
    check_compatible(a, b);
    const int d = a.dim();
    const int m = a.depth();
    TruncatedTensor out(d, m);
    for (int k = 0; k <= m; ++k) {
        Eigen::VectorXd& ck = out.level(k);
        for (int l = 0; l <= k; ++l) {
            const Eigen::VectorXd& al = a.level(l);
            const Eigen::VectorXd& bk = b.level(k - l);
            // c[i*nb + j] += a[i] * b[j]; the a-index carries the high digits.
            const Eigen::Index na = al.size();
            const Eigen::Index nb = bk.size();
            double* c = ck.data();
            const double* ap = al.data();
            const double* bp = bk.data();
            for (Eigen::Index i = 0; i < na; ++i) {
                const double ai = ap[i];
                if (ai == 0.0) continue;
                double* row = c + i * nb;
                for (Eigen::Index j = 0; j < nb; ++j) row[j] += ai * bp[j];
            }
        }
    }
    return out;
}

double inner(const TruncatedTensor& a, const TruncatedTensor& b) {
    check_compatible(a, b);
    double s = 0.0;
    for (int k = 0; k <= a.depth(); ++k) s += a.level(k).dot(b.level(k));
    return s;
}

TruncatedTensor dilate(double alpha, const TruncatedTensor& a) {
    TruncatedTensor out(a.dim(), a.depth());
    double factor = 1.0;
    for (int k = 0; k <= a.depth(); ++k) {
        out.level(k) = factor * a.level(k);
        factor *= alpha;
    }
    return out;
}

TruncatedTensor segment_exponential(const Eigen::VectorXd& v, int depth) {
    const int d = static_cast<int>(v.size());
    TruncatedTensor out = TruncatedTensor::unit(d, depth);
    for (int k = 1; k <= depth; ++k) {
        const Eigen::VectorXd& prev = out.level(k - 1);
        Eigen::VectorXd& cur = out.level(k);
        const double inv_k = 1.0 / k;
        for (Eigen::Index i = 0; i < prev.size(); ++i) {
            const double p = prev[i] * inv_k;
            for (int j = 0; j < d; ++j) cur[i * d + j] = p * v[j];
        }
    }
    return out;
}

}  // namespace sigctl
