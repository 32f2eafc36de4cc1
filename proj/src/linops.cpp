#include "mirrorflow/linops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace mirrorflow {

bool all_finite(std::span<const double> v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

void require_finite(std::span<const double> v, const char* what) {
    if (!all_finite(v)) {
        throw numerical_error(std::string("non-finite entries in ") + what);
    }
}

NormKind dual_norm_kind(NormKind kind) {
    switch (kind) {
        case NormKind::l1: return NormKind::linf;
        case NormKind::linf: return NormKind::l1;
        case NormKind::l2: return NormKind::l2;
    }
    return NormKind::l2;
}

double norm(std::span<const double> v, NormKind kind) {
    double acc = 0.0;
    switch (kind) {
        case NormKind::l1:
            for (double x : v) acc += std::abs(x);
            return acc;
        case NormKind::l2:
            for (double x : v) acc += x * x;
            return std::sqrt(acc);
        case NormKind::linf:
            for (double x : v) acc = std::max(acc, std::abs(x));
            return acc;
    }
    return acc;
}

double pairing(const DualVec& zeta, const PrimalVec& x) {
    if (zeta.size() != x.size()) {
        throw std::invalid_argument("pairing: dimension mismatch");
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += zeta[j] * x[j];
    return acc;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows_ * cols_ != a_.size()) {
        throw std::invalid_argument("DenseMatrix: rows*cols != entry count");
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> matvec(const DenseMatrix& m, std::span<const double> x) {
    if (m.cols() != x.size()) {
        throw std::invalid_argument("matvec: dimension mismatch");
    }
    std::vector<double> y(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

DenseMatrix gram(const DenseMatrix& b) {
    const std::size_t n = b.cols();
    DenseMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < b.rows(); ++k) acc += b(k, i) * b(k, j);
            g(i, j) = acc;
            g(j, i) = acc;
        }
    }
    return g;
}

double max_abs_entry(const DenseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) {
        throw std::invalid_argument("max_abs_entry: empty matrix");
    }
    double best = 0.0;
    for (double x : m.data()) best = std::max(best, std::abs(x));
    return best;
}

namespace {

// splitmix64, used only to derandomize the power-iteration start vector.
uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

double spectral_radius(const DenseMatrix& m, double tol, int max_iters) {
    const std::size_t n = m.rows();
    if (n != m.cols()) {
        throw std::invalid_argument("spectral_radius: matrix not square");
    }
    if (n == 0) {
        throw std::invalid_argument("spectral_radius: empty matrix");
    }
    const double scale = max_abs_entry(m);
    if (scale == 0.0) return 0.0;
    const double sym_tol = 1e-12 * scale;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(m(i, j) - m(j, i)) > sym_tol) {
                throw std::invalid_argument("spectral_radius: matrix not symmetric");
            }
        }
    }

    // All-ones start perturbed by seeded noise so the iteration cannot start
    // orthogonal to the dominant eigenvector.
    std::vector<double> v(n, 1.0);
    uint64_t state = 0x5eed5eed5eed5eedull;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
        v[i] += 1e-3 * (u - 0.5);
    }

    double lambda = 0.0;
    for (int iter = 0; iter < max_iters; ++iter) {
        const double vn = norm(std::span<const double>(v), NormKind::l2);
        for (double& x : v) x /= vn;
        std::vector<double> w = matvec(m, std::span<const double>(v));
        double rq = 0.0;
        for (std::size_t i = 0; i < n; ++i) rq += v[i] * w[i];
        if (iter > 0 && std::abs(rq - lambda) <= tol * std::max(1.0, std::abs(rq))) {
            return std::abs(rq);
        }
        lambda = rq;
        v = std::move(w);
        // If m v ~ 0 the dominant eigenvalue is 0 to working precision.
        if (norm(std::span<const double>(v), NormKind::l2) <= 1e-300 * scale) return 0.0;
    }
    throw numerical_error("spectral_radius: power iteration did not converge");
}

} // namespace mirrorflow
