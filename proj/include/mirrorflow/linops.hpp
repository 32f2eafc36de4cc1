#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirrorflow {

// Numerical failure (non-convergence, step underflow, ...) as opposed to
// usage errors, which throw std::invalid_argument / std::domain_error.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Points in the primal space E and in its dual E*. Kept as distinct types so
// that primal/dual mix-ups fail to compile instead of producing garbage.
struct PrimalVec {
    std::vector<double> e;

    PrimalVec() = default;
    explicit PrimalVec(std::size_t d) : e(d, 0.0) {}
    explicit PrimalVec(std::vector<double> entries) : e(std::move(entries)) {}
    PrimalVec(std::initializer_list<double> entries) : e(entries) {}

    std::size_t size() const { return e.size(); }
    double operator[](std::size_t i) const { return e[i]; }
    double& operator[](std::size_t i) { return e[i]; }
    std::span<const double> span() const { return {e.data(), e.size()}; }
};

struct DualVec {
    std::vector<double> e;

    DualVec() = default;
    explicit DualVec(std::size_t d) : e(d, 0.0) {}
    explicit DualVec(std::vector<double> entries) : e(std::move(entries)) {}
    DualVec(std::initializer_list<double> entries) : e(entries) {}

    std::size_t size() const { return e.size(); }
    double operator[](std::size_t i) const { return e[i]; }
    double& operator[](std::size_t i) { return e[i]; }
    std::span<const double> span() const { return {e.data(), e.size()}; }
};

bool all_finite(std::span<const double> v);

// Throws numerical_error naming `what` if v contains a NaN or Inf.
void require_finite(std::span<const double> v, const char* what);

enum class NormKind { l1, l2, linf };

// l1 <-> linf, l2 <-> l2.
NormKind dual_norm_kind(NormKind kind);

double norm(std::span<const double> v, NormKind kind);
inline double norm(const PrimalVec& v, NormKind kind) { return norm(v.span(), kind); }
inline double norm(const DualVec& v, NormKind kind) { return norm(v.span(), kind); }

// <zeta, x> = sum_j zeta_j x_j, the pairing between E* and E.
double pairing(const DualVec& zeta, const PrimalVec& x);

// Row-major dense matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::span<const double> data() const { return {a_.data(), a_.size()}; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

std::vector<double> matvec(const DenseMatrix& m, std::span<const double> x);
inline std::vector<double> matvec(const DenseMatrix& m, const PrimalVec& x) {
    return matvec(m, x.span());
}

// G = B^T B.
DenseMatrix gram(const DenseMatrix& b);

double max_abs_entry(const DenseMatrix& m);

// Dominant-eigenvalue magnitude of a symmetric matrix by power iteration with
// Rayleigh-quotient stopping. The start vector is all-ones plus seeded noise,
// so results are reproducible. Relative change below tol terminates.
double spectral_radius(const DenseMatrix& m, double tol = 1e-10, int max_iters = 10000);

} // namespace mirrorflow
