#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fqm/errors.hpp"

namespace fqm {

using cd = std::complex<double>;

/// Dense square complex matrix, row-major. This is the working
/// representation for every operator at desk scale; the factored path in
/// crtfast exists to avoid it where it matters.
class DenseMap {
public:
    DenseMap() = default;
    explicit DenseMap(int64_t n) : n_(n), a_(static_cast<size_t>(n) * n, cd(0.0, 0.0)) {}

    int64_t dim() const { return n_; }
    cd& at(int64_t i, int64_t j) { return a_[i * n_ + j]; }
    const cd& at(int64_t i, int64_t j) const { return a_[i * n_ + j]; }
    cd* data() { return a_.data(); }
    const cd* data() const { return a_.data(); }
    const std::vector<cd>& values() const { return a_; }

    static DenseMap identity(int64_t n);

private:
    int64_t n_ = 0;
    std::vector<cd> a_;
};

DenseMap matmul(const DenseMap& a, const DenseMap& b);
DenseMap adjoint(const DenseMap& a);
DenseMap matpow(const DenseMap& a, int64_t k);
std::vector<cd> matvec(const DenseMap& a, const std::vector<cd>& x);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const DenseMap& a, const DenseMap& b);
double max_abs_diff(const std::vector<cd>& a, const std::vector<cd>& b);
double max_abs(const DenseMap& a);

/// || A A^dagger - I ||_inf
double unitarity_residual(const DenseMap& a);

/// Kronecker product, row-major in argument order.
DenseMap kron(const DenseMap& a, const DenseMap& b);

/// Divide both matrices by their entry at the position where |a| is
/// largest, then take the max abs difference. Insensitive to a global
/// phase between the two operands.
double phase_aligned_diff(const DenseMap& a, const DenseMap& b);
double phase_aligned_diff(const std::vector<cd>& a, const std::vector<cd>& b);

/// Residual of A against c*I for the best unimodular scalar c;
/// returns {residual, c}.
std::pair<double, cd> scalar_multiple_of_identity(const DenseMap& a);

} // namespace fqm
