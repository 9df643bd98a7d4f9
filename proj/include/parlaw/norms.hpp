#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parlaw/matrix.hpp"
#include "parlaw/results.hpp"

namespace parlaw {

// Unitarily invariant norm selector. schatten(p) is a genuine norm for
// p >= 1 and a quasi-norm (no triangle inequality) for 0 < p < 1.
struct NormSpec {
    enum class Kind { schatten, kyfan, op, trace };

    Kind kind = Kind::schatten;
    double p = 2.0;  // schatten only
    int k = 1;       // kyfan only

    static NormSpec schatten(double p);
    static NormSpec kyfan(int k);
    static NormSpec operator_norm();
    static NormSpec trace_norm();

    bool quasi_norm() const { return kind == Kind::schatten && p < 1.0; }

    // "schatten:1.5", "kyfan:2", "operator", "trace"
    std::string str() const;
    static NormSpec parse(std::string_view s);
};

// Singular values, descending: square roots of the clamped eigenvalues of
// A*A (one eigensolve, no |A| round trip).
std::vector<double> singular_values(const Matrix& a);

double norm(const std::vector<double>& sv, const NormSpec& spec);
double norm(const Matrix& a, const NormSpec& spec);

// sum_i sigma_i^p, i.e. the p-th power of the Schatten p-norm without the
// 1/p round trip.
double schatten_pth_power(const std::vector<double>& sv, double p);

// The test family at a given dimension: schatten(p) for each p >= 1 in
// p_grid, operator, trace, and kyfan(1..dim).
std::vector<NormSpec> norm_test_family(int dim, const std::vector<double>& p_grid);

// || |A|^p ||_1 against ||A||_p^p, evaluated through two independent paths
// (spectral power of |A| vs the singular-value formula).
ScalarIdentityResult trace_identity_check(const Matrix& a, double p, double tol = kDefaultTol);

}  // namespace parlaw
