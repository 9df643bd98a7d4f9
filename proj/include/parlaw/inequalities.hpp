#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parlaw/identities.hpp"
#include "parlaw/matrix.hpp"
#include "parlaw/norms.hpp"

namespace parlaw {

// Scalar function on [0, inf) with a declared convexity. The declaration is
// validated by a midpoint probe on a 50-point grid over [0, 100] before any
// inequality relies on it, so a mislabeled function fails fast.
struct ScalarFn {
    enum class Kind { power, hinge, linear };
    enum class Convexity { convex, concave, both };

    Kind kind = Kind::linear;
    double param = 1.0;  // exponent for power, threshold for hinge
    Convexity convexity = Convexity::both;

    double operator()(double t) const;
    double value_at_zero() const { return (*this)(0.0); }

    static ScalarFn power(double p);  // t^p; convex for p >= 1, concave for 0 < p <= 1
    static ScalarFn hinge(double c);  // max(t - c, 0), convex, needs c >= 0
    static ScalarFn linear();         // t, both

    // "power:1.5", "hinge:0.5", "linear"
    std::string str() const;
    static ScalarFn parse(std::string_view s);

    void validate_convexity() const;  // throws when the probe contradicts the flag
    void validate_nonnegative() const;
};

enum class RequiredSign { nonnegative, nonpositive, zero };

// Signed margin lhs - rhs of a norm inequality, judged against the required
// sign within tol * scale, scale = 1 + |lhs| + |rhs|.
struct Margin {
    double value = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double scale = 1.0;
    RequiredSign required_sign = RequiredSign::nonnegative;
    bool pass = false;
};

// How far a margin is from satisfying its sign requirement, normalized by
// its scale; pass iff violation <= tol.
double sign_violation(const Margin& m);

Margin judge_margin(double lhs, double rhs, RequiredSign required, double tol);
RequiredSign required_sign_for(ScalarFn::Convexity c);

// The two norm-argument matrices (lhs, rhs) of each inequality below,
// validated but with no norm applied yet. A caller sweeping a family of
// norms can take singular values once per side and reuse them.
std::pair<Matrix, Matrix> convex_combination_arguments(const std::vector<Matrix>& as,
                                                       const std::vector<double>& alphas,
                                                       const ScalarFn& g, double tol = kDefaultTol);
std::pair<Matrix, Matrix> superadditivity_arguments(const std::vector<Matrix>& as,
                                                    const ScalarFn& g, double tol = kDefaultTol);
std::pair<Matrix, Matrix> theorem_main_arguments(const std::vector<Matrix>& as,
                                                 const WeightVector& r, const ScalarFn& g,
                                                 double tol = kDefaultTol);

// ||| sum_j alpha_j g(A_j) ||| >= ||| g(sum_j alpha_j A_j) ||| for PSD A_j,
// nonnegative alpha summing to 1, convex g >= 0.
Margin convex_combination_ineq(const std::vector<Matrix>& as, const std::vector<double>& alphas,
                               const ScalarFn& g, const NormSpec& spec, double tol = kDefaultTol);

// ||| g(sum_j A_j) ||| >= ||| sum_j g(A_j) ||| for PSD A_j and convex g with
// g(0) = 0; the sign flips for concave g.
Margin superadditivity_ineq(const std::vector<Matrix>& as, const ScalarFn& g,
                            const NormSpec& spec, double tol = kDefaultTol);

// With sum 1/r_i = 1, f(t) = g(t^2), and s_ij = sqrt(r_i / r_j):
//   ||| sum_i (1/r_i) f(|r_i A_i|) |||
//     >= ||| sum_{i<j} f(|s_ij A_i - s_ji A_j|) + f(|sum_i A_i|) |||
// for convex g >= 0 with g(0) = 0; reversed for concave g.
Margin theorem_main_margin(const std::vector<Matrix>& as, const WeightVector& r,
                           const ScalarFn& g, const NormSpec& spec, double tol = kDefaultTol);

// With sum 1/r_i = 1:
//   sum_i r_i^{p-1} ||A_i||_p^p
//     vs sum_{i<j} ||s_ij A_i - s_ji A_j||_p^p + ||sum_i A_i||_p^p
// lhs >= rhs for p >= 2, lhs <= rhs for 0 < p <= 2, equality at p = 2.
// Evaluated through the quasi-norm formula directly when p < 1.
Margin schatten_weighted_ineq(const std::vector<Matrix>& as, const WeightVector& r, double p,
                              double tol = kDefaultTol);

// Same inequality for a list of exponents, computing each singular-value
// set once.
std::vector<Margin> schatten_weighted_margins(const std::vector<Matrix>& as,
                                              const WeightVector& r,
                                              const std::vector<double>& ps,
                                              double tol = kDefaultTol);

}  // namespace parlaw
