#pragma once

#include <vector>

#include "parlaw/matrix.hpp"
#include "parlaw/results.hpp"

namespace parlaw {

// Evaluators for the exact operator and vector equalities, plus the two
// Bohr-type gap matrices they imply. Each evaluator computes both sides
// independently and reports the scale-free residual; every one of these is
// an identity, so the residual stays at rounding level for all valid input.

// Finite weighted node set standing in for a measure space: node k carries
// mass weights[k] > 0.
struct QuadratureMeasure {
    std::vector<double> weights;

    int size() const { return static_cast<int>(weights.size()); }
    void validate() const;  // nonempty, strictly positive
};

// Two-index table alpha(k, l) with conj(alpha(k,l)) * alpha(l,k) = 1 for
// all k, l (so the diagonal is unimodular).
struct AlphaField {
    int m = 0;
    std::vector<Complex> values;  // m*m row-major

    Complex operator()(int k, int l) const {
        return values[static_cast<std::size_t>(k) * m + l];
    }
    void validate() const;

    // alpha(k, l) = sqrt(r_k / r_l); the real positive special case
    static AlphaField from_weights(const std::vector<double>& r);
};

// Node-indexed family of same-dimension matrices.
using OperatorField = std::vector<Matrix>;

// Positive weights r_1..r_n, optionally constrained by sum 1/r_i = 1.
struct WeightVector {
    enum class Constraint { none, sum_reciprocal_one };

    std::vector<double> r;
    Constraint constraint = Constraint::none;

    int size() const { return static_cast<int>(r.size()); }
    void validate() const;  // positive; constrained: |sum 1/r_i - 1| <= 1e-12
};

// |A+B|^2 + |A-B|^2 = 2|A|^2 + 2|B|^2
IdentityResult lemma_parallelogram(const Matrix& a, const Matrix& b, double tol = kDefaultTol);

// |A+B|^2 - |A-B|^2 = 4 Re(A*B)
IdentityResult lemma_polarization(const Matrix& a, const Matrix& b, double tol = kDefaultTol);

// Double-sum form over a weighted node set:
//   sum_kl w_k w_l ( |a(k,l)A_k - a(l,k)A_l|^2 + |a(k,l)B_k - a(l,k)B_l|^2 )
//     = 2 sum_kl w_k w_l |a(k,l)A_k - a(l,k)B_l|^2 - 2 |sum_k w_k (A_k - B_k)|^2
IdentityResult field_parallelogram(const OperatorField& as, const OperatorField& bs,
                                   const QuadratureMeasure& mu, const AlphaField& alpha,
                                   double tol = kDefaultTol);

// Weighted n-term form (left side over i < j, right side over all i, j):
//   sum_{i<j} |s_ij A_i - s_ji A_j|^2 + (same in B)
//     = sum_{i,j} |s_ij A_i - s_ji B_j|^2 - |sum_i (A_i - B_i)|^2
// with s_ij = sqrt(r_i / r_j). No constraint on r beyond positivity.
IdentityResult generalized_parallelogram(const std::vector<Matrix>& as,
                                         const std::vector<Matrix>& bs, const WeightVector& r,
                                         double tol = kDefaultTol);

// With sum 1/r_i = 1:
//   sum_{i<j} |s_ij A_i - s_ji A_j|^2 = sum_i r_i |A_i|^2 - |sum_i A_i|^2
// The left side is a sum of squares, hence PSD.
IdentityResult zhang_fu_identity(const std::vector<Matrix>& as, const WeightVector& r,
                                 double tol = kDefaultTol);

// Two-term restatement in t > 0:
//   |A1+A2|^2 + (1/t)|t A1 - A2|^2 = (1+t)|A1|^2 + (1 + 1/t)|A2|^2
IdentityResult two_term_identity(const Matrix& a1, const Matrix& a2, double t,
                                 double tol = kDefaultTol);

// Bohr gap: sum_i r_i |A_i|^2 - |sum_i A_i|^2 with sum 1/r_i = 1; PSD, and
// equal to the zhang_fu left side.
GapResult bohr_gap(const std::vector<Matrix>& as, const WeightVector& r, double tol = kDefaultTol);

// Field Bohr gap: sum_kl w_k w_l |a(k,l)A_k - a(l,k)B_l|^2
//   - |sum_k w_k (A_k - B_k)|^2; PSD, and equal to half the
// field_parallelogram left side.
GapResult field_bohr_gap(const OperatorField& as, const OperatorField& bs,
                         const QuadratureMeasure& mu, const AlphaField& alpha,
                         double tol = kDefaultTol);

// Hilbert-Schmidt norm identity under sum_i (A_i - B_i) = 0 (full sums):
//   sum_ij ||A_i-A_j||_2^2 + sum_ij ||B_i-B_j||_2^2 = 2 sum_ij ||A_i-B_j||_2^2
ScalarIdentityResult hilbert_schmidt_identity(const std::vector<Matrix>& as,
                                              const std::vector<Matrix>& bs,
                                              double tol = kDefaultTol);

// Weighted vector norm identity (i < j on the left, all i, j on the right):
//   sum_{i<j} ||s_ij x_i - s_ji x_j||^2 + (same in y)
//     = sum_{i,j} ||s_ij x_i - s_ji y_j||^2 - ||sum_i (x_i - y_i)||^2
// Also evaluated a second way by embedding x_i -> x_i (x) e for a unit e and
// running generalized_parallelogram; alt_route_residual reports agreement.
ScalarIdentityResult vector_weighted_identity(const std::vector<Vector>& xs,
                                              const std::vector<Vector>& ys,
                                              const WeightVector& r, double tol = kDefaultTol);

// Unweighted vector identity (full sums on both sides):
//   sum_ij ||x_i-x_j||^2 + sum_ij ||y_i-y_j||^2
//     = 2 sum_ij ||x_i-y_j||^2 - 2 ||sum_i (x_i-y_i)||^2
ScalarIdentityResult vector_identity(const std::vector<Vector>& xs, const std::vector<Vector>& ys,
                                     double tol = kDefaultTol);

}  // namespace parlaw
