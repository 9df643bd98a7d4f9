#pragma once

#include <vector>

#include "parlaw/identities.hpp"
#include "parlaw/matrix.hpp"
#include "parlaw/rng.hpp"

namespace parlaw {

enum class MatrixKind { ginibre, hermitian, psd, unitary, rank_one };
enum class AlphaMode { free, phase_weight };

// Row-major fill with complex Gaussians, then the named transform:
// hermitian = (G + G*)/2, psd = G*G, unitary = eigenvector matrix of a
// random Hermitian, rank_one = x (x) y from Gaussian vectors.
Matrix gen_matrix(MatrixKind kind, int dim, Rng& rng);

Vector gen_vector(int dim, Rng& rng);

// Constrained mode draws u_i in (0.1, 1.1) and sets r_i = (sum u) / u_i, so
// sum 1/r_i = 1 up to one rounding step; free mode draws r_i in (0.1, 10).
WeightVector gen_weights(int n, WeightVector::Constraint constraint, Rng& rng);

// free: upper triangle gets modulus in [0.25, 4] times a uniform phase and
// the mirror alpha(l,k) = 1/conj(alpha(k,l)); the diagonal is unimodular.
// phase_weight: alpha(k,l) = sqrt(r_k/r_l) for freshly drawn free weights.
AlphaField gen_alpha(int m, AlphaMode mode, Rng& rng);

// Node masses uniform in (0.05, 2).
QuadratureMeasure gen_measure(int m, Rng& rng);

// Nonnegative weights summing to 1 (uniform draws, normalized).
std::vector<double> gen_convex_weights(int n, Rng& rng);

}  // namespace parlaw
