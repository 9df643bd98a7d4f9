#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "parlaw/matrix.hpp"

namespace parlaw {

struct HermitianEigen {
    std::vector<double> eigenvalues;  // sorted descending
    Matrix vectors;                   // unitary; H = V diag(eigenvalues) V*
};

// Raised when the Jacobi sweep cap is hit before the off-diagonal mass
// drops below the convergence target.
class EigenError : public std::runtime_error {
public:
    EigenError(const std::string& msg, double offdiag)
        : std::runtime_error(msg), offdiag_(offdiag) {}
    double offdiag_residual() const { return offdiag_; }

private:
    double offdiag_;
};

// Cyclic Jacobi with complex Givens rotations. Input must be Hermitian
// within 1e-12 * max(1, ||H||_F). Converged when the off-diagonal Frobenius
// norm drops below 1e-14 * max(1, ||H||_F); gives up after 40 full sweeps.
HermitianEigen hermitian_eig(const Matrix& h);

}  // namespace parlaw
