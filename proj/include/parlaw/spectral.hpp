#pragma once

#include <functional>

#include "parlaw/eig.hpp"
#include "parlaw/matrix.hpp"

namespace parlaw {

struct PsdCheck {
    bool psd = false;
    double lambda_min = 0.0;
    double op_norm = 0.0;  // max |eigenvalue|, the scale of the test
};

// |A| = (A*A)^{1/2} via spectral mapping.
Matrix abs_op(const Matrix& a);

// f applied to the spectrum of a nominally PSD Hermitian matrix:
// V diag(f(lambda_i)) V*. Eigenvalues in [-tol * max(1, ||H||_2), 0) are
// clamped to 0 first; anything more negative is rejected, as is any f value
// that comes out non-finite.
Matrix apply_scalar_fn(const Matrix& h, const std::function<double(double)>& f,
                       double tol = kDefaultTol);

// Loewner-order test: psd iff lambda_min(H) >= -tol * max(1, ||H||_2).
PsdCheck is_psd(const Matrix& h, double tol = kDefaultTol);

}  // namespace parlaw
