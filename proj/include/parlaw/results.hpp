#pragma once

#include "parlaw/matrix.hpp"

namespace parlaw {

// Both sides of a matrix-valued identity plus its normalized residual;
// pass iff residual <= tol under the scale-free tolerance model.
struct IdentityResult {
    Matrix lhs;
    Matrix rhs;
    double residual = 0.0;
    bool pass = false;
};

// Same for real-valued identities. alt_route_residual carries the
// agreement of an independent second evaluation route when one exists.
struct ScalarIdentityResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    bool pass = false;
    double alt_route_residual = 0.0;
};

// A gap matrix that an inequality claims is PSD.
struct GapResult {
    Matrix gap;
    double lambda_min = 0.0;
    bool psd = false;
};

}  // namespace parlaw
