#include "parlaw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parlaw {

namespace {

Matrix rebuild(const HermitianEigen& e, const std::vector<double>& vals) {
    const int n = e.vectors.dim();
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Complex s(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                s += e.vectors(i, k) * vals[static_cast<std::size_t>(k)] * std::conj(e.vectors(j, k));
            m(i, j) = s;
        }
    }
    return real_part(m);  // V f(L) V* is Hermitian; strip eps-level skew
}

}  // namespace

Matrix apply_scalar_fn(const Matrix& h, const std::function<double(double)>& f, double tol) {
    HermitianEigen e = hermitian_eig(h);
    const double top = e.eigenvalues.empty() ? 0.0 : std::abs(e.eigenvalues.front());
    const double bottom = e.eigenvalues.empty() ? 0.0 : std::abs(e.eigenvalues.back());
    const double scale = std::max(1.0, std::max(top, bottom));

    std::vector<double> vals(e.eigenvalues.size());
    for (std::size_t i = 0; i < e.eigenvalues.size(); ++i) {
        double lam = e.eigenvalues[i];
        if (lam < 0.0) {
            if (lam < -tol * scale)
                throw std::invalid_argument("apply_scalar_fn: input is not PSD within tolerance");
            lam = 0.0;
        }
        const double v = f(lam);
        if (!std::isfinite(v))
            throw std::invalid_argument("apply_scalar_fn: function undefined at eigenvalue " +
                                        std::to_string(lam));
        vals[i] = v;
    }
    return rebuild(e, vals);
}

Matrix abs_op(const Matrix& a) {
    return apply_scalar_fn(abs_squared(a), [](double t) { return std::sqrt(t); });
}

PsdCheck is_psd(const Matrix& h, double tol) {
    HermitianEigen e = hermitian_eig(h);
    PsdCheck c;
    c.lambda_min = e.eigenvalues.back();
    c.op_norm = std::max(std::abs(e.eigenvalues.front()), std::abs(e.eigenvalues.back()));
    c.psd = c.lambda_min >= -tol * std::max(1.0, c.op_norm);
    return c;
}

}  // namespace parlaw
