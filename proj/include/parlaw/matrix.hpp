#pragma once

#include <complex>
#include <vector>

namespace parlaw {

using Complex = std::complex<double>;

// Scale-free tolerance model used throughout: an identity L = R is accepted
// when ||L - R||_F <= tol * (1 + ||L||_F + ||R||_F), and a PSD check accepts
// lambda_min >= -tol * max(1, ||.||_2).
inline constexpr double kDefaultTol = 1e-10;

// Dense square complex matrix, row-major storage. All entries are IEEE
// doubles; constructors taking user data reject non-finite entries.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int dim);                        // zero matrix
    Matrix(int dim, std::vector<Complex> entries);   // row-major, size dim*dim

    static Matrix identity(int dim);
    static Matrix diag(const std::vector<Complex>& d);
    static Matrix diag(const std::vector<double>& d);

    int dim() const { return dim_; }
    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const std::vector<Complex>& entries() const { return a_; }

    Matrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    bool finite() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(Complex c);

private:
    int dim_ = 0;
    std::vector<Complex> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Complex c, Matrix a);
Matrix operator*(Matrix a, Complex c);
Matrix operator-(Matrix a);

// (X + X*)/2
Matrix real_part(const Matrix& x);

// |A|^2 = A*A. Every identity here is stated in terms of squared absolute
// values, so this needs no eigensolve.
Matrix abs_squared(const Matrix& a);

// Normalized residuals per the tolerance model above.
double identity_residual(const Matrix& lhs, const Matrix& rhs);
double identity_residual(double lhs, double rhs);

// Dense complex vector.
class Vector {
public:
    Vector() = default;
    explicit Vector(int dim);
    explicit Vector(std::vector<Complex> entries);

    int dim() const { return static_cast<int>(v_.size()); }
    Complex& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
    const Complex& operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    const std::vector<Complex>& entries() const { return v_; }

    double norm() const;      // Euclidean
    bool finite() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(Complex c);

private:
    std::vector<Complex> v_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(Complex c, Vector a);

// <x, y> = sum_i x_i * conj(y_i)
Complex inner(const Vector& x, const Vector& y);

// Rank one operator x (x) y: z -> <z, y> x, i.e. entry (i, j) = x_i * conj(y_j).
Matrix rank_one(const Vector& x, const Vector& y);

}  // namespace parlaw
