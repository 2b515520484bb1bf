#pragma once

#include <Eigen/Dense>

#include <complex>

namespace anyonsim {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

/// Largest singular value.
double op_norm(const Matrix& m);

/// ||m^dag m - 1||_op; zero for an exactly unitary matrix.
double unitarity_defect(const Matrix& m);

/// exp(i * t * h) for Hermitian h, through its eigendecomposition.
Matrix expi_hermitian(const Matrix& h, double t = 1.0);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

}  // namespace anyonsim
