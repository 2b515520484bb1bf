#include "anyonsim/linalg.hpp"

#include "anyonsim/error.hpp"

namespace anyonsim {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MalformedToken: return "MalformedToken";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::OddCount: return "OddCount";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::WrongSize: return "WrongSize";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NotAMatching: return "NotAMatching";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::InvalidWeave: return "InvalidWeave";
        case ErrorCode::GapClosed: return "GapClosed";
        case ErrorCode::InvalidPath: return "InvalidPath";
        case ErrorCode::NotNormalizable: return "NotNormalizable";
        case ErrorCode::DegenerateFit: return "DegenerateFit";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

double op_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

double unitarity_defect(const Matrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    return op_norm(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols()));
}

Matrix expi_hermitian(const Matrix& h, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const Vector phases = (es.eigenvalues().cast<cplx>() * (kI * t)).array().exp().matrix();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

}  // namespace anyonsim
