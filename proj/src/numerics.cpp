#include "numerics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace xprod {

namespace {

using EMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EMap = Eigen::Map<EMatrix>;
using ECMap = Eigen::Map<const EMatrix>;

ECMap emap(const CMatrix& m) {
    return ECMap(m.data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
}

EMap emap(CMatrix& m) {
    return EMap(m.data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
}

void require_nonempty(const CMatrix& m, const char* who) {
    if (m.empty())
        fail(ErrorCode::invalid_input, std::string(who) + ": empty matrix");
}

void require_finite(const CMatrix& m, const char* who) {
    require_nonempty(m, who);
    if (!all_finite(m))
        fail(ErrorCode::invalid_input, std::string(who) + ": non-finite entries");
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorCode::invalid_input, std::string(who) + ": shape mismatch");
}

// Hermitian eigendecomposition of the symmetrized input.
Eigen::SelfAdjointEigenSolver<EMatrix> herm_eig(const CMatrix& m, const char* who) {
    require_finite(m, who);
    if (!m.square())
        fail(ErrorCode::invalid_input, std::string(who) + ": matrix not square");
    const double skew = frobenius_distance(m, adjoint(m));
    if (skew > 1e-9 * (1.0 + frobenius_norm(m)))
        fail(ErrorCode::invalid_input, std::string(who) + ": matrix not Hermitian");
    EMatrix h = 0.5 * (emap(m) + emap(m).adjoint());
    Eigen::SelfAdjointEigenSolver<EMatrix> es(h);
    if (es.info() != Eigen::Success)
        fail(ErrorCode::invalid_input, std::string(who) + ": eigensolver failed");
    return es;
}

} // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        fail(ErrorCode::invalid_input, "CMatrix: entry count does not match shape");
}

CMatrix CMatrix::from(std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    CMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            fail(ErrorCode::invalid_input, "CMatrix: ragged rows");
        std::size_t j = 0;
        for (const cplx& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diag(std::vector<cplx> entries) {
    CMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

void CMatrix::place(std::size_t r0, std::size_t c0, const CMatrix& src) {
    if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
        fail(ErrorCode::invalid_input, "CMatrix::place: block out of range");
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c) (*this)(r0 + r, c0 + c) = src(r, c);
}

CMatrix CMatrix::slice(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_)
        fail(ErrorCode::invalid_input, "CMatrix::slice: block out of range");
    CMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
}

bool all_finite(const CMatrix& m) {
    for (const cplx& v : m.entries())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

CMatrix adjoint(const CMatrix& m) {
    require_nonempty(m, "adjoint");
    CMatrix out(m.cols(), m.rows());
    emap(out) = emap(m).adjoint();
    return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    require_nonempty(a, "matmul");
    require_nonempty(b, "matmul");
    if (a.cols() != b.rows())
        fail(ErrorCode::invalid_input, "matmul: inner dimensions disagree");
    CMatrix out(a.rows(), b.cols());
    emap(out).noalias() = emap(a) * emap(b);
    return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    require_nonempty(a, "kron");
    require_nonempty(b, "kron");
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

CMatrix add(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "add");
    CMatrix out(a.rows(), a.cols());
    emap(out) = emap(a) + emap(b);
    return out;
}

CMatrix sub(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "sub");
    CMatrix out(a.rows(), a.cols());
    emap(out) = emap(a) - emap(b);
    return out;
}

CMatrix scale(cplx s, const CMatrix& m) {
    CMatrix out(m.rows(), m.cols());
    emap(out) = s * emap(m);
    return out;
}

double frobenius_norm(const CMatrix& m) {
    if (m.empty()) return 0.0;
    return emap(m).norm();
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "frobenius_distance");
    return (emap(a) - emap(b)).norm();
}

cplx trace(const CMatrix& m) {
    if (!m.square())
        fail(ErrorCode::invalid_input, "trace: matrix not square");
    return emap(m).trace();
}

double spectral_norm(const CMatrix& m) {
    require_finite(m, "spectral_norm");
    // Jacobi SVD for small problems (highest relative accuracy), divide and
    // conquer beyond that.
    if (std::min(m.rows(), m.cols()) <= 32) {
        Eigen::JacobiSVD<EMatrix> svd(emap(m));
        return svd.singularValues()(0);
    }
    Eigen::BDCSVD<EMatrix> svd(emap(m));
    return svd.singularValues()(0);
}

double min_eig_hermitian(const CMatrix& m) {
    auto es = herm_eig(m, "min_eig_hermitian");
    return es.eigenvalues()(0);
}

CMatrix psd_sqrt(const CMatrix& m) {
    auto es = herm_eig(m, "psd_sqrt");
    const auto& ev = es.eigenvalues();
    const double top = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    const double floor = -1e-9 * (1.0 + top);
    if (ev(0) < floor) {
        std::ostringstream os;
        os << "psd_sqrt: matrix not positive semidefinite (eigenvalue " << ev(0) << ")";
        fail(ErrorCode::not_psd, os.str());
    }
    Eigen::VectorXd roots(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) roots(i) = std::sqrt(std::max(ev(i), 0.0));
    CMatrix out(m.rows(), m.cols());
    emap(out) = es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
    return out;
}

CMatrix pinv(const CMatrix& m, double cutoff) {
    require_finite(m, "pinv");
    if (!(cutoff > 0.0 && cutoff < 1.0))
        fail(ErrorCode::invalid_input, "pinv: cutoff must lie in (0,1)");
    Eigen::JacobiSVD<EMatrix> svd(emap(m), Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double top = sv.size() ? sv(0) : 0.0;
    Eigen::VectorXd inv(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        inv(i) = (top > 0.0 && sv(i) >= cutoff * top) ? 1.0 / sv(i) : 0.0;
    CMatrix out(m.cols(), m.rows());
    emap(out) = svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
    return out;
}

CMatrix polar_partial_isometry(const CMatrix& m, const CMatrix& p, PolarSide side, double cutoff) {
    require_finite(m, "polar_partial_isometry");
    require_finite(p, "polar_partial_isometry");
    if (!p.square())
        fail(ErrorCode::invalid_input, "polar_partial_isometry: P not square");
    if (side == PolarSide::right) {
        if (p.rows() != m.cols())
            fail(ErrorCode::invalid_input, "polar_partial_isometry: P must match cols(M)");
        return matmul(m, pinv(p, cutoff));
    }
    if (p.rows() != m.rows())
        fail(ErrorCode::invalid_input, "polar_partial_isometry: P must match rows(M)");
    return matmul(pinv(p, cutoff), m);
}

} // namespace xprod
