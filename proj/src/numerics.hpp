#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "errors.hpp"

namespace xprod {

using cplx = std::complex<double>;

// Default relative cutoff for pseudo-inverse rank decisions: singular values
// below cutoff * sigma_max are treated as zero.
inline constexpr double kPinvCutoff = 1e-10;

// Dense complex matrix, row-major storage. Empty (0x0) only as a default
// constructed placeholder; all kernels reject empty input.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}
    CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    // Row-major literal, e.g. CMatrix::from({{1,2},{3,4}}).
    static CMatrix from(std::initializer_list<std::initializer_list<cplx>> rows);
    static CMatrix identity(std::size_t n);
    static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
    static CMatrix diag(std::vector<cplx> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return a_.empty(); }
    bool square() const { return rows_ == cols_ && rows_ > 0; }

    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }
    const std::vector<cplx>& entries() const { return a_; }

    // Writes src into the submatrix with upper-left corner (r0, c0).
    void place(std::size_t r0, std::size_t c0, const CMatrix& src);
    // Reads the rows x cols submatrix at (r0, c0).
    CMatrix slice(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> a_;
};

bool all_finite(const CMatrix& m);

CMatrix adjoint(const CMatrix& m);
CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix add(const CMatrix& a, const CMatrix& b);
CMatrix sub(const CMatrix& a, const CMatrix& b);
CMatrix scale(cplx s, const CMatrix& m);

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return matmul(a, b); }
inline CMatrix operator+(const CMatrix& a, const CMatrix& b) { return add(a, b); }
inline CMatrix operator-(const CMatrix& a, const CMatrix& b) { return sub(a, b); }

double frobenius_norm(const CMatrix& m);
double frobenius_distance(const CMatrix& a, const CMatrix& b);
cplx trace(const CMatrix& m);

// Largest singular value. Relative accuracy <= 1e-10 for dims <= 512.
double spectral_norm(const CMatrix& m);

// Smallest eigenvalue of (M + M*)/2. Requires M square and Hermitian up to
// ||M - M*||_F <= 1e-9 (1 + ||M||_F).
double min_eig_hermitian(const CMatrix& m);

// Hermitian PSD square root. Eigenvalues below -1e-9 (1 + sigma_max) raise
// a not-psd error; small negative eigenvalues are clipped to zero.
CMatrix psd_sqrt(const CMatrix& m);

// Moore-Penrose pseudo-inverse with relative rank cutoff in (0, 1).
CMatrix pinv(const CMatrix& m, double cutoff = kPinvCutoff);

enum class PolarSide { left, right };

// Partial isometry factor of a polar decomposition.
//   right: caller passes P = psd_sqrt(M* M); returns W = M pinv(P) with W P ~ M.
//   left:  caller passes P = psd_sqrt(M M*); returns W = pinv(P) M with P W ~ M.
CMatrix polar_partial_isometry(const CMatrix& m, const CMatrix& p, PolarSide side,
                               double cutoff = kPinvCutoff);

} // namespace xprod
