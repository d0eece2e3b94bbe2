// Minimal dense complex matrix support: multiplication, traces, and an LU
// determinant with partial pivoting. Sizes here are small (at most 78x78),
// so everything is straightforward row-major storage.

#pragma once

#include <cassert>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qinv {

using cx = std::complex<double>;

class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const cx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    const std::vector<cx>& data() const { return a_; }
    std::vector<cx>& data() { return a_; }

    void set_zero() { std::fill(a_.begin(), a_.end(), cx{0.0, 0.0}); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cx> a_;
};

inline CMatrix matmul(const CMatrix& A, const CMatrix& B) {
    assert(A.cols() == B.rows());
    CMatrix C(A.rows(), B.cols());
    const int n = A.rows(), m = B.cols(), k = A.cols();
    for (int i = 0; i < n; ++i) {
        for (int p = 0; p < k; ++p) {
            const cx aip = A(i, p);
            if (aip == cx{0.0, 0.0}) continue;
            for (int j = 0; j < m; ++j) C(i, j) += aip * B(p, j);
        }
    }
    return C;
}

inline cx trace(const CMatrix& A) {
    assert(A.rows() == A.cols());
    cx t{0.0, 0.0};
    for (int i = 0; i < A.rows(); ++i) t += A(i, i);
    return t;
}

// tr(A*B) without forming the product.
inline cx trace_product(const CMatrix& A, const CMatrix& B) {
    assert(A.cols() == B.rows() && A.rows() == B.cols());
    cx t{0.0, 0.0};
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) t += A(i, j) * B(j, i);
    return t;
}

// Determinant via in-place LU with partial pivoting (complex, row swaps
// tracked for the sign).
inline cx lu_determinant(CMatrix A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("lu_determinant: matrix not square");
    const int n = A.rows();
    cx det{1.0, 0.0};
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(A(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(A(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) return cx{0.0, 0.0};
        if (pivot != col) {
            for (int c = col; c < n; ++c) std::swap(A(pivot, c), A(col, c));
            det = -det;
        }
        det *= A(col, col);
        const cx inv = cx{1.0, 0.0} / A(col, col);
        for (int r = col + 1; r < n; ++r) {
            const cx f = A(r, col) * inv;
            if (f == cx{0.0, 0.0}) continue;
            for (int c = col + 1; c < n; ++c) A(r, c) -= f * A(col, c);
        }
    }
    return det;
}

}  // namespace qinv
