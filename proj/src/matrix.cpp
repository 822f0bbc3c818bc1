#include "cedga/matrix.hpp"
#include "cedga/error.hpp"

#include <utility>

namespace cedga {

namespace {

void require_same(const Matrix& a, const Matrix& b) {
    if (a.characteristic() != b.characteristic())
        throw Error(ErrorCode::RingMismatch, "matrices over different fields");
}

constexpr std::size_t kParallelThreshold = 1 << 14;

/// Reduces m to row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(Matrix& m, bool parallel) {
    const PrimeField F(m.characteristic());
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    const bool big = parallel && rows * cols >= kParallelThreshold;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m.at(piv, j), m.at(r, j));
        Fp inv = F.inv(m.at(r, c));
        Fp* pr = m.row(r);
        for (std::size_t j = c; j < cols; ++j)
            pr[j] = F.mul(pr[j], inv);
        const auto lo = static_cast<std::ptrdiff_t>(r + 1);
        const auto hi = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for if (big) schedule(static)
        for (std::ptrdiff_t i = lo; i < hi; ++i) {
            Fp* pi = m.row(static_cast<std::size_t>(i));
            Fp f = pi[c];
            if (f == 0)
                continue;
            for (std::size_t j = c; j < cols; ++j)
                pi[j] = F.sub(pi[j], F.mul(f, pr[j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Matrix Matrix::identity(std::uint32_t p, std::size_t n) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1 % p;
    return m;
}

bool Matrix::is_zero() const noexcept {
    for (Fp v : data_)
        if (v != 0)
            return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator-() const {
    Matrix out(*this);
    const PrimeField F(p_);
    for (Fp& v : out.data_)
        v = F.neg(v);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same(a, b);
    if (a.cols() != b.rows())
        throw Error(ErrorCode::InternalConsistency, "matrix shapes do not compose");
    const PrimeField F(a.characteristic());
    Matrix out(a.characteristic(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Fp v = a.at(i, k);
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = F.add(out.at(i, j), F.mul(v, b.at(k, j)));
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::InternalConsistency, "matrix shapes differ");
    const PrimeField F(a.characteristic());
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = F.add(a.at(i, j), b.at(i, j));
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    return echelon(w, true).size();
}

std::size_t rank_serial(const Matrix& m) {
    Matrix w = m;
    return echelon(w, false).size();
}

Matrix nullspace(const Matrix& m) {
    Matrix w = m;
    auto pivots = echelon(w, true);
    const PrimeField F(m.characteristic());
    const std::size_t cols = m.cols();
    for (std::size_t k = pivots.size(); k-- > 0;) {
        std::size_t c = pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            Fp f = w.at(i, c);
            if (f == 0)
                continue;
            for (std::size_t j = c; j < cols; ++j)
                w.at(i, j) = F.sub(w.at(i, j), F.mul(f, w.at(k, j)));
        }
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    Matrix basis(m.characteristic(), cols, cols - pivots.size());
    std::size_t col = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        basis.at(f, col) = 1 % m.characteristic();
        for (std::size_t k = 0; k < pivots.size(); ++k)
            basis.at(pivots[k], col) = F.neg(w.at(k, f));
        ++col;
    }
    return basis;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    require_same(a, b);
    if (a.rows() != b.rows())
        throw Error(ErrorCode::InternalConsistency, "hconcat needs equal row counts");
    Matrix out(a.characteristic(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

} // namespace cedga
