#include "fluxcoh/linalg.hpp"

#include <stdexcept>

namespace fluxcoh {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMat operator*(const QMat& a, const QMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMat: shape mismatch in product");
    QMat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

QMat operator+(const QMat& a, const QMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("QMat: shape mismatch in sum");
    QMat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

QMat operator-(const QMat& a, const QMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("QMat: shape mismatch in difference");
    QMat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

QMat QMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("QMat: inverse of non-square matrix");
    int n = rows_;
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = at(i, j);
        aug[i][n + i] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!aug[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("QMat: singular matrix");
        std::swap(aug[col], aug[pivot]);
        Rational inv = Rational(1) / aug[col][col];
        for (auto& x : aug[col]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col].is_zero()) continue;
            Rational f = aug[r][col];
            for (int j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    QMat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug[i][n + j];
    return out;
}

std::string QMat::str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
        s += i ? "; " : "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += at(i, j).str();
        }
    }
    return s + "]";
}

int row_reduce(std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    size_t ncols = rows[0].size();
    size_t lead = 0;
    int r = 0;
    for (size_t col = 0; col < ncols && r < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (size_t i = r; i < rows.size(); ++i)
            if (!rows[i][col].is_zero()) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        Rational inv = Rational(1) / rows[r][col];
        for (auto& x : rows[r]) x *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == r || rows[i][col].is_zero()) continue;
            Rational f = rows[i][col];
            for (size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
        lead = col + 1;
    }
    (void)lead;
    return r;
}

int rank(std::vector<std::vector<Rational>> rows) { return row_reduce(rows); }

std::vector<std::vector<Rational>> nullspace(const QMat& m) {
    int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rational>> rows(nr, std::vector<Rational>(nc));
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) rows[i][j] = m.at(i, j);
    int rk = row_reduce(rows);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(nc, false);
    for (int r = 0; r < rk; ++r) {
        for (int c = 0; c < nc; ++c)
            if (!rows[r][c].is_zero()) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                break;
            }
    }
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(nc);
        v[free] = Rational(1);
        for (int r = 0; r < rk; ++r) v[pivot_col[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace fluxcoh
