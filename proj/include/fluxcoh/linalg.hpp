#pragma once

#include "fluxcoh/rational.hpp"

#include <vector>

namespace fluxcoh {

/// Dense matrix over Q.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[i * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[i * cols_ + j]; }

    QMat transpose() const;
    QMat inverse() const;  // throws if singular

    friend QMat operator*(const QMat& a, const QMat& b);
    friend QMat operator+(const QMat& a, const QMat& b);
    friend QMat operator-(const QMat& a, const QMat& b);

    friend bool operator==(const QMat& a, const QMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator<(const QMat& a, const QMat& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.a_ < b.a_;
    }

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// Exact row reduction; returns the rank and leaves `rows` in echelon form.
int row_reduce(std::vector<std::vector<Rational>>& rows);

int rank(std::vector<std::vector<Rational>> rows);

/// Basis of the right nullspace of `m` (as coordinate vectors of length cols).
std::vector<std::vector<Rational>> nullspace(const QMat& m);

}  // namespace fluxcoh
