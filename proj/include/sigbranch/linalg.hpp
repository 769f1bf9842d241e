#pragma once

#include "sigbranch/rational.hpp"

#include <optional>

namespace sigbranch {

// Dense exact-rational matrix. Row-major. Sized on construction.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat scaled(const Rat& c) const;
    QMat transposed() const;

    // this * v
    QVec apply(const QVec& v) const;

private:
    int rows_, cols_;
    std::vector<Rat> data_;
};

// Rank via Gaussian elimination (copy).
int rank(QMat m);

// Solve A x = b; returns nullopt if inconsistent. If underdetermined,
// returns one solution (free variables set to zero).
std::optional<QVec> solve(QMat a, QVec b);

// Basis of the right nullspace {x : A x = 0}.
std::vector<QVec> nullspace(QMat a);

// Basis of the integer kernel {u in Z^m : sum_i u_i rows[i] = 0} where
// rows is an m x d integer matrix given by rows. Computed by integer row
// reduction (Hermite-style) with a transformation record; the result is a
// lattice basis of the full kernel.
std::vector<IVec> integer_kernel(const std::vector<IVec>& rows);

}  // namespace sigbranch
