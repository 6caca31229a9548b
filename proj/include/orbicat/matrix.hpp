#pragma once

// Dense exact matrices over the session field, with the rank factorization
// used to split idempotents and a deterministic nullspace routine.
//
// Determinism convention: Gaussian elimination always picks the leftmost
// pivot column and the topmost nonzero row; nullspace vectors are scaled so
// that their first nonzero entry is 1.

#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "orbicat/scalar.hpp"

namespace orbicat {

class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix diagonal(const std::vector<Scalar>& d);
    static Matrix column(const std::vector<Scalar>& v);
    static Matrix row(const std::vector<Scalar>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    Matrix transpose() const;
    Matrix conj() const;           // entrywise conjugation
    Matrix conj_transpose() const; // dagger of the matrix itself

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const; // matrix * column vector

    Scalar trace() const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_idempotent() const { return rows_ == cols_ && *this * *this == *this; }

    Matrix kron(const Matrix& o) const; // plain Kronecker product, row-major pairing

    // Reduced row echelon form; returns the pivot column of each nonzero row.
    std::pair<Matrix, std::vector<int>> rref() const;
    int rank() const;
    Matrix inverse() const;               // throws SingularMatrix
    bool try_inverse(Matrix& out) const;  // false when singular

    std::string str() const; // row-major nested [..] listing, for witnesses

  private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

// Basis of ker(M): linearly independent columns annihilated by M, spanning
// the kernel. Deterministic (see file-top convention).
std::vector<std::vector<Scalar>> nullspace_basis(const Matrix& m);

// Splits an exact idempotent e = Z*Y with Y*Z = identity of size rank(e).
// Throws NotIdempotent when e*e != e.
struct Splitting {
    Matrix Y; // rank x n, full row rank
    Matrix Z; // n x rank
};
Splitting split_idempotent(const Matrix& e);

// Stacks matrices vertically; all blocks must agree on cols.
Matrix vstack(const std::vector<Matrix>& blocks);

// Row-major vec: entry (r,c) of X lands at index r*cols + c.
std::vector<Scalar> vec_rm(const Matrix& m);
Matrix unvec_rm(const std::vector<Scalar>& v, int rows, int cols);

} // namespace orbicat
