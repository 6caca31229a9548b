#include "orbicat/matrix.hpp"

#include <sstream>

namespace orbicat {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(int(rows.size())), cols_(0) {
    for (const auto& r : rows) cols_ = std::max<int>(cols_, int(r.size()));
    a_.assign(std::size_t(rows_) * cols_, Scalar());
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (const auto& s : r) at(i, j++) = s;
        ++i;
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
    Matrix m(int(d.size()), int(d.size()));
    for (int i = 0; i < int(d.size()); ++i) m.at(i, i) = d[i];
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
    Matrix m(int(v.size()), 1);
    for (int i = 0; i < int(v.size()); ++i) m.at(i, 0) = v[i];
    return m;
}

Matrix Matrix::row(const std::vector<Scalar>& v) {
    Matrix m(1, int(v.size()));
    for (int i = 0; i < int(v.size()); ++i) m.at(0, i) = v[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::conj() const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].conj();
    return m;
}

Matrix Matrix::conj_transpose() const { return conj().transpose(); }

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix addition " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                                std::to_string(o.cols_));
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix subtraction");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

Matrix operator*(const Scalar& s, Matrix m) {
    for (auto& x : m.a_) x *= s;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (int(v.size()) != cols_) throw DimensionMismatch("matrix apply");
    std::vector<Scalar> out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

Scalar Matrix::trace() const {
    Scalar t;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
}

Matrix Matrix::kron(const Matrix& o) const {
    Matrix k(rows_ * o.rows_, cols_ * o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            if (at(r, c).is_zero()) continue;
            for (int r2 = 0; r2 < o.rows_; ++r2)
                for (int c2 = 0; c2 < o.cols_; ++c2)
                    k.at(r * o.rows_ + r2, c * o.cols_ + c2) = at(r, c) * o.at(r2, c2);
        }
    return k;
}

std::pair<Matrix, std::vector<int>> Matrix::rref() const {
    Matrix m = *this;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int r = row; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < cols_; ++c) std::swap(m.at(p, c), m.at(row, c));
        Scalar inv = m.at(row, col).inverse();
        for (int c = col; c < cols_; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (int c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

int Matrix::rank() const { return int(rref().second.size()); }

bool Matrix::try_inverse(Matrix& out) const {
    if (rows_ != cols_) return false;
    // Gauss-Jordan on [this | I].
    Matrix aug(rows_, 2 * cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = Scalar::one();
    }
    auto [red, pivots] = aug.rref();
    if (int(pivots.size()) < rows_ || pivots[rows_ - 1] >= cols_) return false;
    out = Matrix(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r, c) = red.at(r, cols_ + c);
    return true;
}

Matrix Matrix::inverse() const {
    Matrix out;
    if (!try_inverse(out)) throw SingularMatrix("matrix is not invertible");
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (int c = 0; c < cols_; ++c) os << (c ? "," : "") << at(r, c).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<std::vector<Scalar>> nullspace_basis(const Matrix& m) {
    auto [red, pivots] = m.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols());
        v[free] = Scalar::one();
        for (int r = 0; r < int(pivots.size()); ++r) v[pivots[r]] = -red.at(r, free);
        // scale so the first nonzero entry is 1
        for (auto& x : v)
            if (!x.is_zero()) {
                Scalar inv = x.inverse();
                for (auto& y : v) y *= inv;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

Splitting split_idempotent(const Matrix& e) {
    if (e.rows() != e.cols()) throw NotIdempotent("not square");
    if (e * e != e) throw NotIdempotent("e*e != e for e = " + e.str());
    auto [red, pivots] = e.rref();
    int r = int(pivots.size());
    Matrix Y(r, e.cols());
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < e.cols(); ++c) Y.at(i, c) = red.at(i, c);
    Matrix Z(e.rows(), r);
    for (int i = 0; i < r; ++i)
        for (int row = 0; row < e.rows(); ++row) Z.at(row, i) = e.at(row, pivots[i]);
    return {std::move(Y), std::move(Z)};
}

Matrix vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    int cols = blocks.front().cols();
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw DimensionMismatch("vstack");
        rows += b.rows();
    }
    Matrix out(rows, cols);
    int r0 = 0;
    for (const auto& b : blocks) {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < cols; ++c) out.at(r0 + r, c) = b.at(r, c);
        r0 += b.rows();
    }
    return out;
}

std::vector<Scalar> vec_rm(const Matrix& m) {
    std::vector<Scalar> v;
    v.reserve(std::size_t(m.rows()) * m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    return v;
}

Matrix unvec_rm(const std::vector<Scalar>& v, int rows, int cols) {
    if (int(v.size()) != rows * cols) throw DimensionMismatch("unvec");
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = v[std::size_t(r) * cols + c];
    return m;
}

} // namespace orbicat
