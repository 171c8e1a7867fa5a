#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ghost5/gaussian.hpp"

namespace ghost5 {

/// Dense matrix over Q(i).  Columns index the input monomial basis,
/// rows the output; all entries exact.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            out.entries_[i] = entries_[i] + o.entries_[i];
        return out;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            out.entries_[i] = entries_[i] - o.entries_[i];
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const GaussianRational& x = (*this)(r, k);
                if (x.is_zero()) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) {
                    const GaussianRational& y = o(k, c);
                    if (!y.is_zero()) out(r, c) += x * y;
                }
            }
        return out;
    }

    std::vector<GaussianRational> operator*(const std::vector<GaussianRational>& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("matrix shape mismatch");
        std::vector<GaussianRational> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    GaussianRational trace() const {
        if (rows_ != cols_) throw std::invalid_argument("matrix not square");
        GaussianRational t;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> entries_;
};

/// 2x2 matrix over Q(i); holds the delta matrices and the unit images.
struct Mat2 {
    GaussianRational a, b, c, d;

    GaussianRational det() const { return a * d - b * c; }
};

}  // namespace ghost5
