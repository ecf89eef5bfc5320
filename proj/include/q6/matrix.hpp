#pragma once

#include <initializer_list>
#include <vector>

#include "rational.hpp"

namespace q6 {

/// Dense matrix over an exact field, row-major.
template <Field K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<K>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        d_.reserve(r_ * c_);
        for (auto& row : rows) {
            if (row.size() != c_) throw input_error("ragged matrix initializer");
            for (auto& x : row) d_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n, const K& proto = K{}) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = proto.one_like();
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    K& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(d_.begin() + i * c_, d_.begin() + (i + 1) * c_);
    }
    void set_row(std::size_t i, const std::vector<K>& v) {
        if (v.size() != c_) throw input_error("row size mismatch");
        std::copy(v.begin(), v.end(), d_.begin() + i * c_);
    }
    void append_row(const std::vector<K>& v) {
        if (c_ == 0) c_ = v.size();
        if (v.size() != c_) throw input_error("row size mismatch");
        d_.insert(d_.end(), v.begin(), v.end());
        ++r_;
    }
    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw input_error("matrix product shape mismatch");
        Matrix p(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const K& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.c_; ++j) p(i, j) += aik * b(k, j);
            }
        return p;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw input_error("matrix sum shape mismatch");
        Matrix s = a;
        for (std::size_t i = 0; i < s.d_.size(); ++i) s.d_[i] += b.d_[i];
        return s;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw input_error("matrix difference shape mismatch");
        Matrix s = a;
        for (std::size_t i = 0; i < s.d_.size(); ++i) s.d_[i] -= b.d_[i];
        return s;
    }
    friend Matrix operator*(const K& s, const Matrix& a) {
        Matrix m = a;
        for (auto& x : m.d_) x = s * x;
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }

    bool is_zero() const {
        for (auto& x : d_)
            if (!x.is_zero()) return false;
        return true;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != c_) throw input_error("matrix apply shape mismatch");
        std::vector<K> out(r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    /// Rank by fraction-free (Bareiss) elimination. Division-free until the
    /// guaranteed-exact Bareiss quotients, so rationals never leave Z once
    /// rows are cleared of denominators.
    std::size_t rank() const {
        Matrix m = *this;
        m.clear_denominators();
        std::size_t rk = 0;
        K prev; // unbound zero = "1" sentinel handled below
        bool have_prev = false;
        for (std::size_t col = 0; col < c_ && rk < r_; ++col) {
            std::size_t piv = rk;
            while (piv < r_ && m(piv, col).is_zero()) ++piv;
            if (piv == r_) continue;
            m.swap_rows(rk, piv);
            const K p = m(rk, col);
            for (std::size_t i = rk + 1; i < r_; ++i) {
                for (std::size_t j = col + 1; j < c_; ++j) {
                    K t = m(i, j) * p - m(i, col) * m(rk, j);
                    m(i, j) = have_prev ? t / prev : t;
                }
                m(i, col) = p.zero_like();
            }
            prev = p;
            have_prev = true;
            ++rk;
        }
        return rk;
    }

    /// Determinant (square only), by Bareiss.
    K det() const {
        if (r_ != c_) throw input_error("determinant of non-square matrix");
        if (r_ == 0) throw input_error("determinant of empty matrix");
        if (is_zero()) return K{};
        Matrix m = *this;
        K scale = first_nonzero_proto().one_like();
        m.clear_denominators(&scale);
        K prev;
        bool have_prev = false;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < r_; ++k) {
            std::size_t piv = k;
            while (piv < r_ && m(piv, k).is_zero()) ++piv;
            if (piv == r_) return scale.zero_like();
            if (piv != k) { m.swap_rows(k, piv); sign = -sign; }
            const K p = m(k, k);
            for (std::size_t i = k + 1; i < r_; ++i) {
                for (std::size_t j = k + 1; j < r_; ++j) {
                    K t = m(i, j) * p - m(i, k) * m(k, j);
                    m(i, j) = have_prev ? t / prev : t;
                }
                m(i, k) = p.zero_like();
            }
            prev = p;
            have_prev = true;
        }
        K d = m(r_ - 1, r_ - 1) / scale;
        return sign < 0 ? -d : d;
    }

    /// Reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t lead = 0;
        for (std::size_t col = 0; col < c_ && lead < r_; ++col) {
            std::size_t piv = lead;
            while (piv < r_ && (*this)(piv, col).is_zero()) ++piv;
            if (piv == r_) continue;
            swap_rows(lead, piv);
            K inv = (*this)(lead, col).inv();
            for (std::size_t j = col; j < c_; ++j) (*this)(lead, j) = inv * (*this)(lead, j);
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == lead) continue;
                K f = (*this)(i, col);
                if (f.is_zero()) continue;
                for (std::size_t j = col; j < c_; ++j)
                    (*this)(i, j) -= f * (*this)(lead, j);
            }
            pivots.push_back(col);
            ++lead;
        }
        return pivots;
    }

    /// Basis of the right null space {v : Mv = 0}; empty when rank = cols.
    std::vector<std::vector<K>> kernel_basis() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(c_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::vector<K>> basis;
        K one = first_nonzero_proto().one_like();
        for (std::size_t free = 0; free < c_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(c_);
            v[free] = one;
            for (std::size_t k = 0; k < pivots.size(); ++k)
                v[pivots[k]] = -m(k, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Some entry usable as a field prototype (one() etc.); the additive
    /// identity when the matrix is all zeros.
    K first_nonzero_proto() const {
        for (auto& x : d_)
            if (!x.is_zero()) return x;
        return d_.empty() ? K{} : d_[0];
    }

private:
    // For Rat, scale each row to integer entries (Bareiss stays in Z).
    // For finite fields this is a no-op.
    void clear_denominators(K* scale_out = nullptr) {
        if constexpr (std::is_same_v<K, Rat>) {
            for (std::size_t i = 0; i < r_; ++i) {
                BigInt l = 1;
                for (std::size_t j = 0; j < c_; ++j)
                    l = boost::multiprecision::lcm(l, (*this)(i, j).den());
                if (l == 1) continue;
                Rat f{l};
                for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) *= f;
                if (scale_out) *scale_out *= f;
            }
        }
        (void)scale_out;
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<K> d_;
};

/// Unique solution of Ax = b; empty when the system is inconsistent or
/// underdetermined.
template <Field K>
std::optional<std::vector<K>> solve_unique(const Matrix<K>& a, const std::vector<K>& b) {
    Matrix<K> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt; // inconsistent
    if (pivots.size() != a.cols()) return std::nullopt;                    // underdetermined
    std::vector<K> x(a.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
    return x;
}

} // namespace q6
