// Dense exact linear algebra over a runtime-selected field. Rank over the
// rationals runs fraction-free (Bareiss) on denominator-cleared rows to bound
// coefficient growth; prime fields use plain Gaussian elimination. Kernel and
// solve use reduced row echelon form with exact field division.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exag/field.hpp"

namespace exag {

class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix from_rows(const Field& f,
                            const std::vector<std::vector<Scalar>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows[0].size() : 0;
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const Scalar& s : a_)
            if (!s.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix m(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix m(a.f_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    m.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return m;
    }

    // Horizontal concatenation [A | B].
    static Matrix hconcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat shape mismatch");
        Matrix m(a.f_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
        }
        return m;
    }

    static Matrix block_diag(const Matrix& a, const Matrix& b) {
        Matrix m(a.f_, a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                m.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return m;
    }

    std::size_t rank() const {
        if (rows_ == 0 || cols_ == 0) return 0;
        return f_.is_rational() ? rank_bareiss() : rank_gauss();
    }

    // Columns form an exact basis of { x : M x = 0 }.
    Matrix kernel() const {
        Matrix r = *this;
        std::vector<std::size_t> pivot_col;
        r.rref_inplace(pivot_col);
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivot_col) is_pivot[c] = true;

        std::size_t nfree = cols_ - pivot_col.size();
        Matrix ker(f_, cols_, nfree);
        std::size_t kcol = 0;
        for (std::size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            ker.at(fc, kcol) = Scalar::one(f_);
            for (std::size_t pi = 0; pi < pivot_col.size(); ++pi)
                ker.at(pivot_col[pi], kcol) = -r.at(pi, fc);
            ++kcol;
        }
        return ker;
    }

    // Exact solution of M x = b, or nullopt when inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const {
        if (b.size() != rows_) throw std::invalid_argument("rhs size mismatch");
        Matrix aug(f_, rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        std::vector<std::size_t> pivot_col;
        aug.rref_inplace(pivot_col);
        for (std::size_t pi = 0; pi < pivot_col.size(); ++pi)
            if (pivot_col[pi] == cols_) return std::nullopt;
        std::vector<Scalar> x(cols_, Scalar::zero(f_));
        for (std::size_t pi = 0; pi < pivot_col.size(); ++pi)
            x[pivot_col[pi]] = aug.at(pi, cols_);
        return x;
    }

    Scalar det() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        Matrix m = *this;
        Scalar d = Scalar::one(f_);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t p = c;
            while (p < rows_ && m.at(p, c).is_zero()) ++p;
            if (p == rows_) return Scalar::zero(f_);
            if (p != c) {
                for (std::size_t j = 0; j < cols_; ++j)
                    std::swap(m.at(p, j), m.at(c, j));
                d = -d;
            }
            d *= m.at(c, c);
            Scalar inv = m.at(c, c).inverse();
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (m.at(i, c).is_zero()) continue;
                Scalar factor = m.at(i, c) * inv;
                for (std::size_t j = c; j < cols_; ++j)
                    m.at(i, j) -= factor * m.at(c, j);
            }
        }
        return d;
    }

    // Reduced row echelon form; records pivot columns in order.
    void rref_inplace(std::vector<std::size_t>& pivot_col) {
        pivot_col.clear();
        std::size_t pr = 0;
        for (std::size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
            std::size_t p = pr;
            while (p < rows_ && at(p, pc).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != pr)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(pr, j));
            Scalar inv = at(pr, pc).inverse();
            for (std::size_t j = pc; j < cols_; ++j) at(pr, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == pr || at(i, pc).is_zero()) continue;
                Scalar factor = at(i, pc);
                for (std::size_t j = pc; j < cols_; ++j)
                    at(i, j) -= factor * at(pr, j);
            }
            pivot_col.push_back(pc);
            ++pr;
        }
    }

private:
    std::size_t rank_gauss() const {
        Matrix m = *this;
        std::size_t rank = 0;
        for (std::size_t pc = 0; pc < cols_ && rank < rows_; ++pc) {
            std::size_t p = rank;
            while (p < rows_ && m.at(p, pc).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != rank)
                for (std::size_t j = pc; j < cols_; ++j)
                    std::swap(m.at(p, j), m.at(rank, j));
            Scalar inv = m.at(rank, pc).inverse();
            for (std::size_t i = rank + 1; i < rows_; ++i) {
                if (m.at(i, pc).is_zero()) continue;
                Scalar factor = m.at(i, pc) * inv;
                for (std::size_t j = pc; j < cols_; ++j)
                    m.at(i, j) -= factor * m.at(rank, j);
            }
            ++rank;
        }
        return rank;
    }

    // Fraction-free elimination on denominator-cleared integer rows.
    std::size_t rank_bareiss() const {
        std::vector<std::vector<Int>> m(rows_, std::vector<Int>(cols_));
        for (std::size_t i = 0; i < rows_; ++i) {
            Int l = 1;
            for (std::size_t j = 0; j < cols_; ++j)
                l = lcm(l, at(i, j).rational().get_den());
            for (std::size_t j = 0; j < cols_; ++j) {
                const Rational& q = at(i, j).rational();
                m[i][j] = q.get_num() * (l / q.get_den());
            }
        }
        Int prev = 1;
        std::size_t rank = 0;
        for (std::size_t pc = 0; pc < cols_ && rank < rows_; ++pc) {
            std::size_t p = rank;
            while (p < rows_ && m[p][pc] == 0) ++p;
            if (p == rows_) continue;
            if (p != rank) std::swap(m[p], m[rank]);
            for (std::size_t i = rank + 1; i < rows_; ++i) {
                for (std::size_t j = pc + 1; j < cols_; ++j) {
                    Int t = m[rank][pc] * m[i][j] - m[i][pc] * m[rank][j];
                    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                    m[i][j] = std::move(t);
                }
                m[i][pc] = 0;
            }
            prev = m[rank][pc];
            ++rank;
        }
        return rank;
    }

    Field f_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

} // namespace exag
