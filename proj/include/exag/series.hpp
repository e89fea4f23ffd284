// Truncated power series over an exact coefficient ring. Multiplication,
// inversion, log and exp are exact through the truncation order. Inversion
// requires constant term 1; log requires constant term 1; exp requires
// constant term 0. Coefficient rings: Rational, Scalar, MultiPoly.
#pragma once

#include <stdexcept>
#include <vector>

#include "exag/field.hpp"

namespace exag {

// Context-aware ring operations; "like" supplies the field when the ring
// carries one (prime-field scalars).
template <typename T>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static Rational mul_int(const Rational& x, long m) { return x * Rational(m); }
    static Rational div_int(const Rational& x, long m) {
        if (m == 0) throw std::domain_error("division by zero");
        Rational r = x / Rational(m);
        r.canonicalize();
        return r;
    }
    static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct RingOps<Scalar> {
    static Scalar zero(const Scalar& like) { return Scalar::zero(like.field()); }
    static Scalar one(const Scalar& like) { return Scalar::one(like.field()); }
    static Scalar mul_int(const Scalar& x, long m) {
        return x * Scalar::from_int(x.field(), m);
    }
    static Scalar div_int(const Scalar& x, long m) {
        Scalar d = Scalar::from_int(x.field(), m);
        if (d.is_zero())
            throw std::domain_error("integer not invertible in coefficient field");
        return x / d;
    }
    static bool is_zero(const Scalar& x) { return x.is_zero(); }
};

template <typename T>
class TruncSeries {
public:
    TruncSeries(int order, std::vector<T> coeffs) : n_(order), c_(std::move(coeffs)) {
        if (n_ < 0 || c_.size() != static_cast<std::size_t>(n_) + 1)
            throw std::invalid_argument("series needs order+1 coefficients");
    }

    static TruncSeries constant(int order, const T& c0) {
        std::vector<T> c(static_cast<std::size_t>(order) + 1, RingOps<T>::zero(c0));
        c[0] = c0;
        return TruncSeries(order, std::move(c));
    }

    int order() const { return n_; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    T& operator[](std::size_t i) { return c_[i]; }
    const std::vector<T>& coeffs() const { return c_; }

    bool constant_term_is_one() const {
        return !RingOps<T>::is_zero(c_[0]) &&
               RingOps<T>::is_zero(c_[0] - RingOps<T>::one(c_[0]));
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
        return r;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r = constant(a.n_, RingOps<T>::zero(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (RingOps<T>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!RingOps<T>::is_zero(a.c_[i] - b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    // f * result = 1 through the truncation order; constant term must be 1.
    TruncSeries inverse() const {
        if (!constant_term_is_one())
            throw std::domain_error("series inversion needs constant term 1");
        TruncSeries r = constant(n_, RingOps<T>::one(c_[0]));
        for (int m = 1; m <= n_; ++m) {
            T acc = RingOps<T>::zero(c_[0]);
            for (int i = 1; i <= m; ++i)
                acc = acc + c_[static_cast<std::size_t>(i)] * r.c_[static_cast<std::size_t>(m - i)];
            r.c_[static_cast<std::size_t>(m)] = RingOps<T>::zero(c_[0]) - acc;
        }
        return r;
    }

    // log via (log f)' = f'/f; each coefficient divides by its index, so the
    // coefficient ring must invert the integers 1..order.
    TruncSeries log() const {
        if (!constant_term_is_one())
            throw std::domain_error("series log needs constant term 1");
        TruncSeries g = derivative_shifted() * inverse();
        TruncSeries r = constant(n_, RingOps<T>::zero(c_[0]));
        for (int m = 1; m <= n_; ++m)
            r.c_[static_cast<std::size_t>(m)] =
                RingOps<T>::div_int(g.c_[static_cast<std::size_t>(m - 1)], m);
        return r;
    }

    // exp via e' = g' e; constant term must be 0.
    TruncSeries exp() const {
        if (!RingOps<T>::is_zero(c_[0]))
            throw std::domain_error("series exp needs constant term 0");
        TruncSeries r = constant(n_, RingOps<T>::one(c_[0]));
        for (int m = 1; m <= n_; ++m) {
            T acc = RingOps<T>::zero(c_[0]);
            for (int i = 1; i <= m; ++i)
                acc = acc + RingOps<T>::mul_int(
                                c_[static_cast<std::size_t>(i)] *
                                    r.c_[static_cast<std::size_t>(m - i)],
                                i);
            r.c_[static_cast<std::size_t>(m)] = RingOps<T>::div_int(acc, m);
        }
        return r;
    }

    // Integer power through the truncation order.
    TruncSeries pow(long e) const {
        TruncSeries r = constant(n_, RingOps<T>::one(c_[0]));
        if (e < 0) return inverse().pow(-e);
        TruncSeries base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

private:
    // Coefficients of f' as a series of the same order (top coefficient
    // unused by log).
    TruncSeries derivative_shifted() const {
        TruncSeries r = constant(n_, RingOps<T>::zero(c_[0]));
        for (int m = 0; m + 1 <= n_; ++m)
            r.c_[static_cast<std::size_t>(m)] =
                RingOps<T>::mul_int(c_[static_cast<std::size_t>(m + 1)], m + 1);
        return r;
    }

    void check(const TruncSeries& b) const {
        if (n_ != b.n_) throw std::invalid_argument("series truncation orders differ");
    }

    int n_;
    std::vector<T> c_;
};

} // namespace exag
